# ==================================================================================================================== #
#               _   _                       _          _                                                               #
#  _ __  _   _ | | | |_   _ _ __   ___ _ __| |    __ _| |__                                                            #
# | '_ \| | | || |_| | | | | '_ \ / _ \ '__| |   / _` | '_ \                                                           #
# | |_) | |_| ||  _  | |_| | |_) |  __/ |  | |__| (_| | |_) |                                                          #
# | .__/ \__, ||_| |_|\__, | .__/ \___|_|  |_____\__,_|_.__/                                                           #
# |_|    |___/        |___/|_|                                                                                         #
# ==================================================================================================================== #
# Authors:                                                                                                             #
#   Patrick Lehmann                                                                                                    #
#                                                                                                                      #
# License:                                                                                                             #
# ==================================================================================================================== #
# Copyright 2024 Patrick Lehmann - Bötzingen, Germany                                                                  #
#                                                                                                                      #
# Licensed under the Apache License, Version 2.0 (the "License");                                                      #
# you may not use this file except in compliance with the License.                                                     #
# You may obtain a copy of the License at                                                                              #
#                                                                                                                      #
#   http://www.apache.org/licenses/LICENSE-2.0                                                                         #
#                                                                                                                      #
# Unless required by applicable law or agreed to in writing, software                                                  #
# distributed under the License is distributed on an "AS IS" BASIS,                                                    #
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.                                             #
# See the License for the specific language governing permissions and                                                  #
# limitations under the License.                                                                                       #
#                                                                                                                      #
# SPDX-License-Identifier: Apache-2.0                                                                                  #
# ==================================================================================================================== #
#
"""
Experiment configuration.

A configuration is resolved in three layers: built-in defaults, values from an optional ``key = value`` file
(see :mod:`pyHyperLab.Configuration.KeyValue`) and command-line overrides, where later layers win.
"""
from math                    import isfinite
from pathlib                 import Path
from sys                     import version_info
from typing                  import Any, Callable, ClassVar, Dict, Mapping, Optional as Nullable, Tuple

from pyTooling.Decorators    import export, readonly
from pyTooling.MetaClasses   import ExtendedType
from pyTooling.Configuration import ConfigurationException

from pyHyperLab.Common                   import SEED_LIMIT
from pyHyperLab.Exceptions               import DomainException
from pyHyperLab.Theory                   import ModelParams
from pyHyperLab.Configuration.KeyValue   import Configuration as KeyValueConfiguration


EXPERIMENTS = ("theory", "run", "critical", "oracle-check", "trace", "diagnostics")  #: Names of all experiments.


def _toInteger(value: str) -> int:
	return int(value.strip(), 0) if value.strip().lower().startswith("0x") else int(value.strip())


def _toFloat(value: str) -> float:
	result = float(value)
	if not isfinite(result):
		raise ValueError(f"'{value}' is not finite")
	return result


def _toBoolean(value: str) -> bool:
	normalized = value.strip().lower()
	if normalized in ("1", "true", "yes", "on"):
		return True
	elif normalized in ("0", "false", "no", "off"):
		return False

	raise ValueError(f"'{value}' is not a boolean")


def _toOptionalFloat(value: str) -> Nullable[float]:
	return None if value.strip().lower() in ("", "none", "auto") else _toFloat(value)


def _toList(convert: Callable[[str], Any]) -> Callable[[str], Tuple[Any, ...]]:
	def converter(value: str) -> Tuple[Any, ...]:
		items = [item for item in value.split(",") if item.strip() != ""]
		if len(items) == 0:
			raise ValueError("empty list")
		return tuple(convert(item) for item in items)

	return converter


@export
class ExperimentConfig(metaclass=ExtendedType, slots=True):
	"""
	A resolved and validated experiment configuration.

	``k`` and ``lambda`` are stored as tuples; only the ``theory`` experiment accepts more than one value.
	"""

	DEFAULTS: ClassVar[Dict[str, Any]] = {
		"experiment":         None,
		"n":                  10000,
		"k":                  (3,),
		"lambda":             (1.5,),
		"alpha":              0.0,
		"runs":               100,
		"seed":               0,
		"workers":            1,
		"out":                ".",
		"r":                  2,
		"grid_step":          1e-3,
		"horizon":            None,
		"significance":       0.01,
		"compare_k2":         False,
		"variance_tolerance": 0.15,
		"unseen_tolerance":   0.01,
	}  #: Default values of all recognized keys.

	CONVERTERS: ClassVar[Dict[str, Callable[[str], Any]]] = {
		"experiment":         lambda value: value.strip(),
		"n":                  _toInteger,
		"k":                  _toList(_toInteger),
		"lambda":             _toList(_toFloat),
		"alpha":              _toFloat,
		"runs":               _toInteger,
		"seed":               _toInteger,
		"workers":            _toInteger,
		"out":                lambda value: value.strip(),
		"r":                  _toInteger,
		"grid_step":          _toFloat,
		"horizon":            _toOptionalFloat,
		"significance":       _toFloat,
		"compare_k2":         _toBoolean,
		"variance_tolerance": _toFloat,
		"unseen_tolerance":   _toFloat,
	}  #: Conversion of textual values per key.

	_values:     Dict[str, Any]
	_configFile: Nullable[Path]

	def __init__(self, values: Mapping[str, Any], configFile: Nullable[Path] = None) -> None:
		"""
		Initializes and validates an experiment configuration.

		:param values:     Values for all recognized keys.
		:param configFile: Optional file the values were read from.
		:raises ConfigurationException: If the experiment name is unknown or a key is missing.
		:raises DomainException:        If a value is outside of its domain.
		"""
		missing = [key for key in self.DEFAULTS if key not in values]
		if len(missing) > 0:
			raise ConfigurationException(f"Missing configuration key(s): {', '.join(missing)}.")

		self._values = dict(values)
		self._configFile = configFile
		self._Validate()

	@classmethod
	def Resolve(cls, overrides: Mapping[str, Any], configFile: Nullable[Path] = None) -> "ExperimentConfig":
		"""
		Resolves defaults, then values from ``configFile``, then ``overrides``.

		Overrides with value ``None`` are skipped. String overrides are converted like file values.

		:param overrides:  Values given on the command line.
		:param configFile: Optional ``key = value`` file.
		:returns:          The validated configuration.
		:raises ConfigurationException: If the file is malformed, contains unknown keys or unconvertible values.
		"""
		values = dict(cls.DEFAULTS)

		if configFile is not None:
			config = KeyValueConfiguration(configFile)
			for key in config.Keys():
				location = f"{configFile}:{config.LineNumber(key)}"
				values[key] = cls._Convert(key, config[key], location)

		for key, value in overrides.items():
			if value is None:
				continue
			elif isinstance(value, str):
				values[key] = cls._Convert(key, value, "command line")
			elif key in ("k", "lambda") and not isinstance(value, tuple):
				values[key] = (value,)
			else:
				values[key] = value

		return cls(values, configFile)

	@classmethod
	def _Convert(cls, key: str, value: str, location: str) -> Any:
		try:
			converter = cls.CONVERTERS[key]
		except KeyError:
			ex = ConfigurationException(f"{location}: Unknown configuration key '{key}'.")
			if version_info >= (3, 11):  # pragma: no cover
				ex.add_note(f"Known keys: {', '.join(cls.DEFAULTS)}")
			raise ex

		try:
			return converter(value)
		except ValueError as ex:
			raise ConfigurationException(f"{location}: Value '{value}' of key '{key}' is invalid ({ex}).") from ex

	def _Validate(self) -> None:
		values = self._values
		experiment = values["experiment"]
		if experiment not in EXPERIMENTS:
			raise ConfigurationException(f"Unknown experiment '{experiment}'. Choose one of: {', '.join(EXPERIMENTS)}.")

		for key in ("k", "lambda"):
			if experiment != "theory" and len(values[key]) != 1:
				raise DomainException(key, "A list of values is only supported by experiment 'theory'.")

		for key, minimum in (("n", 2), ("runs", 1), ("workers", 1), ("r", 1)):
			value = values[key]
			if isinstance(value, bool) or not isinstance(value, int):
				raise ConfigurationException(f"Value of key '{key}' is not of type 'int'.")
			elif value < minimum:
				raise DomainException(key, f"{value} is smaller than {minimum}.")

		for k in values["k"]:
			if k < 2:
				raise DomainException("k", f"{k} is smaller than 2.")
			elif values["n"] < k:
				raise DomainException("n", f"{values['n']} is smaller than k={k}.")

		for lambda_ in values["lambda"]:
			if not (isfinite(lambda_) and lambda_ >= 0.0):
				raise DomainException("lambda", f"{lambda_} is not a finite, non-negative number.")

		seed = values["seed"]
		if isinstance(seed, bool) or not isinstance(seed, int):
			raise ConfigurationException("Value of key 'seed' is not of type 'int'.")
		elif not (0 <= seed < SEED_LIMIT):
			raise DomainException("seed", f"{seed} is not an unsigned 64-bit integer.")

		if not values["grid_step"] > 0.0:
			raise DomainException("grid_step", f"{values['grid_step']} is not positive.")
		elif values["horizon"] is not None and not values["horizon"] > 0.0:
			raise DomainException("horizon", f"{values['horizon']} is not positive.")
		elif not (0.0 < values["significance"] < 1.0):
			raise DomainException("significance", f"{values['significance']} is outside of (0, 1).")
		elif not values["variance_tolerance"] > 0.0:
			raise DomainException("variance_tolerance", f"{values['variance_tolerance']} is not positive.")
		elif not values["unseen_tolerance"] > 0.0:
			raise DomainException("unseen_tolerance", f"{values['unseen_tolerance']} is not positive.")

	@readonly
	def Experiment(self) -> str:
		return self._values["experiment"]

	@readonly
	def N(self) -> int:
		return self._values["n"]

	@readonly
	def K(self) -> int:
		"""First (usually the only) edge arity."""
		return self._values["k"][0]

	@readonly
	def Ks(self) -> Tuple[int, ...]:
		return self._values["k"]

	@readonly
	def Lambda(self) -> float:
		"""First (usually the only) branching intensity."""
		return self._values["lambda"][0]

	@readonly
	def Lambdas(self) -> Tuple[float, ...]:
		return self._values["lambda"]

	@readonly
	def Alpha(self) -> float:
		return self._values["alpha"]

	@readonly
	def Runs(self) -> int:
		return self._values["runs"]

	@readonly
	def Seed(self) -> int:
		return self._values["seed"]

	@readonly
	def Workers(self) -> int:
		return self._values["workers"]

	@readonly
	def Out(self) -> Path:
		"""Output directory."""
		return Path(self._values["out"])

	@readonly
	def R(self) -> int:
		return self._values["r"]

	@readonly
	def GridStep(self) -> float:
		return self._values["grid_step"]

	@readonly
	def Horizon(self) -> Nullable[float]:
		return self._values["horizon"]

	@readonly
	def Significance(self) -> float:
		return self._values["significance"]

	@readonly
	def CompareK2(self) -> bool:
		return self._values["compare_k2"]

	@readonly
	def VarianceTolerance(self) -> float:
		return self._values["variance_tolerance"]

	@readonly
	def UnseenTolerance(self) -> float:
		"""Accepted deviation of the unseen count from its trajectory, as fraction of ``n``."""
		return self._values["unseen_tolerance"]

	@readonly
	def ConfigFile(self) -> Nullable[Path]:
		return self._configFile

	def Params(self) -> ModelParams:
		"""
		Returns the model parameters of the first ``(n, k, lambda)`` combination.

		For experiment ``critical``, :math:`\\lambda` is derived from ``alpha``.
		"""
		if self.Experiment == "critical":
			return ModelParams.Critical(self.N, self.K, self.Alpha)

		return ModelParams(self.N, self.K, self.Lambda)

	def AsDict(self) -> Dict[str, Any]:
		"""
		Returns the resolved configuration for embedding into reports.

		``workers`` is omitted, because results don't depend on it.
		"""
		result = {}
		for key, value in self._values.items():
			if key == "workers":
				continue
			elif key in ("k", "lambda"):
				value = value[0] if len(value) == 1 else list(value)
			result[key] = value

		return result
