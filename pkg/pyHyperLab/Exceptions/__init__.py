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
Exceptions raised by pyHyperLab.

All exceptions derive from :exc:`HyperLabException`, which itself is derived from pyTooling's
:exc:`~pyTooling.Exceptions.ExceptionBase`. Exceptions signaling a parameter outside of its domain are additionally
derived from Python's matching built-in exception, so callers can catch e.g. :exc:`ValueError`.
"""
from types                 import TracebackType
from typing                import Any, Optional as Nullable

from pyTooling.Decorators  import export, readonly
from pyTooling.Exceptions  import ExceptionBase


@export
class HyperLabException(ExceptionBase):
	"""Base exception for all exceptions raised by pyHyperLab."""

	def with_traceback(self, tb: Nullable[TracebackType]) -> "HyperLabException":
		"""
		Sets ``tb`` as the exception's traceback.

		:param tb: New traceback or ``None``.
		:returns:  The exception itself, like :meth:`BaseException.with_traceback`.
		"""
		super().with_traceback(tb)
		return self


@export
class DomainException(HyperLabException, ValueError):
	"""
	The exception is raised, if a parameter is outside of its mathematical domain.

	The message names the offending parameter and the accepted range.
	"""

	_parameter: str

	def __init__(self, parameter: str, message: str) -> None:
		"""
		Initializes a domain exception.

		:param parameter: Name of the offending parameter.
		:param message:   The exception message.
		"""
		super().__init__(f"Parameter '{parameter}': {message}")
		self._parameter = parameter

	@readonly
	def Parameter(self) -> str:
		"""Returns the name of the offending parameter."""
		return self._parameter


@export
class BinomialOverflowException(HyperLabException, OverflowError):
	"""The exception is raised, if an exact binomial coefficient exceeds the signed 64-bit integer range."""


@export
class MalformedHypergraphException(HyperLabException):
	"""The exception is raised, if an edge list doesn't describe a valid k-uniform hypergraph."""


@export
class HypergraphFormatException(HyperLabException):
	"""The exception is raised, if a hypergraph file can't be parsed."""

	_lineNumber: int

	def __init__(self, lineNumber: int, message: str) -> None:
		super().__init__(f"Line {lineNumber}: {message}")
		self._lineNumber = lineNumber

	@readonly
	def LineNumber(self) -> int:
		"""Returns the 1-based line number of the malformed line."""
		return self._lineNumber


@export
class MalformedWalkException(HyperLabException):
	"""The exception is raised, if a sequence isn't a valid exploration walk."""


@export
class TraceMismatchException(HyperLabException):
	"""The exception is raised, if an exploration trace doesn't belong to the given model parameters."""


@export
class UnsortedSampleException(HyperLabException, ValueError):
	"""The exception is raised, if a sample is expected to be sorted ascending, but isn't."""


@export
class DegenerateSampleException(HyperLabException, ValueError):
	"""The exception is raised, if a sample is too small for a statistical procedure."""


@export
class ExcursionHorizonException(HyperLabException):
	"""
	The exception is raised, if an excursion, which could rank among the longest requested excursions, is still open
	at the simulation horizon.
	"""


@export
class OracleMismatchException(HyperLabException):
	"""
	The exception is raised, if the exploration process and the union-find oracle disagree on a hypergraph.

	The offending seed and hypergraph are kept for later dumping.
	"""

	_seed:       int
	_hypergraph: Any

	def __init__(self, seed: int, hypergraph: Any, message: Nullable[str] = None) -> None:
		super().__init__(message if message is not None else f"Component sizes differ for seed {seed}.")
		self._seed = seed
		self._hypergraph = hypergraph

	@readonly
	def Seed(self) -> int:
		return self._seed

	@readonly
	def Hypergraph(self) -> Any:
		return self._hypergraph
