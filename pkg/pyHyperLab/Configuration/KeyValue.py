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
Configuration reader for flat ``key = value`` files.

.. code-block:: ini

   # supercritical main experiment
   experiment = run
   n          = 200000
   k          = 3
   lambda     = 1.3
   runs       = 1000
   seed       = 20240229

Blank lines and lines starting with ``#`` are ignored. Keys and values are stripped of surrounding whitespace. Lines
without ``=`` and repeated keys are rejected with the offending line number. All values are returned as strings.
"""
from pathlib                 import Path
from sys                     import version_info
from typing                  import Dict, Iterator as typing_Iterator, List, Optional as Nullable, Tuple

from pyTooling.Decorators    import export
from pyTooling.Configuration import ConfigurationException, KeyT, NodeT, ValueT
from pyTooling.Configuration import Node as Abstract_Node
from pyTooling.Configuration import Dictionary as Abstract_Dict
from pyTooling.Configuration import Configuration as Abstract_Configuration


@export
def parseKeyValues(text: str, source: str = "<string>") -> Tuple[Dict[str, str], Dict[str, int]]:
	"""
	Parses ``key = value`` lines.

	:param text:   Text to parse.
	:param source: Name of the source used in error messages.
	:returns:      Tuple of a key-value dictionary and a dictionary mapping keys to their line numbers.
	:raises ConfigurationException: If a line has no ``=``, an empty key or repeats a key.
	"""
	values: Dict[str, str] = {}
	lineNumbers: Dict[str, int] = {}

	for lineNumber, line in enumerate(text.splitlines(), start=1):
		stripped = line.strip()
		if stripped == "" or stripped.startswith("#"):
			continue

		key, separator, value = stripped.partition("=")
		key = key.strip()
		if separator == "" or key == "":
			ex = ConfigurationException(f"{source}:{lineNumber}: Expected 'key = value', but got '{stripped}'.")
			if version_info >= (3, 11):  # pragma: no cover
				ex.add_note("Comments must start at the beginning of a line with '#'.")
			raise ex
		elif key in values:
			raise ConfigurationException(f"{source}:{lineNumber}: Key '{key}' was already defined in line {lineNumbers[key]}.")

		values[key] = value.strip()
		lineNumbers[key] = lineNumber

	return values, lineNumbers


@export
class Node(Abstract_Node):
	_key:         Nullable[KeyT]
	_values:      Dict[str, str]
	_lineNumbers: Dict[str, int]

	def __init__(self, root: "Configuration", parent: NodeT, key: Nullable[KeyT], values: Dict[str, str], lineNumbers: Dict[str, int]) -> None:
		Abstract_Node.__init__(self, root, parent)

		self._key = key
		self._values = values
		self._lineNumbers = lineNumbers

	def __len__(self) -> int:
		"""
		Returns the number of key-value pairs.

		:returns: Number of key-value pairs.
		"""
		return len(self._values)

	def __getitem__(self, key: KeyT) -> ValueT:
		try:
			return self._values[str(key)]
		except KeyError as ex:
			raise ConfigurationException(f"Key '{key}' not found in configuration.") from ex

	@property
	def Key(self) -> Nullable[KeyT]:
		"""Returns the key of this node; ``None`` for the flat root of a file."""
		return self._key

	@Key.setter
	def Key(self, value: KeyT) -> None:
		raise NotImplementedError()

	def QueryPath(self, query: str) -> ValueT:
		return self[query]


@export
class Dictionary(Node, Abstract_Dict):
	"""The flat dictionary of a ``key = value`` file."""

	def __init__(self, root: "Configuration", parent: NodeT, key: Nullable[KeyT], values: Dict[str, str], lineNumbers: Dict[str, int]) -> None:
		Node.__init__(self, root, parent, key, values, lineNumbers)

	def __contains__(self, key: KeyT) -> bool:
		return str(key) in self._values

	def __iter__(self) -> typing_Iterator[ValueT]:
		return iter(list(self._values.values()))

	def Keys(self) -> List[str]:
		"""Returns all keys in file order."""
		return list(self._values.keys())

	def LineNumber(self, key: str) -> int:
		"""Returns the line number in which ``key`` is defined."""
		return self._lineNumbers[key]


@export
class Configuration(Dictionary, Abstract_Configuration):
	"""A configuration read from a ``key = value`` file."""

	def __init__(self, configFile: Path) -> None:
		"""
		Initializes a configuration instance that reads a ``key = value`` file as input.

		:param configFile: Configuration file to read and parse.
		:raises ConfigurationException: If the file doesn't exist or is malformed.
		"""
		configFile = Path(configFile)
		if not configFile.exists():
			raise ConfigurationException(f"Configuration file '{configFile}' not found.") from FileNotFoundError(configFile)

		with configFile.open("r", encoding="utf-8") as file:
			values, lineNumbers = parseKeyValues(file.read(), str(configFile))

		Dictionary.__init__(self, self, self, None, values, lineNumbers)
		Abstract_Configuration.__init__(self, configFile)
