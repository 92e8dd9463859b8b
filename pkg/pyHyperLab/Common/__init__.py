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
Common package information, exact binomial arithmetic and random stream handling.

All random numbers in pyHyperLab are drawn from :class:`numpy.random.Generator` instances built on the counter-based
:class:`~numpy.random.Philox` bit generator. Independent streams for individual runs are derived from a master seed by
:func:`splitSeed`, so results don't depend on scheduling or on the number of worker processes.
"""
__author__ =        "Patrick Lehmann"
__email__ =         "Paebbels@gmail.com"
__copyright__ =     "2024, Patrick Lehmann"
__license__ =       "Apache License, Version 2.0"
__version__ =       "1.0.0"
__keywords__ =      ["random hypergraph", "giant component", "exploration process", "random walk", "branching process",
					  "martingale", "central limit theorem", "brownian excursion", "union-find", "monte carlo",
					  "kolmogorov-smirnov", "simulation"]
__issue_tracker__ = "https://GitHub.com/pyTooling/pyHyperLab/issues"

from functools              import lru_cache
from math                   import comb
from sys                    import version_info

from numpy                  import int64 as np_int64, uint64 as np_uint64, ndarray, zeros as np_zeros, array as np_array
from numpy.random           import Generator, Philox, SeedSequence
from pyTooling.Decorators   import export

from pyHyperLab.Exceptions  import BinomialOverflowException, DomainException


INT64_MAX = 2**63 - 1   #: Largest count representable as a signed 64-bit integer.
SEED_LIMIT = 2**64      #: Seeds are unsigned 64-bit integers.


@export
def binomial(m: int, r: int) -> int:
	"""
	Returns the exact binomial coefficient :math:`\\binom{m}{r}`.

	Coefficients with ``m < 0``, ``r < 0`` or ``r > m`` are zero.

	:param m: Upper index.
	:param r: Lower index.
	:returns: The binomial coefficient as a Python integer.
	:raises BinomialOverflowException: If the coefficient exceeds the signed 64-bit integer range.
	"""
	if m < 0 or r < 0 or r > m:
		return 0

	value = comb(m, r)
	if value > INT64_MAX:
		ex = BinomialOverflowException(f"Binomial coefficient C({m}, {r}) exceeds the 64-bit integer range.")
		if version_info >= (3, 11):  # pragma: no cover
			ex.add_note(f"C({m}, {r}) has {value.bit_length()} bits.")
		raise ex

	return value


@export
@lru_cache(maxsize=16)
def binomialCounts(mMax: int, r: int) -> ndarray:
	"""
	Returns the exact binomial coefficients :math:`\\binom{m}{r}` for all ``m`` in ``0..mMax``.

	The coefficients are computed by the recurrence :math:`\\binom{m}{r} = \\binom{m-1}{r} \\cdot m / (m-r)` in exact
	integer arithmetic. The returned array is read-only and shared between callers (cached).

	:param mMax: Largest upper index.
	:param r:    Lower index.
	:returns:    Read-only array of ``mMax + 1`` signed 64-bit integers.
	:raises BinomialOverflowException: If a coefficient exceeds the signed 64-bit integer range.
	"""
	counts = np_zeros(max(mMax + 1, 0), dtype=np_int64)
	if r >= 0 and mMax >= r:
		values = [0] * (mMax + 1)
		value = 1
		for m in range(r, mMax + 1):
			if m > r:
				value = value * m // (m - r)
			if value > INT64_MAX:
				ex = BinomialOverflowException(f"Binomial coefficient C({m}, {r}) exceeds the 64-bit integer range.")
				if version_info >= (3, 11):  # pragma: no cover
					ex.add_note(f"Requested coefficients up to C({mMax}, {r}).")
				raise ex
			values[m] = value

		counts = np_array(values, dtype=np_int64)

	counts.setflags(write=False)
	return counts


@export
def checkSeed(seed: int) -> int:
	"""
	Checks if ``seed`` is a valid unsigned 64-bit seed.

	:param seed: Seed to check.
	:returns:    The unmodified seed.
	:raises TypeError:       If parameter 'seed' is not an integer.
	:raises DomainException: If parameter 'seed' is outside of ``[0, 2**64)``.
	"""
	if isinstance(seed, bool) or not isinstance(seed, int):
		ex = TypeError("Parameter 'seed' is not of type 'int'.")
		if version_info >= (3, 11):  # pragma: no cover
			ex.add_note(f"Got type '{seed.__class__.__name__}'.")
		raise ex
	elif not (0 <= seed < SEED_LIMIT):
		raise DomainException("seed", f"{seed} is not an unsigned 64-bit integer.")

	return seed


@export
def createGenerator(seed: int) -> Generator:
	"""
	Creates a random generator on a :class:`~numpy.random.Philox` bit generator for a 64-bit seed.

	:param seed: Unsigned 64-bit seed.
	:returns:    A new, independent random generator.
	"""
	return Generator(Philox(checkSeed(seed)))


@export
def splitSeed(masterSeed: int, index: int, stream: int = 0) -> int:
	"""
	Derives the seed of run ``index`` within ``stream`` from a master seed.

	The derived seed is the first 64-bit word generated by :class:`~numpy.random.SeedSequence` with entropy
	``masterSeed`` and spawn key ``(stream, index)``. Different streams separate different purposes of random numbers
	within one experiment (explorations, excursion simulations, explicit hypergraph samples).

	:param masterSeed: Unsigned 64-bit master seed of an experiment.
	:param index:      Run index (``>= 0``).
	:param stream:     Stream number (``>= 0``).
	:returns:          Unsigned 64-bit seed of the run.
	"""
	checkSeed(masterSeed)
	if index < 0:
		raise DomainException("index", f"Run index {index} is negative.")
	elif stream < 0:
		raise DomainException("stream", f"Stream number {stream} is negative.")

	state = SeedSequence(masterSeed, spawn_key=(stream, index)).generate_state(1, dtype=np_uint64)
	return int(state[0])
