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
Random variates for the implicit exploration: binomial edge counts for huge trial counts and uniform draws of
distinct vertex subsets from the unexplored suffix of a permutation.
"""
from itertools             import combinations
from math                  import log1p
from typing                import ClassVar, List, Tuple

from numpy                 import ndarray, exp as np_exp, flatnonzero, float64, int64, zeros
from numpy.random          import Generator
from pyTooling.Decorators  import export, readonly
from pyTooling.MetaClasses import ExtendedType


INVERSION_MEAN_LIMIT = 30.0  #: Binomials with a larger mean are delegated to :meth:`numpy.random.Generator.binomial`.


@export
def binomialVariates(generator: Generator, trials: ndarray, p: float) -> ndarray:
	"""
	Draws one :math:`\\operatorname{Binomial}(N_i, p)` variate per entry of ``trials``.

	Small means are drawn by sequential inversion, with the probability mass function evaluated in log-space starting
	at :math:`(1-p)^N = \\exp(N \\log(1-p))`. This stays exact for trial counts up to :math:`2^{53}` combined with
	probabilities down to the smallest normal float. All inversions run vectorized over the pending entries.

	Exactly ``len(trials)`` uniforms are consumed, followed by one :meth:`~numpy.random.Generator.binomial` draw per
	entry with a large mean.

	:param generator: Random generator.
	:param trials:    Array of non-negative trial counts.
	:param p:         Success probability in ``[0, 1]``.
	:returns:         Array of variates with the same length.
	"""
	count = len(trials)
	result = zeros(count, dtype=int64)
	if p == 0.0 or count == 0:
		return result
	elif p == 1.0:
		result[:] = trials
		return result

	uniforms = generator.random(count)
	total = trials.astype(float64)
	pmf = np_exp(total * log1p(-p))
	ratio = p / (1.0 - p)

	delegated = (total * p > INVERSION_MEAN_LIMIT) | (pmf == 0.0)
	cdf = pmf.copy()

	pending = flatnonzero(~delegated & (uniforms > cdf))
	while pending.size > 0:
		values = result[pending]
		pmf[pending] *= ratio * (total[pending] - values) / (values + 1)
		result[pending] = values + 1
		cdf[pending] += pmf[pending]

		running = (uniforms[pending] > cdf[pending]) & (result[pending] < trials[pending]) & (pmf[pending] > 0.0)
		pending = pending[running]

	delegatedIndices = flatnonzero(delegated)
	if delegatedIndices.size > 0:
		result[delegatedIndices] = generator.binomial(trials[delegatedIndices], p)

	return result


@export
class UniformStream(metaclass=ExtendedType, slots=True):
	"""
	Buffered uniform random numbers in :math:`[0, 1)`.

	Numbers are fetched from the generator in blocks, so drawing a single number doesn't cost a call into numpy.
	"""

	BLOCK_SIZE: ClassVar[int] = 4096

	_generator: Generator
	_buffer:    List[float]
	_index:     int
	_consumed:  int

	def __init__(self, generator: Generator) -> None:
		self._generator = generator
		self._buffer = []
		self._index = 0
		self._consumed = 0

	@readonly
	def Consumed(self) -> int:
		"""Number of uniforms handed out so far."""
		return self._consumed

	def Next(self) -> float:
		"""Returns the next uniform number."""
		if self._index == len(self._buffer):
			self._buffer = self._generator.random(self.BLOCK_SIZE).tolist()
			self._index = 0

		value = self._buffer[self._index]
		self._index += 1
		self._consumed += 1
		return value

	def Index(self, low: int, count: int) -> int:
		"""Returns a uniform integer in ``[low, low + count)``."""
		return low + int(self.Next() * count)


@export
def drawSubsets(stream: UniformStream, low: int, count: int, size: int, number: int, total: int) -> List[Tuple[int, ...]]:
	"""
	Draws ``number`` distinct ``size``-subsets of the positions ``low..low+count-1`` uniformly without replacement.

	Positions inside a subset are drawn with rejection of repeated positions, repeated subsets are rejected and
	redrawn. If more than half of all ``total`` subsets are requested, all subsets are enumerated and a partial
	Fisher-Yates shuffle selects the result instead.

	:param stream: Uniform number source.
	:param low:    First eligible position.
	:param count:  Number of eligible positions.
	:param size:   Subset size.
	:param number: Number of subsets to draw (``<= total``).
	:param total:  :math:`\\binom{count}{size}`.
	:returns:      List of ascending position tuples.
	"""
	if 2 * number > total:
		pool = list(combinations(range(low, low + count), size))
		for i in range(number):
			j = stream.Index(i, total - i)
			pool[i], pool[j] = pool[j], pool[i]
		return pool[:number]

	subsets = []
	seen = set()
	while len(subsets) < number:
		positions = set()
		while len(positions) < size:
			positions.add(stream.Index(low, count))

		subset = tuple(sorted(positions))
		if subset not in seen:
			seen.add(subset)
			subsets.append(subset)

	return subsets
