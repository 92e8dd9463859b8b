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
Excursions of Brownian motion with parabolic drift :math:`W^\\alpha(s) = W(s) + \\alpha s - s^2/2`.

An excursion is a maximal interval on which :math:`W^\\alpha` stays above its previous minimum. The ordered lengths of
the longest excursions are the limit of the rescaled largest component sizes inside the critical window.
"""
from math                  import sqrt
from sys                   import version_info
from typing                import Any, Dict, Optional as Nullable, Sequence, Tuple

from numpy                 import ndarray, arange, concatenate, cumsum, diff, flatnonzero, float64, minimum, sort
from pyTooling.Decorators  import export, readonly
from pyTooling.MetaClasses import ExtendedType

from pyHyperLab.Common     import createGenerator
from pyHyperLab.Exceptions import DomainException, ExcursionHorizonException


DEFAULT_GRID_STEP = 1e-3  #: Euler step width.


@export
def defaultHorizon(alpha: float) -> float:
	"""
	Returns the default simulation horizon :math:`\\max(15, 6 + 3\\alpha)`.

	Beyond :math:`s = \\alpha` the drift is restoring, so long excursions after the horizon are negligible.
	"""
	return max(15.0, 6.0 + 3.0 * alpha)


@export
class ExcursionSample(metaclass=ExtendedType, slots=True):
	"""The ``r`` longest excursion lengths of one simulated path, sorted descending."""

	_alpha:          float
	_orderedLengths: Tuple[float, ...]
	_gridStep:       float
	_horizon:        float

	def __init__(self, alpha: float, orderedLengths: Sequence[float], gridStep: float, horizon: float) -> None:
		self._alpha = alpha
		self._orderedLengths = tuple(float(length) for length in orderedLengths)
		self._gridStep = gridStep
		self._horizon = horizon

	@readonly
	def Alpha(self) -> float:
		return self._alpha

	@readonly
	def OrderedLengths(self) -> Tuple[float, ...]:
		return self._orderedLengths

	@readonly
	def GridStep(self) -> float:
		return self._gridStep

	@readonly
	def Horizon(self) -> float:
		return self._horizon

	def ToDict(self) -> Dict[str, Any]:
		return {
			"alpha":           self._alpha,
			"ordered_lengths": list(self._orderedLengths),
			"grid_step":       self._gridStep,
			"horizon":         self._horizon,
		}


@export
def simulatePath(alpha: float, gridStep: float, horizon: float, seed: int) -> ndarray:
	"""
	Simulates :math:`W^\\alpha` on the grid :math:`s_j = j h` by the Euler scheme
	:math:`W^\\alpha(s_j) = W^\\alpha(s_{j-1}) + \\alpha h - s_{j-1} h + \\sqrt{h} Z_j`.

	:param alpha:    Drift parameter.
	:param gridStep: Step width ``h``.
	:param horizon:  Largest simulated time.
	:param seed:     Unsigned 64-bit seed.
	:returns:        Array of ``round(horizon / h) + 1`` path values starting with 0.
	"""
	steps = int(round(horizon / gridStep))
	generator = createGenerator(seed)
	left = arange(steps, dtype=float64) * gridStep

	increments = (alpha - left) * gridStep + sqrt(gridStep) * generator.standard_normal(steps)
	return concatenate(([0.0], cumsum(increments)))


@export
def splitExcursions(path: ndarray) -> Tuple[ndarray, int, int]:
	"""
	Splits a path at its strict new minima.

	:param path: Path values on a grid.
	:returns:    Tuple of closed excursion lengths in grid steps (each ``>= 2``), the number of single-step renewals
	             and the number of steps after the last new minimum.
	"""
	runningMinimum = minimum.accumulate(path)
	records = flatnonzero(path[1:] < runningMinimum[:-1]) + 1
	gaps = diff(concatenate(([0], records)))

	tail = len(path) - 1 - (int(records[-1]) if len(records) > 0 else 0)
	return gaps[gaps >= 2], int((gaps == 1).sum()), tail


@export
def simulateExcursions(
	alpha: float,
	gridStep: float = DEFAULT_GRID_STEP,
	horizon: Nullable[float] = None,
	r: int = 1,
	seed: int = 0
) -> ExcursionSample:
	"""
	Simulates one path of :math:`W^\\alpha` and returns its ``r`` longest excursions.

	An excursion still open at the horizon is dropped, unless it could rank among the ``r`` longest ones.

	:param alpha:    Drift parameter.
	:param gridStep: Euler step width (``> 0``).
	:param horizon:  Simulation horizon; defaults to :func:`defaultHorizon`.
	:param r:        Number of excursions (``>= 1``).
	:param seed:     Unsigned 64-bit seed.
	:returns:        The ordered excursion lengths.
	:raises ExcursionHorizonException: If an open excursion could rank among the ``r`` longest ones, or if fewer than
	                                   ``r`` excursions closed before the horizon.
	"""
	if not gridStep > 0.0:
		raise DomainException("grid_step", f"{gridStep} is not positive.")
	elif r < 1:
		raise DomainException("r", f"{r} is smaller than 1.")

	if horizon is None:
		horizon = defaultHorizon(alpha)
	elif not horizon > gridStep:
		raise DomainException("horizon", f"{horizon} isn't larger than the grid step {gridStep}.")

	closed, _, tail = splitExcursions(simulatePath(alpha, gridStep, horizon, seed))
	longest = sort(closed)[::-1][:r] * gridStep

	if len(longest) < r:
		ex = ExcursionHorizonException(f"Only {len(longest)} of {r} excursions closed before horizon {horizon}.")
		if version_info >= (3, 11):  # pragma: no cover
			ex.add_note(f"alpha={alpha}, seed={seed}")
		raise ex
	elif tail >= 2 and tail * gridStep >= longest[-1]:
		ex = ExcursionHorizonException(f"Excursion of length >= {tail * gridStep} is still open at horizon {horizon}.")
		if version_info >= (3, 11):  # pragma: no cover
			ex.add_note(f"alpha={alpha}, seed={seed}; increase the horizon.")
		raise ex

	return ExcursionSample(alpha, longest.tolist(), gridStep, horizon)
