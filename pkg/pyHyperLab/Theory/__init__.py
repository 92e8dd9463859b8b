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
Deterministic quantities of the random k-uniform hypergraph :math:`H_k(n,p)`.

The model is parameterized by the number of vertices ``n``, the edge arity ``k`` and the branching intensity
:math:`\\lambda`, where the edge probability is :math:`p = \\lambda (k-2)! n^{-(k-1)}`. This module computes the dual
parameter :math:`\\lambda^*`, the survival probabilities :math:`\\rho_\\lambda` and :math:`\\rho_{k,\\lambda}`, the
variance constant :math:`\\sigma^2_{k,\\lambda}`, the limiting trajectory function :math:`g_{k,\\lambda}` and the
finite-``n`` trajectories :math:`\\beta_t`, :math:`x_t` and :math:`u_t`.

Scalar functions accept floats. Functions of a time or a fraction also accept :class:`numpy.ndarray` arguments and
then return arrays.
"""
from math                  import exp, expm1, factorial, floor, isfinite, log, log1p
from sys                   import version_info
from typing                import Any, Dict, Optional as Nullable, Tuple, Union

from numpy                 import ndarray, asarray, arange, concatenate, cumprod, errstate, finfo, float64
from numpy                 import any as np_any, exp as np_exp, expm1 as np_expm1, isfinite as np_isfinite, log1p as np_log1p
from scipy.optimize        import bisect
from pyTooling.Decorators  import export, readonly
from pyTooling.MetaClasses import ExtendedType

from pyHyperLab.Common     import binomialCounts
from pyHyperLab.Exceptions import DomainException


RealOrArray = Union[float, ndarray]

LAMBDA_MAX =       100.0  #: Largest accepted branching intensity for the fixed-point solvers.
SERIES_THRESHOLD = 1e-6   #: Below this distance to criticality, survival probabilities are taken from their series.

_SOLVER_XTOL = 1e-300
_SOLVER_RTOL = 4 * finfo(float).eps
_SOLVER_MAXITER = 2000


def _checkInteger(name: str, value: Any, minimum: int) -> int:
	if isinstance(value, bool) or not isinstance(value, int):
		ex = TypeError(f"Parameter '{name}' is not of type 'int'.")
		if version_info >= (3, 11):  # pragma: no cover
			ex.add_note(f"Got type '{value.__class__.__name__}'.")
		raise ex
	elif value < minimum:
		raise DomainException(name, f"{value} is smaller than {minimum}.")

	return value


def _checkReal(name: str, value: Any) -> float:
	if isinstance(value, bool) or not isinstance(value, (int, float)):
		ex = TypeError(f"Parameter '{name}' is not of type 'float'.")
		if version_info >= (3, 11):  # pragma: no cover
			ex.add_note(f"Got type '{value.__class__.__name__}'.")
		raise ex
	elif not isfinite(value):
		raise DomainException(name, f"{value} is not finite.")

	return float(value)


def _checkLambda(lambda_: Any) -> float:
	lambda_ = _checkReal("lambda", lambda_)
	if lambda_ < 1.0:
		raise DomainException("lambda", f"{lambda_} is smaller than 1 (subcritical intensities have no survival).")
	elif lambda_ > LAMBDA_MAX:
		raise DomainException("lambda", f"{lambda_} is larger than {LAMBDA_MAX}.")

	return lambda_


def _phi(y: float) -> float:
	"""Returns :math:`y - \\log(1+y)` without cancellation for small ``|y|``."""
	if abs(y) < 1e-2:
		# alternating series sum_{j>=2} (-1)^j y^j / j
		result = 0.0
		power = y
		for j in range(2, 14):
			power *= -y
			result -= power / j
		return result

	return y - log1p(y)


def _dualPair(lambda_: float) -> Tuple[float, float, float]:
	"""Returns :math:`(\\lambda^*, 1 - \\lambda^*, \\rho_\\lambda)` for a checked ``lambda_ >= 1``."""
	if lambda_ == 1.0:
		return 1.0, 0.0, 0.0

	epsilon = lambda_ - 1.0
	if epsilon < SERIES_THRESHOLD:
		rho = rhoPoissonSeries(epsilon)
		return lambda_ * (1.0 - rho), lambda_ * rho - epsilon, rho

	# x e^-x = lambda e^-lambda  <=>  phi(x - 1) = phi(lambda - 1)  with  phi(y) = y - log(1+y)
	target = _phi(epsilon)
	if lambda_ < 2.0:
		# bisection on the gap delta = 1 - lambda*, which keeps full relative precision near lambda = 1
		gap = bisect(lambda d: _phi(-d) - target, 0.0, 0.75, xtol=_SOLVER_XTOL, rtol=_SOLVER_RTOL, maxiter=_SOLVER_MAXITER)
		return 1.0 - gap, gap, (epsilon + gap) / lambda_

	lambdaStar = bisect(lambda x: x - 1.0 - log(x) - target, 1e-300, 1.0, xtol=_SOLVER_XTOL, rtol=_SOLVER_RTOL, maxiter=_SOLVER_MAXITER)
	return lambdaStar, 1.0 - lambdaStar, 1.0 - lambdaStar / lambda_


def _giantPair(lambda_: float, k: int) -> Tuple[float, float, float, float, float]:
	"""Returns ``(lambda*, 1 - lambda*, rho_lambda, rho_k, 1 - rho_k)`` for a checked ``lambda_``."""
	lambdaStar, gap, rhoLambda = _dualPair(lambda_)
	if rhoLambda < 0.5:
		logComplement = log1p(-rhoLambda)
	else:
		# rho_lambda rounds to 1 above lambda ~ 37; 1 - rho_lambda = lambda* / lambda
		logComplement = log(lambdaStar) - log(lambda_)

	if k == 2:
		return lambdaStar, gap, rhoLambda, rhoLambda, exp(logComplement)

	exponent = logComplement / (k - 1)
	return lambdaStar, gap, rhoLambda, -expm1(exponent), exp(exponent)


@export
class ModelParams(metaclass=ExtendedType, slots=True):
	"""
	Parameters ``(n, k, lambda)`` of the random k-uniform hypergraph :math:`H_k(n,p)`.

	The edge probability is derived as :math:`p = \\lambda (k-2)! n^{-(k-1)}`. The intensity may be any finite
	non-negative number as long as ``p <= 1``; the theory functions impose their own, stricter ranges.
	"""

	_n:      int
	_k:      int
	_lambda: float
	_p:      float

	def __init__(self, n: int, k: int, lambda_: float, edgeProbability: Nullable[float] = None) -> None:
		"""
		Initializes model parameters.

		:param n:               Number of vertices (``n >= k``).
		:param k:               Edge arity (``k >= 2``).
		:param lambda_:         Branching intensity (``lambda >= 0``).
		:param edgeProbability: Optional edge probability to use verbatim instead of deriving it from ``lambda_``.
		:raises TypeError:       If a parameter has the wrong type.
		:raises DomainException: If a parameter is outside of its domain or the derived ``p`` exceeds 1.
		"""
		self._k = _checkInteger("k", k, 2)
		self._n = _checkInteger("n", n, k)
		self._lambda = _checkReal("lambda", lambda_)
		if self._lambda < 0.0:
			raise DomainException("lambda", f"{lambda_} is negative.")

		if edgeProbability is None:
			self._p = self._lambda * factorial(k - 2) / n ** (k - 1)
		else:
			self._p = _checkReal("p", edgeProbability)

		if not (0.0 <= self._p <= 1.0):
			ex = DomainException("lambda", f"Edge probability {self._p} derived from lambda={lambda_} exceeds 1.")
			if version_info >= (3, 11):  # pragma: no cover
				ex.add_note(f"n={n}, k={k}")
			raise ex

	@classmethod
	def FromEdgeProbability(cls, n: int, k: int, p: float) -> "ModelParams":
		"""
		Creates model parameters from an edge probability ``p`` in ``[0, 1]``.

		:param n: Number of vertices.
		:param k: Edge arity.
		:param p: Edge probability.
		:returns: Model parameters, which keep ``p`` unchanged.
		"""
		p = _checkReal("p", p)
		if not (0.0 <= p <= 1.0):
			raise DomainException("p", f"{p} is not a probability.")

		_checkInteger("k", k, 2)
		_checkInteger("n", n, k)
		return cls(n, k, p * n ** (k - 1) / factorial(k - 2), edgeProbability=p)

	@classmethod
	def Critical(cls, n: int, k: int, alpha: float) -> "ModelParams":
		"""
		Creates model parameters inside the critical window: :math:`\\lambda = 1 + (k-1)^{2/3} \\alpha n^{-1/3}`.

		:param n:     Number of vertices.
		:param k:     Edge arity.
		:param alpha: Position inside the critical window.
		:returns:     Model parameters.
		"""
		alpha = _checkReal("alpha", alpha)
		_checkInteger("k", k, 2)
		_checkInteger("n", n, k)
		return cls(n, k, 1.0 + (k - 1) ** (2 / 3) * alpha * n ** (-1 / 3))

	@readonly
	def N(self) -> int:
		"""Number of vertices."""
		return self._n

	@readonly
	def K(self) -> int:
		"""Edge arity."""
		return self._k

	@readonly
	def Lambda(self) -> float:
		"""Branching intensity :math:`\\lambda`."""
		return self._lambda

	@readonly
	def P(self) -> float:
		"""Edge probability."""
		return self._p

	@readonly
	def Epsilon(self) -> float:
		"""Distance to criticality :math:`\\varepsilon = \\lambda - 1`."""
		return self._lambda - 1.0

	@readonly
	def Meaningfulness(self) -> float:
		""":math:`(\\lambda - 1)^3 n`; the supercritical limit law needs this to be large."""
		return (self._lambda - 1.0) ** 3 * self._n

	def AsDict(self) -> Dict[str, Any]:
		return {"n": self._n, "k": self._k, "lambda": self._lambda, "p": self._p}

	def __eq__(self, other: Any) -> bool:
		if isinstance(other, ModelParams):
			return (self._n, self._k, self._lambda, self._p) == (other._n, other._k, other._lambda, other._p)

		return NotImplemented

	def __hash__(self) -> int:
		return hash((self._n, self._k, self._lambda, self._p))

	def __repr__(self) -> str:
		return f"ModelParams(n={self._n}, k={self._k}, lambda={self._lambda!r}, p={self._p!r})"

	def __str__(self) -> str:
		return f"n={self._n}, k={self._k}, lambda={self._lambda}"


@export
def rhoPoissonSeries(epsilon: float) -> float:
	"""
	Near-critical expansion :math:`\\rho_{1+\\varepsilon} = 2\\varepsilon - \\frac{8}{3}\\varepsilon^2 + \\frac{28}{9}\\varepsilon^3 + O(\\varepsilon^4)`.

	:param epsilon: Distance to criticality.
	:returns:       Approximate Poisson survival probability.
	"""
	return epsilon * (2.0 + epsilon * (-8.0 / 3.0 + epsilon * 28.0 / 9.0))


@export
def sigmaSquaredSeries(k: int, epsilon: float) -> float:
	"""
	Two-term expansion of :math:`\\sigma^2_{k,1+\\varepsilon}/n`: :math:`2/\\varepsilon + 2(k-4)/(k-1)`.

	:param k:       Edge arity.
	:param epsilon: Distance to criticality (``> 0``).
	:returns:       Approximate variance constant per vertex.
	"""
	_checkInteger("k", k, 2)
	if not epsilon > 0.0:
		raise DomainException("epsilon", f"{epsilon} is not positive.")

	return 2.0 / epsilon + 2.0 * (k - 4) / (k - 1)


@export
def dualLambda(lambda_: float) -> float:
	"""
	Returns the dual parameter :math:`\\lambda^* \\le 1` with :math:`\\lambda^* e^{-\\lambda^*} = \\lambda e^{-\\lambda}`.

	The root is bracketed by bisection. For :math:`1 < \\lambda < 2` the bisection runs on the gap
	:math:`1 - \\lambda^*`, above on :math:`\\lambda^*` itself. Within :data:`SERIES_THRESHOLD` of criticality the
	value follows from :func:`rhoPoissonSeries` and :math:`\\lambda^* = \\lambda(1 - \\rho_\\lambda)`.

	:param lambda_: Branching intensity in ``[1, 100]``.
	:returns:       The dual parameter; exactly ``1.0`` for ``lambda_ == 1``.
	:raises DomainException: If ``lambda_`` is below 1, above 100 or not finite.
	"""
	return _dualPair(_checkLambda(lambda_))[0]


@export
def rhoPoisson(lambda_: float) -> float:
	"""
	Returns the survival probability :math:`\\rho_\\lambda` of a Poisson(:math:`\\lambda`) Galton-Watson process.

	:math:`\\rho_\\lambda` is the largest root of :math:`1 - \\rho = e^{-\\lambda\\rho}` and satisfies
	:math:`\\rho_\\lambda = 1 - \\lambda^*/\\lambda`.

	:param lambda_: Branching intensity in ``[1, 100]``.
	:returns:       Survival probability in ``[0, 1)``.
	:raises DomainException: If ``lambda_`` is below 1, above 100 or not finite.
	"""
	return _dualPair(_checkLambda(lambda_))[2]


@export
def rhoK(lambda_: float, k: int) -> float:
	"""
	Returns :math:`\\rho_{k,\\lambda} = 1 - (1 - \\rho_\\lambda)^{1/(k-1)}`, the limiting fraction of vertices in the
	giant component.

	:param lambda_: Branching intensity in ``[1, 100]``.
	:param k:       Edge arity (``k >= 2``).
	:returns:       Survival probability in ``[0, 1)``.
	"""
	_checkInteger("k", k, 2)
	return _giantPair(_checkLambda(lambda_), k)[3]


@export
def sigmaSquared(params: ModelParams) -> float:
	"""
	Returns the variance :math:`\\sigma^2_{k,\\lambda}` of the giant component's size, including the factor ``n``.

	.. math::

	   \\sigma^2_{k,\\lambda} = \\frac{\\lambda(1-\\rho)^2 - \\lambda^*(1-\\rho) + \\rho(1-\\rho)}{(1-\\lambda^*)^2} n
	   \\quad\\text{with}\\quad \\rho = \\rho_{k,\\lambda}

	The numerator is evaluated as :math:`(1-\\rho)(\\lambda(\\rho_\\lambda - \\rho) + \\rho)`, which is the same
	expression after substituting :math:`\\lambda^* = \\lambda(1 - \\rho_\\lambda)`. For large :math:`\\lambda`, the
	difference :math:`\\rho_\\lambda - \\rho` is taken from the complements :math:`1 - \\rho` and :math:`\\lambda^*/\\lambda`.

	:param params: Model parameters with :math:`\\lambda > 1`.
	:returns:      Strictly positive variance.
	:raises DomainException: If :math:`\\lambda \\le 1`.
	"""
	lambda_ = _checkLambda(params.Lambda)
	if lambda_ == 1.0:
		raise DomainException("lambda", "The variance constant is undefined at lambda = 1.")

	lambdaStar, gap, rhoLambda, rho, complement = _giantPair(lambda_, params.K)
	if params.K == 2:
		difference = 0.0
	elif rhoLambda < 0.5:
		difference = rhoLambda - rho
	else:
		difference = complement - lambdaStar / lambda_

	numerator = complement * (lambda_ * difference + rho)
	return numerator / gap ** 2 * params.N


def _asArray(name: str, value: RealOrArray, upper: float) -> Tuple[ndarray, bool]:
	array = asarray(value, dtype=float64)
	if not np_isfinite(array).all() or np_any(array < 0.0) or np_any(array > upper):
		raise DomainException(name, f"Value(s) outside of [0, {upper}].")

	return array, array.ndim == 0


def _checkShape(k: int, lambda_: float) -> Tuple[int, float]:
	k = _checkInteger("k", k, 2)
	lambda_ = _checkReal("lambda", lambda_)
	if lambda_ < 0.0:
		raise DomainException("lambda", f"{lambda_} is negative.")

	return k, lambda_


def _exposure(tau: ndarray, k: int) -> ndarray:
	""":math:`1 - (1-\\tau)^{k-1}`, accurate for small :math:`\\tau`."""
	# log1p(-1) = -inf at tau = 1 maps to an exposure of exactly 1
	with errstate(divide="ignore"):
		return -np_expm1((k - 1) * np_log1p(-tau))


@export
def g(tau: RealOrArray, k: int, lambda_: float) -> RealOrArray:
	"""
	Limiting trajectory :math:`g_{k,\\lambda}(\\tau) = 1 - \\tau - \\exp\\left(-\\frac{\\lambda}{k-1}(1-(1-\\tau)^{k-1})\\right)`.

	:param tau:     Rescaled time in ``[0, 1]`` (scalar or array).
	:param k:       Edge arity.
	:param lambda_: Branching intensity.
	:returns:       Function value(s).
	:raises DomainException: If a ``tau`` value is outside of ``[0, 1]``.
	"""
	k, lambda_ = _checkShape(k, lambda_)
	array, isScalar = _asArray("tau", tau, 1.0)

	result = 1.0 - array - np_exp(-lambda_ / (k - 1) * _exposure(array, k))
	return float(result) if isScalar else result


@export
def gDerivatives(tau: RealOrArray, k: int, lambda_: float) -> Tuple[RealOrArray, RealOrArray]:
	"""
	Returns the first and second derivative of :func:`g`.

	.. math::

	   g'(\\tau)  &= -1 + \\lambda(1-\\tau)^{k-2} E(\\tau) \\\\
	   g''(\\tau) &= \\left(-\\lambda(k-2)(1-\\tau)^{k-3} - (\\lambda(1-\\tau)^{k-2})^2\\right) E(\\tau)

	with :math:`E(\\tau) = \\exp(-\\frac{\\lambda}{k-1}(1-(1-\\tau)^{k-1}))`.

	:param tau:     Rescaled time in ``[0, 1]`` (scalar or array).
	:param k:       Edge arity.
	:param lambda_: Branching intensity.
	:returns:       Tuple ``(g', g'')``.
	"""
	k, lambda_ = _checkShape(k, lambda_)
	array, isScalar = _asArray("tau", tau, 1.0)

	remaining = 1.0 - array
	factor = np_exp(-lambda_ / (k - 1) * _exposure(array, k))
	first = -1.0 + lambda_ * remaining ** (k - 2) * factor
	if k == 2:
		second = -(lambda_ ** 2) * factor
	else:
		second = (-lambda_ * (k - 2) * remaining ** (k - 3) - (lambda_ * remaining ** (k - 2)) ** 2) * factor

	if isScalar:
		return float(first), float(second)

	return first, second


@export
def gSeries(tau: RealOrArray, k: int, lambda_: float) -> RealOrArray:
	"""
	Quadratic expansion of :func:`g` near 0: :math:`\\varepsilon\\tau - (k-1)\\tau^2/2`.

	The error is :math:`O(\\tau^3 + \\varepsilon\\tau^2)`; inside the critical window it yields the parabolic drift
	of the rescaled exploration walk.
	"""
	k, lambda_ = _checkShape(k, lambda_)
	array, isScalar = _asArray("tau", tau, 1.0)

	result = (lambda_ - 1.0) * array - (k - 1) * array ** 2 / 2.0
	return float(result) if isScalar else result


@export
def betaTrajectory(params: ModelParams) -> ndarray:
	"""
	Returns :math:`\\beta_0, \\ldots, \\beta_n` with :math:`\\beta_t = \\prod_{i=1}^t (1 - \\alpha_i)` and
	:math:`\\alpha_i = p \\binom{n-i-1}{k-2}`.

	The product is accumulated in floating point from exact binomial counts.

	:param params: Model parameters.
	:returns:      Array of ``n + 1`` decreasing values starting at 1.
	:raises BinomialOverflowException: If a binomial count exceeds the 64-bit integer range.
	"""
	n = params.N
	counts = binomialCounts(n - 2, params.K - 2)
	# alpha_n uses C(-1, k-2), which is 1 for k = 2 and 0 otherwise
	last = 1.0 if params.K == 2 else 0.0
	alphas = params.P * concatenate((counts[::-1].astype(float64), [last]))
	return concatenate(([1.0], cumprod(1.0 - alphas)))


@export
def xTrajectory(params: ModelParams) -> ndarray:
	"""
	Returns the deterministic walk approximation :math:`x_t = n - t - n\\beta_t` for :math:`t = 0, \\ldots, n`.

	:param params: Model parameters.
	:returns:      Array of ``n + 1`` values starting at 0.
	"""
	n = params.N
	return n - arange(n + 1, dtype=float64) - n * betaTrajectory(params)


@export
def logBetaApproximation(params: ModelParams, t: RealOrArray) -> RealOrArray:
	"""
	Returns :math:`-\\frac{\\lambda}{k-1}(1 - (1-t/n)^{k-1})`, which approximates :math:`\\log \\beta_t` up to
	:math:`O(1/n)`.
	"""
	n = params.N
	array, isScalar = _asArray("t", t, float(n))

	result = -params.Lambda / (params.K - 1) * _exposure(array / n, params.K)
	return float(result) if isScalar else result


@export
def uTrajectory(params: ModelParams, t: RealOrArray) -> RealOrArray:
	"""
	Returns the idealized number of unseen vertices :math:`u_t = n \\exp(-\\frac{\\lambda}{k-1}(1-(1-t/n)^{k-1}))`.

	It satisfies :math:`u_t = n - t - n g(t/n)`.

	:param params: Model parameters.
	:param t:      Time(s) in ``[0, n]``.
	:returns:      Value(s) of :math:`u_t`.
	"""
	n = params.N
	array, isScalar = _asArray("t", t, float(n))

	result = n * np_exp(-params.Lambda / (params.K - 1) * _exposure(array / n, params.K))
	return float(result) if isScalar else result


@export
def criticalAlpha(params: ModelParams) -> float:
	"""
	Returns the position inside the critical window :math:`\\alpha = (\\lambda-1) n^{1/3} (k-1)^{-2/3}`.
	"""
	return (params.Lambda - 1.0) * params.N ** (1 / 3) * (params.K - 1) ** (-2 / 3)


@export
def conditionalVarianceApproximation(params: ModelParams, t: RealOrArray, unseen: RealOrArray) -> RealOrArray:
	"""
	Asymptotic conditional variance of the number of newly activated vertices in step ``t + 1``:

	.. math::

	   \\lambda (k-2) (1-t/n)^{k-3} (U/n)^2 + \\lambda (1-t/n)^{k-2} U/n

	:param params: Model parameters.
	:param t:      Step(s) in ``[0, n]``.
	:param unseen: Number(s) of unseen vertices.
	:returns:      Approximate variance(s).
	"""
	n, k, lambda_ = params.N, params.K, params.Lambda
	time, isScalar = _asArray("t", t, float(n))
	fraction = asarray(unseen, dtype=float64) / n
	remaining = 1.0 - time / n

	result = lambda_ * remaining ** (k - 2) * fraction
	if k > 2:
		result = result + lambda_ * (k - 2) * remaining ** (k - 3) * fraction ** 2

	return float(result) if isScalar and result.ndim == 0 else result


@export
def predictedWalkVariance(params: ModelParams) -> float:
	"""
	Predicts :math:`\\operatorname{Var}(\\tilde{X}_{t_1})` at :math:`t_1 = \\lfloor \\rho_{k,\\lambda} n \\rfloor` by
	summing the asymptotic conditional variances of the martingale increments:

	.. math::

	   \\beta_{t_1}^2 \\sum_{i=1}^{t_1} \\beta_i^{-2} \\left( \\lambda(k-2)(1-i/n)^{k-3}(u_i/n)^2 + \\lambda(1-i/n)^{k-2}u_i/n \\right)

	For large ``n`` this agrees with :math:`(1-\\lambda^*)^2 \\sigma^2_{k,\\lambda}`.

	:param params: Model parameters with :math:`\\lambda > 1`.
	:returns:      Predicted variance.
	"""
	lambda_ = _checkLambda(params.Lambda)
	if lambda_ == 1.0:
		raise DomainException("lambda", "The walk variance is only predicted for lambda > 1.")

	n = params.N
	t1 = int(floor(rhoK(lambda_, params.K) * n))
	steps = arange(1, t1 + 1, dtype=float64)
	beta = betaTrajectory(params)

	terms = conditionalVarianceApproximation(params, steps, uTrajectory(params, steps))
	return float(beta[t1] ** 2 * (terms / beta[1:t1 + 1] ** 2).sum())


@export
class TheoryValues(metaclass=ExtendedType, slots=True):
	"""
	Limit constants of a model: :math:`\\lambda^*`, :math:`\\rho_\\lambda`, :math:`\\rho_{k,\\lambda}`,
	:math:`\\sigma^2_{k,\\lambda}` and the critical window position :math:`\\alpha`.

	At :math:`\\lambda = 1` the variance is undefined and reported as ``None``.
	"""

	_params:       ModelParams
	_lambdaStar:   float
	_rhoPoisson:   float
	_rhoK:         float
	_sigmaSquared: Nullable[float]

	def __init__(self, params: ModelParams, lambdaStar: float, rhoPoisson: float, rho: float, sigmaSquared: Nullable[float]) -> None:
		self._params = params
		self._lambdaStar = lambdaStar
		self._rhoPoisson = rhoPoisson
		self._rhoK = rho
		self._sigmaSquared = sigmaSquared

	@classmethod
	def FromParameters(cls, params: ModelParams) -> "TheoryValues":
		"""
		Computes all limit constants of a model.

		:param params: Model parameters with :math:`\\lambda \\ge 1`.
		:returns:      The limit constants.
		:raises DomainException: If :math:`\\lambda < 1`.
		"""
		lambda_ = _checkLambda(params.Lambda)
		lambdaStar, _, rho = _dualPair(lambda_)
		sigma = sigmaSquared(params) if lambda_ > 1.0 else None

		return cls(params, lambdaStar, rho, rhoK(lambda_, params.K), sigma)

	@readonly
	def Params(self) -> ModelParams:
		return self._params

	@readonly
	def LambdaStar(self) -> float:
		return self._lambdaStar

	@readonly
	def RhoPoisson(self) -> float:
		return self._rhoPoisson

	@readonly
	def RhoK(self) -> float:
		return self._rhoK

	@readonly
	def SigmaSquared(self) -> Nullable[float]:
		return self._sigmaSquared

	@readonly
	def SigmaSquaredPerVertex(self) -> Nullable[float]:
		return None if self._sigmaSquared is None else self._sigmaSquared / self._params.N

	@readonly
	def Epsilon(self) -> float:
		return self._params.Epsilon

	@readonly
	def Alpha(self) -> float:
		return criticalAlpha(self._params)

	def AsDict(self) -> Dict[str, Any]:
		return {
			"n":              self._params.N,
			"k":            self._params.K,
			"lambda":       self._params.Lambda,
			"epsilon":      self.Epsilon,
			"lambda_star":  self._lambdaStar,
			"rho_poisson":  self._rhoPoisson,
			"rho_k":        self._rhoK,
			"sigma_sq":     self._sigmaSquared,
			"sigma_sq_per_n": self.SigmaSquaredPerVertex,
			"alpha":        self.Alpha,
		}
