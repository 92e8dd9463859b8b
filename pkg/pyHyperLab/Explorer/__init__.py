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
The exploration process on a k-uniform hypergraph.

In every step ``t`` one vertex :math:`v_t` is explored: the oldest active vertex, or, if no vertex is active, the
unseen vertex with the smallest index, which starts a new component. All edges containing :math:`v_t` and avoiding the
explored vertices are revealed, and their unseen vertices become active. The number :math:`\\eta_t` of newly activated
vertices drives the walk :math:`X_t = \\sum_{i \\le t} (\\eta_i - 1) = A_t - C_t`, whose successive new minima mark the
ends of the components.

Two modes are provided:

* :func:`exploreImplicit` samples the revealed edges on the fly and never materializes the hypergraph.
* :func:`exploreGiven` replays the exploration on an explicit :class:`~pyHyperLab.Hypergraph.Hypergraph`.

:func:`decompose` splits a walk into its drift and a martingale and compares it to the deterministic trajectory.
"""
from collections           import deque
from csv                   import writer
from enum                  import IntEnum
from math                  import expm1, floor, log1p
from pathlib               import Path
from sys                   import version_info
from typing                import Callable, Iterable, List, Optional as Nullable, Sequence, Tuple, Union

from numpy                 import ndarray, arange, asarray, concatenate, cumsum, diff, errstate, float64, int64
from numpy                 import abs as np_abs, argmax, expm1 as np_expm1, flatnonzero, maximum as np_maximum, minimum, zeros
from pyTooling.Decorators  import export, readonly
from pyTooling.MetaClasses import ExtendedType

from pyHyperLab.Common            import binomial, binomialCounts, createGenerator
from pyHyperLab.Exceptions        import DomainException, MalformedWalkException, TraceMismatchException
from pyHyperLab.Hypergraph        import Hypergraph
from pyHyperLab.Theory            import ModelParams, TheoryValues, betaTrajectory, uTrajectory, xTrajectory
from pyHyperLab.Explorer.Sampling import UniformStream, binomialVariates, drawSubsets


@export
class VertexStatus(IntEnum):
	"""Status of a vertex during the exploration."""
	Unseen =   0
	Active =   1
	Explored = 2


def _readOnly(array: ndarray) -> ndarray:
	array.setflags(write=False)
	return array


@export
class ExplorationTrace(metaclass=ExtendedType, slots=True):
	"""
	The record of one exploration of a hypergraph on ``n`` vertices.

	Step-indexed sequences :attr:`A`, :attr:`U`, :attr:`C` and :attr:`X` have ``n + 1`` entries for
	:math:`t = 0, \\ldots, n`. :attr:`Eta` and :attr:`EdgesFound` have ``n`` entries; index ``t - 1`` holds the value of
	step ``t``. All arrays are read-only.
	"""

	_n:                 int
	_k:                 int
	_eta:               ndarray
	_a:                 ndarray
	_u:                 ndarray
	_c:                 ndarray
	_x:                 ndarray
	_edgesFound:        ndarray
	_componentSizes:    ndarray
	_newComponentSteps: ndarray

	def __init__(
		self,
		n: int,
		k: int,
		eta: Sequence[int],
		active: Sequence[int],
		unseen: Sequence[int],
		components: Sequence[int],
		edgesFound: Sequence[int],
		componentSizes: Sequence[int],
		newComponentSteps: Sequence[int]
	) -> None:
		self._n = n
		self._k = k
		self._eta = _readOnly(asarray(eta, dtype=int64))
		self._a = _readOnly(asarray(active, dtype=int64))
		self._u = _readOnly(asarray(unseen, dtype=int64))
		self._c = _readOnly(asarray(components, dtype=int64))
		self._x = _readOnly(self._a - self._c)
		self._edgesFound = _readOnly(asarray(edgesFound, dtype=int64))
		self._componentSizes = _readOnly(asarray(componentSizes, dtype=int64))
		self._newComponentSteps = _readOnly(asarray(newComponentSteps, dtype=int64))

	@readonly
	def N(self) -> int:
		return self._n

	@readonly
	def K(self) -> int:
		return self._k

	@readonly
	def Eta(self) -> ndarray:
		"""Newly activated vertices :math:`\\eta_1, \\ldots, \\eta_n`."""
		return self._eta

	@readonly
	def A(self) -> ndarray:
		"""Active vertices :math:`A_0, \\ldots, A_n`."""
		return self._a

	@readonly
	def U(self) -> ndarray:
		"""Unseen vertices :math:`U_0, \\ldots, U_n`."""
		return self._u

	@readonly
	def C(self) -> ndarray:
		"""Started components :math:`C_0, \\ldots, C_n`."""
		return self._c

	@readonly
	def X(self) -> ndarray:
		"""Walk :math:`X_t = A_t - C_t`."""
		return self._x

	@readonly
	def EdgesFound(self) -> ndarray:
		"""Number of edges revealed in steps :math:`1, \\ldots, n`."""
		return self._edgesFound

	@readonly
	def ComponentSizes(self) -> ndarray:
		"""Component sizes in order of exploration."""
		return self._componentSizes

	@readonly
	def NewComponentSteps(self) -> ndarray:
		"""Steps ``t`` with :math:`A_{t-1} = 0`, i.e. in which a new component was started."""
		return self._newComponentSteps

	@readonly
	def ComponentCount(self) -> int:
		return len(self._componentSizes)

	def LargestSizes(self, r: int = 2) -> Tuple[int, ...]:
		"""
		Returns the ``r`` largest component sizes, padded with zeros.

		:param r: Number of sizes.
		:returns: Descending tuple of ``r`` sizes.
		"""
		sizes = sorted(self._componentSizes.tolist(), reverse=True)[:r]
		return tuple(sizes + [0] * (r - len(sizes)))

	def __repr__(self) -> str:
		return f"ExplorationTrace(n={self._n}, k={self._k}, components={len(self._componentSizes)})"


class _StatusMachine(metaclass=ExtendedType, slots=True):
	"""
	Vertex statuses of a running exploration.

	Explored vertices occupy the prefix of :attr:`_permutation`, so the eligible vertices of a step are a suffix.
	"""

	_n:           int
	_t:           int
	_status:      bytearray
	_permutation: List[int]
	_position:    List[int]
	_queue:       deque
	_nextUnseen:  int

	_eta:         List[int]
	_active:      List[int]
	_unseen:      List[int]
	_components:  List[int]
	_edgesFound:  List[int]
	_sizes:       List[int]
	_starts:      List[int]

	def __init__(self, n: int) -> None:
		self._n = n
		self._t = 0
		self._status = bytearray(n)
		self._permutation = list(range(n))
		self._position = list(range(n))
		self._queue = deque()
		self._nextUnseen = 0

		self._eta = []
		self._active = [0]
		self._unseen = [n]
		self._components = [0]
		self._edgesFound = []
		self._sizes = []
		self._starts = []

	def Step(self, activate: Callable[["_StatusMachine", int], Tuple[Iterable[int], int]]) -> None:
		"""
		Explores the next vertex.

		:param activate: Returns the unseen vertices to activate and the number of revealed edges for the explored vertex.
		"""
		self._t += 1
		t = self._t
		status = self._status

		if len(self._queue) > 0:
			vertex = self._queue.popleft()
		else:
			while status[self._nextUnseen] != VertexStatus.Unseen:
				self._nextUnseen += 1
			vertex = self._nextUnseen

			if len(self._starts) > 0:
				self._sizes.append(t - self._starts[-1])
			self._starts.append(t)

		status[vertex] = VertexStatus.Explored
		self._SwapIntoPrefix(vertex, t - 1)

		newVertices, edges = activate(self, vertex)
		count = 0
		for newVertex in newVertices:
			status[newVertex] = VertexStatus.Active
			self._queue.append(newVertex)
			count += 1

		active = len(self._queue)
		self._eta.append(count)
		self._edgesFound.append(edges)
		self._active.append(active)
		self._unseen.append(self._n - t - active)
		self._components.append(len(self._starts))

	def _SwapIntoPrefix(self, vertex: int, target: int) -> None:
		permutation = self._permutation
		position = self._position
		current = position[vertex]
		other = permutation[target]
		permutation[target], permutation[current] = vertex, other
		position[vertex], position[other] = target, current

	def IsUnseen(self, vertex: int) -> bool:
		return self._status[vertex] == VertexStatus.Unseen

	def VertexAt(self, position: int) -> int:
		return self._permutation[position]

	@readonly
	def Time(self) -> int:
		return self._t

	def ToTrace(self, k: int) -> ExplorationTrace:
		sizes = self._sizes + [self._n + 1 - self._starts[-1]] if len(self._starts) > 0 else []
		return ExplorationTrace(
			self._n, k, self._eta, self._active, self._unseen, self._components, self._edgesFound, sizes, self._starts
		)


@export
def exploreImplicit(params: ModelParams, seed: int) -> ExplorationTrace:
	"""
	Explores the random hypergraph :math:`H_k(n,p)` without materializing it.

	The number of edges revealed in step ``t`` is :math:`\\operatorname{Binomial}(\\binom{n-t}{k-1}, p)`, independent of
	all other steps, so the counts of all steps are drawn upfront. Each revealed edge is a distinct, uniformly drawn
	:math:`(k-1)`-subset of the :math:`n-t` vertices, which are neither explored nor :math:`v_t`.

	:param params: Model parameters.
	:param seed:   Unsigned 64-bit seed.
	:returns:      The exploration trace.
	:raises BinomialOverflowException: If :math:`\\binom{n-1}{k-1}` exceeds the 64-bit integer range.
	"""
	n, k, p = params.N, params.K, params.P
	trials = binomialCounts(n - 1, k - 1)[::-1]

	generator = createGenerator(seed)
	edgeCounts = binomialVariates(generator, trials, p).tolist()
	totals = trials.tolist()
	stream = UniformStream(generator)

	def activate(machine: _StatusMachine, vertex: int) -> Tuple[List[int], int]:
		t = machine.Time
		edges = edgeCounts[t - 1]
		if edges == 0:
			return [], 0

		newVertices = []
		seen = set()
		for subset in drawSubsets(stream, t, n - t, k - 1, edges, totals[t - 1]):
			for position in subset:
				other = machine.VertexAt(position)
				if machine.IsUnseen(other) and other not in seen:
					seen.add(other)
					newVertices.append(other)

		return newVertices, edges

	machine = _StatusMachine(n)
	for _ in range(n):
		machine.Step(activate)

	return machine.ToTrace(k)


@export
def exploreGiven(hypergraph: Hypergraph) -> ExplorationTrace:
	"""
	Replays the exploration on an explicit hypergraph.

	Vertices are visited in a fixed order: active vertices first in, first out; a new component starts at the unseen
	vertex with the smallest index. Newly activated vertices of a step are queued in ascending order.

	:param hypergraph: The hypergraph.
	:returns:          The exploration trace; its component sizes are exactly those of the hypergraph's components.
	"""
	n = hypergraph.N
	edges = [tuple(vertex - 1 for vertex in edge) for edge in hypergraph.Edges]
	incidence: List[List[int]] = [[] for _ in range(n)]
	for index, edge in enumerate(edges):
		for vertex in edge:
			incidence[vertex].append(index)

	edgeUsed = bytearray(len(edges))

	def activate(machine: _StatusMachine, vertex: int) -> Tuple[List[int], int]:
		newVertices = set()
		count = 0
		for index in incidence[vertex]:
			if edgeUsed[index]:
				continue

			edgeUsed[index] = 1
			count += 1
			newVertices.update(other for other in edges[index] if machine.IsUnseen(other))

		return sorted(newVertices), count

	machine = _StatusMachine(n)
	for _ in range(n):
		machine.Step(activate)

	return machine.ToTrace(hypergraph.K)


@export
def componentSizesFromWalk(walk: Sequence[int]) -> ndarray:
	"""
	Recovers the component sizes from a walk :math:`X_0, \\ldots, X_n`.

	Component ``i`` ends at :math:`t_i = \\inf\\{t : X_t = -i\\}`; the sizes are the gaps :math:`t_i - t_{i-1}`.

	:param walk: Walk with :math:`X_0 = 0` and increments :math:`\\ge -1`, ending in a new minimum.
	:returns:    Component sizes in order of exploration; they sum to ``n``.
	:raises MalformedWalkException: If the walk violates one of the conditions.
	"""
	x = asarray(walk, dtype=int64)
	if x.ndim != 1 or len(x) == 0:
		raise MalformedWalkException("A walk needs at least the value X_0.")
	elif x[0] != 0:
		raise MalformedWalkException(f"Walk starts at X_0={x[0]} instead of 0.")
	elif len(x) == 1:
		return _readOnly(asarray([], dtype=int64))

	increments = diff(x)
	bad = flatnonzero(increments < -1)
	if bad.size > 0:
		ex = MalformedWalkException(f"Walk has increment {increments[bad[0]]} < -1 at step {bad[0] + 1}.")
		if version_info >= (3, 11):  # pragma: no cover
			ex.add_note(f"{bad.size} increment(s) are smaller than -1.")
		raise ex

	runningMinimum = minimum.accumulate(x)
	records = flatnonzero(x[1:] < runningMinimum[:-1]) + 1
	if len(records) == 0 or records[-1] != len(x) - 1:
		raise MalformedWalkException(f"Walk ends in X_n={x[-1]}, which isn't a new minimum (unfinished component).")

	return _readOnly(diff(concatenate(([0], records))))


@export
class DecompositionTrace(metaclass=ExtendedType, slots=True):
	"""
	Decomposition of an exploration walk into drift and martingale.

	:attr:`D` and :attr:`Delta` hold steps :math:`1, \\ldots, n`; :attr:`S`, :attr:`Xtilde`, :attr:`WcBound`,
	:attr:`Beta` and :attr:`XTrajectory` hold steps :math:`0, \\ldots, n`.
	"""

	_d:           ndarray
	_delta:       ndarray
	_s:           ndarray
	_xtilde:      ndarray
	_wcBound:     ndarray
	_beta:        ndarray
	_xTrajectory: ndarray

	def __init__(self, d: ndarray, delta: ndarray, s: ndarray, xtilde: ndarray, wcBound: ndarray, beta: ndarray, xTrajectory: ndarray) -> None:
		self._d = _readOnly(d)
		self._delta = _readOnly(delta)
		self._s = _readOnly(s)
		self._xtilde = _readOnly(xtilde)
		self._wcBound = _readOnly(wcBound)
		self._beta = _readOnly(beta)
		self._xTrajectory = _readOnly(xTrajectory)

	@readonly
	def D(self) -> ndarray:
		"""Conditional drift :math:`D_t = E(\\eta_t - 1 \\mid \\mathcal{F}_{t-1})`."""
		return self._d

	@readonly
	def Delta(self) -> ndarray:
		"""Martingale differences :math:`\\Delta_t = X_t - X_{t-1} - D_t`."""
		return self._delta

	@readonly
	def S(self) -> ndarray:
		"""Martingale :math:`S_t = \\sum_{i \\le t} \\beta_i^{-1} \\Delta_i`."""
		return self._s

	@readonly
	def Xtilde(self) -> ndarray:
		""":math:`\\tilde{X}_t = x_t + \\beta_t S_t`."""
		return self._xtilde

	@readonly
	def WcBound(self) -> ndarray:
		""":math:`|X_t - \\tilde{X}_t|`."""
		return self._wcBound

	@readonly
	def Beta(self) -> ndarray:
		return self._beta

	@readonly
	def XTrajectory(self) -> ndarray:
		return self._xTrajectory


def _hitProbabilities(counts: ndarray, p: float) -> ndarray:
	""":math:`1 - (1-p)^c` per count ``c``."""
	if p == 1.0:
		return (counts > 0).astype(float64)

	return -np_expm1(counts * log1p(-p))


def _stepCounts(n: int, offset: int, r: int) -> ndarray:
	""":math:`\\binom{n-t-\\text{offset}}{r}` for :math:`t = 0, \\ldots, n-1`; zero for a negative upper index."""
	result = zeros(n, dtype=float64)
	if r < 0 or n - offset < 0:
		return result

	counts = binomialCounts(n - offset, r)[::-1].astype(float64)
	result[:len(counts)] = counts[:n]
	return result


def _unseenPrime(trace: ExplorationTrace) -> ndarray:
	return trace.U[:-1] - (trace.A[:-1] == 0)


def _checkTrace(trace: ExplorationTrace, params: ModelParams) -> None:
	if trace.N != params.N or trace.K != params.K:
		ex = TraceMismatchException(f"Trace of n={trace.N}, k={trace.K} doesn't match parameters {params}.")
		if version_info >= (3, 11):  # pragma: no cover
			ex.add_note("Traces must be decomposed with the parameters they were explored with.")
		raise ex
	elif len(trace.X) != params.N + 1 or len(trace.Eta) != params.N:
		raise TraceMismatchException(f"Trace arrays have wrong lengths for n={params.N}.")


@export
def decompose(trace: ExplorationTrace, params: ModelParams) -> DecompositionTrace:
	"""
	Decomposes the walk of a trace into the exact conditional drift and a martingale.

	With :math:`U'_t = U_t - [A_t = 0]` unseen vertices available for step :math:`t+1` and
	:math:`c_{t+1} = \\binom{n-t-2}{k-2}` candidate edges per unseen vertex, the drift is
	:math:`D_{t+1} = U'_t (1 - (1-p)^{c_{t+1}}) - 1`.

	Where :math:`\\beta_t = 0` (only possible for ``p = 1``), :attr:`DecompositionTrace.S` is undefined.

	:param trace:  Exploration trace.
	:param params: Parameters the trace was explored with.
	:returns:      The decomposition.
	:raises TraceMismatchException: If trace and parameters don't belong together.
	"""
	_checkTrace(trace, params)

	n, k = params.N, params.K
	drift = _unseenPrime(trace) * _hitProbabilities(_stepCounts(n, 2, k - 2), params.P) - 1.0
	delta = diff(trace.X).astype(float64) - drift

	beta = betaTrajectory(params)
	xTraj = xTrajectory(params)
	with errstate(divide="ignore", invalid="ignore"):
		s = concatenate(([0.0], cumsum(delta / beta[1:])))
		xtilde = xTraj + beta * s
	wcBound = np_abs(trace.X - xtilde)

	return DecompositionTrace(drift, delta, s, xtilde, wcBound, beta, xTraj)


def _hitProbability(count: int, p: float) -> float:
	if count == 0:
		return 0.0
	elif p == 1.0:
		return 1.0

	return -expm1(count * log1p(-p))


@export
def conditionalMoments(params: ModelParams, t: int, unseenPrime: int) -> Tuple[float, float]:
	"""
	Returns the exact conditional mean and variance of :math:`\\eta_{t+1}` given :math:`U'_t`.

	Each of the :math:`U'_t` unseen vertices is activated with probability :math:`\\pi_1 = 1 - (1-p)^{c_{t+1}}`. Two of
	them are activated together either by a common edge, with probability
	:math:`\\pi_2 = 1 - (1-p)^{\\binom{n-t-3}{k-3}}`, or otherwise by two different edges, with probability
	:math:`\\pi_3 = (1-\\pi_2)(1 - (1-p)^a)^2` and :math:`a = \\binom{n-t-3}{k-2}`.

	:param params:      Model parameters.
	:param t:           Step in ``[0, n)``.
	:param unseenPrime: :math:`U'_t` in ``[0, n-t-1]``.
	:returns:           Tuple ``(mean, variance)``.
	:raises DomainException: If ``t`` or ``unseenPrime`` is out of range.
	"""
	n, k, p = params.N, params.K, params.P
	if not (0 <= t < n):
		raise DomainException("t", f"{t} is outside of [0, {n}).")
	elif not (0 <= unseenPrime <= n - t - 1):
		raise DomainException("unseenPrime", f"{unseenPrime} is outside of [0, {n - t - 1}].")

	pi1 = _hitProbability(binomial(n - t - 2, k - 2), p)
	pi2 = _hitProbability(binomial(n - t - 3, k - 3), p)
	pi3 = (1.0 - pi2) * _hitProbability(binomial(n - t - 3, k - 2), p) ** 2

	mean = unseenPrime * pi1
	variance = unseenPrime * (unseenPrime - 1) * (pi2 + pi3) + mean - mean ** 2
	return mean, max(variance, 0.0)


@export
def conditionalVariances(trace: ExplorationTrace, params: ModelParams) -> ndarray:
	"""
	Returns the exact conditional variances of :math:`\\eta_t` along a trace, for steps :math:`1, \\ldots, n`.

	Entry ``t-1`` equals the variance of :func:`conditionalMoments` for step ``t-1`` and the observed :math:`U'_{t-1}`.
	These are also the conditional variances of the martingale differences :attr:`DecompositionTrace.Delta`.

	:param trace:  Exploration trace.
	:param params: Parameters the trace was explored with.
	:returns:      Array of ``n`` variances.
	:raises TraceMismatchException: If trace and parameters don't belong together.
	"""
	_checkTrace(trace, params)

	n, k, p = params.N, params.K, params.P
	unseenPrime = _unseenPrime(trace).astype(float64)
	pi1 = _hitProbabilities(_stepCounts(n, 2, k - 2), p)
	pi2 = _hitProbabilities(_stepCounts(n, 3, k - 3), p)
	pi3 = (1.0 - pi2) * _hitProbabilities(_stepCounts(n, 3, k - 2), p) ** 2

	mean = unseenPrime * pi1
	return np_maximum(unseenPrime * (unseenPrime - 1.0) * (pi2 + pi3) + mean - mean ** 2, 0.0)


@export
def rescaledWalk(trace: ExplorationTrace, params: ModelParams, horizon: float) -> Tuple[ndarray, ndarray]:
	"""
	Rescales the walk for the critical window.

	Time is mapped to :math:`s = t (k-1)^{1/3} n^{-2/3}` and values to :math:`X_t / ((k-1)n)^{1/3}`.

	:param trace:   Exploration trace.
	:param params:  Model parameters.
	:param horizon: Largest rescaled time.
	:returns:       Tuple of rescaled times and values.
	"""
	_checkTrace(trace, params)
	if not horizon > 0.0:
		raise DomainException("horizon", f"{horizon} is not positive.")

	n, k = params.N, params.K
	timeScale = (k - 1) ** (1 / 3) * n ** (-2 / 3)
	last = min(n, int(floor(horizon / timeScale)))

	steps = arange(last + 1, dtype=float64)
	return steps * timeScale, trace.X[:last + 1] / ((k - 1) * n) ** (1 / 3)


@export
def giantExitTime(trace: ExplorationTrace, decomposition: DecompositionTrace, params: ModelParams) -> Tuple[int, float]:
	"""
	Compares the step in which the largest component was left with its linearized prediction.

	The prediction is :math:`t_1 + \\tilde{X}_{t_1} / (1 - \\lambda^*)` with :math:`t_1 = \\lfloor \\rho_{k,\\lambda} n \\rfloor`.

	:param trace:         Exploration trace.
	:param decomposition: Decomposition of the trace.
	:param params:        Model parameters with :math:`\\lambda > 1`.
	:returns:             Tuple of observed and predicted step.
	"""
	_checkTrace(trace, params)
	theory = TheoryValues.FromParameters(params)
	if theory.SigmaSquared is None:
		raise DomainException("lambda", "The giant component only exists for lambda > 1.")

	ends = cumsum(trace.ComponentSizes)
	observed = int(ends[int(argmax(trace.ComponentSizes))])

	t1 = int(floor(theory.RhoK * params.N))
	predicted = t1 + float(decomposition.Xtilde[t1]) / (1.0 - theory.LambdaStar)
	return observed, predicted


TRACE_COLUMNS = ("t", "eta", "A", "U", "C", "X")
EXTENDED_TRACE_COLUMNS = TRACE_COLUMNS + ("x_t", "u_t", "Xtilde", "wc_bound")


@export
def traceRows(trace: ExplorationTrace, params: Nullable[ModelParams] = None) -> Tuple[Tuple[str, ...], List[List[Union[int, float]]]]:
	"""
	Returns the trace as table, one row per step :math:`t = 0, \\ldots, n`. ``eta`` is 0 at :math:`t = 0`.

	With parameters, the deterministic trajectories and the decomposition are appended as columns.

	:param trace:  Exploration trace.
	:param params: Optional model parameters.
	:returns:      Tuple of column names and rows.
	"""
	n = trace.N
	columns = [arange(n + 1).tolist(), [0] + trace.Eta.tolist(), trace.A.tolist(), trace.U.tolist(), trace.C.tolist(), trace.X.tolist()]
	if params is None:
		return TRACE_COLUMNS, [list(row) for row in zip(*columns)]

	decomposition = decompose(trace, params)
	columns.append(decomposition.XTrajectory.tolist())
	columns.append(asarray(uTrajectory(params, arange(n + 1, dtype=float64))).tolist())
	columns.append(decomposition.Xtilde.tolist())
	columns.append(decomposition.WcBound.tolist())
	return EXTENDED_TRACE_COLUMNS, [list(row) for row in zip(*columns)]


@export
def writeTraceCSV(path: Path, trace: ExplorationTrace, params: Nullable[ModelParams] = None) -> None:
	"""
	Writes a trace as CSV with a ``# schema=1`` comment line, a header and LF line endings.

	:param path:   Output file.
	:param trace:  Exploration trace.
	:param params: Optional model parameters for the extended columns (see :func:`traceRows`).
	"""
	columns, rows = traceRows(trace, params)
	with Path(path).open("w", encoding="utf-8", newline="") as file:
		file.write("# schema=1\n")
		csvWriter = writer(file, lineterminator="\n")
		csvWriter.writerow(columns)
		csvWriter.writerows(rows)
