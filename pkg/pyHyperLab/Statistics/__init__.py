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
Statistics for experiment verdicts: per-run summaries, standardization of the giant component's size against its
normal limit, Kolmogorov-Smirnov tests, a chi-square homogeneity test for integer histograms and scores of summed
martingale differences.

Brownian excursion simulations for the critical window are provided by :mod:`pyHyperLab.Statistics.Excursion`.
"""
from math                  import sqrt
from sys                   import version_info
from typing                import Any, Callable, Dict, Iterable, List, Optional as Nullable, Sequence, Tuple, Union

from numpy                 import ndarray, arange, asarray, bincount, concatenate, diff, float64, int64, searchsorted, sort, vstack
from numpy                 import abs as np_abs, any as np_any, full, isfinite as np_isfinite, nan, sqrt as np_sqrt
from scipy.special         import kolmogorov, ndtr
from scipy.stats           import chi2_contingency
from pyTooling.Decorators  import export, readonly
from pyTooling.MetaClasses import ExtendedType

from pyHyperLab.Exceptions import DegenerateSampleException, DomainException, UnsortedSampleException
from pyHyperLab.Theory     import ModelParams, TheoryValues


@export
class RunSummary(metaclass=ExtendedType, slots=True):
	"""
	Summary of one exploration run: the ``r`` largest component sizes and the number of components.
	"""

	_seed:           int
	_largest:        Tuple[int, ...]
	_componentCount: int

	def __init__(self, seed: int, largest: Sequence[int], componentCount: int) -> None:
		self._seed = seed
		self._largest = tuple(int(size) for size in largest)
		self._componentCount = componentCount

	@classmethod
	def FromSizes(cls, sizes: Iterable[int], seed: int, r: int = 2) -> "RunSummary":
		"""
		Summarizes component sizes.

		:param sizes: Component sizes in any order.
		:param seed:  Seed of the run.
		:param r:     Number of largest sizes to keep (``>= 2``); missing sizes are reported as 0.
		:returns:     The run summary.
		"""
		if r < 2:
			raise DomainException("r", f"{r} is smaller than 2.")

		ordered = sorted((int(size) for size in sizes), reverse=True)
		largest = ordered[:r] + [0] * max(0, r - len(ordered))
		return cls(seed, largest, len(ordered))

	@readonly
	def Seed(self) -> int:
		return self._seed

	@readonly
	def L1(self) -> int:
		"""Size of the largest component."""
		return self._largest[0]

	@readonly
	def L2(self) -> int:
		"""Size of the second largest component, or 0."""
		return self._largest[1]

	@readonly
	def Largest(self) -> Tuple[int, ...]:
		return self._largest

	@readonly
	def ComponentCount(self) -> int:
		return self._componentCount

	def ToRow(self) -> List[int]:
		"""Returns the CSV row ``seed,L1,L2,n_components``."""
		return [self._seed, self.L1, self.L2, self._componentCount]

	def ToDict(self) -> Dict[str, Any]:
		return {"seed": self._seed, "largest": list(self._largest), "n_components": self._componentCount}

	def __repr__(self) -> str:
		return f"RunSummary(seed={self._seed}, L1={self.L1}, L2={self.L2}, n_components={self._componentCount})"


@export
def normalCDF(x: Union[float, ndarray]) -> Union[float, ndarray]:
	"""
	Standard normal distribution function :math:`\\Phi`, computed by :func:`scipy.special.ndtr`.

	:param x: Finite argument(s).
	:returns: :math:`\\Phi(x)`.
	"""
	result = ndtr(x)
	return float(result) if isinstance(x, (int, float)) else result


@export
def ksTest(sample: Sequence[float], cdf: Callable[[ndarray], ndarray] = normalCDF) -> Tuple[float, float]:
	"""
	One-sample Kolmogorov-Smirnov test.

	The statistic is :math:`D_m = \\max_i \\max(i/m - F(x_i), F(x_i) - (i-1)/m)`; the p-value is the asymptotic
	Kolmogorov survival function :math:`K(\\sqrt{m} D_m)` (:func:`scipy.special.kolmogorov`).

	:param sample: Sample sorted ascending.
	:param cdf:    Continuous distribution function; called once with the whole sample.
	:returns:      Tuple of statistic and p-value.
	:raises UnsortedSampleException:   If the sample isn't sorted ascending.
	:raises DegenerateSampleException: If the sample is empty.
	"""
	values = asarray(sample, dtype=float64)
	m = len(values)
	if m == 0:
		raise DegenerateSampleException("Kolmogorov-Smirnov test needs a non-empty sample.")
	elif np_any(diff(values) < 0.0):
		ex = UnsortedSampleException("Sample isn't sorted ascending.")
		if version_info >= (3, 11):  # pragma: no cover
			ex.add_note("Sort the sample before calling ksTest.")
		raise ex

	distribution = asarray(cdf(values), dtype=float64)
	ranks = arange(1, m + 1, dtype=float64)
	statistic = max(float((ranks / m - distribution).max()), float((distribution - (ranks - 1) / m).max()))
	pValue = float(kolmogorov(sqrt(m) * statistic))
	return statistic, min(max(pValue, 0.0), 1.0)


@export
def criticalCompare(samplesA: Sequence[float], samplesB: Sequence[float]) -> Tuple[float, float]:
	"""
	Two-sample Kolmogorov-Smirnov test.

	Both empirical distribution functions are evaluated on the pooled sample. The p-value is
	:math:`K(\\sqrt{n_1 n_2 / (n_1 + n_2)} D)`.

	:param samplesA: First sample.
	:param samplesB: Second sample.
	:returns:        Tuple of statistic and p-value.
	:raises DegenerateSampleException: If a sample is empty.
	"""
	first = sort(asarray(samplesA, dtype=float64))
	second = sort(asarray(samplesB, dtype=float64))
	n1, n2 = len(first), len(second)
	if n1 == 0 or n2 == 0:
		raise DegenerateSampleException(f"Two-sample test needs non-empty samples (got {n1} and {n2} values).")

	pooled = concatenate((first, second))
	cdfFirst = searchsorted(first, pooled, side="right") / n1
	cdfSecond = searchsorted(second, pooled, side="right") / n2
	statistic = float(np_abs(cdfFirst - cdfSecond).max())

	pValue = float(kolmogorov(sqrt(n1 * n2 / (n1 + n2)) * statistic))
	return statistic, min(max(pValue, 0.0), 1.0)


@export
def chiSquareHistograms(samplesA: Sequence[int], samplesB: Sequence[int], binWidth: int = 2) -> Tuple[float, float]:
	"""
	Chi-square test of homogeneity for two samples of integers.

	Both samples are binned into bins of ``binWidth`` consecutive integers. Bins empty in both samples are dropped.

	:param samplesA: First sample.
	:param samplesB: Second sample.
	:param binWidth: Width of a bin.
	:returns:        Tuple of statistic and p-value; ``(0.0, 1.0)`` if fewer than two bins are occupied.
	:raises DegenerateSampleException: If a sample is empty.
	"""
	if binWidth < 1:
		raise DomainException("binWidth", f"{binWidth} is smaller than 1.")

	first = asarray(samplesA, dtype=int64)
	second = asarray(samplesB, dtype=int64)
	if len(first) == 0 or len(second) == 0:
		raise DegenerateSampleException("Chi-square test needs non-empty samples.")

	low = min(int(first.min()), int(second.min()))
	binsFirst = (first - low) // binWidth
	binsSecond = (second - low) // binWidth
	length = int(max(binsFirst.max(), binsSecond.max())) + 1

	table = vstack((bincount(binsFirst, minlength=length), bincount(binsSecond, minlength=length)))
	table = table[:, table.sum(axis=0) > 0]
	if table.shape[1] < 2:
		return 0.0, 1.0

	result = chi2_contingency(table, correction=False)
	return float(result[0]), float(result[1])


@export
def martingaleScores(deltaSums: Sequence[float], varianceSums: Sequence[float], minimumVariance: float = 25.0) -> ndarray:
	"""
	Standardizes the per-step sums of martingale differences over independent runs.

	With :math:`m` runs, the mean :math:`\\bar{\\Delta}_t` has the standard error :math:`\\sqrt{\\sum V_t}/m`, where
	:math:`V_t` are the exact conditional variances of the runs. The score is
	:math:`\\sum \\Delta_t / \\sqrt{\\sum V_t}`.

	Steps whose summed variance is below ``minimumVariance`` carry only a few rare activations, so the normal
	approximation fails there; their score is ``NaN``.

	:param deltaSums:       Per-step sums of :math:`\\Delta_t` over all runs.
	:param varianceSums:    Per-step sums of the conditional variances over all runs.
	:param minimumVariance: Smallest summed variance of a scored step.
	:returns:               Array of scores, ``NaN`` for unscored steps.
	"""
	sums = asarray(deltaSums, dtype=float64)
	variances = asarray(varianceSums, dtype=float64)
	if sums.shape != variances.shape:
		raise DomainException("varianceSums", f"Shape {variances.shape} differs from shape {sums.shape} of the sums.")
	elif not minimumVariance > 0.0:
		raise DomainException("minimumVariance", f"{minimumVariance} is not positive.")

	scores = full(sums.shape, nan)
	scored = variances >= minimumVariance
	scores[scored] = sums[scored] / np_sqrt(variances[scored])
	return scores


@export
class NormalityReport(metaclass=ExtendedType, slots=True):
	"""
	Comparison of a sample with its normal limit.

	For a single run (``m = 1``) the report is flagged insufficient: variance and test results are ``None``.
	"""

	_m:              int
	_sampleMean:     float
	_sampleVariance: Nullable[float]
	_theoryMean:     float
	_theoryVariance: float
	_ksStatistic:    Nullable[float]
	_ksPValue:       Nullable[float]
	_standardized:   Tuple[float, ...]

	def __init__(
		self,
		m: int,
		sampleMean: float,
		sampleVariance: Nullable[float],
		theoryMean: float,
		theoryVariance: float,
		ksStatistic: Nullable[float],
		ksPValue: Nullable[float],
		standardized: Sequence[float]
	) -> None:
		self._m = m
		self._sampleMean = sampleMean
		self._sampleVariance = sampleVariance
		self._theoryMean = theoryMean
		self._theoryVariance = theoryVariance
		self._ksStatistic = ksStatistic
		self._ksPValue = ksPValue
		self._standardized = tuple(standardized)

	@classmethod
	def Insufficient(cls, values: Sequence[float], theoryMean: float, theoryVariance: float) -> "NormalityReport":
		"""Creates a report without variance and test results for fewer than two values."""
		values = asarray(values, dtype=float64)
		standardized = ((values - theoryMean) / sqrt(theoryVariance)).tolist()
		mean = float(values.mean()) if len(values) > 0 else float("nan")
		return cls(len(values), mean, None, theoryMean, theoryVariance, None, None, standardized)

	@readonly
	def M(self) -> int:
		return self._m

	@readonly
	def SampleMean(self) -> float:
		return self._sampleMean

	@readonly
	def SampleVariance(self) -> Nullable[float]:
		"""Unbiased sample variance."""
		return self._sampleVariance

	@readonly
	def TheoryMean(self) -> float:
		return self._theoryMean

	@readonly
	def TheoryVariance(self) -> float:
		return self._theoryVariance

	@readonly
	def KSStatistic(self) -> Nullable[float]:
		return self._ksStatistic

	@readonly
	def KSPValue(self) -> Nullable[float]:
		return self._ksPValue

	@readonly
	def Standardized(self) -> Tuple[float, ...]:
		return self._standardized

	@readonly
	def IsInsufficient(self) -> bool:
		return self._ksPValue is None

	@readonly
	def VarianceRatio(self) -> Nullable[float]:
		"""Sample variance divided by the theoretical variance."""
		return None if self._sampleVariance is None else self._sampleVariance / self._theoryVariance

	@readonly
	def MeanDeviation(self) -> float:
		"""Distance of the sample mean to the theoretical mean in standard errors :math:`\\sigma / \\sqrt{m}`."""
		return (self._sampleMean - self._theoryMean) / sqrt(self._theoryVariance / self._m)

	def ToDict(self) -> Dict[str, Any]:
		return {
			"m":            self._m,
			"sample_mean":  self._sampleMean,
			"sample_var":   self._sampleVariance,
			"theory_mean":  self._theoryMean,
			"theory_var":   self._theoryVariance,
			"ks_statistic": self._ksStatistic,
			"ks_p_value":   self._ksPValue,
			"standardized": list(self._standardized),
			"insufficient": self.IsInsufficient,
		}


@export
def normalityReport(values: Sequence[float], theoryMean: float, theoryVariance: float) -> NormalityReport:
	"""
	Standardizes values by a theoretical mean and variance and tests them against :math:`N(0,1)`.

	:param values:         At least two values.
	:param theoryMean:     Theoretical mean.
	:param theoryVariance: Theoretical variance (``> 0``).
	:returns:              The report.
	:raises DegenerateSampleException: If fewer than two values are given.
	"""
	if not (theoryVariance > 0.0 and np_isfinite(theoryVariance)):
		raise DomainException("theoryVariance", f"{theoryVariance} is not a positive number.")

	sample = asarray(values, dtype=float64)
	m = len(sample)
	if m < 2:
		raise DegenerateSampleException(f"Standardization needs at least 2 values, but got {m}.")

	standardized = (sample - theoryMean) / sqrt(theoryVariance)
	statistic, pValue = ksTest(sort(standardized))

	return NormalityReport(
		m,
		float(sample.mean()),
		float(sample.var(ddof=1)),
		theoryMean,
		theoryVariance,
		statistic,
		pValue,
		standardized.tolist()
	)


@export
def standardize(summaries: Sequence[RunSummary], params: ModelParams) -> NormalityReport:
	"""
	Standardizes the largest component sizes :math:`L_1` of several runs by :math:`\\rho_{k,\\lambda} n` and
	:math:`\\sigma_{k,\\lambda}` and tests them against the standard normal distribution.

	:param summaries: Summaries of at least two runs.
	:param params:    Model parameters with :math:`\\lambda > 1`.
	:returns:         The report.
	:raises DomainException:           If :math:`\\lambda \\le 1`.
	:raises DegenerateSampleException: If fewer than two summaries are given.
	"""
	if not params.Lambda > 1.0:
		raise DomainException("lambda", f"Standardization needs lambda > 1, but got {params.Lambda}.")

	theory = TheoryValues.FromParameters(params)
	return normalityReport([summary.L1 for summary in summaries], theory.RhoK * params.N, theory.SigmaSquared)
