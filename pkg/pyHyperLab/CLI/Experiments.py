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
Named experiments wiring theory, exploration, explicit hypergraphs and statistics together.

Each experiment takes a resolved :class:`~pyHyperLab.Configuration.ExperimentConfig` and an optional terminal for
progress messages, writes its CSV and JSON files into the configured output directory and returns an
:class:`ExperimentResult` with the exit code.

Independent runs are distributed to a :class:`multiprocessing.Pool`; results are consumed in submission order, so
written files don't depend on the number of workers. Per-run seeds are derived by
:func:`~pyHyperLab.Common.splitSeed` in these streams:

==========  ===============================================
Stream      Purpose
==========  ===============================================
0           explorations
1           excursion simulations
2           explicit hypergraph samples
3           reference explorations with ``k = 2``
==========  ===============================================
"""
from csv                      import writer
from json                     import dump
from math                     import floor
from multiprocessing          import Pool
from pathlib                  import Path
from typing                   import Any, Callable, Dict, Iterable, Iterator, List, Optional as Nullable, Sequence, Tuple

from numpy                    import abs as np_abs, arange, asarray, count_nonzero, float64, isfinite, isnan, zeros
from pyTooling.Decorators     import export, readonly
from pyTooling.MetaClasses    import ExtendedType
from pyTooling.TerminalUI     import TerminalApplication
from pyTooling.Timer          import Timer

from pyHyperLab.Common                import __version__, splitSeed
from pyHyperLab.Configuration         import ExperimentConfig
from pyHyperLab.Exceptions            import DomainException, OracleMismatchException
from pyHyperLab.Explorer              import conditionalVariances, decompose, exploreGiven, exploreImplicit, giantExitTime, writeTraceCSV
from pyHyperLab.Hypergraph            import components, sample
from pyHyperLab.Statistics            import NormalityReport, RunSummary, chiSquareHistograms, criticalCompare, martingaleScores, standardize
from pyHyperLab.Statistics.Excursion  import simulateExcursions
from pyHyperLab.Theory                import ModelParams, TheoryValues, uTrajectory


EXIT_PASS =  0  #: All checks passed.
EXIT_FAIL =  1  #: A statistical check failed or the oracle found a mismatch.
EXIT_USAGE = 2  #: Usage, configuration or domain error.

STREAM_EXPLORATION = 0
STREAM_EXCURSION =   1
STREAM_HYPERGRAPH =  2
STREAM_REFERENCE =   3

ORACLE_MAX_N = 200         #: Largest ``n`` accepted by the oracle check.
MEANINGFUL_LIMIT = 50.0    #: ``run`` warns if :math:`(\lambda-1)^3 n` is below this value.
MEAN_TOLERANCE = 4.0       #: Accepted distance of the sample mean in standard errors.
SECOND_LARGEST_FRACTION = 0.01
SECOND_LARGEST_QUANTILE = 0.99
UNSEEN_QUANTILE = 0.95       #: Fraction of runs whose unseen count must stay within the tolerance.
MARTINGALE_QUANTILE = 0.99   #: Fraction of scored steps whose mean martingale difference must be within tolerance.
MINIMUM_STEP_VARIANCE = 25.0 #: Smallest summed conditional variance of a scored step.
WC_LIMIT = 10.0              #: Accepted ratio of the wc bound to t*C_t/n.
SCHEMA_LINE = "# schema=1"


@export
class ExperimentResult(metaclass=ExtendedType, slots=True):
	"""Outcome of an experiment: the exit code, the report written as JSON (if any) and all written files."""

	_exitCode: int
	_report:   Dict[str, Any]
	_files:    List[Path]

	def __init__(self, exitCode: int, report: Dict[str, Any], files: Iterable[Path]) -> None:
		self._exitCode = exitCode
		self._report = report
		self._files = list(files)

	@readonly
	def ExitCode(self) -> int:
		return self._exitCode

	@readonly
	def Passed(self) -> bool:
		return self._exitCode == EXIT_PASS

	@readonly
	def Report(self) -> Dict[str, Any]:
		return self._report

	@readonly
	def Files(self) -> List[Path]:
		return self._files


def _iterateRuns(function: Callable[[Tuple], Any], items: Sequence[Tuple], workers: int) -> Iterator[Any]:
	"""Yields ``function`` applied to all items, in a worker pool if ``workers > 1``; results keep the order of ``items``."""
	if workers == 1 or len(items) <= 1:
		for item in items:
			yield function(item)
		return

	chunkSize = max(1, len(items) // (4 * workers))
	with Pool(processes=workers) as pool:
		yield from pool.imap(function, items, chunksize=chunkSize)


def _mapRuns(function: Callable[[Tuple], Any], items: Sequence[Tuple], workers: int) -> List[Any]:
	return list(_iterateRuns(function, items, workers))


def _exploreLargest(item: Tuple[int, int, float, float, int, int]) -> Tuple[int, Tuple[int, ...], int]:
	n, k, lambda_, p, seed, r = item
	trace = exploreImplicit(ModelParams(n, k, lambda_, edgeProbability=p), seed)
	summary = RunSummary.FromSizes(trace.ComponentSizes.tolist(), seed, r)
	return summary.Seed, summary.Largest, summary.ComponentCount


def _simulateExcursion(item: Tuple[float, float, Nullable[float], int, int]) -> Tuple[float, ...]:
	alpha, gridStep, horizon, r, seed = item
	return simulateExcursions(alpha, gridStep, horizon, r, seed).OrderedLengths


def _checkOracle(item: Tuple[int, int, float, float, int, int, int]) -> Tuple[int, bool, int, int]:
	n, k, lambda_, p, index, hypergraphSeed, explorationSeed = item
	hypergraph = sample(n, k, p, hypergraphSeed)
	explored = sorted(exploreGiven(hypergraph).ComponentSizes.tolist(), reverse=True)
	partition = components(hypergraph)

	implicit = exploreImplicit(ModelParams(n, k, lambda_, edgeProbability=p), explorationSeed)
	return index, tuple(explored) == partition.Sizes, partition.Sizes[0], int(implicit.ComponentSizes.max())


def _diagnose(item: Tuple[int, int, float, float, int, int]) -> Tuple[int, float, float, Any, Any]:
	n, k, lambda_, p, seed, last = item
	params = ModelParams(n, k, lambda_, edgeProbability=p)
	trace = exploreImplicit(params, seed)
	decomposition = decompose(trace, params)

	steps = arange(last + 1, dtype=float64)
	unseen = float(np_abs(trace.U[:last + 1] - asarray(uTrajectory(params, steps))).max()) / n

	scale = arange(n + 1, dtype=float64) * trace.C / n
	bounded = (scale > 0.0) & isfinite(decomposition.WcBound)
	wcRatio = float((decomposition.WcBound[bounded] / scale[bounded]).max()) if bounded.any() else 0.0

	return seed, unseen, wcRatio, decomposition.Delta, conditionalVariances(trace, params)


def _explorationItems(params: ModelParams, masterSeed: int, runs: int, r: int, stream: int) -> List[Tuple]:
	return [(params.N, params.K, params.Lambda, params.P, splitSeed(masterSeed, i, stream), r) for i in range(runs)]


def _writeCSV(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
	path.parent.mkdir(parents=True, exist_ok=True)
	with path.open("w", encoding="utf-8", newline="") as file:
		file.write(SCHEMA_LINE + "\n")
		csvWriter = writer(file, lineterminator="\n")
		csvWriter.writerow(header)
		csvWriter.writerows(rows)

	return path


def _writeJSON(path: Path, config: ExperimentConfig, content: Dict[str, Any]) -> Path:
	path.parent.mkdir(parents=True, exist_ok=True)
	document = {"version": __version__, "config": config.AsDict()}
	document.update(content)
	with path.open("w", encoding="utf-8", newline="\n") as file:
		dump(document, file, indent=2)
		file.write("\n")

	return path


def _timed(terminal: Nullable[TerminalApplication], label: str, function: Callable[[], Any]) -> Any:
	with Timer() as timer:
		result = function()

	if terminal is not None:
		terminal.WriteVerbose(f"{label} took {timer.Duration:.3f} s")
	return result


def _write(terminal: Nullable[TerminalApplication], method: str, message: str) -> None:
	if terminal is not None:
		getattr(terminal, method)(message)


@export
def cmdTheory(config: ExperimentConfig, terminal: Nullable[TerminalApplication] = None) -> ExperimentResult:
	"""
	Tabulates the limit constants for all combinations of the configured ``k`` and ``lambda`` values.

	Writes ``theory.csv``; an undefined variance (:math:`\\lambda = 1`) is written as ``undefined``.
	"""
	header = ("n", "k", "lambda", "lambda_star", "rho_poisson", "rho_k", "sigma_sq_per_n", "alpha")
	rows = []
	for k in config.Ks:
		for lambda_ in config.Lambdas:
			values = TheoryValues.FromParameters(ModelParams(config.N, k, lambda_))
			sigma = "undefined" if values.SigmaSquaredPerVertex is None else values.SigmaSquaredPerVertex
			rows.append((config.N, k, lambda_, values.LambdaStar, values.RhoPoisson, values.RhoK, sigma, values.Alpha))

	_write(terminal, "WriteNormal", "  ".join(f"{column:>14}" for column in header))
	for row in rows:
		_write(terminal, "WriteNormal", "  ".join(f"{value:>14}" if isinstance(value, (int, str)) else f"{value:>14.8g}" for value in row))

	files = [_writeCSV(config.Out / "theory.csv", header, rows)]
	return ExperimentResult(EXIT_PASS, {"rows": [dict(zip(header, row)) for row in rows]}, files)


@export
def cmdRun(config: ExperimentConfig, terminal: Nullable[TerminalApplication] = None) -> ExperimentResult:
	"""
	Runs independent explorations in the supercritical regime and tests the standardized giant component sizes.

	Writes ``runs.csv`` (``seed,L1,L2,n_components``) and ``report.json``. The checks are: sample mean within
	``4`` standard errors of :math:`\\rho_{k,\\lambda} n`, variance ratio within the tolerance, KS p-value above the
	significance level and :math:`L_2 \\le 0.01 n` in at least 99 % of all runs.
	"""
	params = config.Params()
	if not params.Lambda > 1.0:
		raise DomainException("lambda", f"Experiment 'run' needs lambda > 1, but got {params.Lambda}.")
	elif params.Meaningfulness < MEANINGFUL_LIMIT:
		_write(terminal, "WriteWarning", f"(lambda-1)^3 n = {params.Meaningfulness:.4g} is below {MEANINGFUL_LIMIT:g}; the normal limit may not be reached.")

	items = _explorationItems(params, config.Seed, config.Runs, 2, STREAM_EXPLORATION)
	results = _timed(terminal, f"{config.Runs} explorations", lambda: _mapRuns(_exploreLargest, items, config.Workers))
	summaries = [RunSummary(seed, largest, count) for seed, largest, count in results]
	for summary in summaries:
		_write(terminal, "WriteDebug", repr(summary))

	files = [_writeCSV(config.Out / "runs.csv", ("seed", "L1", "L2", "n_components"), (summary.ToRow() for summary in summaries))]

	theory = TheoryValues.FromParameters(params)
	if len(summaries) < 2:
		report = NormalityReport.Insufficient([summary.L1 for summary in summaries], theory.RhoK * params.N, theory.SigmaSquared)
		_write(terminal, "WriteWarning", "A single run is insufficient for a normality verdict.")
		files.append(_writeJSON(config.Out / "report.json", config, {"report": report.ToDict(), "checks": {}, "passed": None}))
		return ExperimentResult(EXIT_PASS, {"report": report.ToDict()}, files)

	report = standardize(summaries, params)
	smallSecond = sum(1 for summary in summaries if summary.L2 <= SECOND_LARGEST_FRACTION * params.N) / len(summaries)
	checks = {
		"mean":           abs(report.MeanDeviation) <= MEAN_TOLERANCE,
		"variance_ratio": abs(report.VarianceRatio - 1.0) <= config.VarianceTolerance,
		"ks":             report.KSPValue > config.Significance,
		"second_largest": smallSecond >= SECOND_LARGEST_QUANTILE,
	}
	passed = all(checks.values())

	_write(terminal, "WriteNormal", f"sample mean {report.SampleMean:.2f} vs. rho*n {report.TheoryMean:.2f} ({report.MeanDeviation:+.2f} standard errors)")
	_write(terminal, "WriteNormal", f"variance ratio {report.VarianceRatio:.4f}, KS D={report.KSStatistic:.4f} p={report.KSPValue:.4g}")
	_write(terminal, "WriteNormal", f"L2 <= {SECOND_LARGEST_FRACTION:g}n in {smallSecond:.1%} of runs")
	_write(terminal, "WriteQuiet", f"run: {'PASSED' if passed else 'FAILED'}")

	content = {"report": report.ToDict(), "checks": checks, "second_largest_fraction": smallSecond, "passed": passed}
	files.append(_writeJSON(config.Out / "report.json", config, content))
	return ExperimentResult(EXIT_PASS if passed else EXIT_FAIL, content, files)


def _rescale(sizes: Sequence[int], params: ModelParams) -> List[float]:
	factor = (params.K - 1) ** (1 / 3) * params.N ** (-2 / 3)
	return [size * factor for size in sizes]


@export
def cmdCritical(config: ExperimentConfig, terminal: Nullable[TerminalApplication] = None) -> ExperimentResult:
	"""
	Compares the rescaled largest component sizes inside the critical window with Brownian excursion lengths.

	:math:`\\lambda` is derived from ``alpha``. For every order :math:`i \\le r`, :math:`(k-1)^{1/3} n^{-2/3} L_i` is
	compared with the :math:`i`-th longest excursion of :math:`W^\\alpha` by a two-sample KS test. With ``compare_k2``
	the rescaled :math:`L_1` is additionally compared with explorations for ``k = 2``.

	Writes ``critical.csv``, ``excursions.csv`` and ``critical.json``.
	"""
	params = config.Params()
	r = config.R
	items = _explorationItems(params, config.Seed, config.Runs, max(r, 2), STREAM_EXPLORATION)
	results = _timed(terminal, f"{config.Runs} explorations", lambda: _mapRuns(_exploreLargest, items, config.Workers))
	largest = [result[1][:r] for result in results]
	scaled = [_rescale(sizes, params) for sizes in largest]

	excursionItems = [(config.Alpha, config.GridStep, config.Horizon, r, splitSeed(config.Seed, i, STREAM_EXCURSION)) for i in range(config.Runs)]
	excursions = _timed(terminal, f"{config.Runs} excursion simulations", lambda: _mapRuns(_simulateExcursion, excursionItems, config.Workers))

	comparisons = []
	for order in range(r):
		statistic, pValue = criticalCompare([sizes[order] for sizes in scaled], [lengths[order] for lengths in excursions])
		comparisons.append({"order": order + 1, "statistic": statistic, "p_value": pValue, "passed": pValue > config.Significance})
		_write(terminal, "WriteNormal", f"L{order + 1} vs. excursion {order + 1}: D={statistic:.4f} p={pValue:.4g}")

	content: Dict[str, Any] = {"lambda": params.Lambda, "comparisons": comparisons}
	passed = all(comparison["passed"] for comparison in comparisons)

	if config.CompareK2:
		if params.K == 2:
			_write(terminal, "WriteWarning", "Comparison with k = 2 skipped, because k is 2.")
		else:
			reference = ModelParams.Critical(params.N, 2, config.Alpha)
			referenceItems = _explorationItems(reference, config.Seed, config.Runs, 2, STREAM_REFERENCE)
			referenceResults = _timed(terminal, f"{config.Runs} explorations for k=2", lambda: _mapRuns(_exploreLargest, referenceItems, config.Workers))
			referenceScaled = [_rescale(result[1][:1], reference)[0] for result in referenceResults]

			statistic, pValue = criticalCompare([sizes[0] for sizes in scaled], referenceScaled)
			content["compare_k2"] = {"statistic": statistic, "p_value": pValue, "passed": pValue > config.Significance}
			passed = passed and pValue > config.Significance
			_write(terminal, "WriteNormal", f"L1 vs. L1 for k=2: D={statistic:.4f} p={pValue:.4g}")

	content["passed"] = passed
	_write(terminal, "WriteQuiet", f"critical: {'PASSED' if passed else 'FAILED'}")

	order = range(1, r + 1)
	files = [
		_writeCSV(
			config.Out / "critical.csv",
			["seed"] + [f"L{i}" for i in order] + [f"scaled_L{i}" for i in order],
			([result[0]] + list(sizes) + values for result, sizes, values in zip(results, largest, scaled))
		),
		_writeCSV(
			config.Out / "excursions.csv",
			["seed"] + [f"gamma_{i}" for i in order],
			([item[4]] + list(lengths) for item, lengths in zip(excursionItems, excursions))
		),
		_writeJSON(config.Out / "critical.json", config, content)
	]
	return ExperimentResult(EXIT_PASS if passed else EXIT_FAIL, content, files)


@export
def cmdOracleCheck(config: ExperimentConfig, terminal: Nullable[TerminalApplication] = None) -> ExperimentResult:
	"""
	Checks the exploration against union-find on explicitly sampled hypergraphs.

	For every run, a hypergraph is sampled and the component sizes found by :func:`~pyHyperLab.Explorer.exploreGiven`
	and by :func:`~pyHyperLab.Hypergraph.components` must be identical. Additionally, the histogram of :math:`L_1` in
	implicit explorations is compared with the explicit one by a chi-square test.

	Writes ``oracle.json``. A mismatching hypergraph is written to ``mismatch-<seed>.txt``.

	:raises OracleMismatchException: If exploration and union-find disagree.
	"""
	params = config.Params()
	if params.N > ORACLE_MAX_N:
		raise DomainException("n", f"{params.N} is larger than {ORACLE_MAX_N} for experiment 'oracle-check'.")

	items = [
		(params.N, params.K, params.Lambda, params.P, i, splitSeed(config.Seed, i, STREAM_HYPERGRAPH), splitSeed(config.Seed, i, STREAM_EXPLORATION))
		for i in range(config.Runs)
	]
	results = _timed(terminal, f"{config.Runs} oracle checks", lambda: _mapRuns(_checkOracle, items, config.Workers))

	for index, match, _, _ in results:
		if not match:
			seed = items[index][5]
			hypergraph = sample(params.N, params.K, params.P, seed)
			dumpFile = config.Out / f"mismatch-{seed}.txt"
			dumpFile.parent.mkdir(parents=True, exist_ok=True)
			hypergraph.Write(dumpFile)
			_write(terminal, "WriteError", f"Mismatch for hypergraph seed {seed}; hypergraph written to '{dumpFile}'.")
			raise OracleMismatchException(seed, hypergraph, f"Exploration and union-find disagree for hypergraph seed {seed} (see '{dumpFile}').")

	explicit = [result[2] for result in results]
	implicit = [result[3] for result in results]
	statistic, pValue = chiSquareHistograms(implicit, explicit, binWidth=2)
	passed = pValue > config.Significance

	_write(terminal, "WriteNormal", f"{len(results)} hypergraphs, 0 mismatches")
	_write(terminal, "WriteNormal", f"L1 histograms implicit vs. explicit: chi2={statistic:.4f} p={pValue:.4g}")
	_write(terminal, "WriteQuiet", f"oracle-check: {'PASSED' if passed else 'FAILED'}")

	content = {"mismatches": 0, "chi_square": {"statistic": statistic, "p_value": pValue}, "passed": passed}
	files = [_writeJSON(config.Out / "oracle.json", config, content)]
	return ExperimentResult(EXIT_PASS if passed else EXIT_FAIL, content, files)


@export
def cmdTrace(config: ExperimentConfig, terminal: Nullable[TerminalApplication] = None) -> ExperimentResult:
	"""
	Explores a single hypergraph with the configured seed and dumps the trajectory.

	Writes ``trace.csv`` with the columns ``t,eta,A,U,C,X,x_t,u_t,Xtilde,wc_bound``. For :math:`\\lambda > 1` the
	largest deviation of :math:`U_t` from :math:`u_t` up to :math:`\\rho_{k,\\lambda} n` and the observed and predicted
	exit time of the giant component are reported.
	"""
	params = config.Params()
	trace = _timed(terminal, "exploration", lambda: exploreImplicit(params, config.Seed))

	config.Out.mkdir(parents=True, exist_ok=True)
	files = [config.Out / "trace.csv"]
	writeTraceCSV(files[0], trace, params)

	content: Dict[str, Any] = {"components": trace.ComponentCount, "largest": trace.LargestSizes(1)[0]}
	if params.Lambda > 1.0:
		theory = TheoryValues.FromParameters(params)
		last = int(floor(theory.RhoK * params.N))
		steps = arange(last + 1, dtype=float64)
		deviation = float(np_abs(trace.U[:last + 1] - asarray(uTrajectory(params, steps))).max())
		observed, predicted = giantExitTime(trace, decompose(trace, params), params)

		content.update({"max_unseen_deviation": deviation, "giant_exit_observed": observed, "giant_exit_predicted": predicted})
		_write(terminal, "WriteNormal", f"max |U_t - u_t| for t <= {last}: {deviation:.2f} ({deviation / params.N:.4%} of n)")
		_write(terminal, "WriteNormal", f"giant component left at t={observed}, predicted t={predicted:.1f}")

	_write(terminal, "WriteNormal", f"trace written to '{files[0]}'")
	return ExperimentResult(EXIT_PASS, content, files)


@export
def cmdDiagnostics(config: ExperimentConfig, terminal: Nullable[TerminalApplication] = None) -> ExperimentResult:
	"""
	Checks the exploration against its deterministic trajectory and its martingale decomposition over many runs.

	Writes ``diagnostics.csv`` (``seed,max_unseen_deviation,wc_ratio``), ``steps.csv``
	(``t,mean_delta,stderr,score``) and ``diagnostics.json``. The checks are:

	* for :math:`\\lambda > 1`, :math:`\\max_{t \\le \\rho_{k,\\lambda} n} |U_t - u_t| / n` is within the unseen tolerance
	  in at least 95 % of all runs,
	* the mean of :math:`\\Delta_t` over all runs is within ``4`` standard errors of ``0`` for at least 99 % of all scored
	  steps, and
	* :math:`|X_t - \\tilde{X}_t| \\le 10 \\, t C_t / n` in all runs.

	Standard errors use the exact conditional variances. Late steps, where almost no vertex is activated in any run,
	have a summed variance below :data:`MINIMUM_STEP_VARIANCE` and are not scored.
	"""
	params = config.Params()
	n = params.N
	last = int(floor(TheoryValues.FromParameters(params).RhoK * n)) if params.Lambda > 1.0 else 0

	deltaSums = zeros(n, dtype=float64)
	varianceSums = zeros(n, dtype=float64)
	rows: List[Tuple[int, float, float]] = []
	items = _explorationItems(params, config.Seed, config.Runs, last, STREAM_EXPLORATION)
	with Timer() as timer:
		for seed, unseen, wcRatio, delta, variances in _iterateRuns(_diagnose, items, config.Workers):
			deltaSums += delta
			varianceSums += variances
			rows.append((seed, unseen, wcRatio))
			_write(terminal, "WriteDebug", f"seed={seed}: max |U_t - u_t|/n={unseen:.5f}, wc ratio={wcRatio:.3f}")
	_write(terminal, "WriteVerbose", f"{config.Runs} explorations took {timer.Duration:.3f} s")

	scores = martingaleScores(deltaSums, varianceSums, MINIMUM_STEP_VARIANCE)
	scored = ~isnan(scores)
	scoredSteps = int(count_nonzero(scored))
	runs = len(rows)

	withinUnseen = sum(1 for _, unseen, _ in rows if unseen <= config.UnseenTolerance) / runs
	maxWcRatio = max(wcRatio for _, _, wcRatio in rows)
	checks: Dict[str, Nullable[bool]] = {
		"unseen":     withinUnseen >= UNSEEN_QUANTILE if params.Lambda > 1.0 else None,
		"martingale": None,
		"wc_bound":   maxWcRatio <= WC_LIMIT,
	}
	withinMartingale = None
	if scoredSteps > 0:
		withinMartingale = int(count_nonzero(np_abs(scores[scored]) <= MEAN_TOLERANCE)) / scoredSteps
		checks["martingale"] = withinMartingale >= MARTINGALE_QUANTILE
	else:
		_write(terminal, "WriteWarning", f"No step reaches a summed variance of {MINIMUM_STEP_VARIANCE:g}; increase the number of runs.")
	passed = all(check is not False for check in checks.values())

	files = [_writeCSV(config.Out / "diagnostics.csv", ("seed", "max_unseen_deviation", "wc_ratio"), rows)]
	stderr = varianceSums ** 0.5 / runs
	files.append(_writeCSV(
		config.Out / "steps.csv",
		("t", "mean_delta", "stderr", "score"),
		((t + 1, deltaSums[t] / runs, stderr[t], "" if isnan(scores[t]) else scores[t]) for t in range(n))
	))

	if checks["unseen"] is not None:
		_write(terminal, "WriteNormal", f"max |U_t - u_t| <= {config.UnseenTolerance:g}n for t <= {last} in {withinUnseen:.1%} of runs")
	if withinMartingale is not None:
		_write(terminal, "WriteNormal", f"mean Delta_t within {MEAN_TOLERANCE:g} stderr for {withinMartingale:.2%} of {scoredSteps} scored steps")
	_write(terminal, "WriteNormal", f"largest |X_t - Xtilde_t| / (t C_t / n) is {maxWcRatio:.3f}")
	_write(terminal, "WriteQuiet", f"diagnostics: {'PASSED' if passed else 'FAILED'}")

	content = {
		"runs":                runs,
		"unseen_fraction":     withinUnseen,
		"scored_steps":        scoredSteps,
		"martingale_fraction": withinMartingale,
		"max_wc_ratio":        maxWcRatio,
		"checks":              checks,
		"passed":              passed,
	}
	files.append(_writeJSON(config.Out / "diagnostics.json", config, content))
	return ExperimentResult(EXIT_PASS if passed else EXIT_FAIL, content, files)


EXPERIMENT_COMMANDS: Dict[str, Callable[[ExperimentConfig, Nullable[TerminalApplication]], ExperimentResult]] = {
	"theory":       cmdTheory,
	"run":          cmdRun,
	"critical":     cmdCritical,
	"oracle-check": cmdOracleCheck,
	"trace":        cmdTrace,
	"diagnostics":  cmdDiagnostics,
}  #: Experiment functions by experiment name.
