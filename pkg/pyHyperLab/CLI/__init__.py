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
Command line interface ``hyperlab``.

.. code-block:: text

   hyperlab [-v|-d|-q] theory       [--k 2,3,4] [--lambda 1.1,1.5,2.0] ...
   hyperlab [-v|-d|-q] run          --n 200000 --k 3 --lambda 1.3 --runs 1000 --seed 1 --workers 8
   hyperlab [-v|-d|-q] critical     --n 100000 --k 3 --alpha 0.5 --r 3 [--compare-k2]
   hyperlab [-v|-d|-q] oracle-check --n 100 --k 3 --lambda 1.5 --runs 10000
   hyperlab [-v|-d|-q] trace        --n 100000 --k 3 --lambda 1.3 --seed 7
   hyperlab [-v|-d|-q] diagnostics  --n 10000 --k 3 --lambda 1.5 --runs 1000 --workers 8

Values are resolved from built-in defaults, an optional ``--config`` file and command line flags, where later sources
win. Exit codes:

* ``0`` - all checks passed
* ``1`` - a statistical check failed or the oracle found a mismatch
* ``2`` - usage, configuration or domain error
"""
from argparse                           import Namespace
from pathlib                            import Path
from typing                             import Any, Callable, ClassVar, Dict, NoReturn, Tuple

from pyTooling.Decorators               import export
from pyTooling.Attributes.ArgParse      import ArgParseHelperMixin, DefaultHandler, CommandHandler
from pyTooling.Attributes.ArgParse.Flag import FlagArgument, LongFlag
from pyTooling.Attributes.ArgParse.ValuedFlag import LongValuedFlag
from pyTooling.Configuration            import ConfigurationException
from pyTooling.TerminalUI               import TerminalApplication

from pyHyperLab.Common                  import __issue_tracker__, __version__
from pyHyperLab.Configuration           import ExperimentConfig
from pyHyperLab.Exceptions              import DomainException, ExcursionHorizonException, HyperLabException, OracleMismatchException
from pyHyperLab.CLI.Experiments         import EXIT_FAIL, EXIT_USAGE, EXPERIMENT_COMMANDS


#: Command line flags of all experiments as ``(flag, destination, meta name, help)``; destinations equal configuration keys.
EXPERIMENT_FLAGS: Tuple[Tuple[str, str, str, str], ...] = (
	("--n",                  "n",                  "N",      "Number of vertices."),
	("--k",                  "k",                  "K",      "Edge size (comma-separated list for 'theory')."),
	("--lambda",             "lambda",             "LAMBDA", "Branching intensity (comma-separated list for 'theory')."),
	("--alpha",              "alpha",              "ALPHA",  "Position in the critical window."),
	("--runs",               "runs",               "RUNS",   "Number of independent runs."),
	("--seed",               "seed",               "SEED",   "Master seed (unsigned 64-bit)."),
	("--workers",            "workers",            "COUNT",  "Number of worker processes."),
	("--out",                "out",                "DIR",    "Output directory."),
	("--r",                  "r",                  "R",      "Number of largest components to compare."),
	("--grid-step",          "grid_step",          "STEP",   "Euler step width of excursion simulations."),
	("--horizon",            "horizon",            "TIME",   "Horizon of excursion simulations."),
	("--significance",       "significance",       "LEVEL",  "Significance level of statistical tests."),
	("--variance-tolerance", "variance_tolerance", "TOL",    "Accepted relative deviation of the sample variance."),
	("--unseen-tolerance",   "unseen_tolerance",   "TOL",    "Accepted deviation of U_t from u_t as fraction of n ('diagnostics')."),
)


def _experimentFlags(func: Callable) -> Callable:
	"""Attaches the common experiment flags to a command handler."""
	func = LongFlag("--compare-k2", dest="compare_k2", help="Compare with 2-uniform explorations ('critical').")(func)
	for flag, dest, metaName, help in reversed(EXPERIMENT_FLAGS):
		func = LongValuedFlag(flag, dest=dest, metaName=metaName, help=help)(func)

	return LongValuedFlag("--config", dest="config", metaName="FILE", help="Configuration file with 'key = value' lines.")(func)


@export
class Program(TerminalApplication, ArgParseHelperMixin):
	"""The ``hyperlab`` terminal application."""

	ISSUE_TRACKER_URL: ClassVar[str] = __issue_tracker__

	def __init__(self) -> None:
		TerminalApplication.__init__(self)
		ArgParseHelperMixin.__init__(
			self,
			prog="hyperlab",
			description="Experiments on the size of the largest components of random k-uniform hypergraphs."
		)

	def _Configure(self, args: Namespace) -> None:
		self.Configure(verbose=args.verbose, debug=args.debug, quiet=args.quiet)

	def _Overrides(self, args: Namespace, experiment: str) -> Dict[str, Any]:
		overrides: Dict[str, Any] = {dest: getattr(args, dest) for _, dest, _, _ in EXPERIMENT_FLAGS}
		overrides["experiment"] = experiment
		overrides["compare_k2"] = True if args.compare_k2 else None
		return overrides

	def RunExperiment(self, experiment: str, args: Namespace) -> NoReturn:
		"""
		Resolves the configuration, runs ``experiment`` and exits with its exit code.

		:param experiment: Name of the experiment.
		:param args:       Parsed command line arguments.
		"""
		self._Configure(args)
		self.WriteVerbose(f"hyperlab {__version__}: {experiment}")

		try:
			configFile = None if args.config is None else Path(args.config)
			config = ExperimentConfig.Resolve(self._Overrides(args, experiment), configFile)
			self.WriteDebug(f"configuration: {config.AsDict()}")

			result = EXPERIMENT_COMMANDS[experiment](config, self)
		except (DomainException, ConfigurationException, ExcursionHorizonException) as ex:
			self.WriteError(str(ex))
			self.Exit(EXIT_USAGE)
		except OracleMismatchException as ex:
			self.WriteError(str(ex))
			self.Exit(EXIT_FAIL)
		except HyperLabException as ex:
			self.PrintExceptionBase(ex)
		except Exception as ex:
			self.PrintException(ex)
		else:
			for file in result.Files:
				self.WriteVerbose(f"wrote '{file}'")
			self.Exit(result.ExitCode)

	@DefaultHandler()
	@FlagArgument(short="-v", long="--verbose", dest="verbose", help="Print progress messages.")
	@FlagArgument(short="-d", long="--debug",   dest="debug",   help="Print per-run details.")
	@FlagArgument(short="-q", long="--quiet",   dest="quiet",   help="Print only the verdict.")
	def HandleDefault(self, args: Namespace) -> None:
		self._Configure(args)
		self.MainParser.print_help()
		self.Exit(EXIT_USAGE)

	@CommandHandler("theory", help="Tabulate the limit constants.")
	@_experimentFlags
	def HandleTheory(self, args: Namespace) -> None:
		self.RunExperiment("theory", args)

	@CommandHandler("run", help="Test the normal limit of the largest component in the supercritical regime.")
	@_experimentFlags
	def HandleRun(self, args: Namespace) -> None:
		self.RunExperiment("run", args)

	@CommandHandler("critical", help="Compare the largest components in the critical window with Brownian excursions.")
	@_experimentFlags
	def HandleCritical(self, args: Namespace) -> None:
		self.RunExperiment("critical", args)

	@CommandHandler("oracle-check", help="Check the exploration against union-find on explicit hypergraphs.")
	@_experimentFlags
	def HandleOracleCheck(self, args: Namespace) -> None:
		self.RunExperiment("oracle-check", args)

	@CommandHandler("trace", help="Dump the trajectory of a single exploration.")
	@_experimentFlags
	def HandleTrace(self, args: Namespace) -> None:
		self.RunExperiment("trace", args)

	@CommandHandler("diagnostics", help="Check the unseen-vertex trajectory and the martingale decomposition over many runs.")
	@_experimentFlags
	def HandleDiagnostics(self, args: Namespace) -> None:
		self.RunExperiment("diagnostics", args)


@export
def main() -> NoReturn:  # pragma: no cover
	"""Entry point of the ``hyperlab`` console script."""
	program = Program()
	program.Run()
