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
"""Unit tests for the drift-martingale decomposition and the trace export."""
from math     import floor, sqrt
from pathlib  import Path
from tempfile import TemporaryDirectory
from unittest import TestCase

from numpy    import abs as np_abs, array, float64, isnan, zeros

from pyHyperLab.Exceptions import DomainException, TraceMismatchException
from pyHyperLab.Hypergraph import Hypergraph
from pyHyperLab.Statistics import martingaleScores
from pyHyperLab.Theory     import ModelParams, rhoK
from pyHyperLab.Explorer   import conditionalMoments, conditionalVariances, decompose, exploreGiven, exploreImplicit
from pyHyperLab.Explorer   import giantExitTime, rescaledWalk, traceRows, writeTraceCSV


if __name__ == "__main__":  # pragma: no cover
	print("ERROR: you called a testcase declaration file as an executable module.")
	print("Use: 'python -m unittest <testcase module>'")
	exit(1)


class Decompose(TestCase):
	def test_NoEdges(self) -> None:
		params = ModelParams(40, 3, 0.0)
		decomposition = decompose(exploreImplicit(params, 0), params)

		self.assertListEqual([-1.0] * 40, decomposition.D.tolist())
		self.assertListEqual([0.0] * 40, decomposition.Delta.tolist())
		self.assertListEqual([0.0] * 41, decomposition.S.tolist())
		self.assertListEqual([1.0] * 41, decomposition.Beta.tolist())
		self.assertListEqual([0.0] * 41, decomposition.WcBound.tolist())

	def test_Identity(self) -> None:
		params = ModelParams(500, 3, 1.5)
		trace = exploreImplicit(params, 3)
		decomposition = decompose(trace, params)

		increments = trace.X[1:] - trace.X[:-1]
		for t in range(params.N):
			self.assertAlmostEqual(increments[t], decomposition.D[t] + decomposition.Delta[t], delta=1e-9)

		self.assertEqual(0.0, decomposition.S[0])
		self.assertEqual(0.0, decomposition.Xtilde[0])

	def test_DriftMatchesMoments(self) -> None:
		params = ModelParams(400, 4, 1.8)
		trace = exploreImplicit(params, 5)
		decomposition = decompose(trace, params)

		for t in (0, 1, 10, 100, 250, 398):
			unseenPrime = int(trace.U[t] - (trace.A[t] == 0))
			mean, _ = conditionalMoments(params, t, unseenPrime)
			self.assertAlmostEqual(mean, decomposition.D[t] + 1.0, delta=1e-12)

	def test_Approximation(self) -> None:
		n = 2000
		params = ModelParams(n, 3, 1.5)
		t1 = int(floor(rhoK(1.5, 3) * n))

		for seed in range(3):
			with self.subTest(seed=seed):
				decomposition = decompose(exploreImplicit(params, seed), params)

				self.assertLess(decomposition.WcBound[:t1 + 1].max(), 0.05 * n)

	def test_Mismatch(self) -> None:
		trace = exploreImplicit(ModelParams(50, 3, 1.5), 0)

		with self.assertRaises(TraceMismatchException):
			decompose(trace, ModelParams(60, 3, 1.5))
		with self.assertRaises(TraceMismatchException):
			decompose(trace, ModelParams(50, 4, 1.5))


class Moments(TestCase):
	def test_Graph(self) -> None:
		params = ModelParams(100, 2, 1.5)
		p = params.P

		mean, variance = conditionalMoments(params, 10, 60)
		self.assertAlmostEqual(60 * p, mean, delta=1e-14)
		self.assertAlmostEqual(60 * p * (1.0 - p), variance, delta=1e-14)

	def test_Bernoulli(self) -> None:
		params = ModelParams(100, 3, 1.5)

		mean, variance = conditionalMoments(params, 20, 1)
		self.assertAlmostEqual(mean * (1.0 - mean), variance, delta=1e-15)

	def test_NothingUnseen(self) -> None:
		self.assertTupleEqual((0.0, 0.0), conditionalMoments(ModelParams(100, 3, 1.5), 50, 0))

	def test_MonteCarlo(self) -> None:
		n, m = 200, 2000
		params = ModelParams(n, 3, 1.5)
		mean, variance = conditionalMoments(params, 0, n - 1)
		activated = array([exploreImplicit(params, seed).Eta[0] for seed in range(m)], dtype=float64)

		self.assertLess(abs(activated.mean() - mean), 4.0 * sqrt(variance / m))
		self.assertAlmostEqual(1.0, activated.var(ddof=1) / variance, delta=0.25)

	def test_VarianceBound(self) -> None:
		n = 2000
		for k in (2, 3, 4):
			params = ModelParams(n, k, 1.5)
			with self.subTest(k=k):
				largest = max(conditionalMoments(params, t, n - t - 1)[1] for t in range(0, n, 50))
				self.assertLessEqual(largest, 1.5 * (k - 1) * 1.01)

	def test_OutOfRange(self) -> None:
		params = ModelParams(100, 3, 1.5)

		with self.assertRaises(DomainException):
			conditionalMoments(params, 100, 0)
		with self.assertRaises(DomainException):
			conditionalMoments(params, -1, 0)
		with self.assertRaises(DomainException):
			conditionalMoments(params, 10, 90)


class Martingale(TestCase):
	def test_ConditionalVariances(self) -> None:
		for k in (2, 3):
			params = ModelParams(400, k, 1.8)
			trace = exploreImplicit(params, 6)
			variances = conditionalVariances(trace, params)

			with self.subTest(k=k):
				self.assertEqual((400,), variances.shape)
				for t in range(params.N):
					unseenPrime = int(trace.U[t] - (trace.A[t] == 0))
					_, variance = conditionalMoments(params, t, unseenPrime)
					self.assertAlmostEqual(variance, variances[t], delta=1e-9)

	def test_MeanDifferences(self) -> None:
		params = ModelParams(500, 3, 1.5)
		deltaSums = zeros(params.N)
		varianceSums = zeros(params.N)
		for seed in range(300):
			trace = exploreImplicit(params, seed)
			deltaSums += decompose(trace, params).Delta
			varianceSums += conditionalVariances(trace, params)

		scores = martingaleScores(deltaSums, varianceSums)
		scored = scores[~isnan(scores)]

		self.assertGreater(len(scored), 100)
		self.assertGreaterEqual((np_abs(scored) <= 4.0).mean(), 0.99)
		self.assertLess(abs(scored.mean()), 4.0 / sqrt(len(scored)))

	def test_Mismatch(self) -> None:
		trace = exploreImplicit(ModelParams(50, 3, 1.5), 0)

		with self.assertRaises(TraceMismatchException):
			conditionalVariances(trace, ModelParams(50, 2, 1.5))


class Rescaling(TestCase):
	def test_Window(self) -> None:
		params = ModelParams.Critical(8000, 3, 0.0)
		trace = exploreImplicit(params, 1)

		times, values = rescaledWalk(trace, params, 2.0)

		self.assertEqual(len(times), len(values))
		self.assertEqual(0.0, times[0])
		self.assertEqual(0.0, values[0])
		self.assertLessEqual(times[-1], 2.0)
		# time scale is 2**(1/3) / 400
		self.assertEqual(int(floor(2.0 * 400 / 2 ** (1 / 3))) + 1, len(times))

	def test_InvalidHorizon(self) -> None:
		params = ModelParams(100, 3, 1.0)

		with self.assertRaises(DomainException):
			rescaledWalk(exploreImplicit(params, 0), params, 0.0)


class GiantExit(TestCase):
	def test_Prediction(self) -> None:
		n = 3000
		params = ModelParams(n, 3, 2.0)
		trace = exploreImplicit(params, 21)

		observed, predicted = giantExitTime(trace, decompose(trace, params), params)
		self.assertAlmostEqual(observed, predicted, delta=0.05 * n)

	def test_Subcritical(self) -> None:
		params = ModelParams(300, 3, 0.8)
		trace = exploreImplicit(params, 0)

		with self.assertRaises(DomainException):
			giantExitTime(trace, decompose(trace, params), params)


class Export(TestCase):
	def test_Rows(self) -> None:
		trace = exploreGiven(Hypergraph(6, 3, [(1, 2, 3), (3, 4, 5)]))

		columns, rows = traceRows(trace)
		self.assertTupleEqual(("t", "eta", "A", "U", "C", "X"), columns)
		self.assertEqual(7, len(rows))
		self.assertListEqual([0, 0, 0, 6, 0, 0], rows[0])
		self.assertListEqual([1, 2, 2, 3, 1, 1], rows[1])
		self.assertListEqual([6, 0, 0, 0, 2, -2], rows[6])

	def test_ExtendedRows(self) -> None:
		params = ModelParams(200, 3, 1.5)
		columns, rows = traceRows(exploreImplicit(params, 0), params)

		self.assertTupleEqual(("t", "eta", "A", "U", "C", "X", "x_t", "u_t", "Xtilde", "wc_bound"), columns)
		self.assertEqual(201, len(rows))
		self.assertAlmostEqual(0.0, rows[0][6], delta=1e-12)
		self.assertAlmostEqual(200.0, rows[0][7], delta=1e-12)

	def test_WriteCSV(self) -> None:
		params = ModelParams(50, 3, 1.5)
		trace = exploreImplicit(params, 0)

		with TemporaryDirectory() as directory:
			path = Path(directory) / "trace.csv"
			writeTraceCSV(path, trace, params)
			lines = path.read_bytes().decode("utf-8").split("\n")

		self.assertEqual("# schema=1", lines[0])
		self.assertEqual("t,eta,A,U,C,X,x_t,u_t,Xtilde,wc_bound", lines[1])
		self.assertTrue(lines[2].startswith("0,0,0,50,0,0,"))
		self.assertEqual(50 + 3 + 1, len(lines))
		self.assertEqual("", lines[-1])
		self.assertNotIn("\r", "".join(lines))
