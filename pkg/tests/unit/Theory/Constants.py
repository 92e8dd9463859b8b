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
"""Unit tests for the limit constants."""
from math     import exp, log, sqrt
from unittest import TestCase

from pyHyperLab.Exceptions import DomainException
from pyHyperLab.Theory     import ModelParams, TheoryValues, dualLambda, rhoK, rhoPoisson, rhoPoissonSeries
from pyHyperLab.Theory     import sigmaSquared, sigmaSquaredSeries


if __name__ == "__main__":  # pragma: no cover
	print("ERROR: you called a testcase declaration file as an executable module.")
	print("Use: 'python -m unittest <testcase module>'")
	exit(1)


LAMBDAS = (1.0 + 1e-7, 1.0 + 1e-5, 1.001, 1.01, 1.1, 1.3, 1.5, 1.9, 2.0, 2.5, 3.0, 5.0, 10.0, 30.0, 100.0)


class DualParameter(TestCase):
	def test_Critical(self) -> None:
		self.assertEqual(1.0, dualLambda(1.0))
		self.assertEqual(0.0, rhoPoisson(1.0))
		self.assertEqual(0.0, rhoK(1.0, 3))

	def test_KnownValue(self) -> None:
		self.assertAlmostEqual(0.7968121300200199, rhoPoisson(2.0), places=9)
		self.assertAlmostEqual(2.0 * (1.0 - 0.7968121300200199), dualLambda(2.0), places=9)

	def test_DualEquation(self) -> None:
		for lambda_ in LAMBDAS:
			with self.subTest(lambda_=lambda_):
				lambdaStar = dualLambda(lambda_)
				self.assertGreater(lambdaStar, 0.0)
				self.assertLess(lambdaStar, 1.0)

				# compare logarithms of x e^-x
				residual = (log(lambdaStar) - lambdaStar) - (log(lambda_) - lambda_)
				self.assertLess(abs(residual), 1e-12)

	def test_SurvivalEquation(self) -> None:
		for lambda_ in LAMBDAS:
			with self.subTest(lambda_=lambda_):
				rho = rhoPoisson(lambda_)
				self.assertGreater(rho, 0.0)
				self.assertLess(abs((1.0 - rho) - exp(-lambda_ * rho)), 1e-12)
				self.assertAlmostEqual(1.0 - dualLambda(lambda_) / lambda_, rho, delta=1e-12)

	def test_RelativePrecisionNearCriticality(self) -> None:
		for lambda_ in (1.0 + 1e-3, 1.0 + 1e-4, 1.0 + 1e-5):
			epsilon = lambda_ - 1.0
			with self.subTest(epsilon=epsilon):
				rho = rhoPoisson(lambda_)
				self.assertLess(abs(rho / rhoPoissonSeries(epsilon) - 1.0), 10 * epsilon ** 3 + 1e-13)

	def test_Monotone(self) -> None:
		values = [rhoPoisson(lambda_) for lambda_ in LAMBDAS]

		self.assertListEqual(sorted(values), values)

	def test_OutOfDomain(self) -> None:
		for lambda_ in (0.5, 100.5, float("inf"), float("nan")):
			with self.subTest(lambda_=lambda_):
				with self.assertRaises(DomainException):
					rhoPoisson(lambda_)
				with self.assertRaises(DomainException):
					dualLambda(lambda_)

		with self.assertRaises(TypeError):
			dualLambda("2.0")


class GiantFraction(TestCase):
	def test_Graph(self) -> None:
		self.assertEqual(rhoPoisson(1.7), rhoK(1.7, 2))

	def test_Hypergraph(self) -> None:
		self.assertAlmostEqual(1.0 - sqrt(1.0 - 0.7968121300200199), rhoK(2.0, 3), places=9)

	def test_Identity(self) -> None:
		for k in (2, 3, 4, 7):
			for lambda_ in (1.01, 1.5, 4.0):
				with self.subTest(k=k, lambda_=lambda_):
					rho = rhoK(lambda_, k)
					self.assertAlmostEqual(rhoPoisson(lambda_), 1.0 - (1.0 - rho) ** (k - 1), delta=1e-12)

	def test_DecreasingInK(self) -> None:
		values = [rhoK(1.5, k) for k in range(2, 8)]

		self.assertListEqual(sorted(values, reverse=True), values)

	def test_InvalidArity(self) -> None:
		with self.assertRaises(DomainException):
			rhoK(1.5, 1)


class Variance(TestCase):
	def test_Graph(self) -> None:
		# for k = 2 the variance reduces to rho (1 - rho) / (1 - lambda*)^2 n
		params = ModelParams(1000, 2, 2.0)
		rho = rhoPoisson(2.0)

		self.assertAlmostEqual(rho * (1.0 - rho) / (1.0 - dualLambda(2.0)) ** 2 * 1000, sigmaSquared(params), delta=1e-9)

	def test_DefinitionForm(self) -> None:
		for k in (3, 4):
			for lambda_ in (1.2, 2.0, 6.0):
				with self.subTest(k=k, lambda_=lambda_):
					params = ModelParams(10_000, k, lambda_)
					rho = rhoK(lambda_, k)
					lambdaStar = dualLambda(lambda_)

					numerator = lambda_ * (1.0 - rho) ** 2 - lambdaStar * (1.0 - rho) + rho * (1.0 - rho)
					expected = numerator / (1.0 - lambdaStar) ** 2 * 10_000
					self.assertAlmostEqual(1.0, sigmaSquared(params) / expected, delta=1e-10)

	def test_Positive(self) -> None:
		for k in (2, 3, 5):
			for lambda_ in LAMBDAS:
				with self.subTest(k=k, lambda_=lambda_):
					self.assertGreater(sigmaSquared(ModelParams(1000, k, lambda_)), 0.0)

	def test_NearCriticalSeries(self) -> None:
		for k in (2, 3, 4, 6):
			for epsilon in (1e-3, 1e-4):
				with self.subTest(k=k, epsilon=epsilon):
					perVertex = sigmaSquared(ModelParams(1000, k, 1.0 + epsilon)) / 1000
					self.assertLess(abs(perVertex - sigmaSquaredSeries(k, epsilon)), 0.1)

	def test_SeriesValues(self) -> None:
		self.assertAlmostEqual(1999.0, sigmaSquaredSeries(3, 1e-3), places=9)
		self.assertAlmostEqual(1996.0, sigmaSquaredSeries(2, 1e-3), places=9)

		with self.assertRaises(DomainException):
			sigmaSquaredSeries(3, 0.0)

	def test_Undefined(self) -> None:
		with self.assertRaises(DomainException):
			sigmaSquared(ModelParams(1000, 3, 1.0))


class Values(TestCase):
	def test_Supercritical(self) -> None:
		params = ModelParams(5000, 3, 2.0)
		values = TheoryValues.FromParameters(params)

		self.assertIs(params, values.Params)
		self.assertEqual(dualLambda(2.0), values.LambdaStar)
		self.assertEqual(rhoPoisson(2.0), values.RhoPoisson)
		self.assertEqual(rhoK(2.0, 3), values.RhoK)
		self.assertEqual(sigmaSquared(params), values.SigmaSquared)
		self.assertAlmostEqual(values.SigmaSquared / 5000, values.SigmaSquaredPerVertex, delta=1e-12)
		self.assertEqual(1.0, values.Epsilon)

	def test_Critical(self) -> None:
		values = TheoryValues.FromParameters(ModelParams(5000, 3, 1.0))

		self.assertIsNone(values.SigmaSquared)
		self.assertIsNone(values.SigmaSquaredPerVertex)
		self.assertEqual(0.0, values.Alpha)
		self.assertIsNone(values.AsDict()["sigma_sq"])

	def test_AsDict(self) -> None:
		values = TheoryValues.FromParameters(ModelParams(1000, 4, 1.5))
		dictionary = values.AsDict()

		self.assertSetEqual(
			{"n", "k", "lambda", "epsilon", "lambda_star", "rho_poisson", "rho_k", "sigma_sq", "sigma_sq_per_n", "alpha"},
			set(dictionary)
		)
		self.assertEqual(values.RhoK, dictionary["rho_k"])

	def test_Subcritical(self) -> None:
		with self.assertRaises(DomainException):
			TheoryValues.FromParameters(ModelParams(1000, 3, 0.8))


class LargeIntensity(TestCase):
	def test_GiantFraction(self) -> None:
		for k in (2, 3, 5):
			with self.subTest(k=k):
				rho = rhoK(80.0, k)
				self.assertGreater(rho, 0.9)
				self.assertLessEqual(rho, 1.0)

	def test_Variance(self) -> None:
		for k in (2, 3, 5):
			with self.subTest(k=k):
				self.assertGreater(sigmaSquared(ModelParams(1000, k, 80.0)), 0.0)
