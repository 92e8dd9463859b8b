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
"""Unit tests for binomial variates and subset draws."""
from unittest import TestCase

from numpy    import full, int64

from pyHyperLab.Common            import createGenerator
from pyHyperLab.Explorer.Sampling import UniformStream, binomialVariates, drawSubsets


if __name__ == "__main__":  # pragma: no cover
	print("ERROR: you called a testcase declaration file as an executable module.")
	print("Use: 'python -m unittest <testcase module>'")
	exit(1)


class BinomialVariates(TestCase):
	def test_NoSuccess(self) -> None:
		trials = full(10, 1000, dtype=int64)

		self.assertListEqual([0] * 10, binomialVariates(createGenerator(0), trials, 0.0).tolist())

	def test_AllSuccess(self) -> None:
		trials = full(10, 1000, dtype=int64)

		self.assertListEqual([1000] * 10, binomialVariates(createGenerator(0), trials, 1.0).tolist())

	def test_ZeroTrials(self) -> None:
		trials = full(100, 0, dtype=int64)

		self.assertListEqual([0] * 100, binomialVariates(createGenerator(0), trials, 0.5).tolist())

	def test_SmallMean(self) -> None:
		# Binomial(10, 0.3): mean 3, variance 2.1
		values = binomialVariates(createGenerator(3), full(20_000, 10, dtype=int64), 0.3)

		self.assertTrue(((values >= 0) & (values <= 10)).all())
		self.assertAlmostEqual(3.0, values.mean(), delta=0.06)
		self.assertAlmostEqual(2.1, values.var(), delta=0.15)

	def test_HugeTrialCount(self) -> None:
		# Binomial(10**15, 2e-15): mean 2, variance 2
		values = binomialVariates(createGenerator(4), full(20_000, 10**15, dtype=int64), 2e-15)

		self.assertAlmostEqual(2.0, values.mean(), delta=0.06)
		self.assertAlmostEqual(2.0, values.var(), delta=0.15)

	def test_LargeMean(self) -> None:
		# delegated to numpy: mean 500000, standard deviation 500
		values = binomialVariates(createGenerator(5), full(100, 10**6, dtype=int64), 0.5)

		self.assertTrue(((values > 495_000) & (values < 505_000)).all())

	def test_Reproducible(self) -> None:
		trials = full(1000, 50, dtype=int64)

		first = binomialVariates(createGenerator(6), trials, 0.1).tolist()
		second = binomialVariates(createGenerator(6), trials, 0.1).tolist()
		self.assertListEqual(first, second)


class Uniforms(TestCase):
	def test_Range(self) -> None:
		stream = UniformStream(createGenerator(1))

		for _ in range(10_000):
			value = stream.Next()
			self.assertGreaterEqual(value, 0.0)
			self.assertLess(value, 1.0)

		self.assertEqual(10_000, stream.Consumed)

	def test_Index(self) -> None:
		stream = UniformStream(createGenerator(2))
		indices = {stream.Index(5, 3) for _ in range(1000)}

		self.assertSetEqual({5, 6, 7}, indices)


class Subsets(TestCase):
	def test_Rejection(self) -> None:
		stream = UniformStream(createGenerator(7))
		subsets = drawSubsets(stream, 10, 20, 3, 50, 1140)

		self.assertEqual(50, len(subsets))
		self.assertEqual(50, len(set(subsets)))
		for subset in subsets:
			self.assertEqual(3, len(subset))
			self.assertListEqual(sorted(set(subset)), list(subset))
			self.assertTrue(all(10 <= position < 30 for position in subset))

	def test_Enumeration(self) -> None:
		stream = UniformStream(createGenerator(8))
		subsets = drawSubsets(stream, 0, 5, 2, 6, 10)

		self.assertEqual(6, len(subsets))
		self.assertEqual(6, len(set(subsets)))
		for subset in subsets:
			self.assertEqual(2, len(subset))
			self.assertLess(subset[0], subset[1])

	def test_All(self) -> None:
		stream = UniformStream(createGenerator(9))
		subsets = drawSubsets(stream, 2, 4, 2, 6, 6)

		self.assertSetEqual({(2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)}, set(subsets))

	def test_Uniform(self) -> None:
		# single 2-subsets of 4 positions: each of the 6 subsets with probability 1/6
		stream = UniformStream(createGenerator(10))
		counts = {}
		for _ in range(6000):
			subset = drawSubsets(stream, 0, 4, 2, 1, 6)[0]
			counts[subset] = counts.get(subset, 0) + 1

		self.assertEqual(6, len(counts))
		for subset, count in counts.items():
			self.assertGreater(count, 850, f"subset={subset}")
			self.assertLess(count, 1150, f"subset={subset}")
