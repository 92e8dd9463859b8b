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
Explicit k-uniform hypergraphs: sampling of :math:`H_k(n,p)`, colexicographic (un)ranking of k-subsets, a plain text
file format and connected components by union-find.

Vertices are numbered ``1..n``. Two vertices are connected, if they share an edge, i.e. each edge is replaced by a
clique on its k vertices.

.. rubric:: File format

.. code-block:: text

   6 3
   1 2 3
   3 4 5

The first line holds ``n`` and ``k``; every following line holds one edge as space-separated, ascending vertex indices.
"""
from math                  import comb, isfinite, log1p
from pathlib               import Path
from sys                   import version_info
from typing                import Any, Iterable, Iterator, List, Sequence, Tuple

from pyTooling.Decorators  import export, readonly
from pyTooling.MetaClasses import ExtendedType

from pyHyperLab.Common     import binomial, createGenerator
from pyHyperLab.Exceptions import DomainException, HypergraphFormatException, MalformedHypergraphException


Edge = Tuple[int, ...]


@export
class Hypergraph(metaclass=ExtendedType, slots=True):
	"""
	An immutable k-uniform hypergraph on the vertices ``1..n``.

	Edges are stored as ascending tuples in the order they were given. Edges given unsorted are sorted; duplicate
	vertices, vertices outside ``1..n``, a wrong arity or duplicate edges are rejected.
	"""

	_n:     int
	_k:     int
	_edges: Tuple[Edge, ...]

	def __init__(self, n: int, k: int, edges: Iterable[Iterable[int]] = ()) -> None:
		"""
		Initializes a hypergraph.

		:param n:     Number of vertices.
		:param k:     Edge arity.
		:param edges: Iterable of edges, each an iterable of k vertex indices.
		:raises MalformedHypergraphException: If an edge is invalid or duplicated.
		"""
		if isinstance(n, bool) or not isinstance(n, int):
			raise TypeError("Parameter 'n' is not of type 'int'.")
		elif isinstance(k, bool) or not isinstance(k, int):
			raise TypeError("Parameter 'k' is not of type 'int'.")
		elif k < 2:
			raise DomainException("k", f"{k} is smaller than 2.")
		elif n < 1:
			raise DomainException("n", f"{n} is smaller than 1.")

		self._n = n
		self._k = k

		seen = set()
		checked = []
		for index, edge in enumerate(edges):
			edge = self._CheckEdge(tuple(edge))
			if edge in seen:
				ex = MalformedHypergraphException(f"Edge {edge} is contained twice.")
				if version_info >= (3, 11):  # pragma: no cover
					ex.add_note(f"Duplicate found at edge index {index}.")
				raise ex

			seen.add(edge)
			checked.append(edge)

		self._edges = tuple(checked)

	def _CheckEdge(self, edge: Tuple[Any, ...]) -> Edge:
		if len(edge) != self._k:
			raise MalformedHypergraphException(f"Edge {edge} has {len(edge)} vertices, but k={self._k}.")

		for vertex in edge:
			if isinstance(vertex, bool) or not isinstance(vertex, int):
				raise MalformedHypergraphException(f"Edge {edge} contains non-integer vertex '{vertex!r}'.")
			elif not (1 <= vertex <= self._n):
				raise MalformedHypergraphException(f"Edge {edge} contains vertex {vertex} outside of [1, {self._n}].")

		result = tuple(sorted(edge))
		for left, right in zip(result, result[1:]):
			if left == right:
				raise MalformedHypergraphException(f"Edge {edge} contains vertex {left} twice.")

		return result

	@readonly
	def N(self) -> int:
		"""Number of vertices."""
		return self._n

	@readonly
	def K(self) -> int:
		"""Edge arity."""
		return self._k

	@readonly
	def Edges(self) -> Tuple[Edge, ...]:
		"""Edges as ascending vertex tuples."""
		return self._edges

	@readonly
	def EdgeCount(self) -> int:
		return len(self._edges)

	def __len__(self) -> int:
		return len(self._edges)

	def __iter__(self) -> Iterator[Edge]:
		return iter(self._edges)

	def __eq__(self, other: Any) -> bool:
		if isinstance(other, Hypergraph):
			return self._n == other._n and self._k == other._k and set(self._edges) == set(other._edges)

		return NotImplemented

	def __hash__(self) -> int:
		return hash((self._n, self._k, frozenset(self._edges)))

	def __repr__(self) -> str:
		return f"Hypergraph(n={self._n}, k={self._k}, edges={len(self._edges)})"

	@classmethod
	def Parse(cls, text: str) -> "Hypergraph":
		"""
		Parses a hypergraph from text.

		Blank lines are ignored.

		:param text: Text in hypergraph file format.
		:returns:    The parsed hypergraph.
		:raises HypergraphFormatException: If a line is malformed. The exception carries the line number.
		"""
		header = None
		hypergraph = None
		seen = set()
		edges: List[Edge] = []

		for lineNumber, line in enumerate(text.splitlines(), start=1):
			tokens = line.split()
			if len(tokens) == 0:
				continue

			try:
				values = [int(token) for token in tokens]
			except ValueError:
				raise HypergraphFormatException(lineNumber, f"Expected integers, but got '{line.strip()}'.")

			if header is None:
				if len(values) != 2:
					raise HypergraphFormatException(lineNumber, f"Expected header 'n k', but got '{line.strip()}'.")

				header = values
				try:
					hypergraph = cls(values[0], values[1])
				except (DomainException, TypeError) as ex:
					raise HypergraphFormatException(lineNumber, str(ex)) from ex
				continue

			edge = tuple(values)
			if any(left >= right for left, right in zip(edge, edge[1:])):
				raise HypergraphFormatException(lineNumber, f"Vertices of edge '{line.strip()}' aren't strictly ascending.")

			try:
				edge = hypergraph._CheckEdge(edge)
			except MalformedHypergraphException as ex:
				raise HypergraphFormatException(lineNumber, str(ex)) from ex

			if edge in seen:
				raise HypergraphFormatException(lineNumber, f"Edge {edge} is contained twice.")

			seen.add(edge)
			edges.append(edge)

		if header is None:
			raise HypergraphFormatException(1, "Missing header 'n k'.")

		return cls(header[0], header[1], edges)

	@classmethod
	def Read(cls, path: Path) -> "Hypergraph":
		"""
		Reads a hypergraph file.

		:param path: Path to the file.
		:returns:    The parsed hypergraph.
		:raises HypergraphFormatException: If a line is malformed.
		"""
		with Path(path).open("r", encoding="utf-8") as file:
			return cls.Parse(file.read())

	def ToText(self) -> str:
		"""Returns the hypergraph in file format, terminated by a line feed."""
		lines = [f"{self._n} {self._k}"]
		lines.extend(" ".join(str(vertex) for vertex in edge) for edge in self._edges)
		return "\n".join(lines) + "\n"

	def Write(self, path: Path) -> None:
		"""Writes the hypergraph in file format with LF line endings."""
		with Path(path).open("w", encoding="utf-8", newline="\n") as file:
			file.write(self.ToText())


@export
def unrank(rank: int, n: int, k: int) -> Edge:
	"""
	Returns the k-subset of ``1..n`` at position ``rank`` in colexicographic order.

	The inverse of :func:`rank`. Each element is found by binary search for the largest :math:`c` with
	:math:`\\binom{c}{i} \\le` remaining rank.

	:param rank: Colexicographic rank in ``[0, C(n,k))``.
	:param n:    Number of vertices.
	:param k:    Subset size.
	:returns:    Ascending k-tuple of 1-based vertices.
	:raises DomainException: If ``rank`` is out of range.
	"""
	total = binomial(n, k)
	if not (0 <= rank < total):
		raise DomainException("rank", f"{rank} is outside of [0, {total}).")

	subset = [0] * k
	upper = n - 1
	remaining = rank
	for i in range(k, 0, -1):
		low, high = i - 1, upper
		while low < high:
			middle = (low + high + 1) // 2
			if comb(middle, i) <= remaining:
				low = middle
			else:
				high = middle - 1

		subset[i - 1] = low + 1
		remaining -= comb(low, i)
		upper = low - 1

	return tuple(subset)


@export
def rank(subset: Sequence[int], n: int) -> int:
	"""
	Returns the colexicographic rank :math:`\\sum_i \\binom{c_i - 1}{i}` of an ascending subset of ``1..n``.

	:param subset: Ascending tuple of 1-based vertices.
	:param n:      Number of vertices.
	:returns:      Rank in ``[0, C(n, len(subset)))``.
	:raises DomainException: If ``subset`` isn't strictly ascending within ``1..n``.
	"""
	if any(left >= right for left, right in zip(subset, subset[1:])):
		raise DomainException("subset", f"{tuple(subset)} isn't strictly ascending.")
	elif len(subset) > 0 and not (1 <= subset[0] and subset[-1] <= n):
		raise DomainException("subset", f"{tuple(subset)} isn't a subset of [1, {n}].")

	return sum(comb(vertex - 1, i) for i, vertex in enumerate(subset, start=1))


@export
def sample(n: int, k: int, p: float, seed: int) -> Hypergraph:
	"""
	Samples the random hypergraph :math:`H_k(n,p)` explicitly.

	Instead of tossing a coin per k-subset, the gaps between present subsets in colexicographic rank order are drawn
	from a geometric distribution, :math:`\\lfloor \\log(1-u) / \\log(1-p) \\rfloor`, and the ranks are unranked. The
	runtime is proportional to the number of edges.

	:param n:    Number of vertices.
	:param k:    Edge arity.
	:param p:    Edge probability in ``[0, 1]``.
	:param seed: Unsigned 64-bit seed.
	:returns:    The sampled hypergraph with edges in ascending colexicographic order.
	:raises BinomialOverflowException: If :math:`\\binom{n}{k}` exceeds the 64-bit integer range.
	:raises DomainException:           If ``p`` isn't a probability.
	"""
	if isinstance(p, bool) or not isinstance(p, (int, float)):
		raise TypeError("Parameter 'p' is not of type 'float'.")
	elif not isfinite(p) or not (0.0 <= p <= 1.0):
		raise DomainException("p", f"{p} is not a probability.")

	total = binomial(n, k)
	if p == 0.0:
		return Hypergraph(n, k)
	elif p == 1.0:
		return Hypergraph(n, k, (unrank(r, n, k) for r in range(total)))

	generator = createGenerator(seed)
	logQ = log1p(-p)
	position = -1
	edges = []
	while True:
		skip = log1p(-generator.random()) / logQ
		# skip may exceed the int64 range
		if skip >= total - 1 - position:
			break

		position += int(skip) + 1
		edges.append(unrank(position, n, k))

	return Hypergraph(n, k, edges)


@export
class DisjointSet(metaclass=ExtendedType, slots=True):
	"""
	Union-find over the integers ``0..count-1`` with path halving and union by size.
	"""

	_parent: List[int]
	_size:   List[int]
	_count:  int

	def __init__(self, count: int) -> None:
		self._parent = list(range(count))
		self._size = [1] * count
		self._count = count

	@readonly
	def Count(self) -> int:
		"""Number of disjoint sets."""
		return self._count

	def __len__(self) -> int:
		return len(self._parent)

	def Find(self, element: int) -> int:
		"""Returns the root of ``element``'s set."""
		parent = self._parent
		while parent[element] != element:
			parent[element] = parent[parent[element]]
			element = parent[element]

		return element

	def Union(self, first: int, second: int) -> bool:
		"""
		Merges the sets of ``first`` and ``second``.

		:returns: ``True``, if two different sets were merged.
		"""
		first = self.Find(first)
		second = self.Find(second)
		if first == second:
			return False

		if self._size[first] < self._size[second]:
			first, second = second, first

		self._parent[second] = first
		self._size[first] += self._size[second]
		self._count -= 1
		return True

	def Size(self, element: int) -> int:
		"""Returns the size of ``element``'s set."""
		return self._size[self.Find(element)]


@export
class ComponentPartition(metaclass=ExtendedType, slots=True):
	"""
	Connected components of a hypergraph.

	Every vertex is labeled with the smallest vertex of its component, so labels don't depend on the order of edges.
	"""

	_sizes:  Tuple[int, ...]
	_labels: Tuple[int, ...]

	def __init__(self, sizes: Tuple[int, ...], labels: Tuple[int, ...]) -> None:
		self._sizes = sizes
		self._labels = labels

	@readonly
	def Sizes(self) -> Tuple[int, ...]:
		"""Component sizes sorted descending."""
		return self._sizes

	@readonly
	def Labels(self) -> Tuple[int, ...]:
		"""Label of vertex ``v`` at index ``v - 1``."""
		return self._labels

	@readonly
	def Count(self) -> int:
		return len(self._sizes)

	def Label(self, vertex: int) -> int:
		"""Returns the label of a 1-based vertex."""
		return self._labels[vertex - 1]

	def __repr__(self) -> str:
		return f"ComponentPartition(sizes={self._sizes})"


@export
def components(hypergraph: Hypergraph) -> ComponentPartition:
	"""
	Computes the connected components of a hypergraph by union-find over the vertices of every edge.

	:param hypergraph: The hypergraph.
	:returns:          Component sizes (descending) and a label per vertex.
	"""
	n = hypergraph.N
	disjointSet = DisjointSet(n)
	for edge in hypergraph.Edges:
		first = edge[0] - 1
		for vertex in edge[1:]:
			disjointSet.Union(first, vertex - 1)

	rootLabels = {}
	labels = []
	for vertex in range(n):
		root = disjointSet.Find(vertex)
		labels.append(rootLabels.setdefault(root, vertex + 1))

	sizes = sorted((disjointSet.Size(root) for root in rootLabels), reverse=True)
	return ComponentPartition(tuple(sizes), tuple(labels))
