"""McKay graphs, the classical Chern-character comparison map, and the
conjectured root-of-unity map between the two degree-2 spaces.

The A_n McKay graph is computed honestly from the character theory of the
cyclic group Z_{n+1}: with Q the 2-dimensional representation spanned by the
characters l -> zeta^l and l -> zeta^-l, the edge multiplicity a_{ij} is the
multiplicity of lambda_i inside Q (x) lambda_j, found by an exact character
inner product in Q(zeta_{n+1}).  The D and E graphs ship as static
classification data (their product tables are never built here).

Two linear maps between the span of E_1..E_n and the span of e_1..e_n are
provided:

* `chtd_map(n)` -- the K-theoretic comparison E_m -> sum_l
  zeta^{-lm}/(2 - zeta^l - zeta^-l) e_l derived from Chern character and
  Todd class.  It matches the graphs but is NOT a ring map.
* `bgp_map(n, m_root)` -- E_l -> sum_k zeta^{lk} (zeta^k + zeta^-k - 2)^{1/2}
  e_k with zeta = exp(2 pi i m_root/(n+1)) and the branch-resolved square
  root of `exactnum.branch_sqrt`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import linalg
from .exactnum import Cyclotomic, InvalidRoot, branch_sqrt, root_of_unity


@dataclass(frozen=True)
class McKayGraph:
    group_label: str
    vertices: tuple            # (name, dimension) pairs
    adjacency: tuple           # symmetric integer matrix, rows as tuples
    reduced: bool

    @property
    def size(self) -> int:
        return len(self.vertices)

    def edges(self):
        out = []
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if self.adjacency[i][j]:
                    out.append((i, j, self.adjacency[i][j]))
        return out

    def degree_sequence(self):
        return tuple(sum(row) for row in self.adjacency)

    def to_json(self):
        return {"group": self.group_label, "reduced": self.reduced,
                "vertices": [{"name": n, "dim": d}
                             for n, d in self.vertices],
                "adjacency": [list(r) for r in self.adjacency]}

    def to_graphviz(self) -> str:
        lines = ["graph mckay {"]
        for name, dim in self.vertices:
            lines.append(f'  "{name}" [label="{name} (dim {dim})"];')
        for i, j, mult in self.edges():
            for _ in range(mult):
                lines.append(f'  "{self.vertices[i][0]}" -- '
                             f'"{self.vertices[j][0]}";')
        lines.append("}")
        return "\n".join(lines)


def an_mckay(n: int, reduced: bool = True) -> McKayGraph:
    """McKay graph of the cyclic group Z_{n+1} acting through Q.

    >>> an_mckay(2).adjacency
    ((0, 1), (1, 0))
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    order = n + 1
    zeta = root_of_unity(order, 1)
    labels = list(range(order)) if not reduced else list(range(1, order))
    powers = [zeta ** e for e in range(order)]  # chi_r(g) = powers[r g % o]
    q_char = [powers[g] + powers[-g % order] for g in range(order)]
    adjacency = []
    for i in labels:
        row = []
        for j in labels:
            # <chi_Q * chi_j, chi_i> over the group, exactly;
            # conj(chi_i(g)) = chi_i(-g)
            total = Cyclotomic.zero(order)
            for g in range(order):
                total = total + (q_char[g] * powers[j * g % order]
                                 * powers[-i * g % order])
            value = (total / order).as_fraction()
            assert value.denominator == 1 and value >= 0
            row.append(int(value))
        adjacency.append(tuple(row))
    vertices = tuple((f"lambda_{i}", 1) for i in labels)
    label = f"A_{n}"
    return McKayGraph(label, vertices, tuple(adjacency), reduced)


def _chain(k):
    return tuple(tuple(1 if abs(i - j) == 1 else 0 for j in range(k))
                 for i in range(k))


def _graph_from_edges(k, edges):
    adj = [[0] * k for _ in range(k)]
    for i, j in edges:
        adj[i][j] = adj[j][i] = 1
    return tuple(tuple(r) for r in adj)


def ade_resolution_graph(label: str) -> McKayGraph:
    """Reduced McKay graph = resolution graph for any ADE label.

    A_n graphs are computed from characters; D/E graphs are classification
    data (vertex dimensions are the Dynkin marks of the irreducibles).
    """
    kind, _, num = label.partition("_")
    if kind == "A":
        return an_mckay(int(num))
    if kind == "D":
        n = int(num)
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        # chain 0-1-...-(n-3), fork (n-2), (n-1) both attached to n-3
        edges = [(i, i + 1) for i in range(n - 3)]
        edges += [(n - 3, n - 2), (n - 3, n - 1)]
        dims = (1,) + (2,) * (n - 3) + (1, 1)
        vertices = tuple((f"v{i}", d) for i, d in enumerate(dims))
        return McKayGraph(label, vertices, _graph_from_edges(n, edges), True)
    if kind == "E":
        data = {
            6: ([(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
                (1, 2, 3, 2, 1, 2)),
            7: ([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)],
                (2, 3, 4, 3, 2, 1, 2)),
            8: ([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)],
                (2, 3, 4, 5, 6, 4, 2, 3)),
        }
        num = int(num)
        if num not in data:
            raise ValueError("E label must be E_6, E_7 or E_8")
        edges, dims = data[num]
        vertices = tuple((f"v{i}", d) for i, d in enumerate(dims))
        return McKayGraph(label, vertices,
                          _graph_from_edges(len(dims), edges), True)
    raise ValueError(f"unknown ADE label {label!r}")


def aut_gamma(label: str) -> str:
    """Automorphism group of the reduced McKay graph, as classified."""
    kind, _, num = label.partition("_")
    num = int(num) if num else 0
    if kind == "A":
        return "1" if num == 1 else "Z2"
    if kind == "D":
        if num < 4:
            raise ValueError("D_n needs n >= 4")
        return "S3" if num == 4 else "Z2"
    if kind == "E":
        return {6: "Z2", 7: "1", 8: "1"}[num]
    raise ValueError(f"unknown ADE label {label!r}")


@dataclass(frozen=True)
class LinearMap:
    """A linear map E_l -> sum_k matrix[k][l] e_k with exact entries."""

    n: int
    matrix: tuple  # rows k = e-basis index, columns l = E-basis index

    def column(self, l: int):
        return tuple(self.matrix[k][l - 1] for k in range(self.n))

    def is_invertible(self) -> bool:
        det = linalg.determinant([list(r) for r in self.matrix],
                                 zero=Cyclotomic.zero(1))
        return bool(det)

    def to_json(self):
        return {"n": self.n,
                "matrix": [[c.to_json() for c in row]
                           for row in self.matrix]}

    @classmethod
    def from_json(cls, data) -> "LinearMap":
        matrix = tuple(tuple(Cyclotomic.from_json(c) for c in row)
                       for row in data["matrix"])
        n = data["n"]
        if len(matrix) != n or any(len(r) != n for r in matrix):
            raise ValueError("map matrix must be n x n")
        return cls(n, matrix)

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        one, zero = Cyclotomic.one(1), Cyclotomic.zero(1)
        return cls(n, tuple(tuple(one if i == j else zero
                                  for j in range(n)) for i in range(n)))


def chtd_map(n: int) -> LinearMap:
    """The Chern-character/Todd comparison map, zeta = zeta_{n+1} principal.

    Entry (l, m) is zeta^{-lm}/(2 - zeta^l - zeta^-l); by the worked A_2
    verification this map is not a ring isomorphism.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    zeta = root_of_unity(n + 1, 1)
    rows = []
    for l in range(1, n + 1):
        denom = 2 - zeta ** l - zeta ** (-l)
        rows.append(tuple(zeta ** (-l * m) / denom
                          for m in range(1, n + 1)))
    return LinearMap(n, tuple(rows))


def bgp_map(n: int, m_root: int) -> LinearMap:
    """The conjectured isomorphism at the primitive root zeta^{m_root}.

    Entry (k, l) is zeta^{lk} (zeta^k + zeta^-k - 2)^{1/2}, branch resolved.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    if math.gcd(m_root, n + 1) != 1:
        raise InvalidRoot(
            f"m_root={m_root} is not coprime to {n + 1}")
    conductor = 4 * (n + 1)
    zeta = root_of_unity(conductor, 4 * (m_root % (n + 1)))
    rows = []
    for k in range(1, n + 1):
        root = branch_sqrt(n, m_root, k)
        rows.append(tuple(zeta ** (l * k) * root
                          for l in range(1, n + 1)))
    return LinearMap(n, tuple(rows))
