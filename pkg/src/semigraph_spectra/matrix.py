"""Adjacency, degree, Laplacian and signless Laplacian assembly.

All entries are multiples of 1/4, so matrices are held as int64 arrays of
quarter units and assembled exactly. Floats only appear in ``.real`` and in
quadratic-form evaluation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core import Edge, Semigraph, VertexClass, _member, all_pair_kinds


@dataclass(frozen=True, eq=False)
class SymmetricQMatrix:
    """Dense symmetric matrix whose entries are ``quarters / 4``."""

    quarters: np.ndarray

    def __post_init__(self):
        q = np.array(self.quarters, dtype=np.int64)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {q.shape}")
        if not np.array_equal(q, q.T):
            raise ValueError("matrix is not symmetric")
        q.setflags(write=False)
        object.__setattr__(self, "quarters", q)

    @classmethod
    def from_values(cls, rows: Sequence[Sequence[float | Fraction | int]]) -> "SymmetricQMatrix":
        """Build from values that must be exact multiples of 1/4."""
        q = []
        for row in rows:
            qrow = []
            for x in row:
                f = Fraction(x) * 4
                if f.denominator != 1:
                    raise ValueError(f"{x} is not a multiple of 1/4")
                qrow.append(int(f))
            q.append(qrow)
        return cls(np.array(q, dtype=np.int64).reshape(len(q), -1))

    @property
    def order(self) -> int:
        return self.quarters.shape[0]

    @property
    def real(self) -> np.ndarray:
        return self.quarters / 4.0

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return Fraction(int(self.quarters[ij]), 4)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymmetricQMatrix):
            return NotImplemented
        return np.array_equal(self.quarters, other.quarters)

    def __add__(self, other: "SymmetricQMatrix") -> "SymmetricQMatrix":
        return SymmetricQMatrix(self.quarters + other.quarters)

    def __neg__(self) -> "SymmetricQMatrix":
        return SymmetricQMatrix(-self.quarters)

    def to_fractions(self) -> list[list[Fraction]]:
        return [[Fraction(int(x), 4) for x in row] for row in self.quarters]

    def row_sums(self) -> list[Fraction]:
        return [Fraction(int(s), 4) for s in self.quarters.sum(axis=1)]

    def trace(self) -> Fraction:
        return Fraction(int(np.trace(self.quarters)), 4)


def adjacency(g: Semigraph) -> SymmetricQMatrix:
    q = np.zeros((g.n, g.n), dtype=np.int64)
    for (i, j), kind in all_pair_kinds(g).items():
        q[i, j] = q[j, i] = kind.quarters
    return SymmetricQMatrix(q)


def degrees(g: Semigraph) -> list[Fraction]:
    return adjacency(g).row_sums()


def _with_degree_diagonal(a: SymmetricQMatrix, sign: int) -> SymmetricQMatrix:
    q = sign * a.quarters
    q[np.diag_indices_from(q)] = a.quarters.sum(axis=1)
    return SymmetricQMatrix(q)


def laplacian(g: Semigraph) -> SymmetricQMatrix:
    """``L = D - A``."""
    return _with_degree_diagonal(adjacency(g), -1)


def signless(g: Semigraph) -> SymmetricQMatrix:
    """``Q = D + A``."""
    return _with_degree_diagonal(adjacency(g), 1)


@dataclass(frozen=True)
class EdgeLaplacian:
    """Laplacian of one edge; row ``k`` belongs to vertex ``vertices[k]``."""

    matrix: SymmetricQMatrix
    vertices: tuple[int, ...]

    def embed(self, n: int) -> SymmetricQMatrix:
        q = np.zeros((n, n), dtype=np.int64)
        idx = np.array(self.vertices)
        q[np.ix_(idx, idx)] = self.matrix.quarters
        return SymmetricQMatrix(q)


def edge_laplacian(g: Semigraph, e: Edge | Sequence) -> EdgeLaplacian:
    """Laplacian of the single edge ``e``, with end weights set by the vertex
    classes of the whole semigraph ``g``."""
    e = _member(g, e)
    kinds = all_pair_kinds(g)
    vs = e.vertices
    a = np.zeros((len(vs), len(vs)), dtype=np.int64)
    for x in range(len(vs)):
        for y in range(x + 1, len(vs)):
            u, v = vs[x], vs[y]
            a[x, y] = a[y, x] = kinds[(min(u, v), max(u, v))].quarters
    return EdgeLaplacian(_with_degree_diagonal(SymmetricQMatrix(a), -1), vs)


@dataclass(frozen=True)
class EdgeQuadraticForm:
    """``x^T L_e x = sum mu[(j, i)] * (x_j - x_{j+i})**2`` with 1-based ``j, i``
    running over positions in the edge."""

    edge: Edge
    coefficients: dict[tuple[int, int], Fraction]

    def evaluate(self, x: np.ndarray, signless: bool = False) -> float:
        vs = self.edge.vertices
        total = 0.0
        for (j, i), mu in self.coefficients.items():
            a, b = x[vs[j - 1]], x[vs[j + i - 1]]
            diff = a + b if signless else a - b
            total += float(mu) * diff * diff
        return total


def edge_form(g: Semigraph, e: Edge | Sequence) -> EdgeQuadraticForm:
    """Coefficients ``mu_{ji}``: ``i`` by default; ``1/2`` on an end pair whose
    end vertex is middle-end; for a 2-edge, 1, 1/2 or 1/4 by how many of its
    vertices are middle-end."""
    e = _member(g, e)
    length = len(e)
    first_me, last_me = (g.vertex_classes[v] is VertexClass.MIDDLE_END for v in e.ends)
    if length == 2:
        mu = Fraction(1, 2 ** (first_me + last_me))
        return EdgeQuadraticForm(e, {(1, 1): mu})
    coeffs = {}
    for j in range(1, length):
        for i in range(1, length - j + 1):
            coeffs[(j, i)] = Fraction(i)
    if first_me:
        coeffs[(1, 1)] = Fraction(1, 2)
    if last_me:
        coeffs[(length - 1, 1)] = Fraction(1, 2)
    return EdgeQuadraticForm(e, coeffs)


def _vector(x, n: int) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (n,):
        raise ValueError(f"vector of length {n} expected, got shape {x.shape}")
    return x


def quadratic_form_direct(m: SymmetricQMatrix | np.ndarray, x) -> float:
    real = m.real if isinstance(m, SymmetricQMatrix) else np.asarray(m, dtype=float)
    x = _vector(x, real.shape[0])
    return float(x @ real @ x)


def quadratic_form_decomposed(g: Semigraph, x, signless: bool = False) -> float:
    """Sum of the per-edge square decompositions; with ``signless`` the
    differences become sums, giving ``x^T Q x``."""
    x = _vector(x, g.n)
    return sum((edge_form(g, e).evaluate(x, signless) for e in g.edges), 0.0)
