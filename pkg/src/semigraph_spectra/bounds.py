"""Bounds on the largest Laplacian eigenvalue.

Lower bound ``Delta + 1`` and the common-neighbour upper bound
``max {d_i + d_j - C(i, j)}`` over semigraph-adjacent pairs. Two readings
of ``C`` are kept: ``literal`` counts half/quarter common neighbours with
weight 1, ``proof`` weights them 1/2 and 1/4 (the amounts that actually
cancel when the eigen-equations of ``i`` and ``j`` are subtracted).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .core import Kind, PairKind, Semigraph, Vertex, all_pair_kinds, is_connected
from .matrix import adjacency, degrees
from .spectra import CONNECTIVITY_TOL, laplacian_spectrum

Variant = Literal["literal", "proof"]


class BoundsError(ValueError):
    """The bound's hypothesis (connected, at least one edge) does not hold."""


@dataclass(frozen=True)
class DegreeProfile:
    vertex: int
    d_S: Fraction
    d_half: Fraction
    d_quarter: Fraction
    d_l: dict[int, Fraction]
    d_total: Fraction


@dataclass(frozen=True)
class CommonNeighborProfile:
    pair: tuple[int, int]
    C_S: int = 0
    C_half: int = 0
    C_quarter: int = 0
    C_l: dict[int, int] = field(default_factory=dict)

    @property
    def C_literal(self) -> Fraction:
        return Fraction(self.C_S + self.C_half + self.C_quarter) + sum(
            (Fraction(l * c) for l, c in self.C_l.items()), Fraction(0)
        )

    @property
    def C_proof(self) -> Fraction:
        return (
            Fraction(self.C_S)
            + Fraction(self.C_half, 2)
            + Fraction(self.C_quarter, 4)
            + sum((Fraction(l * c) for l, c in self.C_l.items()), Fraction(0))
        )

    def value(self, variant: Variant) -> Fraction:
        return self.C_literal if variant == "literal" else self.C_proof


@dataclass(frozen=True)
class BoundsReport:
    delta: Fraction
    lower: Fraction
    upper_literal: Fraction
    upper_proof: Fraction
    lambda_n: float
    lower_ok: bool
    upper_ok: bool
    argmax_pair: tuple[int, int]
    variant: Variant = "proof"


def _neighbours(g: Semigraph) -> list[dict[int, PairKind]]:
    nbrs: list[dict[int, PairKind]] = [{} for _ in range(g.n)]
    for (i, j), kind in all_pair_kinds(g).items():
        nbrs[i][j] = kind
        nbrs[j][i] = kind
    return nbrs


def degree_profile(g: Semigraph, i: Vertex) -> DegreeProfile:
    i = g.index(i)
    d_S = d_half = d_quarter = Fraction(0)
    d_l: dict[int, Fraction] = {}
    for kind in _neighbours(g)[i].values():
        if kind.kind is Kind.CONSECUTIVE:
            d_S += kind.weight
        elif kind.kind is Kind.PARTIAL_HALF:
            d_half += kind.weight
        elif kind.kind is Kind.QUARTER:
            d_quarter += kind.weight
        else:
            d_l[kind.distance] = d_l.get(kind.distance, Fraction(0)) + kind.weight
    total = d_S + d_half + d_quarter + sum(d_l.values(), Fraction(0))
    return DegreeProfile(i, d_S, d_half, d_quarter, dict(sorted(d_l.items())), total)


def _common(nbrs: list[dict[int, PairKind]], i: int, j: int) -> CommonNeighborProfile:
    counts = {Kind.CONSECUTIVE: 0, Kind.PARTIAL_HALF: 0, Kind.QUARTER: 0}
    c_l: dict[int, int] = {}
    for k, kind_i in nbrs[i].items():
        if k == j or nbrs[j].get(k) != kind_i:
            continue
        if kind_i.kind is Kind.DISTANCE:
            c_l[kind_i.distance] = c_l.get(kind_i.distance, 0) + 1
        else:
            counts[kind_i.kind] += 1
    return CommonNeighborProfile(
        (min(i, j), max(i, j)),
        counts[Kind.CONSECUTIVE],
        counts[Kind.PARTIAL_HALF],
        counts[Kind.QUARTER],
        dict(sorted(c_l.items())),
    )


def common_profile(g: Semigraph, i: Vertex, j: Vertex) -> CommonNeighborProfile:
    """Common neighbours ``k`` whose pairs ``(k, i)`` and ``(k, j)`` have the
    same kind (and the same distance, for distance pairs)."""
    i, j = g.index(i), g.index(j)
    if i == j:
        raise ValueError("common_profile needs two distinct vertices")
    return _common(_neighbours(g), i, j)


def lower_bound(g: Semigraph) -> Fraction:
    """``Delta + 1`` with ``Delta`` the maximum degree."""
    if g.m == 0:
        raise BoundsError("lower bound needs at least one edge")
    return max(degrees(g)) + 1


def diagonal_lower_bound(g: Semigraph) -> Fraction:
    """``max_i d_i + (sum_j a_ij**2) / d_i``, i.e. ``e_i^T L^2 e_i / e_i^T L e_i``.

    Valid for every semigraph since ``L`` is positive semi-definite. It
    dominates ``Delta + 1`` only when the maximum-degree row satisfies
    ``sum a_ij**2 >= sum a_ij``, which can fail with 1/2 and 1/4 weights.
    """
    if g.m == 0:
        raise BoundsError("lower bound needs at least one edge")
    a = adjacency(g).to_fractions()
    best = Fraction(0)
    for row in a:
        d = sum(row, Fraction(0))
        if d:
            best = max(best, d + sum((x * x for x in row), Fraction(0)) / d)
    return best


def _upper(g: Semigraph, variant: Variant) -> tuple[Fraction, tuple[int, int]]:
    if variant not in ("literal", "proof"):
        raise ValueError(f"unknown variant {variant!r}")
    if g.m == 0:
        raise BoundsError("upper bound needs at least one edge")
    if not is_connected(g):
        raise BoundsError("upper bound requires a connected semigraph")
    d = degrees(g)
    nbrs = _neighbours(g)
    best, arg = None, None
    for (i, j) in sorted(all_pair_kinds(g)):
        value = d[i] + d[j] - _common(nbrs, i, j).value(variant)
        if best is None or value > best:
            best, arg = value, (i, j)
    return best, arg


def upper_bound(g: Semigraph, variant: Variant = "proof") -> Fraction:
    return _upper(g, variant)[0]


def bounds_report(g: Semigraph, variant: Variant = "proof", tol: float = CONNECTIVITY_TOL) -> BoundsReport:
    """Both bounds against the numeric largest eigenvalue; flags use the
    slack ``tol * max(1, lambda_n)``. ``variant`` picks the upper bound that
    ``upper_ok`` and ``argmax_pair`` refer to."""
    upper_literal, arg_literal = _upper(g, "literal")
    upper_proof, arg_proof = _upper(g, "proof")
    lower = lower_bound(g)
    lam = laplacian_spectrum(g).largest
    slack = tol * max(1.0, lam)
    upper = upper_proof if variant == "proof" else upper_literal
    return BoundsReport(
        delta=lower - 1,
        lower=lower,
        upper_literal=upper_literal,
        upper_proof=upper_proof,
        lambda_n=lam,
        lower_ok=lam >= float(lower) - slack,
        upper_ok=lam <= float(upper) + slack,
        argmax_pair=arg_proof if variant == "proof" else arg_literal,
        variant=variant,
    )
