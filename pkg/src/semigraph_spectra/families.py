"""Star semigraphs S(3;2,n) and rooted 3-uniform trees T(3;n): generators and
closed-form spectra."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Semigraph


def gen_star(n: int) -> Semigraph:
    """Vertices v1..v(n+3); edge (v2, v1, v3) plus spokes (v1, vk), k >= 4.

    v1 sits in the middle of the 3-edge, so it is a middle-end vertex and
    every spoke is a half edge.
    """
    if n < 1:
        raise ValueError("star needs n >= 1")
    labels = [f"v{k}" for k in range(1, n + 4)]
    edges = [("v2", "v1", "v3")] + [("v1", f"v{k}") for k in range(4, n + 4)]
    return Semigraph.from_edges(edges, vertices=labels)


def gen_tree3(n: int) -> Semigraph:
    """Vertices v1..v(2n+1); edges (v1, v(2i), v(2i+1)) for 1 <= i <= n."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    labels = [f"v{k}" for k in range(1, 2 * n + 2)]
    edges = [("v1", f"v{2 * i}", f"v{2 * i + 1}") for i in range(1, n + 1)]
    return Semigraph.from_edges(edges, vertices=labels)


# Polynomials are ascending coefficient tuples of Fractions.
Poly = tuple[Fraction, ...]


def poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def poly_pow(a: Sequence[Fraction], k: int) -> Poly:
    out: Poly = (Fraction(1),)
    for _ in range(k):
        out = poly_mul(out, a)
    return out


@dataclass(frozen=True)
class QuadraticSurd:
    """``a + b * sqrt(d)`` with rational ``a``, ``b`` and square-free ``d``."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 1

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0 or self.d == 1

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.d)

    def minimal_poly(self) -> Poly:
        """Monic ascending coefficients of the minimal polynomial."""
        if self.is_rational:
            return (-(self.a + self.b), Fraction(1))
        return (self.a * self.a - self.b * self.b * self.d, -2 * self.a, Fraction(1))

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a + self.b)
        den = math.lcm(self.a.denominator, self.b.denominator)
        num_a, num_b = self.a * den, abs(self.b) * den
        sign = "+" if self.b > 0 else "-"
        coef = "" if num_b == 1 else f"{num_b}*"
        body = f"{num_a}{sign}{coef}sqrt({self.d})"
        return body if den == 1 else f"({body})/{den}"


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Exact eigenvalues with multiplicities plus a residual polynomial whose
    real roots complete the spectrum."""

    fixed: tuple[tuple[QuadraticSurd, int], ...]
    residual: Poly

    @property
    def order(self) -> int:
        return sum(m for _, m in self.fixed) + len(self.residual) - 1

    def charpoly(self) -> Poly:
        """Expanded product of all factors; conjugate surd pairs combine into
        their rational minimal polynomial."""
        out: Poly = tuple(self.residual)
        done = set()
        for value, mult in self.fixed:
            if value in done:
                continue
            if value.is_rational:
                out = poly_mul(out, poly_pow(value.minimal_poly(), mult))
            else:
                partner = dict(self.fixed).get(value.conjugate())
                if partner != mult:
                    raise ValueError(f"surd {value} lacks a conjugate of equal multiplicity")
                out = poly_mul(out, poly_pow(value.minimal_poly(), mult))
                done.add(value.conjugate())
            done.add(value)
        return out

    def residual_roots(self) -> list[float]:
        c = [Fraction(x) for x in self.residual]
        if c[-1] != 1:
            c = [x / c[-1] for x in c]
        deg = len(c) - 1
        if deg == 0:
            return []
        if deg == 1:
            return [float(-c[0])]
        if deg == 2:
            return list(solve_quadratic_real(c[1], c[0]))
        if deg == 3:
            return list(solve_cubic_real(c[2], c[1], c[0]))
        raise NotImplementedError("residual of degree > 3")

    def values(self) -> list[float]:
        out = [float(v) for v, m in self.fixed for _ in range(m)]
        return sorted(out + self.residual_roots())


def solve_quadratic_real(c1: Fraction, c0: Fraction) -> tuple[float, float]:
    """Real roots of ``x^2 + c1 x + c0``, ascending."""
    disc = Fraction(c1) ** 2 - 4 * Fraction(c0)
    if disc < 0:
        raise ValueError(f"quadratic has no real roots (discriminant {disc})")
    r = math.sqrt(disc)
    # stable form: avoid cancellation in the smaller-magnitude root
    big = -(float(c1) + math.copysign(r, float(c1))) / 2
    if big == 0:
        return (0.0, 0.0)
    small = float(c0) / big
    return tuple(sorted((big, small)))


CUBIC_DISC_RTOL = 1e-6


def solve_cubic_real(c2, c1, c0) -> tuple[float, float, float]:
    """Three real roots of ``x^3 + c2 x^2 + c1 x + c0``, ascending.

    Trigonometric solution of the depressed cubic, then one Newton step per
    root. A discriminant slightly below zero (rounding) is treated as a
    repeated root; one below ``-CUBIC_DISC_RTOL`` in relative terms raises.
    """
    c2, c1, c0 = Fraction(c2), Fraction(c1), Fraction(c0)
    shift = c2 / 3
    p = c1 - c2 * c2 / 3
    q = 2 * c2 ** 3 / 27 - c2 * c1 / 3 + c0
    disc = -(4 * p ** 3 + 27 * q * q)
    size = 4 * abs(p) ** 3 + 27 * q * q
    if disc < 0 and (size == 0 or -disc / size > CUBIC_DISC_RTOL):
        raise ValueError("cubic does not have three real roots")
    if p == 0:
        ts = [0.0, 0.0, 0.0]
    else:
        pf, qf = float(p), float(q)
        arg = (3 * qf / (2 * pf)) * math.sqrt(-3 / pf)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg) / 3
        amp = 2 * math.sqrt(-pf / 3)
        ts = [amp * math.cos(theta - 2 * math.pi * k / 3) for k in range(3)]
    fs = float(shift)
    f2, f1, f0 = float(c2), float(c1), float(c0)
    roots = []
    for t in ts:
        x = t - fs
        fx = ((x + f2) * x + f1) * x + f0
        dfx = (3 * x + 2 * f2) * x + f1
        if abs(dfx) > 1e-8 * max(1.0, abs(f1), f2 * f2):
            x -= fx / dfx
        roots.append(x)
    return tuple(sorted(roots))


def star_spectrum_closed(n: int) -> ClosedFormSpectrum:
    """0 once, 1/2 with multiplicity n - 1, and the roots of
    ``x^3 - (n+17)/2 x^2 + (19+3n) x - (5n+15)/2``."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    fixed = [(QuadraticSurd(Fraction(0)), 1)]
    if n > 1:
        fixed.append((QuadraticSurd(Fraction(1, 2)), n - 1))
    residual = (Fraction(-(5 * n + 15), 2), Fraction(19 + 3 * n), Fraction(-(n + 17), 2), Fraction(1))
    return ClosedFormSpectrum(tuple(fixed), residual)


def tree3_spectrum_closed(n: int) -> ClosedFormSpectrum:
    """0 once, (5 -+ sqrt 5)/2 each with multiplicity n - 1, and the roots of
    ``x^2 - (3n+5) x + 10n + 5``."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    fixed = [(QuadraticSurd(Fraction(0)), 1)]
    if n > 1:
        half = Fraction(1, 2)
        fixed.append((QuadraticSurd(Fraction(5, 2), -half, 5), n - 1))
        fixed.append((QuadraticSurd(Fraction(5, 2), half, 5), n - 1))
    residual = (Fraction(10 * n + 5), Fraction(-(3 * n + 5)), Fraction(1))
    return ClosedFormSpectrum(tuple(fixed), residual)
