"""Symmetric eigenvalues (cyclic Jacobi), exact characteristic polynomials
(Faddeev-LeVerrier) and spectral connectivity."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core import Semigraph
from .matrix import SymmetricQMatrix, laplacian

DEFAULT_TOL = 1e-12
CONNECTIVITY_TOL = 1e-8
CLUSTER_GAP = 1e-7
MAX_SWEEPS = 100


class ConvergenceError(ArithmeticError):
    def __init__(self, sweeps: int, residual: float):
        self.sweeps = sweeps
        self.residual = residual
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(relative off-diagonal norm {residual:.3e})"
        )


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    tol: float
    iterations: int

    def __len__(self) -> int:
        return len(self.values)

    @property
    def smallest(self) -> float:
        return self.values[0]

    @property
    def largest(self) -> float:
        return self.values[-1]

    def clusters(self, gap: float = CLUSTER_GAP) -> list[tuple[float, int]]:
        """Group sorted eigenvalues whose neighbours differ by at most
        ``gap * max(1, largest)``; each cluster reported as (mean, count)."""
        if not self.values:
            return []
        thresh = gap * max(1.0, abs(self.largest))
        groups = [[self.values[0]]]
        for v in self.values[1:]:
            if v - groups[-1][-1] <= thresh:
                groups[-1].append(v)
            else:
                groups.append([v])
        return [(float(np.mean(grp)), len(grp)) for grp in groups]

    def multiplicity(self, value: float, gap: float = CLUSTER_GAP) -> int:
        thresh = gap * max(1.0, abs(self.largest))
        return sum(1 for v in self.values if abs(v - value) <= thresh)


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings of a round-robin tournament: every (p, q) meets exactly once
    per sweep, and the pairs of one round are disjoint."""
    players = list(range(n + (n % 2)))
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for k in range(m // 2):
            a, b = players[k], players[m - 1 - k]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=int), np.array(qs, dtype=int)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def eigenvalues_sym(
    m: SymmetricQMatrix | np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS
) -> Spectrum:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps use the parallel (round-robin) cyclic ordering, so each round
    rotates a set of disjoint index pairs at once. Iteration stops when the
    off-diagonal Frobenius norm is at most ``tol * ||M||_F``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = (m.real if isinstance(m, SymmetricQMatrix) else np.array(m, dtype=float)).copy()
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("square matrix expected")
    if not np.allclose(a, a.T, rtol=0, atol=1e-12 * max(1.0, np.abs(a).max(initial=0.0))):
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2
    n = a.shape[0]
    scale = float(np.linalg.norm(a))
    target = tol * scale
    rounds = _round_robin(n)
    sweeps = 0
    while _off_norm(a) > target:
        if sweeps >= max_sweeps:
            raise ConvergenceError(sweeps, _off_norm(a) / scale)
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            tau = (a[q, q] - a[p, p]) / (2.0 * apq)
            # hypot keeps 1 + tau^2 finite for tiny a_pq
            t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            cp, cq = a[:, p], a[:, q]
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            rp, rq = a[p, :], a[q, :]
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            a[p, q] = 0.0
            a[q, p] = 0.0
        sweeps += 1
    return Spectrum(tuple(sorted(float(x) for x in np.diag(a))), tol, sweeps)


@dataclass(frozen=True)
class CharPoly:
    """Exact coefficients ``c_0 .. c_n`` of ``det(lambda I - M)``."""

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + float(c)
        return acc

    def exact(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def _faddeev_leverrier_int(b: list[list[int]]) -> list[int]:
    """Integer charpoly coefficients (ascending) of an integer matrix.

    The divisions by k are exact: every coefficient of an integer matrix's
    characteristic polynomial is an integer.
    """
    n = len(b)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]  # M_0 = 0
    for k in range(1, n + 1):
        prev = coeffs[n - k + 1]
        for i in range(n):
            mk[i][i] += prev
        # A M_k
        am = [[sum(b[i][t] * mk[t][j] for t in range(n) if b[i][t]) for j in range(n)] for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        ck, rem = divmod(-tr, k)
        assert rem == 0
        coeffs[n - k] = ck
        mk = am
    return coeffs


def charpoly_exact(m: SymmetricQMatrix | Sequence[Sequence[Fraction | int]]) -> CharPoly:
    """Characteristic polynomial over exact rationals.

    Entries are scaled to integers first; for ``M = B / s``,
    ``det(lambda I - M) = s^-n * p_B(s * lambda)``.
    """
    if isinstance(m, SymmetricQMatrix):
        b = m.quarters.tolist()
        scale = 4
    else:
        rows = [[Fraction(x) for x in row] for row in m]
        scale = 1
        for row in rows:
            for x in row:
                scale = math.lcm(scale, x.denominator)
        b = [[int(x * scale) for x in row] for row in rows]
    n = len(b)
    pb = _faddeev_leverrier_int(b)
    return CharPoly(tuple(Fraction(pb[k], scale ** (n - k)) for k in range(n + 1)))


def is_psd(m: SymmetricQMatrix | np.ndarray, tol: float = CONNECTIVITY_TOL) -> bool:
    real = m.real if isinstance(m, SymmetricQMatrix) else np.asarray(m, dtype=float)
    spec = eigenvalues_sym(real)
    return spec.smallest >= -tol * float(np.linalg.norm(real))


def laplacian_spectrum(g: Semigraph, tol: float = DEFAULT_TOL) -> Spectrum:
    return eigenvalues_sym(laplacian(g), tol)


def algebraic_connectivity(g: Semigraph) -> float:
    return laplacian_spectrum(g).values[1]


def is_connected_spectral(g: Semigraph, tol: float = CONNECTIVITY_TOL) -> bool:
    spec = laplacian_spectrum(g)
    return spec.values[1] > tol * max(1.0, spec.largest)
