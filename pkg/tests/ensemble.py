"""Random semigraph generators shared by the property and acceptance tests."""
from __future__ import annotations

from itertools import combinations

import numpy as np

from semigraph_spectra import Semigraph, ValidationError


def _grow(rng: np.random.Generator, size: int, prefix: str) -> list[list[str]]:
    """Edges of a connected semigraph on exactly ``size`` vertices.

    Each new edge meets the existing vertex set in one anchor, at a random
    position, so middle-end vertices and half edges arise naturally. A few
    extra edges between existing vertices then close cycles (these give most
    quarter edges).
    """
    names = [f"{prefix}{k}" for k in range(size)]
    first = int(rng.integers(2, min(4, size) + 1))
    edges = [names[:first]]
    used = first
    used_pairs = {frozenset(p) for p in combinations(edges[0], 2)}
    while used < size:
        length = int(rng.integers(2, min(4, size - used + 1) + 1))
        anchor = names[int(rng.integers(0, used))]
        fresh = names[used:used + length - 1]
        used += length - 1
        pos = int(rng.integers(0, length))
        edge = fresh[:pos] + [anchor] + fresh[pos:]
        edges.append(edge)
        used_pairs |= {frozenset(p) for p in combinations(edge, 2)}
    for _ in range(int(rng.integers(0, 8))):
        length = int(rng.integers(2, min(3, size) + 1))
        edge = [names[int(i)] for i in rng.choice(size, size=length, replace=False)]
        pairs = {frozenset(p) for p in combinations(edge, 2)}
        if pairs & used_pairs:
            continue
        edges.append(edge)
        used_pairs |= pairs
    return edges


def random_semigraph(rng: np.random.Generator, n_max: int = 12, connected: bool = True) -> Semigraph:
    if connected:
        size = int(rng.integers(2, n_max + 1))
        edges = _grow(rng, size, "x")
        labels = [f"x{k}" for k in range(size)]
    elif rng.random() < 0.25 or n_max < 4:
        size = int(rng.integers(2, n_max))
        edges = _grow(rng, size, "x")
        labels = [f"x{k}" for k in range(size)] + ["iso"]
    else:
        s1 = int(rng.integers(2, n_max - 1))
        s2 = int(rng.integers(2, n_max - s1 + 1))
        edges = _grow(rng, s1, "a") + _grow(rng, s2, "b")
        labels = [f"a{k}" for k in range(s1)] + [f"b{k}" for k in range(s2)]
    order = [labels[int(i)] for i in rng.permutation(len(labels))]
    edges = [e[::-1] if rng.random() < 0.5 else e for e in edges]
    return Semigraph.from_edges(edges, vertices=order)


def ensemble(count: int, seed: int, disconnected_every: int = 0, n_max: int = 12) -> list[Semigraph]:
    """``count`` semigraphs; every ``disconnected_every``-th one is forced
    disconnected (0 means all connected)."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        broken = disconnected_every and k % disconnected_every == disconnected_every - 1
        out.append(random_semigraph(rng, n_max, connected=not broken))
    return out


def random_simple_graph(rng: np.random.Generator, n_max: int = 10) -> Semigraph:
    """A simple graph (on >= 2 vertices, no isolated vertices) as 2-edges."""
    while True:
        n = int(rng.integers(2, n_max + 1))
        p = rng.uniform(0.2, 0.9)
        edges = [[f"g{i}", f"g{j}"] for i, j in combinations(range(n), 2) if rng.random() < p]
        covered = {v for e in edges for v in e}
        if len(covered) == n:
            try:
                return Semigraph.from_edges(edges, vertices=[f"g{i}" for i in range(n)])
            except ValidationError:  # pragma: no cover - 2-edges never collide
                continue
