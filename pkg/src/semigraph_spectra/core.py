"""Semigraph data model: parsing, validation, vertex/edge classification,
skeleton and combinatorial connectivity.

A semigraph edge is an ordered tuple of at least two distinct vertices, equal
to its own reversal, and two distinct edges share at most one vertex.
Vertices are referred to by their 0-based index in the vertex table; every
public function that takes a vertex also accepts its label.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence, Union

from networkx.utils import UnionFind

Vertex = Union[int, str]


class SemigraphError(ValueError):
    """Invalid semigraph input. ``line``/``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class ParseError(SemigraphError):
    pass


class ValidationError(SemigraphError):
    """Semantic violation; ``edge`` is the index of the offending edge, if any."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 edge: int | None = None):
        super().__init__(message, line, column)
        self.edge = edge


class VertexClass(enum.Enum):
    PURE_END = "pure_end"
    PURE_MIDDLE = "pure_middle"
    MIDDLE_END = "middle_end"
    ISOLATED = "isolated"


class EdgeClass(enum.Enum):
    FULL = "full"
    HALF_ONE_PARTIAL = "half_one_partial"
    HALF_TWO_PARTIAL = "half_two_partial"
    QUARTER = "quarter"


class Kind(enum.Enum):
    CONSECUTIVE = "consecutive"
    DISTANCE = "distance"
    PARTIAL_HALF = "partial_half"
    QUARTER = "quarter"


@dataclass(frozen=True)
class PairKind:
    """Role of an unordered vertex pair inside its common edge."""

    kind: Kind
    distance: int = 1

    @property
    def quarters(self) -> int:
        """Adjacency weight as an integer number of 1/4 units."""
        if self.kind is Kind.PARTIAL_HALF:
            return 2
        if self.kind is Kind.QUARTER:
            return 1
        return 4 * self.distance

    @property
    def weight(self) -> Fraction:
        return Fraction(self.quarters, 4)

    def __str__(self) -> str:
        if self.kind is Kind.DISTANCE:
            return f"distance({self.distance})"
        return self.kind.value


CONSECUTIVE = PairKind(Kind.CONSECUTIVE, 1)
PARTIAL_HALF = PairKind(Kind.PARTIAL_HALF, 1)
QUARTER = PairKind(Kind.QUARTER, 1)


def distance_pair(length: int) -> PairKind:
    if length < 2:
        raise ValueError("distance pairs have length >= 2")
    return PairKind(Kind.DISTANCE, length)


@dataclass(frozen=True)
class Edge:
    """Ordered vertex indices, stored with ``vertices[0] <= vertices[-1]``."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise ValidationError("an edge needs at least 2 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("edge repeats a vertex")

    @classmethod
    def canonical(cls, vertices: Iterable[int]) -> "Edge":
        vs = tuple(vertices)
        if len(vs) >= 2 and vs[0] > vs[-1]:
            vs = vs[::-1]
        return cls(vs)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def middles(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def position(self, v: int) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise KeyError(f"vertex {v} is not in edge {self.vertices}") from None


@dataclass(frozen=True)
class Semigraph:
    """Immutable, validated semigraph.

    ``labels[i]`` names vertex ``i``; ``edges`` keep their input order.
    """

    labels: tuple[str, ...]
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        edges = tuple(e if isinstance(e, Edge) else Edge.canonical(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        _validate(labels, edges)

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[str]], vertices: Sequence[str] = ()) -> "Semigraph":
        """Build from labelled edges; vertex order is ``vertices`` then first appearance."""
        order: dict[str, int] = {}
        for label in vertices:
            if label in order:
                raise ValidationError(f"vertex {label!r} declared twice")
            order[label] = len(order)
        index_edges = []
        for e in edges:
            for label in e:
                order.setdefault(label, len(order))
            index_edges.append(Edge.canonical(order[label] for label in e))
        return cls(tuple(order), tuple(index_edges))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def index(self, v: Vertex) -> int:
        """Resolve a vertex label or index to an index."""
        if isinstance(v, str):
            try:
                return self._label_index[v]
            except KeyError:
                raise KeyError(f"unknown vertex {v!r}") from None
        if isinstance(v, int) and 0 <= v < self.n:
            return v
        raise KeyError(f"unknown vertex {v!r}")

    def edge(self, *labels: str) -> Edge:
        """Look up a stored edge by its labels, in either orientation."""
        target = Edge.canonical(self.index(v) for v in labels)
        if target not in self._edge_set:
            raise KeyError(f"no edge {labels}")
        return target

    def edge_labels(self, e: Edge) -> tuple[str, ...]:
        return tuple(self.labels[v] for v in e)

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def vertex_classes(self) -> tuple[VertexClass, ...]:
        is_end = [False] * self.n
        is_middle = [False] * self.n
        for e in self.edges:
            for v in e.ends:
                is_end[v] = True
            for v in e.middles:
                is_middle[v] = True
        out = []
        for end, middle in zip(is_end, is_middle):
            if end and middle:
                out.append(VertexClass.MIDDLE_END)
            elif end:
                out.append(VertexClass.PURE_END)
            elif middle:
                out.append(VertexClass.PURE_MIDDLE)
            else:
                out.append(VertexClass.ISOLATED)
        return tuple(out)

    @cached_property
    def edge_classes(self) -> tuple[EdgeClass, ...]:
        return tuple(_edge_class(self, e) for e in self.edges)

    @cached_property
    def pair_edge(self) -> dict[tuple[int, int], Edge]:
        """Map each adjacent pair ``(i, j)``, ``i < j``, to its unique edge."""
        out = {}
        for e in self.edges:
            for u, v in combinations(e.vertices, 2):
                out[(min(u, v), max(u, v))] = e
        return out


def _validate(labels: tuple[str, ...], edges: tuple[Edge, ...]) -> None:
    if len(labels) < 2:
        raise ValidationError(f"n >= 2 required (got {len(labels)} vertices)")
    if len(set(labels)) != len(labels):
        raise ValidationError("vertex labels must be unique")
    for label in labels:
        _check_label(label)
    n = len(labels)
    seen: dict[Edge, int] = {}
    owner: dict[tuple[int, int], int] = {}
    for k, e in enumerate(edges):
        if any(not (0 <= v < n) for v in e):
            raise ValidationError(f"edge {k} references an unknown vertex", edge=k)
        if e.vertices[0] > e.vertices[-1]:
            raise ValidationError(f"edge {k} is not canonically oriented", edge=k)
        if e in seen:
            raise ValidationError(
                f"duplicate edge ({' '.join(labels[v] for v in e)}): equal to an earlier "
                "edge up to reversal",
                edge=k,
            )
        seen[e] = k
        for u, v in combinations(e.vertices, 2):
            key = (min(u, v), max(u, v))
            if key in owner:
                shared = sorted(set(edges[owner[key]]) & set(e), key=lambda x: labels[x])
                names = ", ".join(labels[x] for x in shared)
                raise ValidationError(
                    f"intersection violation: edge ({' '.join(labels[x] for x in e)}) shares "
                    f"{len(shared)} vertices ({names}) with an earlier edge; "
                    "two edges may share at most one vertex",
                    edge=k,
                )
            owner[key] = k


def _check_label(label: str, line: int | None = None, column: int | None = None) -> None:
    if not label or any(ch.isspace() for ch in label) or label.startswith("#"):
        raise ParseError(f"invalid vertex label {label!r}", line, column)


def parse_semigraph(text: str) -> Semigraph:
    """Parse the line-oriented semigraph format.

    ``# ...`` lines are comments, ``v a b ...`` declares vertex order and
    ``e a b ...`` adds one edge. Undeclared vertices are appended in order
    of first appearance.
    """
    order: dict[str, int] = {}
    edges: list[Edge] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = _tokens(raw)
        directive, dcol = tokens[0]
        rest = tokens[1:]
        for label, col in rest:
            _check_label(label, lineno, col)
        if directive == "v":
            for label, col in rest:
                if label in order:
                    raise ParseError(f"vertex {label!r} declared or used before", lineno, col)
                order[label] = len(order)
        elif directive == "e":
            if len(rest) < 2:
                raise ParseError("an edge needs at least 2 vertex labels", lineno, dcol)
            labels = [label for label, _ in rest]
            seen = set()
            for label, col in rest:
                if label in seen:
                    raise ValidationError(f"edge repeats vertex {label!r}", lineno, col)
                seen.add(label)
            for label in labels:
                order.setdefault(label, len(order))
            edges.append(Edge.canonical(order[label] for label in labels))
            edge_lines.append(lineno)
        else:
            raise ParseError(f"unknown directive {directive!r} (expected 'v' or 'e')", lineno, dcol)
    try:
        return Semigraph(tuple(order), tuple(edges))
    except ValidationError as exc:
        line = edge_lines[exc.edge] if exc.edge is not None else None
        raise ValidationError(exc.message, line, edge=exc.edge) from None


def _tokens(line: str) -> list[tuple[str, int]]:
    out = []
    col = 0
    for part in line.split():
        col = line.index(part, col)
        out.append((part, col + 1))
        col += len(part)
    return out


def emit_semigraph(g: Semigraph) -> str:
    """Serialize ``g`` so that ``parse_semigraph`` reproduces it exactly."""
    lines = ["v " + " ".join(g.labels)]
    lines += ["e " + " ".join(g.edge_labels(e)) for e in g.edges]
    return "\n".join(lines) + "\n"


def classify_vertex(g: Semigraph, v: Vertex) -> VertexClass:
    return g.vertex_classes[g.index(v)]


def _edge_class(g: Semigraph, e: Edge) -> EdgeClass:
    first, last = (g.vertex_classes[v] is VertexClass.MIDDLE_END for v in e.ends)
    if not first and not last:
        return EdgeClass.FULL
    if first and last:
        return EdgeClass.QUARTER if len(e) == 2 else EdgeClass.HALF_TWO_PARTIAL
    return EdgeClass.HALF_ONE_PARTIAL


def _member(g: Semigraph, e: Edge | Sequence[Vertex]) -> Edge:
    if not isinstance(e, Edge):
        e = Edge.canonical(g.index(v) for v in e)
    if e not in g._edge_set:
        raise KeyError(f"edge {e.vertices} is not in the semigraph")
    return e


def classify_edge(g: Semigraph, e: Edge | Sequence[Vertex]) -> EdgeClass:
    return _edge_class(g, _member(g, e))


def edge_census(g: Semigraph) -> tuple[int, int, int, int]:
    """Counts ``(m1, m2, m3, m4)``: full, quarter, half with one partial
    half edge, half with two partial half edges."""
    classes = g.edge_classes
    return (
        classes.count(EdgeClass.FULL),
        classes.count(EdgeClass.QUARTER),
        classes.count(EdgeClass.HALF_ONE_PARTIAL),
        classes.count(EdgeClass.HALF_TWO_PARTIAL),
    )


def pair_kinds(g: Semigraph, e: Edge | Sequence[Vertex]) -> dict[tuple[int, int], PairKind]:
    """Kind of every unordered pair ``(i, j)``, ``i < j``, of edge ``e``."""
    e = _member(g, e)
    vs = e.vertices
    length = len(vs)
    first_me, last_me = (g.vertex_classes[v] is VertexClass.MIDDLE_END for v in e.ends)
    out = {}
    for a, b in combinations(range(length), 2):
        u, v = vs[a], vs[b]
        dist = b - a
        if dist > 1:
            kind = distance_pair(dist)
        elif length == 2 and first_me and last_me:
            kind = QUARTER
        elif (a == 0 and first_me) or (b == length - 1 and last_me):
            kind = PARTIAL_HALF
        else:
            kind = CONSECUTIVE
        out[(min(u, v), max(u, v))] = kind
    return out


def all_pair_kinds(g: Semigraph) -> dict[tuple[int, int], PairKind]:
    """Pair kinds over the whole semigraph (pairs sharing no edge are absent)."""
    out: dict[tuple[int, int], PairKind] = {}
    for e in g.edges:
        out.update(pair_kinds(g, e))
    return out


def edge_distance(e: Edge, u: int, v: int) -> int:
    if u == v:
        raise ValueError("edge distance needs two distinct vertices")
    return abs(e.position(u) - e.position(v))


def skeleton(g: Semigraph) -> list[tuple[int, int]]:
    """Edges ``(i, j)``, ``i < j``, of the simple graph of consecutive pairs."""
    pairs = set()
    for e in g.edges:
        for u, v in zip(e.vertices, e.vertices[1:]):
            pairs.add((min(u, v), max(u, v)))
    return sorted(pairs)


def components(g: Semigraph) -> list[list[int]]:
    uf = UnionFind(range(g.n))
    for e in g.edges:
        uf.union(*e.vertices)
    return sorted(sorted(c) for c in uf.to_sets())


def is_connected(g: Semigraph) -> bool:
    return len(components(g)) == 1
