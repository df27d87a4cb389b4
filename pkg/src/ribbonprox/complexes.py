"""Finite planar cell complexes: vertices, edges, filled cycles, ribbons.

A ribbon is a pair of nested filled cycles, optionally sharing vertices and
optionally joined by bridge edges.  The region between the cycles is kept
combinatorial (cycles + bridges + the shared-vertex and bridge counts); all
downstream algebra needs nothing more.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Mapping

from .errors import (
    BadBridgeError,
    DuplicateBridgeError,
    InvalidComplexError,
    MissingEdgeError,
    NotNestedError,
    RepeatedVertexError,
    SelfIntersectingError,
    UnknownVertexError,
)
from .geometry import Location, Point2, locate_in_polygon, polygon_self_intersection


@dataclass(frozen=True)
class Vertex:
    id: str
    position: Point2


@dataclass(frozen=True, order=True)
class Edge:
    """An unordered pair of distinct vertex ids, stored sorted."""

    a: str
    b: str

    @staticmethod
    def of(u: str, v: str) -> "Edge":
        if u == v:
            raise InvalidComplexError(f"degenerate edge at vertex {u!r}")
        return Edge(min(u, v), max(u, v))

    @property
    def endpoints(self) -> frozenset[str]:
        return frozenset((self.a, self.b))

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


@dataclass(frozen=True, eq=False)
class Cycle:
    """A cyclically ordered vertex-id sequence tracing a simple filled polygon.

    Equality and hashing are rotation- and reflection-invariant: two cycles
    describing the same closed curve compare equal regardless of the starting
    vertex or direction of travel.
    """

    vertices: tuple[str, ...]
    filled: bool = True

    def canonical(self) -> tuple[str, ...]:
        seq = self.vertices
        n = len(seq)
        candidates = []
        for base in (seq, tuple(reversed(seq))):
            for i in range(n):
                candidates.append(base[i:] + base[:i])
        return min(candidates)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.filled == other.filled and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash((self.filled, self.canonical()))

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, vertex_id: str) -> bool:
        return vertex_id in self.vertices

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def edge_pairs(self) -> Iterator[Edge]:
        n = len(self.vertices)
        for i in range(n):
            yield Edge.of(self.vertices[i], self.vertices[(i + 1) % n])


@dataclass(frozen=True)
class Ribbon:
    """Two nested filled cycles plus the bridge edges attached between them."""

    outer: Cycle
    inner: Cycle
    bridges: tuple[Edge, ...] = ()

    @property
    def intersection(self) -> frozenset[str]:
        return cycle_intersection(self.outer, self.inner)

    @property
    def n(self) -> int:
        """Number of vertices shared by the two cycles."""
        return len(self.intersection)

    @property
    def k(self) -> int:
        """Number of bridge edges."""
        return len(self.bridges)

    @property
    def vertex_set(self) -> frozenset[str]:
        return self.outer.vertex_set | self.inner.vertex_set

    def graph_edges(self) -> frozenset[Edge]:
        """All edges of the ribbon's move graph: both cycles plus bridges."""
        edges = set(self.outer.edge_pairs()) | set(self.inner.edge_pairs())
        edges.update(self.bridges)
        return frozenset(edges)


@dataclass(frozen=True)
class CellComplex:
    """A finite planar complex; treated as immutable after construction.

    The dataclass constructor is deliberately lenient so that cw_check can be
    exercised against malformed instances; use assemble_complex for validated
    construction.
    """

    name: str
    vertices: Mapping[str, Vertex] = field(default_factory=dict)
    edges: frozenset[Edge] = frozenset()
    cycles: Mapping[str, Cycle] = field(default_factory=dict)
    ribbons: Mapping[str, Ribbon] = field(default_factory=dict)

    def position(self, vertex_id: str) -> Point2:
        try:
            return self.vertices[vertex_id].position
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {vertex_id!r}") from None

    def polygon(self, cycle: Cycle) -> list[Point2]:
        return [self.position(v) for v in cycle.vertices]


def assemble_complex(name: str,
                     vertices: Iterable[Vertex],
                     edges: Iterable[Edge]) -> CellComplex:
    """Build a cycle-free complex, enforcing id uniqueness, distinct positions
    and edge endpoints that exist."""
    vmap: dict[str, Vertex] = {}
    positions: dict[Point2, str] = {}
    for v in vertices:
        if v.id in vmap:
            raise InvalidComplexError(f"duplicate vertex id {v.id!r}")
        if v.position in positions:
            raise InvalidComplexError(
                f"vertices {positions[v.position]!r} and {v.id!r} share position {v.position}")
        vmap[v.id] = v
        positions[v.position] = v.id
    edge_set = frozenset(edges)
    for edge in edge_set:
        for vid in (edge.a, edge.b):
            if vid not in vmap:
                raise InvalidComplexError(f"edge {edge} references unknown vertex {vid!r}")
    return CellComplex(name=name, vertices=vmap, edges=edge_set)


def with_cells(cx: CellComplex,
               cycles: Mapping[str, Cycle] | None = None,
               ribbons: Mapping[str, Ribbon] | None = None) -> CellComplex:
    """Functional update: the same complex with cycles/ribbons attached."""
    return replace(
        cx,
        cycles=dict(cx.cycles) | dict(cycles or {}),
        ribbons=dict(cx.ribbons) | dict(ribbons or {}),
    )


def build_cycle(cx: CellComplex, ids: Iterable[str], filled: bool = True) -> Cycle:
    """Validate a vertex-id sequence as a simple filled cycle of the complex.

    Raises RepeatedVertexError, UnknownVertexError, MissingEdgeError or
    SelfIntersectingError; simplicity is decided by exact segment tests.
    """
    seq = tuple(ids)
    if len(seq) < 3:
        raise RepeatedVertexError(f"cycle needs at least 3 vertices, got {len(seq)}")
    seen = set()
    for vid in seq:
        if vid in seen:
            raise RepeatedVertexError(f"vertex {vid!r} repeats in cycle")
        seen.add(vid)
    for vid in seq:
        if vid not in cx.vertices:
            raise UnknownVertexError(f"unknown vertex {vid!r}")
    for i in range(len(seq)):
        pair = Edge.of(seq[i], seq[(i + 1) % len(seq)])
        if pair not in cx.edges:
            raise MissingEdgeError(f"no edge {pair} for consecutive cycle vertices")
    polygon = [cx.position(v) for v in seq]
    offending = polygon_self_intersection(polygon)
    if offending is not None:
        i, j = offending
        raise SelfIntersectingError(f"cycle edges {i} and {j} intersect")
    return Cycle(vertices=seq, filled=filled)


def cycle_intersection(a: Cycle, b: Cycle) -> frozenset[str]:
    """Vertex ids present in both cycles."""
    return a.vertex_set & b.vertex_set


def is_nested(cx: CellComplex, outer: Cycle, inner: Cycle) -> bool:
    """True iff every inner vertex is strictly inside the outer polygon or
    is a vertex shared by both cycles (boundary contact only through sharing)."""
    shared = cycle_intersection(outer, inner)
    polygon = cx.polygon(outer)
    for vid in inner.vertices:
        if vid in shared:
            continue
        if locate_in_polygon(cx.position(vid), polygon) is not Location.INSIDE:
            return False
    return True


def build_ribbon(cx: CellComplex,
                 outer: Cycle,
                 inner: Cycle,
                 bridges: Iterable[Edge] = ()) -> Ribbon:
    """Validate a nested cycle pair plus bridges as a ribbon.

    Each bridge must be a declared edge joining an outer-only vertex to an
    inner-only vertex; bridges may not reuse cycle edges or each other's
    endpoints (the generator count n + 2k depends on that).
    """
    if not is_nested(cx, outer, inner):
        raise NotNestedError("inner cycle is not nested inside the outer cycle")
    shared = cycle_intersection(outer, inner)
    outer_only = outer.vertex_set - shared
    inner_only = inner.vertex_set - shared
    cycle_edges = set(outer.edge_pairs()) | set(inner.edge_pairs())
    seen: set[Edge] = set()
    used_endpoints: set[str] = set()
    ordered: list[Edge] = []
    for bridge in bridges:
        if bridge in seen:
            raise DuplicateBridgeError(f"bridge {bridge} listed twice")
        seen.add(bridge)
        if bridge not in cx.edges:
            raise BadBridgeError(f"bridge {bridge} is not a declared edge")
        if bridge in cycle_edges:
            raise BadBridgeError(f"bridge {bridge} is already a cycle edge")
        ends = {bridge.a, bridge.b}
        if not ((bridge.a in outer_only and bridge.b in inner_only)
                or (bridge.a in inner_only and bridge.b in outer_only)):
            raise BadBridgeError(
                f"bridge {bridge} must join an outer-only vertex to an inner-only vertex")
        if ends & used_endpoints:
            raise BadBridgeError(f"bridge {bridge} reuses an endpoint of another bridge")
        used_endpoints |= ends
        ordered.append(bridge)
    return Ribbon(outer=outer, inner=inner, bridges=tuple(sorted(ordered)))


@dataclass(frozen=True)
class CWViolation:
    kind: str                 # "containment" | "intersection"
    detail: str
    cells: tuple[str, ...]


def cw_check(cx: CellComplex) -> list[CWViolation]:
    """Report closure-containment and intersection violations; empty iff sound.

    Containment: every vertex/edge referenced by a cell must be declared.
    Intersection: the shared part of any two cells must itself consist of
    declared cells (shared vertices declared; an edge shared as a boundary
    edge of two cycles declared).  Violations are reported, never raised.
    """
    out: list[CWViolation] = []

    def contain(kind_detail: str, cells: tuple[str, ...]):
        out.append(CWViolation("containment", kind_detail, cells))

    for edge in sorted(cx.edges):
        for vid in (edge.a, edge.b):
            if vid not in cx.vertices:
                contain(f"edge {edge} references undeclared vertex {vid!r}", (str(edge),))
    for cyc_name in sorted(cx.cycles):
        cycle = cx.cycles[cyc_name]
        for vid in cycle.vertices:
            if vid not in cx.vertices:
                contain(f"cycle {cyc_name} references undeclared vertex {vid!r}", (cyc_name,))
        for pair in cycle.edge_pairs():
            if pair not in cx.edges:
                contain(f"cycle {cyc_name} uses undeclared edge {pair}", (cyc_name,))
    for rb_name in sorted(cx.ribbons):
        ribbon = cx.ribbons[rb_name]
        declared = set(cx.cycles.values())
        for which, cycle in (("outer", ribbon.outer), ("inner", ribbon.inner)):
            if cycle not in declared:
                contain(f"ribbon {rb_name} {which} cycle is not a declared cycle", (rb_name,))
        for bridge in ribbon.bridges:
            if bridge not in cx.edges:
                contain(f"ribbon {rb_name} bridge {bridge} is not a declared edge", (rb_name,))

    # pairwise intersections of 1- and 2-cells
    named_sets: list[tuple[str, frozenset[str]]] = []
    named_sets.extend((f"cycle {nm}", cx.cycles[nm].vertex_set) for nm in sorted(cx.cycles))
    named_sets.extend((f"ribbon {nm}", cx.ribbons[nm].vertex_set) for nm in sorted(cx.ribbons))
    for i in range(len(named_sets)):
        for j in range(i + 1, len(named_sets)):
            name_i, set_i = named_sets[i]
            name_j, set_j = named_sets[j]
            for vid in sorted(set_i & set_j):
                if vid not in cx.vertices:
                    out.append(CWViolation(
                        "intersection",
                        f"{name_i} and {name_j} share undeclared vertex {vid!r}",
                        (name_i, name_j)))
    cycle_names = sorted(cx.cycles)
    for i in range(len(cycle_names)):
        for j in range(i + 1, len(cycle_names)):
            ci = set(cx.cycles[cycle_names[i]].edge_pairs())
            cj = set(cx.cycles[cycle_names[j]].edge_pairs())
            for edge in sorted(ci & cj):
                if edge not in cx.edges:
                    out.append(CWViolation(
                        "intersection",
                        f"cycles {cycle_names[i]} and {cycle_names[j]} share undeclared edge {edge}",
                        (cycle_names[i], cycle_names[j])))
    edge_list = sorted(cx.edges)
    for i in range(len(edge_list)):
        for j in range(i + 1, len(edge_list)):
            for vid in sorted(edge_list[i].endpoints & edge_list[j].endpoints):
                if vid not in cx.vertices:
                    out.append(CWViolation(
                        "intersection",
                        f"edges {edge_list[i]} and {edge_list[j]} meet at undeclared vertex {vid!r}",
                        (str(edge_list[i]), str(edge_list[j]))))
    return out
