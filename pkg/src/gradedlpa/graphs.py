"""Finite directed multigraphs and the path bookkeeping the algebra side needs.

Vertices are identifier strings.  Parallel edges and loops are allowed and are
told apart by edge id.  A graph is *no-exit* when every vertex lying on a cycle
emits exactly one edge; in such graphs every cycle is the unique cycle of its
strongly connected component, no cycle vertex reaches a sink, and all path
enumerations below are finite.

All types are immutable and all operations are pure functions of their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import (
    EmptyGraphError,
    NotASinkError,
    NotNoExitError,
    TooManyCyclesError,
    UnknownVertexError,
    VertexNotOnCycleError,
)

DEFAULT_CYCLE_CAP = 10_000


class Edge(NamedTuple):
    eid: str
    source: str
    range: str


@dataclass(frozen=True)
class DirectedGraph:
    """A finite directed multigraph with ordered vertices and edges."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise ValueError(f"duplicate vertex id {v!r}")
            seen.add(v)
        eids = set()
        for e in self.edges:
            if e.eid in eids:
                raise ValueError(f"duplicate edge id {e.eid!r}")
            eids.add(e.eid)
            for endpoint in (e.source, e.range):
                if endpoint not in seen:
                    raise ValueError(f"edge {e.eid!r} uses unknown vertex {endpoint!r}")

    @classmethod
    def from_edges(cls, pairs: Iterable[tuple], isolated: Iterable[str] = ()) -> "DirectedGraph":
        """Build a graph from (source, range) or (source, range, eid) tuples.

        Vertex order is first-mention order, with `isolated` vertices appended.
        Unnamed edges get ids e1, e2, ... by position.
        """
        vertices: list[str] = []
        known = set()

        def mention(v):
            if v not in known:
                known.add(v)
                vertices.append(v)

        edges = []
        for pos, pair in enumerate(pairs, 1):
            if len(pair) == 2:
                src, dst = pair
                eid = f"e{pos}"
            else:
                src, dst, eid = pair
            mention(src)
            mention(dst)
            edges.append(Edge(eid, src, dst))
        for v in isolated:
            mention(v)
        return cls(tuple(vertices), tuple(edges))

    @cached_property
    def _out(self) -> dict[str, tuple[Edge, ...]]:
        table = {v: [] for v in self.vertices}
        for e in self.edges:
            table[e.source].append(e)
        return {v: tuple(es) for v, es in table.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[Edge, ...]]:
        table = {v: [] for v in self.vertices}
        for e in self.edges:
            table[e.range].append(e)
        return {v: tuple(es) for v, es in table.items()}

    def require_vertex(self, v: str):
        if v not in self._out:
            raise UnknownVertexError(f"unknown vertex {v!r}")

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        self.require_vertex(v)
        return self._out[v]

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        self.require_vertex(v)
        return self._in[v]

    def out_degree(self, v: str) -> int:
        return len(self.out_edges(v))


@dataclass(frozen=True)
class CycleDescriptor:
    """A cycle, stored once, starting at its lexicographically smallest vertex.

    Edge i runs from vertices[i] to vertices[(i+1) % length]; all sources are
    distinct, so the cycle is determined by its edge list up to rotation.
    """

    vertices: tuple[str, ...]
    edges: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.edges or len(self.vertices) != len(self.edges):
            raise ValueError("a cycle has equally many vertices and edges, at least one each")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle vertices must be distinct")

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class PathLengthMultiset:
    """Multiset of path lengths, stored as (length, count) pairs, ascending."""

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple((l, c) for l, c in self.counts))
        prev = -1
        for length, count in self.counts:
            if length <= prev or length < 0 or count < 1:
                raise ValueError("counts must map ascending nonnegative lengths to positive counts")
            prev = length

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "PathLengthMultiset":
        table: dict[int, int] = {}
        for l in lengths:
            table[l] = table.get(l, 0) + 1
        return cls(tuple(sorted(table.items())))

    @classmethod
    def from_paths(cls, paths: Iterable[tuple[str, int]]) -> "PathLengthMultiset":
        return cls.from_lengths(l for _, l in paths)

    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def lengths(self) -> list[int]:
        out = []
        for length, count in self.counts:
            out.extend([length] * count)
        return out


@dataclass(frozen=True)
class GraphClassification:
    finite: bool
    acyclic: bool
    no_exit: bool
    comet_per_component: bool
    sinks: tuple[str, ...]
    regular: tuple[str, ...]
    cycles: tuple[CycleDescriptor, ...]


def strongly_connected_components(g: DirectedGraph) -> list[tuple[str, ...]]:
    """Tarjan's algorithm, iterative.  Components come back as sorted vertex
    tuples, ordered by their smallest vertex."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    components: list[tuple[str, ...]] = []
    counter = 0

    for root in g.vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(g.out_edges(root)))]
        while work:
            v, edge_iter = work[-1]
            pushed = False
            for e in edge_iter:
                w = e.range
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.out_edges(w))))
                    pushed = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if pushed:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                components.append(tuple(sorted(comp)))
    components.sort(key=lambda c: c[0])
    return components


def _vertices_on_cycles(g: DirectedGraph) -> set[str]:
    # a vertex lies on a cycle iff its SCC contains an edge
    comp_of: dict[str, int] = {}
    comps = strongly_connected_components(g)
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    cyclic = {comp_of[e.source] for e in g.edges if comp_of[e.source] == comp_of[e.range]}
    out: set[str] = set()
    for i in cyclic:
        out.update(comps[i])
    return out


def _require_no_exit(g: DirectedGraph):
    for v in _vertices_on_cycles(g):
        if g.out_degree(v) != 1:
            raise NotNoExitError(f"cycle vertex {v!r} emits {g.out_degree(v)} edges")


def find_cycles(g: DirectedGraph, cap: int = DEFAULT_CYCLE_CAP) -> list[CycleDescriptor]:
    """Every cycle of g, each reported once, anchored at its smallest vertex.

    Enumeration is SCC by SCC; within an SCC a depth-first search from each
    anchor uses only vertices >= the anchor, so each cycle appears exactly
    once.  Raises TooManyCyclesError past `cap`.
    """
    cycles: list[CycleDescriptor] = []
    for comp in strongly_connected_components(g):
        comp_set = set(comp)
        for anchor in comp:
            # frames: (vertex, pending out-edge iterator); edge_path mirrors frames[1:]
            frames = [(anchor, iter(g.out_edges(anchor)))]
            edge_path: list[Edge] = []
            on_path = {anchor}
            while frames:
                v, edge_iter = frames[-1]
                pushed = False
                for e in edge_iter:
                    w = e.range
                    if w not in comp_set or w < anchor:
                        continue
                    if w == anchor:
                        walk = edge_path + [e]
                        if len(cycles) >= cap:
                            raise TooManyCyclesError(f"more than {cap} cycles")
                        cycles.append(
                            CycleDescriptor(
                                tuple(x.source for x in walk),
                                tuple(x.eid for x in walk),
                            )
                        )
                        continue
                    if w in on_path:
                        continue
                    frames.append((w, iter(g.out_edges(w))))
                    edge_path.append(e)
                    on_path.add(w)
                    pushed = True
                    break
                if not pushed:
                    frames.pop()
                    if edge_path:
                        edge_path.pop()
                    on_path.discard(v)
    return cycles


def _weak_components(g: DirectedGraph) -> list[set[str]]:
    neighbours: dict[str, set[str]] = {v: set() for v in g.vertices}
    for e in g.edges:
        neighbours[e.source].add(e.range)
        neighbours[e.range].add(e.source)
    seen: set[str] = set()
    comps = []
    for root in g.vertices:
        if root in seen:
            continue
        comp = {root}
        frontier = [root]
        seen.add(root)
        while frontier:
            v = frontier.pop()
            for w in neighbours[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    frontier.append(w)
        comps.append(comp)
    return comps


def _reaches_backward(g: DirectedGraph, targets: Iterable[str]) -> set[str]:
    reached = set(targets)
    frontier = list(reached)
    while frontier:
        v = frontier.pop()
        for e in g.in_edges(v):
            if e.source not in reached:
                reached.add(e.source)
                frontier.append(e.source)
    return reached


def classify(g: DirectedGraph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> GraphClassification:
    """Flags and inventories used by every downstream operation.

    A weakly connected component counts as a comet when it contains exactly
    one cycle and every one of its vertices has a path to that cycle.
    """
    on_cycle = _vertices_on_cycles(g)
    acyclic = not on_cycle
    no_exit = all(g.out_degree(v) == 1 for v in on_cycle)
    sinks = tuple(sorted(v for v in g.vertices if g.out_degree(v) == 0))
    regular = tuple(sorted(v for v in g.vertices if g.out_degree(v) > 0))
    cycles = tuple(find_cycles(g, cap=cycle_cap))

    comet = True
    for comp in _weak_components(g):
        local = [c for c in cycles if c.vertices[0] in comp]
        if len(local) != 1:
            comet = False
            break
        if not comp <= _reaches_backward(g, local[0].vertices):
            comet = False
            break
    return GraphClassification(
        finite=True,
        acyclic=acyclic,
        no_exit=no_exit,
        comet_per_component=comet,
        sinks=sinks,
        regular=regular,
        cycles=cycles,
    )


def _collect_levels(g: DirectedGraph, start: str, blocked_source: str | None, bound: int):
    """Breadth-first reverse walk from `start`; one frontier entry per path.

    Entries whose extending edge would start at `blocked_source` are dropped.
    """
    result: list[tuple[str, int]] = []
    level = [start]
    length = 0
    while level:
        result.extend((v, length) for v in sorted(level))
        length += 1
        if length > bound:
            raise NotNoExitError("path enumeration did not terminate; graph is not no-exit")
        level = [
            e.source
            for v in level
            for e in g.in_edges(v)
            if e.source != blocked_source
        ]
    return result


def paths_to_sink(g: DirectedGraph, sink: str) -> list[tuple[str, int]]:
    """All paths of g ending in `sink`, as (source, length) pairs.

    Includes the trivial path (sink, 0).  Sorted by length, then source id;
    parallel edges contribute one entry per path.
    """
    g.require_vertex(sink)
    _require_no_exit(g)
    if g.out_degree(sink) != 0:
        raise NotASinkError(f"vertex {sink!r} emits edges")
    # no cycle vertex reaches a sink in a no-exit graph, so every path here is
    # simple and len(vertices) bounds the walk
    return _collect_levels(g, sink, None, len(g.vertices))


def paths_to_cycle_vertex(
    g: DirectedGraph, cycle: CycleDescriptor, base: str
) -> list[tuple[str, int]]:
    """All paths ending at `base` that do not contain `cycle`.

    A path contains the cycle exactly when it visits `base` more than once, so
    the reverse walk simply never extends through `base`.  Includes the trivial
    path (base, 0); sorted by length then source id.
    """
    _require_no_exit(g)
    _validate_cycle(g, cycle)
    if base not in cycle.vertices:
        raise VertexNotOnCycleError(f"vertex {base!r} is not on the cycle {cycle.vertices}")
    return _collect_levels(g, base, base, len(g.vertices) + cycle.length)


def _validate_cycle(g: DirectedGraph, cycle: CycleDescriptor):
    by_id = {e.eid: e for e in g.edges}
    n = cycle.length
    for i, eid in enumerate(cycle.edges):
        e = by_id.get(eid)
        expected_src = cycle.vertices[i]
        expected_dst = cycle.vertices[(i + 1) % n]
        if e is None or e.source != expected_src or e.range != expected_dst:
            raise ValueError(f"descriptor edge {eid!r} is not a cycle edge of this graph")


def build_line(n: int) -> DirectedGraph:
    """The line graph L_n: v1 -> v2 -> ... -> vn."""
    if n < 1:
        raise ValueError("n must be positive")
    return DirectedGraph.from_edges(
        [(f"v{i}", f"v{i+1}") for i in range(1, n)],
        isolated=[f"v{i}" for i in range(1, n + 1)],
    )


def build_cycle_tail(n: int) -> DirectedGraph:
    """The graph C_n: the line L_n with a loop added at the last vertex."""
    if n < 1:
        raise ValueError("n must be positive")
    pairs = [(f"v{i}", f"v{i+1}") for i in range(1, n)]
    pairs.append((f"v{n}", f"v{n}"))
    return DirectedGraph.from_edges(pairs)
