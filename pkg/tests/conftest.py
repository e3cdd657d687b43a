"""Shared brute-force oracles and random generators.

Everything here is deliberately independent of the library internals:
rotations by explicit slicing, SCCs by mutual reachability, path counts
by exhaustive walk enumeration.  Tests compare library output against
these slow references.
"""

from __future__ import annotations

import random

from gradedlpa import (
    DirectedGraph,
    EntryShift,
    GlobalShift,
    GradedBase,
    GradedMatrix,
    LaurentElement,
    Permute,
    ShiftedMatrixAlgebra,
)


def naive_least_rotation(seq):
    """Smallest index of a lexicographically minimal rotation, by brute force."""
    seq = tuple(seq)
    n = len(seq)
    return min(range(n), key=lambda i: seq[i:] + seq[:i])


def brute_scc(g: DirectedGraph):
    """SCC partition as a set of frozensets, via mutual reachability."""
    reach = {v: {v} for v in g.vertices}
    changed = True
    while changed:
        changed = False
        for e in g.edges:
            before = len(reach[e.source])
            reach[e.source] |= reach[e.range]
            if len(reach[e.source]) != before:
                changed = True
    return {
        frozenset(u for u in g.vertices if u in reach[v] and v in reach[u])
        for v in g.vertices
    }


def _backward_walks(g: DirectedGraph, target: str, bound: int):
    """All edge paths of length <= bound ending at target, as eid lists in
    forward order, paired with their source vertex."""
    walks = [([], target)]
    frontier = [([], target)]
    while frontier:
        nxt = []
        for edges, head in frontier:
            if len(edges) == bound:
                continue
            for e in g.edges:
                if e.range == head:
                    item = ([e.eid] + edges, e.source)
                    nxt.append(item)
                    walks.append(item)
        frontier = nxt
    return walks


def naive_paths_to_sink(g: DirectedGraph, sink: str):
    """(source, length) pairs for every path into a sink, by walk enumeration."""
    bound = len(g.vertices)
    walks = _backward_walks(g, sink, bound)
    assert not any(len(edges) >= bound for edges, _ in walks), "walks should stay simple"
    return sorted((src, len(edges)) for edges, src in walks)


def naive_paths_to_cycle(g: DirectedGraph, cycle_eids, base: str):
    """(source, length) pairs for paths to base avoiding the cycle.

    A path contains the cycle when some rotation of the cycle's edge list
    appears as a contiguous block of the path's edges.
    """
    cyc = list(cycle_eids)
    rotations = [cyc[i:] + cyc[:i] for i in range(len(cyc))]

    def contains_cycle(edges):
        L = len(cyc)
        return any(edges[i : i + L] in rotations for i in range(len(edges) - L + 1))

    bound = len(g.vertices) + len(cyc)
    walks = _backward_walks(g, base, bound)
    at_cap = [edges for edges, _ in walks if len(edges) == bound]
    assert all(contains_cycle(edges) for edges in at_cap), "cap must only cut repeats"
    return sorted((src, len(edges)) for edges, src in walks if not contains_cycle(edges))


def random_no_exit_graph(rng: random.Random, max_extra: int = 5, max_cycles: int = 2):
    """A random finite no-exit graph: disjoint cycles plus an acyclic layer
    feeding into them, with parallel edges and isolated vertices allowed."""
    pairs = []
    pool = []
    n_cycles = rng.randint(0, max_cycles)
    for ci in range(n_cycles):
        length = rng.randint(1, 4)
        cyc = [f"c{ci}x{j}" for j in range(length)]
        for j in range(length):
            pairs.append((cyc[j], cyc[(j + 1) % length]))
        pool.extend(cyc)
    n_extra = rng.randint(0 if n_cycles else 1, max_extra)
    for i in range(n_extra):
        v = f"u{i}"
        for _ in range(rng.randint(0, 2) if pool else 0):
            pairs.append((v, rng.choice(pool)))
        pool.append(v)
    pool.extend(f"z{i}" for i in range(rng.randint(0, 1)))
    # pool lists every vertex; from_edges ignores the ones already mentioned
    return DirectedGraph.from_edges(pairs, isolated=pool)


def random_base(rng: random.Random, max_period: int = 4) -> GradedBase:
    if rng.random() < 0.4:
        return GradedBase.trivial()
    return GradedBase.laurent(rng.randint(1, max_period))


def random_matrix(rng: random.Random, base: GradedBase, shifts) -> GradedMatrix:
    """Entries with up to three monomials of base-compatible degrees."""
    n = len(shifts)
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            terms = {}
            for _ in range(rng.randint(0, 3)):
                degree = base.period * rng.randint(-3, 3) if base.is_laurent else 0
                terms[degree] = rng.randint(-9, 9)
            row.append(LaurentElement(terms))
        rows.append(tuple(row))
    return GradedMatrix(base, tuple(shifts), tuple(rows))


def random_certificate(rng: random.Random, base: GradedBase, n: int, length=None):
    steps = []
    for _ in range(rng.randint(0, 6) if length is None else length):
        kind = rng.randrange(3 if base.is_laurent else 2)
        if kind == 0:
            image = list(range(1, n + 1))
            rng.shuffle(image)
            steps.append(Permute(tuple(image)))
        elif kind == 1:
            steps.append(GlobalShift(rng.randint(-5, 5)))
        else:
            steps.append(EntryShift(rng.randint(1, n), base.period * rng.randint(-3, 3)))
    return steps


def random_realizable_summand(rng: random.Random) -> ShiftedMatrixAlgebra:
    """A summand admitted by the realizability criteria, with scrambled shifts."""
    if rng.random() < 0.5:
        k = rng.randint(0, 6)
        mults = [1] + [rng.randint(1, 4) for _ in range(k)]
        base = GradedBase.trivial()
        shifts = [i for i, count in enumerate(mults) for _ in range(count)]
    else:
        m = rng.randint(1, 6)
        mults = [rng.randint(1, 4) for _ in range(m)]
        base = GradedBase.laurent(m)
        shifts = [
            i + m * rng.randint(-2, 2) for i, count in enumerate(mults) for _ in range(count)
        ]
    rng.shuffle(shifts)
    delta = rng.randint(-3, 3)
    return ShiftedMatrixAlgebra.from_shifts(base, tuple(s + delta for s in shifts))
