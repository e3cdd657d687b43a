"""Graded corners: cut a shifted matrix algebra down to a set of diagonal
units, or cut a represented graph down to the paths sourced by a vertex set.

A vertex of a no-exit graph maps to the sum of the diagonal units e_ii of the
paths it sources, so the corner at a vertex set keeps exactly those path
indices.  The result is again a shifted matrix algebra but need not be
realizable on its own.
"""

from __future__ import annotations

from typing import Iterable

from .algebras import DirectSumAlgebra, ShiftedMatrixAlgebra
from .errors import (
    EmptyIndexSetError,
    IndexOutOfRangeError,
    UnknownVertexError,
    ZeroCornerError,
)
from .graphs import DirectedGraph
from .realize import SumVerdict, is_realizable_sum
from .represent import represent


def corner_by_indices(a: ShiftedMatrixAlgebra, idx: Iterable[int]) -> ShiftedMatrixAlgebra:
    """The corner eMe for e the sum of the units e_ii with i in idx (1-based)."""
    chosen = sorted(set(idx))
    if not chosen:
        raise EmptyIndexSetError("a corner needs at least one index")
    if chosen[0] < 1 or chosen[-1] > a.n:
        bad = chosen[0] if chosen[0] < 1 else chosen[-1]
        raise IndexOutOfRangeError(f"index {bad} out of range 1..{a.n}")
    return ShiftedMatrixAlgebra.from_shifts(a.base, (a.shifts[i - 1] for i in chosen))


def corner_by_vertices(g: DirectedGraph, vs: Iterable[str]) -> DirectSumAlgebra:
    """The corner of the represented algebra of g at the idempotent sum of vs.

    Keeps, in each summand, the path indices whose source lies in vs; summands
    left with no paths are dropped.
    """
    chosen = set(vs)
    report = represent(g)
    unknown = chosen - set(g.vertices)
    if unknown:
        raise UnknownVertexError(f"unknown vertices: {sorted(unknown)}")
    summands = []
    for summand, prov in zip(report.sum.summands, report.provenance):
        kept = [i for i, (source, _) in enumerate(prov.paths, 1) if source in chosen]
        if kept:
            summands.append(corner_by_indices(summand, kept))
    if not summands:
        raise ZeroCornerError("no path in any summand starts in the chosen vertex set")
    return DirectSumAlgebra(tuple(summands))


def corner_realizable(g: DirectedGraph, vs: Iterable[str]) -> SumVerdict:
    """Realizability of the corner of the represented algebra of g at vs."""
    return is_realizable_sum(corner_by_vertices(g, vs))
