"""Graded matrix algebras over K and K[x^m, x^-m], and the graded
matricial representations of Leavitt path algebras of finite no-exit
graphs.

The public surface is re-exported here; the CLI lives in
:mod:`gradedlpa.cli` and is installed as the ``gradedlpa`` script.
"""

from .errors import (
    AlgebraError,
    EmptyGraphError,
    EmptyIndexSetError,
    GradedLpaError,
    GraphError,
    IndexOutOfRangeError,
    InvalidStepError,
    NotASinkError,
    NotIsomorphicError,
    NotNoExitError,
    NotRealizableError,
    ParseError,
    ShapeMismatchError,
    TooManyCyclesError,
    UnknownVertexError,
    VertexNotOnCycleError,
    WindowExceededError,
    ZeroCornerError,
)
from .graphs import (
    CycleDescriptor,
    DirectedGraph,
    Edge,
    GraphClassification,
    PathLengthMultiset,
    build_cycle_tail,
    build_line,
    classify,
    find_cycles,
    paths_to_cycle_vertex,
    paths_to_sink,
    strongly_connected_components,
)
from .algebras import (
    CyclicForm,
    DirectSumAlgebra,
    EntryShift,
    GlobalShift,
    GradedBase,
    Permute,
    ShiftedMatrixAlgebra,
    TrivialForm,
    apply_certificate,
    apply_step,
    canonical_form,
    direct_sum_iso,
    inverse_step,
    is_graded_isomorphic,
    iso_certificate,
    least_rotation_index,
    oracle_iso,
    summand_key,
)
from .matrices import (
    GradedMatrix,
    LaurentElement,
    conjugate_by_certificate,
    conjugate_by_step,
    homogeneous_components,
    matrix_unit,
    multiply,
)
from .represent import CycleSummand, RepresentationReport, SinkSummand, represent, represent_at
from .realize import SumVerdict, Verdict, is_realizable, is_realizable_sum, synthesize, synthesize_sum
from .corners import corner_by_indices, corner_by_vertices, corner_realizable
from .parsing import (
    format_algebra,
    format_canonical,
    format_certificate,
    format_graph,
    graph_to_dot,
    parse_algebra,
    parse_certificate,
    parse_graph,
)

__all__ = [
    "AlgebraError",
    "CycleDescriptor",
    "CycleSummand",
    "CyclicForm",
    "DirectSumAlgebra",
    "DirectedGraph",
    "Edge",
    "EmptyGraphError",
    "EmptyIndexSetError",
    "EntryShift",
    "GlobalShift",
    "GradedBase",
    "GradedLpaError",
    "GradedMatrix",
    "GraphClassification",
    "GraphError",
    "IndexOutOfRangeError",
    "InvalidStepError",
    "LaurentElement",
    "NotASinkError",
    "NotIsomorphicError",
    "NotNoExitError",
    "NotRealizableError",
    "ParseError",
    "PathLengthMultiset",
    "Permute",
    "RepresentationReport",
    "ShapeMismatchError",
    "ShiftedMatrixAlgebra",
    "SinkSummand",
    "SumVerdict",
    "TooManyCyclesError",
    "TrivialForm",
    "UnknownVertexError",
    "Verdict",
    "VertexNotOnCycleError",
    "WindowExceededError",
    "ZeroCornerError",
    "apply_certificate",
    "apply_step",
    "build_cycle_tail",
    "build_line",
    "canonical_form",
    "classify",
    "conjugate_by_certificate",
    "conjugate_by_step",
    "corner_by_indices",
    "corner_by_vertices",
    "corner_realizable",
    "direct_sum_iso",
    "find_cycles",
    "format_algebra",
    "format_canonical",
    "format_certificate",
    "format_graph",
    "graph_to_dot",
    "homogeneous_components",
    "inverse_step",
    "is_graded_isomorphic",
    "is_realizable",
    "is_realizable_sum",
    "iso_certificate",
    "least_rotation_index",
    "matrix_unit",
    "multiply",
    "oracle_iso",
    "parse_algebra",
    "parse_certificate",
    "parse_graph",
    "paths_to_cycle_vertex",
    "paths_to_sink",
    "represent",
    "represent_at",
    "strongly_connected_components",
    "summand_key",
    "synthesize",
    "synthesize_sum",
]
