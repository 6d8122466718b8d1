"""Graph permanents of k-duplicated signed incidence matrices."""

from ._core import (
    Error,
    LimitError,
    Multigraph,
    OverflowError,
    ParseError,
    PreconditionError,
    census,
    certificate,
    check_decompletion,
    check_dual,
    check_four_edge_cut,
    check_orientation_identity,
    check_special_vertex,
    check_tag_oracle,
    check_twist,
    check_two_vertex_cut,
    detect_k,
    find_modulo_orientation,
    generate_regular,
    graph_permanent,
    kdsi_matrix,
    permanent,
    permanent_mod,
    tagging_permanent,
)

__all__ = [name for name in dir() if not name.startswith("_")]
