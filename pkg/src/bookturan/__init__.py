"""Book numbers and exact Turán numbers ex(n, B_p) for small orders."""
from .graph import (
    Graph,
    canonical_code,
    complement,
    disjoint_union,
    from_edges,
    graph6_decode,
    graph6_encode,
    is_isomorphic,
    join,
)

__all__ = [
    "Graph",
    "canonical_code",
    "complement",
    "disjoint_union",
    "from_edges",
    "graph6_decode",
    "graph6_encode",
    "is_isomorphic",
    "join",
]
