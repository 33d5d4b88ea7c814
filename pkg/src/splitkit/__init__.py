"""splitkit: vertex splitting against forbidden subgraphs.

Decide and certify whether k vertex splits can make a graph free of a
family of forbidden (induced) subgraphs: polynomial algorithms for all
families of graphs on at most three vertices, a 2-SAT-based solver for
shallow triangle-free splitting, an exact brute-force oracle for small
instances, and executable hardness-reduction gadgets.
"""

from .graphs import (CapExceeded, DiGraph, ForbiddenFamily, Graph,
                     connectivity, disjoint_union, enumerate_embeddings,
                     has_embedding, is_free, named_graph, orient,
                     read_graph, subdivide, triangles, write_graph)
from .splitting import (SplitSpec, SplittingSequence, apply_sequence,
                        apply_split, enumerate_splits, make_split, merge)
from .canonical import are_isomorphic, canonical_form
from .oracle import decide, min_splits, solve, verify_certificate
from .families import dispatch, small_family
from .shallow import solve_shallow_tfvs
from .twosat import TwoSatInstance, two_sat_solve

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
