"""Polynomial decision procedures for forbidden families whose members have
at most three vertices, plus sigma clique covers and threshold / split-graph
recognition.

Families over {K0, K1, K2, coK2, K3, coK3, P3, coP3} split into three
regimes: members that splitting can never destroy (anything with a
non-edge, or too few vertices) reduce the problem to plain recognition; the
two NP-complete singletons {P3} and {K3} are flagged as such; the remaining
cases have dedicated polynomial algorithms (an edge-counting formula for
{P3, K3}, a P3-midpoint test for {P3, coK3}, and a Ramsey-bounded search
whenever both K3 and coK3 are forbidden).
"""

from __future__ import annotations

from itertools import combinations

from .graphs import ForbiddenFamily, Graph, has_embedding, is_free, named_graph
from .splitting import apply_split, enumerate_splits

SMALL_NAMES = ("K0", "K1", "K2", "coK2", "K3", "coK3", "P3", "coP3")

SMALL_PATTERNS = {name: named_graph(name) for name in SMALL_NAMES}


def small_family(*names) -> frozenset:
    bad = set(names) - set(SMALL_NAMES)
    if bad:
        raise ValueError(f"not small-pattern names: {sorted(bad)}")
    return frozenset(names)


def to_forbidden_family(names) -> ForbiddenFamily:
    return ForbiddenFamily.finite(
        [SMALL_PATTERNS[n] for n in sorted(names)], mode="induced")


def all_small_families():
    """All 2^8 subsets of the small patterns, empty set included."""
    out = []
    for r in range(len(SMALL_NAMES) + 1):
        out.extend(frozenset(c) for c in combinations(SMALL_NAMES, r))
    return out


def _recognize(g: Graph, names) -> str:
    return "yes" if is_free(g, to_forbidden_family(names)) else "no"


def dispatch(names, g: Graph, k: int) -> str:
    """Decide (g, k) for a small family, or report 'np-hard-case'.

    Splitting cannot destroy a pattern with a non-edge or with < 2 vertices,
    and cannot destroy P3 or K3 without creating a coP3, so every family
    containing such a pattern is plain recognition.  That leaves families
    inside {K3, coK3, P3}: the NP-complete singletons, the Ramsey-bounded
    {K3, coK3} cases, and the two algorithmic pairs.
    """
    names = small_family(*names)
    if "K0" in names:
        return "no"  # the empty graph embeds everywhere
    if "K1" in names:
        return "yes" if g.n == 0 else "no"
    if "K2" in names:
        if g.m > 0:
            return "no"
        return _recognize(g, names)
    if "coK2" in names or "coP3" in names:
        # an indestructible pattern: either it is present (reject), or the
        # instance is recognition because destroying P3/K3 creates a coP3
        for nm in ("coK2", "coP3"):
            if nm in names and has_embedding(SMALL_PATTERNS[nm], g):
                return "no"
        return _recognize(g, names)
    # names is now a subset of {K3, coK3, P3}
    if names == frozenset({"P3"}) or names == frozenset({"K3"}):
        return "np-hard-case"
    if {"K3", "coK3"} <= names:
        return "yes" if solve_ramsey_k3(g, k, names) else "no"
    if names == frozenset({"K3", "P3"}):
        return "yes" if solve_p3_k3(g, k) else "no"
    if names == frozenset({"coK3", "P3"}):
        return "yes" if solve_p3_k3bar(g, k) else "no"
    if names == frozenset({"coK3"}):
        return _recognize(g, names)
    assert not names
    return "yes"


# ---------------------------------------------------------------------------
# {P3, K3}: cluster graphs with all clusters of size <= 2

def solve_p3_k3(g: Graph, k: int) -> bool:
    """(g, k) is positive for forbidden {P3, K3} iff k >= 2m + i - n, where i
    counts isolated vertices: the target graphs are exactly the graphs whose
    non-isolated part is a perfect matching."""
    return k >= p3_k3_threshold(g)


def p3_k3_threshold(g: Graph) -> int:
    """Exact minimum number of splits for forbidden {P3, K3}.

    phi(g) = 2m + i - n drops by at most 1 per split (disjoint nontrivial
    splits lose exactly 1; trivial splits keep it; overlapping splits raise
    it) and vanishes exactly on the target graphs, so it is a lower bound
    that peel_to_matching attains."""
    return 2 * g.m + len(g.isolated_vertices()) - g.n


def peel_to_matching(g: Graph) -> "SplittingSequence":
    """An optimal splitting sequence for forbidden {P3, K3}: while some
    vertex has two neighbors, split one neighbor off disjointly.  The length
    always equals p3_k3_threshold(g)."""
    from .splitting import SplittingSequence, make_split

    steps = []
    cur = g
    while True:
        v = min((v for v in cur.vertices if cur.degree(v) >= 2), default=None)
        if v is None:
            break
        ns = sorted(cur.neighbors(v))
        spec = make_split(cur, v, {ns[0]}, set(ns[1:]))
        steps.append(spec)
        cur = apply_split(cur, spec)
    return SplittingSequence(g, steps)


# ---------------------------------------------------------------------------
# {P3, coK3}

def midpoints(g: Graph) -> frozenset:
    """Vertices that are the middle of some induced P3, i.e. have two
    nonadjacent neighbors."""
    out = set()
    for v in g.vertices:
        ns = sorted(g.neighbors(v))
        if any(not g.has_edge(a, b) for a, b in combinations(ns, 2)):
            out.add(v)
    return frozenset(out)


def solve_p3_k3bar(g: Graph, k: int) -> bool:
    """Decide (g, k) for forbidden {P3, coK3}: coK3 is indestructible; when
    only P3s remain, the target is a cluster graph of at most two clusters,
    which is reachable iff g is covered by two cliques overlapping exactly in
    the midpoint set M, at the cost of one split per midpoint.

    Equivalently: M is a clique, g minus M falls apart into exactly two
    cliques, each fully adjacent to M, and |M| <= k.  The clique condition on
    M alone is not sufficient (P4 is the smallest counterexample: both inner
    vertices are midpoints and adjacent, yet no two cliques cover P4)."""
    if has_embedding(SMALL_PATTERNS["coK3"], g):
        return False
    if not has_embedding(SMALL_PATTERNS["P3"], g):
        return True
    m = midpoints(g)
    if not g.is_clique(m) or len(m) > k:
        return False
    comps = g.subgraph(g.vertices - m).components()
    return len(comps) == 2 and all(g.is_clique(c | m) for c in comps)


# ---------------------------------------------------------------------------
# Families forbidding both K3 and coK3: Ramsey-bounded search

RAMSEY_33 = 6  # R(3,3): every graph on >= 6 vertices has a K3 or a coK3


def solve_ramsey_k3(g: Graph, k: int, names) -> bool:
    """Decide (g, k) for a family containing both K3 and coK3.  Any graph on
    >= 6 vertices contains one of them, so positives need a final graph on
    <= 5 vertices and the search depth is bounded by 5 - n."""
    if not {"K3", "coK3"} <= frozenset(names):
        raise ValueError("solve_ramsey_k3 needs both K3 and coK3 forbidden")
    if g.n >= RAMSEY_33:
        return False
    family = to_forbidden_family(names)
    budget = min(k, RAMSEY_33 - 1 - g.n)

    def search(h: Graph, left: int) -> bool:
        if is_free(h, family):
            return True
        if left == 0:
            return False
        for v in sorted(h.vertices):
            for spec in enumerate_splits(h, v, "all"):
                if search(apply_split(h, spec), left - 1):
                    return True
        return False

    return search(g, budget)


# ---------------------------------------------------------------------------
# Sigma clique covers
#
# A sigma clique cover is a collection of cliques covering every edge; its
# weight is the sum of the clique sizes.  A graph can be turned into a
# cluster graph (P3-free) with k splits iff it has a cover of weight at most
# n - i + k, so the minimum split count is min_weight - n + i.

SCC_CAP = 8


def verify_scc(g: Graph, cover) -> bool:
    cover = [frozenset(c) for c in cover]
    if not all(c <= g.vertices and g.is_clique(c) for c in cover):
        return False
    covered = set()
    for c in cover:
        covered.update(tuple(sorted(p)) for p in combinations(sorted(c), 2))
    return set(g.edges) <= covered


def scc_weight(cover) -> int:
    return sum(len(c) for c in cover)


def _maximal_cliques(g: Graph):
    out = []

    def bron(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda v: len(g.neighbors(v) & p), default=None)
        for v in sorted(p - (g.neighbors(pivot) if pivot is not None else set())):
            bron(r | {v}, p & g.neighbors(v), x & g.neighbors(v))
            p = p - {v}
            x = x | {v}

    bron(frozenset(), g.vertices, frozenset())
    return out


def _all_cliques(g: Graph):
    out = []
    vs = sorted(g.vertices)
    for r in range(2, g.n + 1):
        out.extend(frozenset(c) for c in combinations(vs, r) if g.is_clique(c))
    return out


def min_scc_weight(g: Graph, cap: int = SCC_CAP, maximal_only: bool = True) -> int:
    """Minimum weight of a sigma clique cover, by branch and bound on the
    lexicographically first uncovered edge.  By default only maximal cliques
    are offered as cover members; pass maximal_only=False to search over all
    cliques (used to cross-check the restriction on tiny graphs)."""
    if g.n > cap:
        raise ValueError(f"min_scc_weight limited to {cap} vertices, got {g.n}")
    cliques = _maximal_cliques(g) if maximal_only else _all_cliques(g)
    cliques = [c for c in cliques if len(c) >= 2]
    best = [sum(len(c) for c in cliques) + 1]

    def rec(uncovered, weight):
        if weight >= best[0]:
            return
        if not uncovered:
            best[0] = weight
            return
        u, v = min(uncovered)
        for c in cliques:
            if u in c and v in c:
                gone = {e for e in uncovered if e[0] in c and e[1] in c}
                rec(uncovered - gone, weight + len(c))

    rec(frozenset(g.edges), 0)
    if g.m == 0:
        return 0
    return best[0]


def min_splits_to_cluster(g: Graph, cap: int = SCC_CAP) -> int:
    """Minimum splits making g a cluster graph (forbidden {P3})."""
    return min_scc_weight(g, cap=cap) - g.n + len(g.isolated_vertices())


# ---------------------------------------------------------------------------
# Threshold and split graphs: splitting never helps, since destroying any of
# their forbidden patterns creates a coC4, itself forbidden.

THRESHOLD_FAMILY = ForbiddenFamily.finite(
    [named_graph("P4"), named_graph("C4"), named_graph("coC4")])
SPLIT_GRAPH_FAMILY = ForbiddenFamily.finite(
    [named_graph("C4"), named_graph("C5"), named_graph("coC4")])


def recognize_threshold(g: Graph) -> bool:
    return is_free(g, THRESHOLD_FAMILY)


def recognize_split(g: Graph) -> bool:
    return is_free(g, SPLIT_GRAPH_FAMILY)


def solve_threshold_vs(g: Graph, k: int) -> bool:
    return recognize_threshold(g)


def solve_split_vs(g: Graph, k: int) -> bool:
    return recognize_split(g)
