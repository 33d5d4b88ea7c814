"""Gadget constructions that transfer vertex-cover-style hardness to
vertex-splitting problems, together with executable certificate translations
in both directions.

The central builder takes an oriented skeleton graph, a splitting
configuration (a pattern graph H with designated endpoints a, b and a split
plan for each), and a vertex set S of the skeleton.  Every arc is replaced
by a copy of H; an endpoint copy is pre-split iff the corresponding skeleton
vertex lies in S; finally the attachment points of all arcs at a skeleton
vertex are identified.  A map chi records which construction vertices came
from each skeleton vertex and arc.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .graphs import (DiGraph, Graph, disjoint_union, has_embedding, named_graph,
                     orient, subdivide_with_paths, triangles)
from .splitting import SplitSpec, SplittingSequence, apply_split


# ---------------------------------------------------------------------------
# Splitting configurations

@dataclass(frozen=True)
class SplittingConfiguration:
    """Pattern graph H with endpoints a, b and split plans (A1, A2), (B1, B2)
    covering their neighborhoods; all four parts must be non-empty."""

    pattern: Graph
    a: int
    a1: frozenset
    a2: frozenset
    b: int
    b1: frozenset
    b2: frozenset

    def __post_init__(self):
        h = self.pattern
        if self.a == self.b or self.a not in h.vertices or self.b not in h.vertices:
            raise ValueError("endpoints must be two distinct pattern vertices")
        if not (self.a1 and self.a2 and self.b1 and self.b2):
            raise ValueError("all four split parts must be non-empty")
        if self.a1 | self.a2 != h.neighbors(self.a):
            raise ValueError("a-parts must cover N(a)")
        if self.b1 | self.b2 != h.neighbors(self.b):
            raise ValueError("b-parts must cover N(b)")

    def is_disjoint(self) -> bool:
        return not (self.a1 & self.a2) and not (self.b1 & self.b2)


def width(config: SplittingConfiguration) -> float:
    """Minimum, over splitting either endpoint alone, of the distance between
    the two fresh children; math.inf when they end up disconnected."""
    h = config.pattern
    nxt = h.max_id() + 1
    best = math.inf
    for v, p1, p2 in ((config.a, config.a1, config.a2),
                      (config.b, config.b1, config.b2)):
        split = apply_split(h, SplitSpec(v, p1, p2, nxt, nxt + 1))
        best = min(best, split.distance(nxt, nxt + 1))
    return best


def triangle_configuration() -> SplittingConfiguration:
    """K3 with both endpoints split one-neighbor-per-part."""
    h = named_graph("K3")  # vertices 0,1,2; endpoints 0 and 1
    return SplittingConfiguration(h, 0, frozenset({1}), frozenset({2}),
                                  1, frozenset({0}), frozenset({2}))


def square_configuration() -> SplittingConfiguration:
    """C4 with opposite endpoints split one-neighbor-per-part."""
    h = named_graph("C4")  # cycle 0-1-2-3; endpoints 0 and 2
    return SplittingConfiguration(h, 0, frozenset({1}), frozenset({3}),
                                  2, frozenset({1}), frozenset({3}))


def pentagon_configuration() -> SplittingConfiguration:
    """C5 with adjacent endpoints, used by the perfect-graph reduction."""
    h = named_graph("C5")  # cycle 0-1-2-3-4; endpoints 0 and 1
    return SplittingConfiguration(h, 0, frozenset({1}), frozenset({4}),
                                  1, frozenset({0}), frozenset({2}))


# ---------------------------------------------------------------------------
# The gadget builder

@dataclass(frozen=True)
class ConstrResult:
    graph: Graph
    chi_vertex: dict    # skeleton vertex -> frozenset of construction vertices
    chi_arc: dict       # skeleton arc -> frozenset of construction vertices


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the smaller id as representative
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def constr(skeleton: DiGraph, config: SplittingConfiguration, s) -> ConstrResult:
    """Replace every arc of the skeleton by a copy of the configuration
    pattern, pre-splitting the a-end iff the tail is in s and the b-end iff
    the head is in s, then glue attachment points vertex by vertex."""
    s = frozenset(s)
    if not s <= skeleton.vertices:
        raise ValueError("s must be a subset of the skeleton vertices")
    h = config.pattern
    hv = sorted(h.vertices)
    verts = []
    edges = []
    gadget_verts = {}        # arc -> list of construction vertex ids
    attach = {}              # (skeleton vertex, 1 or 2) -> list of attachment ids
    for v in skeleton.vertices:
        attach[(v, 1)] = []
        attach[(v, 2)] = []
    nxt = 0
    for arc in sorted(skeleton.arcs):
        tail, head = arc
        local = {u: nxt + i for i, u in enumerate(hv)}
        nxt += len(hv)
        cur = h.relabeled(local)
        a_ids = (local[config.a], None)
        b_ids = (local[config.b], None)
        if tail in s:
            c1, c2 = nxt, nxt + 1
            nxt += 2
            cur = apply_split(cur, SplitSpec(
                local[config.a],
                frozenset(local[x] for x in config.a1),
                frozenset(local[x] for x in config.a2), c1, c2))
            a_ids = (c1, c2)
        if head in s:
            # B-parts may mention a; after an a-split, a is replaced by the
            # descendant that kept the edge ab (unique for disjoint splits)
            def b_part(part):
                out = set()
                for x in part:
                    if x == config.a and tail in s:
                        in1 = config.b in config.a1
                        in2 = config.b in config.a2
                        if in1 and in2:
                            raise ValueError(
                                "double split with adjacent endpoints needs a disjoint a-split")
                        out.add(a_ids[0] if in1 else a_ids[1])
                    else:
                        out.add(local[x])
                return frozenset(out)

            c1, c2 = nxt, nxt + 1
            nxt += 2
            cur = apply_split(cur, SplitSpec(
                local[config.b], b_part(config.b1), b_part(config.b2), c1, c2))
            b_ids = (c1, c2)
        verts.extend(cur.vertices)
        edges.extend(cur.edges)
        gadget_verts[arc] = sorted(cur.vertices)
        # attachment points: both children when split, else the endpoint
        # itself as the first point and nothing as the second
        for (v, ids) in ((tail, a_ids), (head, b_ids)):
            if ids[1] is None:
                attach[(v, 1)].append(ids[0])
            else:
                attach[(v, 1)].append(ids[0])
                attach[(v, 2)].append(ids[1])

    uf = _UnionFind()
    for x in verts:
        uf.find(x)
    for key, ids in attach.items():
        for x in ids[1:]:
            uf.union(ids[0], x)
    final_vs = {uf.find(x) for x in verts}
    final_es = set()
    for u, v in edges:
        ru, rv = uf.find(u), uf.find(v)
        if ru != rv:
            final_es.add((min(ru, rv), max(ru, rv)))
    graph = Graph(final_vs, final_es)
    chi_vertex = {
        v: frozenset(uf.find(x) for x in attach[(v, 1)] + attach[(v, 2)])
        for v in skeleton.vertices}
    chi_arc = {arc: frozenset(uf.find(x) for x in ids)
               for arc, ids in gadget_verts.items()}
    return ConstrResult(graph, chi_vertex, chi_arc)


def extract_vertex_cover(seq: SplittingSequence, res: ConstrResult,
                         skeleton: DiGraph | None = None) -> frozenset:
    """Map each split vertex of a splitting sequence on a construction back
    to a skeleton vertex; the image is a vertex cover of the skeleton of size
    at most the number of splits.  When the skeleton is given, the result is
    checked to stay inside its vertex set."""
    cover = set()
    for anc in seq.split_ancestors():
        owner = None
        for v, vs in res.chi_vertex.items():
            if anc in vs:
                owner = v
                break
        if owner is None:
            for (tail, head), vs in sorted(res.chi_arc.items()):
                if anc in vs:
                    owner = min(tail, head)
                    break
        if owner is None:
            raise ValueError(f"split vertex {anc} belongs to no gadget")
        cover.add(owner)
    if skeleton is not None and not cover <= skeleton.vertices:
        raise ValueError("extracted cover leaves the skeleton vertex set")
    return frozenset(cover)


def check_separating_on(skeleton: DiGraph, config: SplittingConfiguration,
                        family_patterns) -> bool:
    """Spot check: for every vertex cover S of the skeleton, every subgraph
    embedding of a family pattern into constr(skeleton, config, S) stays
    inside a single gadget."""
    g = skeleton.underlying()
    vs = sorted(g.vertices)
    from itertools import combinations as _comb

    covers = []
    for r in range(len(vs) + 1):
        for c in _comb(vs, r):
            cs = set(c)
            if all(u in cs or v in cs for u, v in g.edges):
                covers.append(frozenset(c))
    from .graphs import enumerate_embeddings
    for s in covers:
        res = constr(skeleton, config, s)
        for pat in family_patterns:
            for emb in enumerate_embeddings(pat, res.graph, mode="subgraph"):
                image = set(emb.values())
                if not any(image <= arc_vs for arc_vs in res.chi_arc.values()):
                    return False
    return True


def subdivision_parameter(patterns) -> int:
    """L = 2 * (largest diameter in the family): subdividing cubic skeletons
    L-fold keeps forbidden patterns from straddling gadgets."""
    best = 0
    for p in patterns:
        for u in p.vertices:
            for v in p.vertices:
                d = p.distance(u, v)
                if math.isinf(d):
                    raise ValueError("diameter undefined for a disconnected pattern")
                best = max(best, int(d))
    return 2 * best


# ---------------------------------------------------------------------------
# Vertex cover utilities

def min_vertex_cover(g: Graph) -> frozenset:
    """A minimum vertex cover, by branching on an endpoint of some edge."""
    best = [frozenset(g.vertices)]

    def rec(edges, chosen):
        if len(chosen) >= len(best[0]):
            return
        if not edges:
            best[0] = frozenset(chosen)
            return
        u, v = min(edges)
        for pick in (u, v):
            rec([e for e in edges if pick not in e], chosen | {pick})

    rec(sorted(g.edges), set())
    return best[0]


def is_vertex_cover(g: Graph, cover) -> bool:
    cover = set(cover)
    return all(u in cover or v in cover for u, v in g.edges)


# ---------------------------------------------------------------------------
# Subdivided vertex cover instances

def is_cubic(g: Graph) -> bool:
    return g.n > 0 and all(g.degree(v) == 3 for v in g.vertices)


def subdivided_vc_instance(g: Graph, ell: int, k: int):
    """(2*ell-subdivision of a cubic graph g, budget k + ell*m): vertex cover
    instances stay equivalent under double subdivision with this offset.
    The per-edge subdivision paths, needed by the cover translation maps,
    are recomputed with subdivide_with_paths(g, 2*ell)."""
    if not is_cubic(g):
        raise ValueError("subdivided_vc_instance expects a cubic graph")
    if ell < 0:
        raise ValueError("subdivision rounds must be >= 0")
    gstar, _ = subdivide_with_paths(g, 2 * ell)
    return gstar, k + ell * g.m


def subdivided_cover_forward(g: Graph, ell: int, cover, paths) -> frozenset:
    """Lift a vertex cover of g to the 2*ell-subdivision, adding ell vertices
    per edge: every second internal vertex counted from a covered endpoint."""
    cover = set(cover)
    if not is_vertex_cover(g, cover):
        raise ValueError("not a vertex cover of the base graph")
    out = set(cover)
    for (u, v), inner in paths.items():
        chain = [u, *inner, v]
        if u not in cover:
            chain.reverse()
        out.update(chain[2::2][:ell])
    return frozenset(out)


def subdivided_cover_backward(g: Graph, ell: int, coverstar, paths) -> frozenset:
    """Project a cover of the 2*ell-subdivision down to g, losing at least
    ell vertices per edge: repeatedly contract the first two internal
    vertices of a path; at least one of them is in the cover, and if both
    were, re-cover the contracted edge with its first endpoint."""
    cover = set(coverstar)
    for (u, v), inner in paths.items():
        chain = [u, *inner, v]
        for _ in range(ell):
            p, q = chain[1], chain[2]
            had = {p, q} & cover
            if not had:
                raise ValueError("input is not a vertex cover of the subdivision")
            cover -= {p, q}
            chain = [chain[0]] + chain[3:]
            if len(had) == 2 and chain[0] not in cover and chain[1] not in cover:
                cover.add(chain[0])
    return frozenset(cover)


# ---------------------------------------------------------------------------
# Bipartite and perfect reductions

def is_double_subdivided_cubic(g: Graph) -> bool:
    """Is g a 2-subdivision of some cubic graph?  Degrees are 2 and 3, and
    each maximal chain of degree-2 vertices between branch vertices has
    exactly two members."""
    degs = {g.degree(v) for v in g.vertices}
    if not g.vertices or not degs <= {2, 3} or 3 not in degs:
        return False
    branch = {v for v in g.vertices if g.degree(v) == 3}
    seen_chains = set()
    for b in branch:
        for start in g.neighbors(b):
            if start in branch:
                return False  # adjacent branch vertices: not subdivided
            chain = [b, start]
            while g.degree(chain[-1]) == 2:
                prev, cur = chain[-2], chain[-1]
                (nxt,) = set(g.neighbors(cur)) - {prev}
                chain.append(nxt)
            if chain[-1] not in branch or len(chain) != 4:
                return False
            seen_chains.add(frozenset(chain[1:-1]))
    covered = branch | set().union(*seen_chains) if seen_chains else branch
    return covered == g.vertices


def bipartite_reduction(g: Graph, k: int):
    """Per edge, add an apex adjacent to both endpoints, turning every edge
    into a triangle; splitting to bipartite then mirrors covering edges.
    Intended for 2-subdivisions of cubic graphs; warns otherwise."""
    if not is_double_subdivided_cubic(g):
        warnings.warn("bipartite_reduction is calibrated for 2-subdivided cubic graphs",
                      stacklevel=2)
    nxt = g.max_id() + 1
    vs = list(g.vertices)
    es = list(g.edges)
    for u, v in sorted(g.edges):
        vs.append(nxt)
        es.extend([(u, nxt), (v, nxt)])
        nxt += 1
    return Graph(vs, es), k


def perfect_reduction(g: Graph, k: int):
    """Per edge uv, add a fresh path u-c1-c2-c3-v, closing every edge into a
    5-cycle; splitting to perfect then mirrors covering edges.  Intended for
    2-subdivisions of cubic graphs; warns otherwise."""
    if not is_double_subdivided_cubic(g):
        warnings.warn("perfect_reduction is calibrated for 2-subdivided cubic graphs",
                      stacklevel=2)
    nxt = g.max_id() + 1
    vs = list(g.vertices)
    es = list(g.edges)
    for u, v in sorted(g.edges):
        c = (nxt, nxt + 1, nxt + 2)
        nxt += 3
        vs.extend(c)
        es.extend([(u, c[0]), (c[0], c[1]), (c[1], c[2]), (c[2], v)])
    return Graph(vs, es), k


# ---------------------------------------------------------------------------
# Triangle-free splitting is hard already for k = 2
#
# Instance: three disjoint copies of a triangle-free graph g, one universal
# vertex u over all copies, and (k - 2) disjoint extra triangles.  A k-split
# solution must spend one split on each extra triangle and at most two on u,
# whose <= 3 descendants then read off a proper 3-coloring of g.

@dataclass(frozen=True)
class ParanpInstance:
    graph: Graph
    base: Graph
    copies: tuple          # three dicts: base vertex -> instance vertex
    universal: int
    extra_triangles: tuple
    k: int


def paranp_reduction(g: Graph, k: int) -> ParanpInstance:
    if k < 2:
        raise ValueError("the construction needs k >= 2")
    if triangles(g):
        raise ValueError("the base graph must be triangle-free")
    order = sorted(g.vertices)
    n = len(order)
    copies = tuple({v: i * n + j for j, v in enumerate(order)} for i in range(3))
    vs = []
    es = []
    for cp in copies:
        vs.extend(cp.values())
        es.extend((cp[u], cp[v]) for u, v in g.edges)
    u = 3 * n
    vs.append(u)
    es.extend((u, x) for x in range(3 * n))
    nxt = u + 1
    extra = []
    for _ in range(k - 2):
        t = (nxt, nxt + 1, nxt + 2)
        nxt += 3
        extra.append(t)
        vs.extend(t)
        es.extend([(t[0], t[1]), (t[0], t[2]), (t[1], t[2])])
    return ParanpInstance(Graph(vs, es), g, copies, u, tuple(extra), k)


def coloring_to_sequence(inst: ParanpInstance, coloring: dict) -> SplittingSequence:
    """Translate a proper 3-coloring of the base graph (colors 1..3) into a
    k-split sequence making the instance triangle-free: split the universal
    vertex by color 1 vs. the rest, split the second child by color 2 vs. 3,
    then split one corner of each extra triangle."""
    g = inst.graph
    if set(coloring) != set(inst.base.vertices) or not set(coloring.values()) <= {1, 2, 3}:
        raise ValueError("need a color in {1,2,3} for every base vertex")
    for x, y in inst.base.edges:
        if coloring[x] == coloring[y]:
            raise ValueError(f"coloring is not proper on edge ({x},{y})")

    def copies_with(colors):
        return frozenset(cp[v] for cp in inst.copies
                         for v in inst.base.vertices if coloring[v] in colors)

    steps = []
    nxt = g.max_id() + 1
    steps.append(SplitSpec(inst.universal, copies_with({1}), copies_with({2, 3}),
                           nxt, nxt + 1))
    second = nxt + 1
    nxt += 2
    steps.append(SplitSpec(second, copies_with({2}), copies_with({3}), nxt, nxt + 1))
    nxt += 2
    for t in inst.extra_triangles:
        steps.append(SplitSpec(t[0], frozenset({t[1]}), frozenset({t[2]}),
                               nxt, nxt + 1))
        nxt += 2
    return SplittingSequence(g, steps)


def sequence_to_coloring(seq: SplittingSequence, inst: ParanpInstance):
    """Read a proper 3-coloring of the base graph off a splitting sequence
    whose final graph is triangle-free: pick a copy none of whose vertices
    was split, and color each of its vertices by which descendant of the
    universal vertex it is attached to.  Returns None when the final graph
    still has a triangle (or the sequence leaves no usable copy)."""
    if triangles(seq.final):
        return None
    split_anc = seq.split_ancestors()
    copy = None
    for cp in inst.copies:
        if not (split_anc & set(cp.values())):
            copy = cp
            break
    if copy is None:
        return None
    u_desc = sorted(seq.descendants(inst.universal))
    coloring = {}
    for v, iv in copy.items():
        attached = sorted(set(u_desc) & seq.final.neighbors(iv))
        if not attached:
            return None
        coloring[v] = u_desc.index(attached[0]) + 1
    if not set(coloring.values()) <= {1, 2, 3}:
        return None
    for x, y in inst.base.edges:
        if coloring[x] == coloring[y]:
            return None
    return coloring


# ---------------------------------------------------------------------------
# A small cubic catalog for experiments

def cubic_catalog() -> dict:
    prism = Graph(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                             (0, 3), (1, 4), (2, 5)])
    k33 = Graph(range(6), [(u, v) for u in range(3) for v in range(3, 6)])
    wagner = Graph(range(8), [(i, (i + 1) % 8) for i in range(8)]
                   + [(i, i + 4) for i in range(4)])
    return {"k4": named_graph("K4"), "k33": k33, "prism": prism, "wagner": wagner}
