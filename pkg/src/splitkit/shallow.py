"""Making a graph triangle-free with at most k splits, each original vertex
split at most once (disjoint splits).

Such a solution is exactly a model of a Boolean formula psi over one
variable per vertex ("is v split?") and two variables per edge (for edge uv,
the variable arrow(u, v) says which child of v the edge attaches to, and
arrow(v, u) the same for u).  psi has one conjunct per triangle stating that
some split corner separates its two triangle edges.  The solver guesses a
small hitting set S of the triangles as the split set, guesses the edge
variables inside S, and decides the rest with 2-SAT.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .graphs import Graph, triangles
from .splitting import SplitSpec, SplittingSequence
from .twosat import BOT, TOP, TwoSatInstance, two_sat_solve


def vertex_var(v):
    return ("v", v)


def arrow(tail, head):
    """Edge variable for edge {tail, head}, governing the head's split:
    false sends the edge to the head's first child, true to the second."""
    return ("e", tail, head)


@dataclass(frozen=True)
class Psi:
    graph: Graph
    triangles: tuple

    def variables(self) -> frozenset:
        out = {vertex_var(v) for v in self.graph.vertices}
        for u, v in self.graph.edges:
            out.add(arrow(u, v))
            out.add(arrow(v, u))
        return frozenset(out)

    def satisfied_by(self, interpretation) -> bool:
        i = frozenset(interpretation)

        def corner_split(x, y, z):
            # x is split and separates edges xy, xz
            return vertex_var(x) in i and ((arrow(y, x) in i) != (arrow(z, x) in i))

        return all(corner_split(a, b, c) or corner_split(b, a, c) or corner_split(c, a, b)
                   for a, b, c in self.triangles)


def build_psi(g: Graph) -> Psi:
    return Psi(g, tuple(triangles(g)))


def interpretation_to_graph(g: Graph, interpretation) -> Graph:
    """The graph after splitting every vertex v with vertex_var(v) set, edges
    routed by the arrow variables.  Children get consecutive fresh ids, two
    per split vertex in ascending vertex order, which matches replaying the
    same splits as a sequence."""
    return interpretation_to_sequence(g, interpretation).final


def interpretation_to_sequence(g: Graph, interpretation) -> SplittingSequence:
    i = frozenset(interpretation)
    split_set = sorted(v for v in g.vertices if vertex_var(v) in i)
    steps = []
    # id of the current descendant holding edge {u, v}, from u's side
    holder = {}

    def side(u, v):
        return holder.get((u, v), u)

    nxt = g.max_id() + 1
    for v in split_set:
        part1, part2 = set(), set()
        for u in sorted(g.neighbors(v)):
            x = side(u, v)
            (part2 if arrow(u, v) in i else part1).add(x)
        spec = SplitSpec(v, frozenset(part1), frozenset(part2), nxt, nxt + 1)
        steps.append(spec)
        for u in g.neighbors(v):
            # arrow(u, v) routed edge {u, v} at v's split just performed
            holder[(v, u)] = nxt + 1 if arrow(u, v) in i else nxt
        nxt += 2
    return SplittingSequence(g, steps)


# ---------------------------------------------------------------------------
# Hitting sets

def enumerate_hitting_sets(tris, k: int):
    """Vertex sets of size <= k hitting every triangle, drawn from the
    vertices of the triangles, by ascending size then lexicographically."""
    tris = [frozenset(t) for t in tris]
    universe = sorted(set().union(*tris)) if tris else []
    for size in range(0, k + 1):
        for combo in combinations(universe, size):
            s = frozenset(combo)
            if all(s & t for t in tris):
                yield s


# ---------------------------------------------------------------------------
# 2-SAT reduction for a fixed split set and fixed intra-set edge variables

def inner_edge_vars(g: Graph, s) -> list:
    """The arrow variables on edges with both endpoints in s, sorted."""
    out = []
    for u, v in sorted(g.edges):
        if u in s and v in s:
            out.extend([arrow(u, v), arrow(v, u)])
    return sorted(out)


def reduce_to_2sat(psi: Psi, s, guess: dict) -> TwoSatInstance:
    """2-SAT instance over the remaining arrow variables, equivalent to psi
    under 'split exactly the vertices of s' with the arrow variables inside
    G[s] fixed by `guess`.  s must hit every triangle."""
    s = frozenset(s)
    if any(not (s & frozenset(t)) for t in psi.triangles):
        raise ValueError("split set does not hit every triangle")
    expected = set(inner_edge_vars(psi.graph, s))
    if set(guess) != expected:
        raise ValueError("guess must assign exactly the arrow variables inside the split set")
    clauses = []
    for t in psi.triangles:
        inside = sorted(set(t) & s)
        if len(inside) == 1:
            (x,) = inside
            y, z = sorted(set(t) - {x})
            # the split corner must separate its two edges
            clauses.append(((arrow(y, x), True), (arrow(z, x), True)))
            clauses.append(((arrow(y, x), False), (arrow(z, x), False)))
        elif len(inside) == 2:
            x, y = inside
            (z,) = set(t) - s
            # corner x works iff arrow(z,x) differs from the fixed arrow(y,x)
            lit_x = (arrow(z, x), not guess[arrow(y, x)])
            lit_y = (arrow(z, y), not guess[arrow(x, y)])
            clauses.append((lit_x, lit_y))
        else:
            a, b, c = sorted(t)

            def sep(x, y, z):
                return guess[arrow(y, x)] != guess[arrow(z, x)]

            ok = sep(a, b, c) or sep(b, a, c) or sep(c, a, b)
            clauses.append(TOP if ok else BOT)
    return TwoSatInstance(clauses)


# ---------------------------------------------------------------------------
# Solver

def solve_shallow_tfvs(g: Graph, k: int):
    """Shortest-split-set-first search for a <= k split shallow sequence
    making g triangle-free; returns a SplittingSequence or None."""
    if k < 0:
        raise ValueError("split budget must be >= 0")
    tris = triangles(g)
    if not tris:
        return SplittingSequence(g, ())
    psi = build_psi(g)
    for s in enumerate_hitting_sets(tris, k):
        inner = inner_edge_vars(g, s)
        for bits in product((False, True), repeat=len(inner)):
            guess = dict(zip(inner, bits))
            inst = reduce_to_2sat(psi, s, guess)
            if inst.has_contradiction:
                continue
            sol = two_sat_solve(inst)
            if sol is None:
                continue
            model = {vertex_var(v) for v in s}
            model.update(var for var, val in guess.items() if val)
            model.update(var for var, val in sol.items() if val)
            assert psi.satisfied_by(model)
            seq = interpretation_to_sequence(g, model)
            assert not triangles(seq.final)
            return seq
    return None
