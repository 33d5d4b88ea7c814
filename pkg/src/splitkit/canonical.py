"""Canonical forms for small graphs.

The canonical form of a graph is the lexicographically smallest
column-by-column adjacency bit string over all vertex orderings compatible
with an iterated degree refinement.  Two graphs have equal canonical forms
iff they are isomorphic.  Intended for graphs with at most ~12 vertices;
used to deduplicate isomorphic states during exact search.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graphs import CapExceeded, Graph

CANONICAL_CAP = 12


def _refine(n, masks, colors):
    """Iterated neighborhood refinement; returns stable colors as small ints."""
    colors = list(colors)
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted(colors[u] for u in range(n) if (masks[v] >> u) & 1)
            sigs.append((colors[v], tuple(nbr)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_key(g: Graph, marks=None, cap: int = CANONICAL_CAP) -> tuple:
    """Hashable canonical key; `marks` optionally colors vertices (e.g. flags
    carried by a search state) so that marked and unmarked vertices are never
    identified."""
    n = g.n
    if n > cap:
        raise CapExceeded(f"canonical form limited to {cap} vertices, got {n}")
    vs = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(vs)}
    masks = [0] * n
    for u, v in g.edges:
        masks[idx[u]] |= 1 << idx[v]
        masks[idx[v]] |= 1 << idx[u]
    init = [0] * n
    if marks is not None:
        for v, c in marks.items():
            init[idx[v]] = int(c)
        ranking = {c: i for i, c in enumerate(sorted(set(init)))}
        init = [ranking[c] for c in init]
    colors = _refine(n, masks, init)

    # cells in ascending color order fix which color sits at each position
    cells = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    cell_seq = [cells[c] for c in sorted(cells)]
    pos_cell = []
    for cell in cell_seq:
        pos_cell.extend([cell] * len(cell))
    color_layout = tuple((c, len(cells[c])) for c in sorted(cells))

    best = None
    perm = []
    used = set()

    def rec(pos, cols):
        nonlocal best
        if pos == n:
            if best is None or cols < best:
                best = list(cols)
            return
        for v in pos_cell[pos]:
            if v in used:
                continue
            col = 0
            mv = masks[v]
            for i in range(pos):
                if (mv >> perm[i]) & 1:
                    col |= 1 << i
            if best is not None:
                trial = cols + [col]
                if trial > best[: pos + 1]:
                    continue
            perm.append(v)
            used.add(v)
            rec(pos + 1, cols + [col])
            perm.pop()
            used.discard(v)

    rec(0, [])
    return (n, color_layout, tuple(best or ()))


def canonical_form(g: Graph, cap: int = CANONICAL_CAP) -> bytes:
    """Canonical byte string; equal iff graphs are isomorphic."""
    return repr(canonical_key(g, cap=cap)).encode()


def are_isomorphic(g: Graph, h: Graph, cap: int = CANONICAL_CAP) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_key(g, cap=cap) == canonical_key(h, cap=cap)


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple:
    """One representative per isomorphism class of n-vertex graphs."""
    seen = {}
    all_pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(all_pairs)):
        es = [e for i, e in enumerate(all_pairs) if (bits >> i) & 1]
        g = Graph(range(n), es)
        key = canonical_key(g)
        if key not in seen:
            seen[key] = g
    return tuple(seen.values())


def nonisomorphic_graphs_upto(n: int) -> list:
    out = []
    for k in range(n + 1):
        out.extend(nonisomorphic_graphs(k))
    return out
