"""Immutable graphs, a small named-graph catalog, embedding enumeration,
and freeness tests for hereditary graph classes.

Vertices are non-negative integers.  All operations return new graphs;
nothing mutates in place, so graphs are safe to use as dict keys and in
search-state sets.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

PERFECT_CAP = 14


class CapExceeded(RuntimeError):
    """Raised when an input is larger than a documented size cap."""


class Graph:
    """Immutable undirected simple graph over integer vertex ids."""

    __slots__ = ("_vertices", "_edges", "_adj", "_hash")

    def __init__(self, vertices=(), edges=()):
        vs = frozenset(int(v) for v in vertices)
        es = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u},{v}) has an endpoint outside the vertex set")
            es.add((u, v) if u < v else (v, u))
        adj = {v: set() for v in vs}
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = vs
        self._edges = frozenset(es)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._hash = hash((vs, self._edges))

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    @property
    def edges(self) -> frozenset:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, u, v) -> bool:
        return (u, v) in self._edges if u < v else (v, u) in self._edges

    def max_id(self) -> int:
        """Largest vertex id, or -1 for the empty graph (so max_id()+1 is always fresh)."""
        return max(self._vertices) if self._vertices else -1

    def isolated_vertices(self) -> frozenset:
        return frozenset(v for v in self._vertices if not self._adj[v])

    def subgraph(self, vs) -> "Graph":
        vs = frozenset(vs) & self._vertices
        return Graph(vs, (e for e in self._edges if e[0] in vs and e[1] in vs))

    def complement(self) -> "Graph":
        return Graph(self._vertices,
                     ((u, v) for u, v in combinations(sorted(self._vertices), 2)
                      if not self.has_edge(u, v)))

    def is_clique(self, vs) -> bool:
        vs = list(vs)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def components(self) -> list:
        seen = set()
        out = []
        for start in sorted(self._vertices):
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def distance(self, u, v) -> float:
        """BFS distance; math.inf when disconnected."""
        if u == v:
            return 0
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y == v:
                        return dist[y]
                    queue.append(y)
        return math.inf

    def relabeled(self, mapping) -> "Graph":
        return Graph((mapping[v] for v in self._vertices),
                     ((mapping[u], mapping[v]) for u, v in self._edges))

    def __eq__(self, other):
        return (isinstance(other, Graph)
                and self._vertices == other._vertices
                and self._edges == other._edges)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class DiGraph:
    """Immutable directed graph; at most one arc per vertex pair."""

    __slots__ = ("vertices", "arcs")

    def __init__(self, vertices=(), arcs=()):
        vs = frozenset(int(v) for v in vertices)
        ar = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in vs or v not in vs:
                raise ValueError(f"arc ({u},{v}) has an endpoint outside the vertex set")
            if (v, u) in ar:
                raise ValueError(f"both orientations of {{{u},{v}}} present")
            ar.add((u, v))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "arcs", frozenset(ar))

    def __setattr__(self, *a):
        raise AttributeError("DiGraph is immutable")

    def underlying(self) -> Graph:
        return Graph(self.vertices, self.arcs)

    def __repr__(self):
        return f"DiGraph(n={len(self.vertices)}, arcs={len(self.arcs)})"


def orient(g: Graph) -> DiGraph:
    """Reference orientation: every edge points from its smaller to its larger id."""
    return DiGraph(g.vertices, g.edges)


# ---------------------------------------------------------------------------
# Named graphs

def named_graph(name: str, n: int | None = None) -> Graph:
    """Catalog lookup: K/P/C families plus a few fixed 4-vertex graphs.

    Complements are spelled with a 'co' prefix, e.g. 'coP3'.
    """
    raw = name.strip()
    key = raw.replace("complement-of ", "co").replace("complement-of-", "co")
    key = key.replace("co-", "co")
    comp = key.startswith("co")
    if comp:
        key = key[2:]
    # allow the size baked into the name, e.g. "K3"
    if n is None and len(key) > 1 and key[1:].isdigit():
        n = int(key[1:])
        key = key[0]
    key = key.lower()
    if key == "k":
        if n is None or n < 0:
            raise ValueError(f"bad clique size {n!r}")
        g = Graph(range(n), combinations(range(n), 2))
    elif key == "p":
        if n is None or n < 1:
            raise ValueError(f"bad path size {n!r}")
        g = Graph(range(n), ((i, i + 1) for i in range(n - 1)))
    elif key == "c":
        if n is None or n < 3:
            raise ValueError(f"bad cycle size {n!r}")
        g = Graph(range(n), [(i, (i + 1) % n) for i in range(n)])
    elif key == "claw":
        g = Graph(range(4), [(0, 1), (0, 2), (0, 3)])
    elif key == "paw":
        g = Graph(range(4), [(0, 1), (0, 2), (1, 2), (2, 3)])
    elif key == "diamond":
        g = Graph(range(4), [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    else:
        raise ValueError(f"unknown graph name {name!r}")
    return g.complement() if comp else g


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; the pieces are relabeled onto consecutive id blocks."""
    vs, es = [], []
    base = 0
    for g in graphs:
        order = {v: base + i for i, v in enumerate(sorted(g.vertices))}
        vs.extend(order.values())
        es.extend((order[u], order[v]) for u, v in g.edges)
        base += g.n
    return Graph(vs, es)


# ---------------------------------------------------------------------------
# Embeddings

def enumerate_embeddings(pattern: Graph, host: Graph, mode: str = "induced") -> list:
    """All injective vertex maps carrying `pattern` into `host`.

    'induced' embeddings preserve edges and non-edges; 'subgraph' embeddings
    only preserve edges.  Returned as dicts, in a deterministic order.
    """
    return list(_embeddings(pattern, host, mode, first_only=False))


def has_embedding(pattern: Graph, host: Graph, mode: str = "induced") -> bool:
    for _ in _embeddings(pattern, host, mode, first_only=True):
        return True
    return False


def _embeddings(pattern, host, mode, first_only):
    if mode not in ("induced", "subgraph"):
        raise ValueError(f"unknown embedding mode {mode!r}")
    induced = mode == "induced"
    pvs = sorted(pattern.vertices)
    if len(pvs) > host.n:
        return
    hvs = sorted(host.vertices)
    mapping = {}
    used = set()

    def rec(i):
        if i == len(pvs):
            yield dict(mapping)
            return
        p = pvs[i]
        pn = pattern.neighbors(p)
        for h in hvs:
            if h in used:
                continue
            if not induced and host.degree(h) < pattern.degree(p):
                continue
            ok = True
            for q in pvs[:i]:
                adj_p = q in pn
                adj_h = host.has_edge(mapping[q], h)
                if adj_p and not adj_h:
                    ok = False
                    break
                if induced and not adj_p and adj_h:
                    ok = False
                    break
            if not ok:
                continue
            mapping[p] = h
            used.add(h)
            yield from rec(i + 1)
            used.discard(h)
            del mapping[p]

    for emb in rec(0):
        yield emb
        if first_only:
            return


# ---------------------------------------------------------------------------
# Forbidden families and freeness

@dataclass(frozen=True)
class ForbiddenFamily:
    """A family of forbidden graphs defining a hereditary class.

    kind 'finite' lists explicit patterns (induced or subgraph embeddings);
    the two named infinite kinds are 'odd-cycles' and 'odd-holes-antiholes'.
    """

    kind: str
    mode: str = "induced"
    patterns: tuple = ()

    @classmethod
    def finite(cls, patterns, mode: str = "induced") -> "ForbiddenFamily":
        if mode not in ("induced", "subgraph"):
            raise ValueError(f"unknown embedding mode {mode!r}")
        return cls("finite", mode, tuple(patterns))

    @classmethod
    def odd_cycles(cls) -> "ForbiddenFamily":
        return cls("odd-cycles")

    @classmethod
    def odd_holes_antiholes(cls) -> "ForbiddenFamily":
        return cls("odd-holes-antiholes")

    def contains_k0(self) -> bool:
        return self.kind == "finite" and any(p.n == 0 for p in self.patterns)


def is_free(host: Graph, family: ForbiddenFamily, perfect_cap: int = PERFECT_CAP) -> bool:
    """Does `host` avoid every member of the family?"""
    if family.kind == "finite":
        return not any(has_embedding(p, host, family.mode) for p in family.patterns)
    if family.kind == "odd-cycles":
        return is_bipartite(host)
    if family.kind == "odd-holes-antiholes":
        if host.n > perfect_cap:
            raise CapExceeded(
                f"perfect-graph check limited to {perfect_cap} vertices, got {host.n}")
        return not _has_odd_hole_or_antihole(host)
    raise ValueError(f"unknown family kind {family.kind!r}")


def is_bipartite(g: Graph) -> bool:
    color = {}
    for start in g.vertices:
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def _induces_cycle(g: Graph, vs) -> bool:
    sub = g.subgraph(vs)
    return (all(sub.degree(v) == 2 for v in vs)
            and len(sub.components()) == 1)


def _has_odd_hole_or_antihole(g: Graph) -> bool:
    co = g.complement()
    vs = sorted(g.vertices)
    for size in range(5, g.n + 1, 2):
        for subset in combinations(vs, size):
            if _induces_cycle(g, subset) or _induces_cycle(co, subset):
                return True
    return False


# ---------------------------------------------------------------------------
# Structure helpers

def triangles(g: Graph) -> list:
    """All triangles as sorted triples, in lexicographic order."""
    out = []
    for u, v in sorted(g.edges):
        for w in sorted(g.neighbors(u) & g.neighbors(v)):
            if w > v:
                out.append((u, v, w))
    return sorted(out)


def subdivide(g: Graph, t: int) -> Graph:
    return subdivide_with_paths(g, t)[0]


def subdivide_with_paths(g: Graph, t: int):
    """Replace every edge by a path with t fresh internal vertices.

    Fresh ids are allocated from max_id()+1 upward, edge by edge in sorted
    order.  Returns (graph, {edge: tuple of its internal vertices}).
    """
    if t < 0:
        raise ValueError("subdivision count must be >= 0")
    nxt = g.max_id() + 1
    vs = list(g.vertices)
    es = []
    paths = {}
    for u, v in sorted(g.edges):
        inner = tuple(range(nxt, nxt + t))
        nxt += t
        paths[(u, v)] = inner
        vs.extend(inner)
        chain = [u, *inner, v]
        es.extend(zip(chain, chain[1:]))
    return Graph(vs, es), paths


def connectivity(g: Graph, cap: int = 12) -> int:
    """Vertex connectivity by brute force over separators; n-1 for complete graphs."""
    if g.n > cap:
        raise CapExceeded(f"connectivity check limited to {cap} vertices, got {g.n}")
    if g.n == 0:
        return 0
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    if len(g.components()) > 1:
        return 0
    vs = sorted(g.vertices)
    for size in range(1, g.n - 1):
        for cut in combinations(vs, size):
            rest = g.subgraph(g.vertices - set(cut))
            if rest.n and len(rest.components()) > 1:
                return size
    return g.n - 1


# ---------------------------------------------------------------------------
# Text format
#
# Line 1: "n m".  Then m lines "u v" with 0 <= u < v < n.  Blank lines and
# lines starting with '#' are ignored.

def parse_graph(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty graph file")
    try:
        n, m = map(int, lines[0].split())
    except Exception as exc:
        raise ValueError(f"bad header line {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise ValueError("negative counts in header")
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges, file has {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            u, v = map(int, ln.split())
        except Exception as exc:
            raise ValueError(f"bad edge line {ln!r}") from exc
        if not (0 <= u < v < n):
            raise ValueError(f"edge line {ln!r} violates 0 <= u < v < n")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise ValueError("duplicate edge")
    return Graph(range(n), edges)


def format_graph(g: Graph) -> str:
    """Serialize; vertices are relabeled onto 0..n-1 in ascending id order."""
    order = {v: i for i, v in enumerate(sorted(g.vertices))}
    es = sorted(tuple(sorted((order[u], order[v]))) for u, v in g.edges)
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in es)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))
