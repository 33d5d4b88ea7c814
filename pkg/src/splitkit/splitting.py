"""Vertex splits, their inverse merges, split enumeration, and splitting
sequences with ancestry and edge-descent tracking.

A split replaces a vertex v by two new nonadjacent vertices whose
neighborhoods cover N(v).  A sequence records the initial graph plus the
ordered splits; replaying it yields every intermediate graph, the ancestor
(in the initial graph) of every vertex ever created, and for each initial
edge the set of its descendant edges in the final graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .graphs import Graph


@dataclass(frozen=True)
class SplitSpec:
    """One split: `target` is replaced by `child1` (adjacent to part1) and
    `child2` (adjacent to part2)."""

    target: int
    part1: frozenset
    part2: frozenset
    child1: int
    child2: int

    def is_disjoint(self) -> bool:
        return not (self.part1 & self.part2)

    def is_trivial(self) -> bool:
        return not self.part1 or not self.part2


def apply_split(g: Graph, spec: SplitSpec) -> Graph:
    """Apply one split; validates the spec against g."""
    v = spec.target
    if v not in g.vertices:
        raise ValueError(f"split target {v} not in graph")
    if spec.child1 == spec.child2:
        raise ValueError("split children must be distinct")
    for c in (spec.child1, spec.child2):
        if c in g.vertices:
            raise ValueError(f"child id {c} already in use")
    nv = g.neighbors(v)
    if spec.part1 | spec.part2 != nv or not (spec.part1 <= nv and spec.part2 <= nv):
        raise ValueError("split parts must cover the target's neighborhood exactly")
    vs = (g.vertices - {v}) | {spec.child1, spec.child2}
    es = [e for e in g.edges if v not in e]
    es.extend((spec.child1, x) for x in spec.part1)
    es.extend((spec.child2, x) for x in spec.part2)
    return Graph(vs, es)


def make_split(g: Graph, v, part1, part2) -> SplitSpec:
    """SplitSpec with the standard fresh child ids max_id()+1 and max_id()+2."""
    nxt = g.max_id() + 1
    return SplitSpec(v, frozenset(part1), frozenset(part2), nxt, nxt + 1)


def merge(g: Graph, u, v) -> Graph:
    """Inverse of a split: replace nonadjacent u, v by a fresh vertex with
    neighborhood N(u) | N(v)."""
    if u not in g.vertices or v not in g.vertices or u == v:
        raise ValueError("merge needs two distinct vertices of the graph")
    if g.has_edge(u, v):
        raise ValueError("cannot merge adjacent vertices")
    w = g.max_id() + 1
    nbrs = (g.neighbors(u) | g.neighbors(v)) - {u, v}
    vs = (g.vertices - {u, v}) | {w}
    es = [e for e in g.edges if u not in e and v not in e]
    es.extend((w, x) for x in nbrs)
    return Graph(vs, es)


def enumerate_splits(g: Graph, v, policy: str = "all") -> list:
    """All splits of v up to swapping the two parts, in a fixed order.

    Policies: 'all' (each neighbor goes to part1, part2, or both),
    'disjoint', and their '-nontrivial' variants which drop splits with an
    empty part.  Canonical orientation: part1 holds the smallest neighbor;
    a trivial split is emitted once, with part2 empty.
    """
    base, nontrivial = {
        "all": ("all", False),
        "disjoint": ("disjoint", False),
        "nontrivial": ("all", True),
        "disjoint-nontrivial": ("disjoint", True),
    }[policy]
    ns = sorted(g.neighbors(v))
    choices = (1, 2, 3) if base == "all" else (1, 2)
    pairs = set()
    for assign in product(choices, repeat=len(ns)):
        p1 = frozenset(x for x, a in zip(ns, assign) if a & 1)
        p2 = frozenset(x for x, a in zip(ns, assign) if a & 2)
        if not p1 or not p2:
            p1, p2 = p1 | p2, frozenset()
        elif (min(p2) < min(p1)
              or (min(p1) == min(p2) and sorted(p2) < sorted(p1))):
            p1, p2 = p2, p1
        pairs.add((p1, p2))
    if nontrivial:
        pairs = {(p1, p2) for p1, p2 in pairs if p2}
    nxt = g.max_id() + 1
    return [SplitSpec(v, p1, p2, nxt, nxt + 1)
            for p1, p2 in sorted(pairs, key=lambda p: (sorted(p[0]), sorted(p[1])))]


class SplittingSequence:
    """An initial graph plus an ordered list of splits, validated on
    construction by full replay."""

    def __init__(self, initial: Graph, steps=()):
        self.initial = initial
        self.steps = tuple(steps)
        graphs = [initial]
        ancestor = {v: v for v in initial.vertices}
        # edge -> set of current descendant edges
        desc = {e: {e} for e in initial.edges}
        for spec in self.steps:
            g = graphs[-1]
            nxt = apply_split(g, spec)
            ancestor[spec.child1] = ancestor[spec.target]
            ancestor[spec.child2] = ancestor[spec.target]
            t = spec.target
            for e0, cur in desc.items():
                new = set()
                for a, b in cur:
                    if t not in (a, b):
                        new.add((a, b))
                        continue
                    x = b if a == t else a
                    if x in spec.part1:
                        new.add(tuple(sorted((spec.child1, x))))
                    if x in spec.part2:
                        new.add(tuple(sorted((spec.child2, x))))
                desc[e0] = new
            graphs.append(nxt)
        self.graphs = graphs
        self._ancestor = ancestor
        self._edge_desc = {e: frozenset(s) for e, s in desc.items()}

    @property
    def final(self) -> Graph:
        return self.graphs[-1]

    def __len__(self):
        return len(self.steps)

    def ancestor(self, v) -> int:
        """Ancestor of v in the initial graph."""
        return self._ancestor[v]

    def ancestry(self) -> dict:
        return dict(self._ancestor)

    def descendants(self, v) -> frozenset:
        """Final-graph descendants of an initial vertex."""
        return frozenset(x for x in self.final.vertices if self._ancestor[x] == v)

    def edge_descendants(self, e) -> frozenset:
        """Final-graph descendant edges of an initial edge."""
        e = tuple(sorted(e))
        return self._edge_desc[e]

    def split_ancestors(self) -> frozenset:
        """Initial vertices that some step's target descends from."""
        return frozenset(self._ancestor[s.target] for s in self.steps)

    def __eq__(self, other):
        return (isinstance(other, SplittingSequence)
                and self.initial == other.initial and self.steps == other.steps)

    def __repr__(self):
        return f"SplittingSequence(len={len(self.steps)}, initial={self.initial!r})"


def apply_sequence(initial: Graph, steps) -> Graph:
    return SplittingSequence(initial, steps).final


# ---------------------------------------------------------------------------
# Certificate format
#
#   # splitkit certificate
#   graph <n> <m>
#   split <target> | <part1 csv> | <part2 csv> -> <child1> <child2>

def format_certificate(seq: SplittingSequence) -> str:
    lines = ["# splitkit certificate",
             f"graph {seq.initial.n} {seq.initial.m}"]
    for s in seq.steps:
        p1 = ",".join(str(x) for x in sorted(s.part1))
        p2 = ",".join(str(x) for x in sorted(s.part2))
        lines.append(f"split {s.target} | {p1} | {p2} -> {s.child1} {s.child2}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, initial: Graph) -> SplittingSequence:
    steps = []
    saw_header = False
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        if ln.startswith("graph "):
            try:
                n, m = map(int, ln.split()[1:])
            except Exception as exc:
                raise ValueError(f"bad graph header {ln!r}") from exc
            if (n, m) != (initial.n, initial.m):
                raise ValueError(
                    f"certificate is for a ({n},{m}) graph, not ({initial.n},{initial.m})")
            saw_header = True
            continue
        if not ln.startswith("split "):
            raise ValueError(f"unrecognized certificate line {ln!r}")
        head, _, tail = ln.partition("->")
        fields = [f.strip() for f in head[len("split "):].split("|")]
        if len(fields) != 3:
            raise ValueError(f"bad split line {ln!r}")
        target = int(fields[0])
        p1 = frozenset(int(x) for x in fields[1].split(",") if x.strip())
        p2 = frozenset(int(x) for x in fields[2].split(",") if x.strip())
        kids = tail.split()
        if len(kids) != 2:
            raise ValueError(f"bad split line {ln!r}")
        steps.append(SplitSpec(target, p1, p2, int(kids[0]), int(kids[1])))
    if not saw_header:
        raise ValueError("certificate missing 'graph n m' header")
    return SplittingSequence(initial, steps)


def certificate_to_json(seq: SplittingSequence) -> str:
    return json.dumps({
        "graph": {"n": seq.initial.n, "m": seq.initial.m},
        "steps": [{
            "target": s.target,
            "part1": sorted(s.part1),
            "part2": sorted(s.part2),
            "children": [s.child1, s.child2],
        } for s in seq.steps],
    }, indent=2)


def certificate_from_json(text: str, initial: Graph) -> SplittingSequence:
    data = json.loads(text)
    hdr = data["graph"]
    if (hdr["n"], hdr["m"]) != (initial.n, initial.m):
        raise ValueError("certificate is for a different graph")
    steps = [SplitSpec(s["target"], frozenset(s["part1"]), frozenset(s["part2"]),
                       s["children"][0], s["children"][1])
             for s in data["steps"]]
    return SplittingSequence(initial, steps)
