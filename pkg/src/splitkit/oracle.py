"""Exhaustive solver for the vertex-splitting problem on small instances.

Breadth-first search over splitting sequences, deduplicating states that are
isomorphic (taking split-eligibility marks into account in shallow mode), so
the first hit is a shortest certificate.  Splits with an empty part are
pruned by default: they only add an isolated vertex, which never helps and
can be appended at will, so pruning loses no decisions.

Modes:
  'general'       any split,
  'disjoint-only' the two parts must be disjoint,
  'shallow'       disjoint, and each initial vertex is split at most once
                  (children of a split are never split again).
"""

from __future__ import annotations

from .canonical import canonical_form, canonical_key  # noqa: F401  (re-export)
from .graphs import CapExceeded, ForbiddenFamily, Graph, is_free
from .splitting import SplittingSequence, apply_split, enumerate_splits

MODES = ("general", "disjoint-only", "shallow")
DEFAULT_CAP = 12


def _state_key(g: Graph, splittable, cap: int = DEFAULT_CAP):
    if splittable is None:
        return canonical_key(g, cap=cap)
    marks = {v: 1 if v in splittable else 0 for v in g.vertices}
    return canonical_key(g, marks=marks, cap=cap)


def _moves(g: Graph, splittable, mode, include_trivial):
    if mode == "general":
        policy = "all" if include_trivial else "nontrivial"
    else:
        policy = "disjoint" if include_trivial else "disjoint-nontrivial"
    eligible = g.vertices if splittable is None else splittable
    for v in sorted(eligible):
        for spec in enumerate_splits(g, v, policy):
            yield spec


def _check_args(g, k, mode, cap):
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if k < 0:
        raise ValueError("split budget must be >= 0")
    if g.n + k > cap:
        raise CapExceeded(
            f"instance needs up to {g.n + k} vertices, cap is {cap}")


def solve(g: Graph, family: ForbiddenFamily, k: int, mode: str = "general",
          include_trivial: bool = False, cap: int = DEFAULT_CAP):
    """Shortest splitting sequence of length <= k whose final graph is
    family-free, or None.  Deterministic: states expand in insertion order
    and splits in the enumeration order of `enumerate_splits`."""
    _check_args(g, k, mode, cap)
    if family.contains_k0():
        return None  # the 0-vertex pattern embeds in every graph
    if is_free(g, family):
        return SplittingSequence(g, ())
    marks0 = frozenset(g.vertices) if mode == "shallow" else None
    frontier = [(g, (), marks0)]
    seen = {_state_key(g, marks0, cap)}
    for depth in range(1, k + 1):
        nxt = []
        for cur, steps, marks in frontier:
            for spec in _moves(cur, marks, mode, include_trivial):
                child = apply_split(cur, spec)
                new_steps = steps + (spec,)
                if is_free(child, family):
                    return SplittingSequence(g, new_steps)
                if depth < k:
                    new_marks = None if marks is None else marks - {spec.target}
                    key = _state_key(child, new_marks, cap)
                    if key not in seen:
                        seen.add(key)
                        nxt.append((child, new_steps, new_marks))
        frontier = nxt
    return None


# ---------------------------------------------------------------------------
# Decision sweeps
#
# The set of states reachable by splitting does not depend on the forbidden
# family, so for sweeps that ask many (family, k) questions about the same
# graph we enumerate the reachable isomorphism classes once per depth and
# reuse them.

_levels_cache: dict = {}
_free_cache: dict = {}


def clear_caches() -> None:
    _levels_cache.clear()
    _free_cache.clear()


def _levels(g: Graph, mode: str, depth: int, include_trivial: bool, cap: int):
    key = (g, mode, include_trivial, cap)
    entry = _levels_cache.get(key)
    if entry is None:
        marks0 = frozenset(g.vertices) if mode == "shallow" else None
        entry = {"levels": [[(g, marks0)]], "seen": {_state_key(g, marks0, cap)}}
        _levels_cache[key] = entry
    while len(entry["levels"]) <= depth:
        cur_level = entry["levels"][-1]
        nxt = []
        for cur, marks in cur_level:
            for spec in _moves(cur, marks, mode, include_trivial):
                child = apply_split(cur, spec)
                new_marks = None if marks is None else marks - {spec.target}
                skey = _state_key(child, new_marks, cap)
                if skey not in entry["seen"]:
                    entry["seen"].add(skey)
                    nxt.append((child, new_marks))
        entry["levels"].append(nxt)
    return entry["levels"][: depth + 1]


def _free_memo(h: Graph, family: ForbiddenFamily) -> bool:
    key = (h, family)
    val = _free_cache.get(key)
    if val is None:
        val = is_free(h, family)
        _free_cache[key] = val
    return val


def min_splits(g: Graph, family: ForbiddenFamily, kmax: int, mode: str = "general",
               include_trivial: bool = False, cap: int = DEFAULT_CAP):
    """Minimum number of splits (<= kmax) reaching a family-free graph, or
    None if no sequence of length <= kmax works."""
    _check_args(g, kmax, mode, cap)
    if family.contains_k0():
        return None
    levels = _levels(g, mode, kmax, include_trivial, cap)
    for d, level in enumerate(levels):
        if any(_free_memo(h, family) for h, _ in level):
            return d
    return None


def decide(g: Graph, family: ForbiddenFamily, k: int, mode: str = "general",
           include_trivial: bool = False, cap: int = DEFAULT_CAP) -> bool:
    return min_splits(g, family, k, mode, include_trivial, cap) is not None


# ---------------------------------------------------------------------------
# Verification

def verify_certificate(g: Graph, steps, family: ForbiddenFamily, k: int,
                       explain: bool = False):
    """Check that `steps` (a SplittingSequence or an iterable of SplitSpecs)
    is a valid sequence on g of length <= k whose final graph is family-free.
    Malformed input yields False, never an exception."""

    def result(ok, why):
        return (ok, why) if explain else ok

    try:
        if isinstance(steps, SplittingSequence):
            if steps.initial != g:
                return result(False, "certificate initial graph differs from instance")
            seq = steps
        else:
            seq = SplittingSequence(g, steps)
    except Exception as exc:
        return result(False, f"invalid sequence: {exc}")
    if len(seq) > k:
        return result(False, f"sequence has {len(seq)} splits, budget is {k}")
    try:
        if not is_free(seq.final, family):
            return result(False, "final graph still contains a forbidden graph")
    except CapExceeded as exc:
        return result(False, str(exc))
    return result(True, "ok")
