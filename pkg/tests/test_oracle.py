"""The exhaustive solver: decisions, minimality, modes, and verification."""

import pytest

from splitkit.graphs import (CapExceeded, ForbiddenFamily, Graph,
                             disjoint_union, named_graph)
from splitkit.oracle import decide, min_splits, solve, verify_certificate
from splitkit.splitting import SplitSpec, make_split


def fam(*names, mode="induced"):
    return ForbiddenFamily.finite([named_graph(n) for n in names], mode=mode)


def test_already_free_needs_zero_splits():
    seq = solve(named_graph("K4"), fam("P3"), 3)
    assert seq is not None and len(seq) == 0


def test_k3_to_path_in_one_split():
    seq = solve(named_graph("K3"), fam("K3"), 2)
    assert seq is not None and len(seq) == 1
    assert verify_certificate(named_graph("K3"), seq, fam("K3"), 2)


def test_k0_always_negative():
    assert solve(Graph(), fam("K0"), 5) is None
    assert min_splits(named_graph("K2"), fam("K0"), 3) is None


def test_min_splits_matches_solve():
    g = disjoint_union(named_graph("K3"), named_graph("K1"))
    f = fam("P3", "K3")
    assert min_splits(g, f, 4) == 3
    assert len(solve(g, f, 4)) == 3
    assert solve(g, f, 2) is None
    assert decide(g, f, 3) and not decide(g, f, 2)


def test_modes_are_nested():
    g = named_graph("K4")
    f = fam("K3")
    for k in range(4):
        gen = min_splits(g, f, k, mode="general")
        dis = min_splits(g, f, k, mode="disjoint-only")
        sha = min_splits(g, f, k, mode="shallow")
        if sha is not None:
            assert dis is not None and dis <= sha
        if dis is not None:
            assert gen is not None and gen <= dis
    assert min_splits(g, f, 3, mode="shallow") == 2


def test_shallow_never_resplits():
    # turning the claw into a cluster graph needs the center split twice,
    # which shallow mode forbids
    g = named_graph("claw")
    f = fam("P3")
    assert min_splits(g, f, 4, mode="general") == 2
    assert min_splits(g, f, 4, mode="shallow") is None


def test_include_trivial_changes_nothing_for_decisions():
    g = named_graph("paw")
    f = fam("K3")
    assert min_splits(g, f, 2) == min_splits(g, f, 2, include_trivial=True)


def test_cap_enforced():
    with pytest.raises(CapExceeded):
        solve(Graph(range(10)), fam("K3"), 3)
    solve(Graph(range(10)), fam("K3"), 3, cap=13)  # room after raising the cap
    with pytest.raises(ValueError):
        solve(named_graph("K3"), fam("K3"), -1)
    with pytest.raises(ValueError):
        solve(named_graph("K3"), fam("K3"), 1, mode="sideways")


def test_verify_certificate_rejections():
    g = named_graph("K3")
    f = fam("K3")
    good = solve(g, f, 1)
    assert verify_certificate(g, good, f, 1)
    ok, why = verify_certificate(g, good, f, 0, explain=True)
    assert not ok and "budget" in why
    ok, why = verify_certificate(g, [SplitSpec(9, frozenset(), frozenset(), 3, 4)],
                                 f, 2, explain=True)
    assert not ok and "invalid sequence" in why
    ok, why = verify_certificate(g, [], f, 2, explain=True)
    assert not ok and "forbidden" in why
    # a sequence built on a different graph is rejected without exceptions
    other = named_graph("K4")
    seq = solve(other, f, 3)
    assert verify_certificate(g, seq, f, 3) is False


def test_subgraph_mode_families():
    # C4 as a subgraph is present in the diamond, as induced it is not
    g = named_graph("diamond")
    assert min_splits(g, fam("C4", mode="subgraph"), 0) is None
    assert min_splits(g, fam("C4"), 0) == 0
    assert min_splits(g, fam("C4", mode="subgraph"), 2) is not None


def test_trivial_split_pruning_is_sound():
    # pruned search still finds decisions reachable only via nontrivial splits
    g = named_graph("C5")
    f = ForbiddenFamily.odd_cycles()
    assert min_splits(g, f, 1) == 1


def test_verify_with_manual_sequence():
    g = named_graph("C5")
    spec = make_split(g, 0, {1}, {4})
    assert verify_certificate(g, [spec], ForbiddenFamily.odd_cycles(), 1)
