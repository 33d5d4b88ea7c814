"""Polynomial deciders for small forbidden families, sigma clique covers,
and threshold / split-graph recognition."""

import pytest

from splitkit.families import (all_small_families, dispatch, midpoints,
                               min_scc_weight, min_splits_to_cluster,
                               p3_k3_threshold, peel_to_matching,
                               recognize_split, recognize_threshold,
                               scc_weight, small_family, solve_p3_k3,
                               solve_p3_k3bar, solve_ramsey_k3,
                               solve_split_vs, solve_threshold_vs,
                               to_forbidden_family, verify_scc)
from splitkit.graphs import Graph, disjoint_union, is_free, named_graph
from splitkit.oracle import verify_certificate

from itertools import combinations


def two_k5_sharing_k2():
    edges = set()
    for clique in ({0, 1, 2, 3, 4}, {3, 4, 5, 6, 7}):
        edges.update(tuple(sorted(p)) for p in combinations(sorted(clique), 2))
    return Graph(range(8), edges)


def test_small_family_validation():
    assert small_family("K3", "P3") == frozenset({"K3", "P3"})
    with pytest.raises(ValueError):
        small_family("K9")
    assert len(all_small_families()) == 2 ** 8


def test_dispatch_short_circuits():
    assert dispatch({"K0"}, Graph(), 5) == "no"
    assert dispatch({"K1"}, Graph(), 0) == "yes"
    assert dispatch({"K1"}, named_graph("K1"), 9) == "no"
    assert dispatch({"K2"}, named_graph("K2"), 9) == "no"
    assert dispatch({"K2"}, Graph(range(3)), 0) == "yes"
    assert dispatch({"coK2"}, named_graph("K3"), 5) == "yes"
    assert dispatch({"coK2"}, named_graph("P3"), 5) == "no"
    assert dispatch({"coP3"}, named_graph("paw"), 5) == "no"
    assert dispatch({"coP3"}, named_graph("C4"), 5) == "yes"


def test_dispatch_np_sentinels():
    assert dispatch({"P3"}, named_graph("P3"), 1) == "np-hard-case"
    assert dispatch({"K3"}, named_graph("K3"), 1) == "np-hard-case"
    assert dispatch(frozenset(), named_graph("K3"), 0) == "yes"


def test_formula_for_p3_k3():
    g = disjoint_union(named_graph("K3"), named_graph("K1"))
    assert p3_k3_threshold(g) == 3
    assert solve_p3_k3(g, 3) and not solve_p3_k3(g, 2)
    assert dispatch({"P3", "K3"}, g, 3) == "yes"
    assert dispatch({"P3", "K3"}, g, 2) == "no"


def test_peel_to_matching_is_optimal_certificate():
    fam = to_forbidden_family({"P3", "K3"})
    for g in (named_graph("K4"), named_graph("C5"), two_k5_sharing_k2()):
        seq = peel_to_matching(g)
        assert len(seq) == p3_k3_threshold(g)
        assert verify_certificate(g, seq, fam, len(seq))


def test_midpoints():
    assert midpoints(named_graph("P3")) == frozenset({1})
    assert midpoints(named_graph("K4")) == frozenset()
    assert midpoints(two_k5_sharing_k2()) == frozenset({3, 4})


def test_solve_p3_k3bar():
    duo = two_k5_sharing_k2()
    assert solve_p3_k3bar(duo, 2)
    assert not solve_p3_k3bar(duo, 1)
    assert not solve_p3_k3bar(named_graph("coK3"), 10)  # indestructible
    assert solve_p3_k3bar(named_graph("K4"), 0)  # already free
    # adjacent midpoints alone are not enough: P4 admits no 2-clique cover
    assert not solve_p3_k3bar(named_graph("P4"), 5)


def test_solve_ramsey_k3():
    names = {"K3", "coK3"}
    assert not solve_ramsey_k3(Graph(range(6)), 99, names)  # 6 vertices: hopeless
    assert solve_ramsey_k3(named_graph("C5"), 0, names)
    assert not solve_ramsey_k3(named_graph("K3"), 0, names)
    assert solve_ramsey_k3(named_graph("K3"), 1, names)
    with pytest.raises(ValueError):
        solve_ramsey_k3(named_graph("K3"), 1, {"K3"})


def test_sigma_clique_covers():
    paw = named_graph("paw")
    cover = [{0, 1, 2}, {2, 3}]
    assert verify_scc(paw, cover)
    assert scc_weight(cover) == 5
    assert not verify_scc(paw, [{0, 1, 2}])        # edge (2,3) uncovered
    assert not verify_scc(paw, [{0, 1, 3}, {2, 3}])  # not a clique
    assert min_scc_weight(paw) == 5
    assert min_scc_weight(named_graph("diamond")) == 6
    assert min_scc_weight(named_graph("C5")) == 10
    assert min_scc_weight(Graph(range(3))) == 0


def test_min_scc_weight_maximal_restriction_is_exact_on_tiny_graphs():
    from splitkit.canonical import nonisomorphic_graphs_upto
    for g in nonisomorphic_graphs_upto(4):
        assert min_scc_weight(g) == min_scc_weight(g, maximal_only=False)


def test_min_splits_to_cluster():
    assert min_splits_to_cluster(named_graph("paw")) == 1
    assert min_splits_to_cluster(named_graph("C4")) == 4
    assert min_splits_to_cluster(named_graph("K4")) == 0
    with pytest.raises(ValueError):
        min_splits_to_cluster(Graph(range(9)))


def test_threshold_and_split_recognition():
    assert recognize_threshold(named_graph("paw"))
    assert not recognize_threshold(named_graph("P4"))
    assert not recognize_threshold(named_graph("C4"))
    assert recognize_split(named_graph("P4"))
    assert not recognize_split(named_graph("C4"))
    # splitting never helps: the budget is irrelevant
    for k in (0, 3, 10):
        assert not solve_threshold_vs(named_graph("P4"), k)
        assert solve_split_vs(named_graph("P4"), k)


def test_dispatch_recognition_equals_freeness():
    fam = {"coP3", "K3"}
    for g in (named_graph("C4"), named_graph("paw"), named_graph("P4")):
        want = "yes" if is_free(g, to_forbidden_family(fam)) else "no"
        assert dispatch(fam, g, 7) == want
