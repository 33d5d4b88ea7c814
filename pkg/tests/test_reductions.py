"""Gadget builders, vertex-cover translations, and certificate maps."""

import math

import pytest

from splitkit.canonical import are_isomorphic, nonisomorphic_graphs_upto
from splitkit.graphs import (ForbiddenFamily, Graph, has_embedding,
                             named_graph, orient, subdivide_with_paths)
from splitkit.oracle import solve, verify_certificate
from splitkit.reductions import (SplittingConfiguration, bipartite_reduction,
                                 check_separating_on, coloring_to_sequence,
                                 constr, cubic_catalog, extract_vertex_cover,
                                 is_cubic, is_double_subdivided_cubic,
                                 is_vertex_cover, min_vertex_cover,
                                 paranp_reduction, pentagon_configuration,
                                 perfect_reduction, sequence_to_coloring,
                                 square_configuration, subdivided_cover_backward,
                                 subdivided_cover_forward,
                                 subdivided_vc_instance, subdivision_parameter,
                                 triangle_configuration, width)


def test_configuration_validation():
    h = named_graph("K3")
    with pytest.raises(ValueError):
        SplittingConfiguration(h, 0, frozenset({1}), frozenset(), 1,
                               frozenset({0}), frozenset({2}))
    with pytest.raises(ValueError):
        SplittingConfiguration(h, 0, frozenset({1}), frozenset({1}), 1,
                               frozenset({0}), frozenset({2}))
    assert triangle_configuration().is_disjoint()
    assert square_configuration().is_disjoint()
    assert pentagon_configuration().is_disjoint()


def test_widths():
    assert width(triangle_configuration()) == 3
    assert width(square_configuration()) == 4
    assert width(pentagon_configuration()) == 5
    # splits that disconnect the pattern at both ends have infinite width
    p4cfg = SplittingConfiguration(named_graph("P4"), 1, frozenset({0}),
                                   frozenset({2}), 2, frozenset({1}),
                                   frozenset({3}))
    assert math.isinf(width(p4cfg))


def test_width_is_relabeling_invariant():
    cfg = triangle_configuration()
    relabel = {0: 5, 1: 9, 2: 7}
    moved = SplittingConfiguration(
        cfg.pattern.relabeled(relabel), relabel[cfg.a],
        frozenset(relabel[x] for x in cfg.a1), frozenset(relabel[x] for x in cfg.a2),
        relabel[cfg.b],
        frozenset(relabel[x] for x in cfg.b1), frozenset(relabel[x] for x in cfg.b2))
    assert width(moved) == width(cfg)


def test_constr_single_arc_is_the_pattern():
    res = constr(orient(named_graph("K2")), triangle_configuration(), frozenset())
    assert are_isomorphic(res.graph, named_graph("K3"))
    assert res.chi_arc[(0, 1)] == res.graph.vertices


def test_constr_k3_skeleton_vertex_count():
    res = constr(orient(named_graph("K3")), triangle_configuration(), frozenset())
    # 3 * (|V(h)| - 2) + 3 vertices after gluing the endpoints
    assert res.graph.n == 3 * (3 - 2) + 3
    for v in range(3):
        assert len(res.chi_vertex[v]) == 1
    assert all(len(vs) == 3 for vs in res.chi_arc.values())


def test_constr_chi_sizes_reflect_the_split_set():
    skel = orient(named_graph("P3"))
    res = constr(skel, triangle_configuration(), frozenset({1}))
    assert len(res.chi_vertex[1]) == 2
    assert len(res.chi_vertex[0]) == len(res.chi_vertex[2]) == 1
    with pytest.raises(ValueError):
        constr(skel, triangle_configuration(), frozenset({7}))


def test_constr_monotone_resplitting():
    # adding v to the split set equals splitting chi(v) in the smaller build
    cfg = triangle_configuration()
    for base in (named_graph("K2"), named_graph("P3"), named_graph("K3")):
        skel = orient(base)
        for v in sorted(skel.vertices):
            plain = constr(skel, cfg, frozenset())
            split = constr(skel, cfg, frozenset({v}))
            assert len(split.chi_vertex[v]) == 2
            assert split.graph.n == plain.graph.n + 1
            assert are_isomorphic(split.graph, _split_at(plain, v, skel))


def _split_at(res, v, skel):
    """Replay the triangle configuration's split at the glued image of v:
    the other-endpoint neighbors go to one child, the gadget apexes to the
    other (the configuration sends the endpoint neighbor to part 1 and the
    third pattern vertex to part 2 at both ends)."""
    from splitkit.splitting import apply_split, make_split

    (x,) = res.chi_vertex[v]
    g = res.graph
    endpoint_reps = set()
    for u in skel.vertices:
        if u != v:
            endpoint_reps |= res.chi_vertex[u]
    part1 = g.neighbors(x) & endpoint_reps
    part2 = g.neighbors(x) - part1
    return apply_split(g, make_split(g, x, part1, part2))


def test_check_separating_on_triangle_config():
    # on a triangle-free skeleton every K3 stays inside one gadget ...
    assert check_separating_on(orient(named_graph("C4")), triangle_configuration(),
                               [named_graph("K3")])
    # ... but gluing around a skeleton triangle creates a cross-gadget K3,
    # which is why the hardness constructions subdivide their skeletons
    assert not check_separating_on(orient(named_graph("K3")), triangle_configuration(),
                                   [named_graph("K3")])


def test_subdivision_parameter():
    assert subdivision_parameter([named_graph("K3")]) == 2
    assert subdivision_parameter([named_graph("C5")]) == 4
    with pytest.raises(ValueError):
        subdivision_parameter([Graph(range(2))])


def test_min_vertex_cover():
    assert len(min_vertex_cover(named_graph("K4"))) == 3
    assert len(min_vertex_cover(named_graph("C5"))) == 3
    assert min_vertex_cover(Graph(range(3))) == frozenset()
    assert is_vertex_cover(named_graph("C4"), {0, 2})
    assert not is_vertex_cover(named_graph("C4"), {0, 1})


def test_cubic_catalog():
    cat = cubic_catalog()
    assert set(cat) == {"k4", "k33", "prism", "wagner"}
    assert all(is_cubic(g) for g in cat.values())


def test_subdivided_vc_instance():
    gstar, budget = subdivided_vc_instance(named_graph("K4"), 1, 3)
    assert gstar.n == 4 + 2 * 6 and budget == 3 + 6
    same, _ = subdivided_vc_instance(named_graph("K4"), 0, 5)
    assert same == named_graph("K4")
    with pytest.raises(ValueError):
        subdivided_vc_instance(named_graph("P3"), 1, 1)


def test_cover_translation_round_trip():
    g = named_graph("K4")
    ell = 1
    gstar, paths = subdivide_with_paths(g, 2 * ell)
    cover = min_vertex_cover(g)
    lifted = subdivided_cover_forward(g, ell, cover, paths)
    assert is_vertex_cover(gstar, lifted)
    assert len(lifted) == len(cover) + ell * g.m
    back = subdivided_cover_backward(g, ell, lifted, paths)
    assert is_vertex_cover(g, back)
    assert len(back) <= len(lifted) - ell * g.m
    with pytest.raises(ValueError):
        subdivided_cover_forward(g, ell, frozenset(), paths)
    with pytest.raises(ValueError):
        subdivided_cover_backward(g, ell, frozenset(), paths)


def test_double_subdivision_recognizer():
    g2 = subdivide_with_paths(named_graph("K4"), 2)[0]
    assert is_double_subdivided_cubic(g2)
    assert not is_double_subdivided_cubic(named_graph("K4"))
    assert not is_double_subdivided_cubic(subdivide_with_paths(named_graph("K4"), 1)[0])


def test_bipartite_and_perfect_reductions():
    g2 = subdivide_with_paths(named_graph("K4"), 2)[0]
    inst, k = bipartite_reduction(g2, 5)
    assert (inst.n, inst.m, k) == (g2.n + g2.m, 3 * g2.m, 5)
    inst, k = perfect_reduction(g2, 5)
    assert (inst.n, inst.m, k) == (g2.n + 3 * g2.m, 5 * g2.m, 5)
    with pytest.warns(UserWarning):
        bipartite_reduction(named_graph("K4"), 1)
    with pytest.warns(UserWarning):
        perfect_reduction(named_graph("K4"), 1)
    # single edge turns into a triangle / a five-cycle
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert are_isomorphic(bipartite_reduction(named_graph("K2"), 0)[0],
                              named_graph("K3"))
        assert are_isomorphic(perfect_reduction(named_graph("K2"), 0)[0],
                              named_graph("C5"))


def test_bipartite_reduction_equals_constr_gluing():
    cfg = triangle_configuration()
    for g in nonisomorphic_graphs_upto(4):
        if g.m == 0:
            continue
        import warnings
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            inst, _ = bipartite_reduction(g, 0)
        built = constr(orient(g), cfg, frozenset())
        # gluing may drop isolated skeleton vertices; compare edge structure
        assert are_isomorphic(inst.subgraph(inst.vertices - inst.isolated_vertices()),
                              built.graph)


def test_paranp_reduction_structure():
    inst = paranp_reduction(named_graph("K2"), 2)
    assert inst.graph.n == 7 and inst.graph.m == 9
    assert inst.extra_triangles == ()
    assert inst.graph.degree(inst.universal) == 6
    inst4 = paranp_reduction(named_graph("C5"), 4)
    assert inst4.graph.n == 3 * 5 + 1 + 3 * 2
    assert len(inst4.extra_triangles) == 2
    with pytest.raises(ValueError):
        paranp_reduction(named_graph("K3"), 2)
    with pytest.raises(ValueError):
        paranp_reduction(named_graph("K2"), 1)


def test_coloring_round_trip_on_k2():
    inst = paranp_reduction(named_graph("K2"), 2)
    seq = coloring_to_sequence(inst, {0: 1, 1: 2})
    assert len(seq) == 2
    fam = ForbiddenFamily.finite([named_graph("K3")])
    assert verify_certificate(inst.graph, seq, fam, 2)
    coloring = sequence_to_coloring(seq, inst)
    assert coloring is not None
    assert coloring[0] != coloring[1]
    with pytest.raises(ValueError):
        coloring_to_sequence(inst, {0: 1, 1: 1})
    with pytest.raises(ValueError):
        coloring_to_sequence(inst, {0: 1})


def test_extract_vertex_cover_from_oracle_certificate():
    skel = orient(named_graph("K3"))
    res = constr(skel, triangle_configuration(), frozenset())
    fam = ForbiddenFamily.finite([named_graph("K3")])
    seq = solve(res.graph, fam, 2)
    assert seq is not None and len(seq) == 2
    cover = extract_vertex_cover(seq, res, skel)
    assert is_vertex_cover(named_graph("K3"), cover)
    assert len(cover) <= len(seq)
    empty = solve(res.graph, fam, 0)
    assert empty is None  # the construction always contains the pattern
