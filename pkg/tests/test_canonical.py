"""Canonical forms and the non-isomorphic graph catalog."""

import pytest

from splitkit.canonical import (are_isomorphic, canonical_form, canonical_key,
                                nonisomorphic_graphs, nonisomorphic_graphs_upto)
from splitkit.graphs import CapExceeded, Graph, named_graph


def test_isomorphic_relabelings_share_a_form():
    g = named_graph("paw")
    h = g.relabeled({0: 10, 1: 3, 2: 7, 3: 0})
    assert canonical_form(g) == canonical_form(h)
    assert are_isomorphic(g, h)


def test_non_isomorphic_graphs_differ():
    assert not are_isomorphic(named_graph("paw"), named_graph("claw"))
    assert not are_isomorphic(named_graph("C4"), named_graph("diamond"))
    # same degree sequence, different graphs
    c6 = named_graph("C6")
    two_k3 = Graph(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not are_isomorphic(c6, two_k3)


def test_class_counts_match_the_known_sequence():
    # numbers of graphs on n unlabeled vertices: 1, 1, 2, 4, 11, 34
    assert [len(nonisomorphic_graphs(n)) for n in range(6)] == [1, 1, 2, 4, 11, 34]
    assert len(nonisomorphic_graphs_upto(5)) == 53


def test_marks_refine_the_key():
    g = named_graph("C4")
    plain = canonical_key(g)
    marked = canonical_key(g, marks={0: 1, 1: 0, 2: 0, 3: 0})
    assert plain != marked
    # equivalent markings on symmetric vertices agree
    assert marked == canonical_key(g, marks={2: 1, 1: 0, 0: 0, 3: 0})


def test_cap():
    with pytest.raises(CapExceeded):
        canonical_key(Graph(range(13)))
