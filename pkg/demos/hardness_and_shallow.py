"""The two faces of triangle-free splitting: gadget reductions that make the
general problem hard, and the 2-SAT solver that makes the shallow variant
(each vertex split at most once) tractable.

Run with:  python3 demos/hardness_and_shallow.py
"""

import random
import time
from itertools import combinations

from splitkit.graphs import ForbiddenFamily, Graph, named_graph, orient, triangles
from splitkit.oracle import solve, verify_certificate
from splitkit.reductions import (constr, extract_vertex_cover, min_vertex_cover,
                                 paranp_reduction, coloring_to_sequence,
                                 subdivided_vc_instance, triangle_configuration)
from splitkit.shallow import solve_shallow_tfvs

TRIANGLE_FREE = ForbiddenFamily.finite([named_graph("K3")])


def main():
    # vertex cover embeds into splitting: glue one triangle gadget per edge
    skel = named_graph("C4")
    res = constr(orient(skel), triangle_configuration(), frozenset())
    mvc = len(min_vertex_cover(skel))
    print(f"C4 skeleton glued with triangle gadgets: {res.graph.n} vertices,"
          f" {len(triangles(res.graph))} triangles, min vertex cover {mvc}")
    for k in (mvc - 1, mvc):
        seq = solve(res.graph, TRIANGLE_FREE, k, cap=res.graph.n + k)
        print(f"  k={k}: {'yes' if seq else 'no'}")
        if seq:
            cover = extract_vertex_cover(seq, res, orient(skel))
            print(f"  cover read back from the certificate: {sorted(cover)}")

    # the cubic vertex-cover route first subdivides every edge twice
    gstar, budget = subdivided_vc_instance(named_graph("K4"), 1, 3)
    print(f"\n2-subdivided K4: {gstar.n} vertices, cover budget {budget},"
          f" actual minimum {len(min_vertex_cover(gstar))}")

    # k = 2 is already NP-hard in general: 3-coloring embeds via one
    # universal vertex over three copies of the base graph
    inst = paranp_reduction(named_graph("P3"), 2)
    seq = coloring_to_sequence(inst, {0: 1, 1: 2, 2: 1})
    print(f"\n3-coloring instance on P3 -> {inst.graph.n}-vertex graph;"
          f" coloring certificate verifies:"
          f" {verify_certificate(inst.graph, seq, TRIANGLE_FREE, 2)}")

    # the shallow variant scales: 20 vertices answered in milliseconds
    rng = random.Random(42)
    es = [(u, v) for u, v in combinations(range(20), 2) if rng.random() < 0.21]
    g = Graph(range(20), es)
    print(f"\nrandom graph: n=20 m={g.m} triangles={len(triangles(g))}")
    for k in (3, 4, 5, 6, 7):
        t0 = time.monotonic()
        seq = solve_shallow_tfvs(g, k)
        dt = time.monotonic() - t0
        verdict = "no" if seq is None else f"yes with {len(seq)} splits"
        print(f"  shallow, k={k}: {verdict}  [{dt:.2f}s]")
        if seq is not None:
            assert verify_certificate(g, seq, TRIANGLE_FREE, k)
            break


if __name__ == "__main__":
    main()
