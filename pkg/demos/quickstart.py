"""A first tour: build a graph, split a vertex, and ask the exact solver
whether a few splits can destroy every triangle.

Run with:  python3 demos/quickstart.py
"""

from splitkit.graphs import ForbiddenFamily, format_graph, named_graph, triangles
from splitkit.oracle import min_splits, solve, verify_certificate
from splitkit.splitting import apply_split, enumerate_splits, make_split

TRIANGLE_FREE = ForbiddenFamily.finite([named_graph("K3")])


def show(title, g):
    print(f"--- {title}: {g.n} vertices, {g.m} edges, {len(triangles(g))} triangles")
    print(format_graph(g), end="")


def main():
    g = named_graph("paw")  # a triangle with a pendant vertex
    show("the paw graph", g)

    # split vertex 2 by hand: neighbor 0 goes to one child, 1 and 3 to the
    # other, which separates the triangle's corners
    spec = make_split(g, 2, {0}, {1, 3})
    h = apply_split(g, spec)
    show("after splitting vertex 2", h)
    print(f"one well-chosen split leaves {len(triangles(h))} triangles\n")

    # the solver finds the same thing: one split suffices, zero do not
    print("min_splits(paw, triangle-free, k=3) =",
          min_splits(g, TRIANGLE_FREE, 3))
    print("solve(paw, k=0) is None:", solve(g, TRIANGLE_FREE, 0) is None)

    # certificates are replayable objects and can be checked independently
    cert = solve(g, TRIANGLE_FREE, 1)
    print("certificate steps:", [(s.target, sorted(s.part1), sorted(s.part2))
                                 for s in cert.steps])
    print("verifies:", verify_certificate(g, cert, TRIANGLE_FREE, 1))

    # how many ways are there to split one vertex of K4?
    k4 = named_graph("K4")
    for policy in ("all", "nontrivial", "disjoint", "disjoint-nontrivial"):
        print(f"splits of a K4 vertex, policy {policy!r}:",
              len(enumerate_splits(k4, 0, policy)))


if __name__ == "__main__":
    main()
