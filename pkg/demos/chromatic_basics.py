"""Chromatic polynomials three ways.

Computes P(G, x) by deletion-contraction with factorizations, re-derives it
by signed summation over edge subsets, and checks both against brute-force
coloring counts.
"""

from dpchroma import (
    chromatic_number,
    chromatic_polynomial,
    complete,
    count_proper_colorings,
    cycle,
    named_graph,
    whitney_polynomial,
)


def main() -> None:
    for name, g in [
        ("triangle", complete(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("K4", complete(4)),
        ("petersen", named_graph("petersen").graph),
    ]:
        p = chromatic_polynomial(g)
        print(f"{name}: P(G, x) = {p}")
        if len(g.edges) <= 20:
            assert p == whitney_polynomial(g), "subset expansion disagrees"
        counts = [count_proper_colorings(g, m) for m in range(4)]
        assert counts == [p(m) for m in range(4)]
        print(f"    colorings at m=0..3: {counts}, chromatic number {chromatic_number(g)}")
    print("deletion-contraction, subset expansion, and backtracking all agree.")


if __name__ == "__main__":
    main()
