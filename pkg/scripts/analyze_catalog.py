#!/usr/bin/env python3
"""Structure survey of the bundled catalog.

Prints one row per fixture: dimension, radical/nilradical/Levi dimensions,
rank, and the Cartan subalgebra found by each applicable construction.
"""

from cartankit.algebra import is_solvable
from cartankit.cartan import composite_csa, normalizer_chain_csa, regular_element_csa
from cartankit.catalog import bundled_fixtures, load_algebra
from cartankit.levi import levi_decomposition
from cartankit.radicals import nilradical, radical


def describe(g, sub):
    return ", ".join(g.label_vector(row) for row in sub.matrix) or "0"


def main():
    header = f"{'fixture':12s} {'dim':>3s} {'rad':>3s} {'nil':>3s} {'levi':>4s} {'rank':>4s}  cartan (regular | composite | chain)"
    print(header)
    print("-" * len(header))
    for name, path in bundled_fixtures().items():
        g = load_algebra(path)
        rad = radical(g)
        nil = nilradical(g)
        levi = levi_decomposition(g).levi
        regular = regular_element_csa(g).csa
        composite = composite_csa(g).csa
        chain = normalizer_chain_csa(g).csa if is_solvable(g.whole()) else None
        chain_text = describe(g, chain) if chain is not None else "n/a"
        print(
            f"{name:12s} {g.dim:3d} {rad.dim:3d} {nil.dim:3d} {levi.dim:4d} "
            f"{regular.dim:4d}  {describe(g, regular)} | {describe(g, composite)} | {chain_text}"
        )


if __name__ == "__main__":
    main()
