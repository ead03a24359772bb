"""Membership solves for the standard-model subspace spanned by 1, v_0^n, v_1^n.

Prints, for each generator image, the combination found (or the degree it
needed), then the derived and printed v_k formulas where they differ.
"""

import argparse

from qinduce import induce


def main(order: int, n_max: int, truncate: int, verbose: bool) -> None:
    rep = induce.check_invariant_subspace(D=order, n_max=n_max, truncate=truncate)
    print(rep.summary())
    for r in rep.results:
        if verbose or r.status != "PASS" or r.note:
            print(" ", r.line())
            if r.status == "WARN":
                print(f"    derived: {r.lhs}\n    printed: {r.rhs}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--truncate", type=int, default=4)
    p.add_argument("--verbose", action="store_true")
    a = p.parse_args()
    main(a.order, a.n_max, a.truncate, a.verbose)
