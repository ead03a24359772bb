"""Nonstandard H action: which sign of the v-shift survives the module laws.

Runs the closed-form comparison and the commutator identity
(f -| H) -| K - (f -| K) -| H = f -| [H, K] with both signs and prints the
first failing witness for the one that breaks.
"""

import argparse

from qinduce import induce
from qinduce.induce import CORRECTED_SIGN, PRINTED_SIGN


def main(order: int, truncate: int, m_max: int) -> None:
    model = induce.load_model("nonstandard", truncate)
    print("shift (1/4rho)(1 - exp(-4 i a rho)) =", induce.nonstandard_shift(model.alphabet))
    for sign in (CORRECTED_SIGN, PRINTED_SIGN):
        closed = induce.verify_induction(model, order, m_max, sign)
        comm = induce.commutator_check(model, sign, order, m_max)
        print(f"sign {sign:+d}: closed forms {len(closed.failures)} failures, "
              f"commutator {len(comm.failures)} failures")
        bad = comm.first_failure() or closed.first_failure()
        if bad is not None:
            print("  first witness:", bad.line().replace("\n", "\n  "))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--truncate", type=int, default=3)
    p.add_argument("--m-max", type=int, default=3)
    a = p.parse_args()
    main(a.order, a.truncate, a.m_max)
