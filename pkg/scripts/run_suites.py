"""Run every structural and representation suite on both shipped bundles and time them."""

import argparse
import time
from dataclasses import dataclass

from qinduce import induce
from qinduce.cli import check_reports
from qinduce.presentation import parse_bundle


@dataclass
class SuiteConfig:
    degree: int = 3
    truncate: int = 4
    order: int = 8
    m_max: int = 4


def timed(label, fn):
    t0 = time.perf_counter()
    reps = fn()
    dt = time.perf_counter() - t0
    for r in reps:
        print(f"  {r.summary()}")
    print(f"  [{label}: {dt:.2f}s]")
    return reps


def main(cfg: SuiteConfig) -> int:
    bad = 0
    for tag in induce.MODELS:
        print(f"== {tag}")
        b = parse_bundle(induce.shipped_bundle_text(tag), cfg.truncate)
        reps = timed("structure", lambda: check_reports(b, "all", cfg.degree))
        model = induce.model_from_bundle(b, tag)
        reps += timed("closed forms", lambda: [induce.verify_induction(model, cfg.order, cfg.m_max)])
        reps += timed("module axioms", lambda: [induce.check_module_axioms(model, cfg.order, cfg.m_max)])
        reps += timed("pseudoequivalence", lambda: [induce.check_pseudoequivalence(model, cfg.order, 3)])
        if tag == "standard":
            reps += timed("limit", lambda: [induce.classical_limit(model, cfg.order, cfg.m_max)])
            reps += timed("subspace", lambda: [induce.check_invariant_subspace(cfg.order, 3, cfg.truncate, model)])
        else:
            reps += timed("ladder", lambda: [induce.check_ladder_nonstandard(model, cfg.order, 3)])
        bad += sum(len(r.failures) for r in reps)
    print(f"total failures: {bad}")
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--truncate", type=int, default=4)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--m-max", type=int, default=4)
    raise SystemExit(main(SuiteConfig(**vars(p.parse_args()))))
