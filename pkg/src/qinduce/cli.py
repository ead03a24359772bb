"""Command-line front end.

    qinduce [--bundle B] [--truncate N] [--degree d] [--order D] [--format text|records] CMD ...

``B`` is a path to a ``.hopf`` file or one of the shipped names ``standard``
and ``nonstandard``.  Exit status is 0 iff no check failed; warnings never
change it.  Parse errors exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, TextIO

from . import hopfops, induce
from .induce import InducedVector
from .ncpoly import NcPoly, NonTerminationError
from .pairing import PairingEngine, check_duality
from .presentation import Bundle, ParseError, parse_bundle, validate_presentation
from .report import AxiomReport
from .scalar import ConfigurationError

SUITES = ("hopf", "bicross", "duality", "all")
VERIFY = ("closed-forms", "module-axioms", "limit", "subspace", "ladder", "pseudoequivalence", "all")


@dataclass
class RunConfig:
    command: str
    bundle: str = "standard"
    truncate: int = 4
    degree: int = 3
    order: int = 8
    format: str = "text"
    sign: int = induce.CORRECTED_SIGN
    verbose: bool = False
    expr: Optional[str] = None
    algebra: Optional[str] = None
    left: Optional[str] = None
    right: Optional[str] = None
    pairing: Optional[str] = None
    suite: str = "all"
    model: Optional[str] = None
    generator: str = "H"
    basis_power: int = 0
    which: str = "all"
    m_max: int = 4
    n_max: int = 3

    def __post_init__(self):
        for name in ("truncate", "degree", "order", "m_max", "n_max"):
            if getattr(self, name) < 0:
                raise ConfigurationError(f"{name} must be nonnegative")
        if self.format not in ("text", "records"):
            raise ConfigurationError("format must be text or records")
        if self.sign not in (1, -1):
            raise ConfigurationError("sign must be +1 or -1")


def _bundle_text(name: str) -> str:
    if name in induce.MODELS:
        return induce.shipped_bundle_text(name)
    with open(name, encoding="utf-8") as fh:
        return fh.read()


def load(cfg: RunConfig) -> Bundle:
    return parse_bundle(_bundle_text(cfg.bundle), cfg.truncate)


def _emit_reports(reports: List[AxiomReport], cfg: RunConfig, out: TextIO) -> int:
    failed = False
    for rep in reports:
        if cfg.format == "records":
            for line in rep.records():
                out.write(line + "\n")
        else:
            out.write(rep.text(cfg.verbose) + "\n")
        failed = failed or not rep.ok
    if cfg.format == "text":
        n_fail = sum(len(r.failures) for r in reports)
        n_warn = sum(len(r.warnings) for r in reports)
        out.write(f"{'FAIL' if failed else 'OK'}: {n_fail} failures, {n_warn} warnings\n")
    return 1 if failed else 0


def _pick_algebra(bundle: Bundle, expr: str, name: Optional[str]):
    if name is not None:
        if name not in bundle.algebras:
            raise ConfigurationError(f"no algebra named {name!r}")
        return bundle.algebras[name], bundle.algebras[name].parse(expr)
    errors = []
    for alg in bundle.algebras.values():
        try:
            return alg, alg.parse(expr)
        except ParseError as exc:
            if not exc.msg.startswith("unknown generator"):
                raise
            errors.append(exc)
    raise ParseError(f"{expr!r} mixes or misses generators: " + "; ".join(str(e) for e in errors))


def cmd_normalize(cfg: RunConfig, out: TextIO) -> int:
    alg, p = _pick_algebra(load(cfg), cfg.expr, cfg.algebra)
    text = p.canonical(alg.generators)
    if cfg.format == "records":
        out.write(json.dumps({"algebra": alg.name, "input": cfg.expr, "normal_form": text}) + "\n")
    else:
        out.write(text + "\n")
    return 0


def cmd_pair(cfg: RunConfig, out: TextIO) -> int:
    engine = PairingEngine.from_bundle(load(cfg), cfg.pairing)
    val = engine.parse_pair(cfg.left, cfg.right).canonical()
    if cfg.format == "records":
        out.write(json.dumps({"pairing": engine.spec.name, "left": cfg.left, "right": cfg.right, "value": val}) + "\n")
    else:
        out.write(val + "\n")
    return 0


def check_reports(bundle: Bundle, suite: str, degree: int) -> List[AxiomReport]:
    reps: List[AxiomReport] = []
    if suite in ("hopf", "all"):
        for alg in bundle.algebras.values():
            reps.append(validate_presentation(alg))
            reps.append(hopfops.check_hopf_axioms(alg, degree))
    if suite in ("bicross", "all"):
        for spec in bundle.bicross.values():
            reps.append(hopfops.check_bicross_conditions(spec, bundle.algebras[spec.algebra], degree))
        for ch in bundle.characters.values():
            spec = bundle.bicross[ch.kernel]
            reps.append(induce.check_character(induce.Character.from_spec(ch), spec, bundle.algebras[ch.algebra]))
    if suite in ("duality", "all"):
        for name in bundle.pairings:
            reps.append(check_duality(PairingEngine.from_bundle(bundle, name), degree))
    return reps


def cmd_check(cfg: RunConfig, out: TextIO) -> int:
    return _emit_reports(check_reports(load(cfg), cfg.suite, cfg.degree), cfg, out)


def _model(cfg: RunConfig, tag: Optional[str] = None) -> induce.InductionModel:
    tag = tag or cfg.model or (cfg.bundle if cfg.bundle in induce.MODELS else None)
    if tag is None:
        raise ConfigurationError("name the model with --model standard|nonstandard")
    if cfg.bundle in induce.MODELS:
        return induce.load_model(tag, cfg.truncate)
    return induce.load_model(tag, cfg.truncate, load(cfg))


def cmd_induce(cfg: RunConfig, out: TextIO) -> int:
    model = _model(cfg)
    if cfg.generator not in model.generators:
        raise ConfigurationError(f"{cfg.generator!r} is not a generator of {model.pres.name}")
    D = cfg.order
    vec = InducedVector.basis(model.alphabet, cfg.basis_power, max(D, cfg.basis_power))
    res = induce.induced_action(NcPoly.gen(model.alphabet, cfg.generator), vec, model, D)
    rec = {
        "model": model.tag,
        "generator": cfg.generator,
        "basis_power": cfg.basis_power,
        "order": D,
        "truncate": cfg.truncate,
        "coefficients": res.records(),
    }
    if cfg.format == "records":
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(f"v^{cfg.basis_power} -| {cfg.generator} = {res.canonical()}\n")
    return 0


def verify_reports(cfg: RunConfig) -> List[AxiomReport]:
    which = cfg.which
    tags = [cfg.model] if cfg.model else list(induce.MODELS)
    D, N = cfg.order, cfg.truncate
    models = {t: _model(cfg, t) for t in tags}
    reps: List[AxiomReport] = []
    for t, m in models.items():
        if which in ("closed-forms", "all"):
            reps.append(induce.verify_induction(m, D, cfg.m_max, cfg.sign))
        if which in ("module-axioms", "all"):
            reps.append(induce.check_module_axioms(m, D, cfg.m_max, cfg.sign))
        if which in ("limit", "all") and t == "standard":
            reps.append(induce.classical_limit(m, D, cfg.m_max))
        if which in ("subspace", "all") and t == "standard":
            reps.append(induce.check_invariant_subspace(D, cfg.n_max, N, m))
        if which in ("ladder", "all") and t == "nonstandard":
            reps.append(induce.check_ladder_nonstandard(m, D, cfg.n_max))
        if which in ("pseudoequivalence", "all"):
            reps.append(induce.check_pseudoequivalence(m, D, min(cfg.m_max, 3)))
    return reps


def cmd_verify(cfg: RunConfig, out: TextIO) -> int:
    return _emit_reports(verify_reports(cfg), cfg, out)


COMMANDS = {
    "normalize": cmd_normalize,
    "pair": cmd_pair,
    "check": cmd_check,
    "induce": cmd_induce,
    "verify": cmd_verify,
}


def run(cfg: RunConfig, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return COMMANDS[cfg.command](cfg, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    except (ConfigurationError, NonTerminationError, OSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bundle", default=argparse.SUPPRESS, help="path to a .hopf file, or standard / nonstandard")
    common.add_argument("--truncate", "-N", type=int, default=argparse.SUPPRESS, help="deformation truncation order (4)")
    common.add_argument("--degree", "-d", type=int, default=argparse.SUPPRESS, help="monomial degree cap (3)")
    common.add_argument("--order", "-D", type=int, default=argparse.SUPPRESS, help="v-degree of the support space (8)")
    common.add_argument("--format", choices=("text", "records"), default=argparse.SUPPRESS)
    common.add_argument("--sign", type=int, choices=(1, -1), default=argparse.SUPPRESS,
                        help="sign of the nonstandard H shift in closed forms (-1)")
    common.add_argument("--verbose", "-v", action="store_true", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="qinduce", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("normalize", parents=[common], help="normal-order an expression")
    s.add_argument("--expr", required=True)
    s.add_argument("--algebra")
    s = sub.add_parser("pair", parents=[common], help="evaluate the dual pairing")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.add_argument("--pairing")
    s = sub.add_parser("check", parents=[common], help="run axiom suites")
    s.add_argument("--suite", choices=SUITES, default="all")
    s = sub.add_parser("induce", parents=[common], help="act with a generator on v^m")
    s.add_argument("--model", choices=induce.MODELS)
    s.add_argument("--generator", default="H")
    s.add_argument("--basis-power", type=int, default=0)
    s = sub.add_parser("verify", parents=[common], help="run induced-representation checks")
    s.add_argument("--which", choices=VERIFY, default="all")
    s.add_argument("--model", choices=induce.MODELS)
    s.add_argument("--m-max", type=int, default=4)
    s.add_argument("--n-max", type=int, default=3)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = vars(build_parser().parse_args(argv))
    try:
        cfg = RunConfig(**args)
    except ConfigurationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return run(cfg)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
