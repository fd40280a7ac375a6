"""Command-line interface: one JSON report on stdout, a short summary on stderr.

Exit codes: 0 success, 1 domain condition (non-finite values, non-isolated
critical locus, non-regular sequence, periodicity or nilpotence not
detected, invalid MF), 2 input error, 3 S-pair budget exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import __version__
from .crit import NOT_FINITE, critical_values, cross_check, is_relative_critical_point, nonvanishing_values, relative_critical_values
from .errors import BudgetExceededError, DomainCondition, InputError, NonIsolatedError, PeriodicityNotDetectedError
from .groebner import spair_budget
from .lg import LGModel, check_regular_sequence, regularize
from .matfac import (
    MatrixFactorization,
    commutator_acts_by_zero,
    eisenbud_operators,
    koszul_mf,
    matrix_from_strings,
    operator_acts_by_zero,
    operator_nilpotence_probe,
    resolution_over_hypersurface,
    stable_hom_dims,
    stable_hom_window,
    tensor_mf,
    validate_mf,
)
from .milnor import DEFAULT_HH_BOUND, NON_ISOLATED, hh_rank, hp_rank, milnor_algebra, per_value_milnor_numbers
from .poly import GREVLEX, LEX, PolyRing, ring_from_sources

DEFAULT_BUDGET = 200_000
DEFAULT_STEPS = 6
DEFAULT_MF_BOUND = 4

EXIT_OK, EXIT_DOMAIN, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    order: str = "grevlex"
    bound: int = DEFAULT_HH_BOUND
    steps: int = DEFAULT_STEPS
    budget: int | None = DEFAULT_BUDGET
    json_indent: int | None = 2

    @property
    def monomial_order(self):
        return LEX if self.order == "lex" else GREVLEX


class _Domain(Exception):
    """A computed result that should be reported with exit code 1."""

    def __init__(self, result, summary):
        self.result = result
        self.summary = summary


# input helpers

def corpus_names():
    return sorted(p.name for p in resources.files("mfcoh.corpus").iterdir() if p.name.endswith(".json"))


def _read_text(path: str) -> str:
    p = Path(path)
    if p.is_file():
        return p.read_text()
    name = path if path.endswith(".json") else path + ".json"
    if name in corpus_names():
        return resources.files("mfcoh.corpus").joinpath(name).read_text()
    raise InputError(f"no such file or corpus model: {path}")


def load_model(path: str, cfg: RunConfig) -> LGModel:
    model = LGModel.from_json(_read_text(path))
    if cfg.order != "grevlex":
        ring = model.ambient.with_order(cfg.monomial_order)
        model = LGModel(ring, tuple(f.to_ring(ring) for f in model.relations), model.potential.to_ring(ring))
    return model


def load_mf(path: str) -> MatrixFactorization:
    return MatrixFactorization.from_json(_read_text(path))


def _ring(args, cfg: RunConfig, sources) -> PolyRing:
    if args.ring:
        names = tuple(v.strip() for v in args.ring.split(",") if v.strip())
        if not names:
            raise InputError("--ring is empty")
        return PolyRing(names, cfg.monomial_order)
    return ring_from_sources([s for s in sources if s], cfg.monomial_order)


def _split(text: str | None, flag: str):
    if text is None:
        raise InputError(f"{flag} is required")
    return [t.strip() for t in text.split(",") if t.strip()]


def _matrix_source(text: str | None):
    if text is None:
        raise InputError("--matrix is required")
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"--matrix must be a JSON list of rows: {exc}") from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("--matrix must be a JSON list of rows")
    return rows


def _require(value, flag):
    if value is None:
        raise InputError(f"{flag} is required")
    return value


def _point(text: str):
    try:
        return [Fraction(t.strip()) for t in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"malformed point {text!r}") from None


# subcommands

def cmd_regularize(args, cfg):
    model = load_model(_require(args.model, "--model"), cfg)
    reg = regularize(model)
    out = {
        "variables": list(reg.ring.variables),
        "new_variables": list(reg.new_variables),
        "W": str(reg.W),
    }
    return out, f"W = {reg.W}"


def _crit_values_dict(W):
    data = critical_values(W)
    out = data.to_dict()
    out["variables"] = list(W.ring.variables)
    out["potential"] = str(W)
    return data, out


def cmd_crit_values(args, cfg):
    src = _require(args.poly, "--poly")
    ring = _ring(args, cfg, [src])
    W = ring(src)
    data, out = _crit_values_dict(W)
    if data.status == NOT_FINITE:
        raise _Domain(out, "critical values are not finite")
    return out, f"critical values: {out['rational_values']} ({data.status})"


def _relcrit_block(model):
    rel = relative_critical_values(model)
    crit = critical_values(regularize(model).W)
    return rel, crit, {
        "critical_values": crit.to_dict(),
        "relative_critical_values": rel.to_dict(),
        "cross_check": cross_check(rel, crit),
    }


def cmd_relcrit(args, cfg):
    model = load_model(_require(args.model, "--model"), cfg)
    rel, crit, out = _relcrit_block(model)
    out["values"] = out["relative_critical_values"]["rational_values"]
    if args.point:
        out["point"] = is_relative_critical_point(model, _point(args.point)).to_dict()
    if rel.status == NOT_FINITE:
        raise _Domain(out, "relative critical values are not finite")
    return out, f"relative critical values: {out['values']}; cross-check {out['cross_check']}"


def cmd_check_regseq(args, cfg):
    model = load_model(_require(args.model, "--model"), cfg)
    rep = check_regular_sequence(model)
    out = rep.to_dict()
    if not rep.ok:
        raise _Domain(out, f"not a regular sequence (prefix {rep.failing_prefix})")
    return out, "regular sequence"


def cmd_milnor(args, cfg):
    src = _require(args.poly, "--poly")
    W = _ring(args, cfg, [src])(src)
    alg = milnor_algebra(W)
    if alg == NON_ISOLATED:
        raise _Domain({"status": NON_ISOLATED, "potential": str(W)}, "non-isolated critical locus")
    out = per_value_milnor_numbers(W).to_dict()
    out["potential"] = str(W)
    return out, f"mu = {out['mu_total']}"


def cmd_hh(args, cfg):
    model = load_model(_require(args.model, "--model"), cfg)
    rep = hh_rank(model, cfg.bound)
    out = rep.to_dict()
    if rep.total_dim is None:
        return out, f"truncated window at bound {cfg.bound}: certified degrees {sorted(rep.dims_by_degree)}"
    return out, f"HH dim {rep.total_dim} ({out['parity']})"


def cmd_hp(args, cfg):
    model = load_model(_require(args.model, "--model"), cfg)
    rep = hp_rank(model)
    return rep.to_dict(), f"HP rank {rep.rank}"


def cmd_mf_validate(args, cfg):
    mf = load_mf(_require(args.mf, "--mf"))
    rep = validate_mf(mf)
    out = rep.to_dict()
    out["rank"] = mf.rank
    if not rep.ok:
        raise _Domain(out, "not a matrix factorization")
    return out, "valid matrix factorization"


def cmd_mf_koszul(args, cfg):
    a, b = _split(args.a, "--a"), _split(args.b, "--b")
    ring = _ring(args, cfg, a + b)
    mf = koszul_mf([ring(x) for x in a], [ring(x) for x in b])
    out = mf.to_dict()
    out["valid"] = validate_mf(mf).ok
    return out, f"rank {mf.rank} factorization of {mf.potential}"


def cmd_mf_tensor(args, cfg):
    E = load_mf(_require(args.mf, "--mf"))
    F = load_mf(_require(args.mf2, "--mf2"))
    mf = tensor_mf(E, F)
    out = mf.to_dict()
    out["valid"] = validate_mf(mf).ok
    out["renaming"] = mf.metadata.get("renaming", {})
    return out, f"rank {mf.rank} factorization of {mf.potential}"


def cmd_mf_hom(args, cfg):
    E = load_mf(_require(args.mf, "--mf"))
    F = load_mf(args.mf2) if args.mf2 else E
    dims = stable_hom_dims(E, F)
    out = dims.to_dict()
    bound = args.bound if args.bound is not None else DEFAULT_MF_BOUND
    oracle = [stable_hom_window(E, F, b) for b in (bound - 1, bound)] if bound > 0 else []
    if oracle:
        prev, cur = oracle
        out["oracle"] = {
            "bound": bound,
            "dims": list(cur),
            "previous": list(prev),
            "certified": [p == c for p, c in zip(prev, cur)],
        }
        out["oracle_agrees"] = all(
            not ok or d == c for ok, d, c in zip(out["oracle"]["certified"], (dims.even_dim, dims.odd_dim), cur)
        )
    return out, f"stable Hom dims (even, odd) = ({dims.even_dim}, {dims.odd_dim})"


def cmd_mf_from_module(args, cfg):
    src = _require(args.poly, "--poly")
    rows = _matrix_source(args.matrix)
    ring = _ring(args, cfg, [src] + [str(x) for r in rows for x in r])
    W = ring(src)
    rep = resolution_over_hypersurface(W, matrix_from_strings(rows, ring), cfg.steps)
    out = rep.to_dict()
    if rep.mf is None:
        raise _Domain(out, f"no 2-periodic tail within {cfg.steps} steps")
    out["valid"] = validate_mf(rep.mf).ok
    return out, f"periodic from step {rep.periodic_index}; rank {rep.mf.rank}"


def cmd_eisenbud_ops(args, cfg):
    rels = _split(args.relations, "--relations")
    rows = _matrix_source(args.matrix)
    extra = [args.extra] if args.extra else []
    ring = _ring(args, cfg, rels + extra + [str(x) for r in rows for x in r])
    pres = matrix_from_strings(rows, ring)
    f = [ring(x) for x in rels]
    if args.extra:
        probe = operator_nilpotence_probe(f, ring(args.extra), pres, cfg.steps, ring=ring)
        out = probe.to_dict()
        out["operators"] = probe.operators.to_dict() if probe.operators else None
        if not probe.detected:
            raise _Domain(out, "nilpotence not detected within segment")
        return out, f"nilpotent with exponent {probe.exponent}"
    eo = eisenbud_operators(f, pres, cfg.steps, ring=ring)
    out = eo.to_dict()
    out["vanish_on_cohomology"] = [operator_acts_by_zero(eo, j) for j in range(len(f))]
    out["commutators_vanish_on_cohomology"] = {
        f"{j + 1},{k + 1}": commutator_acts_by_zero(eo, j, k) for j in range(len(f)) for k in range(j + 1, len(f))
    }
    return out, f"{len(f)} operators; certificate {eo.certificate_ok}; chain maps {eo.chain_map_ok}"


def _guarded(fn):
    try:
        return {"status": "ok", **fn()}
    except NonIsolatedError:
        return {"status": NON_ISOLATED}
    except DomainCondition as exc:
        return {"status": "domain-condition", "message": str(exc)}


def report(model: LGModel, cfg: RunConfig = RunConfig()) -> dict:
    """Run the whole pipeline on one model; domain conditions are embedded, not raised."""
    out = {"model": model.to_dict()}
    regseq = check_regular_sequence(model)
    out["regular_sequence"] = regseq.to_dict()
    reg = regularize(model)
    out["regularized"] = {"variables": list(reg.ring.variables), "W": str(reg.W)}
    rel, crit, block = _relcrit_block(model)
    out.update(block)
    support = nonvanishing_values(model)
    out["mfcoh_support"] = {
        "finite": support.finite,
        "values": [str(c) for c in support.rational_values],
        "nonrational_factors": out["critical_values"]["nonrational_factors"],
    }
    alg = milnor_algebra(reg.W)
    out["milnor"] = {"status": NON_ISOLATED} if alg == NON_ISOLATED else per_value_milnor_numbers(reg.W).to_dict()
    out["hh"] = _guarded(lambda: hh_rank(model, cfg.bound).to_dict())
    out["hp"] = _guarded(lambda: hp_rank(model).to_dict())
    out["certified"] = {
        "regular_sequence": regseq.ok,
        "values_finite": crit.finite and rel.finite,
        "cross_check": out["cross_check"] == "agree",
        "hh_exact": out["hh"].get("total_dim") is not None,
    }
    return out


def cmd_report(args, cfg):
    model = load_model(_require(args.model, "--model"), cfg)
    out = report(model, cfg)
    vals = out["relative_critical_values"]["rational_values"]
    return out, f"relative critical values {vals}; cross-check {out['cross_check']}"


COMMANDS = {
    "regularize": cmd_regularize,
    "crit-values": cmd_crit_values,
    "relcrit": cmd_relcrit,
    "check-regseq": cmd_check_regseq,
    "milnor": cmd_milnor,
    "hh": cmd_hh,
    "hp": cmd_hp,
    "mf-validate": cmd_mf_validate,
    "mf-koszul": cmd_mf_koszul,
    "mf-tensor": cmd_mf_tensor,
    "mf-hom": cmd_mf_hom,
    "mf-from-module": cmd_mf_from_module,
    "eisenbud-ops": cmd_eisenbud_ops,
    "report": cmd_report,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mfcoh", description="Exact invariants of LG models and matrix factorizations.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--model", help="model JSON file or corpus name")
        s.add_argument("--poly")
        s.add_argument("--ring", help='comma-separated variables, e.g. "x,y"')
        s.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
        s.add_argument("--bound", type=int)
        s.add_argument("--steps", type=int, default=DEFAULT_STEPS)
        s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="S-pair cap, 0 for none")
        s.add_argument("--json-indent", type=int, default=2)
        s.add_argument("--mf")
        s.add_argument("--mf2")
        s.add_argument("--a")
        s.add_argument("--b")
        s.add_argument("--matrix", help="JSON list of rows of polynomial strings")
        s.add_argument("--relations", help="comma-separated polynomials")
        s.add_argument("--extra", help="extra relation for the nilpotence probe")
        s.add_argument("--point", help="comma-separated rational coordinates")
    return p


def input_hash(argv) -> str:
    """Hash of the arguments plus the contents of every file they name."""
    h = hashlib.sha256()
    for a in argv:
        h.update(a.encode())
        h.update(b"\0")
        p = Path(a)
        if p.suffix == ".json" and p.is_file():
            h.update(p.read_bytes())
    return h.hexdigest()


def main(argv=None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    start = time.perf_counter()
    envelope = {"command": argv, "input_hash": input_hash(argv), "version": __version__}
    indent = 2
    code = EXIT_OK
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise InputError("missing subcommand")
        indent = args.json_indent if args.json_indent is not None and args.json_indent >= 0 else None
        if args.steps < 1:
            raise InputError("--steps must be positive")
        if args.bound is not None and args.bound < 0:
            raise InputError("--bound must be nonnegative")
        cfg = RunConfig(
            order=args.order,
            bound=DEFAULT_HH_BOUND if args.bound is None else args.bound,
            steps=args.steps,
            budget=args.budget or None,
            json_indent=indent,
        )
        with spair_budget(cfg.budget):
            try:
                result, summary = COMMANDS[args.command](args, cfg)
            except _Domain as dom:
                result, summary, code = dom.result, dom.summary, EXIT_DOMAIN
        envelope["status"] = "ok" if code == EXIT_OK else "domain-condition"
        envelope["results"] = result
    except DomainCondition as exc:
        code, summary = EXIT_DOMAIN, str(exc)
        kind = NON_ISOLATED if isinstance(exc, NonIsolatedError) else type(exc).__name__
        if isinstance(exc, PeriodicityNotDetectedError):
            kind = "not-detected"
        envelope["status"] = "domain-condition"
        envelope["error"] = {"kind": kind, "message": str(exc)}
    except InputError as exc:
        code, summary = EXIT_INPUT, f"input error: {exc}"
        envelope["status"] = "input-error"
        envelope["error"] = {"kind": type(exc).__name__, "message": str(exc)}
    except BudgetExceededError as exc:
        code, summary = EXIT_BUDGET, str(exc)
        envelope["status"] = "budget-exceeded"
        envelope["error"] = {"kind": "BudgetExceededError", "message": str(exc), "limit": exc.limit}
    envelope["exit_code"] = code
    envelope["timing_seconds"] = round(time.perf_counter() - start, 6)
    stdout.write(json.dumps(envelope, indent=indent, sort_keys=False) + "\n")
    stderr.write(f"[{code}] {summary}\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
