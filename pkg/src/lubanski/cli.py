"""Command-line front end: ``verify``, ``explain`` and ``list-suites``.

Exit status: 0 when every selected check passed, 1 when any check failed,
2 for configuration and usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path

from . import __version__
from . import registry
from .exact_linalg import ExactArithmeticError, Scalar
from .minkowski import FixtureError, FourVector, MomentumSample
from .outcome import expect, render

__all__ = ["SuiteConfig", "ConfigError", "load_config", "load_overrides", "run", "main"]

EXIT_PASS, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2
CONFIG_KEYS = {"suites", "momentum_overrides", "helicity_candidates", "output", "fail_fast", "digits", "jobs"}


class ConfigError(ValueError):
    """Invalid configuration; reported with exit status 2."""


@dataclass(frozen=True)
class SuiteConfig:
    suites: tuple = ("all",)
    momentum_overrides: str | None = None
    helicity_candidates: tuple | None = None
    output: str = "text"
    fail_fast: bool = False
    digits: int = 6
    jobs: int = 1

    def validate(self) -> "SuiteConfig":
        unknown = [s for s in self.suites if s != "all" and s not in registry.SUITES]
        if unknown:
            raise ConfigError(f"unknown suite(s): {', '.join(unknown)}")
        if not self.suites:
            raise ConfigError("no suites selected")
        if self.output not in ("json", "text"):
            raise ConfigError(f"output must be json or text, got {self.output!r}")
        if isinstance(self.digits, bool) or not isinstance(self.digits, int) or self.digits < 1:
            raise ConfigError("digits must be a positive integer")
        if isinstance(self.jobs, bool) or not isinstance(self.jobs, int) or self.jobs < 1:
            raise ConfigError("jobs must be a positive integer")
        return self


def _rational(text, what: str) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"{what}: not a rational number: {text!r}") from exc


def load_config(path: str | Path) -> SuiteConfig:
    """Read a JSON object with SuiteConfig fields."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc.msg} (line {exc.lineno})") from exc
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    extra = set(data) - CONFIG_KEYS
    if extra:
        raise ConfigError(f"unknown config key(s): {', '.join(sorted(extra))}")
    kw = dict(data)
    if "suites" in kw:
        if isinstance(kw["suites"], str):
            kw["suites"] = [kw["suites"]]
        kw["suites"] = tuple(kw["suites"])
    if "helicity_candidates" in kw and kw["helicity_candidates"] is not None:
        kw["helicity_candidates"] = tuple(kw["helicity_candidates"])
    if "fail_fast" in kw and not isinstance(kw["fail_fast"], bool):
        raise ConfigError("fail_fast must be true or false")
    if not all(isinstance(x, str) for x in kw.get("suites", ())):
        raise ConfigError("suites must be a list of names")
    return SuiteConfig(**kw)


def load_overrides(path: str | Path, base: registry.Fixtures) -> registry.Fixtures:
    """Replace fixture momenta from a JSON list of {components, mass_squared} records.

    Records are sorted by their mass squared: positive values replace the
    massive list, zero the massless list and negative values the off-shell
    list.  Lists without any record keep their built-in values.
    """
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read fixture file {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"fixture file {path} is not valid JSON: {exc.msg}") from exc
    if not isinstance(data, list) or not data:
        raise ConfigError("fixture file must hold a nonempty list of records")
    massive, massless, off = [], [], []
    for k, rec in enumerate(data):
        if not isinstance(rec, dict) or set(rec) != {"components", "mass_squared"}:
            raise ConfigError(f"fixture record {k} must have exactly the keys components and mass_squared")
        comps = rec["components"]
        if not isinstance(comps, list) or len(comps) != 4:
            raise ConfigError(f"fixture record {k}: components must be a list of 4 rationals")
        comps = [_rational(c, f"record {k}") for c in comps]
        m2 = _rational(rec["mass_squared"], f"record {k}")
        try:
            sample = MomentumSample(FourVector(tuple(comps)), m2)
        except FixtureError as exc:
            raise ConfigError(f"fixture record {k}: {exc}") from exc
        if m2 > 0:
            massive.append(sample)
        elif m2 == 0:
            if all(c == 0 for c in comps):
                raise ConfigError(f"fixture record {k}: the zero momentum is not a usable null fixture")
            massless.append(sample)
        else:
            off.append(sample.p)
    return replace(base,
                   massive=tuple(massive) or base.massive,
                   massless=tuple(massless) or base.massless,
                   off_shell=tuple(off) or base.off_shell)


def build_fixtures(config: SuiteConfig) -> registry.Fixtures:
    fx = registry.default_fixtures()
    if config.momentum_overrides:
        fx = load_overrides(config.momentum_overrides, fx)
    if config.helicity_candidates is not None:
        cands = tuple(_rational(c, "helicity candidate") for c in config.helicity_candidates)
        if not cands:
            raise ConfigError("helicity_candidates must not be empty")
        fx = replace(fx, helicity_candidates=cands)
    return fx


# ----------------------------------------------------------------------
# rendering


def _decimal(x: Fraction, digits: int) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def decimal_render(value, digits: int):
    """Approximate rendering for the text report only; JSON keeps exact strings."""
    if isinstance(value, bool) or value is None or isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return _decimal(value, digits)
    if isinstance(value, Scalar):
        if value.is_real:
            return _decimal(value.re, digits)
        re, im = _decimal(value.re, digits), _decimal(value.im, digits)
        return f"{re}{'' if im.startswith('-') else '+'}{im}i" if value.re else f"{im}i"
    if isinstance(value, dict):
        return {str(k): decimal_render(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [decimal_render(v, digits) for v in value]
    return render(value)


def _run_check(args):
    check_id, fx, digits = args
    check = registry.get(check_id)
    records = []
    try:
        outcomes = check.run(fx)
    except (ExactArithmeticError, FixtureError) as exc:
        # an arithmetic or fixture error fails this check without aborting the run
        outcomes = [expect("check raised an error", False, error=f"{type(exc).__name__}: {exc}")]
    for o in outcomes:
        rec = o.as_dict()
        rec.update({"suite": check.suite, "check_id": check.check_id, "anchor": check.anchor})
        records.append((rec, decimal_render(dict(o.witness), digits)))
    return records


def run(config: SuiteConfig) -> tuple[int, dict, list]:
    """Execute the selected suites; returns (exit status, JSON document, text witnesses)."""
    config.validate()
    fx = build_fixtures(config)
    checks = registry.checks_for(config.suites)
    jobs = [(c.check_id, fx, config.digits) for c in checks]
    results = []
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for recs in pool.map(_run_check, jobs):
                results.append(recs)
                if config.fail_fast and any(r["verdict"] == "fail" for r, _ in recs):
                    break
    else:
        for job in jobs:
            recs = _run_check(job)
            results.append(recs)
            if config.fail_fast and any(r["verdict"] == "fail" for r, _ in recs):
                break
    flat = [r for recs in results for r in recs]
    records = [r for r, _ in flat]
    failed = sum(r["verdict"] == "fail" for r in records)
    doc = {
        "tool_version": __version__,
        "convention": dict(registry.CONVENTION),
        "suites": sorted(set(registry.SUITES) if "all" in config.suites else set(config.suites)),
        "summary": {
            "checks": len(results),
            "checks_selected": len(checks),
            "outcomes": len(records),
            "passed": len(records) - failed,
            "failed": failed,
        },
        "records": records,
    }
    status = EXIT_FAIL if failed or not records else EXIT_PASS
    return status, doc, [t for _, t in flat]


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def text_report(doc: dict, witnesses: list) -> str:
    lines = [f"lubanski {doc['tool_version']}"]
    lines += [f"  {k}: {v}" for k, v in sorted(doc["convention"].items())]
    for rec, wit in zip(doc["records"], witnesses):
        verdict = "PASS" if rec["verdict"] == "pass" else "FAIL"
        inputs = ", ".join(f"{k}={v}" for k, v in sorted(rec["inputs"].items()))
        wtxt = ", ".join(f"{k}={v}" for k, v in sorted(wit.items()))
        lines.append(f"{verdict} {rec['suite']}/{rec['check_id']}: {rec['label']} [{inputs}] {{{wtxt}}}")
    s = doc["summary"]
    lines.append(f"{s['passed']} passed, {s['failed']} failed in {s['checks']} checks")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# commands


def explain(check_id: str) -> str:
    try:
        check = registry.get(check_id)
    except KeyError:
        raise ConfigError(f"unknown check id {check_id!r}; see list-suites") from None
    fx = registry.default_fixtures()
    lines = [f"check:  {check.check_id}", f"suite:  {check.suite}", f"anchor: {check.anchor}"]
    shapes = registry.shapes(check, fx)
    if shapes:
        lines.append("assembled matrices:")
        lines += [f"  {fam}: {r}x{c}" for fam, (r, c) in shapes]
    lines.append("convention:")
    lines += [f"  {k}: {v}" for k, v in sorted(registry.CONVENTION.items())]
    return "\n".join(lines) + "\n"


def list_suites() -> str:
    lines = []
    for suite in registry.SUITES:
        ids = [c.check_id for c in registry.checks_for([suite])]
        lines.append(f"{suite} ({len(ids)} checks)")
        lines += [f"  {i}" for i in ids]
    lines.append(f"all ({len(registry.CHECKS)} checks)")
    return "\n".join(lines) + "\n"


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lubanski", description="Exact verification of relativistic wave equations.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", action="append", dest="suites", metavar="NAME",
                   help="suite to run (repeatable); default all")
    v.add_argument("--config", metavar="PATH", help="JSON file with SuiteConfig fields")
    v.add_argument("--output", choices=("json", "text"))
    v.add_argument("--fail-fast", action="store_true", default=None)
    v.add_argument("--digits", type=int, help="decimal digits in the text report")
    v.add_argument("--jobs", type=int, help="worker processes")
    v.add_argument("--fixtures", metavar="PATH", help="momentum override file")
    e = sub.add_parser("explain", help="describe one check")
    e.add_argument("check_id")
    sub.add_parser("list-suites", help="list suites and their checks")
    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "explain":
            sys.stdout.write(explain(args.check_id))
            return EXIT_PASS
        if args.command == "list-suites":
            sys.stdout.write(list_suites())
            return EXIT_PASS
        config = load_config(args.config) if args.config else SuiteConfig()
        overrides = {k: getattr(args, k) for k in ("output", "fail_fast", "digits", "jobs")
                     if getattr(args, k) is not None}
        if args.suites:
            overrides["suites"] = tuple(args.suites)
        if args.fixtures:
            overrides["momentum_overrides"] = args.fixtures
        config = replace(config, **overrides).validate()
        status, doc, witnesses = run(config)
    except ConfigError as exc:
        sys.stderr.write(f"config error: {exc}\n")
        if getattr(args, "output", None) == "json":
            sys.stdout.write(dumps({"error": str(exc), "records": []}))
        return EXIT_CONFIG
    sys.stdout.write(dumps(doc) if config.output == "json" else text_report(doc, witnesses))
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
