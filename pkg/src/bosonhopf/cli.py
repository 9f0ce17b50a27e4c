"""Batch runner and report emitter.

Subcommands:
  run              execute check suites over parameter grids from a config
  eval             evaluate one expression on one representation
  list-identities  print the identity catalog

Config files are INI: one ``[scenario NAME]`` section per scenario with a
``family`` key, comma-separated parameter value lists (grids expand as the
Cartesian product), ``dim``, ``suites`` and optional per-suite tolerance
overrides (``tol.rmatrix = 1e-8``).  Points violating a structural proviso
(alpha = 0, sigma = 0, delta = 0, nu = 0, or a non-integer grade shift for
the graded R-matrix) are reported as skipped, never as failures; numerical
residual breaches are failures.  Exit codes: 0 all passed or skipped, 1 at
least one failed check, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import configparser
import itertools
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .expr import (EvalContext, EvalError, GRAMMAR_VERSION, ParseError,
                   evaluate, parse)
from .fock import (PARAM_NAMES, AlgebraSpec, SpecError, build_rep,
                   check_defining_relations, validity_window, windowed_norm)
from .hopf import build_tables
from .report import IDENTITY_CATALOG, CheckReport, skipped_report
from .rmatrix import (build_r, build_r0, check_r_axioms, check_trivial_r,
                      check_ybe, run_r_checks)
from . import structure as structure_mod

REPORT_SCHEMA_VERSION = "1.0"
SUITES = ("relations", "hopf", "delta-hom", "rmatrix", "ybe", "casimir",
          "structure", "iso")

PROVISO_SKIPS = {
    "B": [("alpha", "provided that alpha != 0")],
    "Bq": [("alpha", "provided that alpha != 0")],
    "Bbar": [("sigma", "provided that sigma != 0")],
    "Bbarq": [("sigma", "provided that sigma != 0")],
    "H": [("delta", "such an element does not exist if delta = 0"),
          ("nu", "the reflection operator normalization requires nu != 0")],
}


class ConfigError(ValueError):
    pass


@dataclass
class Scenario:
    name: str
    family: str
    param_grid: dict                  # name -> list of floats
    dim: int = 8
    suites: tuple = SUITES
    tol: float = 1e-10
    suite_tols: dict = field(default_factory=dict)
    lambda1: float = 1.0
    lambda4: float = 0.5
    iso_beta: float = 1.0
    iso_nu: float = 1.0
    iso_rho: float = 0.0

    def tol_for(self, suite: str) -> float:
        return self.suite_tols.get(suite, self.tol)


@dataclass
class ScenarioConfig:
    scenarios: list
    out: str = ""


_SCENARIO_SCALARS = {"dim": int, "tol": float, "lambda1": float,
                     "lambda4": float, "iso_beta": float, "iso_nu": float,
                     "iso_rho": float}


def parse_config(path: str) -> ScenarioConfig:
    cp = configparser.ConfigParser()
    read = cp.read(path)
    if not read:
        raise ConfigError(f"cannot read config file {path!r}")
    scenarios = []
    out = ""
    for section in cp.sections():
        if section == "run":
            out = cp.get("run", "out", fallback="")
            continue
        if not section.startswith("scenario"):
            raise ConfigError(f"unknown section [{section}]; expected "
                              "[run] or [scenario NAME]")
        name = section[len("scenario"):].strip() or section
        items = dict(cp.items(section))
        family = items.pop("family", None)
        if family is None:
            raise ConfigError(f"[{section}] is missing the family key")
        if family not in PARAM_NAMES:
            raise ConfigError(f"[{section}] has unknown family {family!r}; "
                              f"expected one of {sorted(PARAM_NAMES)}")
        scen = Scenario(name=name, family=family, param_grid={})
        if "suites" in items:
            suites = tuple(s.strip() for s in items.pop("suites").split(","))
            unknown = [s for s in suites if s not in SUITES]
            if unknown:
                raise ConfigError(f"[{section}] has unknown suites "
                                  f"{unknown}; expected subset of {SUITES}")
            scen.suites = suites
        for key, value in items.items():
            if key in _SCENARIO_SCALARS:
                setattr(scen, key, _SCENARIO_SCALARS[key](value))
            elif key.startswith("tol."):
                suite = key[4:]
                if suite not in SUITES:
                    raise ConfigError(f"[{section}]: tolerance override for "
                                      f"unknown suite {suite!r}")
                scen.suite_tols[suite] = float(value)
            elif key in ("alpha", "beta", "sigma", "tau", "delta", "nu",
                         "rho", "q"):
                values = [float(v) for v in value.split(",")]
                if key not in PARAM_NAMES[family]:
                    print(f"warning: [{section}] parameter {key!r} is not "
                          f"used by family {family}; ignored", file=sys.stderr)
                    continue
                scen.param_grid[key] = values
            else:
                raise ConfigError(f"[{section}] has unknown key {key!r}")
        missing = [p for p in PARAM_NAMES[family] if p not in scen.param_grid]
        if missing:
            raise ConfigError(f"[{section}] is missing values for {missing}")
        scenarios.append(scen)
    if not scenarios:
        raise ConfigError(f"config {path!r} defines no scenarios")
    return ScenarioConfig(scenarios=scenarios, out=out)


def grid_expand(scenario: Scenario) -> list:
    """Cartesian expansion into (params dict, spec or None, skip reason)."""
    names = PARAM_NAMES[scenario.family]
    out = []
    for combo in itertools.product(*(scenario.param_grid[n] for n in names)):
        params = dict(zip(names, combo))
        reason = ""
        for pname, text in PROVISO_SKIPS[scenario.family]:
            if params.get(pname) == 0:
                reason = text
                break
        spec = None
        if not reason:
            try:
                spec = AlgebraSpec(scenario.family, combo)
            except SpecError as exc:
                reason = str(exc)
        out.append((params, spec, reason))
    return out


# -- suite execution ----------------------------------------------------------

def _skip(suite: str, family: str, params: dict, dim: int, reason: str):
    return [skipped_report(identity=f"{suite}.skipped",
                           reference=IDENTITY_CATALOG.get(suite, suite),
                           family=family, params=params, dim=dim,
                           reason=reason)]


def _integer_grade_shift(spec: AlgebraSpec) -> bool:
    shift = spec.grade_shift
    return shift is not None and float(shift).is_integer()


def run_suite(scenario: Scenario, spec: AlgebraSpec, suite: str) -> list:
    tol = scenario.tol_for(suite)
    dim = scenario.dim
    fam = spec.family
    params = spec.param_dict
    if suite == "relations":
        return check_defining_relations(build_rep(spec, dim), tol)
    if suite == "hopf":
        return build_tables(build_rep(spec, dim)).run_axiom_checks(tol)
    if suite == "delta-hom":
        return build_tables(build_rep(spec, dim)).check_delta_homomorphism(tol)
    if suite == "rmatrix":
        rep = build_rep(spec, dim)
        tables = build_tables(rep)
        if fam == "Bq":
            if not _integer_grade_shift(spec):
                return _skip(suite, fam, params, dim,
                             "(-1)^(2*Ntilde) = I requires beta/alpha "
                             "to be an integer")
            return run_r_checks(rep, tables, tol)
        if fam == "Bbarq":
            return run_r_checks(rep, tables, tol)
        if fam == "B":
            if not _integer_grade_shift(spec):
                return _skip(suite, fam, params, dim,
                             "(-1)^(2*Ntilde) = I requires beta/alpha "
                             "to be an integer")
            return check_r_axioms(build_r0(rep), tables, tol)
        if fam == "Bbar":
            return [check_trivial_r(tables, tol)]
        return _skip(suite, fam, params, dim,
                     "no universal R-matrix for this family")
    if suite == "ybe":
        ybe_dim = min(dim, 6)
        if fam in ("Bq", "Bbarq"):
            if fam == "Bq" and not _integer_grade_shift(spec):
                return _skip(suite, fam, params, dim,
                             "(-1)^(2*Ntilde) = I requires beta/alpha "
                             "to be an integer")
            return [check_ybe(build_r(build_rep(spec, ybe_dim)), tol)]
        if fam == "B":
            if not _integer_grade_shift(spec):
                return _skip(suite, fam, params, dim,
                             "(-1)^(2*Ntilde) = I requires beta/alpha "
                             "to be an integer")
            return [check_ybe(build_r0(build_rep(spec, min(dim, 4))), tol)]
        return _skip(suite, fam, params, dim,
                     "no Yang-Baxter content for this family")
    if suite == "casimir":
        if fam != "B":
            return _skip(suite, fam, params, dim,
                         "closed-form Casimir spectra are stated for the "
                         "undeformed graded family")
        rep = build_rep(spec, dim)
        osp = structure_mod.build_realization(rep, "osp12")
        sl2 = structure_mod.build_realization(rep, "sl2")
        return [structure_mod.casimir_spectrum(osp, rep, "osp_i2", tol),
                structure_mod.casimir_spectrum(sl2, rep, "sl2_c2", tol)]
    if suite == "structure":
        rep = build_rep(spec, dim)
        tables = build_tables(rep) if fam == "B" else None
        return structure_mod.run_structure_checks(
            rep, tables, lam1=scenario.lambda1, lam4=scenario.lambda4,
            tol=tol)
    if suite == "iso":
        if fam == "H":
            b_spec = AlgebraSpec("B", (2.0 * spec.delta, scenario.iso_beta))
            return structure_mod.iso_phi(b_spec, build_rep(spec, dim),
                                         lam1=scenario.lambda1, tol=tol)
        if fam == "B":
            h_spec = AlgebraSpec("H", (spec.alpha / 2.0, scenario.iso_nu,
                                       scenario.iso_rho))
            return structure_mod.iso_phi_prime(h_spec, build_rep(spec, dim),
                                              tol=tol)
        return _skip(suite, fam, params, dim,
                     "the generator maps relate the graded and reflection "
                     "families only")
    raise ConfigError(f"unknown suite {suite!r}")


def _run_job(job) -> list:
    """One (scenario, grid point, suite) unit; errors become failed reports."""
    scenario, params, spec, skip_reason, suite = job
    start = time.perf_counter()
    if skip_reason:
        reports = _skip(suite, scenario.family, params, scenario.dim,
                        skip_reason)
    else:
        try:
            reports = run_suite(scenario, spec, suite)
        except Exception as exc:   # per-check errors must not abort the run
            reports = [CheckReport(
                identity=f"{suite}.error", reference=str(exc),
                family=scenario.family, params=params, dim=scenario.dim,
                window_degree=0, residual=float("inf"),
                tol=scenario.tol_for(suite), passed=False,
                branch_note={"error": f"{type(exc).__name__}: {exc}"})]
    elapsed = time.perf_counter() - start
    rows = []
    for rp in reports:
        row = rp.to_dict()
        row["scenario"] = scenario.name
        row["suite"] = suite
        row["wall_time"] = elapsed / max(1, len(reports))
        rows.append(row)
    return rows


def _sort_key(row: dict):
    return (row["scenario"], row["suite"], row["identity"],
            json.dumps(row["params"], sort_keys=True), row["dim"])


def run_config(config: ScenarioConfig, out_path: str, jobs: int) -> int:
    jobs_list = []
    for scenario in config.scenarios:
        for params, spec, skip_reason in grid_expand(scenario):
            for suite in scenario.suites:
                jobs_list.append((scenario, params, spec, skip_reason, suite))
    # Yang-Baxter jobs allocate D^3-sized operators; cap their parallelism
    ybe_jobs = [j for j in jobs_list if j[4] == "ybe"]
    other_jobs = [j for j in jobs_list if j[4] != "ybe"]
    rows = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_run_job, other_jobs):
                rows.extend(chunk)
        with ProcessPoolExecutor(max_workers=min(jobs, 2)) as pool:
            for chunk in pool.map(_run_job, ybe_jobs):
                rows.extend(chunk)
    else:
        for job in other_jobs + ybe_jobs:
            rows.extend(_run_job(job))
    rows.sort(key=_sort_key)
    doc = {
        "metadata": {
            "artifact_version": __version__,
            "grammar_version": GRAMMAR_VERSION,
            "schema_version": REPORT_SCHEMA_VERSION,
            "generator": "bosonhopf run",
        },
        "counts": {
            "passed": sum(1 for r in rows if r["passed"] and not r["skipped"]),
            "failed": sum(1 for r in rows
                          if not r["passed"] and not r["skipped"]),
            "skipped": sum(1 for r in rows if r["skipped"]),
        },
        "reports": rows,
    }
    text = json.dumps(doc, indent=2, sort_keys=True, default=_json_default)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    failed = doc["counts"]["failed"]
    summary = (f"{doc['counts']['passed']} passed, {failed} failed, "
               f"{doc['counts']['skipped']} skipped")
    print(summary, file=sys.stderr)
    return 1 if failed else 0


def _json_default(obj):
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    raise TypeError(f"not JSON-serializable: {type(obj).__name__}")


# -- subcommand plumbing ------------------------------------------------------

def _cmd_run(args) -> int:
    config = parse_config(args.config)
    for scenario in config.scenarios:
        if args.dim:
            scenario.dim = args.dim
        if args.tol:
            scenario.tol = args.tol
    out = args.out or config.out
    jobs = args.jobs or os.cpu_count() or 1
    return run_config(config, out, jobs)


def _cmd_eval(args) -> int:
    try:
        params = tuple(float(v) for v in args.params.split(","))
    except ValueError:
        print(f"error: cannot parse parameters {args.params!r}",
              file=sys.stderr)
        return 2
    try:
        spec = AlgebraSpec(args.family, params)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep = build_rep(spec, args.dim)
    tables = None
    try:
        tables = build_tables(rep)
    except Exception:
        pass
    ctx = EvalContext(rep, tables)
    try:
        mat = evaluate(parse(args.expression), ctx)
    except (ParseError, EvalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sites = round(np.log(mat.shape[0]) / np.log(rep.dim)) if rep.dim > 1 else 1
    if args.degree:
        from .tensor import total_window_projector
        proj = total_window_projector(rep.dim, sites, args.degree)
    else:
        proj = np.eye(mat.shape[0])
    win = windowed_norm(mat, proj)
    full = float(np.linalg.norm(mat, 2))
    print(f"windowed norm (degree {args.degree}): {win:.6e}")
    print(f"unwindowed norm: {full:.6e}")
    if args.dump_matrix:
        dump = {"shape": list(mat.shape),
                "real": np.real(mat).tolist(),
                "imag": np.imag(mat).tolist()}
        print(json.dumps(dump))
    return 0


def _cmd_list_identities(args) -> int:
    width = max(len(k) for k in IDENTITY_CATALOG)
    for key in sorted(IDENTITY_CATALOG):
        print(f"{key:<{width}}  {IDENTITY_CATALOG[key]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bosonhopf",
        description="Numerical verification lab for generalized boson and "
                    "Heisenberg Hopf algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    runp = sub.add_parser("run", help="run check suites from a config file")
    runp.add_argument("--config", required=True, help="INI scenario config")
    runp.add_argument("--out", default="", help="JSON report path (default stdout)")
    runp.add_argument("--dim", type=int, default=0,
                      help="override every scenario dimension")
    runp.add_argument("--tol", type=float, default=0.0,
                      help="override every scenario base tolerance")
    runp.add_argument("--jobs", type=int, default=0,
                      help="worker processes (default: available parallelism)")
    runp.set_defaults(func=_cmd_run)

    evalp = sub.add_parser("eval", help="evaluate one expression")
    evalp.add_argument("--family", required=True,
                       choices=sorted(PARAM_NAMES))
    evalp.add_argument("--params", required=True,
                       help="comma-separated parameter values in family order")
    evalp.add_argument("--dim", type=int, default=8)
    evalp.add_argument("--degree", type=int, default=0,
                       help="validity-window raise degree for the windowed norm")
    evalp.add_argument("--dump-matrix", action="store_true",
                       help="print the full matrix as JSON")
    evalp.add_argument("expression")
    evalp.set_defaults(func=_cmd_eval)

    listp = sub.add_parser("list-identities",
                           help="print the identity catalog")
    listp.set_defaults(func=_cmd_list_identities)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
