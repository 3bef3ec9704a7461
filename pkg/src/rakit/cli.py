"""Experiment runner.

Verbs
-----
run CONFIG      run the scenario described by a flat key-value config file
table {1,2,3}   rerun a bundled comparison table and flag measured vs reference
sweep           run one method across a list of shifts, emit history curves
gen PROBLEM     generate a test problem and export it as Matrix Market files

Every run writes one CSV per method (``iter,error_norm,residual_norm``, the
error column empty when the exact solution is unknown) plus a ``summary.json``
with per-method minima, the resolved shift, and wall time. Outputs are
deterministic for a fixed seed; only wall times vary between reruns.

Exit codes: 0 success, 1 solver failure, 2 usage error. The default output
directory is ``$RAKIT_OUT_DIR`` or ``./rakit_out``.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import reference
from .analysis import estimate_condition, lambda_heuristic, lambda_star
from .baselines import cg_solve, cgls_solve, gmres_solve
from .errors import RakitError
from .linalg import extreme_eigs_spd, is_symmetric, lu_factor, solve_factored
from .problems import (
    FREDHOLM_NAMES,
    NoiseSpec,
    TestProblem,
    add_noise,
    generate_franke_rbf,
    generate_fredholm,
    load_matrix_market,
    write_matrix_market,
)
from .solvers import SolveReport, ra_solve, rat_solve, riley_solve, second_difference_matrix

METHOD_NAMES = ("ra", "riley", "rat", "cg", "gmres", "cgls")
POLICIES = ("star", "heuristic-point", "heuristic-range-low", "heuristic-range-high")
REFINEMENT = ("ra", "riley", "rat")


class UsageError(Exception):
    """Configuration or argument problem; maps to exit code 2."""


@dataclass
class MethodSpec:
    name: str
    lam: float | None = None
    policy: str | None = None

    @property
    def label(self) -> str:
        if self.lam is not None:
            return f"{self.name}@{self.lam:g}"
        if self.policy is not None:
            return f"{self.name}@{self.policy}"
        return self.name


@dataclass
class ScenarioConfig:
    problem_kind: str
    n: int
    methods: list[MethodSpec]
    shape: float = 1.0
    path_a: str | None = None
    path_b: str | None = None
    noise_delta: float = 0.0
    noise_seed: int | None = None
    max_iter: int | None = None  # None means "N", the system dimension
    residual_tol: float | None = None
    seed: int = 0
    output_dir: Path = field(default_factory=lambda: _default_out())


def _default_out() -> Path:
    return Path(os.environ.get("RAKIT_OUT_DIR", "rakit_out"))


# ---------------------------------------------------------------------------
# config file parsing
# ---------------------------------------------------------------------------


def parse_config_text(text: str) -> dict[str, str]:
    """Flat ``key.path = value`` lines; '#' starts a comment."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {lineno}: expected 'key = value'")
        key, value = line.split("=", 1)
        out[key.strip().lower()] = value.strip()
    return out


def _parse_method_token(token: str) -> MethodSpec:
    token = token.strip()
    if not token:
        raise UsageError("methods: empty method entry")
    name, _, tail = token.partition("@")
    name = name.strip().lower()
    if name not in METHOD_NAMES:
        raise UsageError(f"methods: unknown method {name!r} (pick from {METHOD_NAMES})")
    tail = tail.strip()
    if not tail:
        if name in REFINEMENT:
            return MethodSpec(name, policy="heuristic-point")
        return MethodSpec(name)
    if tail.lower() in POLICIES:
        return MethodSpec(name, policy=tail.lower())
    try:
        lam = float(tail)
    except ValueError:
        raise UsageError(
            f"methods: {name}@{tail} is neither a number nor a policy {POLICIES}"
        ) from None
    if lam <= 0:
        raise UsageError(f"methods: {name}@{tail}: shift must be positive")
    return MethodSpec(name, lam=lam)


def parse_methods(text: str) -> list[MethodSpec]:
    tokens = [t for t in text.replace(",", " ").split() if t]
    if not tokens:
        raise UsageError("methods: at least one method is required")
    return [_parse_method_token(t) for t in tokens]


def build_scenario(cfg: dict[str, str], args) -> ScenarioConfig:
    def pick(key, default=None):
        return cfg.get(key, default)

    kind = (pick("problem.kind") or "").lower()
    if kind not in FREDHOLM_NAMES + ("franke", "mtx"):
        raise UsageError(f"problem.kind: unknown problem {kind!r}")
    try:
        n = int(pick("problem.n", "0"))
    except ValueError:
        raise UsageError("problem.n: not an integer") from None
    if kind != "mtx" and n <= 0:
        raise UsageError("problem.n: a positive dimension is required")
    methods = parse_methods(pick("methods", ""))

    def fget(key, default):
        raw = pick(key)
        if raw is None:
            return default
        try:
            return float(raw)
        except ValueError:
            raise UsageError(f"{key}: not a number") from None

    def iget(key, default):
        raw = pick(key)
        if raw is None:
            return default
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"{key}: not an integer") from None

    max_iter_raw = pick("max_iter", "N")
    if str(max_iter_raw).strip().upper() == "N":
        max_iter = None
    else:
        try:
            max_iter = int(max_iter_raw)
        except ValueError:
            raise UsageError("max_iter: expected an integer or 'N'") from None

    sc = ScenarioConfig(
        problem_kind=kind,
        n=n,
        methods=methods,
        shape=fget("problem.shape", 1.0),
        path_a=pick("problem.path_a"),
        path_b=pick("problem.path_b"),
        noise_delta=fget("noise.delta", 0.0),
        noise_seed=iget("noise.seed", None),
        max_iter=max_iter,
        residual_tol=fget("residual_tol", None),
        seed=iget("seed", 0),
        output_dir=Path(pick("output_dir", str(_default_out()))),
    )

    # flags override the file
    if getattr(args, "lam", None) is not None:
        for m in sc.methods:
            if m.name in REFINEMENT:
                m.lam, m.policy = args.lam, None
    if getattr(args, "lambda_policy", None) is not None:
        for m in sc.methods:
            if m.name in REFINEMENT:
                m.lam, m.policy = None, args.lambda_policy
    if getattr(args, "noise_delta", None) is not None:
        sc.noise_delta = args.noise_delta
    if getattr(args, "seed", None) is not None:
        sc.seed = args.seed
    if getattr(args, "max_iter", None) is not None:
        sc.max_iter = args.max_iter
    if getattr(args, "out", None) is not None:
        sc.output_dir = Path(args.out)

    if sc.noise_delta < 0:
        raise UsageError("noise.delta: must be >= 0")
    return sc


# ---------------------------------------------------------------------------
# scenario execution
# ---------------------------------------------------------------------------


def make_problem(sc: ScenarioConfig) -> TestProblem:
    if sc.problem_kind == "franke":
        return generate_franke_rbf(sc.n, sc.shape)
    if sc.problem_kind == "mtx":
        if not sc.path_a:
            raise UsageError("problem.path_a: required for problem.kind = mtx")
        return load_matrix_market(sc.path_a, sc.path_b)
    return generate_fredholm(sc.problem_kind, sc.n)


class _LambdaResolver:
    """Resolves shift policies against one problem, caching the estimates."""

    def __init__(self, A: np.ndarray):
        self.A = A
        self._kappa: float | None = None
        self._extremes = None

    def kappa(self) -> float:
        if self._kappa is None:
            self._kappa = estimate_condition(self.A)
        return self._kappa

    def extremes(self):
        if self._extremes is None:
            if not is_symmetric(self.A):
                raise UsageError("lambda policy 'star' requires a symmetric problem")
            F = lu_factor(self.A)
            self._extremes = extreme_eigs_spd(
                lambda v: self.A @ v,
                lambda v: solve_factored(F, v),
                self.A.shape[0],
            )
        return self._extremes

    def resolve(self, spec: MethodSpec) -> float | None:
        if spec.name not in REFINEMENT:
            return None
        if spec.lam is not None:
            return spec.lam
        policy = spec.policy or "heuristic-point"
        if policy == "star":
            return lambda_star(self.extremes())
        h = lambda_heuristic(max(self.kappa(), 1.0))
        if policy == "heuristic-point":
            return h.point
        if policy == "heuristic-range-low":
            return h.stable_range[0]
        return h.stable_range[1]


def run_method(spec: MethodSpec, problem: TestProblem, b_obs: np.ndarray,
               lam: float | None, max_iter: int | None,
               residual_tol: float | None) -> SolveReport:
    A, x_true = problem.A, problem.x_true
    if spec.name == "ra":
        return ra_solve(A, b_obs, lam, max_iter=max_iter,
                        residual_tol=residual_tol, x_true=x_true)
    if spec.name == "riley":
        return riley_solve(A, b_obs, lam, max_iter=max_iter, x_true=x_true)
    if spec.name == "rat":
        H = second_difference_matrix(A.shape[0])
        return rat_solve(A, b_obs, H, lam, max_iter=max_iter, x_true=x_true)
    solver = {"cg": cg_solve, "gmres": gmres_solve, "cgls": cgls_solve}[spec.name]
    return solver(A, b_obs, max_iter=max_iter, residual_tol=residual_tol,
                  x_true=x_true)


def write_history_csv(path: Path, report: SolveReport) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["iter", "error_norm", "residual_norm"])
        for rec in report.history:
            err = "" if rec.error_norm is None else repr(rec.error_norm)
            writer.writerow([rec.m, err, repr(rec.residual_norm)])


def _csv_names(methods: list[MethodSpec]) -> list[str]:
    counts: dict[str, int] = {}
    for m in methods:
        counts[m.name] = counts.get(m.name, 0) + 1
    seen: dict[str, int] = {}
    names = []
    for m in methods:
        if counts[m.name] == 1:
            names.append(f"{m.name}.csv")
        else:
            seen[m.name] = seen.get(m.name, 0) + 1
            names.append(f"{m.name}_{seen[m.name]}.csv")
    return names


def run_scenario(sc: ScenarioConfig) -> dict:
    """Run every configured method, write per-method CSVs and summary.json.

    Solver failures are recorded in the summary and do not stop the other
    methods.
    """
    problem = make_problem(sc)
    b_obs = problem.b
    if sc.noise_delta > 0:
        seed = sc.noise_seed if sc.noise_seed is not None else sc.seed
        b_obs = add_noise(problem.b, NoiseSpec(sc.noise_delta, seed))
    resolver = _LambdaResolver(problem.A)
    sc.output_dir.mkdir(parents=True, exist_ok=True)

    summary: dict = {
        "problem": {"kind": problem.name, "n": problem.A.shape[0], **problem.params},
        "noise": None if sc.noise_delta == 0 else {
            "delta": sc.noise_delta,
            "seed": sc.noise_seed if sc.noise_seed is not None else sc.seed,
        },
        "seed": sc.seed,
        "methods": {},
    }
    any_failed = False
    for spec, csv_name in zip(sc.methods, _csv_names(sc.methods)):
        key = spec.label
        if key in summary["methods"]:
            key = f"{spec.label}#{csv_name.removesuffix('.csv')}"
        entry: dict = {"label": spec.label}
        try:
            lam = resolver.resolve(spec)
            t0 = time.perf_counter()
            report = run_method(spec, problem, b_obs, lam, sc.max_iter,
                                sc.residual_tol)
            wall_ms = (time.perf_counter() - t0) * 1000.0
        except (RakitError, UsageError, ValueError) as exc:
            entry.update(status="failed", error=str(exc))
            any_failed = True
        else:
            write_history_csv(sc.output_dir / csv_name, report)
            entry.update(
                status="ok",
                lambda_used=lam,
                err_min=report.err_min,
                res_at_min=report.res_at_min,
                nit=report.nit,
                stopped_reason=report.stopped_reason,
                wall_time_ms=wall_ms,
                csv=csv_name,
            )
        summary["methods"][key] = entry
    summary["failed"] = any_failed
    with open(sc.output_dir / "summary.json", "w", encoding="ascii") as fh:
        json.dump(summary, fh, indent=2)
        fh.write("\n")
    return summary


# ---------------------------------------------------------------------------
# table reproduction
# ---------------------------------------------------------------------------

_TABLE_HEADER = [
    "table", "problem", "n", "method", "lambda", "status",
    "ref_err", "ref_res", "ref_nit", "ref_err_2", "ref_nit_2",
    "meas_err", "meas_res", "meas_nit", "tol_err", "flag",
]


def _fmt(x) -> str:
    return "" if x is None else repr(float(x)) if isinstance(x, float) else str(x)


def reproduce_table(table_id: int, out_dir: Path, seed: int = 1) -> Path:
    """Rerun the scenarios behind one bundled comparison table and emit a CSV
    of reference vs measured values with a pass/fail flag per row."""
    if table_id not in (1, 2, 3):
        raise UsageError("table id must be 1, 2 or 3")
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"table{table_id}.csv"
    rows: list[list] = []
    if table_id in (1, 2):
        data = reference.TABLE1 if table_id == 1 else reference.TABLE2
        for prob_name, spec in data.items():
            problem = generate_fredholm(prob_name, spec["n"])
            for meth, info in spec["rows"].items():
                lam = info["lam"]
                report = run_method(MethodSpec(meth, lam=lam), problem,
                                    problem.b, lam, None, None)
                ref_err, ref_res, ref_nit = info["ref"]
                tol = info.get("tol_err") or 10.0 * ref_err
                max_nit = info.get("max_nit")
                meas = report.err_min
                nit_ok = max_nit is None or _first_m_below(report, tol) <= max_nit
                flag = "pass" if (meas is not None and meas <= tol and nit_ok) else "fail"
                rows.append([table_id, prob_name, spec["n"], meth, _fmt(lam), "ok",
                             _fmt(ref_err), _fmt(ref_res), ref_nit, "", "",
                             _fmt(meas), _fmt(report.res_at_min), report.nit,
                             _fmt(tol), flag])
            for meth, ref in spec["not_implemented"].items():
                rows.append([table_id, prob_name, spec["n"], meth, "",
                             "not-implemented", _fmt(ref[0]), _fmt(ref[1]), ref[2],
                             "", "", "", "", "", "", ""])
    else:
        for prob_name, spec in reference.TABLE3.items():
            problem = generate_fredholm(prob_name, spec["n"])
            b_obs = add_noise(problem.b, NoiseSpec(reference.TABLE3_DELTA, seed))
            H = second_difference_matrix(spec["n"])
            for lam in reference.TABLE3_LAMBDAS:
                (e1, n1), (e2, n2) = spec["rat"][lam]
                report = rat_solve(problem.A, b_obs, H, lam, max_iter=40,
                                   x_true=problem.x_true)
                tol = spec["rat_tol"].get(lam, 3.0 * max(e1, e2))
                meas = report.err_min
                flag = "pass" if (meas is not None and meas <= tol) else "fail"
                rows.append([table_id, prob_name, spec["n"], "rat", _fmt(lam), "ok",
                             _fmt(e1), "", n1, _fmt(e2), n2,
                             _fmt(meas), _fmt(report.res_at_min), report.nit,
                             _fmt(tol), flag])
            for meth, info in spec["rows"].items():
                (e1, n1), (e2, n2) = info["ref"]
                report = run_method(MethodSpec(meth), problem, b_obs, None,
                                    None, None)
                tol = 10.0 * max(e1, e2)
                meas = report.err_min
                flag = "pass" if (meas is not None and meas <= tol) else "fail"
                rows.append([table_id, prob_name, spec["n"], meth, "", "ok",
                             _fmt(e1), "", n1, _fmt(e2), n2,
                             _fmt(meas), _fmt(report.res_at_min), report.nit,
                             _fmt(tol), flag])
            for meth, ((e1, n1), (e2, n2)) in spec["not_implemented"].items():
                rows.append([table_id, prob_name, spec["n"], meth, "",
                             "not-implemented", _fmt(e1), "", n1, _fmt(e2), n2,
                             "", "", "", "", ""])
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(_TABLE_HEADER)
        writer.writerows(rows)
    return path


def _first_m_below(report: SolveReport, tol: float) -> int:
    for rec in report.history:
        val = rec.error_norm if rec.error_norm is not None else rec.residual_norm
        if val <= tol:
            return rec.m
    return 10**9


# ---------------------------------------------------------------------------
# lambda sweep
# ---------------------------------------------------------------------------


def sweep_lambda(sc: ScenarioConfig, method: MethodSpec,
                 lambdas: list[float]) -> dict:
    """Run one method for every shift in ``lambdas``; emit per-shift history
    columns and the minimum-error-vs-shift curve. Per-shift failures are
    recorded and the sweep continues."""
    if not lambdas:
        raise UsageError("sweep needs at least one lambda")
    problem = make_problem(sc)
    b_obs = problem.b
    if sc.noise_delta > 0:
        seed = sc.noise_seed if sc.noise_seed is not None else sc.seed
        b_obs = add_noise(problem.b, NoiseSpec(sc.noise_delta, seed))
    sc.output_dir.mkdir(parents=True, exist_ok=True)

    reports: dict[float, SolveReport | str] = {}
    for lam in lambdas:
        try:
            reports[lam] = run_method(method, problem, b_obs, lam,
                                      sc.max_iter, sc.residual_tol)
        except (RakitError, ValueError) as exc:
            reports[lam] = f"failed: {exc}"

    hist_path = sc.output_dir / "sweep_histories.csv"
    with open(hist_path, "w", encoding="ascii", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        header = ["iter"]
        for lam in lambdas:
            header += [f"error_norm@{lam:g}", f"residual_norm@{lam:g}"]
        writer.writerow(header)
        depth = max((len(r.history) for r in reports.values()
                     if isinstance(r, SolveReport)), default=0)
        for i in range(depth):
            row: list = [i + 1]
            for lam in lambdas:
                rep = reports[lam]
                if isinstance(rep, SolveReport) and i < len(rep.history):
                    rec = rep.history[i]
                    row.append("" if rec.error_norm is None else repr(rec.error_norm))
                    row.append(repr(rec.residual_norm))
                else:
                    row += ["", ""]
            writer.writerow(row)

    min_path = sc.output_dir / "sweep_min_error.csv"
    with open(min_path, "w", encoding="ascii", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["lambda", "status", "err_min", "res_at_min", "nit"])
        for lam in lambdas:
            rep = reports[lam]
            if isinstance(rep, SolveReport):
                err = "" if rep.err_min is None else repr(rep.err_min)
                res = "" if rep.res_at_min is None else repr(rep.res_at_min)
                writer.writerow([repr(lam), "ok", err, res, rep.nit])
            else:
                writer.writerow([repr(lam), rep, "", "", ""])
    return {"histories": str(hist_path), "minima": str(min_path),
            "failed": any(not isinstance(r, SolveReport) for r in reports.values())}


# ---------------------------------------------------------------------------
# problem export
# ---------------------------------------------------------------------------


def export_problem(sc: ScenarioConfig, export_dir: Path) -> list[Path]:
    problem = make_problem(sc)
    b = problem.b
    if sc.noise_delta > 0:
        seed = sc.noise_seed if sc.noise_seed is not None else sc.seed
        b = add_noise(b, NoiseSpec(sc.noise_delta, seed))
    export_dir.mkdir(parents=True, exist_ok=True)
    written = []
    pairs = [("A.mtx", problem.A), ("b.mtx", b)]
    if problem.x_true is not None:
        pairs.append(("x_true.mtx", problem.x_true))
    for fname, arr in pairs:
        path = export_dir / fname
        write_matrix_market(path, arr, comment=f" {problem.name} n={problem.A.shape[0]}")
        written.append(path)
    return written


# ---------------------------------------------------------------------------
# argument parsing / entry point
# ---------------------------------------------------------------------------


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="override the shift of every refinement method")
    p.add_argument("--lambda-policy", choices=POLICIES, default=None,
                   help="override the shift policy of every refinement method")
    p.add_argument("--noise-delta", type=float, default=None,
                   help="relative noise level applied to the right-hand side")
    p.add_argument("--seed", type=int, default=None, help="experiment seed")
    p.add_argument("--max-iter", type=int, default=None)
    p.add_argument("--out", type=str, default=None, help="output directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rakit",
        description="Experiment runner for shift-and-invert rational Arnoldi "
                    "refinement solvers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a scenario config file")
    p_run.add_argument("config", type=str)
    _add_common_flags(p_run)

    p_table = sub.add_parser("table", help="rerun a bundled comparison table")
    p_table.add_argument("table_id", type=int, choices=(1, 2, 3))
    p_table.add_argument("--seed", type=int, default=1)
    p_table.add_argument("--out", type=str, default=None)

    p_sweep = sub.add_parser("sweep", help="sweep one method across shifts")
    p_sweep.add_argument("--problem", required=True,
                         choices=FREDHOLM_NAMES + ("franke",))
    p_sweep.add_argument("--n", type=int, required=True)
    p_sweep.add_argument("--shape", type=float, default=1.0)
    p_sweep.add_argument("--method", required=True, choices=METHOD_NAMES)
    p_sweep.add_argument("--lambdas", required=True,
                         help="comma-separated list of shifts")
    p_sweep.add_argument("--noise-delta", type=float, default=None)
    p_sweep.add_argument("--seed", type=int, default=None)
    p_sweep.add_argument("--max-iter", type=int, default=None)
    p_sweep.add_argument("--out", type=str, default=None)

    p_gen = sub.add_parser("gen", help="generate and export a test problem")
    p_gen.add_argument("problem", choices=FREDHOLM_NAMES + ("franke",))
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--shape", type=float, default=1.0)
    p_gen.add_argument("--export", type=str, required=True)
    p_gen.add_argument("--noise-delta", type=float, default=None)
    p_gen.add_argument("--seed", type=int, default=None)
    return parser


def _scenario_from_args(args, methods: list[MethodSpec]) -> ScenarioConfig:
    return ScenarioConfig(
        problem_kind=args.problem,
        n=args.n,
        methods=methods,
        shape=getattr(args, "shape", 1.0),
        noise_delta=args.noise_delta if getattr(args, "noise_delta", None) else 0.0,
        noise_seed=None,
        max_iter=getattr(args, "max_iter", None),
        seed=args.seed if getattr(args, "seed", None) is not None else 0,
        output_dir=Path(args.out) if getattr(args, "out", None) else _default_out(),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            try:
                text = Path(args.config).read_text(encoding="utf-8")
            except OSError as exc:
                raise UsageError(f"cannot read config: {exc}") from None
            sc = build_scenario(parse_config_text(text), args)
            summary = run_scenario(sc)
            print(json.dumps(summary, indent=2))
            return 1 if summary["failed"] else 0
        if args.command == "table":
            out = Path(args.out) if args.out else _default_out()
            path = reproduce_table(args.table_id, out, seed=args.seed)
            print(path)
            return 0
        if args.command == "sweep":
            try:
                lambdas = [float(t) for t in args.lambdas.split(",") if t.strip()]
            except ValueError:
                raise UsageError("--lambdas: expected comma-separated numbers") from None
            sc = _scenario_from_args(args, [MethodSpec(args.method)])
            result = sweep_lambda(sc, MethodSpec(args.method), lambdas)
            print(json.dumps(result, indent=2))
            return 1 if result["failed"] else 0
        if args.command == "gen":
            sc = _scenario_from_args(args, [MethodSpec("ra")])
            for path in export_problem(sc, Path(args.export)):
                print(path)
            return 0
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except RakitError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
