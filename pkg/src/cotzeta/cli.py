"""Command-line front end.

Exit status: 0 when the verdict passes (or is consistent, for the
conjecture scan), 1 when an inequality or identity fails, 2 on usage,
domain or I/O errors.  A leading ``verify`` word is accepted and ignored,
so ``cotzeta verify theorem`` and ``cotzeta theorem`` are the same.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from . import inequality, replicative, special
from .grid import GridSpec, Refinement
from .numerics import (
    ConvergenceError,
    DomainError,
    bernoulli_poly,
    frac_part,
)
from .reports import Table, emit_report

COMMANDS = ("eval", "identities", "theorem", "certify", "conjecture", "replicative", "fourier")
DEFAULT_SEED = 20_260_101

# default grids per command: (n_points, epsilon, refinement)
GRID_DEFAULTS = {
    "theorem": (10_000, 1e-4, "geometric_endpoints"),
    "conjecture": (10_000, 1e-6, "geometric_endpoints"),
    "replicative": (101, 1e-2, "uniform"),
}
TOL_DEFAULTS = {
    "eval": 1.0,
    "identities": None,
    "theorem": 1e-10,
    "certify": 1e-10,
    "conjecture": 1e-10,
    "replicative": 1e-10,
    "fourier": 1e-8,
}
IDENTITY_TOLS = {"reflection": 1e-11, "functional_equation": 1e-10, "cot_identity": 1e-8}


@dataclass
class RunConfig:
    command: str
    grid: GridSpec | None = None
    tolerance: float | None = None
    output_format: str = "json"
    output_path: str | None = None
    seed: int = DEFAULT_SEED
    options: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        if self.tolerance is not None and not self.tolerance > 0:
            raise DomainError("tolerance must be positive")
        if self.output_format not in ("json", "csv"):
            raise DomainError(f"unknown output format {self.output_format!r}")

    def echo(self) -> dict[str, Any]:
        out = {
            "command": self.command,
            "grid": self.grid.to_dict() if self.grid else None,
            "tolerance": self.tolerance,
            "output_format": self.output_format,
            "seed": self.seed,
        }
        out.update(self.options)
        return out


# -- commands ----------------------------------------------------------------


def _eval(cfg: RunConfig):
    o = cfg.options
    fn, x = o["fn"], o["x"]
    route = o.get("route") or "auto"
    value_err: tuple[Any, float]
    if fn == "zeta":
        b = special.zeta(x, route)
    elif fn == "zeta_regularized":
        b = special.zeta_regularized(x, "integral" if route == "auto" else route)
    elif fn == "digamma":
        b = special.digamma(x)
    elif fn == "log_gamma":
        b = special.log_gamma(x)
    elif fn == "gamma":
        b = special.gamma(x)
    elif fn == "cot_pi":
        b = special.cot_pi_bounded(x)
    elif fn == "polylog":
        b = special.polylog_unit_circle(o.get("s", 2.0), x)
    elif fn == "integral_sum":
        b = special.integral_sum(x)
    elif fn == "theorem_margin":
        b = inequality.theorem_margin(x)
    elif fn == "bernoulli":
        b = None
        value_err = (bernoulli_poly(int(o.get("n", 1)), x), 0.0)
    elif fn == "integral_term":
        b = None
        value_err = (special.integral_term(int(o.get("n", 1)), x), 0.0)
    elif fn == "frac_part":
        b = None
        value_err = (frac_part(x), 0.0)
    else:
        raise DomainError(f"unknown function {fn!r}")
    if b is not None:
        value_err = (b.value, b.err)
    v, e = value_err
    if isinstance(v, complex):
        cols = ["fn", "x", "re", "im", "err"]
        row = [fn, x, v.real, v.imag, e]
    else:
        cols = ["fn", "x", "value", "err"]
        row = [fn, x, v, e]
    return Table(cols, [row], "pass", {"fn": fn}), True


def _identities(cfg: RunConfig):
    n = cfg.options.get("points", 50)
    xs = list(np.linspace(0.05, 0.95, n))
    extra = cfg.options.get("random_points", 0)
    if extra:
        xs += list(np.random.default_rng(cfg.seed).uniform(0.05, 0.95, extra))
    tols = {k: cfg.tolerance or v for k, v in IDENTITY_TOLS.items()}
    items = []
    for s in xs:
        s = float(s)
        items.append(("reflection", special.check_reflection(s), tols["reflection"]))
        items.append(("functional_equation", special.check_functional_equation(s), tols["functional_equation"]))
        if abs(s - 0.5) >= 0.05:
            items.append(("cot_identity", special.check_cot_identity(s), tols["cot_identity"]))
    ok = all(r.relative <= tol for _, r, tol in items)
    return items, ok


def _theorem(cfg: RunConfig):
    rep = inequality.verify_theorem1(cfg.grid)
    ok = rep.verdict and rep.eval_err_max <= cfg.tolerance
    return rep, ok


def _certify(cfg: RunConfig):
    rep = inequality.certify_theorem1(cfg.options.get("eps", 1e-3), cfg.options.get("subintervals", 1000))
    return rep, rep.verdict


def _conjecture(cfg: RunConfig):
    scan = inequality.scan_conjecture(cfg.grid, cfg.options.get("endpoint_tol", 1e-3))
    err = max(scan.lower.eval_err_max, scan.upper.eval_err_max)
    return scan, scan.consistent and err <= cfg.tolerance


def _candidate(o: dict) -> replicative.KubertCandidate:
    name = o.get("fn", "cot")
    if name == "polylog":
        cand = replicative.polylog_candidate(o.get("s", 2.0))
    elif name == "theorem_margin":
        cand = replicative.KubertCandidate("theorem_margin", inequality.theorem_margin_extended, 1.0)
    elif name in replicative.CATALOG:
        cand = replicative.CATALOG[name]
    else:
        raise DomainError(f"unknown replicative candidate {name!r}")
    if o.get("weight") is not None:
        cand = replicative.KubertCandidate(cand.name, cand.eval, o["weight"], cand.singular_at_endpoints)
    return cand


def _replicative(cfg: RunConfig):
    ps = cfg.options.get("p", [2, 3, 5, 7])
    rep = replicative.replicative_test(_candidate(cfg.options), ps, cfg.grid, cfg.tolerance)
    return rep, rep.verdict


def _fourier_function(o: dict):
    name = o.get("fn", "theorem_margin")
    if name == "theorem_margin":
        return inequality.theorem_margin_extended
    if name == "constant":
        return lambda x: 1.0
    if name == "abel_cot":
        return replicative.abel_kernel(o.get("r", 0.9))
    raise DomainError(f"unknown Fourier target {name!r}")


def _fourier(cfg: RunConfig):
    o = cfg.options
    rep = replicative.fourier_coefficients(
        _fourier_function(o), o.get("n", 32), o.get("quad", 4096), name=o.get("fn", "theorem_margin"), max_discrepancy=1e-4
    )
    conj = float(np.max(rep.conjugate_symmetry_defect()))
    real_valued = o.get("fn", "theorem_margin") != "abel_cot"
    ok = rep.discrepancies[0] <= cfg.tolerance and (conj <= cfg.tolerance or not real_valued)
    return rep, ok


HANDLERS = {
    "eval": _eval,
    "identities": _identities,
    "theorem": _theorem,
    "certify": _certify,
    "conjecture": _conjecture,
    "replicative": _replicative,
    "fourier": _fourier,
}


def run(config: RunConfig) -> int:
    """Execute one command, write its report, return the exit status."""
    if config.tolerance is None:
        config.tolerance = TOL_DEFAULTS[config.command]
    try:
        report, ok = HANDLERS[config.command](config)
    except (DomainError, ConvergenceError, ZeroDivisionError) as exc:
        print(f"cotzeta {config.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    verdict = None
    if config.command == "fourier":
        verdict = "pass" if ok else "fail"
    try:
        emit_report(report, config.output_format, config.output_path, config.command, config.echo(), verdict)
    except OSError as exc:
        print(f"cotzeta: cannot write report: {exc}", file=sys.stderr)
        return 2
    return 0 if ok else 1


# -- argument parsing --------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError("multipliers must be positive integers")
    return vals


def _add_common(p: argparse.ArgumentParser, grid: bool = False) -> None:
    p.add_argument("--format", choices=["json", "csv"], default="json", help="report format")
    p.add_argument("--output", default=None, help="report path (default: stdout)")
    p.add_argument("--tol", type=float, default=None, help="tolerance (meaning depends on the command)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized sweeps")
    if grid:
        p.add_argument("--points", type=int, default=None, help="number of grid points")
        p.add_argument("--eps", type=float, default=None, help="endpoint exclusion of the grid")
        p.add_argument("--refine", choices=[r.value for r in Refinement], default=None, help="grid refinement")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cotzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one function at one point")
    p.add_argument("--fn", required=True, choices=[
        "zeta", "zeta_regularized", "digamma", "log_gamma", "gamma", "cot_pi", "polylog",
        "integral_sum", "integral_term", "theorem_margin", "bernoulli", "frac_part",
    ])
    p.add_argument("--x", type=float, required=True, help="argument (theta for polylog)")
    p.add_argument("--route", choices=["auto", "eta", "integral"], default="auto")
    p.add_argument("--n", type=int, default=1, help="order for bernoulli, index for integral_term")
    p.add_argument("--s", type=float, default=2.0, help="polylog order")
    _add_common(p)

    p = sub.add_parser("identities", help="reflection, functional equation and cot identity residuals")
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--random-points", type=int, default=0, help="extra seeded random points")
    _add_common(p)

    p = sub.add_parser("theorem", help="margins of pi cot(pi x) < zeta(x) - psi(x)")
    _add_common(p, grid=True)

    p = sub.add_parser("certify", help="subinterval certificate of the theorem")
    p.add_argument("--eps", type=float, default=1e-3)
    p.add_argument("--subintervals", type=int, default=1000)
    _add_common(p)

    p = sub.add_parser("conjecture", help="scan the two-sided strengthening (evidence only)")
    p.add_argument("--endpoint-tol", type=float, default=1e-3)
    _add_common(p, grid=True)

    p = sub.add_parser("replicative", help="residuals of the replicative functional equation")
    p.add_argument("--fn", default="cot", choices=sorted(replicative.CATALOG) + ["polylog", "theorem_margin"])
    p.add_argument("--weight", type=float, default=None, help="override the catalog weight")
    p.add_argument("--p", type=_int_list, default=[2, 3, 5, 7], help="comma-separated multipliers")
    p.add_argument("--s", type=float, default=2.0, help="polylog order")
    _add_common(p, grid=True)

    p = sub.add_parser("fourier", help="Fourier coefficients by periodic trapezoid quadrature")
    p.add_argument("--fn", default="theorem_margin", choices=["theorem_margin", "constant", "abel_cot"])
    p.add_argument("--n", type=int, default=32)
    p.add_argument("--quad", type=int, default=4096)
    p.add_argument("--r", type=float, default=0.9, help="Abel radius for abel_cot")
    _add_common(p)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    grid = None
    if ns.command in GRID_DEFAULTS:
        n, eps, ref = GRID_DEFAULTS[ns.command]
        grid = GridSpec(
            ns.points if ns.points is not None else n,
            ns.eps if ns.eps is not None else eps,
            ns.refine or ref,
        )
    skip = {"command", "format", "output", "tol", "seed", "points", "eps", "refine"} if grid else {"command", "format", "output", "tol", "seed"}
    options = {k: v for k, v in vars(ns).items() if k not in skip}
    return RunConfig(ns.command, grid, ns.tol, ns.format, ns.output, ns.seed, options)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "verify":
        argv = argv[1:]
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(ns)
    except DomainError as exc:
        print(f"cotzeta: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
