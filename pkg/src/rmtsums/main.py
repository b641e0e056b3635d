"""
Command-line front-end.

Every subcommand evaluates one quantity over a parameter grid and emits a
table, either CSV (header row, 17 significant digits) or a JSON document with
``params``, ``rows`` and ``meta`` keys. Output goes to stdout unless ``--out``
is given.

``--config PATH`` reads a flat JSON object whose keys are option names
(``{"s": 1, "h": [0.5, 1.0], "output": "json"}``); explicit flags override it.

Exit codes: 0 on success, 1 when ``verify`` finds a failing check, one
distinct code per :mod:`rmtsums.errors` class otherwise (a JSON error record
is written to stderr).
"""

import argparse
import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable, Literal, Sequence, TypeVar

from rmtsums import __version__
from rmtsums.bessel import DEFAULT_N_LIST, BesselParams, h_nu_profile, psi_N, xi_N
from rmtsums.charfn import phi_exact, phi_finite_N
from rmtsums.config import REPORTS_DIR
from rmtsums.distribution import abs_moment, conjecture_rhs, moment_R, rho
from rmtsums.ensembles import (
    MIN_SAMPLES,
    EnsembleSpec,
    Estimate,
    empirical_abs_moment,
    empirical_charfn,
    empirical_inverse_moment,
    empirical_laplace,
    export_batches,
    sample,
)
from rmtsums.errors import DomainError, RmtSumsError, exit_code_for
from rmtsums.oracles import density_by_inversion
from rmtsums.painleve import residual_report
from rmtsums.persistence.json_io import dumps_json, load_json
from rmtsums.persistence.table_io import save_table_csv, table_payload, table_to_csv_text
from rmtsums.persistence.table_io import table_to_json_text
from rmtsums.verification import SUITES, generate_verification_report, run_suite, save_report

logger = logging.getLogger(__name__)

OutputFormat = Literal["csv", "json"]

COMMANDS: tuple[str, ...] = (
    "moment",
    "density",
    "charfn",
    "residual",
    "bessel",
    "simulate",
    "verify",
    "conjecture",
)

# Options that only steer the run and never reach a command's parameter record
_RUN_OPTIONS = frozenset(
    {"command", "output", "out", "seed", "workers", "config", "verbose", "log_level"}
)

# Options each command cannot run without (argparse `required` would ignore --config)
_REQUIRED: dict[str, tuple[str, ...]] = {
    "moment": ("s", "h"),
    "density": ("s", "x"),
    "charfn": ("s", "t"),
    "residual": ("equation",),
    "bessel": ("nu", "t"),
    "simulate": ("ensemble", "N", "stat", "t"),
    "verify": (),
    "conjecture": ("s", "h", "x"),
}

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class RunConfig:
    """
    Validated parameters of one command invocation.

    Attributes
    ----------
    command : str
        Subcommand name.
    output : {"csv", "json"}
        Table format.
    out : Path or None
        Output file; stdout when None.
    seed : int
        Seed for sampling commands, in [0, 2^64).
    workers : int
        Threads used across grid points (and sample shards).
    params : dict
        Command-specific options as parsed.
    """

    command: str
    output: OutputFormat = "csv"
    out: Path | None = None
    seed: int = 0
    workers: int = 1
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate run options and numeric parameters before dispatch."""
        if self.command not in COMMANDS:
            raise ValueError(f"command must be one of {COMMANDS}, got {self.command!r}")
        if self.output not in ("csv", "json"):
            raise ValueError(f"output must be 'csv' or 'json', got {self.output!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must lie in [0, 2^64), got {self.seed}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")
        for key, value in self.params.items():
            values = value if isinstance(value, (list, tuple)) else [value]
            if isinstance(value, (list, tuple)) and not value:
                raise ValueError(f"{key} grid cannot be empty")
            for v in values:
                if isinstance(v, float) and math.isnan(v):
                    raise DomainError(f"{key} must be a number, got {v}")
                if v is not None and not isinstance(v, (str, bool)):
                    self._check_range(key, v)

    def _check_range(self, key: str, v: float) -> None:
        """Reject values outside the domain of every command that takes ``key``."""
        if key == "s" and not v > -0.5:
            raise DomainError(f"s must exceed -1/2, got {v}")
        if key == "nu" and not v > -1.0:
            raise DomainError(f"nu must exceed -1, got {v}")
        if key in ("N", "finite_N", "n_list") and v < 1:
            raise DomainError(f"{key} must be at least 1, got {v}")
        if key == "samples" and v < MIN_SAMPLES:
            raise DomainError(f"samples must be at least {MIN_SAMPLES}, got {v}")
        if key == "prime_cutoff" and v < 2:
            raise DomainError(f"prime_cutoff must be at least 2, got {v}")
        if key == "t" and self.command in ("residual", "bessel") and not v > 0.0:
            raise DomainError(f"t grid must be positive for {self.command}, got {v}")
        if key == "x" and self.command == "conjecture" and not v > math.e:
            raise DomainError(f"x must exceed e for conjecture, got {v}")

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        """Build from parsed arguments."""
        params = {k: v for k, v in vars(args).items() if k not in _RUN_OPTIONS}
        return cls(
            command=args.command,
            output=args.output,
            out=Path(args.out) if args.out else None,
            seed=args.seed,
            workers=args.workers,
            params=params,
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


@dataclass(frozen=True)
class CommandOutput:
    """Rows of one command plus its exit code."""

    rows: list[dict[str, Any]]
    exit_code: int = 0


def _map_grid(func: Callable[[T], R], grid: Sequence[T], workers: int) -> list[R]:
    """Evaluate ``func`` over ``grid``; results keep grid order."""
    if workers <= 1 or len(grid) < 2:
        return [func(point) for point in grid]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, grid))


def _integer_s(s: float) -> int:
    if not float(s).is_integer() or s < 0:
        raise DomainError(f"s must be a nonnegative integer here, got {s}")
    return int(s)


def cmd_moment(cfg: RunConfig) -> CommandOutput:
    """R(s, h) and E|X(s)|^{2h} over an h-grid."""
    s = _integer_s(cfg.params["s"])

    def row(h: float) -> dict[str, Any]:
        r = moment_R(s, h)
        return {
            "s": s,
            "h": h,
            "R": complex(r.value).real,
            "abs_moment": complex(abs_moment(s, h).value).real,
            "method": r.method,
            "err_est": r.err_est,
        }

    return CommandOutput(_map_grid(row, cfg.params["h"], cfg.workers))


def cmd_density(cfg: RunConfig) -> CommandOutput:
    """rho^(s)(x) over an x-grid, optionally beside the Fourier-inversion oracle."""
    s = _integer_s(cfg.params["s"])
    oracle = bool(cfg.params.get("oracle"))

    def row(x: float) -> dict[str, Any]:
        d = rho(s, x)
        out: dict[str, Any] = {
            "s": s,
            "x": x,
            "rho": d.rho,
            "method": d.method,
            "err_est": d.err_est,
        }
        if oracle:
            out["rho_inversion"] = density_by_inversion(s, x)
        return out

    return CommandOutput(_map_grid(row, cfg.params["x"], cfg.workers))


def cmd_charfn(cfg: RunConfig) -> CommandOutput:
    """phi^(s)(t), or phi_N^(s)(t) with ``--finite-N``, over a t-grid."""
    s = cfg.params["s"]
    n = cfg.params.get("finite_N")

    def row(t: float) -> dict[str, Any]:
        value = phi_finite_N(s, n, t) if n else phi_exact(_integer_s(s), t)
        return {
            "s": s,
            "N": n if n else "inf",
            "t": t,
            "phi": value.value,
            "method": value.method,
            "err_est": value.err_est,
        }

    return CommandOutput(_map_grid(row, cfg.params["t"], cfg.workers))


def _residual_params(p: dict[str, Any]) -> dict[str, Any]:
    equation = p["equation"]
    if equation == "sigma_p3_inf":
        keys = {"s": p.get("s")}
    elif equation == "p5_finite_N":
        keys = {"s": p.get("s"), "n": p.get("N"), "route": p.get("route")}
    elif equation == "hankel_sigma":
        keys = {"n": p.get("N"), "alpha": p.get("alpha"), "lam": p.get("lam")}
    elif equation == "bessel_finite_N":
        keys = {"nu": p.get("nu"), "n": p.get("N")}
    else:
        keys = {"nu": p.get("nu"), "n_list": p.get("n_list") or list(DEFAULT_N_LIST)}
    missing = sorted(k for k, v in keys.items() if v is None)
    if missing:
        raise DomainError(f"{equation} needs {', '.join(missing)}")
    return keys


def cmd_residual(cfg: RunConfig) -> CommandOutput:
    """Residual table of one sigma-form equation."""
    equation = cfg.params["equation"]
    report = residual_report(equation, _residual_params(cfg.params), grid=cfg.params.get("t"))
    rows = [
        {"equation": equation, **record}
        for record in report.to_frame().to_dict(orient="records")
    ]
    return CommandOutput(rows)


def cmd_bessel(cfg: RunConfig) -> CommandOutput:
    """
    Bessel-side values over a t-grid.

    With a single N the finite-size psi_N and xi_N are reported; with two or
    more the limiting h^(nu) is extrapolated in 1/N.
    """
    nu = cfg.params["nu"]
    n_list = sorted(cfg.params.get("N") or DEFAULT_N_LIST)

    if len(n_list) == 1:
        n = n_list[0]

        def finite_row(t: float) -> dict[str, Any]:
            p = BesselParams(nu=nu, n=n, t=t)
            xi = xi_N(p)
            return {
                "nu": nu,
                "N": n,
                "t": t,
                "psi": psi_N(p).value,
                "xi": xi.tau,
                "dxi": xi.dtau,
            }

        return CommandOutput(_map_grid(finite_row, cfg.params["t"], cfg.workers))

    def limit_row(t: float) -> dict[str, Any]:
        est = h_nu_profile(nu, t, n_list)
        out: dict[str, Any] = {
            "nu": nu,
            "t": t,
            "h": est.h,
            "dh": est.dh,
            "err_est": est.err_est,
            "ols_intercept": est.ols_intercept,
            "ols_stderr": est.ols_stderr,
            "monotone": est.monotone,
        }
        for n, (xi, _, _) in zip(est.n_list, est.xi_by_n):
            out[f"xi_N{n}"] = xi
        return out

    return CommandOutput(_map_grid(limit_row, cfg.params["t"], cfg.workers))


_STATISTICS: dict[str, Callable[..., Estimate]] = {
    "charfn": empirical_charfn,
    "laplace": empirical_laplace,
    "abs_moment": empirical_abs_moment,
    "inverse_moment": empirical_inverse_moment,
}


def cmd_simulate(cfg: RunConfig) -> CommandOutput:
    """
    Monte Carlo estimates of one statistic over a grid of its argument.

    The argument is t for ``charfn``/``laplace``, h for ``abs_moment`` and k
    for ``inverse_moment``. One batch is drawn and reused for the whole grid.

    Hua-Pickrell batches with N >= 2 come from Metropolis chains and are only
    accepted when their Gelman-Rubin statistic is below 1.05; otherwise the
    command fails with :class:`~rmtsums.errors.DiagnosticsError`. Each row
    carries the statistic (NaN for exact samplers).
    """
    p = cfg.params
    kind = p["ensemble"]
    param = p.get("s") if kind == "hua_pickrell" else p.get("nu")
    if param is None:
        raise DomainError(f"{kind} needs {'s' if kind == 'hua_pickrell' else 'nu'}")
    spec = EnsembleSpec(
        kind=kind, param=param, n=p["N"], seed=cfg.seed, n_samples=p.get("samples") or 10_000
    )
    batch = sample(spec, workers=cfg.workers)
    if p.get("export"):
        target = Path(p["export"])
        export_batches(batch, target, fmt="parquet" if target.suffix == ".parquet" else "csv")

    statistic = _STATISTICS[p["stat"]]
    rows = []
    for arg in p["t"]:
        est = statistic(batch, arg)
        rows.append(
            {
                "ensemble": kind,
                "param": param,
                "N": spec.n,
                "stat": p["stat"],
                "arg": arg,
                "estimate": est.value,
                "stderr": est.stderr,
                "n": est.n,
                "diagnostic": est.diagnostic,
                "acceptance_rate": batch.acceptance_rate,
                "rhat": batch.rhat,
            }
        )
    return CommandOutput(rows)


def cmd_verify(cfg: RunConfig) -> CommandOutput:
    """Run acceptance suites; exit code 0 iff every selected check passes."""
    result = run_suite(cfg.params.get("suite") or None)
    report_dir = cfg.params.get("report_dir")
    if report_dir:
        save_report(generate_verification_report(result), Path(report_dir))
    rows = [r.to_dict() for r in result.results]
    return CommandOutput(rows, exit_code=0 if result.passed else 1)


def cmd_conjecture(cfg: RunConfig) -> CommandOutput:
    """Conjectured leading term a(s) R(s,h) (log x)^{s^2+2h} over an x-grid."""
    p = cfg.params
    s = _integer_s(p["s"])

    def row(x: float) -> dict[str, Any]:
        rhs = conjecture_rhs(s, p["h"], x, prime_cutoff=p["prime_cutoff"])
        return {"s": s, "h": p["h"], "x": x, "rhs": rhs}

    return CommandOutput(_map_grid(row, p["x"], cfg.workers))


_HANDLERS: dict[str, Callable[[RunConfig], CommandOutput]] = {
    "moment": cmd_moment,
    "density": cmd_density,
    "charfn": cmd_charfn,
    "residual": cmd_residual,
    "bessel": cmd_bessel,
    "simulate": cmd_simulate,
    "verify": cmd_verify,
    "conjecture": cmd_conjecture,
}


def _build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(
        prog="rmtsums",
        description="Sums of points of random matrix point processes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--output", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", default=None, help="Output file (default: stdout).")
    parser.add_argument("--config", default=None, help="JSON file of option defaults.")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1, help="Threads across grid points.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument(
        "--log-level", choices=("DEBUG", "INFO", "WARNING", "ERROR"), default=None
    )
    sub = parser.add_subparsers(dest="command", required=True)
    subs: dict[str, argparse.ArgumentParser] = {}

    p = subs["moment"] = sub.add_parser("moment", help="complex moments R(s,h)")
    p.add_argument("--s", type=int)
    p.add_argument("--h", type=float, nargs="+")

    p = subs["density"] = sub.add_parser("density", help="density of X(s)")
    p.add_argument("--s", type=int)
    p.add_argument("--x", type=float, nargs="+")
    p.add_argument("--oracle", action="store_true", help="Add the Fourier-inversion value.")

    p = subs["charfn"] = sub.add_parser("charfn", help="characteristic function")
    p.add_argument("--s", type=float)
    p.add_argument("--t", type=float, nargs="+")
    p.add_argument("--finite-N", dest="finite_N", type=int, default=None)

    p = subs["residual"] = sub.add_parser("residual", help="sigma-Painleve residuals")
    p.add_argument(
        "--equation",
        choices=("sigma_p3_inf", "p5_finite_N", "hankel_sigma", "bessel_inf", "bessel_finite_N"),
    )
    p.add_argument("--s", type=float)
    p.add_argument("--nu", type=float)
    p.add_argument("--N", type=int)
    p.add_argument("--n-list", dest="n_list", type=int, nargs="+")
    p.add_argument("--alpha", type=float)
    p.add_argument("--lam", type=float)
    p.add_argument("--route", choices=("hankel", "laguerre"), default="hankel")
    p.add_argument("--t", type=float, nargs="+", help="Grid (default: geometric 0.05..8).")

    p = subs["bessel"] = sub.add_parser("bessel", help="Bessel-side Laplace transforms")
    p.add_argument("--nu", type=float)
    p.add_argument("--N", type=int, nargs="+", help=f"Sizes (default: {DEFAULT_N_LIST}).")
    p.add_argument("--t", type=float, nargs="+")

    p = subs["simulate"] = sub.add_parser("simulate", help="Monte Carlo estimates")
    p.add_argument("--ensemble", choices=("hua_pickrell", "lue", "inverse_laguerre"))
    p.add_argument("--s", type=float)
    p.add_argument("--nu", type=float)
    p.add_argument("--N", type=int)
    p.add_argument("--stat", choices=tuple(_STATISTICS))
    p.add_argument("--t", type=float, nargs="+", help="Statistic argument (t, h or k).")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--export", default=None, help="Write the batch (.csv or .parquet).")

    p = subs["verify"] = sub.add_parser("verify", help="run acceptance suites")
    p.add_argument("--suite", action="append", choices=SUITES)
    p.add_argument(
        "--report-dir",
        dest="report_dir",
        nargs="?",
        const=str(REPORTS_DIR),
        default=None,
        help="Also write a Markdown report (default dir: output/reports).",
    )

    p = subs["conjecture"] = sub.add_parser("conjecture", help="conjectured asymptotics")
    p.add_argument("--s", type=int)
    p.add_argument("--h", type=float)
    p.add_argument("--x", type=float, nargs="+")
    p.add_argument("--prime-cutoff", dest="prime_cutoff", type=int, default=100_000)

    return parser, subs


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """
    Parse arguments, layering ``--config`` defaults under explicit flags.

    Raises
    ------
    SystemExit
        On argparse errors, unknown config keys or missing required options.
    """
    parser, subs = _build_parser()
    args = parser.parse_args(argv)

    if args.config:
        defaults = load_json(args.config)
        unknown = sorted(set(defaults) - set(vars(args)))
        if unknown:
            parser.error(f"unknown config keys: {', '.join(unknown)}")
        # Subparser values are copied over the parent namespace, so each key
        # goes only to the parser that owns it
        sub_dests = set(vars(subs[args.command].parse_args([])))
        parser.set_defaults(**{k: v for k, v in defaults.items() if k not in sub_dests})
        subs[args.command].set_defaults(**{k: v for k, v in defaults.items() if k in sub_dests})
        args = parser.parse_args(argv)

    missing = [k for k in _REQUIRED[args.command] if getattr(args, k) is None]
    if missing:
        subs[args.command].error(
            "missing required option(s): " + ", ".join(f"--{k}" for k in missing)
        )
    return args


def _configure_logging(args: argparse.Namespace) -> None:
    if args.log_level:
        level = getattr(logging, args.log_level)
    else:
        level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def _emit(cfg: RunConfig, rows: list[dict[str, Any]]) -> None:
    if cfg.output == "csv" and cfg.out:
        save_table_csv(rows, cfg.out)
        return
    if cfg.output == "csv":
        text = table_to_csv_text(rows)
    else:
        params = {**cfg.params, "seed": cfg.seed}
        meta = {"version": __version__, "command": cfg.command}
        text = table_to_json_text(table_payload(params, rows, meta)) + "\n"

    if cfg.out:
        cfg.out.parent.mkdir(parents=True, exist_ok=True)
        cfg.out.write_text(text, encoding="utf-8")
        logger.info("Saved %s table to %s", cfg.output, cfg.out)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Entry point of the ``rmtsums`` command.

    Returns
    -------
    int
        Process exit code.
    """
    args = parse_args(argv)
    _configure_logging(args)

    params = {k: v for k, v in vars(args).items() if k not in _RUN_OPTIONS}
    try:
        cfg = RunConfig.from_namespace(args)
        logger.info("Running %s with %s", cfg.command, params)
        result = _HANDLERS[cfg.command](cfg)
        _emit(cfg, result.rows)
    except (RmtSumsError, ValueError, ArithmeticError) as e:
        record = {"error": type(e).__name__, "message": str(e), "params": params}
        sys.stderr.write(dumps_json(record, indent=None) + "\n")
        logger.debug("Command failed", exc_info=True)
        return exit_code_for(e)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
