"""Command-line interface: ``qdiscord {point,sweep,esd,figure}``.

Exit codes: 0 success, 2 usage or validation error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .correlations import (
    concurrence_dephasing_werner,
    discord_bell_diagonal,
    published_concurrence_dephasing_werner,
    published_discord_dephasing_werner,
)
from .errors import DomainExceeded, QDiscordError
from .experiments import FIGURES, ChannelConfig, ConfigKind, StateFamily, esd_gamma, evaluate, evolve, sweep
from .states import to_bloch

EXIT_USAGE = 2
EXIT_IO = 3

FIELDS = ("alpha", "gamma", "concurrence", "discord", "mutual_info", "classical_corr", "theta_opt", "phi_opt")


def fmt(x: float) -> str:
    """At most 15 significant digits, locale-independent, no negative zero."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r}")
    if x == 0.0:
        return "0"
    return format(x, ".15g")


@dataclass(frozen=True)
class OutputRecord:
    alpha: float
    gamma: float
    concurrence: float
    discord: float
    mutual_info: float
    classical_corr: float
    theta_opt: float
    phi_opt: float

    @classmethod
    def from_report(cls, alpha, gamma, report) -> "OutputRecord":
        return cls(
            alpha=alpha,
            gamma=gamma,
            concurrence=report.concurrence,
            discord=report.discord,
            mutual_info=report.mutual_info,
            classical_corr=report.classical_corr,
            theta_opt=report.argmax_basis.theta,
            phi_opt=report.argmax_basis.phi,
        )

    def as_row(self) -> list[str]:
        return [fmt(getattr(self, f)) for f in FIELDS]

    def as_json(self) -> dict:
        return {f: float(fmt(getattr(self, f))) for f in FIELDS}


def records_to_csv(records, fields=FIELDS) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for rec in records:
        writer.writerow([fmt(getattr(rec, f)) for f in fields])
    return buf.getvalue()


def records_to_json(records) -> str:
    return json.dumps([r.as_json() for r in records], indent=1) + "\n"


def _unit_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= x <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {text}")
    return x


def _positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return x


def _steps(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 2:
        raise argparse.ArgumentTypeError(f"need at least 2 steps, got {n}")
    return n


def _add_config_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--channel", required=True, choices=[k.value for k in ConfigKind])
    p.add_argument("--state", required=True, choices=[s.value for s in StateFamily])
    p.add_argument("--q", type=_unit_float, default=1.0, help="GAD asymptotic ground population (default 1)")


def _config(args) -> ChannelConfig:
    return ChannelConfig(ConfigKind(args.channel), StateFamily(args.state), q=args.q)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdiscord",
        description="Concurrence and quantum discord of two qubits under local Markovian noise.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="evaluate one (alpha, gamma) point, JSON to stdout")
    _add_config_args(p)
    p.add_argument("--alpha", type=_unit_float, required=True)
    p.add_argument("--gamma", type=_unit_float, required=True)

    p = sub.add_parser("sweep", help="uniform (alpha, gamma) grid to CSV or JSON")
    _add_config_args(p)
    p.add_argument("--alpha-steps", type=_steps, default=101)
    p.add_argument("--gamma-steps", type=_steps, default=101)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("esd", help="gamma at which concurrence first vanishes")
    _add_config_args(p)
    p.add_argument("--alpha", type=_unit_float, required=True)
    p.add_argument("--tol", type=_positive_float, default=1e-6)

    p = sub.add_parser("figure", help="surface data for one figure panel")
    p.add_argument("--id", required=True, choices=sorted(FIGURES))
    p.add_argument("--out", required=True)
    p.add_argument("--steps", type=_steps, default=101)
    p.add_argument("--workers", type=int, default=1)
    return parser


def _reference_values(alpha: float, gamma: float) -> dict:
    ref = {
        "concurrence_channel": concurrence_dephasing_werner(alpha, gamma),
        "concurrence_printed": published_concurrence_dephasing_werner(alpha, gamma),
        "discord_closed_form": discord_bell_diagonal(to_bloch(evolve(
            ChannelConfig(ConfigKind.DEPHASING, StateFamily.WERNER), alpha, gamma))),
    }
    try:
        ref["discord_printed"] = published_discord_dephasing_werner(alpha, gamma)
    except DomainExceeded:
        ref["discord_printed"] = None
    return {k: (float(fmt(v)) if v is not None else None) for k, v in ref.items()}


def cmd_point(args, out) -> int:
    config = _config(args)
    report = evaluate(config, args.alpha, args.gamma)
    payload = OutputRecord.from_report(args.alpha, args.gamma, report).as_json()
    if config.kind is ConfigKind.DEPHASING and config.state_family is StateFamily.WERNER:
        payload["reference"] = _reference_values(args.alpha, args.gamma)
    out.write(json.dumps(payload) + "\n")
    return 0


def _write(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def cmd_sweep(args, out) -> int:
    grid = sweep(_config(args), args.alpha_steps, args.gamma_steps, workers=args.workers)
    records = [OutputRecord.from_report(r.alpha, r.gamma, r.report) for r in grid.rows]
    text = records_to_csv(records) if args.format == "csv" else records_to_json(records)
    _write(Path(args.out), text)
    return 0


def cmd_esd(args, out) -> int:
    res = esd_gamma(_config(args), args.alpha, tol=args.tol)
    out.write(("none" if res.gamma_esd is None else fmt(res.gamma_esd)) + "\n")
    return 0


def cmd_figure(args, out) -> int:
    config = FIGURES[args.id]
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    grid = sweep(config, args.steps, args.steps, workers=args.workers)
    records = [OutputRecord.from_report(r.alpha, r.gamma, r.report) for r in grid.rows]
    _write(outdir / f"{args.id}_concurrence.csv", records_to_csv(records, ("alpha", "gamma", "concurrence")))
    _write(outdir / f"{args.id}_discord.csv", records_to_csv(records, ("alpha", "gamma", "discord")))
    meta = {
        "id": args.id,
        "config": config.as_dict(),
        "alpha_steps": args.steps,
        "gamma_steps": args.steps,
        "rows": len(records),
    }
    _write(outdir / f"{args.id}_meta.json", json.dumps(meta, indent=1) + "\n")
    return 0


COMMANDS = {"point": cmd_point, "sweep": cmd_sweep, "esd": cmd_esd, "figure": cmd_figure}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return COMMANDS[args.command](args, out)
    except OSError as exc:
        print(f"qdiscord: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (QDiscordError, ValueError) as exc:
        print(f"qdiscord: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
