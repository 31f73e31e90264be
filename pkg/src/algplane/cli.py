"""Command-line front end.

Exit codes: 0 success, 2 contract violation (e.g. inverting a zero divisor),
3 failed verification, 4 too many degenerate samples, 64 unparseable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import grassmann, ruled, serial
from .algebra2d import (
    AlgebraKind,
    Mat2,
    cone_ruling,
    inverse,
    is_zero_divisor,
    mat_is_zero_divisor,
    mul,
    to_matrix,
)
from .errors import ContractError, InconsistentFoci
from .proj_plane import random_point

EXIT_OK = 0
EXIT_CONTRACT = 2
EXIT_FAILED = 3
EXIT_DEGENERATE = 4
EXIT_USAGE = 64

DEGENERATE_LIMIT = 0.10


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    mode: str = "exact"
    samples: int = 100
    grid: tuple[int, int] = (5, 5)
    tol_rank: float = 1e-8
    tol_membership: float = 1e-10
    out: str | None = None

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    def to_json(self) -> dict:
        d = asdict(self)
        d.pop("out")
        d["grid"] = list(self.grid)
        return d


def sample_rngs(seed: int, n: int) -> list[np.random.Generator]:
    """One independent generator per sample index, derived from ``seed``."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(n)]


def _grid(text: str) -> tuple[int, int]:
    try:
        a, b = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like 5x5, got {text!r}") from None
    if a < 1 or b < 1:
        raise argparse.ArgumentTypeError("grid sizes must be positive")
    return a, b


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=_positive, default=100)
    common.add_argument("--grid", type=_grid, default=(5, 5))
    common.add_argument("--out", default=None)
    common.add_argument("--tol-rank", type=float, default=1e-8)
    common.add_argument("--tol-membership", type=float, default=1e-10)

    parser = _Parser(prog="algplane", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    kinds = [k.value for k in AlgebraKind]
    p = sub.add_parser("algebra", parents=[common], help="arithmetic in one algebra")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument(
        "op",
        choices=("mul", "add", "sub", "inverse", "zero-divisor", "matrix", "norm",
                 "mat-zero-divisor", "cone-ruling"),
    )
    p.add_argument("operands", nargs="*", help="x,y (or a00,a01,a10,a11 for matrix ops)")

    p = sub.add_parser("congruence", parents=[common], help="focal analysis of a congruence")
    p.add_argument("--kind", choices=kinds, required=True)

    p = sub.add_parser("curve", parents=[common], help="analyse the ruled 3-fold of a curve")
    p.add_argument("curve", nargs="?", help="curve JSON file")
    p.add_argument("--kind", choices=kinds, help="kind for --random-degree")
    p.add_argument("--random-degree", type=_positive, help="use a seeded random curve")
    p.add_argument("--derivatives", choices=("analytic", "fd"), default="analytic")

    p = sub.add_parser("join", parents=[common], help="rebuild a join from its focal curves")
    p.add_argument("input", help="double-number curve JSON, or {gamma1, gamma2} samples")
    return parser


def _config(args) -> RunConfig:
    return RunConfig(
        seed=args.seed,
        mode=args.mode,
        samples=args.samples,
        grid=tuple(args.grid),
        tol_rank=args.tol_rank,
        tol_membership=args.tol_membership,
        out=args.out,
    )


def _emit(report: dict, cfg: RunConfig) -> None:
    text = serial.dumps(report)
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


# ------------------------------------------------------------------ commands


def cmd_algebra(args, cfg: RunConfig) -> int:
    kind = AlgebraKind.parse(args.kind)
    op = args.op
    arity = {"mul": 2, "add": 2, "sub": 2}.get(op, 1)
    if len(args.operands) != arity:
        raise UsageError(f"{op} takes {arity} operand(s)")
    try:
        if op in ("mat-zero-divisor", "cone-ruling"):
            vals = [serial.parse_scalar(v, cfg.exact) for v in args.operands[0].split(",")]
            if len(vals) != 4:
                raise ValueError("a matrix needs four entries")
            operands = [Mat2(*vals)]
        else:
            operands = [serial.parse_a2(v, kind, cfg.exact) for v in args.operands]
    except (ValueError, ZeroDivisionError, ContractError) as exc:
        raise UsageError(str(exc)) from None

    if op == "mul":
        result = serial.a2(mul(*operands), with_kind=False)
    elif op == "add":
        result = serial.a2(operands[0] + operands[1], with_kind=False)
    elif op == "sub":
        result = serial.a2(operands[0] - operands[1], with_kind=False)
    elif op == "inverse":
        result = serial.a2(inverse(operands[0]), with_kind=False)
    elif op == "zero-divisor":
        result = {"zero_divisor": is_zero_divisor(operands[0])}
    elif op == "matrix":
        m = to_matrix(operands[0])
        result = {"matrix": serial.mat2(m), "det": serial.scalar(m.det())}
    elif op == "norm":
        result = {"norm": serial.scalar(operands[0].norm())}
    elif op == "mat-zero-divisor":
        result = {"zero_divisor": mat_is_zero_divisor(operands[0])}
    else:
        r = cone_ruling(operands[0])
        result = {"lambda": serial.scalar(r.lam), "mu": serial.scalar(r.mu)}
    sys.stdout.write(json.dumps(result, sort_keys=True, separators=(",", ":")) + "\n")
    return EXIT_OK


def cmd_congruence(args, cfg: RunConfig) -> int:
    kind = AlgebraKind.parse(args.kind)
    points = []
    for rng in sample_rngs(cfg.seed, cfg.samples):
        p = random_point(kind, rng)
        points.append(p if cfg.exact else p.to_float())
    analysis = grassmann.classify_congruence(kind)
    membership = grassmann.verify_congruence_membership(kind, points, tol=cfg.tol_membership)
    expected = grassmann.focal_polynomial(kind)
    mismatches = 0
    for p in points:
        derived = grassmann.congruence_focal_polynomial(p)
        if cfg.exact:
            same = tuple(derived) == tuple(expected)
        else:
            same = len(derived) == len(expected) and all(
                abs(a - float(b)) <= 1e-6 for a, b in zip(derived, expected)
            )
        mismatches += not same
    report = {
        "schema": serial.SCHEMA,
        "command": "congruence",
        "config": cfg.to_json(),
        "focal_polynomial": serial.vector(expected),
        "roots": serial.roots(analysis.roots),
        "real_foci": analysis.real_foci,
        "focal_planes": [serial.plane(p) for p in analysis.planes],
        "complex_focal_planes": [serial.complex_plane(p) for p in analysis.complex_planes],
        "derived_polynomial_mismatches": mismatches,
        **serial.membership_report(membership),
    }
    _emit(report, cfg)
    return EXIT_OK if membership.ok and mismatches == 0 else EXIT_FAILED


def _curve_from_args(args, cfg: RunConfig) -> ruled.CurveA:
    if args.curve:
        try:
            c = serial.parse_curve(_load_json(args.curve), exact=True)
        except ContractError as exc:
            raise UsageError(str(exc)) from None
    elif args.random_degree and args.kind:
        rng = np.random.default_rng(np.random.SeedSequence(cfg.seed))
        c = ruled.random_curve(AlgebraKind.parse(args.kind), rng, args.random_degree)
    else:
        raise UsageError("give a curve file or --kind with --random-degree")
    return c if cfg.exact else c.to_float()


def cmd_curve(args, cfg: RunConfig) -> int:
    c = _curve_from_args(args, cfg)
    grid = ruled.parameter_grid(*cfg.grid, exact=cfg.exact)
    try:
        report = ruled.singular_locus(c, grid, method=args.derivatives, tol=cfg.tol_membership)
    except InconsistentFoci as exc:
        _emit({"schema": serial.SCHEMA, "command": "curve", "error": str(exc)}, cfg)
        return EXIT_FAILED
    out = {
        "schema": serial.SCHEMA,
        "command": "curve",
        "config": cfg.to_json(),
        "curve": serial.curve(c),
        **serial.surface_report(report),
    }
    _emit(out, cfg)
    if report.degenerate_fraction > DEGENERATE_LIMIT:
        return EXIT_DEGENERATE
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_join(args, cfg: RunConfig) -> int:
    data = _load_json(args.input)
    out = {"schema": serial.SCHEMA, "command": "join", "config": cfg.to_json()}
    if "gamma1" in data and "gamma2" in data:
        try:
            g1 = [[serial.parse_scalar(x, cfg.exact) for x in v] for v in data["gamma1"]]
            g2 = [[serial.parse_scalar(x, cfg.exact) for x in v] for v in data["gamma2"]]
        except (ContractError, ValueError, ZeroDivisionError, TypeError) as exc:
            raise UsageError(str(exc)) from None
        result = ruled.join_reconstruct(g1, g2)
        out.update(
            lines=[None if l is None else serial.vector(l.plucker) for l in result.lines],
            skipped=result.skipped,
            cone=result.cone,
        )
        _emit(out, cfg)
        return EXIT_OK
    if isinstance(data, dict) and "curve" in data:
        data = data["curve"]
    try:
        c = serial.parse_curve(data, exact=True)
    except ContractError as exc:
        raise UsageError(str(exc)) from None
    if c.kind is not AlgebraKind.DOUBLE:
        raise ContractError("joins come from double-number curves")
    c = c if cfg.exact else c.to_float()
    report = ruled.singular_locus(c, ruled.parameter_grid(*cfg.grid, exact=cfg.exact))
    if report.cls is not ruled.SurfaceClass.JOIN:
        out["error"] = f"surface classified {report.cls.value}, not a join"
        _emit(out, cfg)
        return EXIT_FAILED
    good = [s for s in report.samples if s.degenerate is None]
    g1 = [p["point"] for p in report.focal_curves["gamma1"]]
    g2 = [p["point"] for p in report.focal_curves["gamma2"]]
    result = ruled.join_reconstruct(g1, g2)
    matches = [
        line is not None and line.same_as(s.generator, cfg.tol_rank)
        for line, s in zip(result.lines, good)
    ]
    out.update(
        generators=len(good),
        reproduced=sum(matches),
        skipped=result.skipped,
        cone=result.cone,
        focal_curves=serial.surface_report(report)["focal_curves"],
    )
    _emit(out, cfg)
    return EXIT_OK if all(matches) else EXIT_FAILED


COMMANDS = {
    "algebra": cmd_algebra,
    "congruence": cmd_congruence,
    "curve": cmd_curve,
    "join": cmd_join,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config(args)
    try:
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        sys.stderr.write(f"algplane: error: {exc}\n")
        return EXIT_USAGE
    except ContractError as exc:
        sys.stdout.write(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True) + "\n"
        )
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
