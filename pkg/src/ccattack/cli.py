"""Command line: ``ccattack {gen,attack,bench,graph}``.

Exit codes: 0 success, 2 invalid input, 3 attack finished without an
accepted solution.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, reportfile
from .attack import AttackConfig, AttackError, run_attack
from .bits import as_bits, to_str
from .generators import AsgInstance, GeneratorError, SgInstance, alternate, shrink
from .lfsr import LfsrState, PolynomialError, parse_polynomial
from .searchgraph import GraphError, build_induced_graph, to_dot
from .editmatrix import MatrixError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO_SOLUTION = 3

MODELS = {
    "sg": ("sg", "decimation"),
    "asg": ("asg", "insertion"),
    "generic-decimation": ("generic", "decimation"),
    "generic-insertion": ("generic", "insertion"),
}


class UsageError(Exception):
    pass


def _poly(text, flag):
    if text is None:
        return None
    try:
        return parse_polynomial(text)
    except PolynomialError as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _state(poly, text, flag):
    if poly is None or text is None:
        raise UsageError(f"{flag} needs both a polynomial and a state")
    try:
        return LfsrState.of(poly, text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _bits_arg(text: str, flag: str) -> str:
    """A bit string given inline or as a path to a file holding one."""
    if text is None:
        raise UsageError(f"{flag} is required")
    p = Path(text)
    if text and not set(text) <= {"0", "1"} and p.is_file():
        text = p.read_text()
    text = text.strip()
    if not text:
        raise UsageError(f"{flag} is empty")
    try:
        return to_str(as_bits(text))
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# -- gen -----------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.len < 0:
        raise UsageError("--len must be non-negative")
    ps, pa, pb = _poly(args.ps, "--ps"), _poly(args.pa, "--pa"), _poly(args.pb, "--pb")
    try:
        if args.gen == "sg":
            inst = SgInstance(_state(ps, args.ss, "--ss"), _state(pa, args.sa, "--sa"))
            ks, side = shrink(inst, args.len)
        else:
            inst = AsgInstance(_state(ps, args.ss, "--ss"), _state(pa, args.sa, "--sa"), _state(pb, args.sb, "--sb"))
            ks, side = alternate(inst, args.len)
    except GeneratorError as exc:
        raise UsageError(str(exc)) from exc
    text = to_str(ks)
    _emit(text + "\n" if text else "", args.out)
    if args.reveal:
        label = "mask" if args.gen == "sg" else "control"
        print(f"{label} {to_str(side)}", file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return EXIT_OK


# -- attack --------------------------------------------------------------------


def config_from_args(args) -> AttackConfig:
    generator, model = MODELS[args.model]
    pa, ps, pb = _poly(args.pa, "--pa"), _poly(args.ps, "--ps"), _poly(args.pb, "--pb")
    if pa is None:
        raise UsageError("--pa is required")
    target, other = pa, pb
    if args.target_branch == "b":
        if pb is None:
            raise UsageError("--target-branch b needs --pb")
        target, other = pb, pa
    try:
        return AttackConfig(
            generator=generator,
            model=model,
            target_poly=target,
            selector_poly=ps,
            branch_b_poly=other,
            H=args.H,
            n=args.N,
            m=args.M,
            kmax=args.kmax,
            tail=args.tail,
            exhaustive_fallback=args.fallback,
            relax_order=args.relax_order,
            target_branch=args.target_branch,
            workers=args.workers,
            seed=args.seed,
        )
    except AttackError as exc:
        raise UsageError(str(exc)) from exc


def summary(report) -> str:
    lines = [
        f"outcome {report.outcome}",
        f"trimmed {report.trimmed} discarded {report.discarded or '-'} hypotheses {report.hypothesis_counts}",
        f"N {report.N} M {report.M} kmax {report.kmax} tail {'open' if report.open_tail else 'bounded'}",
        f"is-pattern {report.is_pattern} patterns tried {len(report.patterns_tried)}",
        f"states {report.states_enumerated} matrices {report.matrices_computed} "
        f"stopped {report.stopped_early} anti-pattern excluded {report.states_excluded_by_anti_pattern}",
        f"threshold {report.threshold} min distance {report.min_distance}",
    ]
    for c in report.accepted:
        lines.append(f"accepted {c.state} distance {c.distance} mask {c.keep_mask} selector-state {c.selector_state}")
    for c in report.unconfirmed:
        lines.append(f"unconfirmed {c.state} distance {c.distance} mask {c.keep_mask}")
    return "\n".join(lines) + "\n"


def cmd_attack(args) -> int:
    bits = _bits_arg(args.keystream, "--keystream")
    config = config_from_args(args)
    try:
        report = run_attack(config, bits)
    except AttackError as exc:
        raise UsageError(str(exc)) from exc
    if args.out:
        reportfile.write(args.out, config, bits, report, timing=args.timing)
    sys.stdout.write(summary(report))
    return EXIT_OK if report.accepted else EXIT_NO_SOLUTION


# -- bench ---------------------------------------------------------------------


def cmd_bench(args) -> int:
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    try:
        grid = bench.parse_grid(args.grid)
    except bench.GridError as exc:
        raise UsageError(str(exc)) from exc
    rows = bench.run_bench(
        grid, args.trials, args.seed, ls=args.ls, H=args.H, fallback=not args.no_fallback, workers=args.workers,
        tail=args.tail,
    )
    _emit(bench.rows_to_csv(rows), args.out)
    if args.plot_data:
        Path(args.plot_data).write_text(bench.plot_json(rows))
    return EXIT_OK


# -- graph ---------------------------------------------------------------------


def cmd_graph(args) -> int:
    x = _bits_arg(args.x, "--x")
    y = _bits_arg(args.y, "--y")
    try:
        graph = build_induced_graph(x, y, args.kmax, open_tail=args.open_tail)
    except (MatrixError, GraphError) as exc:
        raise UsageError(str(exc)) from exc
    _emit(to_dot(graph), args.out)
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ccattack", description="Edit-distance attack on clock-controlled LFSR generators.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a keystream")
    g.add_argument("--gen", choices=["sg", "asg"], required=True)
    g.add_argument("--ps", help="selector / control polynomial, e.g. 1+x+x^3")
    g.add_argument("--pa")
    g.add_argument("--pb")
    g.add_argument("--ss", help="selector / control initial state")
    g.add_argument("--sa")
    g.add_argument("--sb")
    g.add_argument("--len", type=int, required=True)
    g.add_argument("--out")
    g.add_argument("--reveal", action="store_true", help="also print the keep-mask or control bits")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("attack", help="attack an intercepted keystream")
    a.add_argument("--model", choices=list(MODELS), required=True)
    a.add_argument("--keystream", required=True, help="bit string or file path")
    a.add_argument("--pa", help="target register polynomial")
    a.add_argument("--ps")
    a.add_argument("--pb")
    a.add_argument("--H", type=int, default=0)
    a.add_argument("--N", type=int)
    a.add_argument("--M", type=int)
    a.add_argument("--kmax", type=int)
    a.add_argument("--tail", choices=["auto", "bounded", "open"], default="auto")
    a.add_argument("--fallback", action="store_true", help="sweep all states once relaxations run out")
    a.add_argument("--relax-order", choices=["last-first", "first-first"], default="last-first")
    a.add_argument("--target-branch", choices=["a", "b"], default="a")
    a.add_argument("--workers", type=int, default=1)
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--timing", action="store_true", help="record wall-clock time in the report")
    a.add_argument("--out")
    a.set_defaults(func=cmd_attack)

    b = sub.add_parser("bench", help="attack planted shrinking-generator instances")
    b.add_argument("--grid", required=True, help='"(N,M,LA);..." with * for the default N')
    b.add_argument("--trials", type=int, default=1)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--ls", type=int, default=2, help="selector degree")
    b.add_argument("--H", type=int, help="hypotheses to require (default floor(LA/2))")
    b.add_argument("--no-fallback", action="store_true")
    b.add_argument("--tail", choices=["auto", "bounded", "open"], default="auto")
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--plot-data", help="write per-LA means as JSON")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)

    d = sub.add_parser("graph", help="export the induced graph as DOT")
    d.add_argument("--x", required=True)
    d.add_argument("--y", required=True)
    d.add_argument("--kmax", type=int, required=True)
    d.add_argument("--open-tail", action="store_true")
    d.add_argument("--out")
    d.set_defaults(func=cmd_graph)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ccattack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
