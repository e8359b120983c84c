"""Command-line entry point.

Exit codes: 0 success (or conjecture holds), 1 conjecture violated,
2 usage error, 3 runtime error (overflow, I/O).
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import forest
from .bench import ENGINES, bench_generation
from .conjecture import compare_forest, conjecture_holds
from .dumps import FORMATS, node_record, write_records
from .pair_core import BezoutPair, CoprimePair, TreeOverflowError, triple, verify_bezout
from .render import MOTIFS, RenderConfig, render_to_file

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_RUNTIME = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in {text!r}") from None


def _root(text: str) -> CoprimePair:
    pair = _int_pair(text)
    if pair not in ((2, 1), (3, 1)):
        raise argparse.ArgumentTypeError("root must be 2,1 or 3,1")
    return CoprimePair(*pair)


def _window(text: str) -> tuple[float, ...]:
    try:
        vals = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad window {text!r}") from None
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("window needs x0,x1,y0,y1")
    return vals


def _size(text: str) -> tuple[int, int]:
    try:
        w, h = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"size must look like 256x256, got {text!r}") from None
    return w, h


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bezout-trees", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tree", help="dump a trinary tree with its Bezout tree")
    p.add_argument("--root", type=_root, required=True, help="2,1 or 3,1")
    p.add_argument("--seed", type=_int_pair, default=(0, 1), help="root Bezout pair u,v")
    p.add_argument("--depth", type=_nonneg, required=True)
    p.add_argument("--include-root", action="store_true")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--out", type=Path)

    p = sub.add_parser("check", help="compare Bezout trees against extended gcd")
    p.add_argument("--depth", type=_positive, required=True)
    p.add_argument("--patched", action="store_true")
    p.add_argument("--out", type=Path, help="report JSON path (default: stdout)")
    p.add_argument("--plot", type=Path, help="write a per-level figure here")

    p = sub.add_parser("bench", help="time tree recursion against per-pair gcd")
    p.add_argument("--depth", type=_positive, required=True)
    p.add_argument("--engine", choices=ENGINES + ("both",), default="numpy")
    p.add_argument("--plot", type=Path, help="write a bar chart here")

    p = sub.add_parser("triple", help="Pythagorean triple generated by m,n")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("render", help="render a hyperbolic wallpaper to PPM")
    defaults = RenderConfig()
    p.add_argument("--window", type=_window, default=defaults.window)
    p.add_argument("--size", type=_size, default=(defaults.width, defaults.height))
    p.add_argument("--term-depth", type=_nonneg, default=defaults.term_depth)
    p.add_argument("--motif", choices=MOTIFS, default=defaults.motif)
    p.add_argument("--colormap", default="builtin", help="'builtin' or a PPM path")
    p.add_argument("--color-scale", type=float, default=1.0)
    p.add_argument("--base-terms", action="store_true")
    p.add_argument("--swapped", action="store_true")
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--out", type=Path, required=True)
    return parser


def _open_out(path):
    return open(path, "w", newline="") if path else sys.stdout


def cmd_tree(args) -> int:
    seed = BezoutPair(*args.seed)
    if not verify_bezout(args.root, seed):
        raise UsageError(f"seed {seed} is not a Bezout pair for root {args.root}")
    nodes = forest.enumerate(args.root, seed, args.depth, include_root=args.include_root)
    out = _open_out(args.out)
    try:
        write_records((node_record(n) for n in nodes), args.format, out)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def cmd_check(args) -> int:
    report = compare_forest(args.depth, patch=args.patched)
    text = report.to_json()
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plotting import comparison_figure

        comparison_figure(report, args.plot)
    holds = conjecture_holds(report)
    print(
        f"depth={report.depth} total={report.total_nodes} differed={report.differed} "
        f"fraction={report.differed_fraction} summary={report.differing_paths_summary.describe()} "
        f"conjecture={'holds' if holds else 'VIOLATED'}",
        file=sys.stderr,
    )
    return EXIT_OK if holds else EXIT_VIOLATED


def cmd_bench(args) -> int:
    engines = ENGINES if args.engine == "both" else (args.engine,)
    report = bench_generation(args.depth, engines)
    print(report.table())
    if args.plot:
        from .plotting import bench_figure

        bench_figure(report, args.plot)
    return EXIT_OK


def cmd_triple(args) -> int:
    if not args.m > args.n >= 1 or math.gcd(args.m, args.n) != 1:
        raise UsageError("triple needs coprime m > n >= 1")
    t = triple(CoprimePair(args.m, args.n))
    print(f"{t.x} {t.y} {t.z}")
    return EXIT_OK


def cmd_render(args) -> int:
    try:
        cfg = RenderConfig(
            window=args.window,
            width=args.size[0],
            height=args.size[1],
            term_depth=args.term_depth,
            include_base_terms=args.base_terms,
            include_swapped=args.swapped,
            motif=args.motif,
            colormap_source=args.colormap,
            color_scale=args.color_scale,
            output=str(args.out),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    render_to_file(cfg, args.out, threads=args.threads)
    return EXIT_OK


COMMANDS = {
    "tree": cmd_tree,
    "check": cmd_check,
    "bench": cmd_bench,
    "triple": cmd_triple,
    "render": cmd_render,
}


def _glue_window(argv):
    # "--window -1,1,..." would otherwise be read as an unknown option.
    out = list(argv)
    for i, tok in enumerate(out[:-1]):
        if tok == "--window":
            out[i : i + 2] = [f"--window={out[i + 1]}"]
            break
    return out


def run(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_glue_window(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TreeOverflowError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
