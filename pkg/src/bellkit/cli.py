"""Command-line interface.

Exit codes: 0 success, 1 internal or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import harness
from .bell import ALGORITHMS, AlgorithmId, bell
from .errors import BellkitError, InvalidIndex, InvalidSplit, UnsupportedK
from .render import dumps, render_json, render_latex, render_text, to_json_obj
from .stirling import StirlingMethod, stirling

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("text", "latex", "json")
DEFAULT_MAX_N = 64


class UsageError(Exception):
    pass


def max_n_cap() -> int:
    raw = os.environ.get("BELLKIT_MAX_N", str(DEFAULT_MAX_N))
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"BELLKIT_MAX_N must be an integer, got {raw!r}") from None


def _guard(n: int) -> None:
    cap = max_n_cap()
    if n > cap:
        raise UsageError(f"n={n} exceeds BELLKIT_MAX_N={cap}")


def parse_range(text: str) -> range:
    """``"8..13"`` -> range(8, 14); a bare ``"5"`` is the range 5..5."""
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo_i, hi_i + 1)


def parse_k_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def render(p, fmt: str, n: int, k: int) -> str:
    if fmt == "latex":
        return render_latex(p)
    if fmt == "json":
        return render_json(p, n, k)
    return render_text(p)


def cmd_bell(args) -> int:
    _guard(args.n)
    p = bell(args.n, args.k, args.algo)
    print(render(p, args.format, args.n, args.k))
    return EXIT_OK


def cmd_stirling(args) -> int:
    _guard(args.n)
    v = stirling(args.n, args.k, args.method)
    if args.format == "json":
        print(dumps({"n": args.n, "k": args.k, "method": str(StirlingMethod(args.method)), "value": str(v)}))
    elif args.format == "latex":
        print(f"S({args.n},{args.k}) = {v}")
    else:
        print(v)
    return EXIT_OK


def cmd_table(args) -> int:
    _guard(args.n_range[-1])
    if args.format == "json":
        print(dumps([to_json_obj(bell(n, args.k, args.algo), n, args.k) for n in args.n_range]))
        return EXIT_OK
    for n in args.n_range:
        p = bell(n, args.k, args.algo)
        if args.format == "latex":
            print(f"B_{{{n},{args.k}}} = {render_latex(p)}")
        else:
            print(render_text(p))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    _guard(args.max_n)
    cells = harness.run_verify(args.max_n, jobs=args.jobs)
    print(harness.format_matrix(cells, args.max_n))
    failures = [f for c in cells for f in c.failures]
    counts = {check: 0 for check in harness.CHECKS}
    for f in failures:
        counts[f.check] += 1
    published = sum(c.published_checked for c in cells)
    print(f"cells checked: {len(cells)}  published polynomials compared: {published}")
    for check in harness.CHECKS:
        print(f"{check:<14} {'FAIL' if counts[check] else 'pass'}  ({counts[check]} failures)")
    if failures:
        first = failures[0]
        print(f"first mismatch at n={first.n} k={first.k} [{first.check}]: {first.detail}")
        return EXIT_FAIL
    print("all checks passed")
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.repetitions < 1:
        raise UsageError("--repetitions must be >= 1")
    _guard(args.max_n)
    result = harness.run_bench(args.max_n, args.k_list, args.repetitions, jobs=args.jobs)
    sys.stdout.write(result.to_csv())
    if result.mismatches:
        for n, k in result.mismatches:
            print(f"digest mismatch for n={n} k={k}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bellkit", description="Exact partial Bell polynomials and Stirling numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    algo_kw = dict(choices=[a.value for a in ALGORITHMS], default=AlgorithmId.CLOSED_FORM.value)
    fmt_kw = dict(choices=FORMATS, default="text")

    p = sub.add_parser("bell", help="compute B(n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", **algo_kw)
    p.add_argument("--format", **fmt_kw)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("stirling", help="compute S(n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=[m.value for m in StirlingMethod], default=StirlingMethod.EXPLICIT.value)
    p.add_argument("--format", **fmt_kw)
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("table", help="list B(n, k) for a range of n")
    p.add_argument("--n-range", type=parse_range, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", **algo_kw)
    p.add_argument("--format", **fmt_kw)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-check all algorithms for 1 <= k <= n <= max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time every algorithm, CSV on stdout")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--k-list", type=parse_k_list, required=True)
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidIndex, InvalidSplit, UnsupportedK) as exc:
        print(f"bellkit {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BellkitError as exc:
        print(f"bellkit {args.command}: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
