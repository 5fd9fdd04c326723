"""Command-line interface: one binary dispatching every subcommand, reading
and writing z2set files and CSV tables, with optional figure rendering.

Exit codes: 0 success, 1 domain error, 2 verification failures, 64 usage.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .bounds import (
    F_of_K,
    Ktilde,
    ab_lower_bound,
    ab_surface,
    construct,
    f_curve,
    ktilde_curve,
)
from .compression import StructureError, compress, structure
from .exhaustive import SUITE_NAMES, min_sumset, verify_suite
from .gf2core import (
    DomainError,
    Z2Set,
    affine_span,
    read_z2set,
    write_z2set,
)
from .hopf_stiefel import hs
from .isoperimetry import avg_shadow_bound, harper_bound
from .limits import (
    COMPRESSED_SEARCH_CAP,
    FIXPOINT_CAP,
    GEN_SEARCH_CAP,
    MAX_DIM,
    TRANSFORM_CAP,
)
from .partitions import min_pair_cost
from .sumsets import sum_auto, sum_naive, sum_transform


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; the contract wants 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    """p/q or integer; decimal inputs are rejected to avoid silent rounding."""
    try:
        if "/" in text:
            p, q = text.split("/", 1)
            return Fraction(int(p), int(q))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a p/q rational: {text!r}") from exc


def _index_list(text: str) -> list[int]:
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _emit_set(A: Z2Set, path) -> None:
    if path is None:
        sys.stdout.write(f"# z2set v1\nn={A.dim}\n")
        for c in A.members():
            sys.stdout.write(f"{c}\n")
    else:
        write_z2set(A, path)


def _write_csv(path, header: list[str], rows: list[list]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cubesums", description=__doc__)
    parser.add_argument(
        "--version",
        action="version",
        version=(
            f"cubesums {__version__} (max_dim={MAX_DIM}, transform_cap={TRANSFORM_CAP}, "
            f"fixpoint_cap={FIXPOINT_CAP}, gen_search_cap={GEN_SEARCH_CAP}, "
            f"compressed_search_cap={COMPRESSED_SEARCH_CAP})"
        ),
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("sum", help="Minkowski sum of two z2set files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output")
    p.add_argument(
        "--engine", choices=["naive", "transform", "auto"], default="auto"
    )

    p = sub.add_parser("compress", help="coset-wise initial-segment compression")
    p.add_argument("set")
    p.add_argument("--i", type=_index_list, required=True, metavar="I1,I2,...")
    p.add_argument("-o", "--output")

    p = sub.add_parser("structure", help="decompose a compression fixpoint")
    p.add_argument("set")

    p = sub.add_parser("span", help="affine span of a set")
    p.add_argument("set")

    p = sub.add_parser("hs", help="Hopf-Stiefel function")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = sub.add_parser("minpart", help="minimum pair cost over m-partitions")
    p.add_argument("a", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--cap", type=int)

    p = sub.add_parser("harper", help="vertex-isoperimetric lower bound")
    p.add_argument("n", type=int)
    p.add_argument("size", type=int)

    p = sub.add_parser("iso-bound", help="averaged shadow lower bound")
    p.add_argument("m", type=int)
    p.add_argument("avg", type=_rational, metavar="p/q")

    p = sub.add_parser("fk", help="largest spanning constant at doubling K")
    p.add_argument("K", type=_rational, metavar="p/q")

    p = sub.add_parser("ktilde", help="minimal doubling at spanning 2^a/b")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = sub.add_parser("ab-bound", help="two-set sumset lower bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--t", type=int)

    p = sub.add_parser("min-sumset", help="exhaustive minimum |A+B| at fixed sizes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--gen-a", action="store_true", help="require <A> = full cube")
    p.add_argument("--full", action="store_true", help="disable compression pruning")
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("construct", help="extremal constructions")
    kind = p.add_subparsers(dest="kind", parser_class=_Parser, required=True)
    q = kind.add_parser("ipe")
    q.add_argument("--t", type=int, required=True)
    q.add_argument("-o", "--output")
    q = kind.add_parser("ipe2")
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--s", type=int, required=True)
    q.add_argument("-o", "--output")
    q = kind.add_parser("ball")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("-o", "--output")

    p = sub.add_parser("table", help="curve tables as CSV (optionally a figure)")
    p.add_argument("which", choices=["F", "Ktilde", "ab"])
    p.add_argument("--from", dest="lo", type=_rational, required=True, metavar="p/q")
    p.add_argument("--to", dest="hi", type=_rational, required=True, metavar="p/q")
    p.add_argument("--step", type=_rational, metavar="p/q")
    p.add_argument("--csv", required=True, metavar="PATH")
    p.add_argument("--png", metavar="PATH")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=list(SUITE_NAMES))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", type=int, metavar="TRIALS")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--out-dir", metavar="DIR")

    p = sub.add_parser("report", help="emit all curve tables and figures")
    p.add_argument("-o", "--output", required=True, metavar="DIR")

    return parser


def _cmd_table(args) -> int:
    if args.which == "F":
        if args.step is None:
            raise DomainError("table F requires --step")
        rows = f_curve(args.lo, args.hi, args.step)
        header = ["K", "F_K", "K_approx", "F_K_approx"]
        data = [[_fmt(k), _fmt(f), float(k), float(f)] for k, f in rows]
    elif args.which == "Ktilde":
        rows = ktilde_curve(args.lo, args.hi)
        header = ["F_tilde", "K_tilde", "t", "s", "F_tilde_approx", "K_tilde_approx"]
        data = [
            [_fmt(ft), _fmt(kt), t, s, float(ft), float(kt)]
            for ft, kt, t, s in rows
        ]
    else:
        if args.step is None:
            raise DomainError("table ab requires --step")
        rows = ab_surface(args.lo, args.hi, args.step)
        header = ["alpha", "beta", "bound", "alpha_approx", "beta_approx", "bound_approx"]
        data = [
            [_fmt(a), _fmt(b), _fmt(v), float(a), float(b), float(v)]
            for a, b, v in rows
        ]
    _write_csv(args.csv, header, data)
    print(f"wrote {args.csv} ({len(data)} rows)")
    if args.png:
        from . import plotting

        if args.which == "F":
            plotting.plot_f_curve(rows, args.png)
        elif args.which == "Ktilde":
            plotting.plot_ktilde_curve(rows, args.png)
        else:
            plotting.plot_ab_surface(rows, args.png)
        print(f"wrote {args.png}")
    return 0


def _cmd_report(args) -> int:
    from . import plotting

    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    frows = f_curve(1, 4, Fraction(1, 100))
    _write_csv(
        out / "f_curve.csv",
        ["K", "F_K", "K_approx", "F_K_approx"],
        [[_fmt(k), _fmt(f), float(k), float(f)] for k, f in frows],
    )
    plotting.plot_f_curve(frows, out / "f_curve.png")
    krows = ktilde_curve(1, 16)
    _write_csv(
        out / "ktilde_curve.csv",
        ["F_tilde", "K_tilde", "t", "s", "F_tilde_approx", "K_tilde_approx"],
        [[_fmt(ft), _fmt(kt), t, s, float(ft), float(kt)] for ft, kt, t, s in krows],
    )
    plotting.plot_ktilde_curve(krows, out / "ktilde_curve.png")
    arows = ab_surface(Fraction(1, 16), 1, Fraction(1, 16))
    _write_csv(
        out / "ab_surface.csv",
        ["alpha", "beta", "bound", "alpha_approx", "beta_approx", "bound_approx"],
        [[_fmt(a), _fmt(b), _fmt(v), float(a), float(b), float(v)] for a, b, v in arows],
    )
    plotting.plot_ab_surface(arows, out / "ab_surface.png")
    for name in ("f_curve", "ktilde_curve", "ab_surface"):
        print(f"wrote {out / name}.csv and {out / name}.png")
    return 0


def _run(args) -> int:
    if args.command == "sum":
        A, B = read_z2set(args.a), read_z2set(args.b)
        engine = {"naive": sum_naive, "transform": sum_transform, "auto": sum_auto}
        S = engine[args.engine](A, B)
        print(f"|A+B| = {len(S)}")
        if args.output:
            write_z2set(S, args.output)
        return 0
    if args.command == "compress":
        A = read_z2set(args.set)
        _emit_set(compress(A, args.i), args.output)
        return 0
    if args.command == "structure":
        rep = structure(read_z2set(args.set))
        sizes = ",".join(str(s) for s in rep.sizes)
        print(f"h={rep.h} m={rep.m} sizes={sizes or '-'}")
        return 0
    if args.command == "span":
        flat = affine_span(read_z2set(args.set))
        basis = ",".join(str(b) for b in flat.basis)
        print(f"basepoint={flat.basepoint} basis={basis or '-'} size={flat.size}")
        return 0
    if args.command == "hs":
        print(hs(args.a, args.b))
        return 0
    if args.command == "minpart":
        value, partition = min_pair_cost(args.a, args.m, args.cap)
        print(f"value={value} parts={','.join(str(p) for p in partition.parts)}")
        return 0
    if args.command == "harper":
        print(harper_bound(args.n, args.size))
        return 0
    if args.command == "iso-bound":
        print(_fmt(avg_shadow_bound(args.m, args.avg)))
        return 0
    if args.command == "fk":
        v = F_of_K(args.K)
        print(f"{_fmt(v)} (= {v.numerator}/{v.denominator})")
        return 0
    if args.command == "ktilde":
        print(_fmt(Ktilde(args.a, args.b)))
        return 0
    if args.command == "ab-bound":
        r = ab_lower_bound(args.n, args.a, args.b, t_override=args.t)
        print(
            f"t={r.t} k={r.k} w={_fmt(r.w)} bound={_fmt(r.bound)} "
            f"count>={r.bound_count}"
        )
        return 0
    if args.command == "min-sumset":
        value, (A, B) = min_sumset(
            args.n,
            args.a,
            args.b,
            require_gen_a=args.gen_a,
            compressed=not args.full,
            force=args.force,
        )
        print(f"min={value}")
        print(f"A: {sorted(A.members())}")
        print(f"B: {sorted(B.members())}")
        return 0
    if args.command == "construct":
        kw = {
            "ipe": lambda a: {"t": a.t},
            "ipe2": lambda a: {"t": a.t, "s": a.s},
            "ball": lambda a: {"k": a.k, "t": a.t, "n": a.n},
        }[args.kind](args)
        _emit_set(construct(args.kind, **kw), args.output)
        return 0
    if args.command == "table":
        return _cmd_table(args)
    if args.command == "verify":
        report = verify_suite(
            args.suite,
            n=args.n,
            m=args.m,
            exhaustive=args.exhaustive,
            trials=args.random,
            seed=args.seed,
            out_dir=args.out_dir,
        )
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                json.dump(report, fh, indent=2)
        print(
            f"suite={report['suite']} cases={report['cases']} "
            f"failures={len(report['failures'])}"
        )
        return 2 if report["failures"] else 0
    if args.command == "report":
        return _cmd_report(args)
    return 64


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 64
    try:
        return _run(args)
    except (DomainError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
