"""Command-line front end: ``cornerhook <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import combcore as cc
from . import genfun as gfn
from . import lgv
from . import verify as vf

DEFAULT_CAP = 10**7


class CapExceededError(RuntimeError):
    pass


def parse_ints(text: str, count: int | None = None) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        values: tuple[int, ...] = ()
    else:
        try:
            values = tuple(int(v) for v in text.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if count is not None and len(values) != count:
        raise argparse.ArgumentTypeError(f"expected {count} comma-separated integers, got {text!r}")
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"values must be nonnegative: {text!r}")
    return values


def box_arg(text: str) -> tuple[int, int, int]:
    return parse_ints(text, 3)  # type: ignore[return-value]


def partition_arg(text: str) -> cc.Partition:
    values = parse_ints(text)
    try:
        return cc.Partition(values)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _fmt_parts(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def _fmt_cells(cells) -> str:
    return ",".join(f"({r},{c})" for r, c in cells)


def _check_cap(box, args) -> None:
    if args.unsafe_no_cap:
        return
    count = gfn.macmahon_count(*box)
    if count > args.cap:
        raise CapExceededError(
            f"box {','.join(map(str, box))} holds {count} plane partitions, above the cap "
            f"{args.cap}; raise --cap or pass --unsafe-no-cap"
        )


def cmd_enumerate(args, out) -> int:
    _check_cap(args.box, args)
    for pi in cc.enumerate_pp(*args.box):
        if args.json:
            record = pi.to_json()
            if args.stats:
                record["stats"] = cc.pp_stats(pi).to_json()
            out.write(json.dumps(record, separators=(",", ":")) + "\n")
        else:
            line = json.dumps([list(r) for r in pi.rows], separators=(",", ":"))
            if args.stats:
                st = cc.pp_stats(pi)
                line += (
                    f" volume={st.volume} trace={st.trace} cor={st.cor}"
                    f" cornerhook={st.cornerhook}"
                )
            out.write(line + "\n")
    return 0


def cmd_gf(args, out) -> int:
    _check_cap(args.box, args)
    out.write(str(gfn.gf(*args.box, args.pair).poly) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    failures = 0
    for result in vf.run(args.suite, args.max):
        out.write(result.line() + "\n")
        out.flush()
        failures += not result.ok
    return 1 if failures else 0


def cmd_phi(args, out) -> int:
    src = args.partition
    if args.inverse:
        image = cc.phi_inverse(src)
        before = (cc.cohook_area(src), cc.corner_count(src))
        after = (sum(image), cc.durfee(image))
    else:
        image = cc.phi(src)
        before = (sum(src), cc.durfee(src))
        after = (cc.cohook_area(image), cc.corner_count(image))
    out.write(_fmt_parts(image) + "\n")
    out.write(f"corners: {_fmt_cells(cc.corners(image))}\n")
    out.write(f"stats: {before[0]},{before[1]} -> {after[0]},{after[1]}\n")
    return 0


def _fmt_witness(witness) -> str:
    (m, n), here, mirrored = witness
    return f"[q^{m}*t^{n}]={here} [q^{n}*t^{m}]={mirrored}"


def cmd_search_asymmetry(args, out) -> int:
    maxbox = args.max
    found, witness, checked = gfn.search_asymmetry(maxbox)
    for box in checked:
        out.write(f"SYMMETRIC box={','.join(map(str, box))}\n")
    if found is None:
        out.write("no asymmetric box found\n")
    else:
        out.write(f"ASYMMETRIC box={','.join(map(str, found))} witness {_fmt_witness(witness)}\n")
    if maxbox[0] >= 2 and maxbox[1] >= 2:
        for c in range(1, maxbox[2] + 1):
            status = "symmetric" if gfn.symmetry_check(2, 2, c) else "ASYMMETRIC"
            out.write(f"PP(2,2,{c}) {status}\n")
    return 0


def cmd_paths(args, out) -> int:
    box = lgv.Box(*args.box)
    _check_cap(box, args)
    for k, system in enumerate(lgv.enumerate_systems(box)):
        if k:
            out.write("\n")
        out.write(f"# weight={system.weight()}\n")
        out.write(str(system) + "\n" if system.paths else "")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cornerhook",
        description="Boxed plane partitions, their statistics, and exact identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help="refuse boxes holding more plane partitions than this")
        p.add_argument("--unsafe-no-cap", action="store_true")

    p = sub.add_parser("enumerate", help="stream the plane partitions in a box")
    p.add_argument("--box", type=box_arg, required=True, metavar="a,b,c")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--json", action="store_true")
    add_cap(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gf", help="print a bivariate generating function")
    p.add_argument("--box", type=box_arg, required=True, metavar="a,b,c")
    p.add_argument("--pair", choices=gfn.PAIRS, required=True)
    add_cap(p)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=list(vf.SUITES) + ["all"], default="all")
    p.add_argument("--max", type=parse_ints, default=None, metavar="a,b,c")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("phi", help="apply the area/cohook-area bijection")
    p.add_argument("--partition", type=partition_arg, required=True, metavar="p1,p2,...")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("search-asymmetry", help="look for q<->t asymmetry of (volume, corner-hook)")
    p.add_argument("--max", type=box_arg, required=True, metavar="a,b,c")
    p.set_defaults(func=cmd_search_asymmetry)

    p = sub.add_parser("paths", help="list the nonintersecting path systems of a box")
    p.add_argument("--box", type=box_arg, required=True, metavar="a,b,c")
    add_cap(p)
    p.set_defaults(func=cmd_paths)

    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except CapExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
