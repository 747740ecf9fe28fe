"""Command-line front end: ``lpm-toric <subcommand>``.

Exit codes: 0 all asserted comparisons passed, 1 some comparison failed,
2 bad input, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .lpm_core import EnumerationCapError, PathFormatError, PathPairError, hook_pair, pair_from_strings
from .polytope import CapExceededError
from .verify import (
    Caps,
    SweepConfig,
    cmd_bases,
    cmd_border_strip,
    cmd_identities,
    cmd_toric,
    cmd_verify_hooks,
)

log = logging.getLogger("lpm_toric")

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _caps(args) -> Caps:
    return Caps(max_dim=args.cap_dim, max_vertices=args.cap_vertices, max_faces=args.cap_faces)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--cap-vertices", type=int, default=Caps.max_vertices)
    common.add_argument("--cap-faces", type=int, default=Caps.max_faces)
    common.add_argument("--cap-dim", type=int, default=Caps.max_dim)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="lpm-toric",
        description="Lattice path matroid polytopes and their toric f/g-polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bases", parents=[common], help="enumerate the bases of M(upper, lower)")
    p.add_argument("upper")
    p.add_argument("lower")

    p = sub.add_parser("toric", parents=[common], help="f-vector and toric f/g of a path pair")
    p.add_argument("upper", nargs="?")
    p.add_argument("lower", nargs="?")
    p.add_argument("--hook", nargs=2, type=int, metavar=("ALPHA", "BETA"))

    p = sub.add_parser("verify-hooks", parents=[common],
                       help="check the hook closed forms against the geometric pipeline")
    p.add_argument("--alpha-max", type=int, default=4)
    p.add_argument("--beta-max", type=int)
    p.add_argument("--timings", action="store_true", help="include wall times (breaks byte-stable output)")

    p = sub.add_parser("identities", parents=[common], help="sweep the binomial identities")
    p.add_argument("--m-max", type=int, default=8)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--q-margin", type=int, default=2,
                   help="extra q values reported (not asserted) on each side of -1..m+n")
    p.add_argument("--timings", action="store_true")

    p = sub.add_parser("border-strip", parents=[common],
                       help="toric g of a border strip against the triple-product candidate")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return _dispatch(args)
    except (PathFormatError, PathPairError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CapExceededError, EnumerationCapError) as exc:
        print(f"error: {exc}; raise --cap-vertices/--cap-faces/--cap-dim or shrink the input",
              file=sys.stderr)
        return EXIT_CAP


def _dispatch(args) -> int:
    caps = _caps(args)
    if args.command == "bases":
        _emit(_dumps(cmd_bases(pair_from_strings(args.upper, args.lower), caps)), args.out)
        return EXIT_OK

    if args.command == "toric":
        if args.hook:
            pair = hook_pair(*args.hook)
        elif args.upper is not None and args.lower is not None:
            pair = pair_from_strings(args.upper, args.lower)
        else:
            raise ValueError("give UPPER LOWER paths or --hook ALPHA BETA")
        result = cmd_toric(pair, caps)
        _emit(_dumps(result), args.out)
        return EXIT_OK if result["eulerian"] and result["h_symmetric"] else EXIT_MISMATCH

    if args.command == "border-strip":
        result = cmd_border_strip(args.a, args.b, args.c, caps)
        _emit(_dumps(result), args.out)
        return EXIT_OK if result["eulerian"] and result["h_symmetric"] else EXIT_MISMATCH

    if args.command == "verify-hooks":
        config = SweepConfig(alpha_max=args.alpha_max, beta_max=args.beta_max, caps=caps,
                             fmt=args.format, out=args.out)
        report = cmd_verify_hooks(config)
    else:
        config = SweepConfig(m_max=args.m_max, n_max=args.n_max, q_margin=args.q_margin,
                             caps=caps, fmt=args.format, out=args.out)
        report = cmd_identities(config)
    _emit(report.dumps(config.fmt, timings=args.timings), config.out)
    for rec in report.failures:
        log.warning("mismatch %s %s: computed %s, expected %s",
                    rec.instance, rec.quantity, rec.computed, rec.expected)
    summary = report.summary()
    print(f"{report.kind}: {summary['passed']}/{summary['asserted']} asserted comparisons passed"
          f" ({summary['informational']} informational)", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
