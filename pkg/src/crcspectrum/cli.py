"""Command-line front end: compute / brute / verify, JSON or CSV reports.

Exit codes: 0 ok, 1 verification mismatch, 2 invalid input, 3 resource guard.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .errors import ParseError, ResourceLimitError
from .field import GF
from .lfsr import CrcCode
from .poly import Poly
from .spectrum import (
    DEFAULT_EXHAUSTIVE_GUARD,
    brute_force_dual_spectrum,
    dual_spectrum,
    macwilliams,
    min_distance,
    undetected_error_probability,
    verify,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_RESOURCE = 3


def parse_poly_spec(text: str, field: GF, width: int | None = None) -> Poly:
    """Parse a generator polynomial: comma coefficients, or hex CRC notation.

    Hex form ("0x...") is the normal MSB-first CRC convention: bit i of the
    value is the coefficient of x^i, with an implicit leading x^width. Only
    valid for p=2, delta=1, and requires an explicit width.
    """
    text = text.strip()
    if text.lower().startswith("0x"):
        if field.p != 2 or field.delta != 1:
            raise ParseError("hex CRC notation requires p=2, delta=1")
        if width is None:
            raise ParseError("hex CRC notation requires --width")
        try:
            value = int(text, 16)
        except ValueError:
            raise ParseError(f"bad hex literal {text!r}", 0) from None
        if value >> width:
            raise ParseError(f"hex value {text} does not fit in width {width}")
        coeffs = [(value >> i) & 1 for i in range(width)] + [1]
        return Poly(field, coeffs)
    return Poly.from_string(field, text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="crcspectrum",
        description="Exact weight distribution, minimum distance and "
        "undetected-error probability of CRC codes over GF(p^delta).",
    )
    ap.add_argument("--p", type=int, default=2, help="field characteristic (prime)")
    ap.add_argument("--delta", type=int, default=1, help="extension degree")
    ap.add_argument(
        "--field-modulus",
        help="defining polynomial of alpha over F_p, comma form (default: least irreducible)",
    )
    ap.add_argument("--poly", help="generator polynomial, comma form (constant first)")
    ap.add_argument("--hex", dest="hex_poly", help="generator in hex CRC notation")
    ap.add_argument("--width", type=int, help="CRC width r for --hex")
    ap.add_argument("--n", type=int, help="code length")
    ap.add_argument("--n-range", help="inclusive code-length range A..B")
    ap.add_argument(
        "--mode", choices=("compute", "brute", "verify"), default="compute"
    )
    ap.add_argument(
        "--epsilon",
        type=float,
        action="append",
        default=None,
        help="channel symbol error rate (repeatable)",
    )
    ap.add_argument("--output", choices=("json", "csv"), default="json")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument(
        "--max-exhaustive",
        type=int,
        default=DEFAULT_EXHAUSTIVE_GUARD,
        help="guard on q^r for exhaustive enumeration",
    )
    return ap


def _lengths(args):
    if (args.n is None) == (args.n_range is None):
        raise ParseError("exactly one of --n / --n-range is required")
    if args.n is not None:
        return [args.n]
    try:
        lo, hi = args.n_range.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise ParseError(f"bad range {args.n_range!r}; expected A..B") from None
    if hi < lo:
        raise ParseError("empty --n-range")
    return list(range(lo, hi + 1))


def _build_report(code: CrcCode, args) -> dict:
    F = code.field
    report = {
        "p": F.p,
        "delta": F.delta,
        "field_modulus": ",".join(str(c) for c in F.modulus),
        "g": code.g.to_string(),
        "n": code.n,
        "r": code.r,
        "B": None,
        "A": None,
        "d_min": None,
        "full_scans_fast": None,
        "full_scans_brute": None,
    }
    epsilons = args.epsilon
    if args.mode == "compute":
        stats: dict = {}
        dual = dual_spectrum(code, threads=args.threads, stats=stats)
        report["full_scans_fast"] = stats["full_scans"]
    elif args.mode == "brute":
        dual = brute_force_dual_spectrum(code, max_states=args.max_exhaustive)
        report["full_scans_brute"] = F.q**code.r
    else:
        vr = verify(code, max_states=args.max_exhaustive)
        dual = vr.fast
        report["full_scans_fast"] = vr.full_scans_fast
        report["full_scans_brute"] = vr.full_scans_brute
        report["match"] = vr.match
    primal = macwilliams(dual, F.q)
    report["B"] = list(dual.counts)
    report["A"] = list(primal.counts)
    report["d_min"] = min_distance(primal)
    if epsilons:
        report["P_ue"] = {
            repr(eps): undetected_error_probability(primal, eps, F.q)
            for eps in epsilons
        }
    return report


def canonical_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit_csv(reports, out):
    writer = csv.writer(out)
    writer.writerow(["p", "delta", "g", "n", "r", "weight", "B", "A"])
    for rep in reports:
        for w, (b, a) in enumerate(zip(rep["B"], rep["A"])):
            writer.writerow(
                [rep["p"], rep["delta"], rep["g"], rep["n"], rep["r"], w, b, a]
            )


def run(args, out=sys.stdout) -> int:
    field = GF(
        args.p,
        args.delta,
        None
        if args.field_modulus is None
        else [int(c) for c in args.field_modulus.split(",")],
    )
    if (args.poly is None) == (args.hex_poly is None):
        raise ParseError("exactly one of --poly / --hex is required")
    g = parse_poly_spec(args.hex_poly or args.poly, field, args.width)
    reports = []
    for n in _lengths(args):
        code = CrcCode(g, n)  # raises ValueError naming the violated constraint
        reports.append(_build_report(code, args))
    if args.output == "json":
        for rep in reports:
            print(canonical_json(rep), file=out)
    else:
        _emit_csv(reports, out)
    if args.mode == "verify" and not all(rep["match"] for rep in reports):
        return EXIT_MISMATCH
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParseError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
