"""Command-line front end: parse a field and element, report length and a
verified decomposition, in text or JSON.

Exit codes: 0 success, 1 parse/validation error, 2 not a sum of squares,
3 scope errors (non-maximal order, oversized discriminant), 4 search
ceilings exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decompose import (
    INFINITY,
    PrimeSearchStrategy,
    compute_length,
    decompose,
)
from .errors import (
    DiscriminantTooLarge,
    NFSquaresError,
    NonMaximalOrderAtP,
    NotASumOfSquares,
    ParseError,
    PrimeSearchExhausted,
    SearchBoundExceeded,
    ZeroInput,
)
from .fields import format_element, format_polynomial, parse_element, parse_field


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="nfsquares",
        description="Decompose a number-field element into a minimal sum "
        "of squares.",
    )
    ap.add_argument("command", nargs="?", default="run",
                    choices=["run", "verify"],
                    help="run (default): decompose; verify: check a JSON "
                    "report read from stdin")
    ap.add_argument("--field", help="monic integer polynomial in x defining K")
    ap.add_argument("--element", help="element of K as a polynomial in x")
    ap.add_argument("--json", action="store_true", help="emit JSON")
    ap.add_argument("--length-only", action="store_true",
                    help="report the length without decomposing")
    ap.add_argument("--strategy", choices=["deterministic", "random"],
                    default="deterministic")
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--prime-ceiling", type=int, default=10000)
    ap.add_argument("--height-ceiling", type=int, default=64)
    return ap


def _level_str(level):
    return "infinity" if level == INFINITY else level


def _report(K, a, field_text, element_text, args):
    strategy = PrimeSearchStrategy(
        mode=args.strategy,
        seed=args.seed,
        ceiling=args.prime_ceiling,
        height_ceiling=args.height_ceiling,
    )
    rep = compute_length(a)
    out = {
        "field": format_polynomial(K.defining_polynomial),
        "element": format_element(a),
        "level": _level_str(rep.level),
        "length": "infinity" if rep.length == INFINITY else rep.length,
    }
    if args.length_only:
        return out, 0
    dec = decompose(a, strategy)
    out["summands"] = [format_element(c) for c in dec.summands]
    out["verified"] = dec.verified
    return out, 0


def _emit(out, args):
    if args.json:
        print(json.dumps(out))
        return
    print(f"field:    Q[x]/({out['field']})")
    print(f"element:  {out['element']}")
    print(f"level:    {out['level']}")
    print(f"length:   {out['length']}")
    if "summands" in out:
        terms = " + ".join(f"({c})^2" for c in out["summands"])
        print(f"decomposition: {out['element']} = {terms}")
        print("verified: true")


def _verify_stdin():
    """Re-check a JSON report: do the summands square-sum to the element?"""
    try:
        data = json.load(sys.stdin)
        K = parse_field(data["field"])
        a = parse_element(K, data["element"])
        total = K.zero()
        for s in data["summands"]:
            c = parse_element(K, s)
            total = total + c * c
    except (KeyError, ValueError, ParseError) as exc:
        print(f"error: malformed report: {exc}", file=sys.stderr)
        return 1
    if total == a:
        print("verified: true")
        return 0
    print(f"verified: FALSE (squares sum to {format_element(total)})")
    return 1


def main(argv=None):
    args = _build_parser().parse_args(argv)
    if args.command == "verify":
        return _verify_stdin()
    if not args.field or not args.element:
        print("error: --field and --element are required", file=sys.stderr)
        return 1
    try:
        K = parse_field(args.field)
        a = parse_element(K, args.element)
        out, code = _report(K, a, args.field, args.element, args)
    except (ParseError, ZeroInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NotASumOfSquares as exc:
        print(f"error: not totally positive — not a sum of squares "
              f"(witness: {exc})", file=sys.stderr)
        return 2
    except (NonMaximalOrderAtP, DiscriminantTooLarge) as exc:
        print(f"error: out of scope: {exc}", file=sys.stderr)
        return 3
    except (PrimeSearchExhausted, SearchBoundExceeded) as exc:
        print(f"error: search ceiling exhausted: {exc}", file=sys.stderr)
        return 4
    except NFSquaresError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(out, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
