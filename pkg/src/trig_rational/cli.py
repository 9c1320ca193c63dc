"""Command-line front end: classify, certify, verify, scan, poly.

Exit codes: 0 success, 1 verification or cross-check failure, 2 usage error.
Scan output is deterministic (ascending denominator, then numerator) no
matter how many worker processes are used.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from multiprocessing import Pool

from .certifier import certify, to_json, verify_certificate, verify_certificate_json
from .classifier import FUNCTIONS, TrigVerdict, classify
from .exact_core import gcd
from .highprec import crosscheck
from .angle import reduce_for_cos, reduce_for_tan
from .polynomial import tan_squared_poly

__all__ = ["run", "main"]

_ANGLE_RE = re.compile(r"[+-]?[0-9]+/[0-9]+\Z")


def _parse_angle(text: str) -> Fraction:
    if not _ANGLE_RE.match(text):
        raise ValueError(f"angle must look like d/n, got {text!r}")
    num, den = text.split("/")
    if int(den) == 0:
        raise ValueError("angle denominator must not be zero")
    return Fraction(int(num), int(den))


def _human_angle(r: Fraction, function: str) -> str:
    if function == "cos":
        red = reduce_for_cos(r)
        return f"{red.d}/{red.n}"
    red = reduce_for_tan(r)
    sign = "-" if function == "tan" and red.sign < 0 else ""
    return f"{sign}{red.d}/{red.n}"


def _verdict_text(v: TrigVerdict) -> str:
    if v.kind == "exact":
        return f"exact {v.value}"
    return v.kind


def _verdict_tree(v: TrigVerdict) -> dict:
    if v.kind == "exact":
        return {"kind": "exact", "value": f"{v.value.numerator}/{v.value.denominator}"}
    return {"kind": v.kind}


def _cmd_classify(args: argparse.Namespace) -> int:
    r = _parse_angle(args.angle)
    verdict = classify(r, args.function)
    if args.json:
        tree = {
            "input": f"{r.numerator}/{r.denominator}",
            "function": args.function,
            "reduced": _human_angle(r, args.function),
            "verdict": _verdict_tree(verdict),
        }
        print(json.dumps(tree, sort_keys=True))
    else:
        angle = _human_angle(r, args.function)
        print(f"{args.function}({angle} pi): {_verdict_text(verdict)}")
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    r = _parse_angle(args.angle)
    cert = certify(r, args.function, separation_bits=args.bits)
    if args.verify:
        result = verify_certificate(cert)
        if not result:
            print(f"verification failed: {result.reason}", file=sys.stderr)
            return 1
    print(to_json(cert))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.file is None or args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise ValueError(f"cannot read {args.file}: {e}") from None
    result = verify_certificate_json(text)
    if args.json:
        print(json.dumps({"ok": result.ok, "reason": result.reason}, sort_keys=True))
    elif result.ok:
        print("pass")
    else:
        print(f"fail: {result.reason}")
    return 0 if result.ok else 1


def _cmd_poly(args: argparse.Namespace) -> int:
    p = tan_squared_poly(args.n)
    print(str(list(p.coeffs)))
    return 0


def _numerators(n: int) -> list[int]:
    if n == 1:
        return [0]
    return [d for d in range(1, n) if gcd(d, n) == 1]


def _scan_denominator(task: tuple[int, bool, int]) -> tuple[dict, list[str]]:
    n, check_numerics, bits = task
    counts = {f: {"pole": 0, "exact": 0, "irrational": 0} for f in FUNCTIONS}
    failures: list[str] = []
    for d in _numerators(n):
        r = Fraction(d, n)
        for f in FUNCTIONS:
            verdict = classify(r, f)
            counts[f][verdict.kind] += 1
            cert = certify(r, f, separation_bits=bits)
            if cert.verdict != verdict:
                failures.append(f"fail {f} {d}/{n}: certificate verdict disagrees")
                continue
            result = verify_certificate(cert)
            if not result:
                failures.append(f"fail {f} {d}/{n}: {result.reason}")
            elif check_numerics and not crosscheck(r, f, verdict, bits=bits):
                failures.append(f"fail {f} {d}/{n}: numeric cross-check")
    return counts, failures


def _cmd_scan(args: argparse.Namespace) -> int:
    if args.max_den < 1:
        raise ValueError("--max-den must be at least 1")
    if args.jobs < 1:
        raise ValueError("--jobs must be at least 1")
    tasks = [(n, args.crosscheck, args.bits) for n in range(1, args.max_den + 1)]
    totals = {f: {"pole": 0, "exact": 0, "irrational": 0} for f in FUNCTIONS}
    failures: list[str] = []
    angles = 0
    if args.jobs > 1:
        with Pool(processes=args.jobs) as pool:
            results = list(pool.imap(_scan_denominator, tasks, chunksize=8))
    else:
        results = [_scan_denominator(t) for t in tasks]
    for counts, fails in results:
        for f in FUNCTIONS:
            for kind, c in counts[f].items():
                totals[f][kind] += c
        failures.extend(fails)
    angles = sum(totals[FUNCTIONS[0]].values())
    for line in failures:
        print(line)
    print(f"scanned {angles} angles with denominator <= {args.max_den}")
    for f in FUNCTIONS:
        t = totals[f]
        print(f"{f}: pole={t['pole']} exact={t['exact']} irrational={t['irrational']}")
    print(f"failures: {len(failures)}")
    return 1 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trig-rational",
        description="Classify tan^2, tan, cos^2 and cos at rational multiples of pi.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="print the verdict for one angle")
    p.add_argument("angle", help="rational multiple of pi, as d/n")
    p.add_argument("--function", choices=FUNCTIONS, default="tan2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("certify", help="print a verdict certificate as JSON")
    p.add_argument("angle", help="rational multiple of pi, as d/n")
    p.add_argument("--function", choices=FUNCTIONS, default="tan2")
    p.add_argument("--json", action="store_true")
    p.add_argument("--bits", type=int, default=128, help="separation precision")
    p.add_argument(
        "--verify", action="store_true", help="re-verify before printing"
    )
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("verify", help="check a certificate (file or stdin)")
    p.add_argument("file", nargs="?", help="certificate path, - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("scan", help="sweep all reduced angles up to a denominator")
    p.add_argument("--max-den", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--bits", type=int, default=128)
    p.add_argument(
        "--crosscheck", action="store_true", help="also cross-check numerically"
    )
    p.set_defaults(fn=_cmd_scan)

    p = sub.add_parser("poly", help="print the tan^2 polynomial for odd n")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_poly)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.fn(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ArithmeticError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())
