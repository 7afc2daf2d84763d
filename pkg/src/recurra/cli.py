"""Command-line frontend: sequence terms, periods, the cipher, and the
randomized verification suites.

All numeric output is plain decimal, one value per whitespace-separated
token.  Exit code 0 means every requested check passed.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import cipher, lnumbers, pisano, quaternions, recurrence, verify
from .ringcore import Residue, multiplicative_order
from .recurrence import SequenceSpec


def _spec_from_args(args) -> SequenceSpec:
    initial = tuple(args.initial) if getattr(args, "initial", None) else None
    return SequenceSpec(tuple(args.coeffs), initial)


def _cmd_seq(args) -> int:
    spec = _spec_from_args(args)
    if args.mod is not None:
        values = recurrence.terms_mod(spec, args.n + 1, args.mod)
    else:
        values = recurrence.terms(spec, args.n + 1)
    print(" ".join(str(v) for v in values))
    return 0


def _cmd_pisano(args) -> int:
    spec = _spec_from_args(args)
    if args.ladder:
        p, r_max = args.ladder
        print(" ".join(str(v) for v in pisano.prime_power_ladder(spec, p, r_max)))
        return 0
    if args.state:
        result = pisano.state_period(spec, args.mod)
        print(result.tail, result.period)
    else:
        print(pisano.matrix_order(spec, args.mod))
    return 0


def _cmd_order(args) -> int:
    print(multiplicative_order(Residue(args.x, args.mod)))
    return 0


def _load_key(path: str) -> cipher.CipherKey:
    with open(path, encoding="utf-8") as fh:
        return cipher.CipherKey.from_line(fh.read())


def _load_alphabet(path: str | None) -> cipher.Alphabet:
    if path is None:
        return cipher.Alphabet.default()
    with open(path, encoding="utf-8") as fh:
        return cipher.Alphabet.from_text(fh.read())


def _read_text() -> str:
    text = sys.stdin.read()
    return text[:-1] if text.endswith("\n") else text


def _cmd_encrypt(args) -> int:
    key = _load_key(args.key)
    alpha = _load_alphabet(args.alphabet)
    sys.stdout.write(cipher.encrypt_text(key, alpha, _read_text()) + "\n")
    return 0


def _cmd_decrypt(args) -> int:
    key = _load_key(args.key)
    alpha = _load_alphabet(args.alphabet)
    out = cipher.decrypt_text(key, alpha, _read_text(), strip_pad=args.strip_pad)
    sys.stdout.write(out + "\n")
    return 0


def _cmd_validate_key(args) -> int:
    key = _load_key(args.key)
    cipher.validate_key(key)
    if args.normalize:
        key = cipher.normalize_exponent(key)
        print("ok", key.to_line())
    else:
        print("ok")
    return 0


def _cmd_lnum(args) -> int:
    spec = lnumbers.LSpec(args.l)
    values = lnumbers.l_terms(spec, args.n + 1)
    if args.mod is not None:
        values = [v % args.mod for v in values]
    print(" ".join(str(v) for v in values))
    return 0


def _cmd_quat(args) -> int:
    report = quaternions.invertibility_census(args.l, args.r, args.n)
    for rec in report.records:
        a = quaternions.l_quaternion(args.l, args.r, rec.index)
        coeffs = " ".join(str(c) for c in a.quat.coeffs)
        print(rec.index, coeffs, rec.norm_mod, "unit" if rec.invertible else "zero-divisor")
    return 0 if report.all_invertible else 1


def _parse_budget(text: str) -> int:
    """Milliseconds; accepts a bare count or an 'ms'/'s' suffix ('60s')."""
    text = text.strip()
    if text.endswith("ms"):
        return int(text[:-2])
    if text.endswith("s"):
        return int(float(text[:-1]) * 1000)
    return int(text)


def _cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    if args.budget is not None:
        budget = _parse_budget(args.budget)
    else:
        budget = int(os.environ.get("RECURRA_BUDGET_MS", verify.DEFAULT_BUDGET_MS))
    results = verify.run_suites(names, args.seed, budget)
    for result in results:
        print(result.line())
    failed = sum(not r.passed for r in results)
    print(f"{'ok' if failed == 0 else 'FAILED'} {len(results) - failed}/{len(results)} checks")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recurra",
        description="Exact k-term recurrences, Pisano periods, a "
                    "recurrence-keyed block cipher, and sequence identities "
                    "over residue rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print d_0..d_n of a recurrence")
    p.add_argument("coeffs", nargs="+", type=int, help="a_1 .. a_k")
    p.add_argument("--n", type=int, required=True, help="last index to print")
    p.add_argument("--initial", nargs="+", type=int,
                   help="initial window d_0..d_{k-1} (default 0,...,0,1)")
    p.add_argument("--mod", type=int, help="reduce all terms mod m")
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("pisano", help="period of the recurrence mod m")
    p.add_argument("coeffs", nargs="+", type=int)
    p.add_argument("--mod", type=int, help="modulus m")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--matrix", action="store_true",
                       help="order of the companion matrix (default)")
    group.add_argument("--state", action="store_true",
                       help="print 'tail period' of the state sequence")
    p.add_argument("--ladder", nargs=2, type=int, metavar=("P", "R"),
                   help="print pi(p), pi(p^2), ..., pi(p^R)")
    p.set_defaults(func=_cmd_pisano)

    p = sub.add_parser("order", help="multiplicative order of x mod m")
    p.add_argument("x", type=int)
    p.add_argument("--mod", type=int, required=True)
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("encrypt", help="stdin -> ciphertext on stdout")
    p.add_argument("--key", required=True, help="key file: k N a_1..a_k n")
    p.add_argument("--alphabet", help="alphabet file (default A..Z then *)")
    p.set_defaults(func=_cmd_encrypt)

    p = sub.add_parser("decrypt", help="stdin -> plaintext on stdout")
    p.add_argument("--key", required=True)
    p.add_argument("--alphabet")
    p.add_argument("--strip-pad", action="store_true",
                   help="drop trailing pad symbols from the output")
    p.set_defaults(func=_cmd_decrypt)

    p = sub.add_parser("validate-key", help="check a key file")
    p.add_argument("--key", required=True)
    p.add_argument("--normalize", action="store_true",
                   help="also print the key with n reduced mod pi(N)")
    p.set_defaults(func=_cmd_validate_key)

    p = sub.add_parser("lnum", help="print a_0..a_n of the l-number sequence")
    p.add_argument("l", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mod", type=int)
    p.set_defaults(func=_cmd_lnum)

    p = sub.add_parser("quat", help="sequence-quaternion census over Z_{l^r}")
    p.add_argument("l", type=int, help="odd prime")
    p.add_argument("--r", type=int, default=1, help="power of l (default 1)")
    p.add_argument("--n", type=int, required=True, help="largest index")
    p.set_defaults(func=_cmd_quat)

    p = sub.add_parser("verify", help="run randomized property suites")
    p.add_argument("--suite", default="all",
                   choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", default=None, metavar="MS",
                   help="wall-time cap, ms or suffixed like 60s (default "
                        f"RECURRA_BUDGET_MS or {verify.DEFAULT_BUDGET_MS})")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "pisano" and not args.ladder and args.mod is None:
        parser.error("pisano needs --mod (or --ladder P R)")
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
