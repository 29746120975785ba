"""Command-line front end: every operation, in text or JSON."""
from __future__ import annotations

import argparse
import json
import sys

from .core import (
    DomainError,
    Modulus,
    Residue,
    UsageError,
    mod_pow,
    mod_pow_trace,
)
from .cosets import nonresidue_count, partition_units
from .factor import cyclotomic_sum, factor_aq1
from .harness import DESCRIPTIONS, THEOREM_IDS, Bounds, verify_all, verify_theorem
from .order import is_primitive_root, multiplicative_order, residue_cycle
from .power import find_nth_root, find_pair_witness, nth_residue_test, transfer_witness

FORMAT_VERSION = 1

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_VERIFY_FAILED = 3


def _fmt(r: Residue, balanced: bool) -> str:
    if balanced and abs(r.balanced) < r.canonical:
        return f"{r.balanced} ({r.canonical})"
    return str(r.canonical)


def _residue_payload(r: Residue) -> dict:
    return {"canonical": r.canonical, "balanced": r.balanced}


def _cmd_modexp(args):
    p = Modulus(args.p)
    result = {}
    lines = []
    if args.trace:
        rows = mod_pow_trace(args.a, args.e, p)
        result["trace"] = [
            {"exponent": row.exponent, **_residue_payload(row.residue)} for row in rows
        ]
        width = len(str(args.e))
        for row in rows:
            lines.append(f"{row.exponent:>{width}} -> {_fmt(row.residue, args.balanced)}")
        final = rows[-1].residue
    else:
        final = mod_pow(args.a, args.e, p)
        lines.append(f"{args.a}^{args.e} mod {args.p} = {_fmt(final, args.balanced)}")
    result.update(_residue_payload(final))
    return lines, result, EXIT_OK


def _cmd_order(args):
    rec = multiplicative_order(args.a, Modulus(args.p))
    lines = [
        f"order of {args.a} mod {args.p}: lambda = {rec.lam} "
        f"(p-1 = {rec.group_size}, index = {rec.index})"
    ]
    return lines, {"lambda": rec.lam, "group_size": rec.group_size, "index": rec.index}, EXIT_OK


def _cmd_cycle(args):
    p = Modulus(args.p)
    cycle = residue_cycle(args.a, p)
    lines = [" ".join(_fmt(r, args.balanced) for r in cycle)]
    return (
        lines,
        {"lambda": len(cycle), "cycle": [r.canonical for r in cycle]},
        EXIT_OK,
    )


def _cmd_cosets(args):
    part = partition_units(args.a, Modulus(args.p))
    lines = [
        f"lambda = {part.lam}, cosets = {part.index}, "
        f"non-residues = {nonresidue_count(args.a, part.modulus)}"
    ]
    for rep, coset in zip(part.representatives, part.cosets):
        lines.append(f"k={rep}: " + " ".join(str(c) for c in coset))
    result = {
        "lambda": part.lam,
        "index": part.index,
        "representatives": list(part.representatives),
        "cosets": [list(c) for c in part.cosets],
    }
    return lines, result, EXIT_OK


def _cmd_primitive_root(args):
    p = Modulus(args.p)
    rec = multiplicative_order(args.a, p)
    flag = is_primitive_root(args.a, p)
    verdict = "is" if flag else "is not"
    lines = [f"{args.a} {verdict} a primitive root mod {args.p} (lambda = {rec.lam})"]
    return lines, {"is_primitive_root": flag, "lambda": rec.lam}, EXIT_OK


def _cmd_power_residue(args):
    p = Modulus(args.p)
    flag = nth_residue_test(args.a, args.n, p)
    m = (args.p - 1) // args.n
    crit = mod_pow(args.a, m, p)
    verdict = "is" if flag else "is not"
    lines = [
        f"{args.a} {verdict} an {args.n}-th power residue mod {args.p} "
        f"({args.a}^{m} = {_fmt(crit, args.balanced)})"
    ]
    result = {
        "is_nth_residue": flag,
        "criterion_power": _residue_payload(crit),
    }
    if args.root:
        c = find_nth_root(args.a, args.n, p)
        result["root"] = c
        lines.append(
            f"least root: {c}" if c is not None else "no n-th root exists"
        )
    return lines, result, EXIT_OK


def _cmd_witness(args):
    p = Modulus(args.p)
    if args.d is not None and args.x is not None:
        raise UsageError("--x and --d are mutually exclusive")
    if args.d is not None:
        w = transfer_witness(args.a, args.n, p, args.d)
        lines = [f"x = {w.x}, d = {w.y}, form: {w.form}"]
        result = {"x": w.x, "d": w.y, "form": w.form}
    else:
        w = find_pair_witness(args.a, args.n, p, x_fixed=args.x)
        lines = [f"x = {w.x}, y = {w.y}, form: {w.form}"]
        result = {"x": w.x, "y": w.y, "form": w.form}
    return lines, result, EXIT_OK


def _certificate_text(f, q: int) -> str:
    if f.certificate == "divides_a_minus_1":
        return f"{f.prime} divides a-1"
    if f.certificate == "form_2nq_plus_1":
        return f"{f.prime} = 2*{f.n}*{q}+1"
    if f.certificate == "form_nq_plus_1":
        return f"{f.prime} = {f.n}*{q}+1"
    return f"{f.prime} = q divides the sum"


def _factor_payload(factors) -> list[dict]:
    return [
        {
            "prime": f.prime,
            "multiplicity": f.multiplicity,
            "certificate": f.certificate,
            "n": f.n,
        }
        for f in factors
    ]


def _cmd_factor_aq1(args):
    fac = factor_aq1(args.a, args.q, candidate_limit=args.limit)
    parts = [
        f"{f.prime}" + (f"^{f.multiplicity}" if f.multiplicity > 1 else "")
        for f in fac.factors
    ]
    if not fac.complete:
        parts.append(f"[unfactored {fac.remainder}]")
    lines = [
        f"{fac.value} = " + " x ".join(parts) + "; "
        + "; ".join(_certificate_text(f, args.q) for f in fac.factors)
    ]
    result = {
        "value": fac.value,
        "factors": _factor_payload(fac.factors),
        "complete": fac.complete,
        "remainder": fac.remainder,
    }
    return lines, result, EXIT_OK


def _cmd_cyclotomic(args):
    value, factors = cyclotomic_sum(args.a, args.q)
    parts = [
        f"{f.prime}" + (f"^{f.multiplicity}" if f.multiplicity > 1 else "")
        for f in factors
    ]
    lines = [
        f"{value} = " + " x ".join(parts) + "; "
        + "; ".join(_certificate_text(f, args.q) for f in factors)
    ]
    return lines, {"value": value, "factors": _factor_payload(factors)}, EXIT_OK


def _cmd_verify(args):
    bounds = Bounds(
        max_prime=args.max_prime,
        max_base=args.max_base,
        max_exponent=args.max_exponent,
    )
    if args.theorem:
        reports = [verify_theorem(args.theorem, bounds)]
    else:
        reports = verify_all(bounds)
    lines = []
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        lines.append(
            f"{r.theorem_id:<4} {status:<4} cases={r.cases_checked:<9} "
            f"elapsed={r.elapsed:.3f}s  {DESCRIPTIONS[r.theorem_id]}"
        )
        for cx in r.counterexamples[:5]:
            lines.append(f"     counterexample: {cx}")
    all_pass = all(r.passed for r in reports)
    lines.append("all theorems verified" if all_pass else "VERIFICATION FAILED")
    result = {
        "reports": [
            {
                "theorem": r.theorem_id,
                "pass": r.passed,
                "cases_checked": r.cases_checked,
                "counterexamples": list(r.counterexamples),
                "elapsed": r.elapsed,
            }
            for r in reports
        ],
        "all_pass": all_pass,
    }
    if args.report_dir:
        from .report import write_report

        paths = write_report(reports, args.report_dir)
        print("wrote " + ", ".join(str(p) for p in paths), file=sys.stderr)
    return lines, result, EXIT_OK if all_pass else EXIT_VERIFY_FAILED


def _add_common(sub):
    sub.add_argument("--json", action="store_true", help="emit a JSON envelope")
    sub.add_argument(
        "--balanced",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="prefer the balanced residue form in text output (default on)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="residua",
        description="Power residues modulo primes: orders, cosets, residue "
        "criteria, and a^q - 1 factorization.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("modexp", help="a^e mod p by square-and-multiply")
    sp.add_argument("a", type=int)
    sp.add_argument("e", type=int)
    sp.add_argument("p", type=int)
    sp.add_argument("--trace", action="store_true", help="print the squaring chain")
    _add_common(sp)
    sp.set_defaults(func=_cmd_modexp)

    sp = subs.add_parser("order", help="multiplicative order of a mod a prime p")
    sp.add_argument("a", type=int)
    sp.add_argument("p", type=int)
    _add_common(sp)
    sp.set_defaults(func=_cmd_order)

    sp = subs.add_parser("cycle", help="one full period of the residues of a^i")
    sp.add_argument("a", type=int)
    sp.add_argument("p", type=int)
    _add_common(sp)
    sp.set_defaults(func=_cmd_cycle)

    sp = subs.add_parser("cosets", help="residue set and non-residue cosets mod p")
    sp.add_argument("a", type=int)
    sp.add_argument("p", type=int)
    _add_common(sp)
    sp.set_defaults(func=_cmd_cosets)

    sp = subs.add_parser("primitive-root", help="does a generate all units mod p?")
    sp.add_argument("a", type=int)
    sp.add_argument("p", type=int)
    _add_common(sp)
    sp.set_defaults(func=_cmd_primitive_root)

    sp = subs.add_parser("power-residue", help="n-th power residue criterion")
    sp.add_argument("a", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("p", type=int)
    sp.add_argument("--root", action="store_true", help="also search the least n-th root")
    _add_common(sp)
    sp.set_defaults(func=_cmd_power_residue)

    sp = subs.add_parser("witness", help="witness pair with a*x^n = y^n mod p")
    sp.add_argument("a", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("p", type=int)
    sp.add_argument("--x", type=int, default=None, help="fix x (default 1)")
    sp.add_argument("--d", type=int, default=None, help="transfer the witness to d")
    _add_common(sp)
    sp.set_defaults(func=_cmd_witness)

    sp = subs.add_parser("factor-aq1", help="factor a^q - 1 via restricted divisor forms")
    sp.add_argument("a", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--limit", type=int, default=None, help="candidate form bound n")
    _add_common(sp)
    sp.set_defaults(func=_cmd_factor_aq1)

    sp = subs.add_parser("cyclotomic", help="(a^q - 1)/(a - 1) with certified factors")
    sp.add_argument("a", type=int)
    sp.add_argument("q", type=int)
    _add_common(sp)
    sp.set_defaults(func=_cmd_cyclotomic)

    sp = subs.add_parser("verify", help="run the theorem checks")
    sp.add_argument(
        "theorem",
        nargs="?",
        default=None,
        help=f"one of {', '.join(THEOREM_IDS)} (default: all)",
    )
    sp.add_argument("--max-prime", type=int, default=200)
    sp.add_argument("--max-base", type=int, default=None)
    sp.add_argument("--max-exponent", type=int, default=None)
    sp.add_argument("--report-dir", default=None, help="write CSV and figures here")
    _add_common(sp)
    sp.set_defaults(func=_cmd_verify)

    return parser


def _echo_inputs(args: argparse.Namespace) -> dict:
    skip = {"func", "command", "json", "balanced"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        lines, result, code = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.json:
        envelope = {
            "command": args.command,
            "inputs": _echo_inputs(args),
            "result": result,
            "format_version": FORMAT_VERSION,
        }
        print(json.dumps(envelope, indent=2))
    else:
        for line in lines:
            print(line)
    return code


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
