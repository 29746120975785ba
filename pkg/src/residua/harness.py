"""Exhaustive checks of each implemented theorem over configurable ranges."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .core import (
    DomainError,
    Modulus,
    UsageError,
    complement_of,
    mod_mul,
    mod_pow,
)
from .cosets import nonresidue_count, partition_units
from .order import (
    _order,
    is_primitive_root,
    multiplicative_order,
    residue_cycle,
    residue_of_power,
    unity_root_sign,
)
from .power import FORM_AXN_EQ_DN, find_pair_witness, transfer_witness

THEOREM_IDS = (
    "T1", "T2", "T5", "T6", "T7", "T8", "T9", "T13", "T14", "T15",
    "T16", "T17", "T18", "T19", "T20", "S36", "C52",
)

DESCRIPTIONS = {
    "T1": "no power of a coprime base is divisible by the prime modulus",
    "T2": "residues multiply: a^(u+v) leaves the product of the residues of a^u and a^v",
    "T5": "a^m = 1 exactly when the order divides m",
    "T6": "if a^(2n) = 1 mod a prime then a^n = +1 or -1",
    "T7": "the first lam powers leave pairwise distinct residues",
    "T8": "residues repeat in sections of length lam; exponents reduce mod lam",
    "T9": "full residue coverage is equivalent to order p-1 (primitive root)",
    "T13": "the order lam divides p-1",
    "T14": "a^(p-1) = 1 mod p for a coprime to the prime p (Fermat)",
    "T15": "a^q = 1 with q prime and a != 1 forces the order to be exactly q",
    "T16": "shifting the base by multiples of p never changes power residues",
    "T17": "an n-th power a = c^n satisfies a^((p-1)/n) = 1",
    "T18": "a*b^n = c^n forces a^((p-1)/n) = 1",
    "T19": "a^((p-1)/n) = 1 guarantees a witness y with a*x^n = y^n",
    "T20": "a known witness pair transfers to any coprime d",
    "S36": "mod a composite, no power residue is a nontrivial divisor of the modulus",
    "C52": "p divides a^(p-1) - b^(p-1) for a, b coprime to the prime p",
}


@dataclass(frozen=True)
class Bounds:
    """Enumeration ranges: primes up to max_prime; bases capped by max_base
    (None: all units); exponent caps default per theorem, tied to the order."""

    max_prime: int = 200
    max_base: int | None = None
    max_exponent: int | None = None


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    bounds: Bounds
    cases_checked: int
    counterexamples: tuple[dict, ...]
    elapsed: float = field(compare=False, default=0.0)

    @property
    def passed(self) -> bool:
        return self.cases_checked > 0 and not self.counterexamples


def _primes(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(limit + 1) if sieve[i]]


def _bases(p: int, b: Bounds) -> range:
    top = p - 1 if b.max_base is None else min(b.max_base, p - 1)
    return range(1, top + 1)


def _check_t1(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        for a in _bases(p, b):
            top = b.max_exponent or 3 * _order(a, p)
            r = 1
            for e in range(1, top + 1):
                r = r * a % p
                cases += 1
                if r == 0:
                    bad.append({"p": p, "a": a, "e": e})
    return cases, bad


def _check_t2(b: Bounds):
    cases, bad = 0, []
    top = b.max_exponent or 12
    for p in _primes(b.max_prime):
        mod = Modulus(p)
        for a in _bases(p, b):
            pows = [mod_pow(a, e, mod) for e in range(2 * top + 1)]
            for u in range(1, top + 1):
                for v in range(1, top + 1):
                    cases += 1
                    if mod_mul(pows[u], pows[v]).canonical != pows[u + v].canonical:
                        bad.append({"p": p, "a": a, "u": u, "v": v})
    return cases, bad


def _check_t5(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        for a in _bases(p, b):
            lam = _order(a, p)
            top = b.max_exponent or 3 * lam
            r = 1
            for m in range(1, top + 1):
                r = r * a % p
                cases += 1
                if (r == 1) != (m % lam == 0):
                    bad.append({"p": p, "a": a, "m": m})
    return cases, bad


def _check_t6(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        mod = Modulus(p)
        for a in _bases(p, b):
            a2 = a * a % p
            t = 1
            top = min(b.max_exponent or p, p)
            for n in range(1, top + 1):
                t = t * a2 % p  # t = a^(2n)
                if t != 1:
                    continue
                cases += 1
                if unity_root_sign(a, n, mod) not in (1, -1) or mod_pow(
                    a, n, mod
                ).balanced not in (1, -1):
                    bad.append({"p": p, "a": a, "n": n})
    return cases, bad


def _check_t7(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        mod = Modulus(p)
        for a in _bases(p, b):
            cycle = [r.canonical for r in residue_cycle(a, mod)]
            cases += 1
            if len(set(cycle)) != len(cycle) or cycle[0] != 1:
                bad.append({"p": p, "a": a})
    return cases, bad


def _check_t8(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        mod = Modulus(p)
        for a in _bases(p, b):
            lam = _order(a, p)
            top = b.max_exponent or 3 * lam
            for x in range(top + 1):
                cases += 1
                if residue_of_power(a, x, mod).canonical != mod_pow(a, x, mod).canonical:
                    bad.append({"p": p, "a": a, "x": x})
    return cases, bad


def _check_t9(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        mod = Modulus(p)
        units = set(range(1, p))
        for a in _bases(p, b):
            covered = {r.canonical for r in residue_cycle(a, mod)} == units
            cases += 1
            if is_primitive_root(a, mod) != covered:
                bad.append({"p": p, "a": a})
    return cases, bad


def _check_t13(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        mod = Modulus(p)
        for a in _bases(p, b):
            rec = multiplicative_order(a, mod)
            cases += 1
            if (p - 1) % rec.lam != 0 or rec.index * rec.lam != p - 1:
                bad.append({"p": p, "a": a, "lam": rec.lam})
    return cases, bad


def _check_t14(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        mod = Modulus(p)
        for a in _bases(p, b):
            cases += 1
            if mod_pow(a, p - 1, mod).canonical != 1:
                bad.append({"p": p, "a": a})
    return cases, bad


def _check_t15(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        mod = Modulus(p)
        qs = _primes(min(b.max_exponent or p, p))
        for a in _bases(p, b):
            if a % p == 1:
                continue
            for q in qs:
                if pow(a, q, p) != 1:
                    continue
                cases += 1
                if multiplicative_order(a, mod).lam != q:
                    bad.append({"p": p, "a": a, "q": q})
    return cases, bad


def _check_t16(b: Bounds):
    cases, bad = 0, []
    top_m = b.max_exponent or 12
    for p in _primes(b.max_prime):
        mod = Modulus(p)
        for a in _bases(p, b):
            if a % p == 0:
                continue
            for alpha in (1, 2, 3):
                for m in range(1, top_m + 1):
                    cases += 1
                    base_r = mod_pow(a, m, mod)
                    if mod_pow(a + alpha * p, m, mod).canonical != base_r.canonical:
                        bad.append({"p": p, "a": a, "alpha": alpha, "m": m})
                        continue
                    if m % 2 == 1 and base_r.canonical != 0:
                        if (
                            mod_pow(alpha * p - a, m, mod).canonical
                            != complement_of(base_r).canonical
                        ):
                            bad.append(
                                {"p": p, "a": a, "alpha": alpha, "m": m, "odd": True}
                            )
    return cases, bad


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    out += [n // d for d in reversed(out) if d * d != n]
    return out


def _check_t17(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        mod = Modulus(p)
        for n in _divisors(p - 1):
            m = (p - 1) // n
            for c in _bases(p, b):
                a = pow(c, n, p)
                cases += 1
                if mod_pow(a, m, mod).canonical != 1:
                    bad.append({"p": p, "n": n, "c": c, "a": a})
    return cases, bad


def _check_t18(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        for n in _divisors(p - 1):
            m = (p - 1) // n
            nth = [0] + [pow(x, n, p) for x in range(1, p)]
            sat = {a for a in range(1, p) if pow(a, m, p) == 1}
            for bb in _bases(p, b):
                inv_bn = pow(nth[bb], p - 2, p)
                for c in _bases(p, b):
                    a = nth[c] * inv_bn % p
                    cases += 1
                    if a not in sat:
                        bad.append({"p": p, "n": n, "b": bb, "c": c, "a": a})
    return cases, bad


def _check_t19(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        mod = Modulus(p)
        for n in _divisors(p - 1):
            m = (p - 1) // n
            sat = [a for a in range(1, p) if pow(a, m, p) == 1]
            if len(sat) != m:
                bad.append({"p": p, "n": n, "count": len(sat)})
            for a in sat:
                cases += 1
                w = find_pair_witness(a, n, mod, x_fixed=1)
                if (a * pow(w.x, n, p) - pow(w.y, n, p)) % p != 0:
                    bad.append({"p": p, "n": n, "a": a, "x": w.x, "y": w.y})
    return cases, bad


def _check_t20(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        mod = Modulus(p)
        for n in _divisors(p - 1):
            m = (p - 1) // n
            sat = [a for a in range(1, p) if pow(a, m, p) == 1]
            for a in sat:
                for d in _bases(p, b):
                    cases += 1
                    w = transfer_witness(a, n, mod, d)
                    if w.form == FORM_AXN_EQ_DN:
                        ok = (a * pow(w.x, n, p) - pow(d, n, p)) % p == 0
                    else:
                        ok = (a * pow(d, n, p) - pow(w.x, n, p)) % p == 0
                    if not ok:
                        bad.append({"p": p, "n": n, "a": a, "d": d, "x": w.x})
    return cases, bad


def _check_s36(b: Bounds):
    cases, bad = 0, []
    prime_set = set(_primes(b.max_prime))
    for m in range(4, b.max_prime + 1):
        if m in prime_set:
            continue
        divisors = {d for d in range(2, m) if m % d == 0}
        for a in _bases(m, b):
            if math.gcd(a, m) != 1:
                continue
            start = a % m
            r = start
            while True:
                cases += 1
                if r in divisors:
                    bad.append({"m": m, "a": a, "residue": r})
                    break
                r = r * a % m
                if r == start:
                    break
    return cases, bad


def _check_c52(b: Bounds):
    cases, bad = 0, []
    for p in _primes(b.max_prime):
        mod = Modulus(p)
        fermat = {a: mod_pow(a, p - 1, mod).canonical for a in _bases(p, b)}
        items = sorted(fermat)
        for i, a in enumerate(items):
            for bb in items[i + 1 :]:
                cases += 1
                if (fermat[a] - fermat[bb]) % p != 0:
                    bad.append({"p": p, "a": a, "b": bb})
    return cases, bad


_CHECKERS = {
    "T1": _check_t1,
    "T2": _check_t2,
    "T5": _check_t5,
    "T6": _check_t6,
    "T7": _check_t7,
    "T8": _check_t8,
    "T9": _check_t9,
    "T13": _check_t13,
    "T14": _check_t14,
    "T15": _check_t15,
    "T16": _check_t16,
    "T17": _check_t17,
    "T18": _check_t18,
    "T19": _check_t19,
    "T20": _check_t20,
    "S36": _check_s36,
    "C52": _check_c52,
}


def verify_theorem(theorem_id: str, bounds: Bounds = Bounds()) -> TheoremReport:
    """Enumerate the theorem's parameter range and report any counterexamples."""
    tid = theorem_id.upper()
    if tid not in _CHECKERS:
        raise UsageError(
            f"unknown theorem id {theorem_id!r}; choose from {', '.join(THEOREM_IDS)}"
        )
    if bounds.max_prime < 2:
        raise DomainError(f"empty range: max_prime = {bounds.max_prime}")
    start = time.perf_counter()
    cases, bad = _CHECKERS[tid](bounds)
    elapsed = time.perf_counter() - start
    return TheoremReport(tid, bounds, cases, tuple(bad), elapsed)


def verify_all(bounds: Bounds = Bounds()) -> list[TheoremReport]:
    """Run every theorem check; callers decide pass/fail from the reports."""
    return [verify_theorem(tid, bounds) for tid in THEOREM_IDS]
