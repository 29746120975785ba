"""n-th power residue criteria and constructive witness search."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .core import DomainError, Modulus, mod_pow

FORM_AXN_EQ_YN = "a*x^n = y^n"
FORM_AXN_EQ_DN = "a*x^n = d^n"
FORM_ADN_EQ_XN = "a*d^n = x^n"


@dataclass(frozen=True)
class PowerResidueInstance:
    """A degree-n residue question mod the prime p = cofactor * degree + 1."""

    modulus: Modulus
    degree: int
    cofactor: int
    candidate: int

    @classmethod
    def build(cls, a: int, n: int, p: Modulus) -> "PowerResidueInstance":
        if not p.prime:
            raise DomainError(f"modulus {p.value} is composite; a prime is required")
        if n < 1:
            raise DomainError(f"degree must be >= 1, got {n}")
        if (p.value - 1) % n != 0:
            raise DomainError(f"{n} does not divide p - 1 = {p.value - 1}")
        if math.gcd(a, p.value) != 1:
            raise DomainError(f"candidate {a} shares a factor with {p.value}")
        return cls(p, n, (p.value - 1) // n, a)


@dataclass(frozen=True)
class WitnessPair:
    """Integers satisfying the congruence named by the form tag."""

    x: int
    y: int
    form: str


# Least n-th root of each n-th power value mod p.  Memoized; results are
# identical to an uncached rebuild.
@lru_cache(maxsize=256)
def _nth_power_roots(n: int, p_value: int) -> dict[int, int]:
    roots: dict[int, int] = {}
    for x in range(1, p_value):
        roots.setdefault(pow(x, n, p_value), x)
    return roots


def nth_residue_test(a: int, n: int, p: Modulus) -> bool:
    """Whether a is an n-th power residue mod p: a**((p-1)/n) = 1."""
    inst = PowerResidueInstance.build(a, n, p)
    return mod_pow(a, inst.cofactor, p).canonical == 1


def find_nth_root(a: int, n: int, p: Modulus) -> int | None:
    """Least c in 1..p-1 with c**n = a mod p, or None when a is a non-residue."""
    PowerResidueInstance.build(a, n, p)
    return _nth_power_roots(n, p.value).get(a % p.value)


def scaled_residue_test(a: int, b: int, c: int, n: int, p: Modulus) -> bool:
    """Whether a*b^n = c^n mod p; a true answer forces the residue criterion."""
    if not p.prime:
        raise DomainError(f"modulus {p.value} is composite; a prime is required")
    pv = p.value
    if n < 1 or (pv - 1) % n != 0:
        raise DomainError(f"{n} must divide p - 1 = {pv - 1}")
    if math.gcd(b, pv) != 1 or math.gcd(c, pv) != 1:
        raise DomainError("b and c must be coprime to the modulus")
    holds = (a * pow(b, n, pv) - pow(c, n, pv)) % pv == 0
    if holds:
        assert mod_pow(a, (pv - 1) // n, p).canonical == 1
    return holds


def find_pair_witness(
    a: int, n: int, p: Modulus, x_fixed: int | None = None
) -> WitnessPair:
    """Least y with a*x^n = y^n mod p, for x = x_fixed (default 1).

    Requires a**((p-1)/n) = 1 mod p, which guarantees a solution for
    every coprime x.
    """
    inst = PowerResidueInstance.build(a, n, p)
    pv = p.value
    if mod_pow(a, inst.cofactor, p).canonical != 1:
        raise DomainError(
            f"hypothesis fails: {a}^{inst.cofactor} is not 1 mod {pv}"
        )
    x = 1 if x_fixed is None else x_fixed
    if math.gcd(x, pv) != 1:
        raise DomainError(f"x = {x} shares a factor with {pv}")
    target = a * pow(x, n, pv) % pv
    for y in range(1, pv):
        if pow(y, n, pv) == target:
            return WitnessPair(x, y, FORM_AXN_EQ_YN)
    raise AssertionError("a witness y < p always exists under the hypothesis")


def transfer_witness(a: int, n: int, p: Modulus, d: int) -> WitnessPair:
    """Least x making a*x^n = d^n or a*d^n = x^n hold mod p.

    The two congruences (and their sign-flipped readings, which coincide
    mod p) are tried per candidate x in that order; the stored y is d.
    """
    inst = PowerResidueInstance.build(a, n, p)
    pv = p.value
    if math.gcd(d, pv) != 1:
        raise DomainError(f"d = {d} shares a factor with {pv}")
    if mod_pow(a, inst.cofactor, p).canonical != 1:
        raise DomainError(
            f"hypotheses unsatisfiable: {a}^{inst.cofactor} is not 1 mod {pv}"
        )
    roots = _nth_power_roots(n, pv)
    dn = pow(d, n, pv)
    a_inv = pow(a % pv, pv - 2, pv)
    candidates: list[tuple[int, str]] = []
    x1 = roots.get(dn * a_inv % pv)  # a*x^n = d^n
    if x1 is not None:
        candidates.append((x1, FORM_AXN_EQ_DN))
    x2 = roots.get(a * dn % pv)  # a*d^n = x^n; always solvable here
    if x2 is not None:
        candidates.append((x2, FORM_ADN_EQ_XN))
    if not candidates:
        raise AssertionError("a*d^n is an n-th power whenever a^m = 1")
    x, form = min(candidates, key=lambda c: (c[0], c[1] != FORM_AXN_EQ_DN))
    return WitnessPair(x, d, form)
