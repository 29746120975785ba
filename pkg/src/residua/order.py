"""Multiplicative order of a base modulo a prime and derived operations."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import DomainError, Modulus, Residue, mod_pow


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division, as (prime, multiplicity) pairs."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            m = 0
            while n % d == 0:
                n //= d
                m += 1
            out.append((d, m))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@dataclass(frozen=True)
class OrderRecord:
    """The minimal exponent lam with base**lam = 1 mod a prime modulus."""

    base: int
    modulus: Modulus
    lam: int
    group_size: int
    index: int


def _require_prime_coprime(a: int, p: Modulus) -> int:
    if not p.prime:
        raise DomainError(f"modulus {p.value} is composite; a prime is required")
    a_mod = a % p.value
    if a_mod == 0:
        raise DomainError(f"base {a} is divisible by the modulus {p.value}")
    return a_mod


# Memoized helper; results are identical to an uncached computation.
@lru_cache(maxsize=None)
def _order(a_mod: int, p_value: int) -> int:
    # Divisor descent: start from p-1 (which always works) and strip
    # prime factors while the power still leaves 1.
    lam = p_value - 1
    for f, _ in factorize(p_value - 1):
        while lam % f == 0 and pow(a_mod, lam // f, p_value) == 1:
            lam //= f
    return lam


def multiplicative_order(a: int, p: Modulus) -> OrderRecord:
    """Least lam >= 1 with a**lam = 1 mod the prime p."""
    a_mod = _require_prime_coprime(a, p)
    lam = _order(a_mod, p.value)
    group = p.value - 1
    return OrderRecord(a, p, lam, group, group // lam)


def is_primitive_root(a: int, p: Modulus) -> bool:
    """Whether the powers of a run through every nonzero residue mod p."""
    rec = multiplicative_order(a, p)
    return rec.lam == rec.group_size


def residue_cycle(a: int, p: Modulus) -> list[Residue]:
    """The residues of a^0, a^1, ..., a^(lam-1): one full period, pairwise distinct."""
    a_mod = _require_prime_coprime(a, p)
    lam = _order(a_mod, p.value)
    pv = p.value
    out = []
    r = 1
    for _ in range(lam):
        out.append(Residue(p, r))
        r = r * a_mod % pv
    return out


def residue_of_power(a: int, x: int, p: Modulus) -> Residue:
    """Residue of a**x for arbitrarily large x, by reducing x mod the order."""
    if x < 0:
        raise DomainError(f"exponent must be nonnegative, got {x}")
    a_mod = _require_prime_coprime(a, p)
    lam = _order(a_mod, p.value)
    return mod_pow(a_mod, x % lam, p)


def unity_root_sign(a: int, n: int, p: Modulus) -> int:
    """Sign of a**n mod a prime p when a**(2n) = 1: always +1 or -1."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    _require_prime_coprime(a, p)
    if mod_pow(a, 2 * n, p).canonical != 1:
        raise DomainError(
            f"{a}^(2*{n}) is not congruent to 1 mod {p.value}"
        )
    b = mod_pow(a, n, p).balanced
    assert b in (1, -1) or p.value == 2, "square roots of unity mod a prime are +-1"
    # p = 2 collapses +1 and -1 into the same class.
    return 1 if b == 1 else -1
