"""Exact modular arithmetic on machine-scale integers.

Residues are carried in two equivalent forms: canonical in [0, p) and
balanced in (-p/2, p/2].  All inputs are bounded to 63-bit magnitude;
Python's integers make the double-width intermediate products exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field

MAX_MAGNITUDE = 1 << 63


class DomainError(ValueError):
    """A value violates an operation's mathematical preconditions."""


class UsageError(ValueError):
    """Operands were combined in a way that is never meaningful."""


# Deterministic Miller-Rabin witness set, exact for all n < 3.3 * 10^24
# (covers the full 64-bit range).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all 0 <= n < 2**64."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Modulus:
    """A divisor >= 2 with its primality decided at construction."""

    value: int
    prime: bool = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.value, int):
            raise DomainError(f"modulus must be an integer, got {self.value!r}")
        if self.value < 2:
            raise DomainError(f"modulus must be >= 2, got {self.value}")
        if self.value >= MAX_MAGNITUDE:
            raise DomainError("modulus exceeds the 63-bit input bound")
        object.__setattr__(self, "prime", is_prime(self.value))


@dataclass(frozen=True)
class Residue:
    """A congruence class mod p, canonical representative in [0, p).

    Internal constructors always supply a reduced canonical value; use
    normalize() for arbitrary signed input.
    """

    modulus: Modulus
    canonical: int

    @property
    def balanced(self) -> int:
        """The representative in (-p/2, p/2]; +p/2 at the even-modulus tie."""
        p = self.modulus.value
        return self.canonical - p if 2 * self.canonical > p else self.canonical

    def display_value(self) -> int:
        """Balanced form whenever it is strictly smaller in magnitude."""
        b = self.balanced
        return b if abs(b) < self.canonical else self.canonical

    def __str__(self) -> str:
        b = self.balanced
        if abs(b) < self.canonical:
            return f"{b} ({self.canonical})"
        return str(self.canonical)


@dataclass(frozen=True)
class TraceRow:
    """One step of an exponentiation trace: the exponent reached and its residue."""

    exponent: int
    residue: Residue


def normalize(n: int, p: Modulus) -> Residue:
    """Reduce a signed integer to its residue class mod p."""
    if abs(n) >= MAX_MAGNITUDE:
        raise DomainError("input exceeds the 63-bit magnitude bound")
    return Residue(p, n % p.value)


def mod_mul(r: Residue, s: Residue) -> Residue:
    """Product of two residue classes sharing a modulus."""
    if r.modulus.value != s.modulus.value:
        raise UsageError(
            f"modulus mismatch: {r.modulus.value} vs {s.modulus.value}"
        )
    p = r.modulus.value
    return Residue(r.modulus, r.canonical * s.canonical % p)


def mod_pow(a: int, e: int, p: Modulus) -> Residue:
    """Residue of a**e mod p by binary square-and-multiply."""
    if e < 0:
        raise DomainError(f"exponent must be nonnegative, got {e}")
    if abs(a) >= MAX_MAGNITUDE:
        raise DomainError("base exceeds the 63-bit magnitude bound")
    pv = p.value
    base = a % pv
    acc = 1 % pv
    while e:
        if e & 1:
            acc = acc * base % pv
        base = base * base % pv
        e >>= 1
    return Residue(p, acc)


def mod_pow_trace(a: int, e: int, p: Modulus) -> list[TraceRow]:
    """Square-and-multiply trace for a**e mod p.

    Emits the full squaring chain a, a^2, a^4, ... followed by the
    accumulated products for the set bits of e; a multiply-in step whose
    exponent coincides with a squaring row is not repeated.  The final
    row's exponent is e.
    """
    if e < 1:
        raise DomainError(f"trace exponent must be >= 1, got {e}")
    if abs(a) >= MAX_MAGNITUDE:
        raise DomainError("base exceeds the 63-bit magnitude bound")
    pv = p.value
    rows: list[TraceRow] = []
    sq = a % pv
    sq_exp = 1
    squares = {1: sq}
    rows.append(TraceRow(1, Residue(p, sq)))
    for _ in range(e.bit_length() - 1):
        sq = sq * sq % pv
        sq_exp *= 2
        squares[sq_exp] = sq
        rows.append(TraceRow(sq_exp, Residue(p, sq)))
    acc = None
    acc_exp = 0
    bit = 1
    while bit <= e:
        if e & bit:
            if acc is None:
                acc, acc_exp = squares[bit], bit
            else:
                acc = acc * squares[bit] % pv
                acc_exp += bit
                rows.append(TraceRow(acc_exp, Residue(p, acc)))
        bit <<= 1
    return rows


def complement_of(r: Residue) -> Residue:
    """The residue s with r + s = p; powers leaving r and s sum to a multiple of p."""
    if r.canonical == 0:
        raise DomainError("the zero residue has no complement")
    return Residue(r.modulus, r.modulus.value - r.canonical)
