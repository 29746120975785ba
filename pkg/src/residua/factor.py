"""Form-restricted factorization of a**q - 1 for prime exponent q.

Every prime divisor either divides a - 1 or lies in the progression
2nq + 1 (nq + 1 when q = 2), so trial division only needs to probe that
progression.  Each factor carries a certificate naming which case it is.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import MAX_MAGNITUDE, DomainError, is_prime
from .order import factorize

CERT_DIVIDES_A_MINUS_1 = "divides_a_minus_1"
CERT_FORM_2NQ_PLUS_1 = "form_2nq_plus_1"
CERT_FORM_NQ_PLUS_1 = "form_nq_plus_1"
CERT_Q_DIVIDES_SUM = "q_divides_sum"


@dataclass(frozen=True)
class Factor:
    """A certified prime factor; n is the progression parameter when the
    certificate is a 2nq+1 / nq+1 form, else None."""

    prime: int
    multiplicity: int
    certificate: str
    n: int | None = None


@dataclass(frozen=True)
class Aq1Factorization:
    base: int
    exponent: int
    value: int
    factors: tuple[Factor, ...]
    complete: bool
    remainder: int  # 1 when complete; the unfactored cofactor otherwise

    def product(self) -> int:
        out = self.remainder
        for f in self.factors:
            out *= f.prime**f.multiplicity
        return out


def _form_step(q: int) -> int:
    # Odd q forces 2q | p-1 for form factors; q = 2 only forces 2 | p-1.
    return 2 if q == 2 else 2 * q


def _strip_a_minus_1(a: int, value: int) -> tuple[list[Factor], int]:
    factors = []
    rem = value
    if a > 2:
        for f, _ in factorize(a - 1):
            mult = 0
            while rem % f == 0:
                rem //= f
                mult += 1
            factors.append(Factor(f, mult, CERT_DIVIDES_A_MINUS_1))
    return factors, rem


def _sieve_form(
    rem: int, q: int, candidate_limit: int | None
) -> tuple[list[Factor], int, bool]:
    """Trial division restricted to the progression step*n + 1."""
    step = _form_step(q)
    cert = CERT_FORM_NQ_PLUS_1 if q == 2 else CERT_FORM_2NQ_PLUS_1
    factors = []
    hit_limit = False
    n = 1
    while True:
        cand = step * n + 1
        if cand * cand > rem:
            break
        if candidate_limit is not None and n > candidate_limit:
            hit_limit = True
            break
        mult = 0
        while rem % cand == 0:
            rem //= cand
            mult += 1
        if mult:
            factors.append(Factor(cand, mult, cert, cand // step))
        n += 1
    complete = True
    if rem > 1:
        if is_prime(rem) and (rem - 1) % step == 0:
            factors.append(Factor(rem, 1, cert, (rem - 1) // step))
            rem = 1
        else:
            # Only reachable when a user-supplied limit stopped the sieve
            # short of sqrt(rem).
            complete = not hit_limit
    return factors, rem, complete


def factor_aq1(
    a: int, q: int, candidate_limit: int | None = None
) -> Aq1Factorization:
    """Factor a**q - 1 (q prime) through the restricted divisor forms."""
    if a < 2:
        raise DomainError(f"base must be >= 2, got {a}")
    if q < 2:
        raise DomainError(f"exponent must be >= 2, got {q}")
    if not is_prime(q):
        raise DomainError(
            f"exponent {q} is composite; use reduce_composite_exponent"
        )
    value = a**q - 1
    if value >= MAX_MAGNITUDE:
        raise DomainError(f"{a}^{q} - 1 exceeds the 63-bit range")
    factors, rem = _strip_a_minus_1(a, value)
    form_factors, rem, complete = _sieve_form(rem, q, candidate_limit)
    factors.extend(form_factors)
    factors.sort(key=lambda f: f.prime)
    result = Aq1Factorization(a, q, value, tuple(factors), complete, rem if rem > 1 else 1)
    assert result.product() == value
    return result


def reduce_composite_exponent(a: int, e: int) -> list[tuple[int, str]]:
    """For composite e, the prime divisors d of e with a**d - 1 dividing a**e - 1."""
    if e < 4 or is_prime(e):
        raise DomainError(f"exponent {e} is prime; use factor_aq1")
    if a < 2:
        raise DomainError(f"base must be >= 2, got {a}")
    big = a**e - 1
    if big >= MAX_MAGNITUDE:
        raise DomainError(f"{a}^{e} - 1 exceeds the 63-bit range")
    out = []
    for d, _ in factorize(e):
        small = a**d - 1
        assert big % small == 0
        out.append((d, f"{small} divides {big}"))
    return out


def cyclotomic_sum(a: int, q: int) -> tuple[int, list[Factor]]:
    """(a**q - 1)/(a - 1) with its prime factors certified against the form.

    Every prime factor is 2nq + 1, except that q itself divides the sum
    exactly when a = 1 mod q; that factor is reported with its own tag.
    """
    if a < 2:
        raise DomainError(f"base must be >= 2, got {a}")
    if q == 2 or not is_prime(q):
        raise DomainError(f"exponent must be an odd prime, got {q}")
    value = (a**q - 1) // (a - 1)
    if value >= MAX_MAGNITUDE:
        raise DomainError("cyclotomic sum exceeds the 63-bit range")
    factors = []
    rem = value
    if a % q == 1:
        mult = 0
        while rem % q == 0:
            rem //= q
            mult += 1
        factors.append(Factor(q, mult, CERT_Q_DIVIDES_SUM))
    form_factors, rem, complete = _sieve_form(rem, q, None)
    assert complete and rem == 1
    factors.extend(form_factors)
    factors.sort(key=lambda f: f.prime)
    return value, factors
