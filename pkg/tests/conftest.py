"""Shared independent oracles: deliberately naive, kept apart from the library."""
from __future__ import annotations


def naive_pow(a: int, e: int, p: int) -> int:
    """e successive modular multiplications."""
    r = 1 % p
    for _ in range(e):
        r = r * a % p
    return r


def naive_order(a: int, p: int) -> int:
    """Incremental scan for the least exponent leaving 1."""
    r = a % p
    lam = 1
    while r != 1:
        r = r * a % p
        lam += 1
        assert lam < p, "order scan escaped the group"
    return lam


def trial_division(n: int) -> dict[int, int]:
    """Unrestricted trial-division factorization (small n only)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def primes_upto(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i in range(limit + 1) if sieve[i]]
