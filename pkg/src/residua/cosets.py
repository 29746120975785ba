"""Partition of the units mod a prime into the power-residue set and its cosets."""
from __future__ import annotations

from dataclasses import dataclass

from .core import Modulus
from .order import multiplicative_order, residue_cycle


@dataclass(frozen=True)
class CosetPartition:
    """The residue set R = {1, a, ..., a^(lam-1)} and the translates k*R tiling 1..p-1.

    Each coset is stored in generative order k, k*a, k*a^2, ...; the
    representative k is the smallest positive integer not covered by the
    preceding cosets.
    """

    modulus: Modulus
    base: int
    lam: int
    cosets: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]

    @property
    def index(self) -> int:
        return len(self.cosets)


def partition_units(a: int, p: Modulus) -> CosetPartition:
    """Split 1..p-1 into the residue set of a and its non-residue cosets."""
    rec = multiplicative_order(a, p)
    pv = p.value
    cycle = [r.canonical for r in residue_cycle(a, p)]
    covered: set[int] = set()
    cosets: list[tuple[int, ...]] = []
    reps: list[int] = []
    k = 1
    while len(covered) < pv - 1:
        while k in covered:
            k += 1
        coset = tuple(k * c % pv for c in cycle)
        cosets.append(coset)
        reps.append(k)
        covered.update(coset)
    return CosetPartition(p, a, rec.lam, tuple(cosets), tuple(reps))


def nonresidue_count(a: int, p: Modulus) -> int:
    """How many units mod p never occur as a residue of a power of a: p-1-lam."""
    rec = multiplicative_order(a, p)
    count = rec.group_size - rec.lam
    assert count % rec.lam == 0, "non-residues come in whole cosets"
    return count
