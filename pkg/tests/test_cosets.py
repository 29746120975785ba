import math

import pytest

from residua import (
    DomainError,
    Modulus,
    multiplicative_order,
    nonresidue_count,
    partition_units,
    residue_cycle,
)

from conftest import primes_upto


class TestPartitionUnits:
    def test_small_case(self):
        part = partition_units(2, Modulus(7))
        assert part.cosets == ((1, 2, 4), (3, 6, 5))
        assert part.representatives == (1, 3)

    def test_primitive_root_single_coset(self):
        part = partition_units(3, Modulus(7))
        assert part.index == 1
        assert set(part.cosets[0]) == {1, 2, 3, 4, 5, 6}

    def test_order_one_base(self):
        part = partition_units(1, Modulus(5))
        assert part.cosets == ((1,), (2,), (3,), (4,))
        assert part.representatives == (1, 2, 3, 4)

    def test_composite_rejected(self):
        with pytest.raises(DomainError):
            partition_units(3, Modulus(8))

    def test_first_coset_is_residue_cycle(self):
        for p in primes_upto(100):
            mod = Modulus(p)
            for a in range(1, p):
                part = partition_units(a, mod)
                cycle = tuple(r.canonical for r in residue_cycle(a, mod))
                assert part.cosets[0] == cycle
                assert part.representatives[0] == 1

    def test_disjoint_cover_and_size(self):
        for p in primes_upto(300):
            mod = Modulus(p)
            for a in range(1, p):
                part = partition_units(a, mod)
                flat = [c for coset in part.cosets for c in coset]
                assert len(flat) == p - 1
                assert set(flat) == set(range(1, p))
                assert all(len(c) == part.lam for c in part.cosets)
                assert part.index * part.lam == p - 1

    def test_closure_under_base_multiplication(self):
        for p in primes_upto(80):
            mod = Modulus(p)
            for a in range(1, p):
                for coset in partition_units(a, mod).cosets:
                    members = set(coset)
                    assert all(c * a % p in members for c in coset)

    def test_nonmembership_propagation(self):
        for p in primes_upto(80):
            mod = Modulus(p)
            for a in range(1, p):
                part = partition_units(a, mod)
                residues = set(part.cosets[0])
                for coset in part.cosets[1:]:
                    assert residues.isdisjoint(coset)

    def test_counting_chain(self):
        for p in primes_upto(300):
            mod = Modulus(p)
            for a in range(1, p):
                lam = multiplicative_order(a, mod).lam
                if lam < (p - 1) / 2:
                    assert p - 1 - lam >= 2 * lam


class TestNonresidueCount:
    def test_small_case(self):
        assert nonresidue_count(2, Modulus(7)) == 3

    def test_primitive_root(self):
        assert nonresidue_count(3, Modulus(7)) == 0

    def test_worked_example(self):
        assert nonresidue_count(7, Modulus(641)) == 320

    def test_is_multiple_of_order(self):
        for p in primes_upto(200):
            mod = Modulus(p)
            for a in range(1, p):
                lam = multiplicative_order(a, mod).lam
                count = nonresidue_count(a, mod)
                assert count == p - 1 - lam
                assert count % lam == 0


class TestCompositeExclusion:
    def test_no_aliquot_part_among_residues(self):
        for m in range(4, 500):
            mod = Modulus(m)
            if mod.prime:
                continue
            divisors = {d for d in range(2, m) if m % d == 0}
            for a in range(1, m):
                if math.gcd(a, m) != 1:
                    continue
                r = start = a % m
                while True:
                    assert r not in divisors
                    r = r * a % m
                    if r == start:
                        break
