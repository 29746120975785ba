"""Power residues modulo primes: exact arithmetic, orders, cosets,
residue criteria, witness search, and a^q - 1 factorization."""

from .core import (
    DomainError,
    Modulus,
    Residue,
    TraceRow,
    UsageError,
    complement_of,
    is_prime,
    mod_mul,
    mod_pow,
    mod_pow_trace,
    normalize,
)
from .cosets import CosetPartition, nonresidue_count, partition_units
from .factor import (
    Aq1Factorization,
    Factor,
    cyclotomic_sum,
    factor_aq1,
    reduce_composite_exponent,
)
from .harness import Bounds, TheoremReport, THEOREM_IDS, verify_all, verify_theorem
from .order import (
    OrderRecord,
    is_primitive_root,
    multiplicative_order,
    residue_cycle,
    residue_of_power,
    unity_root_sign,
)
from .power import (
    PowerResidueInstance,
    WitnessPair,
    find_nth_root,
    find_pair_witness,
    nth_residue_test,
    scaled_residue_test,
    transfer_witness,
)

__version__ = "0.1.0"

__all__ = [
    "Aq1Factorization",
    "Bounds",
    "CosetPartition",
    "DomainError",
    "Factor",
    "Modulus",
    "OrderRecord",
    "PowerResidueInstance",
    "Residue",
    "TheoremReport",
    "THEOREM_IDS",
    "TraceRow",
    "UsageError",
    "WitnessPair",
    "complement_of",
    "cyclotomic_sum",
    "factor_aq1",
    "find_nth_root",
    "find_pair_witness",
    "is_prime",
    "is_primitive_root",
    "mod_mul",
    "mod_pow",
    "mod_pow_trace",
    "multiplicative_order",
    "nonresidue_count",
    "normalize",
    "nth_residue_test",
    "partition_units",
    "reduce_composite_exponent",
    "residue_cycle",
    "residue_of_power",
    "scaled_residue_test",
    "transfer_witness",
    "unity_root_sign",
    "verify_all",
    "verify_theorem",
]
