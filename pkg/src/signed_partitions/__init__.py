"""Signed partitions of [+-n], type-B Stirling numbers of the second kind,
and an explicit balls-into-urns bijection behind

    m^n = sum_k S_B(n,k) (m-1)(m-3)...(m-2k+1)     (m odd).
"""

from .bijection import (
    UrnAssignment,
    cyclic_successor,
    decode,
    encode,
    enumerate_assignments,
    verify_bijection,
)
from .core import SignedPartition, SignedRGS, format, from_rgs, parse, to_rgs, validate
from .enumeration import count_by_pairs, enumerate_partitions
from .stirling import (
    basis_coefficients_B,
    falling_factorial_A,
    falling_factorial_B,
    stirling2,
    stirling2_B,
    verify_identity_A,
    verify_identity_B,
)

__all__ = [
    "SignedPartition",
    "SignedRGS",
    "UrnAssignment",
    "basis_coefficients_B",
    "count_by_pairs",
    "cyclic_successor",
    "decode",
    "encode",
    "enumerate_assignments",
    "enumerate_partitions",
    "falling_factorial_A",
    "falling_factorial_B",
    "format",
    "from_rgs",
    "parse",
    "stirling2",
    "stirling2_B",
    "to_rgs",
    "validate",
    "verify_bijection",
    "verify_identity_A",
    "verify_identity_B",
]
