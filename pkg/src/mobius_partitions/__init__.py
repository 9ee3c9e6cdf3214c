"""Partition statistics, Mobius/totient sieves, truncated q-series, and
mechanical verification of the identities relating them."""

from mobius_partitions.arith import MultiplicativeTable, build_sieve, mobius, mobius_scaled, totient
from mobius_partitions.series import TruncatedSeries, lambert_sum, pochhammer, reciprocal
from mobius_partitions.partitions import (
    Partition,
    PartitionTable,
    SrTable,
    backward_difference,
    count_restricted,
    enumerate_partitions,
    partition_table_gf,
    partition_table_pentagonal,
    sr_table_enum,
    sr_table_gf,
)
from mobius_partitions.identities import (
    CoeffTables,
    VerificationReport,
    build_a,
    build_b,
    build_coeff_tables,
    verify_b_symmetry,
    verify_corollary,
    verify_lambert,
    verify_lemma1,
    verify_phi_identities,
    verify_prime_corollary,
    verify_sr_oracle,
    verify_theorem1,
    verify_theorem2,
    verify_weighted_corollary,
)

__version__ = "0.1.0"

__all__ = [
    "MultiplicativeTable",
    "build_sieve",
    "mobius",
    "mobius_scaled",
    "totient",
    "TruncatedSeries",
    "lambert_sum",
    "pochhammer",
    "reciprocal",
    "Partition",
    "PartitionTable",
    "SrTable",
    "backward_difference",
    "count_restricted",
    "enumerate_partitions",
    "partition_table_gf",
    "partition_table_pentagonal",
    "sr_table_enum",
    "sr_table_gf",
    "CoeffTables",
    "VerificationReport",
    "build_a",
    "build_b",
    "build_coeff_tables",
    "verify_b_symmetry",
    "verify_corollary",
    "verify_lambert",
    "verify_lemma1",
    "verify_phi_identities",
    "verify_prime_corollary",
    "verify_sr_oracle",
    "verify_theorem1",
    "verify_theorem2",
    "verify_weighted_corollary",
]
