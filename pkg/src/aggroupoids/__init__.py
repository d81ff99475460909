"""Finite Abel-Grassmann groupoids and their congruence theory.

The package works with complete Cayley tables. magma holds the carrier
type and classification, congruences the kernel-trace machinery,
canonical the distinguished congruences and their operators, structure
the semilattice-of-groups decomposition, lattice the exhaustive
congruence-lattice reports, enumeration the table generators, and
verify the executable theorem checks behind all of it.
"""

from .canonical import (
    CanonicalSuite,
    ag_group_closure,
    canonical_suite,
    e_unitary_closure,
    e_unitary_factorization,
    kernel_max,
    kernel_min,
    least_ag_group_congruence,
    least_e_unitary,
    max_idempotent_pure,
    max_idempotent_separating,
    semilattice_closure,
    trace_max,
    trace_min,
)
from .congruences import (
    Congruence,
    CongruencePair,
    EquivRelation,
    Quotient,
    congruence_generated_by,
    congruence_join,
    congruence_meet,
    congruence_pair_of,
    format_partition,
    from_kernel_trace,
    induced_congruence,
    is_congruence,
    is_congruence_pair,
    kernel,
    parse_partition,
    quotient,
    syntactic_congruence,
    trace,
)
from .enumeration import (
    CLASSES,
    EnumerationSpec,
    are_isomorphic,
    canonical_form,
    census,
    enumerate_groupoids,
)
from .errors import AlgebraError, BoundExceeded, NotCompletelyInverse, ParseError
from .lattice import (
    LatticeReport,
    all_congruences,
    e_unitary_congruences,
    format_lattice_report,
    fundamental_congruences,
    is_modular_sublattice,
    kernel_class,
    normal_subgroupoids,
    trace_class,
    trace_homomorphism,
)
from .magma import (
    ClassificationReport,
    Groupoid,
    classify,
    format_mag,
    idempotents,
    inverses_of,
    parse_mag,
    same_operation,
)
from .structure import (
    StrongSemilattice,
    compose,
    decompose,
    derived_groupoid,
    format_strong_semilattice,
    natural_order,
    parse_strong_semilattice,
    square_part,
    upward_closure,
)
from .verify import TheoremCheck, checks, run_all

__all__ = [
    "AlgebraError",
    "BoundExceeded",
    "CLASSES",
    "CanonicalSuite",
    "ClassificationReport",
    "Congruence",
    "CongruencePair",
    "EnumerationSpec",
    "EquivRelation",
    "Groupoid",
    "LatticeReport",
    "NotCompletelyInverse",
    "ParseError",
    "Quotient",
    "StrongSemilattice",
    "TheoremCheck",
    "ag_group_closure",
    "all_congruences",
    "are_isomorphic",
    "canonical_form",
    "canonical_suite",
    "census",
    "checks",
    "classify",
    "compose",
    "congruence_generated_by",
    "congruence_join",
    "congruence_meet",
    "congruence_pair_of",
    "decompose",
    "derived_groupoid",
    "e_unitary_closure",
    "e_unitary_congruences",
    "e_unitary_factorization",
    "enumerate_groupoids",
    "format_lattice_report",
    "format_mag",
    "format_partition",
    "format_strong_semilattice",
    "from_kernel_trace",
    "fundamental_congruences",
    "idempotents",
    "induced_congruence",
    "inverses_of",
    "is_congruence",
    "is_congruence_pair",
    "is_modular_sublattice",
    "kernel",
    "kernel_class",
    "kernel_max",
    "kernel_min",
    "least_ag_group_congruence",
    "least_e_unitary",
    "max_idempotent_pure",
    "max_idempotent_separating",
    "natural_order",
    "normal_subgroupoids",
    "parse_mag",
    "parse_partition",
    "parse_strong_semilattice",
    "quotient",
    "run_all",
    "same_operation",
    "semilattice_closure",
    "square_part",
    "syntactic_congruence",
    "trace",
    "trace_class",
    "trace_homomorphism",
    "trace_max",
    "trace_min",
    "upward_closure",
]
