"""Exhaustive congruence lattices, markers, sublattice analysis."""

import pytest

from aggroupoids import (
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
from aggroupoids.errors import AlgebraError, NotASublattice, OrderTooLarge
from aggroupoids.lattice import commuting_check, iter_partitions
from aggroupoids.magma import Groupoid
from aggroupoids.samples import chain_semilattice


def test_congruences_of_the_running_example(f1_report):
    assert [c.partition_text() for c in f1_report.congruences] == [
        "a | b | e | f",
        "a e | b | f",
        "a b | e f",
        "a e | b f",
        "a b e f",
    ]
    assert f1_report.bottom == 0
    assert f1_report.top == 4


def test_meet_join_tables(f1_report):
    assert f1_report.meet == (
        (0, 0, 0, 0, 0),
        (0, 1, 0, 1, 1),
        (0, 0, 2, 0, 2),
        (0, 1, 0, 3, 3),
        (0, 1, 2, 3, 4),
    )
    assert f1_report.join == (
        (0, 1, 2, 3, 4),
        (1, 1, 4, 3, 4),
        (2, 4, 2, 4, 4),
        (3, 3, 4, 3, 4),
        (4, 4, 4, 4, 4),
    )


def test_markers(f1_report):
    marked = [m.names() for m in f1_report.markers]
    assert marked == [
        ("idempotent-separating", "idempotent-pure", "e-unitary"),
        ("idempotent-separating", "e-disjunctive"),
        ("idempotent-pure", "ag-group", "e-unitary", "e-disjunctive"),
        ("idempotent-separating", "semilattice", "e-unitary", "fundamental"),
        ("semilattice", "ag-group", "e-unitary", "fundamental", "e-disjunctive"),
    ]


def test_index_of(f1_report):
    for i, c in enumerate(f1_report.congruences):
        assert f1_report.index_of(c.rel) == i
    with pytest.raises(KeyError):
        f1_report.index_of(f1_report.congruences[0].rel.restrict((0, 1)))


def test_whole_lattice_is_a_pentagon(f1_report):
    # five congruences in the minimal non-modular configuration
    modular, witness = is_modular_sublattice(f1_report, range(5))
    assert not modular
    assert witness == (0, 1, 2, 3, 4)


def test_separating_interval_is_modular_and_commuting(f1_report):
    separating = [
        i for i, m in enumerate(f1_report.markers) if m.idempotent_separating
    ]
    assert separating == [0, 1, 3]
    modular, witness = is_modular_sublattice(f1_report, separating)
    assert modular and witness is None
    assert commuting_check(f1_report, separating)


def test_sublattice_check_rejects_non_sublattices(f1_report):
    with pytest.raises(NotASublattice):
        is_modular_sublattice(f1_report, [1, 2])  # join 4 missing


def test_trace_homomorphism(f1):
    hom = trace_homomorphism(f1)
    assert hom.image == (0, 0, 1, 0, 1)
    assert hom.section == (3, 4)
    assert [c.partition_text() for c in hom.target.congruences] == [
        "e | f",
        "e f",
    ]


def test_trace_classes(f1_report):
    assert trace_class(f1_report, 0) == (0, 1, 3)
    assert trace_class(f1_report, 2) == (2, 4)


def test_kernel_classes(f1_report):
    assert kernel_class(f1_report, 0) == (0, 2)
    assert kernel_class(f1_report, 1) == (1,)
    assert kernel_class(f1_report, 3) == (3, 4)


def test_fundamental_congruences(f1_report):
    assert fundamental_congruences(f1_report) == (3, 4)


def test_normal_subgroupoids(f1):
    assert [sorted(n) for n in normal_subgroupoids(f1)] == [
        [2, 3],
        [0, 1, 2, 3],
    ]


def test_e_unitary_families(f1_report):
    members, families = e_unitary_congruences(f1_report)
    assert members == (0, 2, 3, 4)
    assert [(sorted(n), interval) for n, interval in families] == [
        ([2, 3], (0, 2)),
        ([0, 1, 2, 3], (3, 4)),
    ]


def test_collapse_lattice(collapse):
    report = all_congruences(collapse)
    assert [c.partition_text() for c in report.congruences] == [
        "t0 | t1 | b0 | b1",
        "t0 t1 | b0 | b1",
        "t0 | t1 | b0 b1",
        "t0 t1 b0 | b1",
        "t0 t1 | b0 b1",
        "t0 t1 b0 b1",
    ]
    members, families = e_unitary_congruences(report)
    assert members == (1, 3, 4, 5)
    assert [(sorted(n), interval) for n, interval in families] == [
        ([0, 1, 2], (1, 3)),
        ([0, 1, 2, 3], (4, 5)),
    ]


def test_iter_partitions_counts_bell_numbers():
    assert sum(1 for _ in iter_partitions(1)) == 1
    assert sum(1 for _ in iter_partitions(3)) == 5
    assert sum(1 for _ in iter_partitions(4)) == 15
    assert sum(1 for _ in iter_partitions(5)) == 52


def test_all_congruences_respects_the_bound():
    table = tuple(tuple(min(i, j) for j in range(7)) for i in range(7))
    g = Groupoid(tuple(f"x{i}" for i in range(7)), table)
    with pytest.raises(OrderTooLarge):
        all_congruences(g)
    report = all_congruences(g, bound=7)
    assert len(report.congruences) > 1


def test_report_format_is_stable(f1_report):
    text = format_lattice_report(f1_report)
    assert text.startswith("congruences:\n  0: a | b | e | f\n")
    assert "meet:" in text and "join:" in text and "markers:" in text
    assert text == format_lattice_report(f1_report)


def test_semilattice_congruences_are_all_partitions():
    # on a chain every order-convex grouping is a congruence; spot check count
    report = all_congruences(chain_semilattice(2))
    assert len(report.congruences) == 2
