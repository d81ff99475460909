"""The theorem-check registry and its mutation-detection behavior."""

import pytest

from aggroupoids import canonical, verify
from aggroupoids.congruences import Congruence, EquivRelation
from aggroupoids.errors import AlgebraError, BoundExceeded


def test_registry_integrity():
    checks = verify.checks()
    ids = [c.check_id for c in checks]
    assert len(ids) == len(set(ids))
    assert len(ids) >= 30
    for c in checks:
        assert c.check_id.startswith("thm-")
        assert c.statement
        assert c.universe


def test_trivial_bound_passes():
    results = verify.run_all(bound=1)
    assert len(results) == len(verify.checks())
    assert all(r.passed for r in results)


def test_small_bound_passes_everything():
    results = verify.run_all(bound=2)
    assert all(r.passed for r in results)
    assert all(r.detail == "" for r in results)
    by_id = {r.check_id: r for r in results}
    assert by_id["thm-kernel-trace"].instances > 0
    assert by_id["thm-dual-census-agreement"].instances == 1


def test_workers_do_not_change_the_report():
    assert verify.run_all(bound=2) == verify.run_all(bound=2, workers=2)


def test_only_selects_a_single_check():
    results = verify.run_all(bound=2, only="thm-mu-least-semilattice")
    assert len(results) == 1
    assert results[0].check_id == "thm-mu-least-semilattice"
    assert results[0].passed


def test_only_rejects_unknown_ids():
    with pytest.raises(AlgebraError):
        verify.run_all(bound=2, only="thm-nonexistent")


def test_bound_gate():
    with pytest.raises(BoundExceeded):
        verify.run_all(bound=5)
    with pytest.raises(BoundExceeded):
        verify.run_all(bound=0)


def test_corrupted_component_formula_is_detected(monkeypatch):
    """Grouping by the square instead of the idempotent square must be
    caught by the scan of the exhaustively enumerated lattice."""

    def corrupted(g):
        key = {a: g.mul(a, a) for a in g.elements}
        pairs = [
            (a, b) for a in g.elements for b in g.elements if key[a] == key[b]
        ]
        return Congruence(g, EquivRelation.from_pairs(g.order, pairs))

    monkeypatch.setattr(canonical, "max_idempotent_separating", corrupted)
    results = verify.run_all(bound=4, only="thm-mu-least-semilattice")
    assert len(results) == 1
    assert not results[0].passed
    # the detail replays as a table: a count line then count table rows
    lines = results[0].detail.splitlines()
    sizes = [int(line) for line in lines if line.strip().isdigit()]
    assert sizes and all(size >= 1 for size in sizes)


def test_mutation_does_not_leak_between_runs():
    results = verify.run_all(bound=2, only="thm-mu-least-semilattice")
    assert results[0].passed
