import itertools

import pytest

from bilattice import weights
from bilattice.lattice import SystemSpec
from bilattice.perm import all_perms
from bilattice.ring import one
from bilattice.solvability import (
    r_tables_agree,
    verify_fused_ybe,
    verify_train,
    verify_unfused_ybe,
)


def test_unfused_ybe_smallest():
    rep = verify_unfused_ybe(1, 1, 2)
    assert rep.passed and rep.total_boundaries > 0


def test_unfused_ybe_two_by_two():
    assert verify_unfused_ybe(2, 2, 2).passed


def test_unfused_ybe_rectangular():
    assert verify_unfused_ybe(1, 3, 2).passed
    assert verify_unfused_ybe(3, 1, 2).passed


def test_unfused_ybe_four_by_four():
    # the largest scale at which the equation was machine-checked upstream
    rep = verify_unfused_ybe(4, 4, 3)
    assert rep.passed and rep.total_boundaries == 1114112


def test_fused_ybe_small():
    assert verify_fused_ybe(1, 1, 2).passed
    assert verify_fused_ybe(2, 1, 1).passed
    assert verify_fused_ybe(1, 2, 1).passed


def test_ybe_bad_ranges():
    with pytest.raises(ValueError):
        verify_unfused_ybe(0, 1, 1)
    with pytest.raises(ValueError):
        verify_fused_ybe(1, 1, -1)


def test_mutated_weight_table_fails_sweep(monkeypatch):
    # perturbing a single table entry by +1 must produce a concrete
    # counterexample boundary in the sweep
    original = weights._pass_weight

    def perturbed(spin, c, d, n, z, num_z):
        w = original(spin, c, d, n, z, num_z)
        if spin == ("c", 1) and (c, d) == (2, 1) and n == 1:
            return w + one(num_z)
        return w

    monkeypatch.setattr(weights, "_pass_weight", perturbed)
    rep = verify_unfused_ybe(2, 2, 2)
    assert not rep.passed
    assert rep.failures
    desc, lhs, rhs = rep.failures[0]
    assert lhs != rhs


def test_fail_fast_stops_early(monkeypatch):
    original = weights._pass_weight

    def perturbed(spin, c, d, n, z, num_z):
        w = original(spin, c, d, n, z, num_z)
        if spin[0] == "c" and n >= 1:
            return w + one(num_z)
        return w

    monkeypatch.setattr(weights, "_pass_weight", perturbed)
    rep = verify_unfused_ybe(2, 2, 2, fail_fast=True)
    assert not rep.passed
    assert len(rep.failures) == 1


def test_report_json_shape():
    rep = verify_unfused_ybe(1, 1, 1)
    data = rep.to_json()
    assert data["passed"] is True
    assert data["failures"] == []
    assert data["mode"] == "unfused"


def test_r_tables_agree_small():
    for s in (1, 2, 3):
        for r in (1, 2, 3):
            assert r_tables_agree(s, r) == []


def test_train_two_state_figure(fig3_spec):
    for i in (1, 2):
        assert verify_train(fig3_spec, i)


def test_train_index_range(fig3_spec):
    with pytest.raises(ValueError):
        verify_train(fig3_spec, 3)
    spec = SystemSpec(1, 2, (0,), (1,), (1,), (1,), (1,))
    with pytest.raises(ValueError):
        verify_train(spec, 1)


def test_train_stateless_quadruple():
    # all four systems empty: both sides vanish
    spec = SystemSpec(3, 4, (2, 1, 0), (1, 2, 3), (1, 2, 3), (1, 2, 3), (1, 2, 3))
    assert verify_train(spec, 1)
    assert verify_train(spec, 2)


def test_train_exhaustive_r2():
    perms = list(all_perms(2))
    for w1, w2, w3, w4 in itertools.product(perms, repeat=4):
        for lam in [(1, 0), (0, 0), (1, 1)]:
            spec = SystemSpec(2, 2, lam, w1, w2, w3, w4)
            assert verify_train(spec, 1)


def test_parallel_sweep_matches_serial():
    serial = verify_unfused_ybe(2, 2, 1)
    parallel = verify_unfused_ybe(2, 2, 1, jobs=2)
    assert serial.passed == parallel.passed
    assert serial.total_boundaries == parallel.total_boundaries
    assert serial.failures == parallel.failures
