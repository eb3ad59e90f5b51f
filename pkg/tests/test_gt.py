import itertools

import pytest

from bilattice import perm
from bilattice.gt import (
    InvalidPatternError,
    TwoColoredGT,
    check_axioms,
    enumerate_patterns,
    pattern_from_json,
    pattern_to_json,
    pattern_to_state,
    state_to_pattern,
)
from bilattice.lattice import SystemSpec, enumerate_states


def test_fig12_state_reproduces_pattern(fig12_spec):
    states = enumerate_states(fig12_spec)
    values = {state_to_pattern(st, fig12_spec).values() for st in states}
    assert ((4, 3, 0), (3, 0), (2,)) in values


def test_fig12_patterns_are_valid(fig12_spec):
    for st in enumerate_states(fig12_spec):
        g = state_to_pattern(st, fig12_spec)
        assert check_axioms(g, 3, 3) == []


def test_r1_trivial_state():
    spec = SystemSpec(1, 2, (1,), (1,), (1,), (1,), (1,))
    (st,) = enumerate_states(spec)
    g = state_to_pattern(st, spec)
    assert g.values() == ((1,),)


def test_axiom_violations_detected():
    # non-interleaving values
    g = TwoColoredGT((((2, 1, 1), (0, 2, 2)), ((3, 1, 1),)))
    assert any("interleaving" in v for v in check_axioms(g, 2, 2))
    # equal values with ranks out of order (axiom 4)
    g = TwoColoredGT((((1, 2, 2), (1, 1, 2)), ((1, 1, 2),)))
    assert any("axiom 4" in v for v in check_axioms(g, 2, 2))
    # bad shape
    g = TwoColoredGT((((1, 1, 1),), ((0, 1, 1),)))
    assert check_axioms(g, 1, 1) != []


def test_roundtrip_two_state_figure(fig3_spec):
    for st in enumerate_states(fig3_spec):
        g = state_to_pattern(st, fig3_spec)
        assert check_axioms(g, 3, 3) == []
        assert pattern_to_state(g, fig3_spec) == st


def test_roundtrip_exhaustive_r2():
    perms = list(perm.all_perms(2))
    for w1, w2, w3, w4 in itertools.product(perms, repeat=4):
        for lam, N in [((1, 0), 3), ((1, 1), 2)]:
            spec = SystemSpec(2, N, lam, w1, w2, w3, w4)
            for st in enumerate_states(spec):
                g = state_to_pattern(st, spec)
                assert check_axioms(g, 2, 2) == []
                assert pattern_to_state(g, spec) == st


def test_pattern_top_row_mismatch_raises(fig3_spec, fig12_spec):
    g = state_to_pattern(enumerate_states(fig12_spec)[0], fig12_spec)
    with pytest.raises(InvalidPatternError):
        pattern_to_state(g, fig3_spec)


def test_cardinality_equals_state_count():
    perms = list(perm.all_perms(3))
    checked = 0
    for w1, w4 in itertools.product(perms, repeat=2):
        spec = SystemSpec(3, 4, (2, 1, 0), w1, perm.identity(3), perm.identity(3), w4)
        assert len(enumerate_patterns(spec)) == len(enumerate_states(spec))
        checked += 1
    assert checked == 36


def test_stateless_spec_has_no_patterns(data_dir):
    from bilattice.lattice import load_system

    spec = load_system(str(data_dir / "nostates.json"))
    assert enumerate_patterns(spec) == []


def test_pattern_json_roundtrip(fig12_spec):
    g = state_to_pattern(enumerate_states(fig12_spec)[0], fig12_spec)
    data = pattern_to_json(g)
    assert data["rows"][-1][0][1].startswith("c")
    assert pattern_from_json(data) == g
