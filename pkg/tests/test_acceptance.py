"""Acceptance criteria, one test per criterion, all at exact (zero) tolerance.

Each test prints a single `criterion N [...]: PASS/FAIL` line (visible with
pytest -s, and in the failure output otherwise).  Criteria 1 and 3 encode
figure-caption state counts and the no-states classification at fully
repeated lambda; the engine reproduces neither (see the verified analysis in
the project notes), so those two tests fail honestly rather than being
weakened to match the implementation.
"""

import itertools
import random
import subprocess
import sys

from bilattice import classify, gt, lattice, merge, perm, recurrence, solvability
from bilattice.lattice import SystemSpec
from bilattice.ring import divided_diff, monomial, zero

PERMS3 = list(perm.all_perms(3))


def _criterion(num, name, ok, detail=""):
    line = f"criterion {num:2d} [{name}]: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


def _fig_spec(lam):
    return SystemSpec(
        3, 3, lam,
        perm.parse_cycles("(123)", 3), perm.identity(3),
        perm.parse_cycles("(12)", 3), perm.parse_cycles("(123)", 3),
    )


def test_criterion_01_figure_reproduction():
    counts = tuple(
        lattice.count_states(_fig_spec(lam)) for lam in [(2, 2, 0), (1, 1, 0), (0, 0, 0)]
    )
    _criterion(
        1, "figure state counts 2/1/0", counts == (2, 1, 0), f"got {counts}"
    )


def test_criterion_02_monostatic_figure(mono_spec):
    states = lattice.enumerate_states(mono_spec)
    ok = len(states) == 1
    z = classify.monostatic_partition(mono_spec)
    ok = ok and z == lattice.state_weight(states[0], mono_spec)
    ((key, coeff),) = z.terms.items()
    ok = ok and coeff == 1 and key[1:] == (18, 19, 14)
    _criterion(2, "monostatic figure", ok, f"Z = {z}")


def test_criterion_03_trichotomy_sweep():
    violations = {}
    for lam, N, full in [((6, 3, 0), 7, True), ((2, 1, 0), 7, False), ((0, 0, 0), 7, False)]:
        bad = 0
        for w1, w2, w3, w4 in itertools.product(PERMS3, repeat=4):
            spec = SystemSpec(3, N, lam, w1, w2, w3, w4)
            cat = classify.classify_system(spec).category
            if cat == classify.NO_STATES:
                if lattice.count_states(spec, limit=1) != 0:
                    bad += 1
            elif cat == classify.MONOSTATIC:
                if lattice.count_states(spec, limit=2) != 1:
                    bad += 1
            elif full:
                if lattice.count_states(spec, limit=1) < 1:
                    bad += 1
        violations[lam] = bad
    ok = sum(violations.values()) == 0
    _criterion(3, "trichotomy sweep S_3^4", ok, f"violations per lambda: {violations}")


def test_criterion_04_unfused_ybe():
    reports = {
        (s, r): solvability.verify_unfused_ybe(s, r, 3)
        for s in (1, 2, 3)
        for r in (1, 2, 3)
    }
    ok = all(rep.passed for rep in reports.values())
    total = sum(rep.total_boundaries for rep in reports.values())
    _criterion(4, "unfused Yang-Baxter sweep", ok, f"{total} boundaries")


def test_criterion_05_fused_ybe_and_r_tables():
    ok = all(
        solvability.verify_fused_ybe(s, r, 2).passed for s in (1, 2) for r in (1, 2)
    )
    ok = ok and all(
        solvability.r_tables_agree(s, r) == [] for s in (1, 2, 3) for r in (1, 2, 3)
    )
    _criterion(5, "fused Yang-Baxter sweep and R-table match", ok)


def test_criterion_06_recurrence_and_train(sweep3):
    bad_res = bad_train = 0
    for w3, w4 in itertools.product(PERMS3, repeat=2):
        table = sweep3.ztable(w3, w4)
        zfun = lambda w1, w2: table[(w1, w2)]
        for w1, w2 in itertools.product(PERMS3, repeat=2):
            spec = sweep3.spec(w1, w2, w3, w4)
            ptable = recurrence.PartitionTable(spec)
            ptable._cache = dict(table)
            for i in (1, 2):
                if not recurrence.recurrence_residual(spec, i, ptable).is_zero():
                    bad_res += 1
                if not solvability.verify_train(spec, i, zfun):
                    bad_train += 1
    ok = bad_res == 0 and bad_train == 0
    _criterion(
        6, "four-term recurrence and train identity",
        ok, f"residual fails {bad_res}, train fails {bad_train}",
    )


def test_criterion_07_solver_completeness(sweep3):
    checked = bad = 0
    for w3, w4 in itertools.product(PERMS3, repeat=2):
        table = sweep3.ztable(w3, w4)
        for w1, w2 in itertools.product(PERMS3, repeat=2):
            spec = sweep3.spec(w1, w2, w3, w4)
            res = classify.classify_system(spec)
            if not perm.bruhat_leq(res.wd, res.wc):
                continue
            checked += 1
            if recurrence.solve_partition(spec) != table[(w1, w2)]:
                bad += 1
    ok = bad == 0 and checked == 36 * 19
    _criterion(7, "recurrence solver equals enumeration", ok, f"{checked} systems")


def test_criterion_08_operator_algebra(sweep3):
    rng = random.Random(2024)
    ok = True
    for _ in range(100):
        p = zero(3)
        for _ in range(rng.randint(1, 6)):
            p = p + monomial(
                rng.choice([-3, -2, -1, 1, 2, 3]),
                rng.randint(-2, 3),
                [rng.randint(-3, 3) for _ in range(3)],
                3,
            )
        i = rng.randint(1, 2)
        d = {k: divided_diff(k, i, p) for k in (1, 2, 3, 4)}
        ok = ok and divided_diff(1, i, d[1]) == d[1]
        ok = ok and divided_diff(2, i, d[2]) == d[2]
        ok = ok and divided_diff(3, i, d[3]) == -d[3]
        ok = ok and divided_diff(4, i, d[4]) == -d[4]
        for a, b in [(1, 2), (1, 3), (2, 4), (3, 1), (4, 2), (4, 3)]:
            ok = ok and divided_diff(a, i, d[b]).is_zero()
    bad_dem = 0
    for w3, w4 in itertools.product(PERMS3, repeat=2):
        table = sweep3.ztable(w3, w4)
        for w1, w2 in itertools.product(PERMS3, repeat=2):
            spec = sweep3.spec(w1, w2, w3, w4)
            ptable = recurrence.PartitionTable(spec)
            ptable._cache = dict(table)
            for i in (1, 2):
                if not recurrence.verify_demazure(spec, i, ptable):
                    bad_dem += 1
    ok = ok and bad_dem == 0
    _criterion(8, "divided-difference operator algebra", ok, f"demazure fails {bad_dem}")


def test_criterion_09_color_merging():
    ok = merge.verify_local_merge(1, 1, 2).passed
    ok = ok and merge.verify_local_merge(1, 2, 2).passed
    ok = ok and merge.verify_local_merge(2, 1, 2).passed
    ok = ok and merge.verify_local_merge(2, 2, 2).passed
    for s, r in [(1, 2), (2, 2)]:
        for i in range(1, r):
            ok = ok and merge.verify_step_merge(s, r, i, 2).passed
    # telescoping family: the fibre over the merged straight-dolor vertex sums
    # to the single weight z
    z = monomial(1, 0, [1], 1)
    from bilattice.weights import content_from_dict, fused_completions

    b = content_from_dict({"c1.d2": 2, "c2.d2": 1, "c1.d1": 1}, 2, 2)
    target_bottom = merge.step_content(b, 2, 2, 1)
    total = zero(1)
    for a, d, w in fused_completions(b, ("d", 1), 2, 2):
        if merge.step_spin(a, 1) == ("d", 2) and merge.step_content(d, 2, 2, 1) == target_bottom:
            total = total + w
    ok = ok and total == z
    # global identities
    for w1, w3, w4 in itertools.product(perm.all_perms(2), repeat=3):
        ok = ok and merge.verify_global_colored(2, 3, (1, 0), w1, w3, w4).passed
    for w3, w4 in itertools.product(perm.all_perms(2), repeat=2):
        ok = ok and merge.verify_global_uncolored(2, 3, (1, 0), w3, w4).passed
    for lam in [(2, 1, 0), (2, 2, 0)]:
        for w1 in [(1, 2, 3), (2, 3, 1)]:
            for w3 in [(1, 2, 3), (2, 1, 3)]:
                for w4 in [(1, 2, 3), (3, 2, 1)]:
                    ok = ok and merge.verify_global_colored(3, 3, lam, w1, w3, w4).passed
        ok = ok and merge.verify_global_uncolored(3, 3, lam, (1, 2, 3), (1, 2, 3)).passed
        ok = ok and merge.verify_global_uncolored(3, 3, lam, (2, 3, 1), (1, 3, 2)).passed
    _criterion(9, "color merging identities", ok)


def test_criterion_10_gt_bijection(sweep3, fig12_spec):
    bad_roundtrip = states_seen = 0
    for w1, w2, w3, w4 in itertools.product(PERMS3, repeat=4):
        spec = sweep3.spec(w1, w2, w3, w4)
        for st in lattice.enumerate_states(spec):
            states_seen += 1
            g = gt.state_to_pattern(st, spec)
            if gt.check_axioms(g, 3, 3) or gt.pattern_to_state(g, spec) != st:
                bad_roundtrip += 1
    card_checked = bad_card = 0
    for w1, w2, w4 in itertools.product(PERMS3, repeat=3):
        if card_checked >= 60:
            break
        spec = SystemSpec(3, 4, (2, 1, 0), w1, w2, perm.identity(3), w4)
        card_checked += 1
        if len(gt.enumerate_patterns(spec)) != len(lattice.enumerate_states(spec)):
            bad_card += 1
    values = {
        gt.state_to_pattern(st, fig12_spec).values()
        for st in lattice.enumerate_states(fig12_spec)
    }
    ok = (
        bad_roundtrip == 0
        and bad_card == 0
        and card_checked >= 50
        and ((4, 3, 0), (3, 0), (2,)) in values
    )
    _criterion(
        10, "Gelfand-Tsetlin bijection",
        ok, f"{states_seen} states round-tripped, {card_checked} cardinalities",
    )


def test_criterion_11_determinism(data_dir, golden_dir):
    ok = True
    for args, golden in [
        (["partition", "--system", str(data_dir / "mono.json")], "partition_mono.txt"),
        (["partition", "--system", str(data_dir / "nostates.json")], "partition_nostates.txt"),
        (["solve", "--system", str(data_dir / "mono.json"), "--check"], "solve_mono.txt"),
        (
            ["verify", "ybe", "--mode", "unfused", "--colors", "1", "--dolors", "2", "--nmax", "1"],
            "ybe_unfused_1_2_1.json",
        ),
    ]:
        runs = [
            subprocess.run(
                [sys.executable, "-m", "bilattice.cli", *args],
                capture_output=True,
                text=True,
            )
            for _ in range(2)
        ]
        ok = ok and runs[0].stdout == runs[1].stdout == (golden_dir / golden).read_text()
        ok = ok and runs[0].returncode == 0
    _criterion(11, "byte-identical outputs", ok)
