"""2-colored Gelfand-Tsetlin patterns and the bijection with lattice states.

A pattern is a triangular array, rows of lengths r, r-1, ..., 1 from top to
bottom; each entry is (value, color index, dolor index).  Row r-i+1 of a
pattern records the bosons on the vertical edges above lattice row i: their
column labels, colors, and dolors, read left to right (columns decreasing,
ties broken by increasing monochrome rank).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perm
from .lattice import State, SystemSpec, spec_grid, top_boundary
from .weights import (
    boson_at_rank,
    boson_rank,
    chain_spins,
    content_add,
    empty_content,
)


class InvalidPatternError(ValueError):
    pass


@dataclass(frozen=True)
class TwoColoredGT:
    """rows[0] is the longest (top) row; entries are (value, color, dolor)."""

    rows: tuple

    def values(self) -> tuple:
        return tuple(tuple(e[0] for e in row) for row in self.rows)


def _rank(entry, s: int, r: int) -> int:
    return boson_rank(entry[1], entry[2], s, r)


def check_axioms(g: TwoColoredGT, s: int, r: int) -> list:
    """Return the list of axiom violations; empty iff the pattern is valid."""
    rows = g.rows
    out = []
    if len(rows) != r:
        return [f"shape: expected {r} rows, got {len(rows)}"]
    for a, row in enumerate(rows):
        if len(row) != r - a:
            return [f"shape: row {a} has {len(row)} entries, expected {r - a}"]
    for a, row in enumerate(rows):
        for j, e in enumerate(row):
            if e[0] < 0:
                out.append(f"negative value at row {a}, entry {j}")
            if not (1 <= e[1] <= s and 1 <= e[2] <= r):
                out.append(f"spin out of range at row {a}, entry {j}")
        for j in range(len(row) - 1):
            if row[j][0] < row[j + 1][0]:
                out.append(f"row {a} not weakly decreasing at entry {j}")
            elif row[j][0] == row[j + 1][0] and _rank(row[j], s, r) > _rank(row[j + 1], s, r):
                out.append(f"axiom 4: row {a} entries {j},{j+1} out of order")
    for a in range(len(rows) - 1):
        u, l = rows[a], rows[a + 1]
        m = len(u)
        for j in range(m - 1):
            if not (u[j][0] >= l[j][0] >= u[j + 1][0]):
                out.append(f"interleaving fails at rows {a},{a+1} entry {j}")
                continue
            # axiom 1: allowed colors for l[j]
            allowed = {u[k][1] for k in range(j + 1)}
            if l[j][0] == u[j + 1][0]:
                allowed.add(u[j + 1][1])
            if l[j][1] not in allowed:
                out.append(f"axiom 1 fails at rows {a},{a+1} entry {j}")
            # axiom 2: allowed dolors for l[j]
            if u[j][0] == l[j][0]:
                dallowed = {u[k][2] for k in range(j, m)}
            else:
                dallowed = {u[k][2] for k in range(j + 1, m)}
            if l[j][2] not in dallowed:
                out.append(f"axiom 2 fails at rows {a},{a+1} entry {j}")
            # axiom 5
            if l[j][0] == u[j + 1][0] and _rank(l[j], s, r) > _rank(u[j + 1], s, r):
                out.append(f"axiom 5 (lower vs upper) fails at rows {a},{a+1} entry {j}")
            if u[j][0] == l[j][0] and _rank(u[j], s, r) > _rank(l[j], s, r):
                out.append(f"axiom 5 (upper vs lower) fails at rows {a},{a+1} entry {j}")
        # axiom 3: multiplicities may not grow downward
        for idx, name in ((1, "colors"), (2, "dolors")):
            uc: dict = {}
            lc: dict = {}
            for e in u:
                uc[e[idx]] = uc.get(e[idx], 0) + 1
            for e in l:
                lc[e[idx]] = lc.get(e[idx], 0) + 1
            for v, n in lc.items():
                if n > uc.get(v, 0):
                    out.append(f"axiom 3 ({name}) fails at rows {a},{a+1} for index {v}")
        # axiom 6: the exiting color and dolor positions, when both vanish below
        lcol = {e[1] for e in l}
        ldol = {e[2] for e in l}
        kpos = [k for k, e in enumerate(u, start=1) if e[1] not in lcol]
        lpos = [k for k, e in enumerate(u, start=1) if e[2] not in ldol]
        if len(kpos) == 1 and len(lpos) == 1 and lpos[0] > kpos[0]:
            out.append(f"axiom 6 fails at rows {a},{a+1}: l={lpos[0]} > k={kpos[0]}")
    return out


def state_to_pattern(state: State, spec: SystemSpec) -> TwoColoredGT:
    """Read the pattern off the vertical edge contents of a state."""
    r = spec.r
    rows = []
    for layer in state.vcontent[:r]:
        entries = []
        for j in range(spec.N - 1, -1, -1):
            for k, n in enumerate(layer[j], start=1):
                c, d = boson_at_rank(k, r, r)
                entries.extend([(j, c, d)] * n)
        entries.sort(key=lambda e: (-e[0], boson_rank(e[1], e[2], r, r)))
        rows.append(tuple(entries))
    if [len(row) for row in rows] != list(range(r, 0, -1)):
        raise ValueError("state does not carry a triangular boson profile")
    return TwoColoredGT(tuple(rows))


def pattern_to_state(g: TwoColoredGT, spec: SystemSpec) -> State:
    """The unique state with the pattern's vertical contents.

    The horizontal fill of each row is forced by the count differences, so
    existence is checked and uniqueness is automatic.  Raises
    InvalidPatternError when the pattern is inconsistent with the spec.
    """
    r, N = spec.r, spec.N
    violations = check_axioms(g, r, r)
    if violations:
        raise InvalidPatternError("; ".join(violations))
    layers = []
    for row in g.rows:
        cols = [empty_content(r, r)] * N
        for value, c, d in row:
            if not 0 <= value < N:
                raise InvalidPatternError(f"entry value {value} outside columns 0..{N-1}")
            cols[value] = content_add(cols[value], c, d, r, r)
        layers.append(tuple(cols))
    layers.append(tuple(empty_content(r, r) for _ in range(N)))
    if layers[0] != top_boundary(spec):
        raise InvalidPatternError("top row does not match the spec's top boundary")
    grid = spec_grid(spec)
    hspin = []
    for i in range(1, r + 1):
        carried = grid.right[i - 1]
        row_spins = [carried]
        for j in range(N):
            res = chain_spins(layers[i - 1][j], layers[i][j], carried, r, r)
            if res is None:
                raise InvalidPatternError(f"no admissible fill at row {i}, column {j}")
            carried = res[0]
            row_spins.append(carried)
        if carried != grid.left[i - 1]:
            raise InvalidPatternError(f"row {i} exits with {carried}, boundary wants {grid.left[i-1]}")
        hspin.append(tuple(row_spins))
    return State(vcontent=tuple(layers), hspin=tuple(hspin))


def enumerate_patterns(spec: SystemSpec) -> list:
    """Generate all patterns of the spec's states, recursively and independently.

    Candidate rows are produced entry by entry from the interleaving bounds
    and axioms 1, 2, 4, 5, then filtered through the remaining axioms; the
    lattice row engine is never consulted, so the count cross-validates state
    enumeration.  Besides the axioms, each row-to-row transition must lose
    exactly the color and dolor that exit at the corresponding lattice row
    (the boundary data w1, w2); patterns violating that belong to a system
    with a different side boundary.
    """
    r = spec.r
    w1i = perm.inverse(spec.w1)
    w2i = perm.inverse(spec.w2)
    top = top_boundary(spec)
    entries = []
    for j in range(spec.N - 1, -1, -1):
        for k, n in enumerate(top[j], start=1):
            c, d = boson_at_rank(k, r, r)
            entries.extend([(j, c, d)] * n)
    entries.sort(key=lambda e: (-e[0], boson_rank(e[1], e[2], r, r)))
    first = tuple(entries)
    results = []

    def extend(rows: list) -> None:
        u = rows[-1]
        m = len(u)
        if m == 1:
            if (u[0][1], u[0][2]) != (w1i[r - 1], w2i[r - 1]):
                return
            g = TwoColoredGT(tuple(rows))
            if not check_axioms(g, r, r):
                results.append(g)
            return
        candidates: list = []

        def build(j: int, acc: list) -> None:
            if j == m - 1:
                candidates.append(tuple(acc))
                return
            for value in range(u[j][0], u[j + 1][0] - 1, -1):
                for c in range(1, r + 1):
                    for d in range(1, r + 1):
                        e = (value, c, d)
                        if acc and acc[-1][0] == value:
                            if _rank(acc[-1], r, r) > _rank(e, r, r):
                                continue
                        allowed = {u[k][1] for k in range(j + 1)}
                        if value == u[j + 1][0]:
                            allowed.add(u[j + 1][1])
                        if c not in allowed:
                            continue
                        if u[j][0] == value:
                            dallowed = {u[k][2] for k in range(j, m)}
                        else:
                            dallowed = {u[k][2] for k in range(j + 1, m)}
                        if d not in dallowed:
                            continue
                        if value == u[j + 1][0] and _rank(e, r, r) > _rank(u[j + 1], r, r):
                            continue
                        if u[j][0] == value and _rank(u[j], r, r) > _rank(e, r, r):
                            continue
                        build(j + 1, acc + [e])

        build(0, [])
        i = r - m + 1  # lattice row of this transition
        for cand in candidates:
            if _threads(u, cand, (w1i[i - 1], w2i[i - 1]), r):
                extend(rows + [cand])

    extend([first])
    results.sort(key=lambda g: g.rows)
    return results


def _threads(u, l, boundary, r: int) -> bool:
    """Feasibility of the horizontal threading between two pattern rows.

    The published pattern axioms do not exclude every impossible interleaving
    of several splits and merges inside one column, so the generator checks
    threading directly on pattern data: walking columns right to left, the
    per-boson count changes dictate a forced alternating sequence of splits
    and merges whose carried spin must start at the row's right-boundary
    color and end at its left-boundary dolor.
    """
    right_color, left_dolor = boundary
    upper: dict = {}
    lower: dict = {}
    for e in u:
        upper[(e[0], e[1], e[2])] = upper.get((e[0], e[1], e[2]), 0) + 1
    for e in l:
        lower[(e[0], e[1], e[2])] = lower.get((e[0], e[1], e[2]), 0) + 1
    maxcol = max(e[0] for e in u)
    spin = ("c", right_color)
    for v in range(maxcol + 1):
        events = []
        for key in set(k for k in upper if k[0] == v) | set(k for k in lower if k[0] == v):
            delta = lower.get(key, 0) - upper.get(key, 0)
            if delta == 0:
                continue
            if abs(delta) > 1:
                return False
            events.append((boson_rank(key[1], key[2], r, r), delta, key[1], key[2]))
        for _rk, delta, c, d in sorted(events, reverse=True):
            if delta == -1:  # split
                if spin != ("c", c):
                    return False
                spin = ("d", d)
            else:  # merge
                if spin != ("d", d):
                    return False
                spin = ("c", c)
    return spin == ("d", left_dolor)


# -- JSON form ---------------------------------------------------------------------


def pattern_to_json(g: TwoColoredGT) -> dict:
    return {
        "rows": [
            [[e[0], f"c{e[1]}", f"d{e[2]}"] for e in row] for row in g.rows
        ]
    }


def pattern_from_json(data: dict) -> TwoColoredGT:
    rows = []
    for row in data["rows"]:
        rows.append(tuple((int(v), int(c[1:]), int(d[1:])) for v, c, d in row))
    return TwoColoredGT(tuple(rows))
