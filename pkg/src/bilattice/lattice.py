"""Systems, state enumeration, and partition functions.

A system is an r x N grid: rows 1..r top to bottom, columns labelled
N-1..0 left to right.  Vertical-edge layers are indexed 0..r, layer k being
the edges above row k+1; horizontal spins are indexed by column boundaries
0..N, boundary 0 being the right edge of the grid and boundary N the left.

Boundary data of the standard system S(lambda, w1, w2, w3, w4):

* right boundary of row i carries the color c_{w1^-1(i)};
* left boundary of row i carries the dolor d_{w2^-1(i)};
* the top edge in column lambda_i receives the boson
  (c_{w3^-1(i)}, d_{w4^-1(w0(i))});
* the bottom boundary is empty.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import perm, weights
from .ring import LaurentPoly, embed_z1, one, zero


@dataclass(frozen=True)
class SystemSpec:
    """Boundary data of a standard system (r rows, colors, and dolors)."""

    r: int
    N: int
    lam: tuple
    w1: tuple
    w2: tuple
    w3: tuple
    w4: tuple

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be positive")
        lam = tuple(self.lam)
        object.__setattr__(self, "lam", lam)
        if len(lam) != self.r:
            raise ValueError(f"lambda must have length r={self.r}")
        if any(a < b for a, b in zip(lam, lam[1:])):
            raise ValueError("lambda must be weakly decreasing")
        if lam and (lam[0] >= self.N or lam[-1] < 0):
            raise ValueError("lambda entries must satisfy 0 <= lambda_i <= lambda_1 < N")
        for name in ("w1", "w2", "w3", "w4"):
            w = tuple(getattr(self, name))
            object.__setattr__(self, name, w)
            if sorted(w) != list(range(1, self.r + 1)):
                raise ValueError(f"{name}={w} is not a permutation of 1..{self.r}")


@dataclass(frozen=True)
class Grid:
    """A generic lattice: any numbers of colors and dolors, explicit boundaries."""

    rows: int
    N: int
    colors: int
    dolors: int
    top: tuple  # content per column label 0..N-1
    right: tuple  # spin per row 1..rows
    left: tuple  # spin per row 1..rows


@dataclass(frozen=True)
class State:
    """A full admissible edge assignment.

    vcontent[k][j]: content of the vertical edge at layer k, column label j.
    hspin[i-1][b]: spin at column boundary b of row i (b = 0 right edge).
    """

    vcontent: tuple
    hspin: tuple


def top_boundary(spec: SystemSpec) -> tuple:
    """Layer-0 contents: boson (c_{w3^-1(i)}, d_{w4^-1 w0(i)}) in column lambda_i."""
    r = spec.r
    w0 = perm.longest(r)
    w3i = perm.inverse(spec.w3)
    w4i = perm.inverse(spec.w4)
    cols = [weights.empty_content(r, r)] * spec.N
    for i in range(1, r + 1):
        c = w3i[i - 1]
        d = w4i[w0[i - 1] - 1]
        j = spec.lam[i - 1]
        cols[j] = weights.content_add(cols[j], c, d, r, r)
    return tuple(cols)


def spec_grid(spec: SystemSpec) -> Grid:
    w1i = perm.inverse(spec.w1)
    w2i = perm.inverse(spec.w2)
    return Grid(
        rows=spec.r,
        N=spec.N,
        colors=spec.r,
        dolors=spec.r,
        top=top_boundary(spec),
        right=tuple(("c", w1i[i]) for i in range(spec.r)),
        left=tuple(("d", w2i[i]) for i in range(spec.r)),
    )


# -- row machinery --------------------------------------------------------------


@lru_cache(maxsize=None)
def _row_table(layer: tuple, right: tuple, s: int, r: int) -> tuple:
    """All admissible fillings of one row.

    Returns tuples (left_spin, bottom_layer, hspins, weight) where hspins runs
    over column boundaries 0..N and the weight is a polynomial in (t, z1).
    Columns are processed right to left (label 0 upward); deterministic order.
    """
    N = len(layer)
    results = []

    def go(j: int, spin, bottoms: list, hsp: list, wt: LaurentPoly) -> None:
        if j == N:
            results.append((spin, tuple(bottoms), tuple(hsp), wt))
            return
        for left, bottom, w in weights.fused_completions(layer[j], spin, s, r):
            go(j + 1, left, bottoms + [bottom], hsp + [left], wt * w)

    go(0, right, [], [right], one(1))
    results.sort(key=lambda item: (item[1], item[0]))
    return tuple(results)


@lru_cache(maxsize=None)
def _row_transfer(layer: tuple, right: tuple, left: tuple, s: int, r: int) -> tuple:
    """Row fillings aggregated by bottom layer: (bottom_layer, total weight)."""
    acc: dict = {}
    for lspin, bottoms, _hsp, wt in _row_table(layer, right, s, r):
        if lspin != left:
            continue
        if bottoms in acc:
            acc[bottoms] = acc[bottoms] + wt
        else:
            acc[bottoms] = wt
    return tuple(sorted(acc.items(), key=lambda kv: kv[0]))


def iter_grid_states(grid: Grid) -> Iterator[tuple]:
    """Yield (vcontent_layers, hspin_rows, row_weights) for every admissible state."""
    s, r = grid.colors, grid.dolors
    empty = tuple(weights.empty_content(s, r) for _ in range(grid.N))

    def walk(i: int, layer: tuple, acc_layers: list, acc_spins: list, acc_wts: list):
        if i > grid.rows:
            if layer == empty:
                yield tuple(acc_layers), tuple(acc_spins), tuple(acc_wts)
            return
        for lspin, bottoms, hsp, wt in _row_table(layer, grid.right[i - 1], s, r):
            if lspin != grid.left[i - 1]:
                continue
            yield from walk(
                i + 1, bottoms, acc_layers + [bottoms], acc_spins + [hsp], acc_wts + [wt]
            )

    yield from walk(1, grid.top, [grid.top], [], [])


def enumerate_states(spec: SystemSpec) -> list:
    """The complete, duplicate-free, deterministically ordered list of states."""
    return [
        State(vcontent=layers, hspin=spins)
        for layers, spins, _ in iter_grid_states(spec_grid(spec))
    ]


def count_states(spec_or_grid, limit: int | None = None) -> int:
    """Number of states, stopping early once `limit` are found."""
    grid = spec_or_grid if isinstance(spec_or_grid, Grid) else spec_grid(spec_or_grid)
    n = 0
    for _ in iter_grid_states(grid):
        n += 1
        if limit is not None and n >= limit:
            break
    return n


def state_weight(state: State, spec: SystemSpec) -> LaurentPoly:
    """Product of all fused vertex weights, row symbol z_i on row i."""
    grid = spec_grid(spec)
    r = spec.r
    acc = one(r)
    for i in range(1, r + 1):
        row_wt = one(1)
        carried = state.hspin[i - 1][0]
        if carried != grid.right[i - 1]:
            raise ValueError(f"state right boundary of row {i} mismatches the spec")
        for j in range(spec.N):
            res = weights.chain_spins(
                state.vcontent[i - 1][j], state.vcontent[i][j], carried, r, r
            )
            if res is None or res[0] != state.hspin[i - 1][j + 1]:
                raise ValueError(f"inadmissible vertex at row {i}, column {j}")
            carried = res[0]
            row_wt = row_wt * res[1]
        if carried != grid.left[i - 1]:
            raise ValueError(f"state left boundary of row {i} mismatches the spec")
        acc = acc * embed_z1(row_wt, i, r)
    return acc


def grid_partition(grid: Grid, num_z: int, z_of_row=None) -> LaurentPoly:
    """Partition function of a grid by dynamic programming over layers.

    Equals the sum of the weights of all states exactly; states reaching the
    same layer contents are merged, so no explicit state list is built.
    """
    if z_of_row is None:
        z_of_row = lambda i: i
    s, r = grid.colors, grid.dolors
    cur = {grid.top: one(num_z)}
    for i in range(1, grid.rows + 1):
        nxt: dict = {}
        for layer, acc in cur.items():
            for bottoms, wt in _row_transfer(
                layer, grid.right[i - 1], grid.left[i - 1], s, r
            ):
                w = acc * embed_z1(wt, z_of_row(i), num_z)
                if bottoms in nxt:
                    nxt[bottoms] = nxt[bottoms] + w
                else:
                    nxt[bottoms] = w
        cur = {k: v for k, v in nxt.items() if not v.is_zero()}
    empty = tuple(weights.empty_content(s, r) for _ in range(grid.N))
    return cur.get(empty, zero(num_z))


def partition_function(spec: SystemSpec) -> LaurentPoly:
    """Exact partition function; 0 when the system has no states."""
    return grid_partition(spec_grid(spec), spec.r)


# -- JSON interchange -------------------------------------------------------------


def spec_from_json(data) -> SystemSpec:
    """Build a SystemSpec from a dict or JSON text/path contents.

    Schema: {"r": int, "N": int, "lambda": [int..],
             "w1".."w4": one-line array or cycle string}.
    """
    if isinstance(data, str):
        data = json.loads(data)
    r = int(data["r"])
    return SystemSpec(
        r=r,
        N=int(data["N"]),
        lam=tuple(int(x) for x in data["lambda"]),
        w1=perm.parse_perm(data["w1"], r),
        w2=perm.parse_perm(data["w2"], r),
        w3=perm.parse_perm(data["w3"], r),
        w4=perm.parse_perm(data["w4"], r),
    )


def spec_to_json(spec: SystemSpec) -> dict:
    return {
        "r": spec.r,
        "N": spec.N,
        "lambda": list(spec.lam),
        "w1": list(spec.w1),
        "w2": list(spec.w2),
        "w3": list(spec.w3),
        "w4": list(spec.w4),
    }


def load_system(path: str) -> SystemSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return spec_from_json(json.load(fh))


def state_to_json(state: State, spec: SystemSpec) -> dict:
    r = spec.r
    return {
        "vcontent": [
            [weights.content_to_dict(col, r, r) for col in layer]
            for layer in state.vcontent
        ],
        "hspin": [[weights.spin_str(x) for x in row] for row in state.hspin],
    }


def state_from_json(data: dict, spec: SystemSpec) -> State:
    r = spec.r
    vcontent = tuple(
        tuple(weights.content_from_dict(col, r, r) for col in layer)
        for layer in data["vcontent"]
    )
    hspin = tuple(
        tuple(weights.parse_spin(x) for x in row) for row in data["hspin"]
    )
    return State(vcontent=vcontent, hspin=hspin)
