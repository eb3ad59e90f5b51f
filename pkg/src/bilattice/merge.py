"""Color merging: dolor projections and their local and global identities.

The horizontal projection sends every dolor to the single dolor of the
one-dolor model and fixes colors; the vertical projection adds up boson
counts over dolors, per color.  Locally, a one-dolor vertex weight equals
z^(1-r) times the sum of the bicolored weights over the fibres of its left
spin and bottom content.  Globally, summing scaled partition functions over
the left boundary permutation w2 recovers the one-dolor model, and summing
over w1 and w2 recovers the one-color one-dolor (uncolored) model.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from multiprocessing import Pool

from . import perm, weights
from .lattice import Grid, SystemSpec, grid_partition, top_boundary, partition_function
from .ring import LaurentPoly, monomial, zero
from .weights import all_spins, boson_at_rank, boson_rank, empty_content, fused_completions


@dataclass
class MergeReport:
    scope: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "scope": self.scope,
            "checked": self.checked,
            "passed": self.passed,
            "failures": [
                {"case": c, "lhs": str(l), "rhs": str(r)} for c, l, r in self.failures
            ],
        }


# -- projections -----------------------------------------------------------------


def project_spin(x):
    """Dolors map to the one-dolor target's d1; colors are fixed."""
    return ("d", 1) if x[0] == "d" else x


def project_content(content, s: int, r: int):
    """Sum counts over dolors per color; result lives in the one-dolor model."""
    out = [0] * s
    for k, n in enumerate(content, start=1):
        c, _d = boson_at_rank(k, s, r)
        out[c - 1] += n
    return tuple(out)


def step_spin(x, i: int):
    """The dolor-elimination map on spins: d_i -> d_{i+1}, all else fixed."""
    if x == ("d", i):
        return ("d", i + 1)
    return x


def step_content(content, s: int, r: int, i: int):
    """Move all (c, d_i) counts onto (c, d_{i+1})."""
    out = list(content)
    for c in range(1, s + 1):
        src = boson_rank(c, i, s, r) - 1
        dst = boson_rank(c, i + 1, s, r) - 1
        out[dst] += out[src]
        out[src] = 0
    return tuple(out)


# -- local identities ---------------------------------------------------------------


def _contents(s: int, r: int, nmax: int):
    return [tuple(t) for t in itertools.product(range(nmax + 1), repeat=s * r)]


def _local_chunk(args):
    s, r, tops = args
    zpow = monomial(1, 0, (r - 1,), 1)  # z^{r-1}
    checked = 0
    failures = []
    for b in tops:
        B = project_content(b, s, r)
        for c in all_spins(s, r):
            C = project_spin(c)
            colored = {}
            for left, bottom, w in fused_completions(B, C, s, 1):
                colored[(left, bottom)] = w
            fibres: dict = {}
            for a, d, w in fused_completions(b, c, s, r):
                key = (project_spin(a), project_content(d, s, r))
                fibres[key] = fibres[key] + w if key in fibres else w
            for key in sorted(set(colored) | set(fibres)):
                checked += 1
                lhs = colored.get(key, zero(1)) * zpow
                rhs = fibres.get(key, zero(1))
                if lhs != rhs:
                    failures.append(
                        (f"b={b} c={weights.spin_str(c)} target={key}", lhs, rhs)
                    )
    return checked, failures


def verify_local_merge(s: int, r: int, nmax: int, jobs: int = 1) -> MergeReport:
    """One-dolor weight vs z^(1-r) times the bicolored fibre sum, exhaustively.

    Sweeps every bicolored lift (b, c) of a one-dolor (top, right) pair with
    per-boson counts <= nmax and compares, for every target (left, bottom) of
    the one-dolor model, the scaled weight against the fibre sum.
    """
    report = MergeReport("local")
    tops = _contents(s, r, nmax)
    for checked, failures in _run_chunks(_local_chunk, s, r, tops, jobs):
        report.checked += checked
        report.failures.extend(failures)
    report.failures.sort(key=lambda item: item[0])
    return report


def _step_chunk(args):
    s, r, i, tops = args
    checked = 0
    failures = []
    for b in tops:
        B = step_content(b, s, r, i)
        for c in all_spins(s, r):
            C = step_spin(c, i)
            image = {}
            for left, bottom, w in fused_completions(B, C, s, r):
                image[(left, bottom)] = w
            fibres: dict = {}
            for a, d, w in fused_completions(b, c, s, r):
                key = (step_spin(a, i), step_content(d, s, r, i))
                fibres[key] = fibres[key] + w if key in fibres else w
            for key in sorted(set(image) | set(fibres)):
                checked += 1
                lhs = image.get(key, zero(1))
                rhs = fibres.get(key, zero(1))
                if lhs != rhs:
                    failures.append(
                        (f"b={b} c={weights.spin_str(c)} i={i} target={key}", lhs, rhs)
                    )
    return checked, failures


def verify_step_merge(s: int, r: int, i: int, nmax: int, jobs: int = 1) -> MergeReport:
    """Weight preservation of the dolor-elimination map d_i -> d_{i+1}.

    For every bicolored (top, right) pair, the vertex weight of the image
    configuration equals the plain (unscaled) sum of the weights over the
    fibre of each (left, bottom) target.
    """
    if not 1 <= i <= r - 1:
        raise ValueError(f"dolor index {i} out of range 1..{r-1}")
    report = MergeReport("step")
    tops = _contents(s, r, nmax)
    for checked, failures in _run_chunks(_step_chunk, s, r, tops, jobs, extra=(i,)):
        report.checked += checked
        report.failures.extend(failures)
    report.failures.sort(key=lambda item: item[0])
    return report


def _run_chunks(worker, s, r, tops, jobs, extra=()):
    if jobs <= 1:
        return [worker((s, r, *extra, tops))]
    size = max(1, len(tops) // (4 * jobs))
    chunks = [tops[k : k + size] for k in range(0, len(tops), size)]
    with Pool(jobs) as pool:
        return pool.map(worker, [(s, r, *extra, ch) for ch in chunks])


# -- reference models and global identities --------------------------------------------


def colored_grid(r: int, N: int, lam, w1, w3) -> Grid:
    """The one-dolor bicolored system realising the colored reference model."""
    w1i, w3i = perm.inverse(w1), perm.inverse(w3)
    cols = [empty_content(r, 1)] * N
    for i in range(1, r + 1):
        cols[lam[i - 1]] = weights.content_add(cols[lam[i - 1]], w3i[i - 1], 1, r, 1)
    return Grid(
        rows=r,
        N=N,
        colors=r,
        dolors=1,
        top=tuple(cols),
        right=tuple(("c", w1i[i]) for i in range(r)),
        left=tuple(("d", 1) for _ in range(r)),
    )


def uncolored_grid(r: int, N: int, lam) -> Grid:
    """The one-color one-dolor system realising the uncolored reference model."""
    cols = [empty_content(1, 1)] * N
    for i in range(1, r + 1):
        cols[lam[i - 1]] = weights.content_add(cols[lam[i - 1]], 1, 1, 1, 1)
    return Grid(
        rows=r,
        N=N,
        colors=1,
        dolors=1,
        top=tuple(cols),
        right=tuple(("c", 1) for _ in range(r)),
        left=tuple(("d", 1) for _ in range(r)),
    )


def scaled_partition(spec: SystemSpec) -> LaurentPoly:
    """(z_1 ... z_r)^(N(1-r)) times the partition function."""
    scale = LaurentPoly(spec.r, {(0,) + (spec.N * (1 - spec.r),) * spec.r: 1})
    return scale * partition_function(spec)


def verify_global_colored(r: int, N: int, lam, w1, w3, w4) -> MergeReport:
    """Z(one-dolor system) == sum over w2 of the scaled bicolored Z."""
    report = MergeReport("global-colored", checked=1)
    z_col = grid_partition(colored_grid(r, N, lam, w1, w3), r)
    total = zero(r)
    for w2 in perm.all_perms(r):
        total = total + scaled_partition(SystemSpec(r, N, tuple(lam), w1, w2, w3, w4))
    if z_col != total:
        report.failures.append(
            (f"lam={tuple(lam)} w1={w1} w3={w3} w4={w4}", z_col, total)
        )
    return report


def verify_global_uncolored(r: int, N: int, lam, w3, w4) -> MergeReport:
    """Z(uncolored system) == double sum over (w1, w2) of scaled bicolored Z."""
    report = MergeReport("global-uncolored", checked=1)
    z_unc = grid_partition(uncolored_grid(r, N, lam), r)
    total = zero(r)
    for w1 in perm.all_perms(r):
        for w2 in perm.all_perms(r):
            total = total + scaled_partition(
                SystemSpec(r, N, tuple(lam), w1, w2, w3, w4)
            )
    if z_unc != total:
        report.failures.append((f"lam={tuple(lam)} w3={w3} w4={w4}", z_unc, total))
    return report


# -- state projection and lifting --------------------------------------------------


def project_state(layers, spins, s: int, r: int):
    """Project a bicolored state's layers and spins to the one-dolor model."""
    return (
        tuple(tuple(project_content(col, s, r) for col in layer) for layer in layers),
        tuple(tuple(project_spin(x) for x in row) for row in spins),
    )


def lift_colored_states(colored_layers, colored_spins, spec: SystemSpec):
    """All bicolored states over arbitrary w2 that project to the given state.

    The lifting walks vertices row by row, right to left: at each vertex the
    top content and right spin are known, and the (left, bottom) pairs range
    over the fibre of the colored state's corresponding data.
    """
    r = spec.r
    top = top_boundary(spec)
    w1i = perm.inverse(spec.w1)
    out = []

    def walk_row(i, layer, j, carried, bottoms, hsp, done_layers, done_spins):
        if j == spec.N:
            walk_rows(i + 1, tuple(bottoms), done_layers + [tuple(bottoms)],
                      done_spins + [tuple(hsp)])
            return
        want_left = colored_spins[i - 1][j + 1]
        want_bottom = colored_layers[i][j]
        for left, bottom, _w in fused_completions(layer[j], carried, r, r):
            if project_spin(left) != want_left:
                continue
            if project_content(bottom, r, r) != want_bottom:
                continue
            walk_row(i, layer, j + 1, left, bottoms + [bottom], hsp + [left],
                     done_layers, done_spins)

    def walk_rows(i, layer, done_layers, done_spins):
        if i > spec.r:
            if all(all(n == 0 for n in col) for col in layer):
                out.append((tuple(done_layers), tuple(done_spins)))
            return
        carried = ("c", w1i[i - 1])
        if project_spin(carried) != colored_spins[i - 1][0]:
            return
        walk_row(i, layer, 0, carried, [], [carried], done_layers, done_spins)

    walk_rows(1, top, [top], [])
    return out
