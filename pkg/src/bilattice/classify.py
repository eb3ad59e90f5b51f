"""Classification of systems by their boundary permutations.

The permutations w_c = w3 w1^-1 and w_d = w0 w4 w2^-1 drive the trichotomy:
no states when w_d is not below w_c in Bruhat order, exactly one state when
w_d = w_c, and otherwise a general system (guaranteed nonempty once lambda
is sufficiently dominant).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perm
from .lattice import SystemSpec
from .ring import LaurentPoly
from .weights import boson_rank

NO_STATES = "NoStates"
MONOSTATIC = "Monostatic"
GENERAL = "General"


@dataclass(frozen=True)
class ClassificationResult:
    wc: tuple
    wd: tuple
    category: str
    bruhat_relation: str

    def to_json(self) -> dict:
        return {
            "wc": perm.cycles_str(self.wc),
            "wd": perm.cycles_str(self.wd),
            "category": self.category,
            "relation": self.bruhat_relation,
        }


def boundary_perms(spec: SystemSpec) -> tuple:
    """(w_c, w_d) = (w3 w1^-1, w0 w4 w2^-1)."""
    wc = perm.compose(spec.w3, perm.inverse(spec.w1))
    wd = perm.compose(
        perm.compose(perm.longest(spec.r), spec.w4), perm.inverse(spec.w2)
    )
    return wc, wd


def classify_system(spec: SystemSpec) -> ClassificationResult:
    wc, wd = boundary_perms(spec)
    if wd == wc:
        return ClassificationResult(wc, wd, MONOSTATIC, "equal")
    if perm.bruhat_leq(wd, wc):
        return ClassificationResult(wc, wd, GENERAL, "less")
    return ClassificationResult(wc, wd, NO_STATES, "greater-or-incomparable")


def sufficiently_dominant(lam, gap: int) -> bool:
    """True iff consecutive parts differ by at least `gap`."""
    return all(a - b >= gap for a, b in zip(lam, lam[1:]))


def monostatic_partition(spec: SystemSpec) -> LaurentPoly:
    """Closed-form partition function of a monostatic system.

    Z = t^(s_c + s_d) * prod_i z_i^(N(r-1) + lambda_{j_i}) with j_i = w_c(i).
    The t-exponent counts, over rows i, the boson pairs k still travelling at
    row i (w_c^-1(k) > i) that the exiting color crosses with a larger color
    index (s_c) or the exiting dolor crosses with a larger dolor index (s_d).
    A pair k sharing the column of pair j_i counts as crossed on the side
    given by comparing monochrome ranks.
    """
    result = classify_system(spec)
    if result.category != MONOSTATIC:
        raise ValueError(f"system is {result.category}, not Monostatic")
    r, N, lam = spec.r, spec.N, spec.lam
    wc = result.wc
    wci = perm.inverse(wc)
    w0 = perm.longest(r)
    w1i = perm.inverse(spec.w1)
    w2i = perm.inverse(spec.w2)
    w3i = perm.inverse(spec.w3)
    w4i = perm.inverse(spec.w4)

    def boson(k: int) -> tuple:
        return (w3i[k - 1], w4i[w0[k - 1] - 1])

    texp = 0
    zexps = []
    for i in range(1, r + 1):
        j = wc[i - 1]
        zexps.append(N * (r - 1) + lam[j - 1])
        rj = boson_rank(*boson(j), r, r)
        for k in range(1, r + 1):
            if k == j or wci[k - 1] <= i:
                continue
            rk = boson_rank(*boson(k), r, r)
            right_of = lam[k - 1] < lam[j - 1] or (lam[k - 1] == lam[j - 1] and rk > rj)
            left_of = lam[k - 1] > lam[j - 1] or (lam[k - 1] == lam[j - 1] and rk < rj)
            if right_of and w3i[k - 1] > w1i[i - 1]:
                texp += 1
            if left_of and w4i[w0[k - 1] - 1] > w2i[i - 1]:
                texp += 1
    return LaurentPoly(r, {(texp,) + tuple(zexps): 1})
