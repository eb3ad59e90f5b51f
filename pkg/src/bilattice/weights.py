"""Local data of the bicolored bosonic model.

Spins are ``('c', i)`` for colors and ``('d', j)`` for dolors.  A vertical
edge of the fused model carries a multiset of bosons (color-dolor pairs),
stored densely as a tuple of counts indexed by monochrome rank - 1.

The monochrome ordering makes (c_1, d_r) minimal: dolor blocks descend left
to right, colors ascend within a block, so rank(c, d) = (r - d) * s + c for
s colors and r dolors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ring import LaurentPoly, embed_z1, one, zero

Spin = tuple
Content = tuple


def color(i: int) -> Spin:
    return ("c", i)


def dolor(j: int) -> Spin:
    return ("d", j)


def is_color(x: Spin) -> bool:
    return x[0] == "c"


def is_dolor(x: Spin) -> bool:
    return x[0] == "d"


def spin_str(x: Spin) -> str:
    return f"{x[0]}{x[1]}"


def parse_spin(text: str) -> Spin:
    kind = text[0]
    if kind not in ("c", "d"):
        raise ValueError(f"bad spin {text!r}")
    return (kind, int(text[1:]))


def all_spins(s: int, r: int) -> list:
    return [("c", i) for i in range(1, s + 1)] + [("d", j) for j in range(1, r + 1)]


# -- bosons -------------------------------------------------------------------


def boson_rank(c: int, d: int, s: int, r: int) -> int:
    """Position of (c_c, d_d) in the monochrome order, 1-based."""
    if not (1 <= c <= s and 1 <= d <= r):
        raise ValueError(f"boson ({c},{d}) out of range for {s} colors, {r} dolors")
    return (r - d) * s + c


def boson_at_rank(k: int, s: int, r: int) -> tuple:
    if not 1 <= k <= s * r:
        raise ValueError(f"rank {k} out of range 1..{s*r}")
    return ((k - 1) % s + 1, r - (k - 1) // s)


def boson_succ(c: int, d: int, s: int, r: int) -> tuple:
    """Successor in the monochrome order; the maximal boson wraps to (c_1, d_r)."""
    k = boson_rank(c, d, s, r)
    return boson_at_rank(k % (s * r) + 1, s, r)


# -- vertical edge contents ---------------------------------------------------


def empty_content(s: int, r: int) -> Content:
    return (0,) * (s * r)


def content_add(content: Content, c: int, d: int, s: int, r: int, n: int = 1) -> Content:
    k = boson_rank(c, d, s, r)
    out = list(content)
    out[k - 1] += n
    return tuple(out)


def content_get(content: Content, c: int, d: int, s: int, r: int) -> int:
    return content[boson_rank(c, d, s, r) - 1]


def content_total(content: Content) -> int:
    return sum(content)


def content_to_dict(content: Content, s: int, r: int) -> dict:
    out = {}
    for k, n in enumerate(content, start=1):
        if n:
            c, d = boson_at_rank(k, s, r)
            out[f"c{c}.d{d}"] = n
    return out


def content_from_dict(data: dict, s: int, r: int) -> Content:
    out = [0] * (s * r)
    for key, n in data.items():
        cpart, dpart = key.split(".")
        k = boson_rank(int(cpart[1:]), int(dpart[1:]), s, r)
        out[k - 1] = int(n)
    return tuple(out)


# -- unfused vertex weights (single boson species) -----------------------------


@dataclass(frozen=True)
class UnfusedConfig:
    """One monochrome vertex: boson label (color, dolor), row symbol z, edges."""

    color: int
    dolor: int
    z: int
    left: Spin
    right: Spin
    top: int
    bottom: int


def _geometric(n: int, num_z: int) -> LaurentPoly:
    # 1 + t + ... + t^{n-1}, the expanded split weight for top count n
    return LaurentPoly(num_z, {(k,) + (0,) * num_z: 1 for k in range(n)})


def _pass_weight(spin: Spin, c: int, d: int, n: int, z: int, num_z: int) -> LaurentPoly:
    kind, x = spin
    if kind == "d":
        if x == d:
            return one(num_z)
        if c == 1 and x < d:
            return LaurentPoly(num_z, {(n,) + _zkey(z, num_z): 1})
        if c == 1 and x > d:
            return LaurentPoly(num_z, {(0,) + _zkey(z, num_z): 1})
        if x < d:
            return LaurentPoly(num_z, {(n,) + (0,) * num_z: 1})
        return one(num_z)
    if x > c:
        return one(num_z)
    if x == c:
        return LaurentPoly(num_z, {(0,) + _zkey(z, num_z): 1})
    return LaurentPoly(num_z, {(n,) + (0,) * num_z: 1})


def _zkey(z: int, num_z: int) -> tuple:
    key = [0] * num_z
    key[z - 1] = 1
    return tuple(key)


def _merge_weight(z: int, num_z: int) -> LaurentPoly:
    # (1 - t) z
    return LaurentPoly(num_z, {(0,) + _zkey(z, num_z): 1, (1,) + _zkey(z, num_z): -1})


def unfused_weight(cfg: UnfusedConfig, num_z: int = 1) -> LaurentPoly:
    """Boltzmann weight of a single monochrome vertex; 0 when not admissible."""
    c, d, z = cfg.color, cfg.dolor, cfg.z
    if cfg.top == cfg.bottom and cfg.left == cfg.right:
        if cfg.top < 0:
            return zero(num_z)
        return _pass_weight(cfg.left, c, d, cfg.top, z, num_z)
    if (
        cfg.left == ("d", d)
        and cfg.right == ("c", c)
        and cfg.bottom == cfg.top - 1
        and cfg.top >= 1
    ):
        return _geometric(cfg.top, num_z)
    if cfg.left == ("c", c) and cfg.right == ("d", d) and cfg.bottom == cfg.top + 1 and cfg.top >= 0:
        return _merge_weight(z, num_z)
    return zero(num_z)


def unfused_options(left: Spin, top: int, c: int, d: int, z: int, num_z: int) -> list:
    """Admissible (right, bottom, weight) of a monochrome vertex given left and top."""
    out = [(left, top, _pass_weight(left, c, d, top, z, num_z))]
    kind, x = left
    if kind == "d":
        if x == d and top >= 1:
            out.append((("c", c), top - 1, _geometric(top, num_z)))
    elif x == c:
        out.append((("d", d), top + 1, _merge_weight(z, num_z)))
    return out


# -- fused vertices -------------------------------------------------------------


@lru_cache(maxsize=None)
def _completions(top: Content, right: Spin, s: int, r: int) -> tuple:
    """All (left, bottom, weight) of the fused vertex with given top and right.

    The vertex is a chain of s*r monochrome columns in increasing rank left to
    right; the chain is walked right to left carrying the horizontal spin.
    Weights are polynomials in (t, z1).  Deterministic order: lex on bottom.
    """
    rs = s * r
    results = []

    def walk(k: int, spin: Spin, bottoms: list, wt: LaurentPoly) -> None:
        if k == 0:
            results.append((spin, tuple(reversed(bottoms)), wt))
            return
        c, d = boson_at_rank(k, s, r)
        n = top[k - 1]
        walk(k - 1, spin, bottoms + [n], wt * _pass_weight(spin, c, d, n, 1, 1))
        if spin == ("c", c) and n >= 1:
            walk(k - 1, ("d", d), bottoms + [n - 1], wt * _geometric(n, 1))
        elif spin == ("d", d):
            walk(k - 1, ("c", c), bottoms + [n + 1], wt * _merge_weight(1, 1))

    walk(rs, right, [], one(1))
    results.sort(key=lambda item: item[1])
    return tuple(results)


def fused_completions(
    top: Content, right: Spin, s: int, r: int, z: int = 1, num_z: int = 1
) -> list:
    """Admissible fused vertices with the given top content and right spin."""
    if len(top) != s * r:
        raise ValueError(f"content length {len(top)} != {s*r}")
    raw = _completions(top, right, s, r)
    if z == 1 and num_z == 1:
        return list(raw)
    return [(left, bottom, embed_z1(w, z, num_z)) for left, bottom, w in raw]


def chain_spins(top: Content, bottom: Content, right: Spin, s: int, r: int):
    """Forced horizontal chain through a fused vertex, or None if inadmissible.

    Returns (left_spin, weight in (t, z1)).  The per-column transitions are
    determined by the count differences, so the chain is unique.
    """
    spin = right
    wt = one(1)
    for k in range(s * r, 0, -1):
        c, d = boson_at_rank(k, s, r)
        n, b = top[k - 1], bottom[k - 1]
        if b == n:
            wt = wt * _pass_weight(spin, c, d, n, 1, 1)
        elif b == n - 1 and spin == ("c", c) and n >= 1:
            spin = ("d", d)
            wt = wt * _geometric(n, 1)
        elif b == n + 1 and spin == ("d", d):
            spin = ("c", c)
            wt = wt * _merge_weight(1, 1)
        else:
            return None
    return spin, wt


@dataclass(frozen=True)
class FusedConfig:
    z: int
    left: Spin
    right: Spin
    top: Content
    bottom: Content


def fused_weight(cfg: FusedConfig, s: int, r: int, num_z: int = 1) -> LaurentPoly:
    """Weight of a fused vertex configuration; 0 when not admissible."""
    res = chain_spins(cfg.top, cfg.bottom, cfg.right, s, r)
    if res is None or res[0] != cfg.left:
        return zero(num_z)
    return embed_z1(res[1], cfg.z, num_z)


# -- R-vertex weights ------------------------------------------------------------


def _r_poly(num_z: int, zi: int, zj: int, kind: str) -> LaurentPoly:
    key_i = (0,) + _zkey(zi, num_z)
    key_j = (0,) + _zkey(zj, num_z)
    tkey_i = (1,) + _zkey(zi, num_z)
    tkey_j = (1,) + _zkey(zj, num_z)
    if kind == "zi-tzj":
        return LaurentPoly(num_z, {key_i: 1, tkey_j: -1})
    if kind == "t(zi-zj)":
        return LaurentPoly(num_z, {tkey_i: 1, tkey_j: -1})
    if kind == "zi-zj":
        return LaurentPoly(num_z, {key_i: 1, key_j: -1})
    if kind == "(1-t)zi":
        return LaurentPoly(num_z, {key_i: 1, tkey_i: -1})
    if kind == "(1-t)zj":
        return LaurentPoly(num_z, {key_j: 1, tkey_j: -1})
    raise ValueError(kind)


def _r_ratio(num_z: int, znum: int, zden: int) -> LaurentPoly:
    # (1 - t) * znum^2 / zden
    key = [0] * num_z
    key[znum - 1] = 2
    key[zden - 1] -= 1
    return LaurentPoly(num_z, {(0,) + tuple(key): 1, (1,) + tuple(key): -1})


def fused_R_weight(
    nw: Spin, sw: Spin, ne: Spin, se: Spin, zi: int, zj: int, num_z: int = 2
) -> LaurentPoly:
    """R-vertex weight of the fused model on a corner quadruple."""
    P = lambda kind: _r_poly(num_z, zi, zj, kind)
    if nw == sw == ne == se:
        return P("zi-tzj")
    if sw == ne and nw == se and sw != nw:
        a, b = sw, nw
        if a[0] == b[0]:
            lt = a[1] < b[1] if a[0] == "c" else a[1] > b[1]
            return P("t(zi-zj)") if lt else P("zi-zj")
        return P("t(zi-zj)") if a[0] == "d" else P("zi-zj")
    if nw == ne and sw == se and nw != sw:
        a, b = sw, nw
        if a[0] == b[0]:
            return P("(1-t)zi") if a[1] < b[1] else P("(1-t)zj")
        return P("(1-t)zi") if a[0] == "c" else P("(1-t)zj")
    return zero(num_z)


def unfused_R_weight(
    nw: Spin,
    sw: Spin,
    ne: Spin,
    se: Spin,
    zi: int,
    zj: int,
    c: int,
    d: int,
    num_z: int = 2,
) -> LaurentPoly:
    """R-vertex weight of the unfused model attached to the boson (c, d).

    The diagonal crossing case follows the fused table (colors compare
    ascending, dolors descending); the published unfused table's "same type"
    wording fails the Yang-Baxter sweep for dolor pairs and is corrected here.
    """
    P = lambda kind: _r_poly(num_z, zi, zj, kind)
    if nw == sw == ne == se:
        return P("zi-tzj")
    if sw == ne and nw == se and sw != nw:
        a, b = sw, nw
        if a[0] == b[0]:
            lt = a[1] < b[1] if a[0] == "c" else a[1] > b[1]
            return P("t(zi-zj)") if lt else P("zi-zj")
        return P("t(zi-zj)") if a[0] == "d" else P("zi-zj")
    if nw == ne and sw == se and nw != sw:
        bot, top = sw, nw
        if bot[0] == "c" and top[0] == "c":
            a, b = bot[1], top[1]
            if (c <= a < b) or (a < b < c) or (b < c <= a):
                return P("(1-t)zi")
            if (c <= b < a) or (b < a < c) or (a < c <= b):
                return P("(1-t)zj")
            return zero(num_z)
        if bot[0] == "d" and top[0] == "d":
            x, y = bot[1], top[1]
            if (x < y < d) or (d < x < y) or (y < d < x) or (y == d and c == 1) or (x == d and c > 1):
                return P("(1-t)zi")
            if (y < x < d) or (d < y < x) or (x < d < y) or (x == d and c == 1) or (y == d and c > 1):
                return P("(1-t)zj")
            return zero(num_z)
        if bot[0] == "c" and top[0] == "d":
            a, x = bot[1], top[1]
            if c == 1 or a == 1 or c > a or x == d:
                return P("(1-t)zi")
            if a >= c > 1 and x != d:
                return _r_ratio(num_z, zi, zj)
            return zero(num_z)
        a, x = top[1], bot[1]
        if c == 1 or a == 1 or c > a or x == d:
            return P("(1-t)zj")
        if a >= c > 1 and x != d:
            return _r_ratio(num_z, zj, zi)
        return zero(num_z)
    return zero(num_z)
