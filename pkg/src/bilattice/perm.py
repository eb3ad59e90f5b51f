"""Symmetric group S_r on {1..r}: permutations as 1-based one-line tuples.

>>> w = parse_cycles("(123)", 3)
>>> w
(2, 3, 1)
>>> length(w), cycles_str(w)
(2, '(123)')
>>> bruhat_leq(identity(3), longest(3))
True
"""

from __future__ import annotations

import itertools
from typing import Iterator

Perm = tuple


def identity(r: int) -> Perm:
    return tuple(range(1, r + 1))


def longest(r: int) -> Perm:
    return tuple(range(r, 0, -1))


def simple(i: int, r: int) -> Perm:
    """The simple reflection s_i swapping i and i+1."""
    if not 1 <= i <= r - 1:
        raise ValueError(f"simple reflection index {i} out of range 1..{r-1}")
    w = list(range(1, r + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(k) = a(b(k))."""
    if len(a) != len(b):
        raise ValueError("degree mismatch")
    return tuple(a[b[k] - 1] for k in range(len(a)))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def length(w: Perm) -> int:
    """Number of inversions."""
    return sum(
        1
        for i in range(len(w))
        for j in range(i + 1, len(w))
        if w[i] > w[j]
    )


def left_descent(w: Perm, i: int) -> bool:
    """True iff l(s_i w) < l(w), i.e. i appears after i+1 in one-line form."""
    wi = inverse(w)
    return wi[i - 1] > wi[i]


def right_descent(w: Perm, i: int) -> bool:
    """True iff l(w s_i) < l(w)."""
    return w[i - 1] > w[i]


def bruhat_leq(a: Perm, b: Perm) -> bool:
    """Bruhat order via the rank-matrix criterion.

    a <= b iff for all i, j: #{k <= i : a(k) >= j} <= #{k <= i : b(k) >= j}.
    """
    if len(a) != len(b):
        raise ValueError("degree mismatch")
    r = len(a)
    ca = [0] * (r + 2)
    cb = [0] * (r + 2)
    for i in range(r):
        # accumulate column counts row by row; ca[j] = #{k <= i : a(k) >= j}
        for j in range(1, a[i] + 1):
            ca[j] += 1
        for j in range(1, b[i] + 1):
            cb[j] += 1
        for j in range(1, r + 1):
            if ca[j] > cb[j]:
                return False
    return True


def all_perms(r: int) -> Iterator[Perm]:
    """All of S_r in lexicographic one-line order."""
    return itertools.permutations(range(1, r + 1))


# -- text forms ---------------------------------------------------------------


def parse_cycles(text: str, r: int) -> Perm:
    """Parse disjoint cycle notation; "()" is the identity.

    Each cycle maps an entry to its successor, so "(123)" sends 1->2->3->1.
    Entries may be separated by commas or spaces; without separators each
    character is one entry (fine for r <= 9).
    """
    body = text.strip()
    if not body.startswith("(") or not body.endswith(")"):
        raise ValueError(f"malformed cycle notation: {text!r}")
    w = list(range(1, r + 1))
    seen: set[int] = set()
    for cyc in body[1:-1].split(")("):
        cyc = cyc.strip()
        if not cyc:
            continue
        if "," in cyc or " " in cyc:
            entries = [int(tok) for tok in cyc.replace(",", " ").split()]
        else:
            entries = [int(ch) for ch in cyc]
        for x in entries:
            if not 1 <= x <= r:
                raise ValueError(f"cycle entry {x} out of range 1..{r}")
            if x in seen:
                raise ValueError(f"repeated entry {x} in cycle notation")
            seen.add(x)
        for x, y in zip(entries, entries[1:] + entries[:1]):
            w[x - 1] = y
    return tuple(w)


def parse_perm(data, r: int) -> Perm:
    """Accept one-line form (list/tuple or "[2,3,1]") or cycle form "(123)"."""
    if isinstance(data, (list, tuple)):
        w = tuple(int(x) for x in data)
    elif isinstance(data, str):
        text = data.strip()
        if text.startswith("("):
            return parse_cycles(text, r)
        if text.startswith("["):
            text = text[1:-1]
        w = tuple(int(tok) for tok in text.replace(",", " ").split())
    else:
        raise ValueError(f"cannot parse permutation from {data!r}")
    if sorted(w) != list(range(1, r + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{r}")
    return w


def cycles_str(w: Perm) -> str:
    """Canonical cycle form: fixed points omitted, "()" for the identity."""
    r = len(w)
    seen = [False] * (r + 1)
    parts = []
    for start in range(1, r + 1):
        if seen[start] or w[start - 1] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = w[start - 1]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = w[x - 1]
        parts.append("(" + "".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "()"


def one_line_str(w: Perm) -> str:
    return "[" + ",".join(str(v) for v in w) + "]"
