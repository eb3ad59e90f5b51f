"""Exact Laurent polynomials in t and z_1..z_r with integer coefficients.

Monomials are flat exponent tuples ``(t_exp, z1_exp, ..., zr_exp)`` with
negative exponents allowed.  A polynomial is a map from monomials to nonzero
integer coefficients; the zero polynomial has an empty map.  Every operation
returns a canonical value (no zero coefficients stored), so two polynomials
are equal iff their term maps are equal.

>>> p = z_var(1, 2) - z_var(2, 2)
>>> q = z_var(1, 2) + z_var(2, 2)
>>> str(p * q)
'-1*z2^2 + 1*z1^2'
>>> str((p * q).exact_div(p))
'1*z2^1 + 1*z1^1'
"""

from __future__ import annotations

from typing import Iterable

Monomial = tuple  # (t_exp, z1_exp, ..., zr_exp)


class ExactDivisionError(ArithmeticError):
    """Raised when a division is not exact; carries the offending remainder."""

    def __init__(self, message: str, remainder: "LaurentPoly"):
        super().__init__(message)
        self.remainder = remainder


class LaurentPoly:
    """Immutable multivariate Laurent polynomial over the integers."""

    __slots__ = ("num_z", "terms")

    def __init__(self, num_z: int, terms: dict | None = None):
        if num_z < 0:
            raise ValueError("num_z must be nonnegative")
        self.num_z = num_z
        self.terms = {} if terms is None else terms

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(num_z: int) -> "LaurentPoly":
        return LaurentPoly(num_z)

    @staticmethod
    def const(c: int, num_z: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly(num_z)
        return LaurentPoly(num_z, {(0,) * (num_z + 1): c})

    # -- helpers ----------------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if self.num_z != other.num_z:
            raise ValueError(
                f"dimension mismatch: {self.num_z} z-variables vs {other.num_z}"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.num_z == other.num_z and self.terms == other.terms

    __hash__ = None  # mutable dict inside; equality is by value

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            elif m in out:
                del out[m]
        return LaurentPoly(self.num_z, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.num_z, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                nc = out.get(m, 0) + c1 * c2
                if nc:
                    out[m] = nc
                elif m in out:
                    del out[m]
        return LaurentPoly(self.num_z, out)

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly(self.num_z)
        return LaurentPoly(self.num_z, {m: c * v for m, v in self.terms.items()})

    # -- variable operations -----------------------------------------------

    def swap_z(self, i: int) -> "LaurentPoly":
        """Exchange z_i and z_{i+1} in every monomial (1 <= i <= num_z-1)."""
        if not 1 <= i <= self.num_z - 1:
            raise ValueError(f"swap index {i} out of range for {self.num_z} z-variables")
        out = {}
        for m, c in self.terms.items():
            key = list(m)
            key[i], key[i + 1] = key[i + 1], key[i]
            out[tuple(key)] = c
        return LaurentPoly(self.num_z, out)

    # -- exact division ----------------------------------------------------

    def exact_div(self, d: "LaurentPoly") -> "LaurentPoly":
        """Return q with q*d == self, or raise ExactDivisionError.

        Division by a single monomial always succeeds over the Laurent ring
        provided each coefficient divides.  The general case runs leading-term
        long division in lex order on exponent tuples; the quotient support is
        confined to the per-variable box forced by top/bottom degrees, which
        both bounds the loop and detects inexactness.
        """
        self._check(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly(self.num_z)

        if len(d.terms) == 1:
            (dm, dc), = d.terms.items()
            out = {}
            for m, c in self.terms.items():
                if c % dc:
                    raise ExactDivisionError(
                        "coefficient not divisible by monomial divisor", self
                    )
                out[tuple(a - b for a, b in zip(m, dm))] = c // dc
            return LaurentPoly(self.num_z, out)

        nvar = self.num_z + 1
        lead = max(d.terms)
        dlc = d.terms[lead]
        lo = tuple(
            min(m[v] for m in self.terms) - min(m[v] for m in d.terms)
            for v in range(nvar)
        )
        hi = tuple(
            max(m[v] for m in self.terms) - max(m[v] for m in d.terms)
            for v in range(nvar)
        )
        rem = dict(self.terms)
        quo: dict = {}
        while rem:
            rm = max(rem)
            rc = rem[rm]
            qm = tuple(a - b for a, b in zip(rm, lead))
            if rc % dlc or any(q < l or q > h for q, l, h in zip(qm, lo, hi)):
                raise ExactDivisionError(
                    "nonexact division", LaurentPoly(self.num_z, rem)
                )
            qc = rc // dlc
            quo[qm] = qc
            for m, c in d.terms.items():
                key = tuple(a + b for a, b in zip(qm, m))
                nc = rem.get(key, 0) - qc * c
                if nc:
                    rem[key] = nc
                elif key in rem:
                    del rem[key]
        return LaurentPoly(self.num_z, quo)

    # -- text form -----------------------------------------------------------

    def __str__(self) -> str:
        """Canonical interchange form, terms in ascending lex order.

        Each term prints as ``c*t^a*z1^b1*...*zr^br`` with zero exponents
        omitted, e.g. ``3*t^2*z1^-1*z2^4``; the zero polynomial prints as "0".
        """
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            factors = [str(self.terms[m])]
            if m[0]:
                factors.append(f"t^{m[0]}")
            for j in range(1, len(m)):
                if m[j]:
                    factors.append(f"z{j}^{m[j]}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.num_z}, {self})"


# -- free functions ----------------------------------------------------------


def zero(num_z: int) -> LaurentPoly:
    return LaurentPoly(num_z)


def one(num_z: int) -> LaurentPoly:
    return LaurentPoly.const(1, num_z)


def monomial(coeff: int, t_exp: int, z_exps: Iterable[int], num_z: int) -> LaurentPoly:
    """Single-term polynomial coeff * t^t_exp * prod z_j^z_exps[j]."""
    z_exps = tuple(z_exps)
    if len(z_exps) != num_z:
        raise ValueError(f"expected {num_z} z-exponents, got {len(z_exps)}")
    if coeff == 0:
        return LaurentPoly(num_z)
    return LaurentPoly(num_z, {(t_exp,) + z_exps: coeff})


def t_var(num_z: int, exp: int = 1) -> LaurentPoly:
    return LaurentPoly(num_z, {(exp,) + (0,) * num_z: 1})


def z_var(i: int, num_z: int, exp: int = 1) -> LaurentPoly:
    if not 1 <= i <= num_z:
        raise ValueError(f"z index {i} out of range 1..{num_z}")
    key = [0] * (num_z + 1)
    key[i] = exp
    return LaurentPoly(num_z, {tuple(key): 1})


def embed_z1(p: LaurentPoly, index: int, num_z: int) -> LaurentPoly:
    """Map a polynomial in (t, z1) into the num_z ring sending z1 to z_index."""
    if p.num_z != 1:
        raise ValueError("embed_z1 expects a single-z polynomial")
    if not 1 <= index <= num_z:
        raise ValueError(f"target index {index} out of range 1..{num_z}")
    out = {}
    for (te, ze), c in p.terms.items():
        key = [te] + [0] * num_z
        key[index] = ze
        out[tuple(key)] = c
    return LaurentPoly(num_z, out)


def divided_diff(k: int, i: int, p: LaurentPoly) -> LaurentPoly:
    """Apply the k-th divided difference operator in the pair (z_i, z_{i+1}).

    With s_i the swap of z_i and z_{i+1}:

        k=1: (z_i p - z_i s_i p) / (z_i - z_{i+1})
        k=2: (z_i p - z_{i+1} s_i p) / (z_i - z_{i+1})
        k=3: (z_{i+1} p - z_i s_i p) / (z_i - z_{i+1})
        k=4: (z_{i+1} p - z_{i+1} s_i p) / (z_i - z_{i+1})

    Each numerator is antisymmetric under s_i, so the division is exact for
    every input.
    """
    if k not in (1, 2, 3, 4):
        raise ValueError(f"operator id {k} not in 1..4")
    if not 1 <= i <= p.num_z - 1:
        raise ValueError(f"index {i} out of range for {p.num_z} z-variables")
    zi = z_var(i, p.num_z)
    zi1 = z_var(i + 1, p.num_z)
    sp = p.swap_z(i)
    if k == 1:
        num = zi * p - zi * sp
    elif k == 2:
        num = zi * p - zi1 * sp
    elif k == 3:
        num = zi1 * p - zi * sp
    else:
        num = zi1 * p - zi1 * sp
    return num.exact_div(zi - zi1)
