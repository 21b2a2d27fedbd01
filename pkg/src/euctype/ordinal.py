"""Exact ordinal arithmetic below epsilon_0 in Cantor normal form.

An ordinal is stored as a tuple of ``(exponent, coefficient)`` terms with
the exponents (themselves ordinals) strictly decreasing and every
coefficient a positive integer; the empty tuple is 0.  All operations are
pure and return new values, so ordinals can be shared freely.

Product conventions.  ``a * b`` is the standard ordinal product, the order
type of b copies of a, so ``omega * 2 == omega + omega`` while
``Ordinal(2) * omega == omega``.  :func:`product_left` reads its arguments
the other way around -- ``product_left(a, b)`` is a copies of b -- which is
the convention in which ``2 . w`` denotes ``w + w``.  The two are mirror
images: ``product_left(a, b) == b * a``.
"""

from __future__ import annotations

import functools
from typing import Iterable, Tuple, Union

from .errors import DomainError

OrdinalLike = Union["Ordinal", int]


@functools.total_ordering
class Ordinal:
    """An ordinal below epsilon_0, canonical on construction."""

    __slots__ = ("terms",)

    terms: Tuple[Tuple["Ordinal", int], ...]

    def __init__(self, value: int = 0):
        if value < 0:
            raise DomainError("ordinals are non-negative")
        if value == 0:
            object.__setattr__(self, "terms", ())
        else:
            object.__setattr__(self, "terms", ((_ZERO_SENTINEL, value),))

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple["Ordinal", int]]) -> "Ordinal":
        """Build from CNF terms; exponents must be strictly decreasing."""
        terms = tuple(terms)
        for (e, c) in terms:
            if c < 1:
                raise DomainError("CNF coefficients must be positive")
        for (e1, _), (e2, _) in zip(terms, terms[1:]):
            if not e2 < e1:
                raise DomainError("CNF exponents must be strictly decreasing")
        out = object.__new__(cls)
        object.__setattr__(out, "terms", terms)
        return out

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    def to_int(self) -> int:
        if self.is_zero:
            return 0
        if not self.is_finite:
            raise DomainError(f"{self} is not a finite ordinal")
        return self.terms[0][1]

    def is_limit(self) -> bool:
        """True iff nonzero with no finite tail (0 itself is not a limit)."""
        return bool(self.terms) and not self.terms[-1][0].is_zero

    def successor(self) -> "Ordinal":
        return self + Ordinal(1)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        for (e1, c1), (e2, c2) in zip(self.terms, other.terms):
            if e1 != e2:
                return e1 < e2
            if c1 != c2:
                return c1 < c2
        return len(self.terms) < len(other.terms)

    def __hash__(self) -> int:
        return hash(self.terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: OrdinalLike) -> "Ordinal":
        if isinstance(other, int):
            other = Ordinal(other)
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        lead = other.terms[0][0]
        # terms of self with exponent below the lead of other are absorbed
        kept = [t for t in self.terms if t[0] > lead]
        if len(kept) < len(self.terms) and self.terms[len(kept)][0] == lead:
            merged = (lead, self.terms[len(kept)][1] + other.terms[0][1])
            return Ordinal.from_terms(tuple(kept) + (merged,) + other.terms[1:])
        return Ordinal.from_terms(tuple(kept) + other.terms)

    def __mul__(self, other: OrdinalLike) -> "Ordinal":
        """Standard product: the order type of ``other`` copies of ``self``."""
        if isinstance(other, int):
            other = Ordinal(other)
        if self.is_zero or other.is_zero:
            return Ordinal(0)
        lead_exp, lead_coeff = self.terms[0]
        out = Ordinal(0)
        for (e, c) in other.terms:
            if e.is_zero:
                # finite part of the multiplier
                chunk = Ordinal.from_terms(((lead_exp, lead_coeff * c),))
                out = out + chunk + Ordinal.from_terms(self.terms[1:])
            else:
                out = out + Ordinal.from_terms(((lead_exp + e, c),))
        return out

    def __str__(self) -> str:
        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal[{format_ordinal(self)}]"


# The zero exponent used inside finite terms; created once, bypassing
# __init__ to avoid bootstrap recursion.
_ZERO_SENTINEL = object.__new__(Ordinal)
object.__setattr__(_ZERO_SENTINEL, "terms", ())

omega = Ordinal.from_terms(((Ordinal(1), 1),))


def omega_power(exponent: OrdinalLike, coefficient: int = 1) -> Ordinal:
    if isinstance(exponent, int):
        exponent = Ordinal(exponent)
    if coefficient == 0:
        return Ordinal(0)
    return Ordinal.from_terms(((exponent, coefficient),))


def product_left(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """The product reading ``a . b`` as a copies of b (2 . w == w + w)."""
    if isinstance(a, int):
        a = Ordinal(a)
    if isinstance(b, int):
        b = Ordinal(b)
    return b * a


def natural_sum(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """Coefficient-wise sum of the two normal forms on a shared support.

    Commutative, associative, cancellative and strictly monotone in each
    argument, unlike the ordinary ordinal sum.
    """
    if isinstance(a, int):
        a = Ordinal(a)
    if isinstance(b, int):
        b = Ordinal(b)
    coeffs: dict = {}
    for (e, c) in a.terms + b.terms:
        coeffs[e] = coeffs.get(e, 0) + c
    exps = sorted(coeffs, reverse=True)
    return Ordinal.from_terms((e, coeffs[e]) for e in exps)


def left_subtract(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """The unique g with a + g == b; defined only for a <= b."""
    if isinstance(a, int):
        a = Ordinal(a)
    if isinstance(b, int):
        b = Ordinal(b)
    if not a <= b:
        raise DomainError(f"left subtraction undefined: {a} > {b}")
    i = 0
    while i < len(a.terms) and i < len(b.terms) and a.terms[i] == b.terms[i]:
        i += 1
    if i == len(a.terms):
        return Ordinal.from_terms(b.terms[i:])
    ea, ca = a.terms[i]
    eb, cb = b.terms[i]
    if ea == eb:
        # a's tail is absorbed into the replaced coefficient
        return Ordinal.from_terms(((eb, cb - ca),) + b.terms[i + 1:])
    # ea < eb: the whole remaining tail of a is absorbed by b's next term
    return Ordinal.from_terms(b.terms[i:])


def format_ordinal(a: Ordinal) -> str:
    """Canonical ASCII rendering, e.g. ``w^2*3 + w + 5``."""
    if a.is_zero:
        return "0"
    parts = []
    for (e, c) in a.terms:
        if e.is_zero:
            parts.append(str(c))
            continue
        if e == Ordinal(1):
            s = "w"
        elif e.is_finite:
            s = f"w^{e.to_int()}"
        elif e == omega:
            s = "w^w"
        else:
            s = f"w^({format_ordinal(e)})"
        if c > 1:
            s += f"*{c}"
        parts.append(s)
    return " + ".join(parts)
