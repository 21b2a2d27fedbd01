"""Text syntax for ordinals, ring specs, and ring elements.

Ordinal grammar (ASCII ``w`` for the least infinite ordinal; the Unicode
letter is accepted on input)::

    expr    := '(' '-' expr ')' '+' expr      -- left subtraction
             | sum
    sum     := product (('+' | '#') product)* -- '#' is the natural sum
    product := atom ('.' atom)*               -- 2 . w  ==  w + w
    atom    := 'w' ['^' exponent] ['*' nat] | nat | '(' expr ')'
    exponent:= nat | 'w' ['^' exponent] | '(' expr ')'

Ring spec grammar: factors joined by ``x``; a factor is ``Z/<n>``,
``GF(<q>)[t]/(<poly>)``, or the symbolic PID factors ``Z`` and
``GF(<q>)[t]``.  A spec with a symbolic factor parses to a
:class:`~euctype.models.RingSpec`; otherwise to a concrete ring.

Polynomial coefficients in a ring spec are integers reduced into the
prime subfield.  When parsing ring *elements* over a non-prime field the
integers are read as field-element encodings instead, matching how
elements are printed.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple, Union

from .errors import DomainError, ParseError
from .euclidean import EuclideanTable
from .models import RingSpec
from .ordinal import Ordinal, left_subtract, natural_sum, omega_power, product_left
from .rings import (
    FiniteRing,
    GaloisField,
    PolyQuotient,
    ProductRing,
    QuotientRing,
    TableRing,
    Zmod,
    poly_trim,
)

MAX_EXPONENT_DEPTH = 32


# ---------------------------------------------------------------------------
# ordinal expressions


class _Scanner:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            raise ParseError(f"expected {ch!r}", self.pos)

    def nat(self) -> int:
        self.skip_ws()
        m = re.match(r"\d+", self.src[self.pos:])
        if not m:
            raise ParseError("expected a number", self.pos)
        self.pos += m.end()
        return int(m.group())


def parse_ordinal(src: str) -> Ordinal:
    if not src or not src.strip():
        raise ParseError("empty ordinal expression")
    sc = _Scanner(src)
    value = _expr(sc, 0)
    sc.skip_ws()
    if sc.pos != len(src):
        raise ParseError(f"unexpected {src[sc.pos]!r}", sc.pos)
    return value


# alias matching the naming style of the other parse_* entry points
parse_ordinal_expr = parse_ordinal


def _expr(sc: _Scanner, depth: int) -> Ordinal:
    save = sc.pos
    if sc.take("("):
        if sc.take("-"):
            minuend = _expr(sc, depth)
            sc.expect(")")
            sc.expect("+")
            rest = _expr(sc, depth)
            return left_subtract(minuend, rest)
        sc.pos = save
    return _sum(sc, depth)


def _sum(sc: _Scanner, depth: int) -> Ordinal:
    value = _product(sc, depth)
    while True:
        if sc.take("+"):
            value = value + _product(sc, depth)
        elif sc.take("#"):
            value = natural_sum(value, _product(sc, depth))
        else:
            return value


def _product(sc: _Scanner, depth: int) -> Ordinal:
    value = _atom(sc, depth)
    while sc.take("."):
        value = product_left(value, _atom(sc, depth))
    return value


def _atom(sc: _Scanner, depth: int) -> Ordinal:
    ch = sc.peek()
    if ch in ("w", "ω"):
        sc.pos += 1
        exponent = Ordinal(1)
        if sc.take("^"):
            exponent = _exponent(sc, depth + 1)
        coeff = 1
        if sc.take("*"):
            coeff = sc.nat()
            if coeff == 0:
                return Ordinal(0)
        return omega_power(exponent, coeff)
    if ch.isdigit():
        return Ordinal(sc.nat())
    if sc.take("("):
        value = _expr(sc, depth)
        sc.expect(")")
        return value
    raise ParseError(f"unexpected {ch!r}" if ch else "unexpected end of input", sc.pos)


def _exponent(sc: _Scanner, depth: int) -> Ordinal:
    from .errors import ResourceError

    if depth > MAX_EXPONENT_DEPTH:
        raise ResourceError(f"exponent nesting deeper than {MAX_EXPONENT_DEPTH}")
    ch = sc.peek()
    if ch.isdigit():
        return Ordinal(sc.nat())
    if ch in ("w", "ω"):
        sc.pos += 1
        if sc.take("^"):
            return omega_power(_exponent(sc, depth + 1))
        return omega_power(1)
    if sc.take("("):
        value = _expr(sc, depth)
        sc.expect(")")
        return value
    raise ParseError("expected an exponent", sc.pos)


# ---------------------------------------------------------------------------
# polynomials in t


def parse_poly(src: str, field: GaloisField, encode) -> Tuple[int, ...]:
    """Coefficient tuple (constant first) of a polynomial in t.

    ``encode`` maps each written nonnegative integer to a field element;
    signs and repeated same-degree terms are handled with the field's own
    arithmetic.
    """
    sc = _Scanner(src)
    coeffs: List[int] = []

    def bump(degree: int, c: int):
        while len(coeffs) <= degree:
            coeffs.append(0)
        coeffs[degree] = field.add(coeffs[degree], c)

    sign = 1
    while True:
        c = 1
        ch = sc.peek()
        if ch.isdigit():
            c = sc.nat()
            sc.take("*")
        degree = 0
        if sc.peek() == "t":
            sc.pos += 1
            degree = 1
            if sc.take("^"):
                degree = sc.nat()
        value = encode(c)
        if sign < 0:
            value = field.neg(value)
        bump(degree, value)
        ch = sc.peek()
        if ch == "+":
            sc.pos += 1
            sign = 1
        elif ch == "-":
            sc.pos += 1
            sign = -1
        elif ch == "":
            break
        else:
            raise ParseError(f"unexpected {ch!r} in polynomial", sc.pos)
    return poly_trim(coeffs)


# ---------------------------------------------------------------------------
# ring specs


_GF_QUOT = re.compile(r"^GF\((\d+)\)\[t\]/\((.+)\)$")
_GF_PID = re.compile(r"^GF\((\d+)\)\[t\]$")
_ZMOD = re.compile(r"^Z/(\d+)$")


def parse_ring_spec(src: str) -> Union[FiniteRing, RingSpec]:
    if not src or not src.strip():
        raise ParseError("empty ring spec")
    parts = re.split(r"\s+x\s+", src.strip())
    concrete: List[FiniteRing] = []
    symbolic: List[str] = []
    for part in parts:
        kind, value = _parse_factor(part)
        if kind == "ring":
            concrete.append(value)
        else:
            symbolic.append(value)
    if symbolic:
        lengths: List[int] = []
        for ring in concrete:
            from .rings import crt_decompose

            locals_, _ = crt_decompose(ring)
            lengths.extend(loc.element_length(loc.zero) for loc in locals_)
        return RingSpec(tuple(symbolic), tuple(lengths))
    if len(concrete) == 1:
        return concrete[0]
    return ProductRing(concrete)


def _parse_factor(part: str):
    part = part.strip()
    if part == "Z":
        return "pid", "Z"
    if part == "GF(2)[x,y]/(x,y)^2":
        from .rings import truncated_bivariate_fixture

        return "ring", truncated_bivariate_fixture()
    m = _ZMOD.match(part)
    if m:
        return "ring", Zmod(int(m.group(1)))
    m = _GF_PID.match(part)
    if m:
        q = int(m.group(1))
        GaloisField(q)  # existence check
        return "pid", f"GF({q})[t]"
    m = _GF_QUOT.match(part)
    if m:
        q = int(m.group(1))
        field = GaloisField(q)
        coeffs = parse_poly(m.group(2), field, field.embed_int)
        return "ring", PolyQuotient(field, coeffs)
    raise ParseError(f"unrecognized ring factor {part!r}")


# ---------------------------------------------------------------------------
# ring elements


def parse_element(ring: FiniteRing, src: str):
    src = src.strip()
    if isinstance(ring, Zmod):
        try:
            return int(src) % ring.n
        except ValueError:
            raise ParseError(f"expected an integer element, got {src!r}")
    if isinstance(ring, PolyQuotient):
        q = ring.field.size
        coeffs = parse_poly(src, ring.field, lambda c: c % q)
        return ring.reduce(coeffs)
    if isinstance(ring, ProductRing):
        if not (src.startswith("(") and src.endswith(")")):
            raise ParseError(f"expected a tuple element, got {src!r}")
        pieces = _split_top_level(src[1:-1])
        if len(pieces) != len(ring.factors):
            raise ParseError(
                f"expected {len(ring.factors)} coordinates, got {len(pieces)}"
            )
        return tuple(parse_element(f, piece) for f, piece in zip(ring.factors, pieces))
    if isinstance(ring, QuotientRing):
        return ring.projection(parse_element(ring.base, src))
    if isinstance(ring, TableRing):
        if src in ring.elements:
            return src
        raise ParseError(f"unknown element label {src!r}")
    raise ParseError(f"cannot parse elements of {type(ring).__name__}")


def _split_top_level(src: str) -> List[str]:
    pieces, depth, start = [], 0, 0
    for i, ch in enumerate(src):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            pieces.append(src[start:i])
            start = i + 1
    pieces.append(src[start:])
    return pieces


def parse_fraction(src: str) -> Fraction:
    try:
        return Fraction(src.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad fraction {src!r}: {exc}")


# ---------------------------------------------------------------------------
# posets as edge lists


def parse_poset(src: str):
    """Poset from edge-list text: one ``a < b`` cover per line.

    Labels are arbitrary whitespace-free strings; blank lines and lines
    starting with ``#`` are skipped.  Isolated elements can be listed on
    a line of their own.
    """
    from .poset import FinitePoset

    elements: List[str] = []
    seen = set()
    pairs = []

    def note(label: str):
        if label not in seen:
            seen.add(label)
            elements.append(label)

    for lineno, line in enumerate(src.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("<")
        if len(parts) == 1:
            note(line)
            continue
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise ParseError(f"expected 'a < b' on line {lineno}, got {line!r}")
        lo, hi = parts[0].strip(), parts[1].strip()
        note(lo)
        note(hi)
        pairs.append((lo, hi))
    return FinitePoset(elements, pairs)


# ---------------------------------------------------------------------------
# table round trip


def table_from_dict(data: dict) -> EuclideanTable:
    ring = parse_ring_spec(data["ring"])
    if not isinstance(ring, FiniteRing):
        raise DomainError("tables exist for concrete finite rings only")
    values = {
        parse_element(ring, key): parse_ordinal(text)
        for key, text in data["values"].items()
    }
    return EuclideanTable(
        ring,
        values,
        parse_ordinal(data["value_at_zero"]),
        validated=bool(data.get("validated", False)),
        is_bottom=bool(data.get("bottom", False)),
    )
