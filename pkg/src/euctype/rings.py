"""Concrete finite commutative rings with enumerable carriers.

Supported carriers: residue rings Z/n, polynomial quotients GF(q)[t]/(f),
finite products of those, quotients by a principal ideal, and explicitly
table-presented rings (used for non-principal specimens).  Elements are
plain hashable values -- ints for Z/n, coefficient tuples for polynomial
quotients, tuples for products, labels for table rings -- and the list
``ring.elements`` fixes the canonical order used everywhere (witness
search, counterexample reporting, coset representatives).

Ideal-theoretic operations (ideal enumeration, lengths, CRT) work by
exhaustive search over the carrier and are meant for desk scale; the
enumeration bound is explicit.
"""

from __future__ import annotations

import itertools
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import DomainError, ResourceError

IDEAL_ENUMERATION_BOUND = 512


# ---------------------------------------------------------------------------
# polynomials over a finite field (coefficient tuples, constant term first)


def poly_trim(a: Sequence[int]) -> Tuple[int, ...]:
    a = tuple(a)
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def poly_deg(a: Sequence[int]) -> int:
    return len(poly_trim(a)) - 1  # -1 for the zero polynomial


def poly_add(F, a, b) -> Tuple[int, ...]:
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return poly_trim(F.add(x, y) for x, y in zip(a, b))


def poly_neg(F, a) -> Tuple[int, ...]:
    return tuple(F.neg(x) for x in a)


def poly_mul(F, a, b) -> Tuple[int, ...]:
    a, b = poly_trim(a), poly_trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_trim(out)


def poly_divmod(F, a, b) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    a, b = list(poly_trim(a)), poly_trim(b)
    if not b:
        raise DomainError("polynomial division by zero")
    inv_lead = F.inv(b[-1])
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = F.mul(a[-1], inv_lead)
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] = F.add(a[d + i], F.neg(F.mul(c, y)))
        a = list(poly_trim(a))
        if not a:
            break
    return poly_trim(q), poly_trim(a)


def poly_mod(F, a, b) -> Tuple[int, ...]:
    return poly_divmod(F, a, b)[1]


def _monic_polys(F, degree: int):
    """All monic polynomials of the given degree, smallest encoding first."""
    for lower in itertools.product(range(F.size), repeat=degree):
        yield poly_trim(lower + (1,)) if degree else (1,)


def poly_is_irreducible(F, f) -> bool:
    f = poly_trim(f)
    d = len(f) - 1
    if d < 1:
        return False
    for e in range(1, d // 2 + 1):
        for g in _monic_polys(F, e):
            if not poly_mod(F, f, g):
                return False
    return True


def poly_factor(F, f) -> Dict[Tuple[int, ...], int]:
    """Factor a nonzero polynomial into monic irreducibles with multiplicity."""
    f = poly_trim(f)
    if not f:
        raise DomainError("cannot factor the zero polynomial")
    factors: Dict[Tuple[int, ...], int] = {}
    # normalize to monic; the unit factor does not matter for ideals
    f = poly_mul(F, f, (F.inv(f[-1]),))
    d = 1
    while len(f) - 1 >= 1:
        hit = False
        for g in _monic_polys(F, d):
            if len(g) - 1 > len(f) - 1:
                break
            if poly_is_irreducible(F, g) and not poly_mod(F, f, g):
                factors[g] = factors.get(g, 0) + 1
                f = poly_divmod(F, f, g)[0]
                hit = True
                break
        if not hit:
            d += 1
    return factors


# ---------------------------------------------------------------------------
# finite fields GF(p^k)


def _prime_power(q: int) -> Tuple[int, int]:
    if q < 2:
        raise DomainError(f"GF({q}) does not exist")
    p = 2
    n = q
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        p = n
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise DomainError(f"GF({q}) does not exist: {q} is not a prime power")
    return p, k


class GaloisField:
    """GF(p^k) with elements 0..q-1 encoded as base-p coefficient vectors.

    For k > 1 arithmetic is modulo a fixed irreducible polynomial over
    GF(p): the monic degree-k irreducible with the smallest base-p
    encoding of its non-leading coefficients.  The choice is recorded in
    ``modulus`` so runs are reproducible.
    """

    _cache: Dict[int, "GaloisField"] = {}

    def __new__(cls, q: int):
        if q in cls._cache:
            return cls._cache[q]
        self = super().__new__(cls)
        cls._cache[q] = self
        return self

    def __init__(self, q: int):
        if hasattr(self, "size"):
            return
        p, k = _prime_power(q)
        self.p, self.k, self.size = p, k, q
        self.name = f"GF({q})"
        if k == 1:
            self.modulus: Tuple[int, ...] = ()
            self._mul_table = None
        else:
            base = GaloisField(p)
            for m in range(q):
                cand = poly_trim(tuple(_digits(m, p, k)) + (1,))
                if poly_is_irreducible(base, cand):
                    self.modulus = cand
                    break
            self._mul_table = {}
            for a in range(q):
                pa = _digits(a, p, k)
                for b in range(q):
                    prod = poly_mod(base, poly_mul(base, pa, _digits(b, p, k)), self.modulus)
                    self._mul_table[(a, b)] = _undigits(prod, p)

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return _undigits(
            [(x + y) % self.p for x, y in zip(_digits(a, self.p, self.k), _digits(b, self.p, self.k))],
            self.p,
        )

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return _undigits([(-x) % self.p for x in _digits(a, self.p, self.k)], self.p)

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        return self._mul_table[(a, b)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no inverse")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        for b in range(1, self.size):
            if self.mul(a, b) == 1:
                return b
        raise AssertionError("unreachable: field element without inverse")

    def embed_int(self, c: int) -> int:
        """Integer coefficient reduced into the prime subfield."""
        return c % self.p


def _digits(n: int, p: int, k: int) -> Tuple[int, ...]:
    out = []
    for _ in range(k):
        out.append(n % p)
        n //= p
    return tuple(out)


def _undigits(digs: Sequence[int], p: int) -> int:
    out = 0
    for d in reversed(tuple(digs)):
        out = out * p + d
    return out


# ---------------------------------------------------------------------------
# ring interface


class FiniteRing:
    """Base class: subclasses set elements/zero/one/name and add/mul/neg."""

    elements: Tuple
    zero: object
    one: object
    name: str

    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    # subclasses that are principal by construction set this True
    _known_principal: Optional[bool] = None

    def __len__(self):
        return len(self.elements)

    def index(self, x) -> int:
        try:
            return self._index[x]
        except AttributeError:
            self._index = {e: i for i, e in enumerate(self.elements)}
            return self._index[x]

    def format_element(self, x) -> str:
        return str(x)

    # -- units and divisibility -------------------------------------------

    def units(self) -> FrozenSet:
        try:
            return self._units
        except AttributeError:
            one = self.one
            us = frozenset(
                x for x in self.elements if any(self.mul(x, y) == one for y in self.elements)
            )
            self._units = us
            return us

    def is_unit(self, x) -> bool:
        return x in self.units()

    def divides(self, x, y) -> bool:
        """True iff y = qx for some q (exhaustive over the carrier)."""
        return y in self.principal_ideal(x)

    def strictly_divides(self, x, y) -> bool:
        return self.divides(x, y) and not self.divides(y, x)

    # -- ideals ------------------------------------------------------------

    def principal_ideal(self, x) -> FrozenSet:
        return self.principal_ideals()[x]

    def principal_ideals(self) -> Dict[object, FrozenSet]:
        """The map x -> (x), computed once for the whole carrier."""
        try:
            return self._pids
        except AttributeError:
            mul = self.mul
            elems = self.elements
            seen: Dict[FrozenSet, FrozenSet] = {}
            pids = {}
            for x in elems:
                ideal = frozenset(mul(q, x) for q in elems)
                pids[x] = seen.setdefault(ideal, ideal)
            self._pids = pids
            return pids

    def all_ideals(self, max_size: int = IDEAL_ENUMERATION_BOUND) -> List[FrozenSet]:
        """Every ideal, by closing generated subsets one generator at a time."""
        if len(self.elements) > max_size:
            raise ResourceError(
                f"{self.name} has {len(self.elements)} elements; "
                f"ideal enumeration is bounded at {max_size}"
            )
        add = self.add
        pids = self.principal_ideals()
        found = {frozenset([self.zero])}
        work = [frozenset([self.zero])]
        while work:
            ideal = work.pop()
            for x in self.elements:
                if x in ideal:
                    continue
                # (I, x) = I + (x): the sum of two additively closed ideals
                bigger = frozenset(add(a, b) for a in ideal for b in pids[x])
                if bigger not in found:
                    found.add(bigger)
                    work.append(bigger)
        return sorted(found, key=lambda s: (len(s), sorted(self.index(e) for e in s)))

    def is_principal(self, max_size: int = IDEAL_ENUMERATION_BOUND) -> bool:
        if self._known_principal is not None:
            return self._known_principal
        principal = set(self.principal_ideals().values())
        ok = all(ideal in principal for ideal in self.all_ideals(max_size))
        self._known_principal = ok
        return ok

    def _require_principal(self):
        if not self.is_principal():
            raise DomainError(f"{self.name} is not a principal ring")

    def element_length(self, x) -> int:
        """Longest strictly increasing chain of ideals from (x) up to R."""
        self._require_principal()
        try:
            up = self._chain_up
        except AttributeError:
            distinct = sorted(set(self.principal_ideals().values()), key=len, reverse=True)
            up = {}
            for ideal in distinct:  # larger ideals first
                up[ideal] = max(
                    (up[other] + 1 for other in distinct if len(other) > len(ideal) and ideal < other),
                    default=0,
                )
            self._chain_up = up
        return up[self.principal_ideal(x)]

    def quotient_ring(self, b) -> "QuotientRing":
        return QuotientRing(self, b)


class Zmod(FiniteRing):
    def __init__(self, n: int):
        if n < 2:
            raise DomainError(f"Z/{n} has fewer than two elements")
        self.n = n
        self.elements = tuple(range(n))
        self.zero, self.one = 0, 1
        self.name = f"Z/{n}"
        self._known_principal = True

    def add(self, x, y):
        return (x + y) % self.n

    def mul(self, x, y):
        return (x * y) % self.n

    def neg(self, x):
        return (-x) % self.n


class PolyQuotient(FiniteRing):
    """GF(q)[t]/(f): coefficient tuples of fixed length deg(f), constant first."""

    _TABLE_LIMIT = 128

    def __init__(self, field: GaloisField, modulus: Sequence[int]):
        modulus = poly_trim(modulus)
        if len(modulus) - 1 < 1:
            raise DomainError("quotient modulus must have degree >= 1")
        # normalize to monic; same ideal, deterministic representatives
        if modulus[-1] != 1:
            modulus = poly_mul(field, modulus, (field.inv(modulus[-1]),))
        self.field = field
        self.modulus = modulus
        self.deg = len(modulus) - 1
        self.elements = tuple(itertools.product(range(field.size), repeat=self.deg))
        self.zero = (0,) * self.deg
        self.one = (1,) + (0,) * (self.deg - 1)
        self.name = f"{field.name}[t]/({format_poly(modulus)})"
        self._known_principal = True
        if len(self.elements) <= self._TABLE_LIMIT:
            self._table = {
                (x, y): self._mul_slow(x, y) for x in self.elements for y in self.elements
            }
        else:
            self._table = None

    def _pad(self, coeffs) -> Tuple[int, ...]:
        coeffs = tuple(coeffs)
        return coeffs + (0,) * (self.deg - len(coeffs))

    def add(self, x, y):
        F = self.field
        return tuple(F.add(a, b) for a, b in zip(x, y))

    def neg(self, x):
        F = self.field
        return tuple(F.neg(a) for a in x)

    def _mul_slow(self, x, y):
        return self._pad(poly_mod(self.field, poly_mul(self.field, x, y), self.modulus))

    def mul(self, x, y):
        if self._table is not None:
            return self._table[(x, y)]
        return self._mul_slow(x, y)

    def reduce(self, coeffs) -> Tuple[int, ...]:
        """Canonical representative of an arbitrary coefficient tuple."""
        return self._pad(poly_mod(self.field, coeffs, self.modulus))

    def format_element(self, x) -> str:
        return format_poly(x)


def format_poly(coeffs: Sequence[int]) -> str:
    coeffs = poly_trim(coeffs)
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            t = "t" if i == 1 else f"t^{i}"
            parts.append(t if c == 1 else f"{c}*{t}")
    return "+".join(parts)


class ProductRing(FiniteRing):
    def __init__(self, factors: Sequence[FiniteRing]):
        if not factors:
            raise DomainError("a product ring needs at least one factor")
        self.factors = tuple(factors)
        self.elements = tuple(itertools.product(*(f.elements for f in factors)))
        self.zero = tuple(f.zero for f in factors)
        self.one = tuple(f.one for f in factors)
        self.name = " x ".join(f.name for f in factors)
        kp = [f._known_principal for f in factors]
        self._known_principal = True if all(v is True for v in kp) else None

    def add(self, x, y):
        return tuple(f.add(a, b) for f, a, b in zip(self.factors, x, y))

    def mul(self, x, y):
        return tuple(f.mul(a, b) for f, a, b in zip(self.factors, x, y))

    def neg(self, x):
        return tuple(f.neg(a) for f, a in zip(self.factors, x))

    def format_element(self, x) -> str:
        return "(" + ", ".join(f.format_element(a) for f, a in zip(self.factors, x)) + ")"

    def inject(self, i: int, value) -> Tuple:
        """The element with ``value`` in factor i and 0 elsewhere."""
        return tuple(value if j == i else f.zero for j, f in enumerate(self.factors))


class QuotientRing(FiniteRing):
    """R/(b) on canonical coset representatives, with projection and section."""

    def __init__(self, base: FiniteRing, b):
        ideal = base.principal_ideal(b)
        if len(ideal) == len(base.elements):
            raise DomainError(
                f"quotient of {base.name} by the unit ideal ({base.format_element(b)}) "
                "has one element"
            )
        self.base = base
        self.modulus_element = b
        proj: Dict[object, object] = {}
        reps = []
        cosets: Dict[object, Tuple] = {}
        for x in base.elements:
            if x in proj:
                continue
            members = tuple(sorted((base.add(x, i) for i in ideal), key=base.index))
            rep = members[0]
            reps.append(rep)
            cosets[rep] = members
            for m in members:
                proj[m] = rep
        self._proj = proj
        self._cosets = cosets
        self.elements = tuple(reps)
        self.zero = proj[base.zero]
        self.one = proj[base.one]
        self.name = f"{base.name}/({base.format_element(b)})"
        self._known_principal = True if base._known_principal else None

    def projection(self, x):
        return self._proj[x]

    def section(self, xbar):
        return xbar

    def coset(self, xbar) -> Tuple:
        return self._cosets[xbar]

    def add(self, x, y):
        return self._proj[self.base.add(x, y)]

    def mul(self, x, y):
        return self._proj[self.base.mul(x, y)]

    def neg(self, x):
        return self._proj[self.base.neg(x)]

    def format_element(self, x) -> str:
        return self.base.format_element(x)


class TableRing(FiniteRing):
    """A ring presented by explicit operation tables over opaque labels."""

    def __init__(self, labels: Sequence, add_table: Dict, mul_table: Dict, zero, one, name: str):
        self.elements = tuple(labels)
        self._add = add_table
        self._mul = mul_table
        self.zero, self.one = zero, one
        self.name = name

    def add(self, x, y):
        return self._add[(x, y)]

    def mul(self, x, y):
        return self._mul[(x, y)]

    def neg(self, x):
        for y in self.elements:
            if self._add[(x, y)] == self.zero:
                return y
        raise DomainError(f"{x!r} has no additive inverse; not a ring table")


def truncated_bivariate_fixture() -> TableRing:
    """The 8-element ring of a + bX + cY over GF(2) with X^2 = XY = Y^2 = 0.

    Its ideal (X, Y) needs two generators, so the ring is not principal and
    hence admits no Euclidean function; it is the stock negative specimen.
    """

    def label(v):
        a, b, c = v
        parts = [s for s, coef in (("1", a), ("x", b), ("y", c)) if coef]
        return "+".join(parts) if parts else "0"

    vectors = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    add_t, mul_t = {}, {}
    for u in vectors:
        for v in vectors:
            s = tuple((x + y) % 2 for x, y in zip(u, v))
            p = ((u[0] * v[0]) % 2, (u[0] * v[1] + u[1] * v[0]) % 2, (u[0] * v[2] + u[2] * v[0]) % 2)
            add_t[(label(u), label(v))] = label(s)
            mul_t[(label(u), label(v))] = label(p)
    labels = [label(v) for v in vectors]
    return TableRing(labels, add_t, mul_t, "0", "1", "GF(2)[x,y]/(x,y)^2")


# ---------------------------------------------------------------------------
# CRT decomposition


def _int_factor(n: int) -> Dict[int, int]:
    out: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def crt_decompose(ring: FiniteRing):
    """Split into local factors; returns (locals, iso) with iso: x -> coords.

    Multiplying the local factors back together gives a ring isomorphic to
    the input, the isomorphism being exactly ``iso``.
    """
    if isinstance(ring, Zmod):
        fac = _int_factor(ring.n)
        if len(fac) == 1:
            return [ring], {x: (x,) for x in ring.elements}
        moduli = [p ** k for p, k in sorted(fac.items())]
        locals_ = [Zmod(m) for m in moduli]
        iso = {x: tuple(x % m for m in moduli) for x in ring.elements}
        return locals_, iso
    if isinstance(ring, PolyQuotient):
        fac = poly_factor(ring.field, ring.modulus)
        if len(fac) == 1:
            return [ring], {x: (x,) for x in ring.elements}
        parts = []
        for g in sorted(fac):
            ge = (1,)
            for _ in range(fac[g]):
                ge = poly_mul(ring.field, ge, g)
            parts.append(PolyQuotient(ring.field, ge))
        iso = {x: tuple(part.reduce(x) for part in parts) for x in ring.elements}
        return parts, iso
    if isinstance(ring, ProductRing):
        locals_: List[FiniteRing] = []
        factor_isos = []
        for f in ring.factors:
            locs, iso = crt_decompose(f)
            locals_.extend(locs)
            factor_isos.append(iso)
        combined = {}
        for x in ring.elements:
            coords: Tuple = ()
            for coord, iso in zip(x, factor_isos):
                coords += iso[coord]
            combined[x] = coords
        return locals_, combined
    ring._require_principal()
    raise DomainError(f"CRT decomposition is not supported for {type(ring).__name__}")
