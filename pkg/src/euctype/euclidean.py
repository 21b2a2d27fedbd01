"""Euclidean-function tables on finite rings.

A table assigns every nonzero element an ordinal value; the value at zero
is always the supremum of the nonzero values plus one.  Tables are either
exhaustively validated against the division property at construction or
explicitly carry ``validated=False``; all transforms insist on validated
inputs.

The centerpiece is the bottom table: the pointwise-least Euclidean
function, computed as a breadth-first fixed point that assigns whole
levels at a time.  Level 0 is exactly the units, and the nonzero values
always form an initial segment of the naturals.  If a round assigns
nothing while nonzero elements remain, the ring admits no Euclidean
function at all and the stall is reported as a finding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .errors import DomainError, NotEuclideanRing
from .ordinal import Ordinal, left_subtract, natural_sum
from .rings import FiniteRing, ProductRing


@dataclass
class EuclideanTable:
    ring: FiniteRing
    values: Dict[object, Ordinal]          # total on nonzero elements
    value_at_zero: Ordinal
    validated: bool
    is_bottom: bool = False

    def value(self, x) -> Ordinal:
        """Value including the extension at zero."""
        if x == self.ring.zero:
            return self.value_at_zero
        return self.values[x]


@dataclass
class PairTable:
    ring: ProductRing
    values: Dict[object, Tuple[Ordinal, Ordinal]]   # total on nonzero elements
    components: Tuple[EuclideanTable, EuclideanTable]


@dataclass
class DivisionWitness:
    quotient: object
    remainder: object


def _sup_plus_one(values: Dict[object, Ordinal]) -> Ordinal:
    return max(values.values()).successor() if values else Ordinal(1)


def _ranks(table_values: Dict[object, Ordinal]) -> Dict[object, int]:
    """Element -> rank of its value; ranks compare like the ordinals do."""
    order = {v: i for i, v in enumerate(sorted(set(table_values.values())))}
    return {x: order[v] for x, v in table_values.items()}


def _coset_partition(ring: FiniteRing, ideal: frozenset):
    """Map element -> coset id for the given ideal, plus the coset count."""
    cache = getattr(ring, "_coset_cache", None)
    if cache is None:
        cache = ring._coset_cache = {}
    if ideal in cache:
        return cache[ideal]
    add = ring.add
    cid: Dict[object, int] = {}
    k = 0
    for x in ring.elements:
        if x in cid:
            continue
        for i in ideal:
            cid[add(x, i)] = k
        k += 1
    cache[ideal] = (cid, k)
    return cid, k


def division_counterexample(ring: FiniteRing, values: Dict[object, Ordinal]):
    """Least (a, b) with no valid quotient, or None if the table is Euclidean.

    A pair (a, b) is satisfied iff the coset a + (b) contains 0 or some r
    with value below the value of b; checking cosets instead of quotients
    keeps the search quadratic in the carrier.
    """
    zero = ring.zero
    pids = ring.principal_ideals()
    rank = _ranks(values)
    index = ring.index
    best = None
    for b in ring.elements:
        if b == zero:
            continue
        cid, k = _coset_partition(ring, pids[b])
        hit = [False] * k
        hit[cid[zero]] = True
        rb = rank[b]
        for r, rr in rank.items():
            if rr < rb:
                hit[cid[r]] = True
        if all(hit):
            continue
        bad = min((x for x in ring.elements if not hit[cid[x]]), key=index)
        if best is None or (index(bad), index(b)) < (index(best[0]), index(best[1])):
            best = (bad, b)
    return best


def is_euclidean_function(table: EuclideanTable):
    """(ok, counterexample) for the division property, checked exhaustively."""
    cex = division_counterexample(table.ring, table.values)
    return cex is None, cex


def make_table(ring: FiniteRing, values: Dict[object, Ordinal], validate: bool = True,
               is_bottom: bool = False) -> EuclideanTable:
    nonzero = {x for x in ring.elements if x != ring.zero}
    if set(values) != nonzero:
        raise DomainError("table must assign exactly the nonzero elements")
    if validate:
        cex = division_counterexample(ring, values)
        if cex is not None:
            a, b = cex
            raise DomainError(
                f"not a Euclidean function on {ring.name}: no quotient for "
                f"a={ring.format_element(a)}, b={ring.format_element(b)}"
            )
    return EuclideanTable(ring, dict(values), _sup_plus_one(values), validate, is_bottom)


def divide(table: EuclideanTable, a, b) -> DivisionWitness:
    """First witness a = qb + r with r = 0 or value(r) < value(b), scanning
    quotients in canonical element order."""
    ring = table.ring
    if b == ring.zero:
        raise DomainError("division by zero")
    rank = _ranks(table.values)
    rb = rank[b]
    for q in ring.elements:
        r = ring.sub(a, ring.mul(q, b))
        if r == ring.zero or rank[r] < rb:
            return DivisionWitness(q, r)
    raise DomainError(f"table on {ring.name} is not Euclidean at ({a!r}, {b!r})")


# ---------------------------------------------------------------------------
# the bottom table


def bottom_euclidean(ring: FiniteRing) -> EuclideanTable:
    """Least Euclidean table by the level-at-a-time fixed point.

    An element b enters the current level when every coset of (b) already
    meets {0} plus the previously assigned elements.  The value of b only
    depends on the ideal (b), so the rounds operate on ideal classes.
    Raises :class:`NotEuclideanRing` when the fixed point stalls.
    """
    zero = ring.zero
    pids = ring.principal_ideals()
    classes: Dict[frozenset, list] = {}
    for x in ring.elements:
        if x != zero:
            classes.setdefault(pids[x], []).append(x)

    partitions = {ideal: _coset_partition(ring, ideal) for ideal in classes}
    unsat: Dict[frozenset, set] = {}
    for ideal, (cid, k) in partitions.items():
        unsat[ideal] = set(range(k)) - {cid[zero]}

    assigned: Dict[object, int] = {}
    remaining = set(classes)
    level = 0
    while remaining:
        ready = [ideal for ideal in remaining if not unsat[ideal]]
        if not ready:
            stuck = sorted((x for i in remaining for x in classes[i]), key=ring.index)
            raise NotEuclideanRing(ring, stuck, assigned)
        newly = []
        for ideal in ready:
            for x in classes[ideal]:
                assigned[x] = level
                newly.append(x)
            remaining.discard(ideal)
        for ideal in remaining:
            cid = partitions[ideal][0]
            live = unsat[ideal]
            for x in newly:
                live.discard(cid[x])
        level += 1

    values = {x: Ordinal(v) for x, v in assigned.items()}
    return EuclideanTable(ring, values, Ordinal(level), validated=True, is_bottom=True)


def order_type(table: EuclideanTable) -> Ordinal:
    """The ordinal of distinct bottom values; equals the value at zero."""
    if not table.is_bottom:
        raise DomainError("order type is defined for the bottom table only")
    return table.value_at_zero


# ---------------------------------------------------------------------------
# transforms


def _require_validated(table: EuclideanTable):
    if not table.validated:
        raise DomainError("operation requires a validated table")


def isotone_minimization(table: EuclideanTable) -> EuclideanTable:
    """Largest divisibility-isotone Euclidean table below the input:
    each x is sent to the least value on the nonzero multiples of x."""
    _require_validated(table)
    ring = table.ring
    zero = ring.zero
    pids = ring.principal_ideals()
    new_values = {
        x: min(table.values[y] for y in pids[x] if y != zero)
        for x in table.values
    }
    out = make_table(ring, new_values, validate=True)
    out.is_bottom = table.is_bottom and new_values == table.values
    return out


def _divisibility_monotone(table: EuclideanTable, strict: bool) -> bool:
    # strict mode checks isotonicity on the ordered quotient by association:
    # associates share a value and strict divisibility strictly increases it.
    # This is the reading under which a Euclidean table is isotone iff it is
    # weakly isotone.
    ring = table.ring
    pids = ring.principal_ideals()
    for x, vx in table.values.items():
        ix = pids[x]
        for y, vy in table.values.items():
            if y == x or y not in ix:
                continue
            # x divides y here
            if strict:
                if x in pids[y]:
                    if vx != vy:
                        return False
                elif not vx < vy:
                    return False
            elif not vx <= vy:
                return False
    return True


def is_isotone_euclidean(table: EuclideanTable) -> bool:
    _require_validated(table)
    return _divisibility_monotone(table, strict=True)


def is_weakly_isotone_euclidean(table: EuclideanTable) -> bool:
    _require_validated(table)
    return _divisibility_monotone(table, strict=False)


def quotient_euclidean(table: EuclideanTable, b) -> EuclideanTable:
    """Push the table down to R/(b) by taking minimal-value lifts."""
    _require_validated(table)
    ring = table.ring
    quot = ring.quotient_ring(b)
    values = {}
    for xbar in quot.elements:
        if xbar == quot.zero:
            continue
        values[xbar] = min(table.values[m] for m in quot.coset(xbar))
    return make_table(quot, values, validate=True)


def nagata_product(t1: EuclideanTable, t2: EuclideanTable) -> PairTable:
    """Componentwise pair-valued function on R1 x R2; division witnesses
    come from :func:`pair_divide`."""
    _require_validated(t1)
    _require_validated(t2)
    ring = ProductRing([t1.ring, t2.ring])
    values = {}
    for x in ring.elements:
        if x == ring.zero:
            continue
        values[x] = (t1.value(x[0]), t2.value(x[1]))
    return PairTable(ring, values, (t1, t2))


def pair_divide(pt: PairTable, x, y) -> DivisionWitness:
    """Division witness for the pair table, remainder strictly below the
    value of y in the componentwise order.

    Componentwise division can leave one remainder zero while the matching
    divisor coordinate is not; the fix is to shift that quotient
    coordinate down by one so the remainder picks up the divisor
    coordinate itself.
    """
    ring = pt.ring
    t1, t2 = pt.components
    r1ring, r2ring = ring.factors
    if y == ring.zero:
        raise DomainError("division by zero")
    for q in ring.elements:
        if ring.mul(q, y) == x:
            return DivisionWitness(q, ring.zero)

    def component(t, fac, a, b):
        if b == fac.zero:
            return fac.zero, a
        w = divide(t, a, b)
        return w.quotient, w.remainder

    q1, r1 = component(t1, r1ring, x[0], y[0])
    q2, r2 = component(t2, r2ring, x[1], y[1])
    z1, z2 = r1ring.zero, r2ring.zero
    if r1 == z1 and y[0] != z1:
        # remainder must pick up the first divisor coordinate
        return DivisionWitness((r1ring.sub(q1, r1ring.one), q2), (y[0], r2))
    if r2 == z2 and y[1] != z2:
        return DivisionWitness((q1, r2ring.sub(q2, r2ring.one)), (r1, y[1]))
    return DivisionWitness((q1, q2), (r1, r2))


def pair_value(pt: PairTable, x) -> Tuple[Ordinal, Ordinal]:
    if x == pt.ring.zero:
        t1, t2 = pt.components
        return (t1.value_at_zero, t2.value_at_zero)
    return pt.values[x]


def pair_less(a: Tuple[Ordinal, Ordinal], b: Tuple[Ordinal, Ordinal]) -> bool:
    """Strictly below in the componentwise (product) order."""
    return a[0] <= b[0] and a[1] <= b[1] and a != b


def collapse_pair_table(pt: PairTable) -> EuclideanTable:
    """Ordinal-valued table obtained by composing with the length function
    of the product value poset, i.e. the natural sum of the components."""
    values = {x: natural_sum(v1, v2) for x, (v1, v2) in pt.values.items()}
    return make_table(pt.ring, values, validate=True)


def residual_euclidean(table: EuclideanTable, factor: int = 1) -> EuclideanTable:
    """Euclidean function on one factor of a product, recovered from the
    bottom table of the product by left subtraction.

    With u the indicator carrying 1 in the chosen factor and 0 elsewhere,
    y is sent to -value(u) + value(u with 1 replaced by y).
    """
    _require_validated(table)
    if not table.is_bottom:
        raise DomainError("residual table is defined from the bottom table")
    ring = table.ring
    if not isinstance(ring, ProductRing) or len(ring.factors) != 2:
        raise DomainError("residual table needs a two-factor product ring")
    if factor not in (0, 1):
        raise DomainError("factor index must be 0 or 1")
    fac = ring.factors[factor]
    base = table.values[ring.inject(factor, fac.one)]
    values = {}
    for y in fac.elements:
        if y == fac.zero:
            continue
        values[y] = left_subtract(base, table.values[ring.inject(factor, y)])
    return make_table(fac, values, validate=True)


def check_l_euclidean(ring: FiniteRing):
    """(ok, counterexample) for x -> ideal-chain length as a candidate
    Euclidean function."""
    ring._require_principal()
    values = {
        x: Ordinal(ring.element_length(x)) for x in ring.elements if x != ring.zero
    }
    cex = division_counterexample(ring, values)
    return cex is None, cex


def length_table(ring: FiniteRing) -> EuclideanTable:
    """The x -> ideal-chain-length table, validated; fails if not Euclidean."""
    ring._require_principal()
    values = {
        x: Ordinal(ring.element_length(x)) for x in ring.elements if x != ring.zero
    }
    return make_table(ring, values, validate=True)


# ---------------------------------------------------------------------------
# serialization


def table_to_dict(table: EuclideanTable) -> dict:
    ring = table.ring
    return {
        "ring": ring.name,
        "values": {
            ring.format_element(x): str(v)
            for x, v in sorted(table.values.items(), key=lambda kv: ring.index(kv[0]))
        },
        "value_at_zero": str(table.value_at_zero),
        "validated": table.validated,
        "bottom": table.is_bottom,
    }
