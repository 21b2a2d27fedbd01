"""Finite strict orders, their least isotone map, and finite Brookfield sums.

A poset is given by an element set plus any generating set of strict pairs;
the full order is the transitive closure, computed once and cached.  The
least isotone map assigns each element the length of the longest strict
chain strictly below it, which on a finite poset coincides with the staged
least-value construction.
"""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, Mapping, Tuple

from .errors import DomainError

IsotoneMap = Dict[Hashable, int]


class FinitePoset:
    def __init__(self, elements: Iterable[Hashable], pairs: Iterable[Tuple[Hashable, Hashable]]):
        self.elements = tuple(elements)
        self._elemset = set(self.elements)
        if len(self._elemset) != len(self.elements):
            raise DomainError("duplicate element labels")
        self.pairs = tuple(pairs)
        for lo, hi in self.pairs:
            if lo not in self._elemset or hi not in self._elemset:
                raise DomainError(f"pair ({lo!r}, {hi!r}) mentions unknown labels")
        self._below = None  # element -> set of strictly smaller elements

    def _strictly_below(self) -> Dict[Hashable, set]:
        """Transitive closure as a strictly-below map; rejects cycles."""
        if self._below is not None:
            return self._below
        preds: Dict[Hashable, set] = {x: set() for x in self.elements}
        succs: Dict[Hashable, set] = {x: set() for x in self.elements}
        for lo, hi in self.pairs:
            preds[hi].add(lo)
            succs[lo].add(hi)
        # Kahn order over the generating pairs, then accumulate closures
        indeg = {x: len(preds[x]) for x in self.elements}
        queue = [x for x in self.elements if indeg[x] == 0]
        order = []
        while queue:
            x = queue.pop()
            order.append(x)
            for y in succs[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
        if len(order) != len(self.elements):
            raise DomainError("relation has a cycle; not a strict order")
        below: Dict[Hashable, set] = {x: set() for x in self.elements}
        for x in order:
            acc = below[x]
            for p in preds[x]:
                acc.add(p)
                acc |= below[p]
        self._below = below
        return below

    def less(self, a: Hashable, b: Hashable) -> bool:
        return a in self._strictly_below()[b]

    def maximal_elements(self) -> Tuple[Hashable, ...]:
        below = self._strictly_below()
        dominated = set()
        for x in self.elements:
            dominated |= below[x]
        return tuple(x for x in self.elements if x not in dominated)

    def top(self) -> Hashable:
        maxes = self.maximal_elements()
        if len(maxes) != 1:
            raise DomainError(f"poset has {len(maxes)} maximal elements, no unique top")
        return maxes[0]


def chain(n: int) -> FinitePoset:
    """The linear order 0 < 1 < ... < n-1."""
    if n < 1:
        raise DomainError("chain needs at least one element")
    return FinitePoset(range(n), [(i, i + 1) for i in range(n - 1)])


def antichain(labels: Iterable[Hashable]) -> FinitePoset:
    return FinitePoset(labels, [])


def product_poset(p: FinitePoset, q: FinitePoset) -> FinitePoset:
    """Componentwise order on the Cartesian product.

    Only one-coordinate pairs are emitted; their transitive closure is the
    full componentwise order, so comparability queries see the usual
    product ordering.
    """
    elements = [(x, y) for x in p.elements for y in q.elements]
    pairs = [((lo, y), (hi, y)) for (lo, hi) in p.pairs for y in q.elements]
    pairs += [((x, lo), (x, hi)) for (lo, hi) in q.pairs for x in p.elements]
    return FinitePoset(elements, pairs)


def length_function(p: FinitePoset) -> IsotoneMap:
    """The pointwise-least isotone map: longest-chain depth below each element."""
    if not p.elements:
        raise DomainError("length function of the empty poset is undefined")
    p._strictly_below()  # validates acyclicity
    preds: Dict[Hashable, set] = {x: set() for x in p.elements}
    succs: Dict[Hashable, set] = {x: set() for x in p.elements}
    for lo, hi in p.pairs:
        preds[hi].add(lo)
        succs[lo].add(hi)
    indeg = {x: len(preds[x]) for x in p.elements}
    queue = [x for x in p.elements if indeg[x] == 0]
    lam: IsotoneMap = {}
    while queue:
        x = queue.pop()
        lam[x] = max((lam[y] + 1 for y in preds[x]), default=0)
        for y in succs[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    # longest path over generating pairs equals longest chain in the closure
    assert len(lam) == len(p.elements)
    return lam


def length(p: FinitePoset) -> int:
    """Value of the length function at the unique top element."""
    return length_function(p)[p.top()]


def brookfield_sum_finite(m: int, n: int) -> int:
    """len((m+1) x (n+1)) computed poset-theoretically on chains."""
    return length(product_poset(chain(m + 1), chain(n + 1)))


def is_isotone(f: Mapping[Hashable, int], p: FinitePoset) -> bool:
    return _check_monotone(f, p, strict=True)


def is_weakly_isotone(f: Mapping[Hashable, int], p: FinitePoset) -> bool:
    return _check_monotone(f, p, strict=False)


def _check_monotone(f, p, strict):
    for x in p.elements:
        if x not in f:
            raise DomainError(f"assignment is not total: missing {x!r}")
    below = p._strictly_below()
    for y in p.elements:
        for x in below[y]:
            if strict:
                if not f[x] < f[y]:
                    return False
            elif not f[x] <= f[y]:
                return False
    return True


def pointwise_min(maps: Iterable[Mapping[Hashable, int]], p: FinitePoset) -> IsotoneMap:
    """Greatest lower bound of a nonempty family of isotone maps.

    The result is again isotone; this is exactly why least elements of
    isotone-map families exist at all.
    """
    maps = list(maps)
    if not maps:
        raise DomainError("pointwise_min of an empty family")
    for f in maps:
        if not is_isotone(f, p):
            raise DomainError("pointwise_min requires isotone inputs")
    return {x: min(f[x] for f in maps) for x in p.elements}
