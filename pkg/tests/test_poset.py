import itertools

import pytest
from hypothesis import given, settings, strategies as st

from euctype.errors import DomainError
from euctype.poset import (
    FinitePoset,
    antichain,
    brookfield_sum_finite,
    chain,
    is_isotone,
    is_weakly_isotone,
    length,
    length_function,
    pointwise_min,
    product_poset,
)


class TestConstruction:
    def test_duplicate_labels(self):
        with pytest.raises(DomainError):
            FinitePoset([1, 1], [])

    def test_unknown_label_in_pair(self):
        with pytest.raises(DomainError):
            FinitePoset([1, 2], [(1, 3)])

    def test_cycle_rejected(self):
        p = FinitePoset([1, 2, 3], [(1, 2), (2, 3), (3, 1)])
        with pytest.raises(DomainError):
            p.less(1, 2)

    def test_transitive_closure(self):
        p = FinitePoset("abc", [("a", "b"), ("b", "c")])
        assert p.less("a", "c")
        assert not p.less("c", "a")
        assert not p.less("a", "a")


class TestLength:
    def test_chain(self):
        for n in range(1, 8):
            assert length(chain(n)) == n - 1

    def test_antichain_has_no_top(self):
        with pytest.raises(DomainError):
            length(antichain("ab"))

    def test_diamond(self):
        p = FinitePoset("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
        assert length_function(p) == {"a": 0, "b": 1, "c": 1, "d": 2}
        assert length(p) == 2

    def test_grid(self):
        g = product_poset(chain(6), chain(8))
        lam = length_function(g)
        assert lam[(5, 7)] == 12
        assert all(lam[(i, j)] == i + j for i, j in g.elements)

    def test_empty_poset(self):
        with pytest.raises(DomainError):
            length_function(FinitePoset([], []))


class TestProductPoset:
    def test_componentwise_order(self):
        g = product_poset(chain(3), chain(3))
        for a in g.elements:
            for b in g.elements:
                expected = a != b and a[0] <= b[0] and a[1] <= b[1]
                assert g.less(a, b) == expected

    def test_brookfield_examples(self):
        assert brookfield_sum_finite(0, 0) == 0
        assert brookfield_sum_finite(2, 3) == 5
        assert brookfield_sum_finite(7, 11) == 18

    @given(st.integers(0, 12), st.integers(0, 12))
    @settings(max_examples=30, deadline=None)
    def test_matches_addition(self, m, n):
        assert brookfield_sum_finite(m, n) == m + n


def _all_posets(labels):
    """Every strict order on the labels, as a set of strict pairs."""
    pairs = [(a, b) for a in labels for b in labels if a != b]
    for subset in itertools.product([False, True], repeat=len(pairs)):
        rel = {p for p, keep in zip(pairs, subset) if keep}
        # transitive and irreflexive?
        if any((a, c) not in rel
               for (a, b) in rel for (b2, c) in rel if b == b2 and a != c):
            continue
        if any((a, b) in rel and (b, a) in rel for (a, b) in rel):
            continue
        yield rel


class TestIsotoneMaps:
    def test_non_total_rejected(self):
        p = chain(3)
        with pytest.raises(DomainError):
            is_isotone({0: 0, 1: 1}, p)

    def test_predicates(self):
        p = chain(3)
        assert is_isotone({0: 0, 1: 1, 2: 2}, p)
        assert not is_isotone({0: 0, 1: 0, 2: 2}, p)
        assert is_weakly_isotone({0: 0, 1: 0, 2: 2}, p)
        assert not is_weakly_isotone({0: 1, 1: 0, 2: 2}, p)

    def test_length_function_minimal_small(self):
        # exhaustive over every strict order on up to 4 labels: the length
        # function is isotone and pointwise below every isotone map
        for n in range(1, 5):
            labels = tuple(range(n))
            for rel in _all_posets(labels):
                p = FinitePoset(labels, sorted(rel))
                lam = length_function(p)
                assert is_isotone(lam, p)
                for values in itertools.product(range(n), repeat=n):
                    f = dict(zip(labels, values))
                    if is_isotone(f, p):
                        assert all(lam[x] <= f[x] for x in labels)

    @given(st.integers(5, 6), st.integers(0, 2 ** 30))
    @settings(max_examples=25, deadline=None)
    def test_length_function_minimal_random(self, n, seed):
        import random

        rng = random.Random(seed)
        labels = tuple(range(n))
        rel = set()
        for a in labels:
            for b in labels:
                if a < b and rng.random() < 0.4:
                    rel.add((a, b))
        p = FinitePoset(labels, sorted(rel))
        lam = length_function(p)
        assert is_isotone(lam, p)
        for _ in range(20):
            f = {x: lam[x] + rng.randint(0, 3) for x in labels}
            if is_isotone(f, p):
                assert all(lam[x] <= f[x] for x in labels)

    def test_pointwise_min(self):
        p = chain(4)
        f = {0: 0, 1: 2, 2: 3, 3: 4}
        g = {0: 1, 1: 2, 2: 4, 3: 5}
        assert pointwise_min([f, g], p) == {0: 0, 1: 2, 2: 3, 3: 4}

    def test_pointwise_min_is_isotone(self):
        p = product_poset(chain(3), chain(2))
        lam = length_function(p)
        f = {x: lam[x] + x[0] for x in p.elements}
        assert is_isotone(f, p)
        assert is_isotone(pointwise_min([lam, f], p), p)

    def test_pointwise_min_errors(self):
        p = chain(2)
        with pytest.raises(DomainError):
            pointwise_min([], p)
        with pytest.raises(DomainError):
            pointwise_min([{0: 1, 1: 0}], p)

    def test_restriction_to_down_set(self):
        # values of the length function on a down-set agree with the length
        # function of the restricted poset
        p = product_poset(chain(4), chain(4))
        lam = length_function(p)
        down = [x for x in p.elements if lam[x] <= 3]
        sub = FinitePoset(down, [(a, b) for (a, b) in p.pairs
                                 if a in down and b in down])
        sub_lam = length_function(sub)
        assert all(sub_lam[x] == lam[x] for x in down)
