import random

import pytest

from euctype.errors import DomainError, NotEuclideanRing
from euctype.euclidean import (
    bottom_euclidean,
    check_l_euclidean,
    collapse_pair_table,
    divide,
    division_counterexample,
    is_euclidean_function,
    is_isotone_euclidean,
    is_weakly_isotone_euclidean,
    isotone_minimization,
    length_table,
    make_table,
    nagata_product,
    order_type,
    pair_divide,
    pair_less,
    pair_value,
    quotient_euclidean,
    residual_euclidean,
    table_to_dict,
)
from euctype.ordinal import Ordinal
from euctype.rings import (
    GaloisField,
    PolyQuotient,
    ProductRing,
    Zmod,
    truncated_bivariate_fixture,
)


def gf2t2():
    return PolyQuotient(GaloisField(2), (0, 0, 1))


class TestBottom:
    def test_z8(self):
        t = bottom_euclidean(Zmod(8))
        assert {x: v.to_int() for x, v in t.values.items()} == {
            1: 0, 3: 0, 5: 0, 7: 0, 2: 1, 6: 1, 4: 2,
        }
        assert t.value_at_zero == 3
        assert t.validated and t.is_bottom
        assert order_type(t) == 3

    def test_fields_have_order_type_one(self):
        for R in (Zmod(7), PolyQuotient(GaloisField(2), (1, 1, 1))):
            t = bottom_euclidean(R)
            assert order_type(t) == 1
            assert all(v.is_zero for v in t.values.values())

    def test_units_at_level_zero(self):
        for R in (Zmod(12), Zmod(16), gf2t2(), ProductRing([Zmod(4), Zmod(3)])):
            t = bottom_euclidean(R)
            units = R.units()
            for x, v in t.values.items():
                assert (x in units) == v.is_zero

    def test_values_initial_segment(self):
        for R in (Zmod(12), Zmod(36), ProductRing([Zmod(8), Zmod(9)])):
            t = bottom_euclidean(R)
            levels = {v.to_int() for v in t.values.values()}
            assert levels == set(range(len(levels)))
            assert t.value_at_zero.to_int() == len(levels)

    def test_local_value_by_valuation(self):
        # in Z/p^k the value of u * p^a is exactly a
        for p, k in ((2, 4), (3, 3), (5, 2)):
            R = Zmod(p ** k)
            t = bottom_euclidean(R)
            for x in range(1, p ** k):
                a = 0
                y = x
                while y % p == 0:
                    y //= p
                    a += 1
                assert t.values[x] == a
            assert order_type(t) == k

    def test_fixture_is_a_finding(self):
        with pytest.raises(NotEuclideanRing) as err:
            bottom_euclidean(truncated_bivariate_fixture())
        finding = err.value
        assert set(finding.stuck) == {"x", "y", "x+y"}
        assert set(finding.partial) == {"1", "1+x", "1+y", "1+x+y"}
        assert finding.exit_code == 3

    def test_bottom_is_validated_euclidean(self):
        for R in (Zmod(24), gf2t2(), ProductRing([Zmod(2), Zmod(2)])):
            ok, cex = is_euclidean_function(bottom_euclidean(R))
            assert ok and cex is None

    def test_order_type_requires_bottom(self):
        t = bottom_euclidean(Zmod(4))
        other = make_table(Zmod(4), t.values)
        with pytest.raises(DomainError):
            order_type(other)


class TestValidation:
    def test_all_zero_on_nonfield_fails(self):
        cex = division_counterexample(Zmod(6), {x: Ordinal(0) for x in range(1, 6)})
        assert cex == (1, 2)

    def test_make_table_rejects_bad(self):
        with pytest.raises(DomainError):
            make_table(Zmod(6), {x: Ordinal(0) for x in range(1, 6)})

    def test_make_table_requires_total(self):
        with pytest.raises(DomainError):
            make_table(Zmod(4), {1: Ordinal(0)})

    def test_divide_witness(self):
        t = bottom_euclidean(Zmod(12))
        R = t.ring
        for a in R.elements:
            for b in R.elements:
                if b == 0:
                    continue
                w = divide(t, a, b)
                assert R.add(R.mul(w.quotient, b), w.remainder) == a
                assert w.remainder == 0 or t.values[w.remainder] < t.values[b]

    def test_divide_by_zero(self):
        with pytest.raises(DomainError):
            divide(bottom_euclidean(Zmod(4)), 1, 0)


def _perturbed_tables(ring, rng, count):
    """Validated Euclidean tables above the bottom one."""
    bottom = bottom_euclidean(ring)
    out = []
    while len(out) < count:
        # strictly increasing relabeling of the levels, then random bumps
        # kept only when the division property survives
        shift = 0
        remap = {}
        for v in sorted(set(bottom.values.values())):
            shift += rng.randint(0, 2)
            remap[v] = Ordinal(v.to_int() + shift)
        values = {x: remap[v] for x, v in bottom.values.items()}
        for _ in range(rng.randint(0, 4)):
            x = rng.choice([e for e in ring.elements if e != ring.zero])
            bumped = dict(values)
            bumped[x] = bumped[x] + rng.randint(1, 3)
            if division_counterexample(ring, bumped) is None:
                values = bumped
        out.append(make_table(ring, values))
    return out


class TestMinimization:
    def test_z4_example(self):
        t = make_table(Zmod(4), {1: Ordinal(1), 3: Ordinal(0), 2: Ordinal(1)})
        m = isotone_minimization(t)
        assert {x: v.to_int() for x, v in m.values.items()} == {1: 0, 3: 0, 2: 1}
        assert not is_isotone_euclidean(t)
        assert not is_weakly_isotone_euclidean(t)
        assert is_isotone_euclidean(m)

    def test_fixes_bottom(self):
        for R in (Zmod(18), gf2t2(), ProductRing([Zmod(4), Zmod(9)])):
            b = bottom_euclidean(R)
            m = isotone_minimization(b)
            assert m.values == b.values
            assert m.is_bottom

    def test_idempotent_and_below_input(self):
        rng = random.Random(5)
        for R in (Zmod(12), Zmod(16), gf2t2()):
            for t in _perturbed_tables(R, rng, 5):
                m = isotone_minimization(t)
                assert m.validated
                assert is_isotone_euclidean(m)
                assert all(m.values[x] <= t.values[x] for x in t.values)
                again = isotone_minimization(m)
                assert again.values == m.values

    def test_predicates_agree_on_validated(self):
        rng = random.Random(6)
        for R in (Zmod(12), Zmod(16), ProductRing([Zmod(2), Zmod(3)])):
            for t in _perturbed_tables(R, rng, 5):
                assert is_isotone_euclidean(t) == is_weakly_isotone_euclidean(t)

    def test_bottom_is_pointwise_least(self):
        rng = random.Random(7)
        for R in (Zmod(12), Zmod(27), gf2t2()):
            b = bottom_euclidean(R)
            for t in _perturbed_tables(R, rng, 8):
                assert all(b.values[x] <= t.values[x] for x in t.values)

    def test_requires_validated(self):
        t = bottom_euclidean(Zmod(4))
        t.validated = False
        with pytest.raises(DomainError):
            isotone_minimization(t)


class TestMonotoneComposition:
    def test_strictly_increasing_map_preserves_validity(self):
        rng = random.Random(8)
        for R in (Zmod(12), Zmod(16), ProductRing([Zmod(4), Zmod(3)])):
            t = bottom_euclidean(R)
            for _ in range(10):
                shift = 0
                remap = {}
                for v in sorted(set(t.values.values())):
                    shift += rng.randint(0, 3)
                    remap[v] = Ordinal(v.to_int() + shift)
                composed = {x: remap[v] for x, v in t.values.items()}
                assert division_counterexample(R, composed) is None


class TestQuotient:
    def test_value_at_zero_identity(self):
        # e of the quotient table equals the bottom value of the divisor
        for R in (Zmod(8), Zmod(12), Zmod(36), gf2t2()):
            t = bottom_euclidean(R)
            for b in R.elements:
                if b == R.zero or R.is_unit(b):
                    continue
                q = quotient_euclidean(t, b)
                assert q.value_at_zero == t.values[b]
                assert q.validated

    def test_order_type_shrinks(self):
        t = bottom_euclidean(Zmod(16))
        for b in (2, 4, 8):
            q = quotient_euclidean(t, b)
            assert q.value_at_zero <= t.value_at_zero


class TestNagata:
    def _exhaustive_check(self, r1, r2):
        pt = nagata_product(bottom_euclidean(r1), bottom_euclidean(r2))
        ring = pt.ring
        for x in ring.elements:
            for y in ring.elements:
                if y == ring.zero:
                    continue
                w = pair_divide(pt, x, y)
                assert ring.add(ring.mul(w.quotient, y), w.remainder) == x
                assert w.remainder == ring.zero or pair_less(
                    pair_value(pt, w.remainder), pair_value(pt, y)
                )
        return pt

    def test_z4_z9(self):
        pt = self._exhaustive_check(Zmod(4), Zmod(9))
        w = pair_divide(pt, (1, 3), (2, 3))
        assert w.quotient == (0, 0) and w.remainder == (1, 3)

    def test_z8_gf2t2(self):
        self._exhaustive_check(Zmod(8), gf2t2())

    def test_collapse(self):
        pt = nagata_product(bottom_euclidean(Zmod(4)), bottom_euclidean(Zmod(9)))
        c = collapse_pair_table(pt)
        assert c.validated
        assert max(v.to_int() for v in c.values.values()) == 3
        assert c.value_at_zero == 4
        assert order_type(bottom_euclidean(pt.ring)) == 4

    def test_division_by_zero(self):
        pt = nagata_product(bottom_euclidean(Zmod(2)), bottom_euclidean(Zmod(2)))
        with pytest.raises(DomainError):
            pair_divide(pt, (1, 1), (0, 0))


class TestResidual:
    def test_recovers_factor_bottom(self):
        P = ProductRing([Zmod(2), Zmod(3)])
        t = bottom_euclidean(P)
        res = residual_euclidean(t, 1)
        assert res.values == bottom_euclidean(Zmod(3)).values

    def test_validated_on_both_factors(self):
        for f1, f2 in ((Zmod(4), Zmod(9)), (Zmod(8), gf2t2())):
            P = ProductRing([f1, f2])
            t = bottom_euclidean(P)
            for i in (0, 1):
                res = residual_euclidean(t, i)
                assert res.validated
                assert res.ring is P.factors[i]
                b = bottom_euclidean(P.factors[i])
                assert all(b.values[x] <= res.values[x] for x in res.values)

    def test_requires_bottom_product(self):
        t = bottom_euclidean(Zmod(4))
        with pytest.raises(DomainError):
            residual_euclidean(t, 0)


class TestLengthFunction:
    def test_length_below_bottom(self):
        for R in (Zmod(12), Zmod(16), gf2t2(), ProductRing([Zmod(4), Zmod(3)])):
            t = bottom_euclidean(R)
            for x, v in t.values.items():
                assert R.element_length(x) <= v.to_int()

    def test_length_table_z12(self):
        t = length_table(Zmod(12))
        assert t.validated
        assert t.values[2] == 1 and t.values[4] == 2 and t.values[1] == 0

    def test_check_l_euclidean(self):
        ok, cex = check_l_euclidean(Zmod(12))
        assert ok and cex is None
        ok, cex = check_l_euclidean(ProductRing([Zmod(4), Zmod(9)]))
        assert ok

    def test_check_requires_principal(self):
        with pytest.raises(DomainError):
            check_l_euclidean(truncated_bivariate_fixture())


class TestSerialization:
    def test_dict_shape(self):
        t = bottom_euclidean(Zmod(8))
        d = table_to_dict(t)
        assert d["ring"] == "Z/8"
        assert d["values"]["2"] == "1"
        assert d["value_at_zero"] == "3"
        assert d["validated"] and d["bottom"]
