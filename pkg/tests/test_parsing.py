import pytest
from hypothesis import given, strategies as st

from euctype.errors import DomainError, ParseError, ResourceError
from euctype.euclidean import bottom_euclidean, is_euclidean_function, table_to_dict
from euctype.models import RingSpec
from euctype.ordinal import Ordinal, format_ordinal, omega, omega_power
from euctype.parsing import (
    parse_element,
    parse_ordinal,
    parse_poset,
    parse_ring_spec,
    table_from_dict,
)
from euctype.rings import (
    GaloisField,
    PolyQuotient,
    ProductRing,
    Zmod,
    truncated_bivariate_fixture,
)


class TestOrdinalParsing:
    def test_basics(self):
        assert parse_ordinal("0") == Ordinal(0)
        assert parse_ordinal("42") == Ordinal(42)
        assert parse_ordinal("w") == omega
        assert parse_ordinal("w^2*3 + w*1 + 5") == omega_power(2, 3) + omega + 5
        assert parse_ordinal("w^2*3 + 5") == omega_power(2, 3) + 5

    def test_unicode_omega(self):
        assert parse_ordinal("ω^2 + ω") == omega_power(2) + omega

    def test_canonicalization(self):
        assert parse_ordinal("1 + w") == omega
        assert parse_ordinal("w + w") == omega * 2
        assert parse_ordinal("w + 3 + w") == omega * 2

    def test_natural_sum(self):
        assert parse_ordinal("(w+1) # w") == omega * 2 + 1
        assert parse_ordinal("1 # w") == omega + 1

    def test_product_convention(self):
        assert parse_ordinal("2 . w") == omega * 2
        assert parse_ordinal("w . 2") == Ordinal(2) * omega
        assert parse_ordinal("w . 2") == omega
        assert parse_ordinal("w . w") == omega_power(2)

    def test_left_subtraction(self):
        assert parse_ordinal("(-w) + (w*2+3)") == omega + 3
        assert parse_ordinal("(-1) + w") == omega
        with pytest.raises(DomainError):
            parse_ordinal("(-w) + 3")

    def test_nested_exponents(self):
        assert parse_ordinal("w^w") == omega_power(omega)
        assert parse_ordinal("w^(w+1)") == omega_power(omega + 1)
        assert parse_ordinal("w^w^2") == omega_power(omega_power(2))

    def test_syntax_errors_with_position(self):
        for bad in ("", "   ", "w^", "w +", "+ w", "3..4", "w^2 w", "((w)", "*3"):
            with pytest.raises(ParseError):
                parse_ordinal(bad)
        try:
            parse_ordinal("w^2 q")
        except ParseError as exc:
            assert exc.position == 4
            assert exc.exit_code == 5

    def test_depth_limit(self):
        deep = "w^" * 40 + "2"
        with pytest.raises(ResourceError):
            parse_ordinal(deep)

    def test_zero_coefficient(self):
        assert parse_ordinal("w*0") == Ordinal(0)
        assert parse_ordinal("w*0 + 3") == Ordinal(3)

    @given(st.lists(st.tuples(st.integers(0, 4), st.integers(1, 9)), max_size=4))
    def test_print_parse_round_trip(self, pairs):
        merged = {}
        for e, c in pairs:
            merged[e] = merged.get(e, 0) + c
        a = Ordinal.from_terms(
            tuple((Ordinal(e), c) for e, c in sorted(merged.items(), reverse=True))
        )
        assert parse_ordinal(format_ordinal(a)) == a


class TestRingSpecParsing:
    def test_concrete(self):
        r = parse_ring_spec("Z/12")
        assert isinstance(r, Zmod) and r.n == 12
        r = parse_ring_spec("GF(4)[t]/(t^2+t+1)")
        assert isinstance(r, PolyQuotient) and len(r) == 16
        r = parse_ring_spec("Z/4 x GF(2)[t]/(t^2)")
        assert isinstance(r, ProductRing) and len(r) == 16

    def test_fixture_name(self):
        r = parse_ring_spec("GF(2)[x,y]/(x,y)^2")
        assert len(r) == 8 and not r.is_principal()

    def test_symbolic(self):
        s = parse_ring_spec("GF(2)[t] x Z/8")
        assert s == RingSpec(("GF(2)[t]",), (3,))
        s = parse_ring_spec("Z")
        assert s == RingSpec(("Z",), ())
        s = parse_ring_spec("Z x Z/12")
        # the Artinian part splits into its local lengths
        assert s == RingSpec(("Z",), (2, 1))

    def test_name_round_trip(self):
        for text in ("Z/12", "GF(2)[t]/(t^2+t+1)", "Z/4 x GF(2)[t]/(t^2)"):
            ring = parse_ring_spec(text)
            assert parse_ring_spec(ring.name).name == ring.name

    def test_errors(self):
        with pytest.raises(ParseError):
            parse_ring_spec("")
        with pytest.raises(ParseError):
            parse_ring_spec("Q/12")
        with pytest.raises(DomainError):
            parse_ring_spec("Z/1")
        with pytest.raises(DomainError):
            parse_ring_spec("GF(6)[t]/(t^2)")
        with pytest.raises(DomainError):
            parse_ring_spec("GF(2)[t]/(1)")


class TestElementParsing:
    def test_zmod(self):
        R = Zmod(12)
        assert parse_element(R, "7") == 7
        assert parse_element(R, "-1") == 11
        with pytest.raises(ParseError):
            parse_element(R, "seven")

    def test_poly(self):
        R = PolyQuotient(GaloisField(2), (1, 1, 1))
        assert parse_element(R, "t") == (0, 1)
        assert parse_element(R, "t+1") == (1, 1)
        assert parse_element(R, "t^2") == (1, 1)  # reduced mod t^2+t+1

    def test_poly_nonprime_field_encodings(self):
        R = PolyQuotient(GaloisField(4), (0, 0, 1))
        # coefficient 2 is the field element with encoding 2, not 2 mod 2
        assert parse_element(R, "2*t") == (0, 2)
        assert parse_element(R, "3") == (3, 0)

    def test_product(self):
        P = ProductRing([Zmod(4), PolyQuotient(GaloisField(2), (0, 0, 1))])
        assert parse_element(P, "(3, t+1)") == (3, (1, 1))
        with pytest.raises(ParseError):
            parse_element(P, "3")
        with pytest.raises(ParseError):
            parse_element(P, "(3, t, 1)")

    def test_table_ring(self):
        R = truncated_bivariate_fixture()
        assert parse_element(R, "x+y") == "x+y"
        with pytest.raises(ParseError):
            parse_element(R, "z")

    def test_format_round_trip(self):
        for spec in ("Z/12", "GF(2)[t]/(t^3)", "Z/4 x GF(2)[t]/(t^2)", "GF(4)[t]/(t^2)"):
            R = parse_ring_spec(spec)
            for x in R.elements:
                assert parse_element(R, R.format_element(x)) == x


class TestPosetParsing:
    def test_diamond(self):
        from euctype.poset import length, length_function

        p = parse_poset("""
            # a diamond
            bot < l
            bot < r
            l < top
            r < top
        """)
        assert set(p.elements) == {"bot", "l", "r", "top"}
        assert length(p) == 2
        assert length_function(p)["l"] == 1

    def test_isolated_and_blank(self):
        p = parse_poset("a < b\n\nlonely\n")
        assert set(p.elements) == {"a", "b", "lonely"}
        assert not p.less("lonely", "b")

    def test_bad_line(self):
        with pytest.raises(ParseError):
            parse_poset("a < b < c")
        with pytest.raises(ParseError):
            parse_poset("a <")


class TestTableRoundTrip:
    def test_bottom_table(self):
        for spec in ("Z/12", "GF(2)[t]/(t^2)", "Z/4 x Z/9"):
            t = bottom_euclidean(parse_ring_spec(spec))
            back = table_from_dict(table_to_dict(t))
            assert back.values == t.values
            assert back.value_at_zero == t.value_at_zero
            assert back.validated and back.is_bottom
            ok, _ = is_euclidean_function(back)
            assert ok

    def test_symbolic_spec_rejected(self):
        with pytest.raises(DomainError):
            table_from_dict({"ring": "Z", "values": {}, "value_at_zero": "w"})
