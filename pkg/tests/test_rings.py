import pytest

from bracketlab.rings import (
    Coset,
    PolyQuotientRing,
    RingError,
    ZModRing,
    quotient_cosets,
    ring_make,
    subgroup_generate,
)


class TestZMod:
    def test_arithmetic(self):
        r = ZModRing(7)
        assert r.add(5, 4) == 2
        assert r.mul(3, 5) == 1
        assert r.neg(2) == 5
        assert r.sub(1, 3) == 5
        assert r.power(3, 6) == 1
        assert r.power(3, -1) == 5

    def test_units_and_inverse(self):
        r = ZModRing(12)
        assert sorted(r.units()) == [1, 5, 7, 11]
        assert r.try_invert(6) is None
        assert r.try_invert(5) == 5

    def test_serialization(self):
        r = ZModRing(5)
        assert r.element_from_json(7) == 2
        assert r.element_to_json(3) == 3
        assert ring_make(r.to_json()) == r

    def test_bad_modulus(self):
        with pytest.raises(RingError):
            ZModRing(1)


class TestPolyQuotient:
    def test_gf8_arithmetic(self):
        # GF(8) = F_2[t]/(1 + t + t^3): t^3 = 1 + t.
        r = PolyQuotientRing(2, [1, 1, 0, 1])
        t = (0, 1, 0)
        assert r.mul(r.mul(t, t), t) == (1, 1, 0)
        assert r.power(t, 7) == r.one
        assert len(r.elements()) == 8
        assert len(r.units()) == 7

    def test_reduction_from_json(self):
        r = PolyQuotientRing(2, [1, 1, 0, 1])
        assert r.element_from_json([0, 0, 0, 1]) == (1, 1, 0)
        assert r.element_from_json(1) == r.one

    def test_element_str(self):
        r = PolyQuotientRing(2, [1, 1, 0, 1])
        assert r.element_str((1, 1, 1)) == "1 + t + t^2"
        assert r.element_str(r.zero) == "0"

    def test_nonfield_quotient(self):
        # (Z/4)[u]/(u^2 - 1) has zero divisors but still a unit group.
        r = PolyQuotientRing(4, [3, 0, 1])
        u = (0, 1)
        assert r.mul(u, u) == r.one
        assert r.is_unit(u)

    def test_bad_modulus(self):
        with pytest.raises(RingError):
            PolyQuotientRing(4, [1, 2])  # leading coefficient not a unit
        with pytest.raises(RingError):
            PolyQuotientRing(4, [3])  # degree 0

    def test_ring_make_unknown(self):
        with pytest.raises(RingError):
            ring_make({"kind": "matrix"})


class TestSubgroups:
    def test_generate_closure(self):
        r = ZModRing(9)
        g = subgroup_generate(r, [7])
        assert g.elements == frozenset({1, 4, 7})
        # closed under inverse
        assert all(r.try_invert(a) in g.elements for a in g.elements)

    def test_nonunit_generator_rejected(self):
        with pytest.raises(RingError):
            subgroup_generate(ZModRing(9), [3])

    def test_cosets(self):
        r = ZModRing(9)
        g = subgroup_generate(r, [7])
        cs = quotient_cosets(g)
        assert len(cs) == 2  # |units| / |G| = 6 / 3
        assert Coset(g, 4) == Coset(g, 7)
        assert Coset(g, 4) != Coset(g, 2)
        assert Coset(g, 4).canonical == 1
        assert Coset(g, 2).mul(Coset(g, 2)).canonical == Coset(g, 4).canonical
