import pytest

from srgddg import designs as ds
from srgddg import galois as gf
from srgddg import recognize as rec
from srgddg.coclique import cocliques_of_size
from srgddg.errors import SizeCapExceeded


class TestFieldArithmetic:
    def test_gf2_addition(self):
        F = gf.fieldspec(2, 1)
        assert F.add(1, 1) == 0

    def test_gf3_inverse(self):
        F = gf.fieldspec(3, 1)
        assert F.inv(2) == 2  # 2*2 = 4 = 1 mod 3

    def test_gf4_modulus_and_generator(self):
        F = gf.fieldspec(2, 2)
        assert F.modulus == (1, 1, 1)  # x^2 + x + 1, the only choice
        assert F.mul(2, 2) == 3  # x*x = x + 1

    def test_not_prime_rejected(self):
        with pytest.raises(ValueError, match="not prime"):
            gf.fieldspec(6, 1)

    def test_size_cap(self):
        with pytest.raises(SizeCapExceeded):
            gf.fieldspec(2, 17)

    @pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4)])
    def test_field_axioms(self, p, e):
        F = gf.fieldspec(p, e)
        q = F.q
        elems = list(F.elements())
        for a in elems:
            assert F.add(a, F.neg(a)) == 0
            if a:
                assert F.mul(a, F.inv(a)) == 1
        # associativity/commutativity/distributivity on a subgrid
        sub = elems if q <= 9 else elems[:6]
        for a in sub:
            for b in sub:
                assert F.add(a, b) == F.add(b, a)
                assert F.mul(a, b) == F.mul(b, a)
                for c in sub:
                    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))

    def test_modulus_is_lex_smallest(self):
        # over GF(3), x^2 + 1 precedes every other irreducible quadratic
        assert gf.fieldspec(3, 2).modulus == (1, 0, 1)

    def test_field_by_order(self):
        assert gf.field_by_order(9).q == 9
        assert gf.field_by_order(8).q == 8
        with pytest.raises(ValueError, match="prime power"):
            gf.field_by_order(12)


class TestSymplecticComplement:
    def test_sp42_is_srg_15_8_4_4(self, sp42):
        p = rec.srg_params(sp42)
        assert p and p.tuple4 == (15, 8, 4, 4)
        # family formulas with s = -2, n = 4
        assert (p.v, p.k, p.lam) == (2 * 15 // 2, 2 * 4, 2 * 2)

    def test_sp62_is_srg_63_32_16_16(self, sp62):
        p = rec.srg_params(sp62)
        assert p and p.tuple4 == (63, 32, 16, 16)

    def test_sp43_is_srg_40_27_18_18(self, sp43):
        p = rec.srg_params(sp43)
        assert p and p.tuple4 == (40, 27, 18, 18)

    def test_regular_degree_q_power(self):
        # degree q^(2d-1) for all vertices
        for d, q, want in ((2, 2, 8), (2, 3, 27), (3, 2, 32)):
            g = gf.symplectic_complement(d, gf.field_by_order(q))
            assert set(g.degrees()) == {want}

    def test_form_is_alternating(self):
        for q in (2, 3, 4):
            F = gf.field_by_order(q)
            pts = gf.projective_points(4, F)
            assert all(gf.symplectic_form(x, x, F) == 0 for x in pts)

    def test_isotropic_cocliques_attain_bound(self, sp42, sp62):
        # maximal totally isotropic subspaces give cocliques of size
        # (q^d-1)/(q-1) = c = vs/(s-k)
        for g, c in ((sp42, 3), (sp62, 7)):
            p = rec.srg_params(g)
            assert p.hoffman_size() == c
            found = cocliques_of_size(g, c, mode="first")
            assert found, "at least one Hoffman coclique must exist"

    def test_needs_d_at_least_2(self):
        with pytest.raises(ValueError):
            gf.symplectic_complement(1, gf.fieldspec(2, 1))

    def test_size_cap(self):
        with pytest.raises(SizeCapExceeded):
            gf.symplectic_complement(2, gf.fieldspec(2, 1), size_cap=10)

    def test_vertex_order_deterministic(self, sp42):
        again = gf.symplectic_complement(2, gf.fieldspec(2, 1))
        assert again.rows == sp42.rows


class TestPgHyperplaneDesign:
    def test_fano(self):
        d = gf.pg_hyperplane_design(3, gf.fieldspec(2, 1))
        assert d.params == (7, 3, 1)
        assert ds.verify_design(d) is True

    def test_fano_complement(self):
        d = ds.complement_design(gf.pg_hyperplane_design(3, gf.fieldspec(2, 1)))
        assert d.params == (7, 4, 2)
        assert ds.verify_design(d) is True

    def test_pg32(self):
        d = gf.pg_hyperplane_design(4, gf.fieldspec(2, 1))
        assert d.params == (15, 7, 3)
        assert ds.verify_design(d) is True

    def test_pg_over_gf3(self):
        d = gf.pg_hyperplane_design(3, gf.fieldspec(3, 1))
        assert d.params == (13, 4, 1)
        assert ds.verify_design(d) is True

    def test_degenerate_dimension_rejected(self):
        with pytest.raises(ValueError, match="d >= 3"):
            gf.pg_hyperplane_design(2, gf.fieldspec(3, 1))
