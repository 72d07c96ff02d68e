import random
from fractions import Fraction

import pytest

from g2schubert import cohomring as c
from g2schubert import schubert as s
from g2schubert import weyl
from g2schubert.exactalg import MPoly

X1, X2, ALPHA, H, F = c.X1, c.X2, c.ALPHA, c.H, c.F
Y1, Y2 = c.Y1, c.Y2
SEED = 1729


class TestNormalForm:
    def test_integral_point_rules(self):
        p = c.fl_integral_point()
        assert p.normal_form(X1 ** 3).as_poly() == 2 * ALPHA
        assert p.normal_form(X2 ** 2).as_poly() == X1 * X2 - X1 ** 2
        assert p.normal_form(ALPHA ** 2).is_zero()

    def test_half_point_rules(self):
        p = c.fl_half_point()
        assert p.normal_form(X1 ** 6).is_zero()
        nf = p.normal_form(Fraction(1, 2) * X1 ** 5 * X2)
        assert nf.as_poly() == Fraction(1, 2) * X1 ** 5 * X2

    def test_idempotent_and_linear(self):
        rng = random.Random(SEED)
        for p in (c.fl_integral_point(), c.fl_half_point(),
                  c.fl_half_bundle(), c.quadric_bundle()):
            names = p.main_vars + p.base_vars
            for _ in range(5):
                f = _rand(rng, names)
                g = _rand(rng, names)
                nf_f = p.reduce_poly(f)
                assert p.reduce_poly(nf_f) == nf_f
                assert p.reduce_poly(f + g) == p.reduce_poly(f) + p.reduce_poly(g)

    def test_non_integral_reduction_raises(self):
        p = c.fl_integral_point()
        with pytest.raises(c.NonIntegralReduction):
            p.normal_form(Fraction(1, 3) * X1)
        # 1/2 x1^3 is alpha, which IS integral
        assert p.normal_form(Fraction(1, 2) * X1 ** 3).as_poly() == ALPHA

    def test_foreign_variables_rejected(self):
        with pytest.raises(ValueError):
            c.fl_half_point().normal_form(MPoly.var("h"))


def _rand(rng, names, max_deg=5, terms=5):
    total = MPoly.zero()
    for _ in range(terms):
        exps = {}
        budget = rng.randint(0, max_deg)
        for name in names:
            e = rng.randint(0, budget)
            if e:
                exps[name] = e
                budget -= e
        total = total + MPoly.monomial(exps, rng.randint(-6, 6))
    return total


class TestVerifyPresentations:
    @pytest.mark.parametrize("name,rank", [
        ("FlIntegralPoint", 12),
        ("FlHalfPoint", 12),
        ("FlIntegralBundle", 12),
        ("FlHalfBundle", 12),
        ("Equivariant", 12),
        ("QuadricBundle3", 6),
        ("QuadricBundle3Y", 6),
        ("QuadricBundle3Fiber", 6),
    ])
    def test_full_reports(self, name, rank):
        rep = c.verify_presentation(c.get_presentation(name))
        assert rep.rank == rank
        assert rep.ok, rep.failures

    def test_basis_matches_published_list(self):
        p = c.fl_integral_point()
        polys = [str(b) for b in p.basis_polys()]
        assert polys == ["1", "x1", "x1^2", "alpha", "x1 alpha", "x1^2 alpha",
                         "x2", "x1 x2", "x1^2 x2", "x2 alpha", "x1 x2 alpha",
                         "x1^2 x2 alpha"]

    def test_fiber_ring(self):
        fiber = c.quadric_bundle_fiber(3)
        assert fiber.reduce_poly(H ** 3 - 2 * F).is_zero()
        assert fiber.reduce_poly(F ** 2).is_zero()

    def test_equivariant_matches_half_bundle_quadratic(self):
        # the degree-2 relations of the integral and half presentations agree
        eq = c.fl_equivariant()
        t1, t2 = c.T1, c.T2
        rel = X1 ** 2 + X2 ** 2 - X1 * X2 - (t1 ** 2 + t2 ** 2 - t1 * t2)
        assert eq.reduce_poly(rel).is_zero()

    def test_symmetric_function_relations_hold_equivariantly(self):
        # e_i(x1^2, x2^2, (x1-x2)^2) = e_i(t1^2, t2^2, (t1-t2)^2) for all i
        from g2schubert.exactalg import elementary_symmetric as e_sym
        xs = [X1 ** 2, X2 ** 2, (X1 - X2) ** 2]
        ts = [c.T1 ** 2, c.T2 ** 2, (c.T1 - c.T2) ** 2]
        for p in (c.fl_equivariant(), c.fl_half_bundle("t")):
            for i in (1, 2, 3):
                rel = e_sym(i, xs) - e_sym(i, ts)
                assert p.reduce_poly(rel).is_zero(), (p.name, i)

    def test_degree4_relation_is_redundant(self):
        # e_2 of the squares is the square of the quadratic invariant, so the
        # middle relation lies in the ideal of the other two
        from g2schubert.exactalg import elementary_symmetric as e_sym
        quad = X1 ** 2 + X2 ** 2 - X1 * X2
        assert e_sym(2, [X1 ** 2, X2 ** 2, (X1 - X2) ** 2]) == quad ** 2

    def test_half_equivariant_ring(self):
        pres = c.get_presentation("FlHalfBundleT")
        rep = c.verify_presentation(pres)
        assert rep.ok and rep.rank == 12
        # Giambelli: the 12 equivariant classes have distinct normal forms
        # and expand the ring over Z[1/2][t1, t2]
        import g2schubert.schubert as sch
        fam = sch.generate_family("eq-paper")
        nfs = [pres.normal_form(fam.table[w]) for w in weyl.all_elements()]
        signatures = {tuple(sorted((k, str(v)) for k, v in nf.coeffs.items()))
                      for nf in nfs}
        assert len(signatures) == 12


class TestChern:
    def test_tensor_line_rank1(self):
        cv = c.ChernVector([MPoly.one(), Y1])
        assert c.chern_tensor_line(cv, Y2) == Y1 + Y2

    def test_tensor_line_rank2_symbolic(self):
        cv = c.chern_from_roots([Y1, Y2])
        line = MPoly.var("v")
        expected = cv.classes[2] + cv.classes[1] * line + line ** 2
        assert c.chern_tensor_line(cv, line) == expected

    def test_quotient_line_exact(self):
        cv = c.ChernVector([MPoly.one(), Y1])
        quot = c.chern_quotient(cv, Y1)
        assert quot.classes == [MPoly.one()]

    def test_quotient_roundtrip(self):
        rng = random.Random(SEED + 1)
        for _ in range(10):
            roots = [_rand(rng, ("y1", "y2"), 1, 2) for _ in range(3)]
            line = _rand(rng, ("y1", "y2"), 1, 2)
            total = c.chern_from_roots(roots + [line])
            assert c.chern_quotient(total, line) == c.chern_from_roots(roots)

    def test_quotient_chern_for_flag_geometry(self):
        quot = c.quadric_quotient_chern()
        expected = c.chern_from_roots([-Y1, -Y2, -(Y1 - Y2), MPoly.zero()])
        assert quot.classes[:4] == expected.classes[:4]
        assert quot.classes[4].is_zero()

    def test_eg_relation(self):
        rep = c.quadric_eg_rel_check()
        assert rep.ok and rep.fiber_ok and rep.degree_ok

    def test_normal_bundle_top_class_rebuilds_f_square_rule(self):
        # c_3 of ((V/F)/O(1)) tensor O(1) equals the f^2 coefficient
        # c3(V/F) + c1(V/F) h^2, independent of c4(V/F)
        c1q, c2q, c3q = (MPoly.var(f"c{i}Q") for i in (1, 2, 3))
        total = c.ChernVector([MPoly.one(), c1q, c2q, c3q, Y1 * Y2])
        rebuilt = c.chern_tensor_line(c.chern_quotient(total, H), H)
        assert rebuilt == c3q + c1q * H ** 2


class TestFamiliesInRings:
    def test_both_families_same_classes(self):
        halfb = c.fl_half_bundle()
        paper = s.generate_family("paper")
        graham = s.generate_family("graham")
        for w in weyl.all_elements():
            assert halfb.reduce_poly(paper.table[w] - graham.table[w]).is_zero()

    def test_paper_at_y0_is_point_family(self):
        half = c.fl_half_point()
        paper = s.generate_family("paper")
        point = s.generate_family("point")
        zero = {"y1": MPoly.zero(), "y2": MPoly.zero()}
        for w in weyl.all_elements():
            assert (half.normal_form(paper.table[w].subs(zero))
                    == half.normal_form(point.table[w]))

    def test_equivariant_integral_reduction(self):
        eq = c.fl_equivariant()
        fam = s.generate_family("eq-paper")
        nfs = {}
        for w in weyl.all_elements():
            nfs[w] = eq.normal_form(fam.table[w])  # NonIntegralReduction = fail
        assert len(nfs) == 12

    def test_alpha_is_the_length3_class(self):
        # in the point ring, alpha and the degree-3 entry x(sts) coincide
        point = c.fl_integral_point()
        fam = s.generate_family("point")
        target = fam["sts"]
        assert point.reduce_poly(2 * (target - ALPHA)).is_zero()


class TestExpansion:
    def test_family_is_a_basis(self):
        half = c.fl_half_point()
        fam = s.generate_family("point")
        for w in weyl.all_elements():
            coeffs = c.schubert_expand(fam.table[w], fam, half)
            for u, val in coeffs.items():
                assert val == (MPoly.one() if u is w else MPoly.zero())

    def test_degree_one_classes(self):
        half = c.fl_half_point()
        fam = s.generate_family("point")
        exp = c.schubert_expand(X1, fam, half)
        assert exp[weyl.element("s")] == MPoly.one()
        exp = c.schubert_expand(X1 + X2, fam, half)
        assert exp[weyl.element("t")] == MPoly.one()

    def test_random_combination_recovered(self):
        rng = random.Random(SEED + 2)
        half = c.fl_half_point()
        fam = s.generate_family("point")
        for _ in range(5):
            combo = MPoly.zero()
            chosen = {}
            for w in weyl.all_elements():
                k = Fraction(rng.randint(-4, 4))
                chosen[w] = MPoly.const(k)
                combo = combo + k * fam.table[w]
            got = c.schubert_expand(combo, fam, half)
            assert all(got[w] == chosen[w] for w in weyl.all_elements())

    def test_x1_is_an_integral_equivariant_combination(self):
        eq = c.fl_equivariant()
        fam = s.generate_family("eq-paper")
        exp = c.schubert_expand(X1, fam, eq)
        assert exp[weyl.element("s")] == MPoly.one()
        assert exp[weyl.identity()] == c.T1

    def test_not_in_span(self):
        half = c.fl_half_point()
        fam = s.generate_family("point")
        broken = dict(fam.table)
        broken[weyl.longest()] = MPoly.zero()
        degenerate = s.SchubertFamily("broken", broken)
        with pytest.raises(c.NotInSpan):
            c.schubert_expand(Fraction(1, 2) * X1 ** 5 * X2, degenerate, half)


class TestDuality:
    def test_pairing_matrix(self):
        fam = s.generate_family("point")
        pairing = c.duality_pairing(fam)
        w0 = weyl.longest()
        for u in weyl.all_elements():
            for w in weyl.all_elements():
                if u.length + w.length == 6:
                    expected = Fraction(1) if (w0 * u) is w else Fraction(0)
                    assert pairing[(u, w)] == expected
                else:
                    assert pairing[(u, w)] == 0

    def test_identity_pairs_with_longest(self):
        fam = s.generate_family("point")
        pairing = c.duality_pairing(fam)
        assert pairing[(weyl.identity(), weyl.longest())] == 1
        s_elt = weyl.element("s")
        assert pairing[(s_elt, weyl.longest() * s_elt)] == 1
        # mismatched complementary pair
        t_elt = weyl.element("t")
        assert pairing[(s_elt, weyl.longest() * t_elt)] == 0
