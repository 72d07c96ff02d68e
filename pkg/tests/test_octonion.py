import random
from fractions import Fraction

import pytest

from g2schubert import octonion as o
from g2schubert.exactalg import MPoly, rank

f = o.basis_vec
SEED = 31415


def rand_vec(rng):
    return o.VecV([Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                   for _ in range(7)])


def rand_oct(rng):
    return o.Oct(Fraction(rng.randint(-4, 4)), rand_vec(rng))


@pytest.fixture(scope="module")
def fctx():
    return o.standard_forms("f")


@pytest.fixture(scope="module")
def ectx():
    return o.standard_forms("e")


class TestStandardForms:
    def test_f_gamma_values(self, fctx):
        g = fctx.gamma
        assert g.value(1, 4, 7) == 1
        assert g.value(2, 3, 7) == -1
        assert g.value(1, 5, 6) == -1
        assert g.value(2, 3, 1) == 0

    def test_f_beta_values(self, fctx):
        b = fctx.beta
        assert b(f(4), f(4)) == -2
        assert b(f(1), f(7)) == -1
        assert b(f(1), f(1)) == 0
        assert b(f(2), f(6)) == -1

    def test_e_gamma_value(self, ectx):
        assert ectx.gamma.value(1, 2, 3) == 2

    def test_e_beta_orthonormal(self, ectx):
        assert all(ectx.beta(f(p), f(q)) == (2 if p == q else 0)
                   for p in range(1, 8) for q in range(1, 8))


class TestBasisChange:
    def test_roundtrip_on_basis(self):
        for i in range(1, 8):
            assert o.to_f_basis(o.to_e_basis(f(i))) == f(i)
            assert o.to_e_basis(o.to_f_basis(f(i))) == f(i)

    def test_pushforward_matches_standard_forms(self, fctx):
        tri, bil = o.push_forms_to_f()
        assert tri.coeffs == fctx.gamma.coeffs
        assert bil.matrix == fctx.beta.matrix


class TestDagger:
    def test_minus_f7_star(self, fctx):
        phi = [Fraction(0)] * 7
        phi[6] = Fraction(-1)
        assert fctx.dagger(phi) == f(1)

    def test_f4_star(self, fctx):
        phi = [Fraction(0)] * 7
        phi[3] = Fraction(1)
        assert fctx.dagger(phi) == f(4).scale(Fraction(-1, 2))

    def test_zero(self, fctx):
        assert fctx.dagger([Fraction(0)] * 7).is_zero()

    def test_dagger_inverse(self, fctx):
        rng = random.Random(SEED)
        for _ in range(10):
            v = rand_vec(rng)
            assert fctx.dagger(fctx.beta.dagger_inv(v)) == v


class TestProduct:
    def test_f2_f3(self, fctx):
        assert fctx.mul_imag(f(2), f(3)) == o.Oct.imag(f(1))

    def test_identity(self, fctx):
        e = o.Oct.unit()
        for i in range(1, 8):
            u = o.Oct.imag(f(i))
            assert fctx.mul(e, u) == u and fctx.mul(u, e) == u

    def test_norm_composition_on_table(self, fctx):
        rng = random.Random(SEED + 1)
        for _ in range(200):
            u, v = rand_oct(rng), rand_oct(rng)
            assert fctx.norm(fctx.mul(u, v)) == fctx.norm(u) * fctx.norm(v)

    def test_full_basis_table(self, fctx):
        table = o.multiplication_table(fctx)
        assert len(table) == 8 and all(len(row) == 8 for row in table)
        basis = [o.Oct.unit()] + [o.Oct.imag(f(i)) for i in range(1, 8)]
        for i in range(8):
            for j in range(8):
                assert (fctx.norm(table[i][j])
                        == fctx.norm(basis[i]) * fctx.norm(basis[j]))
        # spot entries: f2 f3 = f1; f1 f7 = 1/2 e + 1/2 f4; squares of the
        # isotropic basis vectors vanish
        assert table[2][3] == o.Oct.imag(f(1))
        assert table[1][7] == o.Oct(Fraction(1, 2), f(4).scale(Fraction(1, 2)))
        for i in (1, 2, 3, 5, 6, 7):
            assert table[i][i].is_zero()

    def test_conjugate_and_norm(self, fctx):
        e = o.Oct.unit()
        assert fctx.conjugate(e) == e
        assert fctx.norm(e) == 1
        u = o.Oct.imag(f(3))
        assert fctx.conjugate(u) == -u
        assert fctx.norm(o.Oct.imag(f(1))) == 0
        assert fctx.norm(o.Oct.imag(f(1) + f(7))) == -1

    def test_minimal_equation(self, fctx):
        rng = random.Random(SEED + 2)
        e = o.Oct.unit()
        for _ in range(100):
            u = rand_oct(rng)
            trace = fctx.bprime(u, e)
            lhs = fctx.mul(u, u) - u.scale(trace) + e.scale(fctx.norm(u))
            assert lhs.is_zero()

    def test_u_ubar_is_norm(self, fctx):
        rng = random.Random(SEED + 3)
        for _ in range(25):
            u = rand_oct(rng)
            prod = fctx.mul(u, fctx.conjugate(u))
            assert prod == o.Oct.unit().scale(fctx.norm(u))

    def test_product_recovers_trilinear_form(self, fctx):
        # on imaginary elements, beta'(u v, w) is the trilinear form itself
        rng = random.Random(SEED + 14)
        for _ in range(25):
            u, v, w = rand_vec(rng), rand_vec(rng), rand_vec(rng)
            lhs = fctx.bprime(fctx.mul_imag(u, v), o.Oct.imag(w))
            assert lhs == fctx.gamma(u, v, w)

    def test_anticommutator_is_minus_beta(self, fctx):
        rng = random.Random(SEED + 15)
        e = o.Oct.unit()
        for _ in range(25):
            u, v = rand_vec(rng), rand_vec(rng)
            anti = (fctx.mul_imag(u, v) + fctx.mul_imag(v, u))
            assert anti == e.scale(-fctx.beta(u, v))

    def test_adjointness(self, fctx):
        rng = random.Random(SEED + 4)
        for _ in range(50):
            u, v, w = rand_oct(rng), rand_oct(rng), rand_oct(rng)
            a = fctx.bprime(fctx.mul(u, v), w)
            assert a == fctx.bprime(v, fctx.mul(fctx.conjugate(u), w))
            assert a == fctx.bprime(u, fctx.mul(w, fctx.conjugate(v)))

    def test_zero_divisor_law(self, fctx):
        rng = random.Random(SEED + 5)
        for _ in range(20):
            iso = o.Oct.imag(_random_isotropic(rng))
            assert fctx.norm(iso) == 0
            assert rank(o.left_mult_matrix(fctx, iso)) < 8
            reg = rand_oct(rng)
            if fctx.norm(reg) != 0:
                assert rank(o.left_mult_matrix(fctx, reg)) == 8


def _random_isotropic(rng):
    while True:
        tail = [Fraction(rng.randint(-4, 4), rng.randint(1, 2))
                for _ in range(6)]
        if tail[5] == 0:
            continue
        u2, u3, u4, u5, u6, u7 = tail
        u1 = -(u2 * u6 + u3 * u5 + u4 * u4) / u7
        return o.VecV([u1, u2, u3, u4, u5, u6, u7])


class TestCompatibility:
    def test_f1_f7_pair(self, fctx):
        u, v = f(1), f(7)
        phi = fctx.gamma.functional(u, v)
        lhs = 2 * fctx.gamma(u, v, fctx.beta.dagger(phi))
        rhs = fctx.beta(u, u) * fctx.beta(v, v) - fctx.beta(u, v) ** 2
        assert lhs == rhs == -1

    def test_diagonal_pairs_trivially_zero(self, fctx):
        for i in range(1, 8):
            u = f(i)
            phi = fctx.gamma.functional(u, u)
            assert all(x == 0 for x in phi)
            assert fctx.beta(u, u) ** 2 == fctx.beta(u, u) * fctx.beta(u, u)

    def test_spanning_sample_passes(self, fctx):
        rep = o.check_compatible(fctx.gamma, fctx.beta)
        assert rep.ok
        assert rep.checked == 28 * 28

    def test_perturbed_beta_fails(self, fctx):
        bad = [list(row) for row in fctx.beta.matrix]
        bad[3][3] = Fraction(-1)
        rep = o.check_compatible(fctx.gamma, o.BilForm(bad))
        assert not rep.ok
        assert rep.counterexample is not None
        assert rep.lhs != rep.rhs


class TestBryant:
    def test_recovers_beta(self, fctx):
        res = o.bryant_form(fctx.gamma)
        assert res.bil.matrix == fctx.beta.matrix
        assert res.nondegenerate

    def test_seven_form_integers(self, fctx):
        res = o.bryant_form(fctx.gamma)
        for p in range(7):
            for q in range(7):
                if p == q == 3:
                    assert res.seven_coeffs[p][q] == 6
                elif p + q == 6:
                    assert res.seven_coeffs[p][q] == 3
                else:
                    assert res.seven_coeffs[p][q] == 0

    def test_zero_form_degenerate(self):
        res = o.bryant_form(o.TriForm({}))
        assert all(x == 0 for row in res.bil.matrix for x in row)
        assert not res.nondegenerate


class TestKernels:
    def test_standard_triples(self, fctx):
        assert o.fixed_point_triples(fctx) == {
            1: (1, 2, 3), 2: (2, 1, 5), 3: (3, 1, 6),
            5: (5, 2, 7), 6: (6, 3, 7), 7: (7, 5, 6)}

    def test_kernel_of_f1(self, fctx):
        kernel = o.isotropic_kernel(fctx, f(1))
        assert kernel == [f(1), f(2), f(3)]

    def test_kernel_of_f7(self, fctx):
        kernel = o.isotropic_kernel(fctx, f(7))
        assert kernel == [f(5), f(6), f(7)]

    def test_kernel_of_sum(self, fctx):
        u = f(1) + f(2)
        kernel = o.isotropic_kernel(fctx, u)
        assert len(kernel) == 3
        # u itself lies in its kernel
        mat = [[vec[j] for vec in kernel] for j in range(7)]
        from g2schubert.exactalg import LinSystem, solve_linear
        res = solve_linear(LinSystem(mat, list(u.coords)))
        assert res.consistent

    def test_non_isotropic_rejected(self, fctx):
        with pytest.raises(o.NotIsotropic):
            o.isotropic_kernel(fctx, f(1) + f(7))

    def test_fixed_points_list(self, fctx):
        assert o.fixed_points(fctx) == [
            (1, 2), (1, 3), (2, 1), (2, 5), (3, 1), (3, 6),
            (5, 2), (5, 7), (6, 3), (6, 7), (7, 5), (7, 6)]

    def test_gamma_isotropic_implies_beta_isotropic(self, fctx):
        # the standard flag <f1> in <f1, f2>
        assert all(x == 0 for x in fctx.gamma.functional(f(1), f(2)))
        for u in (f(1), f(2), f(1) + f(2)):
            assert fctx.beta(u, u) == 0
        assert fctx.beta(f(1), f(2)) == 0


class TestCrossLambda:
    def test_standard_triple(self, fctx):
        assert o.cross_lambda(fctx, f(1), f(2), f(3)) == 1
        assert o.cross_lambda(fctx, f(1), f(3), f(2)) == -1

    def test_symbolic_bilinearity(self, fctx):
        a, b, c = (MPoly.var(n) for n in ("a", "b", "c"))
        v = f(2).scale(a) + f(3).scale(b) + f(1).scale(c)
        lam = o.cross_lambda(fctx, f(1), v, f(3))
        assert lam == a

    def test_two_plane_criterion(self, fctx):
        # symbolic plane <v, w> in E_f1: v w = (b g - c e) f1, so the product
        # vanishes exactly when f1 lies in the plane
        a, b, c, d, e, g = (MPoly.var(n) for n in ("a", "b", "c", "d", "e", "g"))
        v = f(1).scale(a) + f(2).scale(b) + f(3).scale(c)
        w = f(1).scale(d) + f(2).scale(e) + f(3).scale(g)
        prod = fctx.mul_imag(v, w)
        assert prod.im == f(1).scale(b * g - c * e)
        assert o._is_zero(prod.re)

    def test_not_proportional(self, fctx):
        with pytest.raises(o.NotProportional):
            o.cross_lambda(fctx, f(1), f(2), f(6))


class TestTorus:
    def test_weights(self):
        t1, t2 = MPoly.var("t1"), MPoly.var("t2")
        assert o.torus_weights() == (t1, t2, t1 - t2, MPoly.zero(),
                                     t2 - t1, -t2, -t1)

    def test_invariance(self, fctx):
        assert o.torus_invariance_check(fctx).ok

    def test_requires_f_basis(self, ectx):
        with pytest.raises(ValueError):
            o.torus_invariance_check(ectx)


class TestBigCell:
    def test_symbolic_product_vanishes(self, fctx):
        row1, row2 = o.big_cell_rows()
        prod = fctx.mul(o.Oct.imag(row1), o.Oct.imag(row2))
        assert prod.is_zero()
        assert o._is_zero(fctx.beta(row1, row1))
        assert o._is_zero(fctx.beta(row2, row2))

    def test_origin_is_center(self, fctx):
        row1, row2 = o.big_cell_rows([0] * 6)
        assert row1 == f(7) and row2 == f(6)
        assert fctx.mul_imag(row1, row2).is_zero()

    def test_single_parameter(self, fctx):
        row1, row2 = o.big_cell_rows([1, 0, 0, 0, 0, 0])
        assert row1 == o.VecV([0, 1, 0, 0, 0, 0, 1])
        assert fctx.mul_imag(row1, row2).is_zero()


class TestBasicTriple:
    def test_e1_e2_e5(self, ectx):
        a, b, c = o.Oct.imag(f(1)), o.Oct.imag(f(2)), o.Oct.imag(f(5))
        eight = [o.Oct.unit(), a, b, ectx.mul(a, b), c,
                 ectx.mul(a, c), ectx.mul(b, c),
                 ectx.mul(ectx.mul(a, b), c)]
        for i in range(8):
            for j in range(i + 1, 8):
                assert ectx.bprime(eight[i], eight[j]) == 0
