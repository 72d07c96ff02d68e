import random
from fractions import Fraction

import pytest

from g2schubert.exactalg import (
    GaussRat,
    LinSystem,
    LpFeasibility,
    MPoly,
    NotDivisible,
    PolySyntaxError,
    UnboundVariable,
    UnknownVariable,
    exact_divide,
    lp_feasible,
    mpoly_arith,
    parse_poly,
    solve_linear,
    substitute,
)
from g2schubert.exactalg.mpoly import VARIABLES

X1 = MPoly.var("x1")
X2 = MPoly.var("x2")
Y1 = MPoly.var("y1")

RNG_SEED = 90125


def rand_poly(rng, names=("x1", "x2"), max_deg=4, terms=5):
    total = MPoly.zero()
    for _ in range(terms):
        exps = {}
        budget = rng.randint(0, max_deg)
        for name in names:
            e = rng.randint(0, budget)
            if e:
                exps[name] = e
                budget -= e
        total = total + MPoly.monomial(
            exps, Fraction(rng.randint(-9, 9), rng.randint(1, 4)))
    return total


def naive_mul(f, g):
    # independent distributive-expansion oracle
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return MPoly(out)


class TestArithmetic:
    def test_difference_of_squares(self):
        assert mpoly_arith(X1 + X2, X1 - X2, "mul") == X1 ** 2 - X2 ** 2

    def test_additive_identity(self):
        f = X1 ** 2 + 3 * X2
        assert mpoly_arith(f, MPoly.zero(), "add") == f

    def test_mul_against_naive_oracle(self):
        rng = random.Random(RNG_SEED)
        for _ in range(100):
            f, g = rand_poly(rng), rand_poly(rng)
            assert f * g == naive_mul(f, g)

    def test_ring_axioms_random_triples(self):
        rng = random.Random(RNG_SEED + 1)
        for _ in range(30):
            f, g, h = (rand_poly(rng, ("x1", "x2", "y1")) for _ in range(3))
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert f + g == g + f
            assert f * g == g * f

    def test_zero_terms_never_stored(self):
        f = X1 - X1
        assert f.is_zero() and len(f) == 0

    def test_power(self):
        assert (X1 + 1) ** 3 == X1 ** 3 + 3 * X1 ** 2 + 3 * X1 + 1


class TestExactDivide:
    def test_difference_of_squares(self):
        assert exact_divide(X1 ** 2 - X2 ** 2, X1 - X2) == X1 + X2

    def test_zero_dividend(self):
        assert exact_divide(MPoly.zero(), X1 - X2).is_zero()

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            exact_divide(X1 ** 2 + X2, X1 - X2)

    def test_antisymmetric_part_always_divisible(self):
        # oracle: multiply the quotient back
        rng = random.Random(RNG_SEED + 2)
        for _ in range(50):
            f = rand_poly(rng, max_deg=6, terms=7)
            swapped = f.subs({"x1": X2, "x2": X1})
            q = exact_divide(f - swapped, X1 - X2)
            assert q * (X1 - X2) == f - swapped

    def test_random_product_division(self):
        rng = random.Random(RNG_SEED + 3)
        for _ in range(25):
            f, g = rand_poly(rng), rand_poly(rng)
            if g.is_zero():
                continue
            assert exact_divide(f * g, g) == f


class TestSubstitute:
    def test_shift(self):
        v = MPoly.var("v")
        assert X1.subs({"x1": X1 + v}) ** 2 == X1 ** 2 + 2 * X1 * v + v ** 2

    def test_identity_assignment(self):
        f = X1 ** 2 - 3 * X2 + 1
        assert substitute(f, {"x1": X1, "x2": X2}) == f

    def test_unbound_variable(self):
        with pytest.raises(UnboundVariable):
            substitute(X1 + X2, {"x1": X1})

    def test_homomorphic(self):
        rng = random.Random(RNG_SEED + 4)
        sub = {"x1": X1 + X2, "x2": X1 - 2 * X2}
        for _ in range(20):
            f, g = rand_poly(rng), rand_poly(rng)
            assert (f * g).subs(sub) == f.subs(sub) * g.subs(sub)

    def test_linear_change_of_variables_inverts(self):
        # xi = (1/3)(2x1 - x2), (1/3)(-x1 + 2x2); inverse 2x1 + x2, x1 + 2x2
        fwd = {"x1": Fraction(1, 3) * (2 * X1 - X2),
               "x2": Fraction(1, 3) * (-X1 + 2 * X2)}
        back = {"x1": 2 * X1 + X2, "x2": X1 + 2 * X2}
        rng = random.Random(RNG_SEED + 5)
        for _ in range(20):
            f = rand_poly(rng)
            assert f.subs(fwd).subs(back) == f


class TestCanonicalForm:
    def test_graded_lex_print_order(self):
        f = X2 ** 2 + X1 * X2 + X1 + 1
        assert str(f) == "x1 x2 + x2^2 + x1 + 1"

    def test_print_parse_roundtrip(self):
        rng = random.Random(RNG_SEED + 6)
        for _ in range(40):
            f = rand_poly(rng, ("x1", "x2", "y1", "alpha"), 5, 6)
            assert parse_poly(str(f)) == f

    def test_parse_examples(self):
        assert parse_poly("1/2 x1^5 x2") == Fraction(1, 2) * X1 ** 5 * X2
        assert parse_poly("(x1+x2)^2 - x1^2 - x2^2") == 2 * X1 * X2
        assert parse_poly("2*x1 + -3") == 2 * X1 - 3

    def test_parse_errors_carry_position(self):
        with pytest.raises(PolySyntaxError) as err:
            parse_poly("x1 + + x2 ^")
        assert err.value.pos >= 0
        with pytest.raises(UnknownVariable):
            parse_poly("x1 + zz")

    def test_all_variables_parse(self):
        for name in VARIABLES:
            assert parse_poly(name) == MPoly.var(name)


class TestLinear:
    def test_inconsistent_pair(self):
        sys = LinSystem([[1], [1]], [1, 2])
        res = solve_linear(sys)
        assert not res.consistent
        assert res.verify(sys)

    def test_simple_solve(self):
        res = solve_linear(LinSystem([[1, 1], [1, -1]], [2, 0]))
        assert res.consistent
        assert res.vector == [Fraction(1), Fraction(1)]

    def test_certificates_verify_by_multiplication(self):
        rng = random.Random(RNG_SEED + 7)
        for _ in range(20):
            m = rng.randint(2, 5)
            n = rng.randint(1, 4)
            rows = [[Fraction(rng.randint(-4, 4)) for _ in range(n)]
                    for _ in range(m)]
            rhs = [Fraction(rng.randint(-4, 4)) for _ in range(m)]
            sys = LinSystem(rows, rhs)
            res = solve_linear(sys)
            if res.consistent:
                for row, b in zip(rows, rhs):
                    assert sum(r * x for r, x in zip(row, res.vector)) == b
            else:
                assert res.verify(sys)


class TestLp:
    def test_simplex_feasible(self):
        prob = LpFeasibility([[1, 1]], [1])
        res = lp_feasible(prob)
        assert res.feasible and res.verify(prob)

    def test_simplex_infeasible(self):
        prob = LpFeasibility([[1]], [-1])
        res = lp_feasible(prob)
        assert not res.feasible and res.verify(prob)

    def test_degenerate_system(self):
        prob = LpFeasibility([[1, -1], [2, -2]], [0, 0])
        res = lp_feasible(prob)
        assert res.feasible and res.verify(prob)

    def test_random_problems_exact(self):
        rng = random.Random(RNG_SEED + 8)
        for _ in range(30):
            m, n = rng.randint(1, 4), rng.randint(1, 6)
            rows = [[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                    for _ in range(m)]
            rhs = [Fraction(rng.randint(-3, 3)) for _ in range(m)]
            prob = LpFeasibility(rows, rhs)
            res = lp_feasible(prob)
            assert res.verify(prob)


class TestGaussRat:
    def test_i_squared(self):
        i = GaussRat(0, 1)
        assert i * i == GaussRat(-1)

    def test_conjugation_involution(self):
        z = GaussRat(Fraction(2, 3), Fraction(-1, 2))
        assert z.conjugate().conjugate() == z

    def test_division(self):
        z = GaussRat(1, 1)
        assert z / z == GaussRat(1)
        assert (GaussRat(2) / GaussRat(0, 1)) == GaussRat(0, -2)
