"""Divided difference operators and G2 Schubert polynomial families.

The two simple operators act on polynomials in x1, x2 (all other variables
are inert coefficients):

    ds(f) = (f(x1,x2) - f(x2,x1)) / (x1 - x2)
    dt(f) = (f(x1,x2) - f(x1,x1-x2)) / (-x1 + 2 x2)

and the twisted variant, for a twisting class v,

    dt_v(f) = (f(x1,x2) - f(x1,x1-x2-v)) / (-x1 + 2 x2 + v).

A family is the table {P_w} generated from a top-degree class by
P_w = d_{w0 w^-1} P_{w0}; the numerator of each step is exactly divisible by
the linear denominator, so everything stays in the polynomial ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

from . import weyl
from .exactalg import (
    LinSystem,
    LpFeasibility,
    MPoly,
    exact_divide,
    lp_feasible,
    solve_linear,
)
from .weyl import NonReducedWord, WeylElt

X1 = MPoly.var("x1")
X2 = MPoly.var("x2")
Y1 = MPoly.var("y1")
Y2 = MPoly.var("y2")
T1 = MPoly.var("t1")
T2 = MPoly.var("t2")
VV = MPoly.var("v")

FAMILY_KINDS = ("paper", "graham", "point", "twisted", "eq-paper", "eq-graham")


# ---------------------------------------------------------------------------
# the operators

_S_ACTION = {"x1": X2, "x2": X1}
_T_ACTION = {"x2": X1 - X2}
_TV_ACTION = {"x2": X1 - X2 - VV}

_ROOTS = {
    "s": X1 - X2,
    "t": -X1 + 2 * X2,
    "tv": -X1 + 2 * X2 + VV,
}
_ACTIONS = {"s": _S_ACTION, "t": _T_ACTION, "tv": _TV_ACTION}


def div_diff(kind: str, f: MPoly) -> MPoly:
    """Apply one divided difference operator; kind is "s", "t" or "tv"."""
    if kind not in _ROOTS:
        raise ValueError(f"unknown operator kind {kind!r}")
    numerator = f - f.subs(_ACTIONS[kind])
    if numerator.is_zero():
        return MPoly.zero()
    return exact_divide(numerator, _ROOTS[kind])


def div_diff_generic(f: MPoly, root: MPoly, action: Mapping[str, MPoly]) -> MPoly:
    """The general form (f - w.f) / root for a reflection acting by the given
    substitution; the explicit operators are this formula specialized through
    the root dictionary below."""
    numerator = f - f.subs(dict(action))
    if numerator.is_zero():
        return MPoly.zero()
    return exact_divide(numerator, root)


@dataclass(frozen=True)
class RootDict:
    """Dictionary between root-system data and the x variables.

    x1 and x1 + x2 are the two codimension-one Schubert classes, which pins
    x1 and x2 to specific positive roots; the simple roots and the
    reflection actions on x1, x2 follow from that identification.
    """

    alpha_s: MPoly = X1 - X2
    alpha_t: MPoly = -X1 + 2 * X2
    s_action: Tuple[Tuple[str, MPoly], ...] = (("x1", X2), ("x2", X1))
    t_action: Tuple[Tuple[str, MPoly], ...] = (("x2", X1 - X2),)

    def operator(self, kind: str):
        if kind == "s":
            root, action = self.alpha_s, dict(self.s_action)
        elif kind == "t":
            root, action = self.alpha_t, dict(self.t_action)
        else:
            raise ValueError(f"unknown simple reflection {kind!r}")
        return lambda f: div_diff_generic(f, root, action)


ROOT_DICT = RootDict()


def div_diff_word(word: str, f: MPoly, twisted: bool = False) -> MPoly:
    """Apply the composite operator of a reduced word (rightmost letter acts
    first).  Raises NonReducedWord for non-reduced input."""
    elt = weyl.element(word) if word else weyl.identity()
    if elt.length != len(word):
        raise NonReducedWord(f"{word!r} is not a reduced word")
    out = f
    for ch in reversed(word):
        kind = "tv" if (twisted and ch == "t") else ch
        out = div_diff(kind, out)
    return out


# ---------------------------------------------------------------------------
# top classes

def top_class(kind: str) -> MPoly:
    """The closed top-degree class that seeds each family."""
    if kind in ("paper", "eq-paper"):
        f1 = (X1 ** 3 - 2 * X1 ** 2 * Y1 + X1 * Y1 ** 2 - X1 * Y2 ** 2
              + X1 * Y1 * Y2 - Y1 ** 2 * Y2 + Y1 * Y2 ** 2)
        f2 = X1 ** 2 + X1 * Y1 + Y1 * Y2 - Y2 ** 2
        f3 = X2 - X1 - Y2
        poly = Fraction(1, 2) * f1 * f2 * f3
    elif kind in ("graham", "eq-graham"):
        g1 = 2 * X1 - X2 - Y1 + 2 * Y2
        g2 = 2 * X1 - X2 - Y1 - Y2
        g3 = X1 - 2 * X2 + Y1 + Y2
        g4 = (2 * X1 ** 3 - 3 * X1 ** 2 * X2 - 3 * X1 * X2 ** 2 + 2 * X2 ** 3
              - 2 * Y1 ** 3 + 3 * Y1 ** 2 * Y2 + 3 * Y1 * Y2 ** 2 - 2 * Y2 ** 3)
        poly = Fraction(1, 54) * g1 * g2 * g3 * g4
    elif kind == "point":
        poly = Fraction(1, 2) * X1 ** 5 * X2
    elif kind == "twisted":
        t1 = (X1 ** 3 - 2 * X1 ** 2 * Y1 + X1 * Y1 ** 2 - X1 * Y2 ** 2
              + X1 * Y1 * Y2 - Y1 ** 2 * Y2 + Y1 * Y2 ** 2
              + 5 * X1 ** 2 * VV - 7 * X1 * Y1 * VV + X1 * Y2 * VV
              + 2 * Y1 ** 2 * VV + Y1 * Y2 * VV - 2 * Y2 ** 2 * VV
              + 8 * X1 * VV ** 2 - 6 * Y1 * VV ** 2 + 2 * Y2 * VV ** 2
              + 4 * VV ** 3)
        t2 = X1 ** 2 + X1 * Y1 + Y1 * Y2 - Y2 ** 2 + X1 * VV + Y2 * VV
        t3 = X2 - X1 - Y2 + VV
        poly = Fraction(1, 2) * t1 * t2 * t3
    elif kind == "chern":
        # the same top class written in the Chern classes of the rank-3
        # subbundle: substituting c(F3) = (1+y1)(1+y2)(1+y1-y2) recovers
        # the y-form above
        c1f, c2f, c3f = MPoly.var("c1F"), MPoly.var("c2F"), MPoly.var("c3F")
        f1 = X1 ** 3 - c1f * X1 ** 2 + c2f * X1 - c3f
        f2 = X1 ** 2 + Y1 * X1 + c2f - Y1 ** 2
        f3 = X2 - X1 - Y2
        poly = Fraction(1, 2) * f1 * f2 * f3
    else:
        raise ValueError(f"unknown top class kind {kind!r}")
    return poly


def twist_substitution(f: MPoly, direction: str = "forward") -> MPoly:
    """x_i -> x_i + v, y_i -> y_i - v (forward), or the inverse."""
    if direction == "forward":
        return f.subs({"x1": X1 + VV, "x2": X2 + VV, "y1": Y1 - VV, "y2": Y2 - VV})
    if direction == "inverse":
        return f.subs({"x1": X1 - VV, "x2": X2 - VV, "y1": Y1 + VV, "y2": Y2 + VV})
    raise ValueError(f"unknown direction {direction!r}")


# ---------------------------------------------------------------------------
# families

@dataclass(frozen=True)
class SchubertFamily:
    kind: str
    table: Mapping[WeylElt, MPoly]

    def __getitem__(self, w) -> MPoly:
        return self.table[weyl.element(w)]

    def entries(self) -> List[Tuple[WeylElt, MPoly]]:
        """(element, polynomial) pairs, by length then canonical word."""
        return [(w, self.table[w]) for w in weyl.all_elements()]


@lru_cache(maxsize=None)
def generate_family(kind: str, w0_word: str = "ststst") -> SchubertFamily:
    """Generate the 12-entry table P_w = d_{w0 w^-1} P_{w0}.

    w0_word picks which reduced word of the longest element drives the one
    ambiguous case (w = id); the tables agree either way.
    """
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family kind {kind!r}")
    if w0_word not in weyl.LONGEST_WORDS:
        raise ValueError(f"{w0_word!r} is not a reduced word for the longest element")
    if kind in ("eq-paper", "eq-graham"):
        base = generate_family(kind.removeprefix("eq-"), w0_word)
        table = {w: p.subs({"y1": T1, "y2": T2}) for w, p in base.table.items()}
        return SchubertFamily(kind, table)
    top = top_class(kind)
    twisted = kind == "twisted"
    w0 = weyl.longest()
    table: Dict[WeylElt, MPoly] = {}
    for w in weyl.all_elements():
        u = w0 * w.inverse()
        word = w0_word if u is w0 else u.word
        table[w] = div_diff_word(word, top, twisted=twisted)
    return SchubertFamily(kind, table)


def equivariant_restriction(f: MPoly, v: weyl.WeylElt) -> MPoly:
    """Restrict an equivariant class (a polynomial in x and t) to the torus
    fixed point indexed by v.

    At the fixed flag through f_{v(1)}, f_{v(2)} the tautological roots
    specialize to the corresponding torus weights.  For the generated
    equivariant families this reproduces the localization pattern: the
    restriction of the class of w at v vanishes unless w <= v in Bruhat
    order, and at v = w it is the inversion-root product of w up to sign.
    """
    from .octonion import torus_weights
    chi = torus_weights()
    return f.subs({"x1": chi[v.pair[0] - 1], "x2": chi[v.pair[1] - 1]})


# ---------------------------------------------------------------------------
# Graham's identities

def graham_xi() -> Tuple[MPoly, MPoly, MPoly]:
    third = Fraction(1, 3)
    return (third * (2 * X1 - X2), third * (-X1 + 2 * X2), -third * (X1 + X2))


def graham_eta(base1: MPoly, base2: MPoly) -> Tuple[MPoly, MPoly, MPoly]:
    third = Fraction(1, 3)
    return (-third * (2 * base1 - base2), -third * (-base1 + 2 * base2),
            third * (base1 + base2))


@dataclass(frozen=True)
class IdentityReport:
    ok: bool
    difference: MPoly

    def __bool__(self):
        return self.ok


def graham_product_form_check() -> IdentityReport:
    """The quartic-times-linear-factors product form of the degree-6 class
    equals the expanded top class exactly."""
    xi1, xi2, xi3 = graham_xi()
    e1, e2, e3 = graham_eta(Y1, Y2)
    product = (Fraction(-27, 2) * (xi1 - e2) * (xi1 - e3) * (xi2 - e3)
               * (xi1 * xi2 * xi3 + e1 * e2 * e3))
    diff = product - top_class("graham")
    return IdentityReport(diff.is_zero(), diff)


@dataclass(frozen=True)
class IntegralityReport:
    ok: bool
    difference: MPoly
    combo27: Dict[str, MPoly]
    combo27_integral: bool
    combo_integral: bool

    def __bool__(self):
        return self.ok


def _has_integer_coeffs(f: MPoly) -> bool:
    return all(c.denominator == 1 for _, c in f.terms())


def graham_integrality_identity() -> IntegralityReport:
    """The half-sum of xi/eta cubes equals -1/27 of an explicit combination
    of three equivariant Schubert classes, as polynomials in x and t; the
    1/27 cannot be cleared, so only 27 times the class is integral."""
    fam = generate_family("eq-graham")
    xi1, xi2, xi3 = graham_xi()
    e1, e2, e3 = graham_eta(T1, T2)
    lhs = Fraction(1, 2) * (xi1 * xi2 * xi3 + e1 * e2 * e3)
    c_tst = MPoly.const(3)
    c_st = 3 * (T1 + T2)
    c_t = (T1 + T2) * (2 * T1 - T2)
    rhs = Fraction(-1, 27) * (c_tst * fam["tst"] + c_st * fam["st"] + c_t * fam["t"])
    diff = lhs - rhs
    combo27 = {"tst": c_tst, "st": c_st, "t": c_t}
    combo27_ok = all(_has_integer_coeffs(p) for p in combo27.values())
    combo_ok = all(_has_integer_coeffs(Fraction(1, 27) * p)
                   for p in combo27.values())
    return IntegralityReport(diff.is_zero(), diff, combo27, combo27_ok, combo_ok)


def remark_triple_cover_class() -> MPoly:
    """The degree-6 class for trivial gamma values but 3-torsion determinant
    twist: the product form with a lone v^3 added to the quartic factor.
    Over the rationals only its v = 0 specialization is meaningful."""
    g1 = 2 * X1 - X2 - Y1 + 2 * Y2
    g2 = 2 * X1 - X2 - Y1 - Y2
    g3 = X1 - 2 * X2 + Y1 + Y2
    g4 = (2 * X1 ** 3 - 3 * X1 ** 2 * X2 - 3 * X1 * X2 ** 2 + 2 * X2 ** 3
          - 2 * Y1 ** 3 + 3 * Y1 ** 2 * Y2 + 3 * Y1 * Y2 ** 2 - 2 * Y2 ** 3
          + VV ** 3)
    return Fraction(1, 54) * g1 * g2 * g3 * g4


# ---------------------------------------------------------------------------
# impossibility of positive polynomials in x1, x2

# the unique chain forced by nonnegativity of coefficients, degree <= 4
FORCED_CHAIN: Dict[str, MPoly] = {
    "": MPoly.one(),
    "s": X1,
    "t": X1 + X2,
    "ts": X1 ** 2,
    "st": Fraction(1, 2) * (X1 ** 2 + X1 * X2 + X2 ** 2),
    "sts": Fraction(1, 2) * X1 ** 3,
    "tst": Fraction(1, 2) * (X1 ** 2 * X2 + X1 * X2 ** 2),
    "stst": Fraction(1, 2) * X1 ** 2 * X2 ** 2,
}

_COEFF_VARS = ("a", "b", "c", "d", "e")


@dataclass(frozen=True)
class ImpossibilityCertificate:
    """Proof that no degree-4 polynomial with nonnegative coefficients can
    continue the forced chain.

    equations: the linear constraints on the coefficients (a..e) of
        P = a x1^4 + b x1^3 x2 + c x1^2 x2^2 + d x1 x2^3 + e x2^4
    coming from dt P = 0 and ds P = P_tst.  farkas certifies the combined
    system with a..e >= 0 infeasible; linear_certificate exhibits 0 = 1/2
    once the nonnegativity-forced vanishing of b, c, d, e is substituted.
    """

    equations: List[Tuple[Tuple[Fraction, ...], Fraction]]
    equation_text: List[str]
    farkas_multipliers: List[Fraction]
    forced_zero: Tuple[str, ...]
    linear_combination: List[Fraction]
    linear_value: Fraction

    def lp_problem(self) -> LpFeasibility:
        return LpFeasibility(matrix=[list(row) for row, _ in self.equations],
                             rhs=[rhs for _, rhs in self.equations])

    def verify(self) -> bool:
        from .exactalg import LpInfeasible, LinInconsistency
        lp_ok = LpInfeasible(self.farkas_multipliers).verify(self.lp_problem())
        lin_ok = LinInconsistency(self.linear_combination,
                                  self.linear_value).verify(self._stage2_system())
        return lp_ok and lin_ok

    def _stage2_system(self) -> LinSystem:
        rows = []
        rhs = []
        for name in self.forced_zero:
            row = [Fraction(0)] * 5
            row[_COEFF_VARS.index(name)] = Fraction(1)
            rows.append(row)
            rhs.append(Fraction(0))
        for row, value in self.equations:
            rows.append(list(row))
            rhs.append(value)
        return LinSystem(rows, rhs)


def _coefficient_equations(poly_in_unknowns: MPoly, target: MPoly):
    """Match an x-polynomial with linear a..e coefficients against a target,
    returning rows of the induced linear system on (a, b, c, d, e)."""
    diff = poly_in_unknowns - target
    buckets: Dict[Tuple[int, int], Dict[str, Fraction]] = {}
    consts: Dict[Tuple[int, int], Fraction] = {}
    for exp, coef in diff.terms():
        xkey = (diff.exponent_of(exp, "x1"), diff.exponent_of(exp, "x2"))
        unknown = None
        for name in _COEFF_VARS:
            if diff.exponent_of(exp, name) == 1:
                unknown = name
                break
        if unknown is None:
            consts[xkey] = consts.get(xkey, Fraction(0)) + coef
        else:
            buckets.setdefault(xkey, {})[unknown] = coef
    equations = []
    for xkey in sorted(set(buckets) | set(consts), reverse=True):
        row = tuple(buckets.get(xkey, {}).get(name, Fraction(0))
                    for name in _COEFF_VARS)
        rhs = -consts.get(xkey, Fraction(0))
        if any(row) or rhs:
            equations.append((row, rhs))
    # deduplicate up to scaling
    unique = []
    for row, rhs in equations:
        scaled = None
        for row2, rhs2 in unique:
            for i in range(5):
                if row2[i] != 0:
                    ratio = row[i] / row2[i] if row[i] != 0 else None
                    break
            else:
                ratio = None
            if ratio and all(row[i] == ratio * row2[i] for i in range(5)) \
                    and rhs == ratio * rhs2:
                scaled = True
                break
        if not scaled:
            unique.append((row, rhs))
    return unique


def impossibility_certificate() -> ImpossibilityCertificate:
    """Build and certify the obstruction to a positive degree-4 entry."""
    # verify the forced chain is internally consistent first
    for word, poly in FORCED_CHAIN.items():
        w = weyl.element(word)
        for letter, op in (("s", "s"), ("t", "t")):
            neighbor = w * weyl.element(letter)
            image = div_diff(op, poly)
            if neighbor.length < w.length:
                expected = FORCED_CHAIN[neighbor.word]
                if image != expected:
                    raise ArithmeticError(f"chain breaks at {word!r} / {letter}")
            elif not image.is_zero():
                raise ArithmeticError(f"chain breaks at {word!r} / {letter}")

    mono = [X1 ** 4, X1 ** 3 * X2, X1 ** 2 * X2 ** 2, X1 * X2 ** 3, X2 ** 4]
    p = MPoly.zero()
    for name, m in zip(_COEFF_VARS, mono):
        p = p + MPoly.var(name) * m
    eq_t = _coefficient_equations(div_diff("t", p), MPoly.zero())
    eq_s = _coefficient_equations(div_diff("s", p), FORCED_CHAIN["tst"])
    equations = eq_t + eq_s

    result = lp_feasible(LpFeasibility(matrix=[list(r) for r, _ in equations],
                                        rhs=[v for _, v in equations]))
    if result.feasible:
        raise ArithmeticError("expected the combined system to be infeasible")

    # stage-2: nonnegativity plus dt P = 0 forces b = c = d = e = 0, after
    # which the remaining equations are linearly inconsistent
    forced = ("b", "c", "d", "e")
    cert_rows = []
    cert_rhs = []
    for name in forced:
        row = [Fraction(0)] * 5
        row[_COEFF_VARS.index(name)] = Fraction(1)
        cert_rows.append(row)
        cert_rhs.append(Fraction(0))
    for row, value in equations:
        cert_rows.append(list(row))
        cert_rhs.append(value)
    lin = solve_linear(LinSystem(cert_rows, cert_rhs))
    if lin.consistent:
        raise ArithmeticError("expected stage-2 system to be inconsistent")

    texts = [_equation_text(row, rhs) for row, rhs in equations]
    cert = ImpossibilityCertificate(
        equations=equations,
        equation_text=texts,
        farkas_multipliers=result.multipliers,
        forced_zero=forced,
        linear_combination=lin.combination,
        linear_value=lin.value,
    )
    if not cert.verify():
        raise ArithmeticError("certificate failed its own verification")
    return cert


def forced_vanishing_is_certified() -> bool:
    """Each of b, c, d, e is zero on the cone {dt P = 0, coeffs >= 0}: the
    cone is scaling-invariant, so 'variable = 1' joined to the equations must
    be infeasible."""
    mono = [X1 ** 4, X1 ** 3 * X2, X1 ** 2 * X2 ** 2, X1 * X2 ** 3, X2 ** 4]
    p = MPoly.zero()
    for name, m in zip(_COEFF_VARS, mono):
        p = p + MPoly.var(name) * m
    eq_t = _coefficient_equations(div_diff("t", p), MPoly.zero())
    for name in ("b", "c", "d", "e"):
        pin = [Fraction(0)] * 5
        pin[_COEFF_VARS.index(name)] = Fraction(1)
        rows = [list(r) for r, _ in eq_t] + [pin]
        rhs = [v for _, v in eq_t] + [Fraction(1)]
        if lp_feasible(LpFeasibility(rows, rhs)).feasible:
            return False
    return True


def _equation_text(row, rhs) -> str:
    parts = []
    for coef, name in zip(row, _COEFF_VARS):
        if coef == 0:
            continue
        if coef == 1:
            term = name
        elif coef == -1:
            term = f"-{name}"
        else:
            term = f"{coef} {name}"
        parts.append(term if not parts else
                     (f"+ {term}" if coef > 0 else f"- {term.lstrip('-')}"))
    lhs = " ".join(parts) if parts else "0"
    return f"{lhs} = {rhs}"


# ---------------------------------------------------------------------------
# positivity in x1, x2, x3 = x1 - x2

@dataclass(frozen=True)
class PositiveRewrite:
    feasible: bool
    coefficients: Optional[Dict[Tuple[int, int, int], Fraction]]
    farkas_multipliers: Optional[List[Fraction]]
    monomials: List[Tuple[int, int, int]]

    def __bool__(self):
        return self.feasible

    def expansion(self) -> MPoly:
        if not self.feasible:
            raise ValueError("no expansion for an infeasible rewrite")
        total = MPoly.zero()
        for (i, j, k), coef in self.coefficients.items():
            total = total + coef * X1 ** i * X2 ** j * (X1 - X2) ** k
        return total


def positive_rewrite(f: MPoly, d: int) -> PositiveRewrite:
    """Express a homogeneous degree-d polynomial in x1, x2 as a nonnegative
    combination of monomials in x1, x2, x3 = x1 - x2, or certify that no
    such expression exists.  Exact LP feasibility either way."""
    used = [name for name in f.variables() if name not in ("x1", "x2")]
    if used:
        raise ValueError(f"polynomial involves {used}, expected x1, x2 only")
    for exp, _ in f.terms():
        if sum(exp) != d:
            raise ValueError("polynomial is not homogeneous of the given degree")
    monomials = [(i, j, d - i - j)
                 for i in range(d + 1) for j in range(d + 1 - i)]
    x3 = X1 - X2

    def x_vector(p: MPoly) -> List[Fraction]:
        return [p.coeff({"x1": d - k, "x2": k}) for k in range(d + 1)]

    columns = [x_vector(X1 ** i * X2 ** j * x3 ** k) for (i, j, k) in monomials]
    target = x_vector(f)
    rows = [[columns[c][r] for c in range(len(monomials))]
            for r in range(d + 1)]
    result = lp_feasible(LpFeasibility(matrix=rows, rhs=target))
    if result.feasible:
        coeffs = {m: result.vector[idx] for idx, m in enumerate(monomials)
                  if result.vector[idx] != 0}
        rewrite = PositiveRewrite(True, coeffs, None, monomials)
        if rewrite.expansion() != f:
            raise ArithmeticError("rewrite does not re-expand to the input")
        return rewrite
    return PositiveRewrite(False, None, result.multipliers, monomials)
