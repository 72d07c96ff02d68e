"""Composition algebras on a 7-space from a compatible form pair.

An alternating trilinear form gamma and a nondegenerate symmetric bilinear
form beta on V (dim 7) are *compatible* when

    2 gamma(u, v, gamma(u, v, .)^dagger) = beta(u,u) beta(v,v) - beta(u,v)^2

for all u, v, where dagger is the beta-isomorphism V* -> V.  Such a pair
makes C = k + V an octonion algebra with product

    u v = -1/2 beta(u,v) e + gamma(u,v,.)^dagger      (u, v imaginary)

and norm N(u) = 1/2 beta(u,u) on V.  This module builds the two standard
models (the orthonormal e-basis and the isotropic f-basis), the Bryant form
recovering beta from gamma, the 3-dimensional isotropic kernels E_u, the
torus action, and the parametrization of the big Schubert cell.

The algebra operations are generic over the scalar ring: coordinates may be
Fractions, GaussRats, or MPolys (the big-cell identity is checked with
polynomial coordinates).  The forms themselves always have rational entries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exactalg import (
    GaussRat,
    MPoly,
    NotDivisible,
    exact_divide,
    matrix_inverse,
    nullspace,
    determinant,
)

DIM = 7


class SingularForm(ValueError):
    """A bilinear form required to be nondegenerate is singular."""


class NotIsotropic(ValueError):
    """Kernel requested at a vector of nonzero norm."""


class NotProportional(ValueError):
    """A product that should land in a line did not."""


# ---------------------------------------------------------------------------
# scalar helpers (Fraction | GaussRat | MPoly)

def _is_zero(x) -> bool:
    if isinstance(x, MPoly):
        return x.is_zero()
    if isinstance(x, GaussRat):
        return x.is_zero()
    return x == 0


def _as_mpoly(x) -> MPoly:
    if isinstance(x, MPoly):
        return x
    return MPoly.const(x)


def _div(a, b):
    """Exact scalar division; NotDivisible may propagate for polynomials."""
    if isinstance(a, MPoly) or isinstance(b, MPoly):
        return exact_divide(_as_mpoly(a), _as_mpoly(b))
    return a / b


class VecV:
    """A vector of V in the active basis: exactly 7 scalar coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        coords = tuple(coords)
        if len(coords) != DIM:
            raise ValueError("VecV needs exactly 7 coordinates")
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("VecV is immutable")

    def __getitem__(self, i: int):
        return self.coords[i]

    def __add__(self, other: "VecV") -> "VecV":
        return VecV(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "VecV") -> "VecV":
        return VecV(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "VecV":
        return VecV(tuple(-x for x in self.coords))

    def scale(self, s) -> "VecV":
        return VecV(tuple(s * x for x in self.coords))

    def is_zero(self) -> bool:
        return all(_is_zero(x) for x in self.coords)

    def __eq__(self, other):
        if not isinstance(other, VecV):
            return NotImplemented
        return all(_is_zero(x - y) for x, y in zip(self.coords, other.coords))

    def __repr__(self):
        return "VecV(" + ", ".join(str(x) for x in self.coords) + ")"


def zero_vec() -> VecV:
    return VecV([Fraction(0)] * DIM)


def basis_vec(i: int) -> VecV:
    """The i-th basis vector, 1-based."""
    return VecV([Fraction(1 if j == i - 1 else 0) for j in range(DIM)])


class Oct:
    """An octonion: scalar part (coefficient of e) plus imaginary 7-vector."""

    __slots__ = ("re", "im")

    def __init__(self, re, im: VecV):
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("Oct is immutable")

    @staticmethod
    def unit() -> "Oct":
        return Oct(Fraction(1), zero_vec())

    @staticmethod
    def imag(v: VecV) -> "Oct":
        return Oct(Fraction(0), v)

    def __add__(self, other: "Oct") -> "Oct":
        return Oct(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Oct") -> "Oct":
        return Oct(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Oct":
        return Oct(-self.re, -self.im)

    def scale(self, s) -> "Oct":
        return Oct(s * self.re, self.im.scale(s))

    def is_zero(self) -> bool:
        return _is_zero(self.re) and self.im.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Oct):
            return NotImplemented
        return _is_zero(self.re - other.re) and self.im == other.im

    def __repr__(self):
        return f"Oct({self.re}; {self.im})"


class TriForm:
    """Alternating trilinear form, stored on ordered triples p < q < r."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[Tuple[int, int, int], Fraction]):
        clean = {}
        for (p, q, r), c in coeffs.items():
            if not (1 <= p < q < r <= DIM):
                raise ValueError(f"triple {(p, q, r)} is not strictly increasing")
            c = Fraction(c)
            if c != 0:
                clean[(p, q, r)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TriForm is immutable")

    def support(self):
        return sorted(self.coeffs)

    def value(self, p: int, q: int, r: int) -> Fraction:
        """gamma(f_p, f_q, f_r) for arbitrary index order, with sign."""
        idx = (p, q, r)
        if len(set(idx)) < 3:
            return Fraction(0)
        order = tuple(sorted(idx))
        coef = self.coeffs.get(order, Fraction(0))
        if coef == 0:
            return coef
        # parity of the permutation sorting idx
        perm = sorted(range(3), key=lambda i: idx[i])
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3)
                         if perm[i] > perm[j])
        return -coef if inversions % 2 else coef

    def __call__(self, u: VecV, v: VecV, w: VecV):
        total = Fraction(0)
        for (p, q, r), c in self.coeffs.items():
            i, j, k = p - 1, q - 1, r - 1
            det = (u[i] * (v[j] * w[k] - v[k] * w[j])
                   - u[j] * (v[i] * w[k] - v[k] * w[i])
                   + u[k] * (v[i] * w[j] - v[j] * w[i]))
            total = total + c * det
        return total

    def functional(self, u: VecV, v: VecV) -> List:
        """The linear functional gamma(u, v, .) as a coefficient list."""
        phi = [Fraction(0)] * DIM
        for (p, q, r), c in self.coeffs.items():
            i, j, k = p - 1, q - 1, r - 1
            phi[k] = phi[k] + c * (u[i] * v[j] - u[j] * v[i])
            phi[j] = phi[j] - c * (u[i] * v[k] - u[k] * v[i])
            phi[i] = phi[i] + c * (u[j] * v[k] - u[k] * v[j])
        return phi

    def kernel_matrix(self, u: VecV) -> List[List]:
        """Matrix of v -> gamma(u, v, .): entry [j][k] = gamma(u, f_k, f_j)."""
        cols = [self.functional(u, basis_vec(k + 1)) for k in range(DIM)]
        return [[cols[k][j] for k in range(DIM)] for j in range(DIM)]


class BilForm:
    """Symmetric bilinear form as a 7x7 rational matrix."""

    __slots__ = ("matrix", "_inv")

    def __init__(self, matrix: Sequence[Sequence]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        if len(rows) != DIM or any(len(r) != DIM for r in rows):
            raise ValueError("BilForm needs a 7x7 matrix")
        for i in range(DIM):
            for j in range(DIM):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("BilForm matrix must be symmetric")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "_inv", None)

    def __setattr__(self, name, value):
        raise AttributeError("BilForm is immutable")

    def __call__(self, u: VecV, v: VecV):
        total = Fraction(0)
        for i in range(DIM):
            if _is_zero(u[i]):
                continue
            row = self.matrix[i]
            for j in range(DIM):
                if row[j] != 0:
                    total = total + row[j] * u[i] * v[j]
        return total

    def det(self) -> Fraction:
        return determinant([list(r) for r in self.matrix])

    def is_nondegenerate(self) -> bool:
        return self.det() != 0

    def inverse(self):
        inv = object.__getattribute__(self, "_inv")
        if inv is None:
            inv = matrix_inverse([list(r) for r in self.matrix])
            if inv is None:
                raise SingularForm("bilinear form is degenerate")
            object.__setattr__(self, "_inv", inv)
        return inv

    def dagger(self, phi: Sequence) -> VecV:
        """The vector v with beta(v, u) = phi(u) for all u."""
        inv = self.inverse()
        coords = []
        for i in range(DIM):
            acc = Fraction(0)
            for j in range(DIM):
                if inv[i][j] != 0:
                    acc = acc + inv[i][j] * phi[j]
            coords.append(acc)
        return VecV(coords)

    def dagger_inv(self, v: VecV) -> List:
        """The functional u -> beta(v, u), as a coefficient list."""
        return [sum((self.matrix[i][j] * v[i] for i in range(DIM)),
                    start=Fraction(0)) for j in range(DIM)]

    def support_pairs(self):
        return [(i + 1, j + 1) for i in range(DIM) for j in range(i, DIM)
                if self.matrix[i][j] != 0]


class AlgebraCtx:
    """A compatible (gamma, beta) pair with its octonion product."""

    __slots__ = ("gamma", "beta", "basis_kind")

    def __init__(self, gamma: TriForm, beta: BilForm, basis_kind: str):
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "basis_kind", basis_kind)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraCtx is immutable")

    def dagger(self, phi: Sequence) -> VecV:
        return self.beta.dagger(phi)

    def mul(self, u: Oct, v: Oct) -> Oct:
        """The octonion product on k + V."""
        uv_imag_beta = self.beta(u.im, v.im)
        re = u.re * v.re - Fraction(1, 2) * uv_imag_beta
        cross = self.dagger(self.gamma.functional(u.im, v.im))
        im = v.im.scale(u.re) + u.im.scale(v.re) + cross
        return Oct(re, im)

    def mul_imag(self, u: VecV, v: VecV) -> Oct:
        return self.mul(Oct.imag(u), Oct.imag(v))

    def norm(self, u: Oct):
        return u.re * u.re + Fraction(1, 2) * self.beta(u.im, u.im)

    def norm_imag(self, u: VecV):
        return Fraction(1, 2) * self.beta(u, u)

    def conjugate(self, u: Oct) -> Oct:
        return Oct(u.re, -u.im)

    def bprime(self, u: Oct, v: Oct):
        """The bilinear form of the norm on C = k + V."""
        return 2 * u.re * v.re + self.beta(u.im, v.im)


def standard_forms(basis_kind: str = "f") -> AlgebraCtx:
    """The standard compatible pair in the isotropic f-basis or the
    orthonormal e-basis."""
    if basis_kind == "f":
        # signs fixed by pushing the orthonormal-basis forms through the
        # isotropic basis change; this is the unique alternating form with
        # this support compatible with the beta below
        gamma = TriForm({
            (1, 4, 7): 1, (2, 4, 6): -1, (3, 4, 5): -1,
            (2, 3, 7): -1, (1, 5, 6): -1,
        })
        m = [[0] * DIM for _ in range(DIM)]
        for p in range(1, DIM + 1):
            m[p - 1][8 - p - 1] = -1
        m[3][3] = -2
        return AlgebraCtx(gamma, BilForm(m), "f")
    if basis_kind == "e":
        gamma = TriForm({
            (1, 2, 3): 2, (2, 5, 7): 2,
            (1, 6, 7): -2, (1, 4, 5): -2, (2, 4, 6): -2,
            (3, 4, 7): -2, (3, 5, 6): -2,
        })
        m = [[2 if i == j else 0 for j in range(DIM)] for i in range(DIM)]
        return AlgebraCtx(gamma, BilForm(m), "e")
    raise ValueError(f"unknown basis kind {basis_kind!r}")


# ---------------------------------------------------------------------------
# basis change e <-> f

_I = GaussRat(0, 1)
_H = GaussRat(Fraction(1, 2))

# e-basis coordinates of f_1..f_7 (columns of the change of basis)
_F_IN_E: Tuple[Tuple[GaussRat, ...], ...] = (
    (_H, _H * _I, GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0)),
    (GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0), _H, _H * _I, GaussRat(0)),
    (GaussRat(0), GaussRat(0), GaussRat(0), _H, GaussRat(0), GaussRat(0), _H * _I),
    (GaussRat(0), GaussRat(0), _I, GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0)),
    (GaussRat(0), GaussRat(0), GaussRat(0), -_H, GaussRat(0), GaussRat(0), _H * _I),
    (GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0), -_H, _H * _I, GaussRat(0)),
    (-_H, _H * _I, GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0)),
)

# f-basis coordinates of e_1..e_7, from inverting the relations above
_MI = GaussRat(0, -1)
_E_IN_F: Tuple[Tuple[GaussRat, ...], ...] = (
    (GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(-1)),
    (_MI, GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0), _MI),
    (GaussRat(0), GaussRat(0), GaussRat(0), _MI, GaussRat(0), GaussRat(0), GaussRat(0)),
    (GaussRat(0), GaussRat(0), GaussRat(1), GaussRat(0), GaussRat(-1), GaussRat(0), GaussRat(0)),
    (GaussRat(0), GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(-1), GaussRat(0)),
    (GaussRat(0), _MI, GaussRat(0), GaussRat(0), GaussRat(0), _MI, GaussRat(0)),
    (GaussRat(0), GaussRat(0), _MI, GaussRat(0), _MI, GaussRat(0), GaussRat(0)),
)


def to_e_basis(v: VecV) -> VecV:
    """Coordinates in the e-basis of a vector given in the f-basis."""
    coords = [GaussRat(0)] * DIM
    for j in range(DIM):
        cj = v[j]
        if _is_zero(cj):
            continue
        for i in range(DIM):
            coords[i] = coords[i] + cj * _F_IN_E[j][i]
    return VecV(coords)


def to_f_basis(v: VecV) -> VecV:
    """Coordinates in the f-basis of a vector given in the e-basis."""
    coords = [GaussRat(0)] * DIM
    for j in range(DIM):
        cj = v[j]
        if _is_zero(cj):
            continue
        for i in range(DIM):
            coords[i] = coords[i] + cj * _E_IN_F[j][i]
    return VecV(coords)


def push_forms_to_f() -> Tuple[TriForm, BilForm]:
    """Push the standard e-basis forms through the basis change.

    Every value must come out rational; the results are compared against the
    standard f-basis forms in the consistency checks.
    """
    e_ctx = standard_forms("e")
    fs = [VecV([GaussRat(1) if k == j else GaussRat(0) for k in range(DIM)])
          for j in range(DIM)]
    fs_in_e = [to_e_basis(f) for f in fs]
    tri: Dict[Tuple[int, int, int], Fraction] = {}
    for p in range(1, DIM + 1):
        for q in range(p + 1, DIM + 1):
            for r in range(q + 1, DIM + 1):
                val = e_ctx.gamma(fs_in_e[p - 1], fs_in_e[q - 1], fs_in_e[r - 1])
                if not val.is_rational():
                    raise ValueError(f"gamma(f{p},f{q},f{r}) = {val} is not rational")
                if val.re != 0:
                    tri[(p, q, r)] = val.re
    mat = [[Fraction(0)] * DIM for _ in range(DIM)]
    for p in range(DIM):
        for q in range(DIM):
            val = e_ctx.beta(fs_in_e[p], fs_in_e[q])
            if not val.is_rational():
                raise ValueError(f"beta(f{p+1},f{q+1}) = {val} is not rational")
            mat[p][q] = val.re
    return TriForm(tri), BilForm(mat)


# ---------------------------------------------------------------------------
# compatibility and the Bryant form

def spanning_sample() -> List[Tuple[VecV, VecV]]:
    """Pairs spanning all biquadratic forms: (u, v) with u, v ranging over
    basis vectors and two-element sums of basis vectors."""
    vecs = [basis_vec(i) for i in range(1, DIM + 1)]
    sums = [basis_vec(i) + basis_vec(j)
            for i in range(1, DIM + 1) for j in range(i + 1, DIM + 1)]
    pool = vecs + sums
    return [(u, v) for u in pool for v in pool]


class CompatReport:
    def __init__(self, ok: bool, pair=None, lhs=None, rhs=None, checked: int = 0):
        self.ok = ok
        self.counterexample = pair
        self.lhs = lhs
        self.rhs = rhs
        self.checked = checked

    def __bool__(self):
        return self.ok


def check_compatible(gamma: TriForm, beta: BilForm,
                     sample: Optional[Iterable[Tuple[VecV, VecV]]] = None) -> CompatReport:
    """Evaluate the compatibility identity on a spanning sample of pairs.

    Both sides are biquadratic in (u, v), so passing on the sample returned
    by spanning_sample() certifies the identity on all of V x V.
    """
    if not beta.is_nondegenerate():
        raise SingularForm("compatibility requires a nondegenerate beta")
    if sample is None:
        sample = spanning_sample()
    count = 0
    for u, v in sample:
        phi = gamma.functional(u, v)
        lhs = 2 * gamma(u, v, beta.dagger(phi))
        rhs = beta(u, u) * beta(v, v) - beta(u, v) ** 2
        count += 1
        if lhs != rhs:
            return CompatReport(False, (u, v), lhs, rhs, count)
    return CompatReport(True, checked=count)


def _contract(gamma: TriForm, p: int) -> Dict[Tuple[int, int], Fraction]:
    """The 2-form gamma(f_p, ., .)."""
    out: Dict[Tuple[int, int], Fraction] = {}
    for (a, b, c), coef in gamma.coeffs.items():
        if p == a:
            key, sign = (b, c), 1
        elif p == b:
            key, sign = (a, c), -1
        elif p == c:
            key, sign = (a, b), 1
        else:
            continue
        out[key] = out.get(key, Fraction(0)) + sign * coef
    return {k: v for k, v in out.items() if v != 0}


def _merge_sign(left: Tuple[int, ...], right: Tuple[int, ...]) -> int:
    inversions = sum(1 for i in left for j in right if i > j)
    return -1 if inversions % 2 else 1


def _wedge(f1: Dict[Tuple[int, ...], Fraction],
           f2: Dict[Tuple[int, ...], Fraction]) -> Dict[Tuple[int, ...], Fraction]:
    out: Dict[Tuple[int, ...], Fraction] = {}
    for idx1, c1 in f1.items():
        set1 = set(idx1)
        for idx2, c2 in f2.items():
            if set1 & set(idx2):
                continue
            sign = _merge_sign(idx1, idx2)
            key = tuple(sorted(idx1 + idx2))
            val = out.get(key, Fraction(0)) + sign * c1 * c2
            if val == 0:
                out.pop(key, None)
            else:
                out[key] = val
    return out


class BryantResult:
    """The bilinear form recovered from a trilinear form.

    seven_coeffs[p][q] is the coefficient of the top form f*_{1..7} in
    gamma(f_p,.,.) ^ gamma(f_q,.,.) ^ gamma; the bilinear form divides this
    by -3 (exactly; a failed division signals corrupted input).
    """

    def __init__(self, bil: BilForm, seven_coeffs, nondegenerate: bool):
        self.bil = bil
        self.seven_coeffs = seven_coeffs
        self.nondegenerate = nondegenerate


def bryant_form(gamma: TriForm) -> BryantResult:
    """Recover the compatible bilinear form, fixing wedge^7 V* = k via the
    ordered basis functional f*_{1..7}."""
    top = tuple(range(1, DIM + 1))
    omegas = [_contract(gamma, p) for p in range(1, DIM + 1)]
    gamma_dict = dict(gamma.coeffs)
    seven = [[Fraction(0)] * DIM for _ in range(DIM)]
    mat = [[Fraction(0)] * DIM for _ in range(DIM)]
    for p in range(DIM):
        for q in range(p, DIM):
            w = _wedge(_wedge(omegas[p], omegas[q]), gamma_dict)
            coef = w.get(top, Fraction(0))
            seven[p][q] = seven[q][p] = coef
            val = -coef / 3
            mat[p][q] = mat[q][p] = val
    bil = BilForm(mat)
    return BryantResult(bil, seven, bil.is_nondegenerate())


# ---------------------------------------------------------------------------
# isotropic kernels, fixed points, cells

def isotropic_kernel(ctx: AlgebraCtx, u: VecV) -> List[VecV]:
    """Basis of E_u = {v : gamma(u, v, .) = 0} for an isotropic u != 0.

    For isotropic u this space is 3-dimensional and consists of the octonion
    annihilators of u; both facts are re-checked on the result.
    """
    if u.is_zero():
        raise ValueError("kernel requested at the zero vector")
    n = ctx.norm_imag(u)
    if not _is_zero(n):
        raise NotIsotropic(f"N(u) = {n} is nonzero")
    kernel = nullspace(ctx.gamma.kernel_matrix(u))
    if len(kernel) != 3:
        raise ArithmeticError(f"kernel has rank {len(kernel)}, expected 3")
    basis = [VecV(vec) for vec in kernel]
    for w in basis:
        if not ctx.mul_imag(u, w).is_zero():
            raise ArithmeticError("kernel vector does not annihilate u")
    return basis


def fixed_point_triples(ctx: Optional[AlgebraCtx] = None) -> Dict[int, Tuple[int, int, int]]:
    """For each isotropic basis vector f_i, the triple (i, a, b) with
    E_{f_i} spanned by f_i, f_a, f_b (a < b)."""
    if ctx is None:
        ctx = standard_forms("f")
    triples: Dict[int, Tuple[int, int, int]] = {}
    for i in (1, 2, 3, 5, 6, 7):
        kernel = isotropic_kernel(ctx, basis_vec(i))
        members = set()
        for vec in kernel:
            support = [j + 1 for j in range(DIM) if not _is_zero(vec[j])]
            if len(support) != 1:
                raise ArithmeticError(f"E_f{i} is not a coordinate subspace")
            members.add(support[0])
        if i not in members or len(members) != 3:
            raise ArithmeticError(f"E_f{i} = {sorted(members)} does not contain f{i}")
        rest = sorted(members - {i})
        triples[i] = (i, rest[0], rest[1])
    return triples


def fixed_points(ctx: Optional[AlgebraCtx] = None) -> List[Tuple[int, int]]:
    """The 12 torus-fixed flags e(i j), ordered by i then by the triple."""
    triples = fixed_point_triples(ctx)
    points = []
    for i in sorted(triples):
        _, second, third = triples[i]
        points.append((i, second))
        points.append((i, third))
    return points


def cross_lambda(ctx: AlgebraCtx, u: VecV, v: VecV, w: VecV):
    """The scalar lambda with v w = lambda u, for v, w in E_u."""
    prod = ctx.mul_imag(v, w)
    if not _is_zero(prod.re):
        raise NotProportional("v w has a nonzero scalar part")
    pivot = None
    for j in range(DIM):
        if not _is_zero(u[j]):
            pivot = j
            break
    if pivot is None:
        raise ValueError("u must be nonzero")
    try:
        lam = _div(prod.im[pivot], u[pivot])
    except NotDivisible as exc:
        raise NotProportional(str(exc)) from exc
    if prod.im != u.scale(lam):
        raise NotProportional("v w is not a multiple of u")
    return lam


def torus_weights() -> Tuple[MPoly, ...]:
    """Weights of the standard torus action in the f-basis."""
    t1 = MPoly.var("t1")
    t2 = MPoly.var("t2")
    return (t1, t2, t1 - t2, MPoly.zero(), t2 - t1, -t2, -t1)


class TorusReport:
    def __init__(self, ok: bool, offending=None):
        self.ok = ok
        self.offending = offending

    def __bool__(self):
        return self.ok


def torus_invariance_check(ctx: AlgebraCtx) -> TorusReport:
    """Verify the torus preserves both forms: every support triple of gamma
    and support pair of beta has weight sum zero."""
    if ctx.basis_kind != "f":
        raise ValueError("torus weights are defined in the f-basis")
    weights = torus_weights()
    for (p, q, r) in ctx.gamma.support():
        total = weights[p - 1] + weights[q - 1] + weights[r - 1]
        if not total.is_zero():
            return TorusReport(False, ("gamma", (p, q, r), total))
    for (p, q) in ctx.beta.support_pairs():
        total = weights[p - 1] + weights[q - 1]
        if not total.is_zero():
            return TorusReport(False, ("beta", (p, q), total))
    return TorusReport(True)


def big_cell_rows(params: Optional[Sequence] = None) -> Tuple[VecV, VecV]:
    """Rows of the big Schubert cell through e(7 6).

    The six free parameters default to the symbolic cell variables
    a, b, c, d, e, g; the dependent entries are forced by requiring both rows
    isotropic with vanishing octonion product.
    """
    if params is None:
        params = [MPoly.var(n) for n in ("a", "b", "c", "d", "e", "g")]
    if len(params) != 6:
        raise ValueError("big cell takes 6 parameters")
    a, b, c, d, e, f = [p if isinstance(p, MPoly) else Fraction(p) for p in params]
    symbolic = any(isinstance(p, MPoly) for p in params)
    one = MPoly.one() if symbolic else Fraction(1)
    zero = MPoly.zero() if symbolic else Fraction(0)
    x = -(a * e) - b * d - c * c
    y = -a - b * f + c * d - c * e * f
    z = -(c * f) - d * d + d * e * f
    s = c + d * e - e * e * f
    t = -d + e * f
    row1 = VecV((x, a, b, c, d, e, one))
    row2 = VecV((y, z, s, t, f, one, zero))
    return row1, row2


def multiplication_table(ctx: AlgebraCtx) -> List[List[Oct]]:
    """The full 8x8 product table on the basis (e, f_1..f_7)."""
    basis = [Oct.unit()] + [Oct.imag(basis_vec(i)) for i in range(1, DIM + 1)]
    return [[ctx.mul(u, v) for v in basis] for u in basis]


def left_mult_matrix(ctx: AlgebraCtx, u: Oct) -> List[List]:
    """Matrix of left multiplication by u on C = k + V, in the basis
    (e, f_1..f_7); used for exact rank computations."""
    cols = []
    images = [ctx.mul(u, Oct.unit())]
    for j in range(1, DIM + 1):
        images.append(ctx.mul(u, Oct.imag(basis_vec(j))))
    for img in images:
        cols.append([img.re] + list(img.im.coords))
    return [[cols[k][j] for k in range(8)] for j in range(8)]
