"""Sparse multivariate polynomials over exact rationals.

A polynomial is a mapping from exponent vectors to nonzero Fraction
coefficients.  The variable universe is closed and fixed:

    x1 x2 y1 y2 t1 t2 v alpha h f c1F c2F c3F c1Q c2Q c3Q a b c d e g

(x1, x2 are the moving Chern roots; y1, y2 the fixed flag roots; t1, t2 the
torus weights; v a twisting line class; alpha, h, f ring generators of the
quotient presentations; c*F and c*Q symbolic Chern classes of a rank-3
subbundle and its rank-4 quotient; a..e, g free Schubert cell parameters.)

Exponent vectors are tuples of length 22, one slot per variable, in the
precedence order above.  The canonical term order is graded lexicographic:
higher total degree first, ties broken lexicographically with x1 largest.
The zero polynomial has no stored terms.

All values are immutable after construction; the arithmetic methods return
new objects, so instances can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple

VARIABLES: Tuple[str, ...] = (
    "x1", "x2", "y1", "y2", "t1", "t2", "v", "alpha", "h", "f",
    "c1F", "c2F", "c3F", "c1Q", "c2Q", "c3Q",
    "a", "b", "c", "d", "e", "g",
)

NVARS = len(VARIABLES)
VAR_INDEX: Dict[str, int] = {name: i for i, name in enumerate(VARIABLES)}

ExpKey = Tuple[int, ...]
_ZERO_EXP: ExpKey = (0,) * NVARS


class UnboundVariable(KeyError):
    """A substitution did not assign every variable of the polynomial."""


class NotDivisible(ArithmeticError):
    """exact_divide found no exact quotient."""


def _order_key(exp: ExpKey):
    # graded-lex: total degree, then lexicographic with x1 most significant
    return (sum(exp), exp)


class MPoly:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[ExpKey, Fraction] | None = None):
        t = {}
        if terms:
            for exp, coef in terms.items():
                if coef != 0:
                    t[exp] = coef if isinstance(coef, Fraction) else Fraction(coef)
        object.__setattr__(self, "_t", t)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # ---- constructors ----

    @staticmethod
    def zero() -> "MPoly":
        return _ZERO

    @staticmethod
    def one() -> "MPoly":
        return _ONE

    @staticmethod
    def const(value) -> "MPoly":
        c = Fraction(value)
        if c == 0:
            return _ZERO
        return MPoly({_ZERO_EXP: c})

    @staticmethod
    def var(name: str) -> "MPoly":
        if name not in VAR_INDEX:
            raise UnboundVariable(f"unknown variable {name!r}")
        return _VAR_CACHE[name]

    @staticmethod
    def monomial(exps: Mapping[str, int], coef=1) -> "MPoly":
        """Build coef * prod(var^e) from a {name: exponent} mapping."""
        key = [0] * NVARS
        for name, e in exps.items():
            if name not in VAR_INDEX:
                raise UnboundVariable(f"unknown variable {name!r}")
            if e < 0:
                raise ValueError("negative exponent")
            key[VAR_INDEX[name]] += e
        return MPoly({tuple(key): Fraction(coef)})

    @staticmethod
    def _lift(other) -> "MPoly | None":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other)
        return None

    # ---- queries ----

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._t:
            return -1
        return max(sum(exp) for exp in self._t)

    def is_homogeneous(self) -> bool:
        degs = {sum(exp) for exp in self._t}
        return len(degs) <= 1

    def homogeneous_part(self, d: int) -> "MPoly":
        return MPoly({exp: c for exp, c in self._t.items() if sum(exp) == d})

    def variables(self) -> Tuple[str, ...]:
        """Names of the variables that actually occur, in precedence order."""
        seen = [False] * NVARS
        for exp in self._t:
            for i, e in enumerate(exp):
                if e:
                    seen[i] = True
        return tuple(VARIABLES[i] for i in range(NVARS) if seen[i])

    def terms(self) -> Iterator[Tuple[ExpKey, Fraction]]:
        """Iterate (exponent, coefficient) in canonical graded-lex order."""
        for exp in sorted(self._t, key=_order_key, reverse=True):
            yield exp, self._t[exp]

    def items(self):
        """Raw (exponent, coefficient) pairs in arbitrary order."""
        return self._t.items()

    def coeff_exp(self, exp: ExpKey) -> Fraction:
        return self._t.get(exp, Fraction(0))

    def leading_term(self) -> Tuple[ExpKey, Fraction]:
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self._t, key=_order_key)
        return exp, self._t[exp]

    def coeff(self, exps: Mapping[str, int]) -> Fraction:
        key = [0] * NVARS
        for name, e in exps.items():
            key[VAR_INDEX[name]] = e
        return self._t.get(tuple(key), Fraction(0))

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial, as a Fraction."""
        if not self._t:
            return Fraction(0)
        if len(self._t) == 1 and _ZERO_EXP in self._t:
            return self._t[_ZERO_EXP]
        raise ValueError(f"not a constant polynomial: {self}")

    def exponent_of(self, exp: ExpKey, name: str) -> int:
        return exp[VAR_INDEX[name]]

    # ---- arithmetic ----

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        t = dict(self._t)
        for exp, c in o._t.items():
            s = t.get(exp, 0) + c
            if s == 0:
                t.pop(exp, None)
            else:
                t[exp] = s
        return MPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({exp: -c for exp, c in self._t.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if len(self._t) > len(o._t):
            big, small = self._t, o._t
        else:
            big, small = o._t, self._t
        t: Dict[ExpKey, Fraction] = {}
        for e2, c2 in small.items():
            if not any(e2):
                for e1, c1 in big.items():
                    s = t.get(e1, 0) + c1 * c2
                    if s == 0:
                        t.pop(e1, None)
                    else:
                        t[e1] = s
                continue
            for e1, c1 in big.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = t.get(key, 0) + c1 * c2
                if s == 0:
                    t.pop(key, None)
                else:
                    t[key] = s
        return MPoly(t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    # ---- substitution ----

    def subs(self, assignment: Mapping[str, "MPoly | Fraction | int"],
             strict: bool = False) -> "MPoly":
        """Substitute polynomials for variables.

        Variables not mentioned in `assignment` are left alone, unless
        strict=True, in which case every occurring variable must be assigned
        (UnboundVariable otherwise).
        """
        images: Dict[int, MPoly] = {}
        for name, val in assignment.items():
            if name not in VAR_INDEX:
                raise UnboundVariable(f"unknown variable {name!r}")
            img = self._lift(val)
            if img is None:
                raise TypeError(f"cannot use {val!r} as a substitution value")
            images[VAR_INDEX[name]] = img
        if strict:
            for name in self.variables():
                if VAR_INDEX[name] not in images:
                    raise UnboundVariable(f"variable {name!r} not assigned")
        power_cache: Dict[Tuple[int, int], MPoly] = {}

        def power(i: int, e: int) -> MPoly:
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = images[i] ** e
            return power_cache[key]

        out = _ZERO
        for exp, coef in self._t.items():
            term = MPoly.const(coef)
            untouched = [0] * NVARS
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                if i in images:
                    term = term * power(i, e)
                else:
                    untouched[i] = e
            if any(untouched):
                term = term * MPoly({tuple(untouched): Fraction(1)})
            out = out + term
        return out

    # ---- printing ----

    @staticmethod
    def _monomial_str(exp: ExpKey) -> str:
        parts = []
        for i, e in enumerate(exp):
            if e == 1:
                parts.append(VARIABLES[i])
            elif e > 1:
                parts.append(f"{VARIABLES[i]}^{e}")
        return " ".join(parts)

    def __str__(self) -> str:
        if not self._t:
            return "0"
        chunks = []
        for exp, coef in self.terms():
            mono = self._monomial_str(exp)
            mag = abs(coef)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag} {mono}"
            else:
                body = str(mag)
            if not chunks:
                chunks.append(("-" + body) if coef < 0 else body)
            else:
                chunks.append((" - " if coef < 0 else " + ") + body)
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"MPoly({self})"


_ZERO = MPoly()
_ONE = MPoly({_ZERO_EXP: Fraction(1)})
_VAR_CACHE = {
    name: MPoly({tuple(1 if j == i else 0 for j in range(NVARS)): Fraction(1)})
    for i, name in enumerate(VARIABLES)
}


def mpoly_arith(f: MPoly, g: MPoly, op: str) -> MPoly:
    """Dispatch add/sub/mul by name (the CLI-facing entry point)."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def exact_divide(f: MPoly, g: MPoly) -> MPoly:
    """Return q with f = q*g, or raise NotDivisible.

    Uses leading-term division in the graded-lex order; for an exact multiple
    the leading term of f is always divisible by the leading term of g, so
    the loop peels off one quotient term per step.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return MPoly.zero()
    g_exp, g_coef = g.leading_term()
    quotient: Dict[ExpKey, Fraction] = {}
    rem = f
    while not rem.is_zero():
        r_exp, r_coef = rem.leading_term()
        q_exp = tuple(a - b for a, b in zip(r_exp, g_exp))
        if any(e < 0 for e in q_exp):
            raise NotDivisible(f"({f}) is not divisible by ({g})")
        q_coef = r_coef / g_coef
        quotient[q_exp] = quotient.get(q_exp, Fraction(0)) + q_coef
        rem = rem - MPoly({q_exp: q_coef}) * g
    return MPoly(quotient)


def substitute(f: MPoly, assignment: Mapping[str, MPoly]) -> MPoly:
    """Total substitution: every variable of f must be assigned."""
    return f.subs(assignment, strict=True)


def elementary_symmetric(i: int, values: Iterable[MPoly]) -> MPoly:
    """e_i of a finite list of polynomials, computed by direct expansion."""
    vals = list(values)
    if i == 0:
        return MPoly.one()
    if i > len(vals):
        return MPoly.zero()
    # running coefficients of prod (1 + z*val) up to degree i
    coeffs = [MPoly.one()] + [MPoly.zero()] * i
    for val in vals:
        for k in range(min(i, len(vals)), 0, -1):
            coeffs[k] = coeffs[k] + coeffs[k - 1] * val
    return coeffs[i]
