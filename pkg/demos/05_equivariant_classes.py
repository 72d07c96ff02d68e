#!/usr/bin/env python3
"""Equivariant classes: the Giambelli substitution y -> t, integrality, and
the 1/27 phenomenon.

The equivariant class of a Schubert variety is the same polynomial with the
flag roots replaced by torus weights.  These classes reduce integrally in
the equivariant presentation and form a basis over Z[t1, t2]; a natural
half-integral combination of them is integral only after scaling by 27.
"""

from fractions import Fraction

from g2schubert import cohomring as c
from g2schubert import schubert as s
from g2schubert import weyl
from g2schubert.exactalg import MPoly

fam = s.generate_family("eq-paper")
print("equivariant classes (x and t mixed):")
for w, p in fam.entries()[:6]:
    print(f"  {w.name:6s} {p}")

eq = c.fl_equivariant()
print("\nx2^2 rewrites to:", [str(r.rhs) for r in eq.rules][0])

# Integral reduction: no denominators survive, even though the generating
# top class has a 1/2.
nf = eq.normal_form(fam["sts"])
print("\nnormal form of the length-3 class:")
for key, coef in sorted(nf.coeffs.items()):
    mono = " ".join(f"{v}^{e}" if e > 1 else v
                    for v, e in zip(eq.main_vars, key) if e) or "1"
    print(f"  {mono:12s} {coef}")

# x1 itself is an integral combination: x1 = P_s + t1 P_id.
expansion = c.schubert_expand(c.X1, fam, eq)
print("\nx1 =", " + ".join(f"({coef}) P_{w.name}"
                           for w, coef in expansion.items()
                           if not coef.is_zero()))

# Localization fingerprint: restricting the class of w at the fixed point
# of v (substitute the torus weights of the tautological lines) vanishes
# unless w <= v in Bruhat order, and the diagonal entry for the longest
# element is the product of all six positive roots.
from g2schubert.exactalg import parse_poly

w0 = weyl.longest()
print("\nrestriction of the top class at its own fixed point:")
print("  ", s.equivariant_restriction(fam[w0.word], w0))
product = parse_poly("(t1 - t2)(-t1 + 2t2)(t2)(t1)(2t1 - t2)(t1 + t2)")
print("product of the positive roots:")
print("  ", product)
print("upper-triangular support:",
      all(s.equivariant_restriction(fam[w.word], v).is_zero()
          for w in weyl.all_elements() for v in weyl.all_elements()
          if not weyl.bruhat_leq(w, v)))

# Graham's combination: half the sum of the xi and eta cube products is
# -1/27 (3 P_tst + 3(t1+t2) P_st + (t1+t2)(2t1-t2) P_t) exactly, so the
# class is integral only after multiplying by 27.
rep = s.graham_integrality_identity()
print("\ncube-sum identity holds:", rep.ok)
print("27 x class has integral coefficients:", rep.combo27_integral)
print("the class itself integral:", rep.combo_integral)
for name, coef in rep.combo27.items():
    print(f"  27-scaled coefficient on {name}: {coef}")
