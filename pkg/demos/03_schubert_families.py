#!/usr/bin/env python3
"""Divided difference operators and the three Schubert polynomial families.

ds swaps x1, x2; dt sends x2 to x1 - x2; each divides an exact difference by
the corresponding linear root.  Applying them along reduced words of
w0 w^{-1} turns a single top-degree class into a full 12-entry table.
"""

from fractions import Fraction

from g2schubert import schubert as s
from g2schubert.exactalg import MPoly

x1, x2 = s.X1, s.X2

print("ds(x1^2)      =", s.div_diff("s", x1 ** 2))
print("dt(x1^2)      =", s.div_diff("t", x1 ** 2))
print("ds(1/2 x1^5 x2) =", s.div_diff("s", Fraction(1, 2) * x1 ** 5 * x2))

# The operators square to zero and satisfy the braid relation; the composite
# along any reduced word depends only on the group element.
g = x1 ** 3 * x2 ** 2 + 2 * x1 * x2
lhs = rhs = g
for ch in "ststst":
    lhs = s.div_diff(ch, lhs)
for ch in "tststs":
    rhs = s.div_diff(ch, rhs)
print("braid relation on a sample polynomial:", lhs == rhs)

# Three normalizations of the same Schubert classes:
#   point   - the class of a point, 1/2 x1^5 x2, giving x-only polynomials
#   paper   - the degeneracy-locus formula with flag Chern roots y1, y2
#   graham  - an alternative product form of the same classes
for kind in ("point", "paper", "graham"):
    fam = s.generate_family(kind)
    print(f"\n{kind} family:")
    for w, poly in fam.entries():
        print(f"  {w.name:8s} {poly}")

# Twisting by a line-bundle class v is the substitution x -> x + v,
# y -> y - v; applied to the top class it reproduces the closed twisted form.
print("\ntwist matches the closed twisted top class:",
      s.twist_substitution(s.top_class("paper")) == s.top_class("twisted"))

# The twisted family uses the v-deformed dt operator and is exactly the
# twist of the untwisted family.
tw = s.generate_family("twisted")
plain = s.generate_family("paper")
print("twisted family = twist of the plain family:",
      all(tw.table[w] == s.twist_substitution(plain.table[w])
          for w in tw.table))
