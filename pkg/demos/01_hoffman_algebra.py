"""Walk through the basic objects: words over {x,y}, exact rational
noncommutative polynomials, and the admissible subalgebra.

Run: python3 demos/01_hoffman_algebra.py
"""

from fractions import Fraction

from mzvkit import NcPoly, admissible_words, is_admissible

# Words are strings over 'x' and 'y'; polynomials map words to exact
# rational coefficients.
p = NcPoly.word("xy") + NcPoly.word("xxy", Fraction(-3, 2))
print("p              =", p.render())

# The product is concatenation of words, extended bilinearly; order matters.
print("xy * x         =", (NcPoly.word("xy") * NcPoly.word("x")).render())
print("x * xy         =", (NcPoly.word("x") * NcPoly.word("xy")).render())

s = NcPoly.word("x") + NcPoly.word("y")
print("(x+y)^2        =", (s * s).render())

# Weight grading: restriction to words of one length.
q = NcPoly.word("xy") + NcPoly.word("xxy") + NcPoly.word("yyyy")
for k in (2, 3, 4):
    print(f"weight {k} part  =", q.weight_component(k).render())

# Admissible words (empty, or x...y) index convergent multiple zeta values.
print("admissible('xxy') =", is_admissible("xxy"))
print("admissible('yx')  =", is_admissible("yx"))
print("admissible words of weight 4:", list(admissible_words(4)))

# Canonical JSON round-trips exactly.
print("JSON:", p.to_dict())
assert NcPoly.from_dict(p.to_dict()) == p
