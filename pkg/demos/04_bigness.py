"""
Deciding bigness
================

Rational normal scrolls F_e in P^(e+3) are cut out by quadrics, so the
Seshadri constant is exactly 1/2 and the decision is always conclusive.
"""

from fractions import Fraction

from seshadri_positivity import catalog, decide_bigness, delta_at, delta_poly

print(" e  delta(1/2)        verdict")
for e in range(9):
    v = catalog.build("scroll", {"e": e})
    verdict = decide_bigness(delta_poly(v), v.seshadri)
    extra = f"  witness {verdict.witness}" if verdict.name == "big" else ""
    print(f" {e}  {str(delta_at(v, Fraction(1, 2))):<16}  {verdict.name}{extra}")

# with only a lower bound on the Seshadri constant a negative answer stays open
v = catalog.build("elliptic_scroll")
print(v.name, "->", decide_bigness(delta_poly(v), v.seshadri).name)

for degrees in ((3, 2, 2), (9, 2, 2)):
    v = catalog.build("ci_surface_p5", dict(zip(("d1", "d2", "d3"), degrees)))
    print(v.name, "->", decide_bigness(delta_poly(v), v.seshadri).name)
