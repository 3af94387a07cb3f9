"""
The bigness polynomial
======================

delta_eta is assembled from Segre integrals.  The closed forms for curves,
surfaces and low codimension must give the same polynomial.
"""

from fractions import Fraction

from seshadri_positivity import catalog, delta_at, delta_poly
from seshadri_positivity.delta import delta_surface_poly, delta_terms

v = catalog.build("veronese")
p = delta_poly(v)
print(v.name)
print("  delta_eta =", p.poly.pretty())
print("  delta at 1/2 =", delta_at(v, Fraction(1, 2)))
print("  surface closed form agrees:", delta_surface_poly(v).poly == p.poly)

print("  t  C(k-2,t)  int s(N) A^(k-t-2)")
for row in delta_terms(v):
    print(f"  {row['t']}  {row['binomial']:>8}  {row['segre_integral']}")

for name in ("segre_p2p1", "segre_p3p1", "segre_p2p2", "elliptic_scroll"):
    v = catalog.build(name)
    print(f"{v.name}: {delta_poly(v).poly.pretty()}")
