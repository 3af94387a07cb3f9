"""
Scaling the polarization, finite covers
=======================================

Replacing A by A^s rescales eta by s and delta by s^(k-2); pulling back along a
finite cover multiplies delta by the covering degree.  Neither changes the
verdict.
"""

from seshadri_positivity import catalog, decide_bigness, delta_poly, finite_cover_delta, scale_delta

v = catalog.build("veronese")
base = decide_bigness(delta_poly(v), v.seshadri)
print("A      :", delta_poly(v).poly.pretty(), "| witness", base.witness)
for s in (2, 3):
    w = scale_delta(v, s)  # raises if the scaling identity fails
    verdict = decide_bigness(delta_poly(w), w.seshadri)
    print(f"A^{s}    :", delta_poly(w).poly.pretty(), "| witness", verdict.witness)

for n in (2, 3):
    p = finite_cover_delta(v, n)
    print(f"cover {n}:", p.poly.pretty(), "|", decide_bigness(p, v.seshadri).name)
