"""
Small Chow rings
================

Products of projective spaces, Hirzebruch surfaces and hand-written tables.
"""

from seshadri_positivity import hirzebruch, integrate, multiprojective, table

# P^2 x P^1: h1 and h2 pull back the hyperplane classes of the factors
ring = multiprojective((2, 1))
a = ring.line_bundle((3, 4))
b = ring.line_bundle((1, 1))
print("O(3,4) . O(1,1)   =", a * b)
print("int O(3,4) O(1,1)^2 =", integrate(a * b ** 2))
print("degree of P^2 x P^1 in P^5 =", integrate(b ** 3))

# the Hirzebruch surface F_3 and its minimal section
f3 = hirzebruch(3)
c0 = f3.basis_class("C0")
print("C0^2 on F_3 =", c0 * c0)
h = f3.from_terms({"C0": 1, "F": 4})
print("degree of the scroll embedding of F_3 =", integrate(h ** 2))

# a table ring: a surface whose hyperplane class has self-intersection 12
surface = table(2, [("1", 0), ("H", 1), ("pt", 2)], {("H", "H"): {"pt": 12}}, "pt")
H = surface.basis_class("H")
print("int (2H)^2 =", integrate((H * 2) ** 2))
