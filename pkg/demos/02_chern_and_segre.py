"""
Chern and Segre series
======================

The normal bundle of a submanifold of projective space comes out of the Euler
sequence; its Segre series is the inverse of its Chern series.
"""

from seshadri_positivity import (
    integrate,
    multiprojective,
    normal_from_euler,
    segre_from_chern,
    tangent_series,
    whitney,
)
from seshadri_positivity.chern import euler_series

# Veronese surface: P^2 embedded by O(2) in P^5
plane = multiprojective((2,))
h = plane.line_bundle((2,))
normal = normal_from_euler(5, h, tangent_series(plane))
print("normal bundle of the Veronese surface:", normal)
print("int c2(N) =", integrate(normal[2]))

segre = segre_from_chern(normal)
print("Segre series:", segre)
print("int s2(N) =", integrate(segre[2]))

# the Whitney sum with the tangent bundle gives back (1 + h)^6
print("c(T_Y) c(N) == (1 + h)^6:", whitney(tangent_series(plane), normal) == euler_series(5, h))

# Segre fourfold P^2 x P^2 in P^8
ring = multiprojective((2, 2))
normal = normal_from_euler(8, ring.line_bundle((1, 1)), tangent_series(ring))
for i in range(1, 5):
    print(f"c{i}(N) =", normal[i])
