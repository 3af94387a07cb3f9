"""
Checking the catalogue
======================

Every catalogue entry carries independently derived values.  Corrupting one
structure constant of a Chow ring must make some of them fail.
"""

from fractions import Fraction

from seshadri_positivity.verification import Mutation, verify_all

report = verify_all(only=["veronese", "scroll"])
print(report.table())
print("all good:", report.ok)

broken = verify_all(only=["veronese"], mutation=Mutation("veronese", "h1^1", "h1^1", "h1^2", Fraction(2)))
print(f"after corrupting h1*h1: {len(broken.failures)} failures")
for r in broken.failures[:3]:
    print(f"  {r.label}: expected {r.expected}, got {r.actual}")
