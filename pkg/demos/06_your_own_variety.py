"""
Describing a new variety
========================

Anything with a small Chow ring and known normal Chern classes can be fed in,
either in Python or as a JSON description for the command line.
"""

import json
import subprocess
import sys
import tempfile

from seshadri_positivity import LowerBound, VarietyData, decide_bigness, delta_poly, multiprojective
from seshadri_positivity.chern import line_bundle_series, whitney
from seshadri_positivity.serialize import dumps, variety_to_spec

# zero locus of a section of O(1,2) + O(2,1) on P^2 x P^2, polarized by O(3,3)
ring = multiprojective((2, 2))
L, M = ring.line_bundle((1, 2)), ring.line_bundle((2, 1))
v = VarietyData(
    name="zero locus on P^2 x P^2",
    k=6,
    y=4,
    chow=ring,
    normal=whitney(line_bundle_series(L), line_bundle_series(M)),
    polarization=L + M,
    seshadri=LowerBound(1),
)
print(delta_poly(v).poly.pretty())
print(decide_bigness(delta_poly(v), v.seshadri).name)

# the same data as a description file, run through the command line
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump(json.loads(dumps(variety_to_spec(v))), fh, indent=2)
proc = subprocess.run([sys.executable, "-m", "seshadri_positivity", "compute", fh.name], capture_output=True, text=True)
print(proc.stdout)
