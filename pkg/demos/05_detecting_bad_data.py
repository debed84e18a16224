"""What the verifier catches: perturbed symbols, wrong twists, broken files.

Every check is a residual, so a corrupted data set does not crash the
pipeline: it flips the verdict and points at the worst offending instance.
"""

import json

import numpy as np

from mtcat import (
    ValidationError,
    check_modular,
    hexagon_residual,
    loads,
    make,
    pentagon_residual,
    ribbon_residual,
    triangle_residual,
)
from mtcat.io import category_to_dict

fib = make("fibonacci")

print("-- a 1e-3 bump on one fusing entry ---------------------------------")
bad = fib.copy()
bad.F[(1, 1, 1, 1, 0, 0)] = bad.F[(1, 1, 1, 1, 0, 0)] + 1e-3
res, worst = pentagon_residual(bad)
print(f"pentagon residual jumps to {res:.3e}; worst instance {worst}")
print(f"verdict: {check_modular(bad).verdict}")

print("\n-- a negated braiding entry ----------------------------------------")
bad = fib.copy()
bad.R[(1, 1, 0)] = -bad.R[(1, 1, 0)]
print(f"hexagon residual: {hexagon_residual(bad, 'braid')[0]:.3f}")
print(f"verdict: {check_modular(bad).verdict}")

print("\n-- a wrong twist against the balancing axiom ----------------------")
print(f"clean ribbon residual:       {ribbon_residual(fib):.2e}")
print(f"with the tau twist forced 1: {ribbon_residual(fib, twists=np.array([1.0, 1.0])):.3f}")

print("\n-- a corrupted unit block ------------------------------------------")
bad = fib.copy()
bad.F[(0, 1, 1, 1, 1, 1)] = np.array(2.0 + 0j).reshape(1, 1, 1, 1)
print(f"triangle residual: {triangle_residual(bad):.3f}")

print("\n-- structural damage is caught at load time ------------------------")
doc = category_to_dict(fib)
doc["fusion"] = [row for row in doc["fusion"] if row[:3] != [1, 1, 0]]
try:
    loads(json.dumps(doc))
except ValidationError as err:
    print("load refused the file:")
    print(" ", str(err).splitlines()[1])
