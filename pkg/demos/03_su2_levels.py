"""The level-k quantum-group families: recoupling data at a root of unity.

Labels are twice-spins 0..k; fusing matrices come from q-deformed recoupling
coefficients at q = exp(i pi/(k+2)) in the sine normalization, so they are
real orthogonal with exact identity unit blocks.  Twists land on
exp(2 pi i j(j+1)/(k+2)) and the Gauss-sum phase reproduces c = 3k/(k+2).
"""

import numpy as np

from mtcat import check_modular, make, q_racah_6j, quantum_dimensions
from mtcat.fusion_ring import fp_dimensions

print("recoupling coefficients feeding the fusing matrices:")
print(f"  level 2, all spins 1/2, unit channels: {q_racah_6j(2, 1, 1, 1, 1, 0, 0):+.6f}")
print(f"  level 3, all spins 1,  unit channels: {q_racah_6j(3, 2, 2, 2, 2, 0, 0):+.6f}")
print("  (1/sqrt(2) and 1/golden-ratio up to the self-pairing sign)")

print(f"\n{'k':>3} {'verdict':>9} {'dims (signed)':>42} {'c (stored)':>11} {'c (Gauss)':>10}")
for k in range(0, 9):
    data = make("su2_level", level=k)
    rep = check_modular(data)
    dims = np.round(quantum_dimensions(data).real, 3)
    p_plus = rep.gauss_sums[0]
    c_gauss = (np.angle(p_plus) * 8 / (2 * np.pi)) % 8 if abs(p_plus) else 0.0
    print(f"{k:>3} {rep.verdict:>9} {str(dims.tolist()):>42} "
          f"{data.central_charge:>11.4f} {c_gauss % 8:>10.4f}")

print("\nhalf-integer spins carry negative categorical dimensions (their")
print("self-pairing sign); the magnitudes are the positive quantum integers:")
data = make("su2_level", level=4)
d = quantum_dimensions(data).real
fp = fp_dimensions(data.ring)
for jj in range(5):
    print(f"  jj={jj} (j={jj/2:.1f}):  d = {d[jj]:+.6f},  |d| = Perron = {fp[jj]:.6f}")

print("\ntwists against the stored lowest weights h = j(j+1)/(k+2):")
for k in (1, 2, 3, 8):
    data = make("su2_level", level=k)
    rep = check_modular(data)
    dev = np.abs(rep.twists - np.exp(2j * np.pi * data.weights)).max()
    print(f"  k={k}: max |twist - exp(2 pi i h)| = {dev:.2e}")
