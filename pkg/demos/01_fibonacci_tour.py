"""Tour of the toolkit on the Fibonacci category.

Builds the two-label golden-ratio category, verifies every coherence axiom,
and walks through the derived data: dimensions, twists, monodromies, the
S-matrix by two independent routes, the T-matrix, and the Verlinde
round-trip back to the fusion rules.
"""

import numpy as np

from mtcat import (
    check_modular,
    f_matrix,
    fuse,
    hexagon_residual,
    make,
    monodromy,
    pentagon_residual,
    quantum_dimension,
    rigidity_scalar,
    s_matrix_balanced,
    s_matrix_unnormalized,
    t_matrix,
    triangle_residual,
    twist,
    verlinde_coefficients,
)

data = make("fibonacci")
ring = data.ring
print(f"labels: {ring.names}, dual map {ring.dual.tolist()}")
print(f"tau x tau = {[(lab.name, m) for lab, m in fuse(ring, 'tau', 'tau')]}")

print("\n-- coherence ------------------------------------------------------")
pent, worst = pentagon_residual(data)
print(f"pentagon residual    {pent:.2e}   (worst instance {worst})")
print(f"hexagon residual     {hexagon_residual(data, 'braid')[0]:.2e}")
print(f"inverse hexagon      {hexagon_residual(data, 'inverse_braid')[0]:.2e}")
print(f"triangle residual    {triangle_residual(data):.2e}")

print("\n-- the fusing matrix of (tau, tau, tau; tau) ----------------------")
lm = f_matrix(data, 1, 1, 1, 1)
print(np.round(lm.matrix.real, 6))
print("rows:", lm.row_index, " cols:", lm.col_index)
print(f"unit-channel element F_tau = {rigidity_scalar(data, 'tau'):.10f}")
print(f"dimension d_tau = 1/F_tau  = {quantum_dimension(data, 'tau'):.10f}")
print("(the golden ratio, as it must be: d^2 = d + 1)")

print("\n-- braiding data --------------------------------------------------")
print(f"twist of tau: {twist(data, 'tau'):.6f}  = exp(2 pi i 2/5)")
print(f"monodromy (tau,tau -> 1):   {monodromy(data, 1, 1, 0)[0,0]:.6f}")
print(f"monodromy (tau,tau -> tau): {monodromy(data, 1, 1, 1)[0,0]:.6f}")

print("\n-- S-matrix, two independent routes -------------------------------")
S_trace = s_matrix_unnormalized(data).entries
S_twist = s_matrix_balanced(data).entries
print("quantum traces of the double braiding:")
print(np.round(S_trace.real, 6))
print(f"agreement with the twist formula: {np.abs(S_trace - S_twist).max():.2e}")

print("\n-- full verdict ----------------------------------------------------")
rep = check_modular(data)
print(f"verdict: {rep.verdict}")
print(f"global dimension squared: {rep.global_dim_sq:.6f}")
print(f"T-matrix diagonal: {np.round(t_matrix(data), 6)}")
out = verlinde_coefficients(rep.s_norm)
print(f"fusion rules recovered from S (max rounding error {out.max_error:.1e}):")
for (a, b, c) in np.argwhere(out.rounded):
    print(f"  N[{ring.names[a]},{ring.names[b]} -> {ring.names[c]}] = {out.rounded[a,b,c]}")
