"""
Graphene response at imaginary frequencies
==========================================

The coating enters only through two components of the polarization
tensor.  Here we look at them at the zero Matsubara frequency, where the
temperature dependence matters, and at nonzero frequencies.
"""
# %%
import numpy as np

from cpgraphene import Geometry, GrapheneSheet, tau
from cpgraphene.asymptotics import pi00_classical
from cpgraphene.graphene import (pi00_thermal_zero_freq, pi_tr_minus_pi00_thermal_zero_freq,
                                 tensor_at_nonzero_matsubara)

sheet = GrapheneSheet()

# %% [markdown]
# At room temperature and 100 nm the dimensionless temperature is

# %%
g = Geometry(separation=100.0, temperature=300.0)
t = tau(g)
print(f"tau = {t:.4f}")

# %% [markdown]
# Pi_00 at zero frequency is nearly flat in y for small y and grows
# linearly once pi v_F y / (2 tau) becomes large.

# %%
y = np.geomspace(1e-2, 1e3, 8)
for yi, p, q in zip(y, pi00_thermal_zero_freq(sheet, y, t),
                    pi_tr_minus_pi00_thermal_zero_freq(sheet, y, t)):
    print(f"y={yi:9.3g}  Pi00={p:11.5g}  Pi_tr-Pi00={q:11.5g}")

# %% [markdown]
# The flat part is the small-argument value used by the classical limit.

# %%
approx = pi00_classical(g)
print(f"small-argument Pi00 = {approx.value:.5g}, regime parameter {approx.regime_parameter:.3g}")

# %% [markdown]
# At nonzero frequency the T = 0 form is used; the product of the two
# components is fixed by y and zeta alone.

# %%
zeta, yy = 1.0, 2.0
tp = tensor_at_nonzero_matsubara(sheet, zeta, yy)
print(tp)
print("product / (pi alpha)^2 (y^2 - zeta^2) =",
      tp.pi00 * tp.pi_tr_minus_weighted_pi00 / ((np.pi * sheet.fine_structure) ** 2 * 3.0))
