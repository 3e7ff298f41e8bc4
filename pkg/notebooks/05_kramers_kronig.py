"""
Permittivity along the imaginary axis from optical data
=======================================================

Real-frequency absorption data are turned into epsilon(i xi) with the
Kramers-Kronig relation.  A synthetic Drude table stands in for measured
gold data so the result can be checked against the exact expression.
"""
# %%
import numpy as np

from cpgraphene.materials import (DrudeMetal, KramersKronigMaterial, PlasmaMetal,
                                  optical_table_from_model)

gold = DrudeMetal(plasma_frequency=9.0, relaxation=0.035)
omega = np.geomspace(0.05, 500.0, 3000)

# %% [markdown]
# Below the first tabulated frequency the data must be extended.  The
# Drude extension keeps the result consistent with the model; the plasma
# extension drops the relaxation and adds omega_p^2/xi^2.

# %%
drude_ext = KramersKronigMaterial(optical_table_from_model(gold, omega, gold))
plasma_ext = KramersKronigMaterial(optical_table_from_model(gold, omega, PlasmaMetal(9.0)))

xi = np.array([0.16, 1.0, 5.0, 20.0])
print("xi (eV)   exact Drude   KK (Drude ext)   KK (plasma ext)")
for x, e, d, p in zip(xi, gold.epsilon(xi), drude_ext.epsilon(xi), plasma_ext.epsilon(xi)):
    print(f"{x:7.2f}  {e:12.5g}  {d:15.5g}  {p:16.5g}")
