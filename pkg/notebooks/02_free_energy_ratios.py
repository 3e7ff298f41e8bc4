"""
How much does a graphene coating change the atom-plate free energy?
===================================================================

Coated-over-bare ratios for a rubidium atom in front of four plates at
room temperature.  On gold the coating is invisible; on dielectrics it
makes the attraction stronger, more so at larger separations.
"""
# %%
import time

import numpy as np

from cpgraphene import ATOMS, GrapheneSheet, Surface, builtin_material
from cpgraphene.lifshitz import ratio_sweep

rb = ATOMS["Rb"]
separations = np.geomspace(100.0, 6000.0, 7)

# %%
start = time.perf_counter()
table = {}
for name in ("Au", "Si", "Al2O3", "SiO2"):
    plate = builtin_material(name)
    points = ratio_sweep(Surface(plate, GrapheneSheet()), Surface(plate), rb, separations, 300.0)
    table[name] = [p.ratio for p in points]
print(f"computed in {time.perf_counter() - start:.1f} s")

# %%
print("a (nm)  " + "  ".join(f"{n:>7}" for n in table))
for i, a in enumerate(separations):
    print(f"{a:7.0f}  " + "  ".join(f"{table[n][i]:7.4f}" for n in table))

# %% [markdown]
# The same comparison for the four built-in atoms over SiO2 at short
# range: the atom matters much less than the plate.

# %%
plate = builtin_material("SiO2")
for name, atom in ATOMS.items():
    r = ratio_sweep(Surface(plate, GrapheneSheet()), Surface(plate), atom, [100.0, 1000.0], 300.0)
    print(f"{name:4s} " + "  ".join(f"{p.ratio:.4f}" for p in r))
