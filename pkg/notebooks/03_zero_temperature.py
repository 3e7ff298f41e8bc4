"""
Thermal versus zero-temperature interaction
===========================================

At T = 0 the sum over Matsubara frequencies becomes a frequency integral.
Comparing both shows where the thermal part takes over and how much
smaller the coating effect is without it.
"""
# %%
from cpgraphene import ATOMS, Geometry, GrapheneSheet, Surface, builtin_material
from cpgraphene.lifshitz import energy_zero_temperature, free_energy

rb = ATOMS["Rb"]
plate = builtin_material("SiO2")
coated, bare = Surface(plate, GrapheneSheet()), Surface(plate)

# %%
print("a (nm)   F300/E0 bare  F300/E0 coated  ratio 300K  ratio 0K")
for a in (100.0, 300.0, 1000.0, 3000.0, 6000.0):
    warm = Geometry(a, 300.0)
    cold = Geometry(a, 0.0)
    fb, fc = free_energy(bare, rb, warm).value, free_energy(coated, rb, warm).value
    eb, ec = energy_zero_temperature(bare, rb, cold).value, energy_zero_temperature(
        coated, rb, cold).value
    print(f"{a:6.0f}   {fb / eb:12.4f}  {fc / ec:14.4f}  {fc / fb:10.4f}  {ec / eb:8.4f}")
