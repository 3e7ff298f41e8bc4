"""
The classical limit of the force
================================

At large separations only the zero-frequency term survives and the force
has a closed form.  We compare it with the full computation for a
metastable helium atom and find where the two agree to 2 percent.
"""
# %%
from cpgraphene import ATOMS, Geometry, GrapheneSheet, Surface, builtin_material
from cpgraphene.asymptotics import classical_force_coated, crossover_separation
from cpgraphene.lifshitz import force

he = ATOMS["He*"]

# %%
plate = builtin_material("SiO2")
surface = Surface(plate, GrapheneSheet())
for a in (2000.0, 5000.0, 8000.0):
    g = Geometry(a, 300.0)
    exact = force(surface, he, g).value
    approx = classical_force_coated(he, g, plate.static_permittivity)
    print(f"a={a:6.0f} nm  engine={exact:.5e} N  closed form={approx.total:.5e} N  "
          f"corrections={approx.first_correction / approx.leading:+.4f}, "
          f"{approx.second_correction / approx.leading:+.5f}")

# %%
for name in ("SiO2", "Al2O3", "Si", "Au"):
    plate = builtin_material(name)
    for coated in (True, False):
        s = Surface(plate, GrapheneSheet()) if coated else Surface(plate)
        c = crossover_separation(s, he, 300.0)
        print(f"{name:6s} {'coated' if coated else 'bare  '}  classical within 2% from "
              f"{c.separation / 1000:.2f} um")
