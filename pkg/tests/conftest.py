import pytest

from cpgraphene.atoms import ATOMS
from cpgraphene.graphene import GrapheneSheet
from cpgraphene.materials import builtin_material
from cpgraphene.reflection import Surface

DIELECTRICS = ("Si", "Al2O3", "SiO2")
PLATES = ("Au",) + DIELECTRICS


@pytest.fixture(scope="session")
def sheet():
    return GrapheneSheet()


@pytest.fixture(scope="session")
def surfaces():
    """name -> (coated, bare) for every built-in plate."""
    out = {}
    for name in PLATES + ("perfect-conductor", "vacuum", "Au-plasma"):
        plate = builtin_material(name)
        out[name] = (Surface(plate, GrapheneSheet()), Surface(plate))
    return out


@pytest.fixture(scope="session")
def rb():
    return ATOMS["Rb"]


@pytest.fixture(scope="session")
def he():
    return ATOMS["He*"]
