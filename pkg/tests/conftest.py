import pytest

from mtcat import make

# the standard verification set: every built-in family at desk scale
CATALOG = [
    ("trivial", "trivial", {}),
    ("pointed_z2", "pointed_zn", {"n": 2, "q_exponent": 1}),
    ("pointed_z3", "pointed_zn", {"n": 3, "q_exponent": 2}),
    ("pointed_z4", "pointed_zn", {"n": 4, "q_exponent": 1}),
    ("pointed_z5", "pointed_zn", {"n": 5, "q_exponent": 2}),
    ("pointed_z6", "pointed_zn", {"n": 6, "q_exponent": 1}),
    ("fibonacci", "fibonacci", {}),
    ("ising", "ising", {}),
] + [(f"su2_k{k}", "su2_level", {"level": k}) for k in range(1, 9)]


@pytest.fixture(scope="session")
def catalog():
    """name -> CategoryData for the whole verification set (built once)."""
    return {name: make(family, **kw) for name, family, kw in CATALOG}


@pytest.fixture(scope="session")
def fib(catalog):
    return catalog["fibonacci"]


@pytest.fixture(scope="session")
def ising(catalog):
    return catalog["ising"]


@pytest.fixture(scope="session")
def semion():
    return make("pointed_zn", n=2, q_exponent=1)
