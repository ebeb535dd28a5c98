"""
Pytest configuration for the DRINFELD test suite.

Shared fields, Carlitz contexts, generator expansions and a form registry,
built once per session.
"""

import sys
from pathlib import Path

import pytest

# Add the project root to the Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from drinfeld.algebra.field import get_field  # noqa: E402
from drinfeld.algebra.poly import Poly  # noqa: E402
from drinfeld.algebra.scalar import Scalar  # noqa: E402
from drinfeld.carlitz.context import get_context  # noqa: E402
from drinfeld.forms.generators import GeneratorId, get_factory  # noqa: E402
from drinfeld.level.registry import FormRegistry  # noqa: E402


@pytest.fixture(scope="session")
def project_root_path():
    """Return the project root path."""
    return project_root


@pytest.fixture(scope="session")
def F3():
    return get_field(3)


@pytest.fixture(scope="session")
def F5():
    return get_field(5)


@pytest.fixture(scope="session")
def F9():
    return get_field(3, 2)


@pytest.fixture(scope="session")
def T3(F3):
    return Poly.T(F3)


@pytest.fixture(scope="session")
def poly3(F3):
    """Build a polynomial over F_3 from coefficients, low degree first."""
    return lambda *coeffs: Poly(F3, list(coeffs))


@pytest.fixture(scope="session")
def scalar3(F3):
    """Build num/den over F_3 from coefficient lists."""
    def make(num, den=(1,)):
        return Scalar(Poly(F3, list(num)), Poly(F3, list(den)))
    return make


@pytest.fixture(scope="session")
def ctx3(F3):
    return get_context(F3)


@pytest.fixture(scope="session")
def factory3(F3):
    return get_factory(F3)


@pytest.fixture(scope="session")
def factory5(F5):
    return get_factory(F5)


@pytest.fixture(scope="session")
def h3(factory3):
    return factory3.build(GeneratorId("h"), 60)


@pytest.fixture(scope="session")
def delta3(factory3):
    return factory3.build(GeneratorId("Delta"), 60)


@pytest.fixture(scope="session")
def g1_3(factory3):
    return factory3.build(GeneratorId("g1"), 60)


@pytest.fixture(scope="session")
def registry3(F3, factory3):
    """A registry over F_3 with the forms used by the level tests."""
    reg = FormRegistry(F3, factory3)
    t = Poly.T(F3)
    reg.register_generator("h")
    reg.register_generator("Delta")
    reg.register_eisenstein(t)
    reg.register_eisenstein(t + Poly.one(F3))
    reg.register_level_T()
    return reg
