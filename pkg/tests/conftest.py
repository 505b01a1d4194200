import pytest

from cupcurve.curve import curve_new
from cupcurve.field import make_context


def build(q, ell, a, b, ext_cap=128):
    return curve_new(make_context(q, ell, 1), a, b, ext_cap=ext_cap)


@pytest.fixture(scope="session")
def cm_curve():
    """y^2 = x^3 - 3 over F_7, ell = 3: #E = 3, complex multiplication."""
    return build(7, 3, 0, -3)


@pytest.fixture(scope="session")
def quotient_curve():
    """y^2 = x^3 + 9 over F_7, ell = 3: full rational 3-torsion."""
    return build(7, 3, 0, 9)


@pytest.fixture(scope="session")
def ell2_curves():
    """Full rational 2-torsion, one curve per congruence class of q mod 4."""
    return [build(13, 2, -3, 0), build(7, 2, -1, 0)]


@pytest.fixture(scope="session")
def ell3_curves(quotient_curve):
    return [quotient_curve, build(13, 3, 0, 3)]


@pytest.fixture(scope="session")
def ell5_curves():
    return [build(31, 5, 0, 11), build(41, 5, 6, 0)]


@pytest.fixture(scope="session")
def full_torsion_curves(ell2_curves, ell3_curves, ell5_curves):
    """At least five curves with full rational ell-torsion, ell in {2, 3, 5}."""
    return ell2_curves + ell3_curves + ell5_curves


@pytest.fixture(scope="session")
def dl_suite(cm_curve, quotient_curve, ell2_curves):
    """Curves for the Legendre-derivative suite (towers stay desk-sized)."""
    return [cm_curve, quotient_curve] + ell2_curves
