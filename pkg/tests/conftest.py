import pytest

from quasidouble.field import GF, QQ
from quasidouble.instances import (
    GroupPresentation,
    ThreeCocycle,
    function_algebra,
    group_algebra,
    sweedler_hopf,
)


@pytest.fixture(scope="session")
def kz2():
    return group_algebra(GroupPresentation.cyclic(2))


@pytest.fixture(scope="session")
def kz3_f7():
    return group_algebra(GroupPresentation.cyclic(3), GF(7))


@pytest.fixture(scope="session")
def kz2z2():
    G = GroupPresentation.direct_product(
        GroupPresentation.cyclic(2), GroupPresentation.cyclic(2))
    return group_algebra(G)


@pytest.fixture(scope="session")
def fz2_trivial():
    G = GroupPresentation.cyclic(2)
    return function_algebra(G, ThreeCocycle.trivial(G))


@pytest.fixture(scope="session")
def fz2_omega():
    om = ThreeCocycle.z2_sign()
    return function_algebra(om.G, om)


@pytest.fixture(scope="session")
def fz2z2_omega():
    om = ThreeCocycle.z2z2_product()
    return function_algebra(om.G, om)


@pytest.fixture(scope="session")
def sweedler():
    return sweedler_hopf()


@pytest.fixture(scope="session")
def bundled(kz2, kz3_f7, kz2z2, fz2_trivial, fz2_omega, sweedler):
    H4, _ = sweedler
    return {
        "kZ2": kz2,
        "kZ3/F7": kz3_f7,
        "k(Z2xZ2)": kz2z2,
        "k^Z2 trivial": fz2_trivial,
        "k^Z2 omega": fz2_omega,
        "sweedler": H4,
    }


@pytest.fixture(scope="session")
def qt_instances(kz2, sweedler, fz2_omega):
    """Certified quasitriangular instances: (name, H, rm)."""
    from quasidouble.double import build_double
    from quasidouble.quasitriangular import RMatrix, validate_r_matrix

    out = []
    rm = RMatrix.from_r(kz2, kz2.unit.tensor(kz2.unit))
    validate_r_matrix(kz2, rm).report.require("kZ2 trivial R")
    out.append(("kZ2", kz2, rm))
    H4, rm4 = sweedler
    out.append(("sweedler", H4, rm4))
    D1 = build_double(fz2_omega, check=False)
    out.append(("D(k^Z2_omega)", D1.inner, D1.R_D))
    return out


@pytest.fixture(scope="session")
def doubles(qt_instances):
    """Quantum doubles of the certified instances, unvalidated builds."""
    from quasidouble.double import build_double

    return {name: build_double(H, check=False) for name, H, _ in qt_instances}
