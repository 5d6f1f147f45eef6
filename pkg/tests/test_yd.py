import pytest

from quasidouble.biproduct import braided_dual
from quasidouble.derived import derive_all
from quasidouble.dual import build_dual
from quasidouble.tensor import LinearMap, TensorElement
from quasidouble.yd import (
    braiding,
    braiding_inverse,
    module_from_qt,
    trivial_module,
    validate_yd,
    verify_hexagons,
    yd_tensor,
)


@pytest.fixture(scope="module")
def braided_modules(qt_instances):
    out = []
    for name, H, rm in qt_instances:
        B = braided_dual(H, rm, derive_all(H), build_dual(H, check=False))
        out.append((name, H, rm, B.module))
    return out


def _is_identity(lmap: LinearMap, dim: int) -> bool:
    f = lmap.field
    for k in range(dim):
        e = TensorElement.basis(f, (dim,), (k,))
        if lmap.apply(e) != e:
            return False
    return True


def test_trivial_module(bundled):
    for name, H in bundled.items():
        rep = validate_yd(H, trivial_module(H))
        assert rep.all_passed, name


def test_braided_dual_is_yd_module(braided_modules):
    for name, H, rm, M in braided_modules:
        rep = validate_yd(H, M)
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_tensor_square_is_yd_module(braided_modules):
    for name, H, rm, M in braided_modules:
        rep = validate_yd(H, yd_tensor(M, M))
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_braiding_invertible(braided_modules):
    for name, H, rm, M in braided_modules:
        MM = yd_tensor(M, M)
        for N in (M, MM):
            c = braiding(M, N)
            c_inv = braiding_inverse(M, N)
            assert _is_identity(c_inv.compose(c), M.dim * N.dim), name
            assert _is_identity(c.compose(c_inv), N.dim * M.dim), name


def test_hexagons(braided_modules):
    for name, H, rm, M in braided_modules:
        rep = verify_hexagons(M, M, M)
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_module_from_qt_reproduces_r_coaction(braided_modules):
    """The R-matrix coaction on a plain module matches the closed form."""
    for name, H, rm, M in braided_modules:
        rebuilt = module_from_qt(H, rm.R, M.action, M.dim)
        for i in range(M.dim):
            assert rebuilt.coaction.apply(rebuilt.basis_elt(i)) \
                == M.coaction.apply(M.basis_elt(i)), (name, i)


def test_regular_module_of_double_is_yd(fz2_omega):
    from quasidouble.double import build_double
    from quasidouble.yd import regular_action

    D = build_double(fz2_omega, check=False)
    H = D.inner
    M = module_from_qt(H, D.R_D.R, regular_action(H), H.dim, "D-regular")
    rep = validate_yd(H, M)
    assert rep.all_passed, [c.label for c in rep.failures()]
