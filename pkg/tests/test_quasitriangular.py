from quasidouble.derived import derive_all
from quasidouble.field import QQ
from quasidouble.quasitriangular import RMatrix, derive_u, validate_r_matrix
from quasidouble.tensor import TensorElement


def test_certified_instances(qt_instances):
    for name, H, rm in qt_instances:
        cert = validate_r_matrix(H, rm)
        assert cert.certified, f"{name}: {[c.label for c in cert.report.failures()]}"


def test_sweedler_r_triangular(sweedler):
    H, rm = sweedler
    flip = rm.R.permute((2, 1))
    assert H.ops.leg_multiply(rm.R, flip) == H.ops.unit_tensor(2)


def test_sweedler_u_is_group_like(sweedler):
    H, rm = sweedler
    u, u_inv = derive_u(H, rm.R)
    assert u == H.basis_elt(1)
    assert u_inv == H.basis_elt(1)


def test_u_implements_square_antipode(qt_instances):
    for name, H, rm in qt_instances:
        u, u_inv = derive_u(H, rm.R)
        assert H.mul(u, u_inv) == H.unit, name
        assert H.mul(u_inv, u) == H.unit, name
        assert H.eps_scalar(u) == H.field.one, name
        for a in range(H.dim):
            h = H.basis_elt(a)
            assert H.s(H.s(h)) == H.mul(u, h, u_inv), (name, a)


def test_antipode_image_of_r(qt_instances):
    """(S (x) S)(R) = f_21 R f^{-1} rearranged: the suite's (ext) check."""
    for name, H, rm in qt_instances:
        der = derive_all(H)
        lhs = H.ops.product(der.f.permute((2, 1)), rm.R, der.f_inv)
        rhs = H.s_leg(H.s_leg(rm.R, 1), 2)
        assert lhs == rhs, name


def test_rejects_non_r_matrix(kz2):
    f = kz2.field
    bad = kz2.basis_elt(1).tensor(kz2.basis_elt(1))
    rm = RMatrix.from_r(kz2, bad)
    cert = validate_r_matrix(kz2, rm)
    assert not cert.certified
    failed = {c.label for c in cert.report.failures()}
    assert failed & {"(qt1)", "(qt2)", "(qt3)", "(qt4)"}
