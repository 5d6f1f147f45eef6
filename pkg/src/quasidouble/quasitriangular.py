"""R-matrix verification, the element u with S^2 = conj by u, and the
compatibility of R with the antipode twist."""

from __future__ import annotations

from dataclasses import dataclass

from .derived import DerivedElements, derive_all
from .quasihopf import QuasiHopfAlgebra
from .report import ValidationReport, first_diff
from .tensor import TensorElement


@dataclass
class RMatrix:
    R: TensorElement
    R_inv: TensorElement

    @classmethod
    def from_r(cls, H: QuasiHopfAlgebra, R: TensorElement) -> "RMatrix":
        return cls(R, H.ops.invert_element(R))

    @property
    def r21(self) -> TensorElement:
        return self.R.permute((2, 1))


@dataclass
class QTCertificate:
    report: ValidationReport
    u: TensorElement | None
    u_inv: TensorElement | None

    @property
    def certified(self) -> bool:
        return self.report.all_passed


def qt_hexagon_left(H: QuasiHopfAlgebra, R: TensorElement) -> TensorElement:
    """sum X^2 R^1 x^1 Y^1 (x) X^3 x^3 r^1 Y^2 (x) X^1 R^2 x^2 r^2 Y^3."""
    ops = H.ops
    return ops.product(
        H.phi.permute((2, 3, 1)),
        ops.embed_legs(R, (1, 3), 3),
        H.phi_inv.permute((1, 3, 2)),
        ops.embed_legs(R, (2, 3), 3),
        H.phi,
    )


def qt_hexagon_right(H: QuasiHopfAlgebra, R: TensorElement) -> TensorElement:
    """sum x^3 R^1 X^2 r^1 y^1 (x) x^1 X^1 r^2 y^2 (x) x^2 R^2 X^3 y^3."""
    ops = H.ops
    return ops.product(
        H.phi_inv.permute((3, 1, 2)),
        ops.embed_legs(R, (1, 3), 3),
        H.phi.permute((2, 1, 3)),
        ops.embed_legs(R, (1, 2), 3),
        H.phi_inv,
    )


def derive_u(H: QuasiHopfAlgebra, R: TensorElement,
             derived: DerivedElements | None = None):
    """u = sum S(R^2 p^2) alpha R^1 p^1 and its closed-form inverse."""
    ops = H.ops
    n = H.dim
    if derived is None:
        derived = derive_all(H)
    rp = ops.leg_multiply(R, derived.p_R)
    u = TensorElement.zero(H.field, (n,))
    for (t1, t2), c in rp.entries.items():
        u = u.add(ops.mul_elts(H.s(H.basis_elt(t2)), H.alpha, H.basis_elt(t1)).scale(c))
    u_inv = TensorElement.zero(H.field, (n,))
    for (y1, y2, y3), c in H.phi.entries.items():
        for (t1, t2), c2 in rp.entries.items():
            inner = H.s(ops.mul_elts(
                H.s(ops.mul_elts(H.basis_elt(y2), H.basis_elt(t1))),
                H.alpha, H.basis_elt(y3)))
            term = ops.mul_elts(H.basis_elt(y1), H.basis_elt(t2), inner)
            u_inv = u_inv.add(term.scale(H.field.mul(c, c2)))
    return u, u_inv


def check_ext(H: QuasiHopfAlgebra, R: TensorElement,
              derived: DerivedElements | None = None) -> bool:
    """f_21 R f^{-1} = (S (x) S)(R)."""
    if derived is None:
        derived = derive_all(H)
    ops = H.ops
    lhs = ops.product(derived.f.permute((2, 1)), R, derived.f_inv)
    rhs = H.s_leg(H.s_leg(R, 1), 2)
    return lhs == rhs


def validate_r_matrix(H: QuasiHopfAlgebra, rm: RMatrix,
                      derived: DerivedElements | None = None) -> QTCertificate:
    """Full quasitriangularity certificate for (H, R)."""
    rep = ValidationReport("quasitriangular")
    ops = H.ops
    R = rm.R
    unit2 = ops.unit_tensor(2)

    prod = ops.leg_multiply(R, rm.R_inv)
    prod2 = ops.leg_multiply(rm.R_inv, R)
    rep.add("R-invertible", prod == unit2 and prod2 == unit2,
            first_diff(prod, unit2) or first_diff(prod2, unit2))

    lhs = H.delta_leg(R, 1)
    rhs = qt_hexagon_left(H, R)
    rep.add("(qt1)", lhs == rhs, first_diff(lhs, rhs))
    lhs = H.delta_leg(R, 2)
    rhs = qt_hexagon_right(H, R)
    rep.add("(qt2)", lhs == rhs, first_diff(lhs, rhs))

    witness = None
    for i in range(H.dim):
        d = H.delta(H.basis_elt(i))
        if ops.leg_multiply(d.permute((2, 1)), R) != ops.leg_multiply(R, d):
            witness = (i,)
            break
    rep.add("(qt3)", witness is None, witness)

    ok4 = H.eps_leg(R, 1) == H.unit and H.eps_leg(R, 2) == H.unit
    rep.add("(qt4)", ok4)

    if not rep.all_passed:
        return QTCertificate(rep, None, None)

    if derived is None:
        derived = derive_all(H)
    rep.add("(ext)", check_ext(H, R, derived))

    u, u_inv = derive_u(H, R, derived)
    ok = ops.mul_elts(u, u_inv) == H.unit and ops.mul_elts(u_inv, u) == H.unit
    rep.add("u-invertible", ok)
    rep.add("eps-u", H.eps_scalar(u) == H.field.one)
    witness = None
    for i in range(H.dim):
        h = H.basis_elt(i)
        if H.s(H.s(h)) != ops.mul_elts(u, h, u_inv):
            witness = (i,)
            break
    rep.add("square-antipode-inner", witness is None, witness)
    return QTCertificate(rep, u, u_inv)
