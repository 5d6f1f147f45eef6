"""Canonical derived elements of a quasi-Hopf algebra.

gamma, delta and the twist f relating Delta o S to (S(x)S) o Delta^cop,
and the elements p_R, q_R generalizing sum h_1 (x) h_2 S(h_3) = h (x) 1.
Each derivation comes with an exhaustive identity suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quasihopf import QuasiHopfAlgebra
from .report import ValidationReport, first_diff
from .tensor import TensorElement


@dataclass
class DerivedElements:
    gamma: TensorElement
    delta: TensorElement
    f: TensorElement
    f_inv: TensorElement
    p_R: TensorElement
    q_R: TensorElement


def _scop_ss(H: QuasiHopfAlgebra, e: TensorElement) -> TensorElement:
    """(S (x) S)(Delta^cop(e)) for degree-1 e."""
    t = H.delta(e).permute((2, 1))
    return H.s_leg(H.s_leg(t, 1), 2)


def derive_gamma_delta(H: QuasiHopfAlgebra):
    """gamma = sum S(A^2) alpha A^3 (x) S(A^1) alpha A^4 and the B-analogue delta."""
    ops = H.ops
    f = H.field
    n = H.dim
    A = ops.product(ops.embed_legs(H.phi, (1, 2, 3), 4), H.delta_leg(H.phi_inv, 1))
    gamma = TensorElement.zero(f, (n, n))
    for (a1, a2, a3, a4), c in A.entries.items():
        left = ops.mul_elts(H.s(H.basis_elt(a2)), H.alpha, H.basis_elt(a3))
        right = ops.mul_elts(H.s(H.basis_elt(a1)), H.alpha, H.basis_elt(a4))
        gamma = gamma.add(left.tensor(right).scale(c))
    B = ops.product(H.delta_leg(H.phi, 1), ops.embed_legs(H.phi_inv, (1, 2, 3), 4))
    delta = TensorElement.zero(f, (n, n))
    for (b1, b2, b3, b4), c in B.entries.items():
        left = ops.mul_elts(H.basis_elt(b1), H.beta, H.s(H.basis_elt(b4)))
        right = ops.mul_elts(H.basis_elt(b2), H.beta, H.s(H.basis_elt(b3)))
        delta = delta.add(left.tensor(right).scale(c))
    return gamma, delta


def derive_drinfeld_twist(H: QuasiHopfAlgebra):
    """f = sum (S(x)S)(Delta^op(x^1)) gamma Delta(x^2 beta S(x^3)), and its inverse."""
    ops = H.ops
    n = H.dim
    gamma, delta = derive_gamma_delta(H)
    tw = TensorElement.zero(H.field, (n, n))
    for (x1, x2, x3), c in H.phi_inv.entries.items():
        left = _scop_ss(H, H.basis_elt(x1))
        right = H.delta(ops.mul_elts(H.basis_elt(x2), H.beta, H.s(H.basis_elt(x3))))
        tw = tw.add(ops.product(left, gamma, right).scale(c))
    tw_inv = TensorElement.zero(H.field, (n, n))
    for (x1, x2, x3), c in H.phi_inv.entries.items():
        left = H.delta(ops.mul_elts(H.s(H.basis_elt(x1)), H.alpha, H.basis_elt(x2)))
        right = _scop_ss(H, H.basis_elt(x3))
        tw_inv = tw_inv.add(ops.product(left, delta, right).scale(c))
    return tw, tw_inv


def derive_pq(H: QuasiHopfAlgebra):
    """p_R = sum x^1 (x) x^2 beta S(x^3) and q_R = sum X^1 (x) S^{-1}(alpha X^3) X^2."""
    ops = H.ops
    n = H.dim
    p_r = TensorElement.zero(H.field, (n, n))
    for (x1, x2, x3), c in H.phi_inv.entries.items():
        right = ops.mul_elts(H.basis_elt(x2), H.beta, H.s(H.basis_elt(x3)))
        p_r = p_r.add(H.basis_elt(x1).tensor(right).scale(c))
    q_r = TensorElement.zero(H.field, (n, n))
    for (y1, y2, y3), c in H.phi.entries.items():
        right = ops.mul_elts(
            H.sinv(ops.mul_elts(H.alpha, H.basis_elt(y3))), H.basis_elt(y2))
        q_r = q_r.add(H.basis_elt(y1).tensor(right).scale(c))
    return p_r, q_r


def derive_all(H: QuasiHopfAlgebra) -> DerivedElements:
    gamma, delta = derive_gamma_delta(H)
    tw, tw_inv = derive_drinfeld_twist(H)
    p_r, q_r = derive_pq(H)
    return DerivedElements(gamma, delta, tw, tw_inv, p_r, q_r)


def verify_derived(H: QuasiHopfAlgebra, d: DerivedElements) -> ValidationReport:
    """Exhaustive identity suite for the derived elements."""
    rep = ValidationReport("derived-elements")
    ops = H.ops
    n = H.dim
    unit2 = ops.unit_tensor(2)

    prod = ops.leg_multiply(d.f, d.f_inv)
    prod2 = ops.leg_multiply(d.f_inv, d.f)
    rep.add("f-invertible", prod == unit2 and prod2 == unit2,
            first_diff(prod, unit2) or first_diff(prod2, unit2))
    # counit normalization of f is checked, not assumed
    rep.add("f-counit-left", H.eps_leg(d.f, 1) == H.unit)
    rep.add("f-counit-right", H.eps_leg(d.f, 2) == H.unit)

    witness = None
    for i in range(n):
        h = H.basis_elt(i)
        lhs = ops.product(d.f, H.delta(H.s(h)), d.f_inv)
        if lhs != _scop_ss(H, h):
            witness = (i,)
            break
    rep.add("antipode-coalgebra-conjugation", witness is None, witness)

    got = ops.leg_multiply(d.f, H.delta(H.alpha))
    rep.add("f-alpha-gives-gamma", got == d.gamma, first_diff(got, d.gamma))
    got = ops.leg_multiply(H.delta(H.beta), d.f_inv)
    rep.add("beta-finv-gives-delta", got == d.delta, first_diff(got, d.delta))

    phi_f = ops.product(
        ops.embed_legs(d.f, (2, 3), 3),
        H.delta_leg(d.f, 2),
        H.phi,
        H.delta_leg(d.f_inv, 1),
        ops.embed_legs(d.f_inv, (1, 2), 3),
    )
    want = H.phi.permute((3, 2, 1))
    for leg in (1, 2, 3):
        want = H.s_leg(want, leg)
    rep.add("twisted-reassociator", phi_f == want, first_diff(phi_f, want))

    witness = None
    for i in range(n):
        h = H.basis_elt(i)
        dh = H.delta(h)
        lhs = TensorElement.zero(H.field, (n, n))
        for (h1, h2), c in dh.entries.items():
            term = ops.product(
                H.delta(H.basis_elt(h1)), d.p_R,
                ops.embed_legs(H.s(H.basis_elt(h2)), (2,), 2))
            lhs = lhs.add(term.scale(c))
        rhs = ops.leg_multiply(d.p_R, ops.embed_legs(h, (1,), 2))
        if lhs != rhs:
            witness = (i, "p")
            break
        lhs = TensorElement.zero(H.field, (n, n))
        for (h1, h2), c in dh.entries.items():
            term = ops.product(
                ops.embed_legs(H.sinv(H.basis_elt(h2)), (2,), 2),
                d.q_R, H.delta(H.basis_elt(h1)))
            lhs = lhs.add(term.scale(c))
        rhs = ops.leg_multiply(ops.embed_legs(h, (1,), 2), d.q_R)
        if lhs != rhs:
            witness = (i, "q")
            break
    rep.add("pq-shift", witness is None, witness)

    acc = TensorElement.zero(H.field, (n, n))
    for (q1, q2), c in d.q_R.entries.items():
        term = ops.product(
            H.delta(H.basis_elt(q1)), d.p_R,
            ops.embed_legs(H.s(H.basis_elt(q2)), (2,), 2))
        acc = acc.add(term.scale(c))
    rep.add("qp-cancel", acc == unit2, first_diff(acc, unit2))
    acc = TensorElement.zero(H.field, (n, n))
    for (p1, p2), c in d.p_R.entries.items():
        term = ops.product(
            ops.embed_legs(H.sinv(H.basis_elt(p2)), (2,), 2),
            d.q_R, H.delta(H.basis_elt(p1)))
        acc = acc.add(term.scale(c))
    rep.add("pq-cancel", acc == unit2, first_diff(acc, unit2))

    # (q_R (x) 1)(Delta (x) id)(q_R) Phi^{-1} against its S^{-1}-twisted form
    lhs = ops.product(ops.embed_legs(d.q_R, (1, 2), 3), H.delta_leg(d.q_R, 1), H.phi_inv)
    f21inv = d.f.permute((2, 1))
    f21inv = H.sinv_leg(H.sinv_leg(f21inv, 1), 2)
    fterm = ops.embed_legs(f21inv, (2, 3), 3)
    rhs = TensorElement.zero(H.field, (n, n, n))
    for (y1, y2, y3), c in H.phi.entries.items():
        t1 = ops.embed_legs(
            H.sinv(H.basis_elt(y3)).tensor(H.sinv(H.basis_elt(y2))), (2, 3), 3)
        inner = H.delta_leg(ops.leg_multiply(d.q_R, H.delta(H.basis_elt(y1))), 2)
        rhs = rhs.add(ops.product(t1, fterm, inner).scale(c))
    rep.add("q-coassociativity", lhs == rhs, first_diff(lhs, rhs))

    # Phi (Delta (x) id)(p_R)(p_R (x) 1) against its S-twisted form
    lhs = ops.product(H.phi, H.delta_leg(d.p_R, 1), ops.embed_legs(d.p_R, (1, 2), 3))
    rhs = TensorElement.zero(H.field, (n, n, n))
    for (x1, x2, x3), c in H.phi_inv.entries.items():
        inner = H.delta_leg(ops.leg_multiply(H.delta(H.basis_elt(x1)), d.p_R), 2)
        t2 = ops.embed_legs(
            H.s(H.basis_elt(x3)).tensor(H.s(H.basis_elt(x2))), (2, 3), 3)
        rhs = rhs.add(ops.product(inner, ops.embed_legs(d.f_inv, (2, 3), 3), t2).scale(c))
    rep.add("p-coassociativity", lhs == rhs, first_diff(lhs, rhs))

    # sum q^1_1 x^1 (x) q^1_2 x^2 (x) q^2 x^3 = sum Y^1 (x) q^1 Y^2_1 (x) S^{-1}(Y^3) q^2 Y^2_2
    lhs = ops.leg_multiply(H.delta_leg(d.q_R, 1), H.phi_inv)
    tq = ops.embed_legs(d.q_R, (2, 3), 3)
    rhs = TensorElement.zero(H.field, (n, n, n))
    for (y1, y2, y3), c in H.phi.entries.items():
        t1 = ops.embed_legs(H.basis_elt(y1).tensor(H.sinv(H.basis_elt(y3))), (1, 3), 3)
        t3 = ops.embed_legs(H.delta(H.basis_elt(y2)), (2, 3), 3)
        rhs = rhs.add(ops.product(t1, tq, t3).scale(c))
    rep.add("q-shift-3leg", lhs == rhs, first_diff(lhs, rhs))
    return rep
