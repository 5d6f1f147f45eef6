"""The quantum double D(H) = H* |><| H of a finite dimensional quasi-Hopf
algebra, after Hausser and Nill.

Basis of D(H): e^i |><| e_a at flat index i*n + a. The multiplication is
driven by the element Omega in H^(x)5; comultiplication, counit and antipode
use the explicit closed forms, and the implicit generating relations are kept
as an independent cross-check (verify_generating_relations).
"""

from __future__ import annotations

from dataclasses import dataclass

from .derived import DerivedElements, derive_all
from .dual import DualStructure, build_dual
from .quasihopf import QuasiHopfAlgebra, validate_quasi_hopf
from .quasitriangular import RMatrix, validate_r_matrix
from .report import ValidationReport, first_diff
from .tensor import LinearMap, TensorElement, apply_on_leg


@dataclass(frozen=True)
class DoubleBasis:
    """Bijection between pairs (dual index, algebra index) and flat indices."""

    n: int

    @property
    def dim(self) -> int:
        return self.n * self.n

    def flat(self, i: int, a: int) -> int:
        return i * self.n + a

    def unflat(self, k: int):
        return divmod(k, self.n)

    def labels(self, base_labels):
        return tuple(f"{li}* |><| {la}" for li in base_labels for la in base_labels)


@dataclass
class DoubleAlgebra:
    base: QuasiHopfAlgebra
    inner: QuasiHopfAlgebra
    dual: DualStructure
    derived: DerivedElements
    basis: DoubleBasis
    i_D: LinearMap
    omega: TensorElement
    U_elt: TensorElement
    bold_D: TensorElement  # in H (x) D(H)
    R_D: RMatrix

    def include(self, h: TensorElement) -> TensorElement:
        return self.i_D.apply(h)


def compute_omega(H: QuasiHopfAlgebra, derived: DerivedElements | None = None) -> TensorElement:
    """Omega = sum X^1_(1,1) y^1 x^1 (x) X^1_(1,2) y^2 x^2_1 (x) X^1_2 y^3 x^2_2
    (x) S^{-1}(f^1 X^2 x^3) (x) S^{-1}(f^2 X^3)."""
    if derived is None:
        derived = derive_all(H)
    ops = H.ops
    t_f = ops.embed_legs(derived.f, (4, 5), 5)
    t_x_caps = H.delta_leg(H.delta_leg(H.phi, 1), 1)
    t_y = ops.embed_legs(H.phi, (1, 2, 3), 5)
    t_x = ops.embed_legs(H.delta_leg(H.phi_inv, 2), (1, 2, 3, 4), 5)
    m = ops.product(t_f, t_x_caps, t_y, t_x)
    return H.sinv_leg(H.sinv_leg(m, 4), 5)


def _flat_elt(field, basis: DoubleBasis, entries: dict) -> TensorElement:
    return TensorElement(field, (basis.dim,), entries)


def build_double(H: QuasiHopfAlgebra, check: bool = True) -> DoubleAlgebra:
    """Assemble D(H) with all structure maps and (optionally) validate it."""
    f = H.field
    n = H.dim
    basis = DoubleBasis(n)
    N = basis.dim
    ops = H.ops
    ds = build_dual(H, check=False)
    der = derive_all(H)
    omega = compute_omega(H, der)

    def dflat(entries_2d: dict) -> dict:
        return {(basis.flat(i, a),): c for (i, a), c in entries_2d.items()}

    def idot(h: TensorElement, elt_2d: dict) -> dict:
        """(eps |><| h) (phi |><| h') on 2d dicts {(i, a): c}."""
        out: dict = {}
        dd = H.delta_leg(H.delta(h), 1)
        for (u, v, w), c in dd.entries.items():
            eu = H.basis_elt(u)
            sw = H.sinv(H.basis_elt(w))
            for (i, a), c2 in elt_2d.items():
                cc = f.mul(c, c2)
                phi = ds.hit_right(ds.hit_left(eu, ds.dual_basis(i)), sw)
                if phi.is_zero():
                    continue
                for (b,), cb in ops.row(v, a).items():
                    for (j,), cj in phi.entries.items():
                        key = (j, b)
                        s = f.add(out.get(key, f.zero), f.mul(cc, f.mul(cb, cj)))
                        if f.is_zero(s):
                            out.pop(key, None)
                        else:
                            out[key] = s
        return out

    # multiplication table from (mdd), second form
    hit_cache: dict = {}

    def hit(k1: int, i: int, k2: int) -> TensorElement:
        key = (k1, i, k2)
        got = hit_cache.get(key)
        if got is None:
            got = ds.hit_right(ds.hit_left(H.basis_elt(k1), ds.dual_basis(i)), H.basis_elt(k2))
            hit_cache[key] = got
        return got

    omega_perm = omega.permute((1, 5, 2, 4, 3))
    mult_cols: dict = {}
    for a in range(n):
        dd = H.delta_leg(H.delta(H.basis_elt(a)), 1)
        t = TensorElement.zero(f, (n,) * 5)
        for (u, v, w), c in dd.entries.items():
            t = t.add(ops.embed_legs(
                H.basis_elt(u).tensor(H.sinv(H.basis_elt(w))).tensor(H.basis_elt(v)),
                (3, 4, 5), 5).scale(c))
        K = ops.leg_multiply(omega_perm, t)
        for i in range(n):
            for j in range(n):
                acc: dict = {}  # (dual idx, pre-b H idx) -> c
                for (k1, k5, k2, k4, k3), c in K.entries.items():
                    phi1 = hit(k1, i, k5)
                    if phi1.is_zero():
                        continue
                    phi2 = hit(k2, j, k4)
                    if phi2.is_zero():
                        continue
                    conv = ds.convolution(phi1, phi2)
                    for (m,), cm in conv.entries.items():
                        key = (m, k3)
                        s = f.add(acc.get(key, f.zero), f.mul(c, cm))
                        if f.is_zero(s):
                            acc.pop(key, None)
                        else:
                            acc[key] = s
                for b in range(n):
                    col: dict = {}
                    for (m, k3), c in acc.items():
                        for (bb,), cb in ops.row(k3, b).items():
                            key = (basis.flat(m, bb),)
                            s = f.add(col.get(key, f.zero), f.mul(c, cb))
                            if f.is_zero(s):
                                col.pop(key, None)
                            else:
                                col[key] = s
                    if col:
                        mult_cols[(basis.flat(i, a), basis.flat(j, b))] = \
                            TensorElement(f, (N,), col)
    mult = LinearMap(f, (N, N), (N,), mult_cols)

    unit = _flat_elt(f, basis, dflat(
        {(i, a): f.mul(ci, ca)
         for (i,), ci in ds.eps.entries.items()
         for (a,), ca in H.unit.entries.items()}))

    i_D = LinearMap(f, (n,), (N,), {
        (a,): _flat_elt(f, basis, dflat(
            {(i, a): ci for (i,), ci in ds.eps.entries.items()}))
        for a in range(n)})

    def inject(e: TensorElement) -> TensorElement:
        out = e
        for leg in range(1, e.degree + 1):
            out = apply_on_leg(i_D, out, leg)
        return out

    # comultiplication from the closed form (cddf)
    t_x_caps = H.delta_leg(H.phi, 2)
    w = ops.product(
        ops.embed_legs(H.sinv_leg(t_x_caps, 4), (1, 5, 7, 6), 7),
        ops.embed_legs(H.phi, (1, 3, 7), 7),
        ops.embed_legs(H.sinv_leg(H.delta_leg(der.p_R, 1), 3), (2, 4, 3), 7),
        ops.embed_legs(H.phi_inv, (2, 4, 7), 7),
    )
    comult_cols: dict = {}
    for a in range(n):
        wa = ops.leg_multiply(w, ops.embed_legs(H.delta(H.basis_elt(a)), (4, 7), 7))
        for i in range(n):
            dhat = ds.comult_dual.apply(ds.dual_basis(i))
            col: dict = {}
            for (A, B, C, Dp, E, Fq, G), c in wa.entries.items():
                for (j, k), cjk in dhat.entries.items():
                    cc = f.mul(c, cjk)
                    phi2 = hit(B, k, C)
                    if phi2.is_zero():
                        continue
                    first = idot(H.basis_elt(A), {(m, Dp): cm
                                                  for (m,), cm in phi2.entries.items()})
                    if not first:
                        continue
                    phi1 = hit(E, j, Fq)
                    if phi1.is_zero():
                        continue
                    for (m1, b1), c1 in first.items():
                        k1 = basis.flat(m1, b1)
                        for (m2,), c2 in phi1.entries.items():
                            k2 = basis.flat(m2, G)
                            key = (k1, k2)
                            s = f.add(col.get(key, f.zero),
                                      f.mul(cc, f.mul(c1, c2)))
                            if f.is_zero(s):
                                col.pop(key, None)
                            else:
                                col[key] = s
            comult_cols[(basis.flat(i, a),)] = TensorElement(f, (N, N), col)
    comult = LinearMap(f, (N,), (N, N), comult_cols)

    # counit (coddf): eps_D(phi |><| h) = eps(h) phi(S^{-1}(alpha))
    sinv_alpha = H.sinv(H.alpha)
    counit = LinearMap(f, (N,), (), {
        (basis.flat(i, a),): TensorElement.scalar(
            f, f.mul(H.eps_scalar(H.basis_elt(a)), sinv_alpha.entries.get((i,), f.zero)))
        for i in range(n) for a in range(n)})

    phi_D = inject(H.phi)
    phi_D_inv = inject(H.phi_inv)
    alpha_D = inject(H.alpha)
    beta_D = inject(H.beta)

    # U = sum g^1 S(q^2) (x) g^2 S(q^1), with f^{-1} = sum g^1 (x) g^2
    q21s = H.s_leg(H.s_leg(der.q_R, 1), 2).permute((2, 1))
    U_elt = ops.leg_multiply(der.f_inv, q21s)

    # antipode from the closed form (anddf)
    v = ops.product(
        ops.embed_legs(der.f, (1, 3), 4),
        ops.embed_legs(H.sinv_leg(H.delta_leg(der.p_R, 1), 3), (2, 4, 3), 4),
        ops.embed_legs(U_elt, (2, 4), 4),
    )
    antipode_cols: dict = {}
    for a in range(n):
        sa = H.s(H.basis_elt(a))
        for i in range(n):
            sbar_phi = ds.s_bar_inv.apply(ds.dual_basis(i))
            col: dict = {}
            for (A, B, C, Dq), c in v.entries.items():
                inner_phi = ds.hit_right(ds.hit_left(H.basis_elt(B), sbar_phi),
                                         H.basis_elt(C))
                if inner_phi.is_zero():
                    continue
                left_h = ops.mul_elts(sa, H.basis_elt(A))
                if left_h.is_zero():
                    continue
                part = idot(left_h, {(m, Dq): cm
                                     for (m,), cm in inner_phi.entries.items()})
                for (m1, b1), c1 in part.items():
                    key = (basis.flat(m1, b1),)
                    s = f.add(col.get(key, f.zero), f.mul(c, c1))
                    if f.is_zero(s):
                        col.pop(key, None)
                    else:
                        col[key] = s
            antipode_cols[(basis.flat(i, a),)] = TensorElement(f, (N,), col)
    antipode = LinearMap(f, (N,), (N,), antipode_cols)

    inner = QuasiHopfAlgebra(
        f, N, basis.labels(H.basis_labels), mult, unit, comult, counit,
        phi_D, phi_D_inv, antipode=antipode, alpha=alpha_D, beta=beta_D,
        notes="quantum double")

    # bold D = sum_i S^{-1}(p^2) e_i p^1_1 (x) (e^i |><| p^1_2) in H (x) D(H)
    pd = H.sinv_leg(H.delta_leg(der.p_R, 1), 3)  # p^1_1 (x) p^1_2 (x) S^{-1}(p^2)
    bold_entries: dict = {}
    for (p11, p12, sp2), c in pd.entries.items():
        for i in range(n):
            hpart = ops.mul_elts(H.basis_elt(sp2), H.basis_elt(i), H.basis_elt(p11))
            for (hidx,), ch in hpart.entries.items():
                key = (hidx, basis.flat(i, p12))
                s = f.add(bold_entries.get(key, f.zero), f.mul(c, ch))
                if f.is_zero(s):
                    bold_entries.pop(key, None)
                else:
                    bold_entries[key] = s
    bold_D = TensorElement(f, (n, N), bold_entries)

    R = apply_on_leg(i_D, bold_D, 1)
    R_D = RMatrix.from_r(inner, R)

    D = DoubleAlgebra(H, inner, ds, der, basis, i_D, omega, U_elt, bold_D, R_D)
    if check:
        rep = validate_quasi_hopf(inner)
        rep.require("build_double")
        cert = validate_r_matrix(inner, R_D)
        cert.report.require("build_double R_D")
    return D


def inclusion_map(D: DoubleAlgebra, h: TensorElement) -> TensorElement:
    return D.include(h)


def verify_generating_relations(D: DoubleAlgebra) -> ValidationReport:
    """The implicit relations determining the double's structure maps.

    The first leg of bold D lives in H; all identities are checked after
    injecting it through i_D (an injective algebra map), which turns bold D
    into R_D and carries f to (i_D (x) i_D)(f).
    """
    rep = ValidationReport("double-generating-relations")
    H = D.base
    inner = D.inner
    ops = inner.ops
    i_D = D.i_D
    R = D.R_D.R

    def inject(e: TensorElement) -> TensorElement:
        out = e
        for leg in range(1, e.degree + 1):
            out = apply_on_leg(i_D, out, leg)
        return out

    witness = None
    for a in range(H.dim):
        h = H.basis_elt(a)
        lhs = inner.delta(i_D.apply(h))
        rhs = inject(H.delta(h))
        if lhs != rhs:
            witness = (a,)
            break
    rep.add("comult-restricts-to-H", witness is None, witness)

    witness = None
    for a in range(H.dim):
        h = H.basis_elt(a)
        if inner.eps_scalar(i_D.apply(h)) != H.eps_scalar(h):
            witness = (a,)
            break
    rep.add("counit-restricts-to-H", witness is None, witness)

    witness = None
    for a in range(H.dim):
        h = H.basis_elt(a)
        if inner.s(i_D.apply(h)) != i_D.apply(H.s(h)):
            witness = (a,)
            break
    rep.add("antipode-restricts-to-H", witness is None, witness)

    witness = None
    for a in range(H.dim):
        for b in range(H.dim):
            prod = H.mul(H.basis_elt(a), H.basis_elt(b))
            if inner.mul(i_D.apply(H.basis_elt(a)), i_D.apply(H.basis_elt(b))) \
                    != i_D.apply(prod):
                witness = (a, b)
                break
        if witness:
            break
    rep.add("inclusion-algebra-map", witness is None, witness)

    lhs = inner.delta_leg(R, 2)
    rhs = ops.product(
        inner.phi_inv.permute((3, 1, 2)),
        ops.embed_legs(R, (1, 3), 3),
        inner.phi.permute((2, 1, 3)),
        ops.embed_legs(R, (1, 2), 3),
        inner.phi_inv,
    )
    rep.add("comult-of-R-factor", lhs == rhs, first_diff(lhs, rhs))

    # (id (x) eps_D)(bold D) = (eps (x) id)(bold D), both sides injected into D(H)
    left = i_D.apply(apply_on_leg(inner.counit, D.bold_D, 2))
    right = apply_on_leg(H.counit, D.bold_D, 1)
    rep.add("counit-of-R-factor", left == right, first_diff(left, right))

    lhs = inner.s_leg(inner.s_leg(R, 1), 2)
    rhs = ops.product(inject(D.derived.f.permute((2, 1))), R,
                      inject(D.derived.f_inv))
    rep.add("antipode-of-R-factor", lhs == rhs, first_diff(lhs, rhs))

    got = inject(H.phi)
    rep.add("reassociator-injected", got == inner.phi, first_diff(got, inner.phi))
    rep.add("alpha-beta-injected",
            i_D.apply(H.alpha) == inner.alpha and i_D.apply(H.beta) == inner.beta)
    return rep


def inject_base_leg(D: DoubleAlgebra, e: TensorElement) -> TensorElement:
    return apply_on_leg(D.i_D, e, 1)
