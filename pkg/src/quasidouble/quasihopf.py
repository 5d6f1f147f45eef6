"""Quasi-Hopf algebras as structure-constant bundles, with axiom validation,
gauge twisting and antipode inversion.

Sweedler-style expressions are always realized as explicit compositions of
apply_on_leg in the bracketing the displayed formulas use; the comultiplication
is only quasi-coassociative, so the bracketing is part of the definition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import Field
from .report import ValidationReport, first_diff
from .tensor import (
    LinearMap,
    NotInvertible,
    TensorAlgebra,
    TensorElement,
    apply_on_leg,
    invert_matrix,
)


class NotNormalizable(ValueError):
    pass


class NotBijective(ArithmeticError):
    pass


class QuasiHopfAlgebra:
    """(H, mult, unit, Delta, eps, Phi, S, alpha, beta) on a fixed basis."""

    def __init__(self, field: Field, dim: int, basis_labels, mult: LinearMap,
                 unit: TensorElement, comult: LinearMap, counit: LinearMap,
                 phi: TensorElement, phi_inv: TensorElement,
                 antipode: LinearMap | None = None,
                 alpha: TensorElement | None = None,
                 beta: TensorElement | None = None,
                 notes: str | None = None):
        self.field = field
        self.dim = dim
        self.basis_labels = list(basis_labels)
        if len(self.basis_labels) != dim:
            raise ValueError("need one label per basis element")
        self.mult = mult
        self.unit = unit
        self.comult = comult
        self.counit = counit
        self.phi = phi
        self.phi_inv = phi_inv
        self.antipode = antipode
        self.alpha = alpha
        self.beta = beta
        self.notes = notes
        self.ops = TensorAlgebra(field, dim, mult, unit)
        self._antipode_inv: LinearMap | None = None

    # -- convenience ---------------------------------------------------
    def basis_elt(self, i: int) -> TensorElement:
        return self.ops.basis_elt(i)

    def mul(self, *elts: TensorElement) -> TensorElement:
        return self.ops.mul_elts(*elts)

    def delta(self, h: TensorElement) -> TensorElement:
        return self.comult.apply(h)

    def delta_leg(self, e: TensorElement, leg: int) -> TensorElement:
        return apply_on_leg(self.comult, e, leg)

    def eps_leg(self, e: TensorElement, leg: int) -> TensorElement:
        return apply_on_leg(self.counit, e, leg)

    def eps_scalar(self, h: TensorElement):
        return self.counit.apply(h).entries.get((), self.field.zero)

    def s_leg(self, e: TensorElement, leg: int) -> TensorElement:
        return apply_on_leg(self.antipode, e, leg)

    def s(self, h: TensorElement) -> TensorElement:
        return self.antipode.apply(h)

    @property
    def antipode_inv(self) -> LinearMap:
        if self._antipode_inv is None:
            self._antipode_inv = antipode_inverse(self)
        return self._antipode_inv

    def sinv(self, h: TensorElement) -> TensorElement:
        return self.antipode_inv.apply(h)

    def sinv_leg(self, e: TensorElement, leg: int) -> TensorElement:
        return apply_on_leg(self.antipode_inv, e, leg)

    def delta2_left(self, h: TensorElement) -> TensorElement:
        """(Delta (x) id)(Delta(h)) = sum h_(1,1) (x) h_(1,2) (x) h_2."""
        return self.delta_leg(self.delta(h), 1)

    def delta2_right(self, h: TensorElement) -> TensorElement:
        """(id (x) Delta)(Delta(h)) = sum h_1 (x) h_(2,1) (x) h_(2,2)."""
        return self.delta_leg(self.delta(h), 2)

    def has_antipode(self) -> bool:
        return self.antipode is not None and self.alpha is not None and self.beta is not None


@dataclass
class GaugeTransformation:
    """Invertible F in H(x)H with (eps(x)id)(F) = (id(x)eps)(F) = 1."""

    F: TensorElement
    F_inv: TensorElement

    def validate(self, H: QuasiHopfAlgebra) -> ValidationReport:
        rep = ValidationReport("gauge")
        ops = H.ops
        unit2 = ops.unit_tensor(2)
        rep.add("gauge-invertible",
                ops.leg_multiply(self.F, self.F_inv) == unit2
                and ops.leg_multiply(self.F_inv, self.F) == unit2)
        rep.add("gauge-counit-left", H.eps_leg(self.F, 1) == H.unit,
                first_diff(H.eps_leg(self.F, 1), H.unit))
        rep.add("gauge-counit-right", H.eps_leg(self.F, 2) == H.unit,
                first_diff(H.eps_leg(self.F, 2), H.unit))
        return rep


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def validate_quasi_bialgebra(H: QuasiHopfAlgebra) -> ValidationReport:
    """Axioms (q1)-(q4), (q7) plus the underlying algebra/coalgebra structure."""
    rep = ValidationReport("quasi-bialgebra")
    ops = H.ops
    f = H.field
    n = H.dim

    witness = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = ops.vec_mul(ops.row(i, j), {(k,): f.one})
                rhs = ops.vec_mul({(i,): f.one}, ops.row(j, k))
                if lhs != rhs:
                    witness = (i, j, k)
                    break
            if witness:
                break
        if witness:
            break
    rep.add("associativity", witness is None, witness)

    witness = None
    for i in range(n):
        e = H.basis_elt(i)
        if ops.mul_elts(H.unit, e) != e or ops.mul_elts(e, H.unit) != e:
            witness = (i,)
            break
    rep.add("unit", witness is None, witness)

    # counit and comultiplication are unital algebra maps
    witness = None
    for i in range(n):
        for j in range(n):
            prod = ops.elt(ops.row(i, j))
            lhs = H.eps_scalar(prod)
            rhs = f.mul(H.eps_scalar(H.basis_elt(i)), H.eps_scalar(H.basis_elt(j)))
            if lhs != rhs:
                witness = (i, j)
                break
        if witness:
            break
    if witness is None and H.eps_scalar(H.unit) != f.one:
        witness = ()
    rep.add("counit-algebra-map", witness is None, witness)

    witness = None
    for i in range(n):
        for j in range(n):
            prod = ops.elt(ops.row(i, j))
            lhs = H.delta(prod)
            rhs = ops.leg_multiply(H.delta(H.basis_elt(i)), H.delta(H.basis_elt(j)))
            if lhs != rhs:
                witness = (i, j)
                break
        if witness:
            break
    if witness is None and H.delta(H.unit) != ops.unit_tensor(2):
        witness = ()
    rep.add("comult-algebra-map", witness is None, witness)

    unit3 = ops.unit_tensor(3)
    prod = ops.leg_multiply(H.phi, H.phi_inv)
    prod2 = ops.leg_multiply(H.phi_inv, H.phi)
    rep.add("phi-invertible", prod == unit3 and prod2 == unit3,
            first_diff(prod, unit3) or first_diff(prod2, unit3))

    witness = None
    for i in range(n):
        h = H.basis_elt(i)
        lhs = H.delta2_right(h)
        rhs = ops.product(H.phi, H.delta2_left(h), H.phi_inv)
        if lhs != rhs:
            witness = (i,)
            break
    rep.add("(q1)", witness is None, witness)

    witness = None
    for i in range(n):
        h = H.basis_elt(i)
        if H.eps_leg(H.delta(h), 2) != h or H.eps_leg(H.delta(h), 1) != h:
            witness = (i,)
            break
    rep.add("(q2)", witness is None, witness)

    lhs = ops.product(
        H.ops.embed_legs(H.phi, (2, 3, 4), 4),
        H.delta_leg(H.phi, 2),
        H.ops.embed_legs(H.phi, (1, 2, 3), 4),
    )
    rhs = ops.product(H.delta_leg(H.phi, 3), H.delta_leg(H.phi, 1))
    rep.add("(q3)", lhs == rhs, first_diff(lhs, rhs))

    got = H.eps_leg(H.phi, 2)
    rep.add("(q4)", got == ops.unit_tensor(2), first_diff(got, ops.unit_tensor(2)))

    got_l = H.eps_leg(H.phi, 1)
    got_r = H.eps_leg(H.phi, 3)
    rep.add("(q7)", got_l == ops.unit_tensor(2) and got_r == ops.unit_tensor(2),
            first_diff(got_l, ops.unit_tensor(2)) or first_diff(got_r, ops.unit_tensor(2)))
    return rep


def validate_quasi_hopf(H: QuasiHopfAlgebra) -> ValidationReport:
    """Full suite: quasi-bialgebra axioms plus (q5), (q6) and S properties."""
    rep = ValidationReport("quasi-hopf")
    rep.extend(validate_quasi_bialgebra(H))
    if not H.has_antipode():
        rep.add("antipode-present", False)
        return rep
    ops = H.ops
    f = H.field
    n = H.dim

    witness = None
    for i in range(n):
        h = H.basis_elt(i)
        d = H.delta(h)
        # sum S(h_1) alpha h_2
        left = ops.fuse(ops.fuse(
            H.s_leg(d, 1).tensor(H.alpha).permute((1, 3, 2)), 1, 2), 1, 2)
        # sum h_1 beta S(h_2)
        right = ops.fuse(ops.fuse(
            H.s_leg(d, 2).tensor(H.beta).permute((1, 3, 2)), 1, 2), 1, 2)
        eh = H.eps_scalar(h)
        if left != H.alpha.scale(eh) or right != H.beta.scale(eh):
            witness = (i,)
            break
    rep.add("(q5)", witness is None, witness)

    # (q6) first: sum X^1 beta S(X^2) alpha X^3 = 1
    t = H.s_leg(H.phi, 2)
    acc = TensorElement.zero(f, (n,))
    for (a, b, c), coeff in t.entries.items():
        term = ops.mul_elts(H.basis_elt(a), H.beta, H.basis_elt(b), H.alpha, H.basis_elt(c))
        acc = acc.add(term.scale(coeff))
    ok1 = acc == H.unit
    # (q6) second: sum S(x^1) alpha x^2 beta S(x^3) = 1
    t = H.s_leg(H.s_leg(H.phi_inv, 1), 3)
    acc2 = TensorElement.zero(f, (n,))
    for (a, b, c), coeff in t.entries.items():
        term = ops.mul_elts(H.basis_elt(a), H.alpha, H.basis_elt(b), H.beta, H.basis_elt(c))
        acc2 = acc2.add(term.scale(coeff))
    ok2 = acc2 == H.unit
    rep.add("(q6)", ok1 and ok2, first_diff(acc, H.unit) or first_diff(acc2, H.unit))

    witness = None
    for i in range(n):
        for j in range(n):
            lhs = H.s(ops.elt(ops.row(i, j)))
            rhs = ops.mul_elts(H.s(H.basis_elt(j)), H.s(H.basis_elt(i)))
            if lhs != rhs:
                witness = (i, j)
                break
        if witness:
            break
    if witness is None and H.s(H.unit) != H.unit:
        witness = ()
    rep.add("S-anti-homomorphism", witness is None, witness)

    try:
        sinv = antipode_inverse(H)
        H._antipode_inv = sinv
        rep.add("S-bijective", True)
    except NotBijective:
        rep.add("S-bijective", False)

    witness = None
    for i in range(n):
        h = H.basis_elt(i)
        if H.eps_scalar(H.s(h)) != H.eps_scalar(h):
            witness = (i,)
            break
    rep.add("eps-after-S", witness is None, witness)
    return rep


# ---------------------------------------------------------------------------
# normalization, twisting, antipode inversion
# ---------------------------------------------------------------------------

def normalize_alpha_beta(H: QuasiHopfAlgebra) -> QuasiHopfAlgebra:
    """Rescale alpha -> eps(beta) alpha, beta -> eps(alpha) beta so both have counit 1."""
    f = H.field
    ea = H.eps_scalar(H.alpha)
    eb = H.eps_scalar(H.beta)
    if f.mul(ea, eb) != f.one:
        raise NotNormalizable(f"eps(alpha) eps(beta) = {f.to_str(f.mul(ea, eb))} != 1")
    return QuasiHopfAlgebra(
        H.field, H.dim, H.basis_labels, H.mult, H.unit, H.comult, H.counit,
        H.phi, H.phi_inv, H.antipode,
        alpha=H.alpha.scale(eb), beta=H.beta.scale(ea), notes=H.notes)


def twist(H: QuasiHopfAlgebra, F: GaugeTransformation) -> QuasiHopfAlgebra:
    """Gauge-twisted algebra H_F with Delta_F, Phi_F, alpha_F, beta_F."""
    ops = H.ops
    rep = F.validate(H)
    rep.require("twist")
    comult_f = LinearMap(
        H.field, (H.dim,), (H.dim, H.dim),
        {(i,): ops.product(F.F, H.delta(H.basis_elt(i)), F.F_inv) for i in range(H.dim)})
    phi_f = ops.product(
        ops.embed_legs(F.F, (2, 3), 3),
        H.delta_leg(F.F, 2),
        H.phi,
        H.delta_leg(F.F_inv, 1),
        ops.embed_legs(F.F_inv, (1, 2), 3),
    )
    phi_f_inv = ops.product(
        ops.embed_legs(F.F, (1, 2), 3),
        H.delta_leg(F.F, 1),
        H.phi_inv,
        H.delta_leg(F.F_inv, 2),
        ops.embed_legs(F.F_inv, (2, 3), 3),
    )
    alpha_f = TensorElement.zero(H.field, (H.dim,))
    for (a, b), c in F.F_inv.entries.items():
        alpha_f = alpha_f.add(
            ops.mul_elts(H.s(H.basis_elt(a)), H.alpha, H.basis_elt(b)).scale(c))
    beta_f = TensorElement.zero(H.field, (H.dim,))
    for (a, b), c in F.F.entries.items():
        beta_f = beta_f.add(
            ops.mul_elts(H.basis_elt(a), H.beta, H.s(H.basis_elt(b))).scale(c))
    return QuasiHopfAlgebra(
        H.field, H.dim, H.basis_labels, H.mult, H.unit, comult_f, H.counit,
        phi_f, phi_f_inv, H.antipode, alpha=alpha_f, beta=beta_f, notes=H.notes)


def antipode_inverse(H: QuasiHopfAlgebra) -> LinearMap:
    """Exact inverse of the antipode matrix; raises NotBijective if singular."""
    n = H.dim
    entries = {}
    for (j,), col in H.antipode.matrix.items():
        for (i,), c in col.entries.items():
            entries[(i, j)] = c
    try:
        inv = invert_matrix(H.field, n, entries)
    except NotInvertible as exc:
        raise NotBijective("antipode matrix is singular") from exc
    cols: dict = {}
    for (i, j), c in inv.items():
        cols.setdefault((j,), {})[(i,)] = c
    lm = LinearMap(H.field, (n,), (n,),
                   {src: TensorElement(H.field, (n,), e) for src, e in cols.items()})
    for i in range(n):
        e = H.basis_elt(i)
        if lm.apply(H.s(e)) != e or H.s(lm.apply(e)) != e:
            raise NotBijective("antipode inverse verification failed")
    return lm
