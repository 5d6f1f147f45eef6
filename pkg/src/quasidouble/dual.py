"""The dual space H* of a quasi-Hopf algebra: coassociative comultiplication
dual to the product, the four harpoon actions, the quasi-associative
convolution, and the dual antipode.

Elements of H* are degree-1 TensorElements written on the dual basis e^i,
with <e^i, e_j> = delta_ij (see pair_dual).
"""

from __future__ import annotations

from .quasihopf import NotBijective, QuasiHopfAlgebra
from .report import ValidationReport
from .tensor import LinearMap, TensorElement, pair_dual


class DualStructure:
    """H* with its coalgebra, bimodule, convolution and antipode data."""

    def __init__(self, H: QuasiHopfAlgebra):
        self.H = H
        n = H.dim
        f = H.field
        self.comult_dual = LinearMap(f, (n,), (n, n), {
            (i,): TensorElement(f, (n, n), {
                (j, k): c
                for (j, k), col in H.mult.matrix.items()
                for (i2,), c in col.entries.items() if i2 == i})
            for i in range(n)})
        # counit of H*: evaluation at 1
        self.counit_dual = LinearMap(f, (n,), (), {
            (i,): TensorElement.scalar(f, c)
            for (i,), c in H.unit.entries.items()})
        self.s_bar = _transpose(H.antipode)
        try:
            self.s_bar_inv = _transpose(H.antipode_inv)
        except NotBijective:
            self.s_bar_inv = None
        self.eps = TensorElement(f, (n,), {
            (i,): H.eps_scalar(H.basis_elt(i)) for i in range(n)})

    # -- harpoons -------------------------------------------------------
    def hit_left(self, h: TensorElement, phi: TensorElement) -> TensorElement:
        """h -> phi, with <h -> phi, h'> = phi(h' h)."""
        H, f, n = self.H, self.H.field, self.H.dim
        out: dict = {}
        for (a,), ca in h.entries.items():
            for (i,), ci in phi.entries.items():
                c = f.mul(ca, ci)
                for (j2, a2), col in H.mult.matrix.items():
                    if a2 != a:
                        continue
                    d = col.entries.get((i,))
                    if d is None:
                        continue
                    s = f.add(out.get((j2,), f.zero), f.mul(c, d))
                    if f.is_zero(s):
                        out.pop((j2,), None)
                    else:
                        out[(j2,)] = s
        return TensorElement(f, (n,), out)

    def hit_right(self, phi: TensorElement, h: TensorElement) -> TensorElement:
        """phi <- h, with <phi <- h, h'> = phi(h h')."""
        H, f, n = self.H, self.H.field, self.H.dim
        out: dict = {}
        for (a,), ca in h.entries.items():
            for (i,), ci in phi.entries.items():
                c = f.mul(ca, ci)
                for (a2, j2), col in H.mult.matrix.items():
                    if a2 != a:
                        continue
                    d = col.entries.get((i,))
                    if d is None:
                        continue
                    s = f.add(out.get((j2,), f.zero), f.mul(c, d))
                    if f.is_zero(s):
                        out.pop((j2,), None)
                    else:
                        out[(j2,)] = s
        return TensorElement(f, (n,), out)

    def functional_on(self, phi: TensorElement, h: TensorElement) -> TensorElement:
        """phi -> h = sum phi(h_2) h_1."""
        H, f, n = self.H, self.H.field, self.H.dim
        out = TensorElement.zero(f, (n,))
        for (h1, h2), c in H.delta(h).entries.items():
            v = phi.entries.get((h2,))
            if v is not None:
                out = out.add(H.basis_elt(h1).scale(f.mul(c, v)))
        return out

    def functional_under(self, h: TensorElement, phi: TensorElement) -> TensorElement:
        """h <- phi = sum phi(h_1) h_2."""
        H, f, n = self.H, self.H.field, self.H.dim
        out = TensorElement.zero(f, (n,))
        for (h1, h2), c in H.delta(h).entries.items():
            v = phi.entries.get((h1,))
            if v is not None:
                out = out.add(H.basis_elt(h2).scale(f.mul(c, v)))
        return out

    # -- convolution ------------------------------------------------------
    def convolution(self, phi: TensorElement, psi: TensorElement) -> TensorElement:
        """phi psi with <phi psi, h> = sum phi(h_1) psi(h_2)."""
        H, f, n = self.H, self.H.field, self.H.dim
        out: dict = {}
        for (i,), col in H.comult.matrix.items():
            acc = f.zero
            for (j, k), c in col.entries.items():
                a = phi.entries.get((j,))
                if a is None:
                    continue
                b = psi.entries.get((k,))
                if b is None:
                    continue
                acc = f.add(acc, f.mul(c, f.mul(a, b)))
            if not f.is_zero(acc):
                out[(i,)] = acc
        return TensorElement(f, (n,), out)

    def dual_basis(self, i: int) -> TensorElement:
        return TensorElement.basis(self.H.field, (self.H.dim,), (i,))

    def evaluate(self, phi: TensorElement, h: TensorElement):
        return pair_dual(phi, h)


def _transpose(lmap: LinearMap) -> LinearMap:
    f = lmap.field
    n = lmap.source_dims[0]
    cols: dict = {}
    for (j,), col in lmap.matrix.items():
        for (i,), c in col.entries.items():
            cols.setdefault((i,), {})[(j,)] = c
    return LinearMap(f, (n,), (n,),
                     {src: TensorElement(f, (n,), e) for src, e in cols.items()})


def build_dual(H: QuasiHopfAlgebra, check: bool = True) -> DualStructure:
    ds = DualStructure(H)
    if check:
        verify_dual(ds).require("build_dual")
    return ds


def verify_dual(ds: DualStructure) -> ValidationReport:
    """Defining properties of the dual structure, checked on the full basis."""
    rep = ValidationReport("dual-structure")
    H = ds.H
    f = H.field
    n = H.dim

    witness = None
    from .tensor import apply_on_leg
    for i in range(n):
        phi = ds.dual_basis(i)
        d = ds.comult_dual.apply(phi)
        if apply_on_leg(ds.comult_dual, d, 1) != apply_on_leg(ds.comult_dual, d, 2):
            witness = (i,)
            break
    rep.add("dual-comult-coassociative", witness is None, witness)

    witness = None
    for i in range(n):
        phi = ds.dual_basis(i)
        d = ds.comult_dual.apply(phi)
        left = apply_on_leg(ds.counit_dual, d, 1)
        right = apply_on_leg(ds.counit_dual, d, 2)
        if left != phi or right != phi:
            witness = (i,)
            break
    rep.add("dual-counit-laws", witness is None, witness)

    witness = None
    for i in range(n):
        phi = ds.dual_basis(i)
        for a in range(n):
            h = H.basis_elt(a)
            for b in range(n):
                hp = H.basis_elt(b)
                lhs = pair_dual(ds.hit_left(h, phi), hp)
                rhs = pair_dual(phi, H.mul(hp, h))
                if lhs != rhs:
                    witness = (i, a, b, "left")
                    break
                lhs = pair_dual(ds.hit_right(phi, h), hp)
                rhs = pair_dual(phi, H.mul(h, hp))
                if lhs != rhs:
                    witness = (i, a, b, "right")
                    break
            if witness:
                break
        if witness:
            break
    rep.add("harpoon-pairings", witness is None, witness)

    witness = None
    for i in range(n):
        phi = ds.dual_basis(i)
        for a in range(n):
            h = H.basis_elt(a)
            for b in range(n):
                hp = H.basis_elt(b)
                lhs = ds.hit_right(ds.hit_left(h, phi), hp)
                rhs = ds.hit_left(h, ds.hit_right(phi, hp))
                if lhs != rhs:
                    witness = (i, a, b)
                    break
            if witness:
                break
        if witness:
            break
    rep.add("bimodule-compatibility", witness is None, witness)

    witness = None
    for i in range(n):
        phi = ds.dual_basis(i)
        for a in range(n):
            h = H.basis_elt(a)
            if pair_dual(ds.s_bar.apply(phi), h) != pair_dual(phi, H.s(h)):
                witness = (i, a)
                break
        if witness:
            break
    rep.add("dual-antipode-pairing", witness is None, witness)

    witness = None
    for i in range(n):
        phi = ds.dual_basis(i)
        for j in range(n):
            psi = ds.dual_basis(j)
            conv = ds.convolution(phi, psi)
            for a in range(n):
                d = H.delta(H.basis_elt(a))
                acc = f.zero
                for (h1, h2), c in d.entries.items():
                    acc = f.add(acc, f.mul(c, f.mul(
                        phi.entries.get((h1,), f.zero), psi.entries.get((h2,), f.zero))))
                if conv.entries.get((a,), f.zero) != acc:
                    witness = (i, j, a)
                    break
            if witness:
                break
        if witness:
            break
    rep.add("convolution-pairing", witness is None, witness)

    # unit of the convolution is the counit of H
    witness = None
    for i in range(n):
        phi = ds.dual_basis(i)
        if ds.convolution(ds.eps, phi) != phi or ds.convolution(phi, ds.eps) != phi:
            witness = (i,)
            break
    rep.add("convolution-unit", witness is None, witness)
    return rep


def verify_convolution_quasi_associative(ds: DualStructure) -> ValidationReport:
    """[phi psi] xi = sum (X^1 -> phi <- x^1)[(X^2 -> psi <- x^2)(X^3 -> xi <- x^3)]."""
    rep = ValidationReport("convolution-quasi-associativity")
    H = ds.H
    f = H.field
    n = H.dim
    witness = None
    for i in range(n):
        phi = ds.dual_basis(i)
        for j in range(n):
            psi = ds.dual_basis(j)
            for k in range(n):
                xi = ds.dual_basis(k)
                lhs = ds.convolution(ds.convolution(phi, psi), xi)
                rhs = TensorElement.zero(f, (n,))
                for (y1, y2, y3), c in H.phi.entries.items():
                    for (x1, x2, x3), c2 in H.phi_inv.entries.items():
                        a = ds.hit_right(ds.hit_left(H.basis_elt(y1), phi), H.basis_elt(x1))
                        b = ds.hit_right(ds.hit_left(H.basis_elt(y2), psi), H.basis_elt(x2))
                        d = ds.hit_right(ds.hit_left(H.basis_elt(y3), xi), H.basis_elt(x3))
                        rhs = rhs.add(
                            ds.convolution(a, ds.convolution(b, d)).scale(f.mul(c, c2)))
                if lhs != rhs:
                    witness = (i, j, k)
                    break
            if witness:
                break
        if witness:
            break
    rep.add("quasi-associativity", witness is None, witness)
    return rep
