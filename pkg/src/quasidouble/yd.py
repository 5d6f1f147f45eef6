"""Left Yetter-Drinfeld modules over a quasi-bialgebra: validation, tensor
products, the braiding and its inverse, and the functor from plain modules
induced by an R-matrix.

Module elements are degree-1 TensorElements; tensor-product modules are
flattened, index(m (x) n) = i_m * dim_N + i_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quasihopf import QuasiHopfAlgebra
from .report import ValidationReport, first_diff
from .tensor import LinearMap, TensorElement, apply_on_leg


@dataclass
class YDModule:
    H: QuasiHopfAlgebra
    dim: int
    action: LinearMap    # H (x) M -> M
    coaction: LinearMap  # M -> H (x) M
    label: str = "M"

    def act(self, h: TensorElement, m: TensorElement) -> TensorElement:
        return self.action.apply(h.tensor(m))

    def basis_elt(self, i: int) -> TensorElement:
        return TensorElement.basis(self.H.field, (self.dim,), (i,))


def trivial_module(H: QuasiHopfAlgebra) -> YDModule:
    f = H.field
    n = H.dim
    action = LinearMap(f, (n, 1), (1,), {
        (a, 0): TensorElement(f, (1,), {(0,): H.eps_scalar(H.basis_elt(a))})
        for a in range(n)})
    coaction = LinearMap(f, (1,), (n, 1), {
        (0,): H.unit.tensor(TensorElement.basis(f, (1,), (0,)))})
    return YDModule(H, 1, action, coaction, "k")


def regular_action(H: QuasiHopfAlgebra) -> LinearMap:
    """Left regular action of H on itself."""
    return H.mult


def validate_yd(H: QuasiHopfAlgebra, M: YDModule) -> ValidationReport:
    rep = ValidationReport(f"yd-module {M.label}")
    f = H.field
    n = H.dim
    m = M.dim
    ops = H.ops

    witness = None
    for i in range(m):
        v = M.basis_elt(i)
        if M.act(H.unit, v) != v:
            witness = (i,)
            break
    rep.add("action-unital", witness is None, witness)

    witness = None
    for a in range(n):
        for b in range(n):
            prod = H.mul(H.basis_elt(a), H.basis_elt(b))
            for i in range(m):
                v = M.basis_elt(i)
                if M.act(prod, v) != M.act(H.basis_elt(a), M.act(H.basis_elt(b), v)):
                    witness = (a, b, i)
                    break
            if witness:
                break
        if witness:
            break
    rep.add("action-associative", witness is None, witness)

    # (y1) in H (x) H (x) M
    witness = None
    for i in range(m):
        v = M.basis_elt(i)
        lhs = TensorElement.zero(f, (n, n, m))
        for (x1, x2, x3), c in H.phi.entries.items():
            for (a, u), c2 in M.coaction.apply(v).entries.items():
                w = M.act(H.basis_elt(x2), M.basis_elt(u))
                for (uu,), cw in w.entries.items():
                    for (b, s), c3 in M.coaction.apply(M.basis_elt(uu)).entries.items():
                        t = H.mul(H.basis_elt(x1), H.basis_elt(a)).tensor(
                            H.mul(H.basis_elt(b), H.basis_elt(x3))).tensor(
                            M.basis_elt(s))
                        lhs = lhs.add(t.scale(f.mul(f.mul(c, c2), f.mul(cw, c3))))
        rhs = TensorElement.zero(f, (n, n, m))
        for (x1, x2, x3), c in H.phi.entries.items():
            for (y1, y2, y3), cy in H.phi.entries.items():
                w = M.act(H.basis_elt(y1), v)
                for (uu,), cw in w.entries.items():
                    for (b, s), c3 in M.coaction.apply(M.basis_elt(uu)).entries.items():
                        for (b1, b2), cb in H.delta(H.basis_elt(b)).entries.items():
                            t = H.mul(H.basis_elt(x1), H.basis_elt(b1), H.basis_elt(y2)).tensor(
                                H.mul(H.basis_elt(x2), H.basis_elt(b2), H.basis_elt(y3))).tensor(
                                M.act(H.basis_elt(x3), M.basis_elt(s)))
                            rhs = rhs.add(t.scale(
                                f.mul(f.mul(c, cy), f.mul(cw, f.mul(c3, cb)))))
        if lhs != rhs:
            witness = (i,)
            break
    rep.add("(y1)", witness is None, witness)

    witness = None
    for i in range(m):
        v = M.basis_elt(i)
        got = apply_on_leg(H.counit, M.coaction.apply(v), 1)
        if got != v:
            witness = (i,)
            break
    rep.add("(y2)", witness is None, witness)

    witness = None
    for a in range(n):
        h = H.basis_elt(a)
        dh = H.delta(h)
        for i in range(m):
            v = M.basis_elt(i)
            lhs = TensorElement.zero(f, (n, m))
            rhs = TensorElement.zero(f, (n, m))
            for (h1, h2), c in dh.entries.items():
                for (b, u), c2 in M.coaction.apply(v).entries.items():
                    t = H.mul(H.basis_elt(h1), H.basis_elt(b)).tensor(
                        M.act(H.basis_elt(h2), M.basis_elt(u)))
                    lhs = lhs.add(t.scale(f.mul(c, c2)))
                w = M.act(H.basis_elt(h1), v)
                for (uu,), cw in w.entries.items():
                    for (b, u), c2 in M.coaction.apply(M.basis_elt(uu)).entries.items():
                        t = H.mul(H.basis_elt(b), H.basis_elt(h2)).tensor(M.basis_elt(u))
                        rhs = rhs.add(t.scale(f.mul(c, f.mul(cw, c2))))
            if lhs != rhs:
                witness = (a, i)
                break
        if witness:
            break
    rep.add("(y3)", witness is None, witness)
    return rep


def yd_tensor(M: YDModule, N: YDModule) -> YDModule:
    """Tensor product with diagonal action and the reassociator-dressed coaction."""
    H = M.H
    f = H.field
    n = H.dim
    d = M.dim * N.dim
    flat = lambda i, j: i * N.dim + j

    act_cols: dict = {}
    for a in range(n):
        for (h1, h2), c in H.delta(H.basis_elt(a)).entries.items():
            for i in range(M.dim):
                mi = M.act(H.basis_elt(h1), M.basis_elt(i))
                if mi.is_zero():
                    continue
                for j in range(N.dim):
                    nj = N.act(H.basis_elt(h2), N.basis_elt(j))
                    for (i2,), cm in mi.entries.items():
                        for (j2,), cn in nj.entries.items():
                            col = act_cols.setdefault((a, flat(i, j)), {})
                            key = (flat(i2, j2),)
                            s = f.add(col.get(key, f.zero), f.mul(c, f.mul(cm, cn)))
                            if f.is_zero(s):
                                col.pop(key, None)
                            else:
                                col[key] = s
    action = LinearMap(f, (n, d), (d,), {
        src: TensorElement(f, (d,), col) for src, col in act_cols.items()})

    co_cols: dict = {}
    for i in range(M.dim):
        for j in range(N.dim):
            col: dict = {}
            for (X1, X2, X3), cX in H.phi.entries.items():
                for (x1, x2, x3), cx in H.phi_inv.entries.items():
                    for (Y1, Y2, Y3), cY in H.phi.entries.items():
                        mi = M.act(H.mul(H.basis_elt(x1), H.basis_elt(Y1)), M.basis_elt(i))
                        if mi.is_zero():
                            continue
                        nj = N.act(H.basis_elt(Y2), N.basis_elt(j))
                        if nj.is_zero():
                            continue
                        base = f.mul(cX, f.mul(cx, cY))
                        for (i1,), cm in mi.entries.items():
                            for (am, um), c2 in M.coaction.apply(M.basis_elt(i1)).entries.items():
                                m0 = M.act(H.basis_elt(X2), M.basis_elt(um))
                                if m0.is_zero():
                                    continue
                                for (j1,), cn in nj.entries.items():
                                    for (an, un), c3 in N.coaction.apply(N.basis_elt(j1)).entries.items():
                                        n0 = N.act(H.mul(H.basis_elt(X3), H.basis_elt(x3)),
                                                   N.basis_elt(un))
                                        if n0.is_zero():
                                            continue
                                        hleg = H.mul(
                                            H.basis_elt(X1), H.basis_elt(am),
                                            H.basis_elt(x2), H.basis_elt(an),
                                            H.basis_elt(Y3))
                                        cc = f.mul(base, f.mul(cm, f.mul(c2, f.mul(cn, c3))))
                                        for (hh,), ch in hleg.entries.items():
                                            for (i0,), cm0 in m0.entries.items():
                                                for (j0,), cn0 in n0.entries.items():
                                                    key = (hh, flat(i0, j0))
                                                    s = f.add(col.get(key, f.zero),
                                                              f.mul(cc, f.mul(ch, f.mul(cm0, cn0))))
                                                    if f.is_zero(s):
                                                        col.pop(key, None)
                                                    else:
                                                        col[key] = s
            co_cols[(flat(i, j),)] = TensorElement(f, (n, d), col)
    coaction = LinearMap(f, (d,), (n, d), co_cols)
    return YDModule(H, d, action, coaction, f"{M.label}(x){N.label}")


def braiding(M: YDModule, N: YDModule) -> LinearMap:
    """c(m (x) n) = sum m_(-1) . n (x) m_(0), flattened M(x)N -> N(x)M."""
    H = M.H
    f = H.field
    src, tgt = M.dim * N.dim, N.dim * M.dim
    cols: dict = {}
    for i in range(M.dim):
        for (a, u), c in M.coaction.apply(M.basis_elt(i)).entries.items():
            for j in range(N.dim):
                nj = N.act(H.basis_elt(a), N.basis_elt(j))
                col = cols.setdefault((i * N.dim + j,), {})
                for (j2,), cn in nj.entries.items():
                    key = (j2 * M.dim + u,)
                    s = f.add(col.get(key, f.zero), f.mul(c, cn))
                    if f.is_zero(s):
                        col.pop(key, None)
                    else:
                        col[key] = s
    return LinearMap(f, (src,), (tgt,), {
        s: TensorElement(f, (tgt,), col) for s, col in cols.items()})


def braiding_inverse(M: YDModule, N: YDModule) -> LinearMap:
    """Inverse braiding N(x)M -> M(x)N per the closed formula using S and S^{-1}."""
    H = M.H
    f = H.field
    cols: dict = {}
    src, tgt = N.dim * M.dim, M.dim * N.dim
    for j in range(N.dim):
        nv = N.basis_elt(j)
        for i in range(M.dim):
            mv = M.basis_elt(i)
            col: dict = {}
            for (y1, y2, y3), cy in H.phi_inv.entries.items():
                dy3 = H.delta(H.basis_elt(y3))
                for (X1, X2, X3), cX in H.phi.entries.items():
                    for (x1, x2, x3), cx in H.phi_inv.entries.items():
                        w = M.act(H.basis_elt(x1), mv)
                        if w.is_zero():
                            continue
                        base = f.mul(cy, f.mul(cX, cx))
                        for (v,), cw in w.entries.items():
                            for (b, s), c2 in M.coaction.apply(M.basis_elt(v)).entries.items():
                                for (y31, y32), cd in dy3.entries.items():
                                    leg1 = M.act(
                                        H.mul(H.basis_elt(y31), H.basis_elt(X2)),
                                        M.basis_elt(s))
                                    if leg1.is_zero():
                                        continue
                                    inner = H.sinv(H.mul(
                                        H.s(H.basis_elt(y1)), H.alpha,
                                        H.basis_elt(y2), H.basis_elt(X1),
                                        H.basis_elt(b), H.basis_elt(x2), H.beta,
                                        H.s(H.mul(H.basis_elt(y32), H.basis_elt(X3),
                                                  H.basis_elt(x3)))))
                                    leg2 = N.act(inner, nv)
                                    if leg2.is_zero():
                                        continue
                                    cc = f.mul(base, f.mul(cw, f.mul(c2, cd)))
                                    for (i2,), c3 in leg1.entries.items():
                                        for (j2,), c4 in leg2.entries.items():
                                            key = (i2 * N.dim + j2,)
                                            ss = f.add(col.get(key, f.zero),
                                                       f.mul(cc, f.mul(c3, c4)))
                                            if f.is_zero(ss):
                                                col.pop(key, None)
                                            else:
                                                col[key] = ss
            cols[(j * M.dim + i,)] = TensorElement(f, (tgt,), col)
    return LinearMap(f, (src,), (tgt,), cols)


def module_from_qt(H: QuasiHopfAlgebra, R: TensorElement,
                   action: LinearMap, dim: int, label: str = "F(M)") -> YDModule:
    """Induced YD module on a plain H-module: coaction b -> sum R^2 (x) R^1 . b."""
    f = H.field
    n = H.dim
    M = YDModule(H, dim, action, LinearMap(f, (dim,), (n, dim), {}), label)
    cols: dict = {}
    for i in range(dim):
        col: dict = {}
        for (r1, r2), c in R.entries.items():
            w = M.act(H.basis_elt(r1), M.basis_elt(i))
            for (u,), cw in w.entries.items():
                key = (r2, u)
                s = f.add(col.get(key, f.zero), f.mul(c, cw))
                if f.is_zero(s):
                    col.pop(key, None)
                else:
                    col[key] = s
        cols[(i,)] = TensorElement(f, (n, dim), col)
    M.coaction = LinearMap(f, (dim,), (n, dim), cols)
    return M


def associator(M: YDModule, N: YDModule, P: YDModule, inverse: bool = False) -> LinearMap:
    """Diagonal action of Phi (or Phi^{-1}) on the flattened triple product."""
    H = M.H
    f = H.field
    d = M.dim * N.dim * P.dim
    phi = H.phi_inv if inverse else H.phi
    cols: dict = {}
    for i in range(M.dim):
        for j in range(N.dim):
            for k in range(P.dim):
                col: dict = {}
                for (a, b, c3), c in phi.entries.items():
                    mi = M.act(H.basis_elt(a), M.basis_elt(i))
                    if mi.is_zero():
                        continue
                    nj = N.act(H.basis_elt(b), N.basis_elt(j))
                    if nj.is_zero():
                        continue
                    pk = P.act(H.basis_elt(c3), P.basis_elt(k))
                    for (i2,), cm in mi.entries.items():
                        for (j2,), cn in nj.entries.items():
                            for (k2,), cp in pk.entries.items():
                                key = ((i2 * N.dim + j2) * P.dim + k2,)
                                s = f.add(col.get(key, f.zero),
                                          f.mul(c, f.mul(cm, f.mul(cn, cp))))
                                if f.is_zero(s):
                                    col.pop(key, None)
                                else:
                                    col[key] = s
                cols[((i * N.dim + j) * P.dim + k,)] = TensorElement(f, (d,), col)
    return LinearMap(f, (d,), (d,), cols)


def _tensor_map(f, lmap: LinearMap, side: str, other_dim: int) -> LinearMap:
    """lmap (x) id or id (x) lmap on flattened spaces."""
    src = lmap.source_dims[0]
    tgt = lmap.target_dims[0]
    cols: dict = {}
    if side == "left":
        for (s,), col in lmap.matrix.items():
            for o in range(other_dim):
                cols[(s * other_dim + o,)] = TensorElement(
                    f, (tgt * other_dim,),
                    {(t * other_dim + o,): c for (t,), c in col.entries.items()})
        return LinearMap(f, (src * other_dim,), (tgt * other_dim,), cols)
    for o in range(other_dim):
        for (s,), col in lmap.matrix.items():
            cols[(o * src + s,)] = TensorElement(
                f, (other_dim * tgt,),
                {(o * tgt + t,): c for (t,), c in col.entries.items()})
    return LinearMap(f, (other_dim * src,), (other_dim * tgt,), cols)


def verify_hexagons(M: YDModule, N: YDModule, P: YDModule) -> ValidationReport:
    """Both hexagon identities with the Phi-action associators."""
    rep = ValidationReport("hexagons")
    H = M.H
    f = H.field

    c_m_np = braiding(M, yd_tensor(N, P))
    c_mn = braiding(M, N)
    c_mp = braiding(M, P)
    lhs = associator(N, P, M).compose(c_m_np).compose(associator(M, N, P))
    rhs = _tensor_map(f, c_mp, "right", N.dim).compose(
        associator(N, M, P)).compose(_tensor_map(f, c_mn, "left", P.dim))
    rep.add("hexagon-1", lhs == rhs)

    c_mn_p = braiding(yd_tensor(M, N), P)
    c_np = braiding(N, P)
    lhs = associator(P, M, N, inverse=True).compose(c_mn_p).compose(
        associator(M, N, P, inverse=True))
    rhs = _tensor_map(f, braiding(M, P), "left", N.dim).compose(
        associator(M, P, N, inverse=True)).compose(
        _tensor_map(f, c_np, "right", M.dim))
    rep.add("hexagon-2", lhs == rhs)
    return rep
