"""Sparse multi-leg tensors over a fixed basis, and exact linear algebra.

A :class:`TensorElement` is an element of V_{d_1} (x) ... (x) V_{d_k} stored as a
sparse map from index tuples to nonzero scalars.  The uniform-dims case
(every leg the same space H) is the one the rest of the engine lives in;
per-leg dims exist for mixed tensors such as coactions H (x) M.

Algebra-aware operations (leg products, embeddings with unit padding,
element inversion) live on :class:`TensorAlgebra`, which wraps a
multiplication table and a unit element.
"""

from __future__ import annotations

from itertools import product as iproduct

from .field import Field


class TensorError(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


class TensorElement:
    """Exact sparse element of a tensor power; immutable by convention."""

    __slots__ = ("field", "dims", "entries")

    def __init__(self, field: Field, dims, entries: dict):
        self.field = field
        self.dims = tuple(dims)
        clean = {}
        for idx, c in entries.items():
            idx = tuple(idx)
            if len(idx) != len(self.dims):
                raise TensorError(f"index {idx} has wrong arity for dims {self.dims}")
            for i, d in zip(idx, self.dims):
                if not 0 <= i < d:
                    raise TensorError(f"index {idx} out of range for dims {self.dims}")
            if not field.is_zero(c):
                clean[idx] = c
        self.entries = clean

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, field, dims):
        return cls(field, dims, {})

    @classmethod
    def uniform(cls, field, degree: int, dim: int, entries: dict):
        return cls(field, (dim,) * degree, entries)

    @classmethod
    def scalar(cls, field, value):
        return cls(field, (), {(): value})

    @classmethod
    def basis(cls, field, dims, idx):
        return cls(field, dims, {tuple(idx): field.one})

    # -- basic structure -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.dims)

    @property
    def dim(self) -> int:
        if not self.dims:
            raise TensorError("degree-0 element has no dim")
        if any(d != self.dims[0] for d in self.dims):
            raise TensorError(f"non-uniform dims {self.dims}")
        return self.dims[0]

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.field == other.field
            and self.dims == other.dims
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.dims, frozenset(self.entries.items())))

    def __repr__(self):
        items = sorted(self.entries.items())
        body = " + ".join(f"{self.field.to_str(c)}*e{list(i)}" for i, c in items[:6])
        more = "" if len(items) <= 6 else f" + ... ({len(items)} terms)"
        return f"<Tensor dims={self.dims} {body or '0'}{more}>"

    def __getitem__(self, idx):
        return self.entries.get(tuple(idx), self.field.zero)

    # -- linear operations -------------------------------------------------
    def add(self, other: "TensorElement") -> "TensorElement":
        if self.dims != other.dims:
            raise TensorError(f"dims mismatch {self.dims} vs {other.dims}")
        out = dict(self.entries)
        f = self.field
        for idx, c in other.entries.items():
            s = f.add(out.get(idx, f.zero), c)
            if f.is_zero(s):
                out.pop(idx, None)
            else:
                out[idx] = s
        return TensorElement(f, self.dims, out)

    def sub(self, other: "TensorElement") -> "TensorElement":
        return self.add(other.scale(self.field.neg(self.field.one)))

    def scale(self, c) -> "TensorElement":
        f = self.field
        if f.is_zero(c):
            return TensorElement.zero(f, self.dims)
        return TensorElement(f, self.dims, {i: f.mul(c, v) for i, v in self.entries.items()})

    def tensor(self, other: "TensorElement") -> "TensorElement":
        f = self.field
        out = {}
        for i, c in self.entries.items():
            for j, d in other.entries.items():
                out[i + j] = f.mul(c, d)
        return TensorElement(f, self.dims + other.dims, out)

    def permute(self, perm) -> "TensorElement":
        """New leg j carries old leg perm[j] (1-based legs in `perm`)."""
        perm = tuple(p - 1 for p in perm)
        if sorted(perm) != list(range(self.degree)):
            raise TensorError(f"bad permutation {perm}")
        dims = tuple(self.dims[p] for p in perm)
        out = {tuple(idx[p] for p in perm): c for idx, c in self.entries.items()}
        return TensorElement(self.field, dims, out)

    # -- serialization -----------------------------------------------------
    def to_records(self):
        """[i_1, ..., i_k, scalar-string] records, lexicographic by indices."""
        return [list(idx) + [self.field.to_str(c)] for idx, c in sorted(self.entries.items())]

    @classmethod
    def from_records(cls, field, dims, records):
        k = len(dims)
        entries = {}
        for rec in records:
            if len(rec) != k + 1:
                raise TensorError(f"record {rec} has wrong arity for dims {dims}")
            entries[tuple(int(i) for i in rec[:k])] = field.parse(rec[k])
        return cls(field, dims, entries)


class LinearMap:
    """Sparse linear map between tensor powers, stored column-wise."""

    __slots__ = ("field", "source_dims", "target_dims", "matrix")

    def __init__(self, field, source_dims, target_dims, matrix: dict):
        self.field = field
        self.source_dims = tuple(source_dims)
        self.target_dims = tuple(target_dims)
        self.matrix = {}
        for src, col in matrix.items():
            src = tuple(src)
            if len(src) != len(self.source_dims):
                raise TensorError(f"source index {src} has wrong arity")
            if col.dims != self.target_dims:
                raise TensorError(f"column at {src} has dims {col.dims}, expected {self.target_dims}")
            if not col.is_zero():
                self.matrix[src] = col

    @classmethod
    def identity(cls, field, dim):
        return cls(field, (dim,), (dim,),
                   {(i,): TensorElement.basis(field, (dim,), (i,)) for i in range(dim)})

    def column(self, src) -> TensorElement:
        return self.matrix.get(tuple(src), TensorElement.zero(self.field, self.target_dims))

    def apply(self, e: TensorElement) -> TensorElement:
        if e.dims != self.source_dims:
            raise TensorError(f"cannot apply map with source {self.source_dims} to dims {e.dims}")
        f = self.field
        acc = {}
        for idx, c in e.entries.items():
            col = self.matrix.get(idx)
            if col is None:
                continue
            for t, d in col.entries.items():
                s = f.add(acc.get(t, f.zero), f.mul(c, d))
                if f.is_zero(s):
                    acc.pop(t, None)
                else:
                    acc[t] = s
        return TensorElement(f, self.target_dims, acc)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self o inner."""
        if inner.target_dims != self.source_dims:
            raise TensorError("composition dims mismatch")
        return LinearMap(self.field, inner.source_dims, self.target_dims,
                         {src: self.apply(col) for src, col in inner.matrix.items()})

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.field == other.field
            and self.source_dims == other.source_dims
            and self.target_dims == other.target_dims
            and self.matrix == other.matrix
        )

    def to_records(self):
        out = []
        for src in sorted(self.matrix):
            for rec in self.matrix[src].to_records():
                out.append(list(src) + rec)
        return out

    @classmethod
    def from_records(cls, field, source_dims, target_dims, records):
        s = len(source_dims)
        cols: dict = {}
        for rec in records:
            src = tuple(int(i) for i in rec[:s])
            cols.setdefault(src, []).append(rec[s:])
        matrix = {src: TensorElement.from_records(field, target_dims, recs)
                  for src, recs in cols.items()}
        return cls(field, source_dims, target_dims, matrix)


def pair_dual(phi: TensorElement, h: TensorElement):
    """<phi, h> for degree-1 elements written on dual bases: <e^i, e_j> = delta_ij."""
    if phi.dims != h.dims:
        raise TensorError(f"dim mismatch {phi.dims} vs {h.dims}")
    f = phi.field
    acc = f.zero
    small, big = (phi, h) if len(phi.entries) <= len(h.entries) else (h, phi)
    for idx, c in small.entries.items():
        d = big.entries.get(idx)
        if d is not None:
            acc = f.add(acc, f.mul(c, d))
    return acc


# ---------------------------------------------------------------------------
# exact sparse linear solving
# ---------------------------------------------------------------------------

def solve_unique(field, unknowns, equations):
    """Solve a linear system with a unique solution, exactly.

    `unknowns` is an iterable of hashable column keys; `equations` is a list of
    (coeffs: dict[col -> scalar], rhs: scalar).  Returns dict[col -> scalar]
    (zeros omitted) or raises NotInvertible when the system is singular or
    inconsistent.  Gauss-Jordan on sparse dict rows.
    """
    unknowns = list(unknowns)
    pivots: dict = {}  # col -> (row dict without other pivot cols, rhs)
    for coeffs, rhs in equations:
        row = dict(coeffs)
        # reduce against existing pivots
        for col in [c for c in row if c in pivots]:
            factor = row.pop(col)
            prow, prhs = pivots[col]
            for c2, v2 in prow.items():
                s = field.sub(row.get(c2, field.zero), field.mul(factor, v2))
                if field.is_zero(s):
                    row.pop(c2, None)
                else:
                    row[c2] = s
            rhs = field.sub(rhs, field.mul(factor, prhs))
        if not row:
            if not field.is_zero(rhs):
                raise NotInvertible("inconsistent linear system")
            continue
        pcol = min(row, key=lambda c: (len(str(c)), str(c)))  # deterministic
        pinv = field.inv(row.pop(pcol))
        prow = {c: field.mul(pinv, v) for c, v in row.items()}
        prhs = field.mul(pinv, rhs)
        # eliminate the new pivot column from stored rows
        for col, (orow, orhs) in list(pivots.items()):
            if pcol in orow:
                factor = orow.pop(pcol)
                for c2, v2 in prow.items():
                    s = field.sub(orow.get(c2, field.zero), field.mul(factor, v2))
                    if field.is_zero(s):
                        orow.pop(c2, None)
                    else:
                        orow[c2] = s
                pivots[col] = (orow, field.sub(orhs, field.mul(factor, prhs)))
        pivots[pcol] = (prow, prhs)
    if len(pivots) < len(unknowns):
        raise NotInvertible("singular linear system")
    sol = {}
    for col, (prow, prhs) in pivots.items():
        if prow:
            raise NotInvertible("singular linear system")  # unreachable if square+full rank
        if not field.is_zero(prhs):
            sol[col] = prhs
    return sol


def invert_matrix(field, n: int, entries: dict) -> dict:
    """Invert an n x n matrix given as dict[(i, j)] -> c (column j maps to sum_i c e_i).

    Gauss-Jordan with exact arithmetic; raises NotInvertible on singular input.
    """
    rows = [dict() for _ in range(n)]
    for (i, j), c in entries.items():
        if not field.is_zero(c):
            rows[i][j] = c
    aug = [{i: field.one} for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if col in rows[r]), None)
        if piv is None:
            raise NotInvertible("singular matrix")
        rows[col], rows[piv] = rows[piv], rows[col]
        aug[col], aug[piv] = aug[piv], aug[col]
        pinv = field.inv(rows[col][col])
        rows[col] = {j: field.mul(pinv, v) for j, v in rows[col].items()}
        aug[col] = {j: field.mul(pinv, v) for j, v in aug[col].items()}
        for r in range(n):
            if r == col:
                continue
            factor = rows[r].get(col)
            if factor is None:
                continue
            for j, v in rows[col].items():
                s = field.sub(rows[r].get(j, field.zero), field.mul(factor, v))
                if field.is_zero(s):
                    rows[r].pop(j, None)
                else:
                    rows[r][j] = s
            for j, v in aug[col].items():
                s = field.sub(aug[r].get(j, field.zero), field.mul(factor, v))
                if field.is_zero(s):
                    aug[r].pop(j, None)
                else:
                    aug[r][j] = s
    inv = {}
    for i in range(n):
        for j, v in aug[i].items():
            inv[(i, j)] = v
    return inv


class SpanBasis:
    """Incremental basis of a span of sparse vectors (dict[key -> scalar])."""

    def __init__(self, field):
        self.field = field
        self.pivots: dict = {}  # pivot key -> reduced vector (pivot coeff 1)
        self.members: list = []  # reduced basis vectors, insertion order

    def _reduce(self, vec: dict) -> dict:
        f = self.field
        vec = dict(vec)
        for key in [k for k in list(vec) if k in self.pivots]:
            factor = vec.pop(key, None)
            if factor is None:
                continue
            for k2, v2 in self.pivots[key].items():
                if k2 == key:
                    continue
                s = f.sub(vec.get(k2, f.zero), f.mul(factor, v2))
                if f.is_zero(s):
                    vec.pop(k2, None)
                else:
                    vec[k2] = s
        return {k: v for k, v in vec.items() if not f.is_zero(v)}

    def add(self, vec: dict) -> bool:
        """Add a vector to the span; True if it enlarged the span."""
        red = self._reduce(vec)
        if not red:
            return False
        f = self.field
        pkey = min(red, key=str)
        pinv = f.inv(red[pkey])
        red = {k: f.mul(pinv, v) for k, v in red.items()}
        self.pivots[pkey] = red
        self.members.append(dict(red))
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def coordinates(self, vec: dict):
        """Coordinates of vec w.r.t. the pivot set, or None if outside the span."""
        f = self.field
        vec = dict(vec)
        coords = {}
        changed = True
        while changed and vec:
            changed = False
            for key in list(vec):
                if key in self.pivots:
                    factor = vec.pop(key)
                    coords[key] = f.add(coords.get(key, f.zero), factor)
                    for k2, v2 in self.pivots[key].items():
                        if k2 == key:
                            continue
                        s = f.sub(vec.get(k2, f.zero), f.mul(factor, v2))
                        if f.is_zero(s):
                            vec.pop(k2, None)
                        else:
                            vec[k2] = s
                    changed = True
        if vec:
            return None
        return coords


# ---------------------------------------------------------------------------
# algebra-aware tensor operations
# ---------------------------------------------------------------------------

class TensorAlgebra:
    """Multiplication-aware tensor operations on H^(x)k for a fixed algebra H."""

    def __init__(self, field, dim: int, mult: LinearMap, unit: TensorElement):
        if mult.source_dims != (dim, dim) or mult.target_dims != (dim,):
            raise TensorError("mult table must be H(x)H -> H")
        if unit.dims != (dim,):
            raise TensorError("unit must be degree 1")
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = unit
        self._rows = {src: col.entries for src, col in mult.matrix.items()}

    # -- degree-1 helpers (plain dicts idx -> scalar on the hot paths) ----
    def row(self, i: int, j: int) -> dict:
        return self._rows.get((i, j), {})

    def vec_mul(self, u: dict, v: dict) -> dict:
        f = self.field
        acc: dict = {}
        for (a,), ca in u.items():
            for (b,), cb in v.items():
                c = f.mul(ca, cb)
                for k, ck in self.row(a, b).items():
                    s = f.add(acc.get(k, f.zero), f.mul(c, ck))
                    if f.is_zero(s):
                        acc.pop(k, None)
                    else:
                        acc[k] = s
        return acc

    def elt(self, entries: dict) -> TensorElement:
        return TensorElement(self.field, (self.dim,), entries)

    def basis_elt(self, i: int) -> TensorElement:
        return TensorElement.basis(self.field, (self.dim,), (i,))

    def mul_elts(self, *elts: TensorElement) -> TensorElement:
        acc = elts[0].entries
        for e in elts[1:]:
            acc = self.vec_mul(acc, e.entries)
        return self.elt(acc)

    def unit_tensor(self, k: int) -> TensorElement:
        out = TensorElement.scalar(self.field, self.field.one)
        for _ in range(k):
            out = out.tensor(self.unit)
        return out

    # -- spec operations ---------------------------------------------------
    def leg_multiply(self, a: TensorElement, b: TensorElement) -> TensorElement:
        """Componentwise product in H^(x)k."""
        if a.dims != b.dims:
            raise TensorError(f"degree/dim mismatch: {a.dims} vs {b.dims}")
        if any(d != self.dim for d in a.dims):
            raise TensorError("legs must live in the ambient algebra")
        f = self.field
        k = a.degree
        acc: dict = {}
        for s, cs in a.entries.items():
            for t, ct in b.entries.items():
                partial = {(): f.mul(cs, ct)}
                for l in range(k):
                    rowl = self.row(s[l], t[l])
                    if not rowl:
                        partial = {}
                        break
                    nxt = {}
                    for pref, c in partial.items():
                        for (m,), cm in rowl.items():
                            key = pref + (m,)
                            v = f.add(nxt.get(key, f.zero), f.mul(c, cm))
                            nxt[key] = v
                    partial = nxt
                for key, c in partial.items():
                    v = f.add(acc.get(key, f.zero), c)
                    if f.is_zero(v):
                        acc.pop(key, None)
                    else:
                        acc[key] = v
        return TensorElement(f, a.dims, acc)

    def product(self, *factors: TensorElement) -> TensorElement:
        acc = factors[0]
        for e in factors[1:]:
            acc = self.leg_multiply(acc, e)
        return acc

    def embed_legs(self, e: TensorElement, positions, m: int) -> TensorElement:
        """E^{n_1...n_k}: e's legs at `positions` (1-based), unit elsewhere."""
        positions = [p - 1 for p in positions]
        if len(positions) != e.degree:
            raise TensorError("positions must match degree")
        if len(set(positions)) != len(positions):
            raise TensorError("slot collision")
        if any(not 0 <= p < m for p in positions):
            raise TensorError("slot out of range")
        free = [s for s in range(m) if s not in positions]
        f = self.field
        out: dict = {}
        unit_items = list(self.unit.entries.items())
        for idx, c in e.entries.items():
            base = [0] * m
            for p, i in zip(positions, idx):
                base[p] = i
            for combo in iproduct(unit_items, repeat=len(free)):
                key = list(base)
                coeff = c
                for s, ((j,), cj) in zip(free, combo):
                    key[s] = j
                    coeff = f.mul(coeff, cj)
                key = tuple(key)
                v = f.add(out.get(key, f.zero), coeff)
                if f.is_zero(v):
                    out.pop(key, None)
                else:
                    out[key] = v
        return TensorElement(f, (self.dim,) * m, out)

    def embed_scalar(self, c, m: int) -> TensorElement:
        return self.unit_tensor(m).scale(c)

    def fuse(self, e: TensorElement, i: int, j: int) -> TensorElement:
        """Replace leg i by (leg i . leg j) and drop leg j (1-based legs)."""
        i, j = i - 1, j - 1
        if i == j or not (0 <= i < e.degree and 0 <= j < e.degree):
            raise TensorError("invalid legs to fuse")
        f = self.field
        keep = [l for l in range(e.degree) if l != j]
        pos_i = keep.index(i)
        acc: dict = {}
        for idx, c in e.entries.items():
            rowp = self.row(idx[i], idx[j])
            rest = tuple(idx[l] for l in keep)
            for (m,), cm in rowp.items():
                key = rest[:pos_i] + (m,) + rest[pos_i + 1:]
                v = f.add(acc.get(key, f.zero), f.mul(c, cm))
                if f.is_zero(v):
                    acc.pop(key, None)
                else:
                    acc[key] = v
        dims = tuple(e.dims[l] for l in keep)
        return TensorElement(f, dims, acc)

    def invert_element(self, a: TensorElement) -> TensorElement:
        """Two-sided inverse of a in H^(x)k via an exact linear solve."""
        k = a.degree
        if any(d != self.dim for d in a.dims):
            raise TensorError("invert_element needs uniform legs in H")
        unit = self.unit_tensor(k)
        # unknowns x_t with sum_t x_t (e_t . a) = unit; equations indexed by target tuple
        eqs: dict = {}
        f = self.field
        all_tuples = list(iproduct(range(self.dim), repeat=k))
        for t in all_tuples:
            prod = self.leg_multiply(TensorElement.basis(f, a.dims, t), a)
            for tgt, c in prod.entries.items():
                eqs.setdefault(tgt, {})[t] = c
        equations = []
        seen = set(eqs) | set(unit.entries)
        for tgt in seen:
            equations.append((eqs.get(tgt, {}), unit.entries.get(tgt, f.zero)))
        try:
            sol = solve_unique(f, all_tuples, equations)
        except NotInvertible as exc:
            raise NotInvertible(f"element is not invertible: {exc}") from exc
        x = TensorElement(f, a.dims, sol)
        if self.leg_multiply(x, a) != unit or self.leg_multiply(a, x) != unit:
            raise NotInvertible("one-sided inverse failure")
        return x


def apply_on_leg(lmap: LinearMap, e: TensorElement, leg: int) -> TensorElement:
    """Apply a map with source degree 1 on the given leg (1-based)."""
    leg = leg - 1
    if len(lmap.source_dims) != 1:
        raise TensorError("apply_on_leg needs a source-degree-1 map")
    if not 0 <= leg < e.degree:
        raise TensorError(f"invalid leg {leg + 1} for degree {e.degree}")
    if e.dims[leg] != lmap.source_dims[0]:
        raise TensorError("leg dim does not match map source")
    f = e.field
    acc: dict = {}
    tdims = lmap.target_dims
    for idx, c in e.entries.items():
        col = lmap.matrix.get((idx[leg],))
        if col is None:
            continue
        pre, post = idx[:leg], idx[leg + 1:]
        for t, d in col.entries.items():
            key = pre + t + post
            s = f.add(acc.get(key, f.zero), f.mul(c, d))
            if f.is_zero(s):
                acc.pop(key, None)
            else:
                acc[key] = s
    dims = e.dims[:leg] + tdims + e.dims[leg + 1:]
    return TensorElement(f, dims, acc)
