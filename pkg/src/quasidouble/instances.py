"""Bundled validated instances: group algebras, cocycle-twisted function
algebras (genuinely quasi-Hopf), and Sweedler's four-dimensional Hopf algebra
with its triangular R-matrix.

Every constructor validates its output before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product as iproduct

from .field import QQ, Field
from .quasihopf import QuasiHopfAlgebra, validate_quasi_hopf
from .quasitriangular import RMatrix, validate_r_matrix
from .tensor import LinearMap, TensorElement


class CocycleInvalid(ValueError):
    pass


class BadCharacteristic(ValueError):
    pass


class GroupInvalid(ValueError):
    pass


@dataclass(frozen=True)
class GroupPresentation:
    """A finite group given by its multiplication table (indices 0..N-1)."""

    order: int
    table: tuple  # table[a][b] = index of a*b
    labels: tuple

    def __post_init__(self):
        n = self.order
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise GroupInvalid("table shape mismatch")
        if len(self.labels) != n:
            raise GroupInvalid("label count mismatch")
        # exhaustive group axioms for the small orders we bundle
        ident = self.identity
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise GroupInvalid(f"non-associative at {(a, b, c)}")
        for a in range(n):
            if self.table[ident][a] != a or self.table[a][ident] != a:
                raise GroupInvalid("identity fails")
            if all(self.table[a][b] != ident for b in range(n)):
                raise GroupInvalid(f"no inverse for {a}")

    @property
    def identity(self) -> int:
        for e in range(self.order):
            if all(self.table[e][a] == a for a in range(self.order)):
                return e
        raise GroupInvalid("no identity element")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        for b in range(self.order):
            if self.table[a][b] == self.identity:
                return b
        raise GroupInvalid(f"no inverse for {a}")

    @classmethod
    def cyclic(cls, n: int) -> "GroupPresentation":
        table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        labels = tuple(f"g{a}" if a else "e" for a in range(n))
        return cls(n, table, labels)

    @classmethod
    def direct_product(cls, G: "GroupPresentation", K: "GroupPresentation") -> "GroupPresentation":
        n, m = G.order, K.order
        idx = lambda a, u: a * m + u
        table = tuple(
            tuple(idx(G.mul(a, b), K.mul(u, v)) for b in range(n) for v in range(m))
            for a in range(n) for u in range(m))
        labels = tuple(f"({G.labels[a]},{K.labels[u]})" for a in range(n) for u in range(m))
        return cls(n * m, table, labels)

    @classmethod
    def symmetric3(cls) -> "GroupPresentation":
        perms = list(permutations(range(3)))
        index = {p: i for i, p in enumerate(perms)}
        table = tuple(
            tuple(index[tuple(p[q[i]] for i in range(3))] for q in perms)
            for p in perms)
        labels = tuple("".join(str(i) for i in p) for p in perms)
        return cls(6, table, labels)


@dataclass(frozen=True)
class ThreeCocycle:
    """Normalized 3-cocycle on a finite group, values in the field's units."""

    G: GroupPresentation
    field: Field
    values: tuple  # flat tuple indexed by a*N^2 + b*N + c

    def __call__(self, a: int, b: int, c: int):
        n = self.G.order
        return self.values[(a * n + b) * n + c]

    def validate(self):
        G, f = self.G, self.field
        e = G.identity
        n = G.order
        for v in self.values:
            if f.is_zero(v):
                raise CocycleInvalid("cocycle value is zero")
        for a in range(n):
            for b in range(n):
                if (self(e, a, b) != f.one or self(a, e, b) != f.one
                        or self(a, b, e) != f.one):
                    raise CocycleInvalid(f"not normalized at {(a, b)}")
        for a, b, c, d in iproduct(range(n), repeat=4):
            lhs = f.mul(self(b, c, d), f.mul(self(a, G.mul(b, c), d), self(a, b, c)))
            rhs = f.mul(self(G.mul(a, b), c, d), self(a, b, G.mul(c, d)))
            if lhs != rhs:
                raise CocycleInvalid(f"cocycle condition fails at {(a, b, c, d)}")
        return self

    @classmethod
    def trivial(cls, G: GroupPresentation, field: Field = QQ) -> "ThreeCocycle":
        return cls(G, field, (field.one,) * G.order ** 3).validate()

    @classmethod
    def from_function(cls, G: GroupPresentation, field: Field, fn) -> "ThreeCocycle":
        n = G.order
        vals = tuple(fn(a, b, c) for a in range(n) for b in range(n) for c in range(n))
        return cls(G, field, vals).validate()

    @classmethod
    def z2_sign(cls, field: Field = QQ) -> "ThreeCocycle":
        """On Z_2: omega(g,g,g) = -1, otherwise 1."""
        G = GroupPresentation.cyclic(2)
        m1 = field.neg(field.one)
        return cls.from_function(
            G, field, lambda a, b, c: m1 if a == b == c == 1 else field.one)

    @classmethod
    def z2z2_product(cls, field: Field = QQ) -> "ThreeCocycle":
        """On Z_2 x Z_2: sign cocycle pulled back along the first coordinate."""
        G = GroupPresentation.direct_product(
            GroupPresentation.cyclic(2), GroupPresentation.cyclic(2))
        m1 = field.neg(field.one)
        # element index i has first coordinate i // 2
        fn = lambda a, b, c: m1 if (a // 2) == (b // 2) == (c // 2) == 1 else field.one
        return cls.from_function(G, field, fn)


def _require_valid(H: QuasiHopfAlgebra, name: str) -> QuasiHopfAlgebra:
    rep = validate_quasi_hopf(H)
    rep.require(name)
    return H


def group_algebra(G: GroupPresentation, field: Field = QQ) -> QuasiHopfAlgebra:
    """The group algebra kG as a classical Hopf algebra with trivial Phi."""
    n = G.order
    one = field.one
    mult = LinearMap(field, (n, n), (n,), {
        (a, b): TensorElement.basis(field, (n,), (G.mul(a, b),))
        for a in range(n) for b in range(n)})
    unit = TensorElement.basis(field, (n,), (G.identity,))
    comult = LinearMap(field, (n,), (n, n), {
        (a,): TensorElement.basis(field, (n, n), (a, a)) for a in range(n)})
    counit = LinearMap(field, (n,), (), {
        (a,): TensorElement.scalar(field, one) for a in range(n)})
    phi = unit.tensor(unit).tensor(unit)
    antipode = LinearMap(field, (n,), (n,), {
        (a,): TensorElement.basis(field, (n,), (G.inv(a),)) for a in range(n)})
    H = QuasiHopfAlgebra(
        field, n, G.labels, mult, unit, comult, counit, phi, phi,
        antipode=antipode, alpha=unit, beta=unit,
        notes=f"group algebra, order {n}")
    return _require_valid(H, "group_algebra")


def function_algebra(G: GroupPresentation, omega: ThreeCocycle) -> QuasiHopfAlgebra:
    """Functions on G with reassociator from a normalized 3-cocycle.

    Basis is the delta idempotents; Delta(d_g) = sum_{xy=g} d_x (x) d_y,
    Phi = sum omega(x,y,z)^{-1} d_x (x) d_y (x) d_z, S(d_x) = d_{x^{-1}},
    alpha = 1 and beta = sum omega(x, x^{-1}, x) d_x.
    """
    omega.validate()
    field = omega.field
    n = G.order
    one = field.one
    mult = LinearMap(field, (n, n), (n,), {
        (a, a): TensorElement.basis(field, (n,), (a,)) for a in range(n)})
    unit = TensorElement(field, (n,), {(a,): one for a in range(n)})
    comult = LinearMap(field, (n,), (n, n), {
        (g,): TensorElement(field, (n, n), {
            (x, y): one for x in range(n) for y in range(n) if G.mul(x, y) == g})
        for g in range(n)})
    counit = LinearMap(field, (n,), (), {
        (G.identity,): TensorElement.scalar(field, one)})
    phi = TensorElement(field, (n, n, n), {
        (x, y, z): field.inv(omega(x, y, z))
        for x, y, z in iproduct(range(n), repeat=3)})
    phi_inv = TensorElement(field, (n, n, n), {
        (x, y, z): omega(x, y, z) for x, y, z in iproduct(range(n), repeat=3)})
    antipode = LinearMap(field, (n,), (n,), {
        (a,): TensorElement.basis(field, (n,), (G.inv(a),)) for a in range(n)})
    beta = TensorElement(field, (n,), {
        (x,): omega(x, G.inv(x), x) for x in range(n)})
    labels = tuple(f"d[{lbl}]" for lbl in G.labels)
    H = QuasiHopfAlgebra(
        field, n, labels, mult, unit, comult, counit, phi, phi_inv,
        antipode=antipode, alpha=unit, beta=beta,
        notes=f"cocycle function algebra, order {n}")
    return _require_valid(H, "function_algebra")


def sweedler_hopf(field: Field = QQ):
    """Sweedler's 4-dimensional Hopf algebra with its triangular R-matrix.

    Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx; requires char != 2.
    """
    if field.kind == "GF" and field.p == 2:
        raise BadCharacteristic("Sweedler algebra needs characteristic != 2")
    one = field.one
    m1 = field.neg(one)
    half = field.inv(field.of_int(2))
    n = 4
    e = lambda i: TensorElement.basis(field, (n,), (i,))
    zero1 = TensorElement.zero(field, (n,))
    rows = {
        (1, 1): e(0), (1, 2): e(3), (1, 3): e(2),
        (2, 1): e(3).scale(m1), (2, 2): zero1, (2, 3): zero1,
        (3, 1): e(2).scale(m1), (3, 2): zero1, (3, 3): zero1,
    }
    for j in range(n):
        rows[(0, j)] = e(j)
        rows[(j, 0)] = e(j)
    mult = LinearMap(field, (n, n), (n,), rows)
    unit = e(0)
    comult = LinearMap(field, (n,), (n, n), {
        (0,): TensorElement.basis(field, (n, n), (0, 0)),
        (1,): TensorElement.basis(field, (n, n), (1, 1)),
        (2,): TensorElement(field, (n, n), {(2, 0): one, (1, 2): one}),
        (3,): TensorElement(field, (n, n), {(3, 1): one, (0, 3): one}),
    })
    counit = LinearMap(field, (n,), (), {
        (0,): TensorElement.scalar(field, one),
        (1,): TensorElement.scalar(field, one),
    })
    phi = unit.tensor(unit).tensor(unit)
    antipode = LinearMap(field, (n,), (n,), {
        (0,): e(0), (1,): e(1), (2,): e(3).scale(m1), (3,): e(2)})
    H = QuasiHopfAlgebra(
        field, n, ("1", "g", "x", "gx"), mult, unit, comult, counit, phi, phi,
        antipode=antipode, alpha=unit, beta=unit, notes="Sweedler Hopf algebra")
    _require_valid(H, "sweedler_hopf")
    R0 = TensorElement(field, (n, n), {
        (0, 0): half, (0, 1): half, (1, 0): half, (1, 1): field.neg(half)})
    rm = RMatrix.from_r(H, R0)
    cert = validate_r_matrix(H, rm)
    cert.report.require("sweedler_hopf R-matrix")
    return H, rm
