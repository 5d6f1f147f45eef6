import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasidouble.field import QQ
from quasidouble.tensor import (
    LinearMap,
    NotInvertible,
    SpanBasis,
    TensorAlgebra,
    TensorElement,
    TensorError,
    apply_on_leg,
    invert_matrix,
    pair_dual,
    solve_unique,
)


def elt(dims, entries):
    return TensorElement(QQ, dims, {k: QQ.of_int(v) for k, v in entries.items()})


small = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)),
    st.integers(-5, 5).filter(bool), max_size=5)


@given(small, small)
def test_add_commutes(a, b):
    x, y = elt((3, 3), a), elt((3, 3), b)
    assert x.add(y) == y.add(x)


@given(small, st.integers(-4, 4), st.integers(-4, 4))
def test_scale_linear(a, s, t):
    x = elt((3, 3), a)
    lhs = x.scale(QQ.of_int(s)).add(x.scale(QQ.of_int(t)))
    assert lhs == x.scale(QQ.of_int(s + t))


def test_permute_semantics():
    x = elt((2, 3, 4), {(1, 2, 3): 1})
    # new leg j carries old leg perm[j]
    y = x.permute((3, 1, 2))
    assert y.dims == (4, 2, 3)
    assert y.entries == {(3, 1, 2): QQ.one}
    assert y.permute((2, 3, 1)) == x


def test_permute_involution_on_swap():
    x = elt((2, 2), {(0, 1): 2, (1, 0): 3})
    assert x.permute((2, 1)).permute((2, 1)) == x


def test_tensor_and_records_round_trip():
    x = elt((2,), {(0,): 1, (1,): -2})
    y = elt((3,), {(2,): 5})
    z = x.tensor(y)
    assert z.dims == (2, 3)
    back = TensorElement.from_records(QQ, z.dims, z.to_records())
    assert back == z


def test_records_sorted():
    x = elt((2, 2), {(1, 1): 1, (0, 1): 2, (1, 0): 3})
    recs = x.to_records()
    assert recs == sorted(recs)


def test_pair_dual():
    phi = elt((3,), {(0,): 2, (2,): 1})
    h = elt((3,), {(0,): 1, (1,): 7})
    assert pair_dual(phi, h) == QQ.of_int(2)


def _z2_algebra():
    mult = LinearMap(QQ, (2, 2), (2,), {
        (a, b): TensorElement.basis(QQ, (2,), ((a + b) % 2,))
        for a in range(2) for b in range(2)})
    unit = TensorElement.basis(QQ, (2,), (0,))
    return TensorAlgebra(QQ, 2, mult, unit)


def test_leg_multiply_and_product():
    ops = _z2_algebra()
    a = elt((2, 2), {(1, 0): 1})
    b = elt((2, 2), {(1, 1): 1})
    assert ops.leg_multiply(a, b) == elt((2, 2), {(0, 1): 1})
    assert ops.product(a, b, b) == elt((2, 2), {(1, 0): 1})


def test_embed_legs_pads_with_unit():
    ops = _z2_algebra()
    a = elt((2,), {(1,): 1})
    e = ops.embed_legs(a, (2,), 3)
    assert e == elt((2, 2, 2), {(0, 1, 0): 1})
    with pytest.raises(TensorError):
        ops.embed_legs(a, (1, 2), 3)


def test_fuse():
    ops = _z2_algebra()
    a = elt((2, 2, 2), {(1, 1, 0): 3})
    assert ops.fuse(a, 1, 2) == elt((2, 2), {(0, 0): 3})


def test_invert_element():
    ops = _z2_algebra()
    g = elt((2,), {(1,): 1})
    inv = ops.invert_element(g)
    assert ops.leg_multiply(g, inv) == ops.unit_tensor(1)
    one_plus_g = elt((2,), {(0,): 1, (1,): 1})
    one_minus_g = elt((2,), {(0,): 1, (1,): -1})
    assert ops.leg_multiply(one_plus_g, one_minus_g).is_zero()
    with pytest.raises(NotInvertible):
        ops.invert_element(one_plus_g)


def test_apply_on_leg_and_counit_shape():
    ops = _z2_algebra()
    swap = LinearMap(QQ, (2,), (2,), {
        (0,): TensorElement.basis(QQ, (2,), (1,)),
        (1,): TensorElement.basis(QQ, (2,), (0,))})
    x = elt((2, 2), {(0, 1): 4})
    assert apply_on_leg(swap, x, 1) == elt((2, 2), {(1, 1): 4})
    drop = LinearMap(QQ, (2,), (), {
        (0,): TensorElement.scalar(QQ, QQ.one),
        (1,): TensorElement.scalar(QQ, QQ.one)})
    assert apply_on_leg(drop, x, 2) == elt((2,), {(0,): 4})


def test_linear_map_compose_identity():
    swap = LinearMap(QQ, (2,), (2,), {
        (0,): TensorElement.basis(QQ, (2,), (1,)),
        (1,): TensorElement.basis(QQ, (2,), (0,))})
    ident = LinearMap.identity(QQ, 2)
    assert swap.compose(swap).matrix == ident.matrix


def test_solve_unique_and_invert_matrix():
    # x + y = 3, x - y = 1
    sol = solve_unique(QQ, ["x", "y"], [
        ({"x": QQ.one, "y": QQ.one}, QQ.of_int(3)),
        ({"x": QQ.one, "y": QQ.of_int(-1)}, QQ.one)])
    assert sol == {"x": QQ.of_int(2), "y": QQ.one}
    inv = invert_matrix(QQ, 2, {(0, 0): QQ.of_int(2), (1, 1): QQ.of_int(4)})
    assert inv[(0, 0)] == QQ.parse("1/2") and inv[(1, 1)] == QQ.parse("1/4")


def test_span_basis():
    span = SpanBasis(QQ)
    assert span.add({(0,): QQ.one, (1,): QQ.one})
    assert not span.add({(0,): QQ.of_int(2), (1,): QQ.of_int(2)})
    assert span.add({(0,): QQ.one})
    assert span.rank == 2
    coords = span.coordinates({(1,): QQ.of_int(3)})
    assert coords is not None
