import pytest

from quasidouble.field import QQ
from quasidouble.instances import (
    GroupPresentation,
    ThreeCocycle,
    function_algebra,
    group_algebra,
)
from quasidouble.quasihopf import (
    GaugeTransformation,
    NotBijective,
    NotNormalizable,
    QuasiHopfAlgebra,
    antipode_inverse,
    normalize_alpha_beta,
    twist,
    validate_quasi_bialgebra,
    validate_quasi_hopf,
)
from quasidouble.tensor import LinearMap, TensorElement


def test_axiom_suite_all_bundled(bundled):
    for name, H in bundled.items():
        rep = validate_quasi_hopf(H)
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_nontrivial_reassociator(fz2_omega):
    ops = fz2_omega.ops
    assert fz2_omega.phi != ops.unit_tensor(3)


def test_sweedler_antipode_square_not_identity(sweedler):
    H, _ = sweedler
    x = H.basis_elt(2)
    assert H.s(H.s(x)) == x.scale(QQ.of_int(-1))


def _corrupt(H, **overrides):
    kw = dict(mult=H.mult, unit=H.unit, comult=H.comult, counit=H.counit,
              phi=H.phi, phi_inv=H.phi_inv, antipode=H.antipode,
              alpha=H.alpha, beta=H.beta)
    kw.update(overrides)
    return QuasiHopfAlgebra(
        H.field, H.dim, H.basis_labels, kw["mult"], kw["unit"], kw["comult"],
        kw["counit"], kw["phi"], kw["phi_inv"], antipode=kw["antipode"],
        alpha=kw["alpha"], beta=kw["beta"])


def test_bad_phi_normalization_fails_q4(kz2):
    # Phi = 1 (x) 1 (x) g breaks the counit normalization of the reassociator
    f = kz2.field
    g = kz2.basis_elt(1)
    phi = kz2.unit.tensor(kz2.unit).tensor(g)
    bad = _corrupt(kz2, phi=phi, phi_inv=kz2.ops.invert_element(phi))
    rep = validate_quasi_bialgebra(bad)
    failed = {c.label for c in rep.failures()}
    assert "(q4)" in failed
    q4 = next(c for c in rep.checks if c.label == "(q4)")
    assert q4.witness is not None


def test_zero_alpha_fails_q6(kz2):
    bad = _corrupt(kz2, alpha=TensorElement.zero(kz2.field, (2,)))
    rep = validate_quasi_hopf(bad)
    assert any(c.label == "(q6)" and not c.passed for c in rep.checks)


def test_singular_antipode_not_bijective(kz2):
    f = kz2.field
    collapse = LinearMap(f, (2,), (2,), {
        (0,): kz2.basis_elt(0), (1,): kz2.basis_elt(0)})
    bad = _corrupt(kz2, antipode=collapse)
    with pytest.raises(NotBijective):
        antipode_inverse(bad)
    rep = validate_quasi_hopf(bad)
    assert any(c.label == "S-bijective" and not c.passed for c in rep.checks)


def test_normalize_alpha_beta(sweedler):
    H, _ = sweedler
    f = H.field
    scaled = _corrupt(H, alpha=H.alpha.scale(f.of_int(3)),
                      beta=H.beta.scale(f.inv(f.of_int(3))))
    assert validate_quasi_hopf(scaled).all_passed
    norm = normalize_alpha_beta(scaled)
    assert norm.alpha == H.alpha and norm.beta == H.beta

    broken = _corrupt(H, alpha=H.alpha.scale(f.of_int(2)))
    with pytest.raises(NotNormalizable):
        normalize_alpha_beta(broken)


def _two_cochain_gauge(H, G, beta_vals):
    """F = sum beta(x,y)^{-1} d_x (x) d_y on a function algebra."""
    f = H.field
    n = G.order
    F = TensorElement(f, (n, n), {
        (x, y): f.inv(beta_vals(x, y)) for x in range(n) for y in range(n)})
    F_inv = TensorElement(f, (n, n), {
        (x, y): beta_vals(x, y) for x in range(n) for y in range(n)})
    return GaugeTransformation(F, F_inv)


def test_twist_by_coboundary_matches_cocycle_shift():
    G = GroupPresentation.direct_product(
        GroupPresentation.cyclic(2), GroupPresentation.cyclic(2))
    omega = ThreeCocycle.z2z2_product()
    H = function_algebra(G, omega)
    f = H.field
    m1 = f.neg(f.one)

    def beta_vals(x, y):
        return m1 if (x, y) == (2, 1) else f.one

    def dbeta(a, b, c):
        num = f.mul(beta_vals(b, c), beta_vals(a, G.mul(b, c)))
        den = f.mul(beta_vals(G.mul(a, b), c), beta_vals(a, b))
        return f.div(num, den)

    gauged = twist(H, _two_cochain_gauge(H, G, beta_vals))
    assert validate_quasi_hopf(gauged).all_passed

    shifted = ThreeCocycle.from_function(
        G, f, lambda a, b, c: f.mul(omega(a, b, c), dbeta(a, b, c)))
    H2 = function_algebra(G, shifted)
    assert gauged.phi == H2.phi
    assert gauged.comult.matrix == H2.comult.matrix


def test_twist_round_trip(sweedler):
    H, _ = sweedler
    f = H.field
    # a non-symmetric invertible gauge with the right counit normalization
    F = H.unit.tensor(H.unit).add(H.basis_elt(2).tensor(H.basis_elt(3)))
    F_inv = H.ops.invert_element(F)
    gt = GaugeTransformation(F, F_inv)
    assert gt.validate(H).all_passed
    gauged = twist(H, gt)
    assert validate_quasi_hopf(gauged).all_passed
    back = twist(gauged, GaugeTransformation(F_inv, F))
    assert back.comult.matrix == H.comult.matrix
    assert back.phi == H.phi
    assert back.alpha == H.alpha and back.beta == H.beta
