import pytest

from quasidouble import biproduct as bp
from quasidouble.derived import derive_all
from quasidouble.dual import build_dual
from quasidouble.quasihopf import validate_quasi_hopf
from quasidouble.quasitriangular import validate_r_matrix
from quasidouble.tensor import apply_on_leg


@pytest.fixture(scope="module")
def pipelines(qt_instances, doubles):
    out = []
    for name, H, rm in qt_instances:
        D = doubles[name]
        pi = bp.projection_pi(H, rm, D)
        pd = bp.bi_extract(H, rm, D, pi)
        out.append((name, H, rm, D, pd))
    return out


def test_projection_morphism_suite(pipelines):
    for name, H, rm, D, pd in pipelines:
        rep = bp.verify_projection(H, rm, D, pd.pi)
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_projected_r_matrix_certifies(pipelines):
    for name, H, rm, D, pd in pipelines:
        R = bp.extract_r_from_projection(H, D, pd.pi)
        assert R == rm.R, name
        from quasidouble.quasitriangular import RMatrix
        cert = validate_r_matrix(H, RMatrix.from_r(H, R))
        assert cert.certified, name


def test_big_pi_membership_and_lemma(pipelines):
    for name, H, rm, D, pd in pipelines:
        rep = bp.verify_membership(H, D, pd)
        assert rep.all_passed, name
        rep = bp.verify_pi_lemma(H, D, pd)
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_transported_subalgebra_is_braided_hopf(pipelines):
    for name, H, rm, D, pd in pipelines:
        rep = bp.validate_braided_hopf(pd.B)
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_closed_forms_equal_transport(pipelines):
    for name, H, rm, D, pd in pipelines:
        B = bp.braided_dual(H, rm, derive_all(H), build_dual(H, check=False))
        assert B.mult.matrix == pd.B.mult.matrix, name
        assert B.unit == pd.B.unit, name
        assert B.comult.matrix == pd.B.comult.matrix, name
        assert B.counit.matrix == pd.B.counit.matrix, name
        assert B.antipode.matrix == pd.B.antipode.matrix, name
        assert B.module.action.matrix == pd.B.module.action.matrix, name
        assert B.module.coaction.matrix == pd.B.module.coaction.matrix, name


def test_biproduct_is_quasi_hopf(pipelines):
    for name, H, rm, D, pd in pipelines:
        BxH = bp.build_biproduct(pd.B, H, check=False)
        rep = validate_quasi_hopf(BxH)
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_chi_isomorphism(pipelines):
    for name, H, rm, D, pd in pipelines:
        BxH = bp.build_biproduct(pd.B, H, check=False)
        chi = bp.chi_iso(H, rm, D, derive_all(H), build_dual(H, check=False))
        rep = bp.verify_chi(BxH, D, chi)
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_chi_matches_inclusion_composite(pipelines):
    """chi(phi x h) agrees with i(X^1) mu^{-1}(phi) i(S(X^2) alpha X^3 h)."""
    for name, H, rm, D, pd in pipelines:
        chi = bp.chi_iso(H, rm, D, derive_all(H), build_dual(H, check=False))
        f = H.field
        n = H.dim
        circ = pd.circ
        for i in range(n):
            for a in range(n):
                lhs = chi.column((i * n + a,))
                b = pd.mu_basis[i]
                rhs = type(lhs).zero(f, (D.inner.dim,))
                for (X1, X2, X3), c in H.phi.entries.items():
                    tail = D.i_D.apply(H.mul(
                        H.s(H.basis_elt(X2)), H.alpha, H.basis_elt(X3),
                        H.basis_elt(a)))
                    rhs = rhs.add(D.inner.mul(
                        D.i_D.apply(H.basis_elt(X1)), b, tail).scale(c))
                assert lhs == rhs, (name, i, a)


def test_rank_mismatch_on_bad_r(kz2):
    """A non-R-matrix gives a projection whose idempotent has wrong rank."""
    from quasidouble.double import build_double
    from quasidouble.quasitriangular import RMatrix

    D = build_double(kz2, check=False)
    bad = RMatrix.from_r(kz2, kz2.basis_elt(1).tensor(kz2.basis_elt(1)))
    with pytest.raises(bp.RankMismatch):
        bp.bi_extract(kz2, bad, D)
