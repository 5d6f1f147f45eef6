"""Acceptance suite: one test per acceptance criterion, all exact.

Criteria cover the axiom suites, the derived-identity suite, the quantum
double with its generating relations, a classical-double oracle, the
projection pipeline, quasitriangular invariants, the biproduct theorem,
the transport of the braided dual structures, the Yetter-Drinfeld layer,
the double tower, and rejection of corrupted inputs.
"""

import json

import pytest

from quasidouble import biproduct as bp
from quasidouble import cli, document
from quasidouble.derived import derive_all, verify_derived
from quasidouble.double import build_double, verify_generating_relations
from quasidouble.dual import build_dual
from quasidouble.field import QQ
from quasidouble.instances import (
    CocycleInvalid,
    GroupPresentation,
    ThreeCocycle,
)
from quasidouble.quasihopf import (
    NotBijective,
    QuasiHopfAlgebra,
    antipode_inverse,
    validate_quasi_bialgebra,
    validate_quasi_hopf,
)
from quasidouble.quasitriangular import derive_u, validate_r_matrix
from quasidouble.tensor import LinearMap, TensorElement
from quasidouble.yd import (
    braiding,
    braiding_inverse,
    module_from_qt,
    validate_yd,
    verify_hexagons,
    yd_tensor,
)


def test_criterion_01_axiom_suites(bundled):
    for name, H in bundled.items():
        rep = validate_quasi_hopf(H)
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_criterion_02_derived_identity_suite(bundled):
    for name, H in bundled.items():
        rep = verify_derived(H, derive_all(H))
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_criterion_03_double_construction(bundled):
    for name, H in bundled.items():
        if H.dim > 4:
            continue
        D = build_double(H, check=False)
        assert validate_quasi_hopf(D.inner).all_passed, name
        assert validate_r_matrix(D.inner, D.R_D).certified, name
        rep = verify_generating_relations(D)
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_criterion_04_classical_reduction_oracle(bundled):
    from test_double import classical_double_tables

    for name in ("kZ2", "kZ3/F7", "sweedler"):
        H = bundled[name]
        D = build_double(H, check=False)
        mult_cols, comult_cols = classical_double_tables(H, D)
        for src, col in mult_cols.items():
            assert D.inner.mult.column(src) == col, (name, src)
        for src, col in comult_cols.items():
            assert D.inner.comult.column(src) == col, (name, src)


def test_criterion_05_projection_forward(qt_instances, doubles):
    for name, H, rm in qt_instances:
        D = doubles[name]
        pi = bp.projection_pi(H, rm, D)
        rep = bp.verify_projection(H, rm, D, pi)
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"
        assert bp.extract_r_from_projection(H, D, pi) == rm.R, name


def test_criterion_06_quasitriangular_invariants(qt_instances):
    for name, H, rm in qt_instances:
        cert = validate_r_matrix(H, rm)
        assert cert.certified, name
        u, u_inv = derive_u(H, rm.R)
        assert H.mul(u, u_inv) == H.unit and H.mul(u_inv, u) == H.unit, name
        assert H.eps_scalar(u) == H.field.one, name
        for a in range(H.dim):
            h = H.basis_elt(a)
            assert H.s(H.s(h)) == H.mul(u, h, u_inv), (name, a)
        der = derive_all(H)
        lhs = H.ops.product(der.f.permute((2, 1)), rm.R, der.f_inv)
        assert lhs == H.s_leg(H.s_leg(rm.R, 1), 2), name


def test_criterion_07_biproduct_theorem(qt_instances, doubles):
    for name, H, rm in qt_instances:
        D = doubles[name]
        pd = bp.bi_extract(H, rm, D)
        BxH = bp.build_biproduct(pd.B, H, check=False)
        rep = validate_quasi_hopf(BxH)
        assert rep.all_passed, f"{name} BxH: {[c.label for c in rep.failures()]}"
        chi = bp.chi_iso(H, rm, D, derive_all(H), build_dual(H, check=False))
        rep = bp.verify_chi(BxH, D, chi)
        assert rep.all_passed, f"{name} chi: {[c.label for c in rep.failures()]}"


def test_criterion_08_braided_dual_transport(qt_instances, doubles):
    for name, H, rm in qt_instances:
        D = doubles[name]
        pd = bp.bi_extract(H, rm, D)
        B = bp.braided_dual(H, rm, derive_all(H), build_dual(H, check=False))
        assert B.mult.matrix == pd.B.mult.matrix, name
        assert B.unit == pd.B.unit, name
        assert B.comult.matrix == pd.B.comult.matrix, name
        assert B.counit.matrix == pd.B.counit.matrix, name
        assert B.antipode.matrix == pd.B.antipode.matrix, name
        assert B.module.action.matrix == pd.B.module.action.matrix, name
        assert B.module.coaction.matrix == pd.B.module.coaction.matrix, name
        rep = bp.verify_pi_lemma(H, D, pd)
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_criterion_09_yetter_drinfeld_category(qt_instances):
    for name, H, rm in qt_instances:
        B = bp.braided_dual(H, rm, derive_all(H), build_dual(H, check=False))
        M = B.module
        assert validate_yd(H, M).all_passed, name
        MM = yd_tensor(M, M)
        assert validate_yd(H, MM).all_passed, name
        c = braiding(M, M)
        c_inv = braiding_inverse(M, M)
        composed = c_inv.compose(c)
        for k in range(M.dim * M.dim):
            e = TensorElement.basis(H.field, (M.dim * M.dim,), (k,))
            assert composed.apply(e) == e, (name, k)
        assert verify_hexagons(M, M, M).all_passed, name
        rebuilt = module_from_qt(H, rm.R, M.action, M.dim)
        assert rebuilt.coaction.matrix == M.coaction.matrix, name


def test_criterion_10_double_tower(tmp_path, fz2_omega, capsys):
    path = tmp_path / "fz2w.qha"
    document.save(document.AlgebraDocument(fz2_omega), path)
    assert cli.main(["tower", str(path), "-n", "2", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["passed"]
    assert out["dims"] == [2, 4, 16]


def test_criterion_11_negative_inputs(kz2):
    # reassociator violating its counit normalization: (q4) with a witness
    phi = kz2.unit.tensor(kz2.unit).tensor(kz2.basis_elt(1))
    bad = QuasiHopfAlgebra(
        kz2.field, 2, kz2.basis_labels, kz2.mult, kz2.unit, kz2.comult,
        kz2.counit, phi, kz2.ops.invert_element(phi),
        antipode=kz2.antipode, alpha=kz2.alpha, beta=kz2.beta)
    rep = validate_quasi_bialgebra(bad)
    q4 = next(c for c in rep.checks if c.label == "(q4)")
    assert not q4.passed and q4.witness is not None

    # non-cocycle omega
    with pytest.raises(CocycleInvalid):
        ThreeCocycle.from_function(
            GroupPresentation.cyclic(2), QQ,
            lambda a, b, c: QQ.of_int(2) if a == b == c == 1 else QQ.one)

    # alpha = 0 breaks the antipode zigzag
    bad = QuasiHopfAlgebra(
        kz2.field, 2, kz2.basis_labels, kz2.mult, kz2.unit, kz2.comult,
        kz2.counit, kz2.phi, kz2.phi_inv, antipode=kz2.antipode,
        alpha=TensorElement.zero(kz2.field, (2,)), beta=kz2.beta)
    rep = validate_quasi_hopf(bad)
    assert any(c.label == "(q6)" and not c.passed for c in rep.checks)

    # singular antipode
    collapse = LinearMap(kz2.field, (2,), (2,), {
        (0,): kz2.basis_elt(0), (1,): kz2.basis_elt(0)})
    bad = QuasiHopfAlgebra(
        kz2.field, 2, kz2.basis_labels, kz2.mult, kz2.unit, kz2.comult,
        kz2.counit, kz2.phi, kz2.phi_inv, antipode=collapse,
        alpha=kz2.alpha, beta=kz2.beta)
    with pytest.raises(NotBijective):
        antipode_inverse(bad)
