from quasidouble.derived import derive_all, verify_derived
from quasidouble.field import QQ


def test_derived_identity_suite_all_bundled(bundled):
    for name, H in bundled.items():
        der = derive_all(H)
        rep = verify_derived(H, der)
        assert rep.all_passed, f"{name}: {[c.label for c in rep.failures()]}"


def test_classical_specializations(kz2):
    """With trivial Phi and alpha = beta = 1 everything collapses."""
    der = derive_all(kz2)
    unit2 = kz2.unit.tensor(kz2.unit)
    assert der.f == unit2
    assert der.f_inv == unit2
    assert der.gamma == unit2
    assert der.delta == unit2
    assert der.p_R == unit2
    assert der.q_R == unit2


def test_f_conjugates_antipode_comultiplication(sweedler, fz2_omega):
    """f Delta(S(h)) f^{-1} = (S (x) S)(Delta^cop(h)), checked directly."""
    H4, _ = sweedler
    for H in (H4, fz2_omega):
        der = derive_all(H)
        ops = H.ops
        for a in range(H.dim):
            h = H.basis_elt(a)
            lhs = ops.product(der.f, H.delta(H.s(h)), der.f_inv)
            rhs = H.s_leg(H.s_leg(H.delta(h).permute((2, 1)), 1), 2)
            assert lhs == rhs


def test_pq_cancellations(fz2_omega):
    """q-p composites collapse to h (x) 1 shapes; spot-check via the suite."""
    H = fz2_omega
    der = derive_all(H)
    rep = verify_derived(H, der)
    labels = {c.label for c in rep.checks}
    assert "qp-cancel" in labels and "pq-cancel" in labels
    assert rep.all_passed
