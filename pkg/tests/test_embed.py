import pytest

from spinbundles import embed
from spinbundles.ktheory import CohCP3, KSPClass, divisible_by_two, sp1_of_ksp


def test_eta():
    eta = embed.eta_descriptor()
    assert eta.rank == 2
    assert eta.p1 == CohCP3(0, 0, 4)
    assert eta.w2 == 0
    # c1(H (x) H) = 2 c1(H)
    assert eta.euler == CohCP3(0, 2)
    assert eta.p1 == eta.euler * eta.euler


def test_normal_bundle():
    n = embed.normal_descriptor()
    assert n.p1 == CohCP3(0, 0, -4) == -embed.tangent_p1()
    assert n.rank == 3 and n.w2 == 0


def test_tangent_p1_from_chern_roots():
    # p(T) = (1 + x^2)^4 gives p1 = 4x^2
    assert (CohCP3(1, 0, 1) ** 4).a2 == embed.tangent_p1().a2


def test_solve_for_E():
    e0, e1 = embed.solve_for_E()
    assert e0.rank == e1.rank == 3
    assert e0.w2 == e1.w2 == 0
    assert e0.p1 == e1.p1 == CohCP3(0, 0, -8)
    assert e0.rho.free_part == e1.rho.free_part == -2
    assert {e0.rho.torsion, e1.rho.torsion} == {0, 1}


def _cand(rho):
    d = embed.eta_descriptor()
    d.rho = rho
    return d


@pytest.mark.parametrize("m", [-2, 2])
def test_select_picks_divisible(m):
    chosen = embed.select_E([_cand(KSPClass(m, 1)), _cand(KSPClass(m, 0))])
    assert chosen.rho == KSPClass(m, 0)


def test_select_neither_divisible():
    with pytest.raises(ValueError):
        embed.select_E([_cand(KSPClass(1, 0)), _cand(KSPClass(1, 1))])


def test_tensor_rewrite_trivial_factor_doubles():
    expr = embed.tensor_rewrite(embed.Split("N", -4, "2", 0))
    assert expr.all_even() and expr.sp1() == -2
    assert expr.evaluate() == KSPClass(-2, 0)


def test_tensor_rewrite_both_trivial():
    expr = embed.tensor_rewrite(embed.Split("3", 0, "2", 0))
    assert [t.coeff for t in expr.terms] == [2]
    assert expr.evaluate() == KSPClass()


def test_tensor_rewrite_shape_error():
    with pytest.raises(ValueError):
        embed.tensor_rewrite(embed.Split("a", 0, "b", 0, rank3=4))


def test_tensor_sp1_matches_rank5_relation():
    # rho[xi3 + xi2] has sp1 = p1(xi3 + xi2) / 2 with p1(xi2) = e^2
    for p1_3 in (-8, -4, 0, 4):
        for e2 in (-4, -2, 2, 4):
            expr = embed.tensor_rewrite(embed.Split("a", p1_3, "b", e2))
            assert expr.sp1() * 2 == p1_3 + e2 * e2


def test_odd_unknown_torsion_refuses_to_evaluate():
    expr = embed.KSPExpr((embed.Term(1, embed.NamedClass("q", 1), "r"),))
    with pytest.raises(embed.EmbeddingError):
        expr.evaluate()


def test_full_certificate():
    cert = embed.verify_embedding()
    assert cert.verdict
    assert cert.failed_step is None
    assert [s.label for s in cert.steps] == ["i", "ii", "iii", "iv"]
    assert cert.steps[0].witness["p1(E+eta)"] == "-4x^2" == cert.steps[0].witness["p1(N+2)"]
    assert cert.divisible_E_eta and cert.divisible_N2
    assert cert.rho_E_eta == cert.rho_N2 == KSPClass(-2, 0)
    assert sp1_of_ksp(cert.rho_E_eta) == -2
    assert cert.steps[2].witness["all coefficients even"]


def test_tampered_certificate_fails_at_iii():
    cert = embed.verify_embedding(tamper=True)
    assert not cert.verdict
    assert cert.failed_step == "iii"
    assert cert.chosen.rho == KSPClass(-2, 1)


def test_label_independence():
    a = embed.verify_embedding()
    b = embed.verify_embedding(swap_labels=True)
    assert a.verdict == b.verdict
    assert a.chosen.rho == b.chosen.rho


def test_equality_criterion_in_z_plus_z2():
    for a in range(-4, 5, 2):
        x, y = KSPClass(a, 0), KSPClass(a, 0)
        assert divisible_by_two(x) and divisible_by_two(y) and x == y
        assert KSPClass(a, 0) != KSPClass(a, 1)


def test_axioms_are_labelled():
    cert = embed.verify_embedding()
    assert all("trusted fact" in status for _, status in cert.axioms)
