from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from spinbundles import charclass, lambda2
from spinbundles.charclass import TORI, Weight, weights_of_action
from spinbundles.exact import ONE, circle_point, gq
from spinbundles.polys import GradedPoly

X = ("x1", "x2", "x3")


def to_sympy(p: GradedPoly):
    syms = sympy.symbols(p.variables)
    return sum(c * sympy.prod([s ** e for s, e in zip(syms, exps)]) for exps, c in p.terms)


def truncate(expr, variables, deg):
    poly = sympy.Poly(sympy.expand(expr), *sympy.symbols(variables))
    return sum(c * sympy.prod([s ** e for s, e in zip(sympy.symbols(variables), m)])
               for m, c in poly.terms() if sum(m) <= deg)


def torus_points(rank):
    return [gq(*circle_point(t)) for t in (Fraction(1, 2), Fraction(2, 7), Fraction(-3, 5))[:rank]]


@pytest.mark.parametrize("tag", ["Spin3", "Spin4", "Spin5", "Spin6"])
def test_pi_weights_match_trace_of_action(tag):
    """Character oracle: trace of the induced rotation equals sum of 2 Re(z^w) plus zero weights."""
    torus = TORI[tag]
    ws = weights_of_action(torus, "pi")
    for shift in range(3):
        pts = [p ** (shift + 1) for p in torus_points(torus.rank)]
        a = lambda2.induced_orthogonal_action(torus.embed(pts), torus.fixed_forms)
        expected = ONE * ws.zero_count
        for w in ws.weights:
            val = ONE
            for p, e in zip(pts, w.exponents):
                val = val * p ** e
            expected = expected + gq(2 * val.re)
        assert a.trace() == expected


def test_weight_lists():
    v = lambda k: TORI[k].variables
    assert weights_of_action(TORI["Spin3"], "pi").render(v("Spin3")) == ["-2*x"]
    assert weights_of_action(TORI["Spin4"], "pi").render(v("Spin4")) == ["-x1 - x2", "-x1 + x2"]
    assert weights_of_action(TORI["Spin5"], "pi").zero_count == 1
    assert weights_of_action(TORI["Spin6"], "pi").render(v("Spin6")) == ["-x2 - x3", "-x1 - x3", "-x1 - x2"]


def test_n3_weight_is_plus_minus_2x():
    (w,) = weights_of_action(TORI["Spin3"], "pi").weights
    assert {w.exponents, (-w).exponents} == {(2,), (-2,)}


@pytest.mark.parametrize("tag", ["Spin3", "Spin4", "Spin5", "Spin6"])
def test_torus_inside_stabilizer(tag):
    assert charclass.check_torus_action(TORI[tag], torus_points(TORI[tag].rank))


weights3 = st.lists(st.tuples(*[st.integers(-3, 3)] * 3).map(Weight), min_size=1, max_size=4)


@given(weights3)
def test_pontrjagin_and_chern_match_sympy(ws):
    syms = sympy.symbols(X)
    lin = [sum(e * s for e, s in zip(w.exponents, syms)) for w in ws]
    assert sympy.expand(to_sympy(charclass.pontrjagin_total(ws, X)) - truncate(sympy.prod([1 + l ** 2 for l in lin]), X, 3)) == 0
    assert sympy.expand(to_sympy(charclass.chern_total(ws, X)) - truncate(sympy.prod([1 + l for l in lin]), X, 3)) == 0


@given(weights3)
def test_sp_equals_signed_even_chern(ws):
    assert charclass.sp_total(ws, X) == charclass.sp_from_chern(ws, X)


def test_euler_rejects_zero_weight():
    with pytest.raises(charclass.WeightError):
        charclass.euler_top([Weight((0, 0, 0))], X)
    with pytest.raises(charclass.WeightError):
        charclass.euler_top(weights_of_action(TORI["Spin5"], "pi"), ("x1", "x2"))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_lemma_holds(n):
    rep = charclass.verify_lemma_cohomo(n)
    assert rep.holds, [i.as_dict() for i in rep.identities]


def test_n4_sign_flips_with_labels():
    a = charclass.verify_lemma_cohomo(4)
    b = charclass.verify_lemma_cohomo(4, flip_labels=True)
    assert a.holds and b.holds
    assert a.identities[1].sign == -b.identities[1].sign


def test_n6_notes_flag_repeated_weight():
    rep = charclass.verify_lemma_cohomo(6)
    assert any("repeats -x2 - x3" in n and "-x1 - x2" in n for n in rep.notes)


def test_n6_printed_weights_fail():
    assert not charclass.verify_lemma_cohomo(6, printed_weights=True).holds


def test_n6_identities_by_sympy():
    x1, x2, x3 = sympy.symbols(X)
    pi = [-x2 - x3, -x1 - x3, -x1 - x2]
    rho = [x1 + x2 + x3, -x1, -x2, -x3]
    p1 = sympy.expand(sum(w ** 2 for w in pi))
    c = sympy.expand(sympy.prod([1 + w for w in rho]))
    c2 = sum(t for t in c.as_ordered_terms() if sympy.Poly(t, x1, x2, x3).total_degree() == 2)
    c3 = sum(t for t in c.as_ordered_terms() if sympy.Poly(t, x1, x2, x3).total_degree() == 3)
    assert sympy.expand(p1 + 2 * c2) == 0
    assert sympy.expand(sympy.prod(pi) + c3) == 0


def test_out_of_range():
    with pytest.raises(ValueError):
        charclass.verify_lemma_cohomo(7)


def test_poly_rendering_order():
    p = GradedPoly.make(("x1", "x2"), 3, {(0, 2): 1, (1, 1): -3, (2, 0): 2, (0, 0): 1})
    assert str(p) == "1 + 2*x1^2 - 3*x1*x2 + x2^2"
