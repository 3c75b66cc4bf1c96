import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from spinbundles import lambda2
from spinbundles.exact import ONE, ZERO, ExactMatrix, GaussianRational, cayley_unitary, gq, random_skew_hermitian
from spinbundles.lambda2 import OMEGA, TwoForm

FIXED_DIMS = {(1,): 16, (1, 2): 8, (1, 2, 6): 4, (1, 3, 4, 5): 2, (1, 2, 5, 6): 2}
LIE_DIMS = {(1,): 10, (1, 2): 6, (1, 2, 6): 3, (1, 3, 4, 5): 1}
PATTERNS = {(1,): "Spin5", (1, 2): "Spin4", (1, 2, 6): "Spin3", (1, 3, 4, 5): "SO2", (1, 2, 5, 6): "Spin2"}


def numpy_solution_dim(indices):
    """Float oracle: dimension of {U : M U M^-1 = conj(U)} built directly in numpy."""
    ms = [np.array([[complex(z.re) + 1j * complex(z.im) for z in lambda2.form_matrix(i).row(r)] for r in range(4)])
          for i in indices]
    cols = []
    for k in range(32):
        u = np.zeros(16, dtype=complex)
        u[k // 2] = 1 if k % 2 == 0 else 1j
        u = u.reshape(4, 4)
        res = np.concatenate([(m @ u @ np.linalg.inv(m) - u.conj()).ravel() for m in ms])
        cols.append(np.concatenate([res.real, res.imag]))
    return 32 - np.linalg.matrix_rank(np.array(cols).T, tol=1e-9)


def test_omega_orthonormal_and_antiselfdual():
    for a, b in itertools.product(range(6), repeat=2):
        assert lambda2.inner(OMEGA[a], OMEGA[b]) == (ONE if a == b else ZERO)
    assert all(lambda2.antiselfdual_check(w) for w in OMEGA)


def test_selfdual_form_is_not_antiselfdual():
    f = TwoForm.from_dict({(1, 2): ONE, (3, 4): ONE})
    assert not lambda2.antiselfdual_check(f)


def test_hodge_star_is_involution():
    for p in lambda2.PAIRS:
        e = TwoForm.from_dict({p: ONE})
        assert lambda2.hodge_star(lambda2.hodge_star(e)) == e


@pytest.mark.parametrize("idx", sorted(FIXED_DIMS))
def test_stabilizer_dimensions(idx):
    spec = lambda2.stabilizer_space(idx)
    assert spec.real_dimension == FIXED_DIMS[idx]
    assert spec.real_dimension == numpy_solution_dim(idx)


@pytest.mark.parametrize("idx", sorted(PATTERNS))
def test_pattern_match_both_directions(idx):
    spec = lambda2.stabilizer_space(idx)
    assert lambda2.pattern_match(spec, PATTERNS[idx])
    others = [p for p in lambda2.TEMPLATES if p != PATTERNS[idx]]
    assert not any(lambda2.pattern_match(spec, p) for p in others)


def test_pattern_unknown_name():
    with pytest.raises(KeyError):
        lambda2.pattern_match(lambda2.stabilizer_space((1,)), "Spin7")


def test_bad_index():
    with pytest.raises(ValueError):
        lambda2.stabilizer_space((7,))


@pytest.mark.parametrize("idx", sorted(LIE_DIMS))
def test_lie_algebra_dimensions(idx):
    assert len(lambda2.lie_algebra_basis(idx)) == LIE_DIMS[idx]


def test_star_and_transpose_conditions_agree_on_unitaries():
    rng = random.Random(5)
    for _ in range(10):
        u = cayley_unitary(random_skew_hermitian(rng, 4, bound=2))
        for i in range(1, 7):
            assert lambda2.star_condition(u, i) == lambda2.transpose_condition(u, i)


@pytest.mark.parametrize("idx", [(1,), (1, 2), (1, 2, 6), (1, 3, 4, 5)])
def test_sampled_actions_special_orthogonal(idx):
    spec = lambda2.stabilizer_space(idx)
    for u in lambda2.sample_stabilizer(idx, 20, seed=11):
        assert u.is_unitary() and spec.contains(u)
        a = lambda2.induced_orthogonal_action(u, idx)
        assert lambda2.is_special_orthogonal(a)
        assert lambda2.induced_orthogonal_action(u.scale(-1), idx) == a


def test_block_form_members():
    z, w = gq(Fraction(3, 5)), gq(0, Fraction(4, 5))
    u = lambda2.spin3_matrix(z, w)
    assert u.is_unitary() and lambda2.stabilizer_space((1, 2, 6)).contains(u)
    r = lambda2.so2_matrix(Fraction(5, 13), Fraction(12, 13))
    assert r.is_unitary() and lambda2.stabilizer_space((1, 3, 4, 5)).contains(r)


def test_spin3_acts_on_omega345_by_rotation():
    z, w = gq(Fraction(3, 5)), gq(0, Fraction(4, 5))
    a = lambda2.induced_orthogonal_action(lambda2.spin3_matrix(z, w), (1, 2, 6))
    assert a.rows == 3 and lambda2.is_special_orthogonal(a)
    assert a != ExactMatrix.identity(3)


def test_non_stabilizer_raises_span_error():
    u = ExactMatrix.diag([gq(0, 1), ONE, ONE, ONE])
    with pytest.raises(lambda2.SpanNotPreserved):
        lambda2.induced_orthogonal_action(u, (1,))


def test_kronecker_fixed_pair():
    u = lambda2.spin3_matrix(gq(Fraction(3, 5)), gq(0, Fraction(4, 5)))
    r = lambda2.so2_matrix(Fraction(5, 13), Fraction(12, 13))
    rep = lambda2.kronecker_lift_check(u, r)
    assert rep.ok


def test_kronecker_sampled():
    rng = random.Random(2)
    for _ in range(20):
        assert lambda2.kronecker_lift_check(lambda2.sample_spin3(rng), lambda2.sample_so2(rng)).ok


def test_kronecker_wrong_permutation_fails():
    u = lambda2.spin3_matrix(gq(Fraction(3, 5)), gq(0, Fraction(4, 5)))
    r = lambda2.so2_matrix(Fraction(5, 13), Fraction(12, 13))
    rep = lambda2.kronecker_lift_check(u, r)
    src = (2, 3, 4, 5, 6)
    order = (2, 3, 4, 5, 6)
    p = ExactMatrix.from_rows([[ONE if src[i] == order[j] else ZERO for j in range(5)] for i in range(5)])
    assert p.T @ rep.lift_action @ p != rep.factor_action


def test_kronecker_rejects_wrong_shape():
    with pytest.raises(ValueError):
        lambda2.kronecker_lift_check(lambda2.so2_matrix(Fraction(3, 5), Fraction(4, 5)),
                                     lambda2.so2_matrix(Fraction(3, 5), Fraction(4, 5)))
