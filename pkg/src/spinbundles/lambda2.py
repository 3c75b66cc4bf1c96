"""The SU(4) model on anti-self-dual two-forms of C^4.

Two-forms are stored in the basis e_i ^ e_j (i < j, indices 1..4) with no
1/2 factors.  Forms are also handled as antisymmetric 4x4 matrices ``A`` with
``A[i][j]`` the coefficient of e_i ^ e_j; a matrix ``U`` acts by
``A -> U A U^T``.

The hermitian metric on two-forms is normalised so that the six basis forms
are orthonormal: ``<a, b> = (1/2) sum_{i<j} a_ij conj(b_ij)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import (
    DEFAULT_SEED,
    I_UNIT,
    ONE,
    ZERO,
    ExactMatrix,
    GaussianRational,
    SingularMatrixError,
    cayley_unitary,
    circle_point,
    kronecker,
    rank_of_vectors,
    real_linear_kernel,
    realify,
    sphere3_point,
)

PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

# complex-linear Hodge star on e_i ^ e_j for the standard orientation
_STAR = {
    (1, 2): (1, (3, 4)),
    (3, 4): (1, (1, 2)),
    (1, 3): (-1, (2, 4)),
    (2, 4): (-1, (1, 3)),
    (1, 4): (1, (2, 3)),
    (2, 3): (1, (1, 4)),
}


@dataclass(frozen=True)
class TwoForm:
    coeffs: tuple  # six GaussianRationals in PAIRS order

    def __post_init__(self):
        c = tuple(GaussianRational.coerce(x) for x in self.coeffs)
        if len(c) != 6:
            raise ValueError("a two-form on C^4 has six coefficients")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_dict(cls, d: dict) -> "TwoForm":
        return cls(tuple(d.get(p, ZERO) for p in PAIRS))

    def __getitem__(self, pair):
        return self.coeffs[PAIRS.index(tuple(pair))]

    def __add__(self, other):
        return TwoForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return TwoForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TwoForm(tuple(-a for a in self.coeffs))

    def scale(self, c) -> "TwoForm":
        c = GaussianRational.coerce(c)
        return TwoForm(tuple(c * a for a in self.coeffs))

    def conj(self) -> "TwoForm":
        return TwoForm(tuple(a.conj() for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_matrix(self) -> ExactMatrix:
        rows = [[ZERO] * 4 for _ in range(4)]
        for (i, j), c in zip(PAIRS, self.coeffs):
            rows[i - 1][j - 1] = c
            rows[j - 1][i - 1] = -c
        return ExactMatrix.from_rows(rows)

    @classmethod
    def from_matrix(cls, m: ExactMatrix) -> "TwoForm":
        if m.T != -m:
            raise ValueError("matrix of a two-form must be antisymmetric")
        return cls(tuple(m[i - 1, j - 1] for i, j in PAIRS))

    def __str__(self):
        parts = [f"({c})e{i}^e{j}" for (i, j), c in zip(PAIRS, self.coeffs) if c]
        return " + ".join(parts) or "0"


def _form(**kw) -> TwoForm:
    d = {}
    for key, val in kw.items():
        d[(int(key[1]), int(key[2]))] = val
    return TwoForm.from_dict(d)


def omega_basis() -> list:
    """The orthonormal basis omega_1..omega_6 of the anti-self-dual forms."""
    i = I_UNIT
    return [
        _form(e12=i, e34=i),
        _form(e12=ONE, e34=-ONE),
        _form(e13=i, e24=-i),
        _form(e13=ONE, e24=ONE),
        _form(e14=i, e23=i),
        _form(e14=ONE, e23=-ONE),
    ]


OMEGA = omega_basis()


def hodge_star(f: TwoForm) -> TwoForm:
    out = {}
    for p, c in zip(PAIRS, f.coeffs):
        s, q = _STAR[p]
        out[q] = c * s
    return TwoForm.from_dict(out)


def antiselfdual_check(f: TwoForm) -> bool:
    """Whether ``f = -*conj(f)``."""
    return f == -hodge_star(f.conj())


def inner(a: TwoForm, b: TwoForm) -> GaussianRational:
    acc = ZERO
    for x, y in zip(a.coeffs, b.coeffs):
        acc = acc + x * y.conj()
    return acc * Fraction(1, 2)


def form_matrix(i: int) -> ExactMatrix:
    """The antisymmetric matrix M_i of omega_i (i = 1..6)."""
    return OMEGA[i - 1].to_matrix()


_M = {i: form_matrix(i) for i in range(1, 7)}
_MINV = {i: m.inverse() for i, m in _M.items()}


def _check_index(i: int):
    if i not in _M:
        raise ValueError(f"form index must be in 1..6, got {i}")


def star_condition(u: ExactMatrix, i: int) -> bool:
    """Condition (*) for omega_i: ``M_i u M_i^-1 == conj(u)``.

    For unitary ``u`` this is equivalent to ``u^T M_i u == M_i``; see
    :func:`transpose_condition`.
    """
    _check_index(i)
    if u.shape != (4, 4):
        raise ValueError("condition (*) needs a 4x4 matrix")
    return _M[i] @ u @ _MINV[i] == u.conj()


star_condition_matrix = star_condition


def transpose_condition(u: ExactMatrix, i: int) -> bool:
    _check_index(i)
    return u.T @ _M[i] @ u == _M[i]


def _star_residual(i: int):
    m, minv = _M[i], _MINV[i]

    def fn(x):
        u = ExactMatrix(4, 4, tuple(x))
        return list((m @ u @ minv - u.conj()).entries)

    return fn


def _normalize_indices(indices) -> tuple:
    idx = tuple(sorted(set(indices)))
    for i in idx:
        _check_index(i)
    return idx


@dataclass(frozen=True)
class StabilizerSpec:
    fixed_set: tuple
    solution_basis: tuple  # 4x4 ExactMatrix, an R-basis of the solution space

    @property
    def real_dimension(self) -> int:
        return len(self.solution_basis)

    def contains(self, u: ExactMatrix) -> bool:
        return all(star_condition(u, i) for i in self.fixed_set)


def stabilizer_space(indices: Sequence[int]) -> StabilizerSpec:
    """R-linear solution space of condition (*) for every omega_i, i in ``indices``.

    32 real unknowns (the real and imaginary parts of the 16 entries).
    """
    idx = _normalize_indices(indices)
    fns = [_star_residual(i) for i in idx]

    def system(x):
        out = []
        for fn in fns:
            out.extend(fn(x))
        return out

    if not idx:
        basis = [[ONE if k == j else ZERO for k in range(16)] for j in range(16)]
        basis += [[I_UNIT if k == j else ZERO for k in range(16)] for j in range(16)]
    else:
        basis = real_linear_kernel(system, 16)
    return StabilizerSpec(idx, tuple(ExactMatrix(4, 4, tuple(v)) for v in basis))


def lie_algebra_basis(indices: Sequence[int]) -> list:
    """R-basis of skew-Hermitian matrices satisfying the linearised condition (*)."""
    idx = _normalize_indices(indices)
    fns = [_star_residual(i) for i in idx]

    def system(x):
        s = ExactMatrix(4, 4, tuple(x))
        out = list((s + s.H).entries)
        for fn in fns:
            out.extend(fn(x))
        return out

    return [ExactMatrix(4, 4, tuple(v)) for v in real_linear_kernel(system, 16)]


def sample_stabilizer(indices: Sequence[int], count: int, seed: int = DEFAULT_SEED, bound: int = 2) -> list:
    """Exact group elements of the stabilizer by Cayley transform of its Lie algebra.

    Cayley maps the Lie algebra of a group preserving a bilinear or
    sesquilinear form into the group, so the samples are unitary and satisfy
    ``u^T M_i u = M_i`` exactly.
    """
    rng = random.Random(seed)
    basis = lie_algebra_basis(indices)
    out = []
    while len(out) < count:
        coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in basis]
        s = ExactMatrix.zeros(4, 4)
        for c, b in zip(coeffs, basis):
            s = s + b.scale(c)
        try:
            out.append(cayley_unitary(s))
        except SingularMatrixError:
            continue
    return out


# ---------------------------------------------------------------------------
# block templates

def spin3_matrix(z: GaussianRational, w: GaussianRational) -> ExactMatrix:
    return ExactMatrix.from_rows([
        [z, -w.conj(), 0, 0],
        [w, z.conj(), 0, 0],
        [0, 0, z, -w.conj()],
        [0, 0, w, z.conj()],
    ])


def spin4_matrix(z1, w1, z2, w2) -> ExactMatrix:
    return ExactMatrix.from_rows([
        [z1, -w1.conj(), 0, 0],
        [w1, z1.conj(), 0, 0],
        [0, 0, z2, -w2.conj()],
        [0, 0, w2, z2.conj()],
    ])


def spin5_matrix(z1, w1, z2, w2, z3, w3, z4, w4) -> ExactMatrix:
    return ExactMatrix.from_rows([
        [z1, -w1.conj(), z2, -w2.conj()],
        [w1, z1.conj(), w2, z2.conj()],
        [z3, -w3.conj(), z4, -w4.conj()],
        [w3, z3.conj(), w4, z4.conj()],
    ])


def so2_matrix(a, b) -> ExactMatrix:
    return ExactMatrix.from_rows([
        [a, 0, -b, 0],
        [0, a, 0, -b],
        [b, 0, a, 0],
        [0, b, 0, a],
    ])


def spin2_torus_matrix(z) -> ExactMatrix:
    return ExactMatrix.diag([z, z.conj(), z, z.conj()])


@dataclass(frozen=True)
class Template:
    name: str
    indices: tuple  # the forms this block shape is expected to stabilise
    complex_params: int
    real_params: int
    build: object  # callable(complex params..., real params...) -> ExactMatrix

    def span(self) -> list:
        """R-spanning set: set one real degree of freedom to 1, the rest to 0."""
        out = []
        total = 2 * self.complex_params + self.real_params
        for k in range(total):
            cvals = [ZERO] * self.complex_params
            rvals = [Fraction(0)] * self.real_params
            if k < 2 * self.complex_params:
                cvals[k // 2] = ONE if k % 2 == 0 else I_UNIT
            else:
                rvals[k - 2 * self.complex_params] = Fraction(1)
            out.append(self.build(*cvals, *rvals))
        return out


TEMPLATES = {
    "Spin2": Template("Spin2", (1, 2, 5, 6), 1, 0, spin2_torus_matrix),
    "Spin3": Template("Spin3", (1, 2, 6), 2, 0, spin3_matrix),
    "Spin4": Template("Spin4", (1, 2), 4, 0, spin4_matrix),
    "Spin5": Template("Spin5", (1,), 8, 0, spin5_matrix),
    "SO2": Template("SO2", (1, 3, 4, 5), 0, 2, so2_matrix),
}


def _span_rank(mats) -> int:
    return rank_of_vectors([realify(m.entries) for m in mats])


def pattern_match(spec: StabilizerSpec, pattern: str) -> bool:
    """Whether the solution space equals the template's R-span (both inclusions, by ranks)."""
    if pattern not in TEMPLATES:
        raise KeyError(f"unknown template {pattern!r}; choose from {sorted(TEMPLATES)}")
    tmpl = TEMPLATES[pattern].span()
    sol = list(spec.solution_basis)
    r_sol = _span_rank(sol)
    r_tmpl = _span_rank(tmpl)
    r_both = _span_rank(sol + tmpl)
    return r_sol == r_tmpl == r_both


# ---------------------------------------------------------------------------
# the induced orthogonal action

class SpanNotPreserved(ValueError):
    pass


def act(u: ExactMatrix, f: TwoForm) -> TwoForm:
    return TwoForm.from_matrix(u @ f.to_matrix() @ u.T)


def omega_coordinates(f: TwoForm) -> list:
    """Real coordinates of an anti-self-dual form in the omega basis; raises if ``f`` is not in their real span."""
    coords = [inner(f, w) for w in OMEGA]
    if any(c.im for c in coords):
        raise SpanNotPreserved(f"{f} is not a real combination of the omega forms")
    back = TwoForm((ZERO,) * 6)
    for c, w in zip(coords, OMEGA):
        back = back + w.scale(c)
    if back != f:
        raise SpanNotPreserved(f"{f} is not in the real span of the omega forms")
    return [c.re for c in coords]


def complement(indices) -> tuple:
    idx = set(_normalize_indices(indices))
    return tuple(i for i in range(1, 7) if i not in idx)


def induced_orthogonal_action(u: ExactMatrix, indices: Sequence[int]) -> ExactMatrix:
    """Matrix of ``u`` acting on span{omega_j : j not in indices}, basis in increasing j."""
    comp = complement(indices)
    cols = []
    for j in comp:
        coords = omega_coordinates(act(u, OMEGA[j - 1]))
        for i in range(1, 7):
            if i not in comp and coords[i - 1] != 0:
                raise SpanNotPreserved(f"u moves omega_{j} out of the complementary span")
        cols.append([coords[i - 1] for i in comp])
    k = len(comp)
    return ExactMatrix(k, k, tuple(cols[c][r] for r in range(k) for c in range(k)))


def is_special_orthogonal(r: ExactMatrix) -> bool:
    return r.is_real() and r.T @ r == ExactMatrix.identity(r.rows) and r.det() == ONE


# ---------------------------------------------------------------------------
# Kronecker lift Sp(1) x SO(2) -> Sp(2)

# omega_2..omega_6 reordered into (Spin(3) factor: omega_3, omega_4, omega_5; Spin(2) factor: omega_2, omega_6)
BLOCK_ORDER = (3, 4, 5, 2, 6)


def block_permutation() -> ExactMatrix:
    """Permutation P with ``P^T R P`` expressing R (basis omega_2..omega_6) in BLOCK_ORDER."""
    src = (2, 3, 4, 5, 6)
    rows = [[ONE if src[r] == BLOCK_ORDER[c] else ZERO for c in range(5)] for r in range(5)]
    return ExactMatrix.from_rows(rows)


def sp1_block(u: ExactMatrix) -> ExactMatrix:
    if u != spin3_matrix(u[0, 0], u[1, 0]):
        raise ValueError("first argument does not have the Spin(3) block form")
    return u.submatrix([0, 1], [0, 1])


def so2_block(r: ExactMatrix) -> ExactMatrix:
    a, b = r[0, 0], r[2, 0]
    if not (a.is_real() and b.is_real()) or r != so2_matrix(a, b):
        raise ValueError("second argument does not have the SO(2) block form with real a, b")
    return ExactMatrix.from_rows([[a, -b], [b, a]])


@dataclass
class KroneckerReport:
    lift: ExactMatrix
    lift_unitary: bool
    in_spin5: bool
    lift_equals_product: bool
    lift_action: ExactMatrix
    factor_action: ExactMatrix
    commutes: bool
    permutation: tuple = BLOCK_ORDER
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.lift_unitary and self.in_spin5 and self.lift_equals_product and self.commutes


def kronecker_lift_check(u_sp1: ExactMatrix, r_so2: ExactMatrix) -> KroneckerReport:
    """Check that the Kronecker product realises Spin(3) x Spin(2) -> Spin(5).

    The 2x2 data ``R`` (rotation) and ``Q`` (unit quaternion) give the lift
    ``kron(R, Q)``.  Checks that it is unitary and stabilises omega_1, equals
    the product ``r_so2 @ u_sp1`` of the two embedded factors, and that its
    action on omega_2..omega_6 is the block sum of the factor actions after
    reordering by :data:`BLOCK_ORDER`.
    """
    if not (u_sp1.is_unitary() and r_so2.is_unitary()):
        raise ValueError("both factors must be unitary")
    q = sp1_block(u_sp1)
    rot = so2_block(r_so2)
    lift = kronecker(rot, q)
    in_spin5 = star_condition(lift, 1) and transpose_condition(lift, 1)
    lift_action = induced_orthogonal_action(lift, (1,))
    a3 = induced_orthogonal_action(u_sp1, (1, 2, 6))
    a2 = induced_orthogonal_action(r_so2, (1, 3, 4, 5))
    p = block_permutation()
    factor = ExactMatrix.block_diag(a3, a2)
    return KroneckerReport(
        lift=lift,
        lift_unitary=lift.is_unitary(),
        in_spin5=in_spin5,
        lift_equals_product=lift == r_so2 @ u_sp1,
        lift_action=lift_action,
        factor_action=factor,
        commutes=p.T @ lift_action @ p == factor,
    )


def sample_spin3(rng: random.Random, bound: int = 4) -> ExactMatrix:
    v = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(3)]
    z, w = sphere3_point(v)
    return spin3_matrix(z, w)


def sample_so2(rng: random.Random, bound: int = 5) -> ExactMatrix:
    a, b = circle_point(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
    return so2_matrix(a, b)
