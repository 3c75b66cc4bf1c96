"""Torus weights of the spin-group models and their characteristic classes.

Weights are read off formally: a diagonal torus element has entries that are
Laurent monomials t^a in the circle coordinates, so the torus acts on
e_i ^ e_j by the monomial with exponent a_i + a_j.  Total classes are then
products over weights in a truncated integer polynomial ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exact import ONE, ZERO, ExactMatrix, GaussianRational, rank_of_vectors
from .lambda2 import OMEGA, PAIRS, TwoForm, act, complement, star_condition
from .polys import GradedPoly

TRUNC = 3  # polynomial degree 3 = cohomological degree 6


@dataclass(frozen=True)
class Weight:
    exponents: tuple

    def __neg__(self):
        return Weight(tuple(-a for a in self.exponents))

    def is_zero(self) -> bool:
        return not any(self.exponents)

    def as_poly(self, variables, trunc: int = TRUNC) -> GradedPoly:
        return GradedPoly.linear(variables, trunc, self.exponents)

    def render(self, variables) -> str:
        return str(self.as_poly(variables))


@dataclass(frozen=True)
class TorusModel:
    group_tag: str
    rank: int
    variables: tuple
    diagonal: tuple  # exponent vector of each of the four diagonal entries
    fixed_forms: tuple  # the omega indices whose stabilizer contains this torus

    def embed(self, points: Sequence[GaussianRational]) -> ExactMatrix:
        """Diagonal matrix with entries prod_k points[k]^a_k; points should lie on the unit circle."""
        if len(points) != self.rank:
            raise ValueError(f"{self.group_tag} torus needs {self.rank} circle points")
        entries = []
        for exps in self.diagonal:
            v = ONE
            for p, a in zip(points, exps):
                v = v * GaussianRational.coerce(p) ** a
            entries.append(v)
        return ExactMatrix.diag(entries)

    def pair_character(self, pair: tuple) -> Weight:
        i, j = pair
        return Weight(tuple(a + b for a, b in zip(self.diagonal[i - 1], self.diagonal[j - 1])))


TORI = {
    "Spin3": TorusModel("Spin3", 1, ("x",), ((1,), (-1,), (1,), (-1,)), (1, 2, 6)),
    "Spin4": TorusModel("Spin4", 2, ("x1", "x2"), ((1, 0), (-1, 0), (0, 1), (0, -1)), (1, 2)),
    "Spin5": TorusModel("Spin5", 2, ("x1", "x2"), ((1, 0), (-1, 0), (0, 1), (0, -1)), (1,)),
    "Spin6": TorusModel("Spin6", 3, ("x1", "x2", "x3"), ((1, 1, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1)), ()),
}

# the defining-type representations: which diagonal entries they see, and their field
RHO_REPS = {
    ("Spin3", "rho"): ((0, 1), "quaternionic"),
    ("Spin4", "rho4_1"): ((0, 1), "quaternionic"),
    ("Spin4", "rho4_2"): ((2, 3), "quaternionic"),
    ("Spin5", "rho"): ((0, 1, 2, 3), "quaternionic"),
    ("Spin6", "rho"): ((0, 1, 2, 3), "complex"),
}


class WeightError(ValueError):
    pass


@dataclass(frozen=True)
class WeightSystem:
    """Weights of a representation restricted to a torus.

    For real and quaternionic representations ``weights`` holds one
    representative of each +-pair; ``zero_count`` counts zero weights (real
    case, one per real dimension).
    """

    field: str
    weights: tuple
    zero_count: int = 0

    def render(self, variables) -> list:
        return [w.render(variables) for w in self.weights]


def _pair_up(weights: list, pick_last: bool, labels: list = None) -> tuple:
    """Group weights into +-pairs; returns (representatives, zero count)."""
    remaining = list(range(len(weights)))
    reps = []
    zeros = 0
    while remaining:
        k = remaining.pop(0)
        w = weights[k]
        if w.is_zero():
            zeros += 1
            continue
        partner = next((m for m in remaining if weights[m] == -w), None)
        if partner is None:
            raise WeightError(f"weight {w.exponents} has no negative partner")
        remaining.remove(partner)
        if pick_last and labels is not None and labels[partner] > labels[k]:
            reps.append(weights[partner])
        else:
            reps.append(w)
    return tuple(reps), zeros


def pi_weights(torus: TorusModel, fixed: Sequence[int] = None) -> WeightSystem:
    """Weights of the action on span{omega_j : j not in fixed}.

    The complex span S of those forms is decomposed along the torus weight
    spaces E_chi (spanned by the e_i ^ e_j of character chi).  The action is
    diagonal over monomials exactly when sum_chi dim(S & E_chi) = dim S.
    Each +-pair is represented by the weight of its later basis two-form.
    """
    fixed = torus.fixed_forms if fixed is None else tuple(fixed)
    comp = complement(fixed)
    span = [list(OMEGA[j - 1].coeffs) for j in comp]
    dim_s = rank_of_vectors(span)

    by_char: dict = {}
    for p in PAIRS:
        by_char.setdefault(torus.pair_character(p), []).append(p)

    weights, last_pair = [], []
    total = 0
    for chi, pairs in by_char.items():
        e_vecs = [[ONE if q == p else ZERO for q in PAIRS] for p in pairs]
        inter = dim_s + len(pairs) - rank_of_vectors(span + e_vecs)
        total += inter
        weights.extend([chi] * inter)
        last_pair.extend([max(pairs)] * inter)
    if total != dim_s:
        raise WeightError("torus does not act diagonally over monomials on this span")

    # order: by earliest basis two-form of the pair, so output follows the omega listing
    def first_pair(chi):
        return min(by_char.get(chi, []) + by_char.get(-chi, []))

    order = sorted(range(len(weights)), key=lambda k: (weights[k].is_zero(), first_pair(weights[k])))
    weights = [weights[k] for k in order]
    last_pair = [last_pair[k] for k in order]
    ranks = [PAIRS.index(p) for p in last_pair]
    reps, zeros = _pair_up(weights, pick_last=True, labels=ranks)
    return WeightSystem("real", reps, zeros)


def weights_of_action(torus: TorusModel, rep: str, flip_labels: bool = False) -> WeightSystem:
    """Torus weights of ``rep``: ``"pi"`` (action on the omega complement) or a defining-type
    representation (``"rho"``, ``"rho4_1"``, ``"rho4_2"``)."""
    if rep == "pi":
        return pi_weights(torus)
    if flip_labels and rep in ("rho4_1", "rho4_2"):
        rep = "rho4_2" if rep == "rho4_1" else "rho4_1"
    key = (torus.group_tag, rep)
    if key not in RHO_REPS:
        raise KeyError(f"no representation {rep!r} for {torus.group_tag}")
    entries, fieldtype = RHO_REPS[key]
    ws = [Weight(torus.diagonal[k]) for k in entries]
    if fieldtype == "complex":
        return WeightSystem("complex", tuple(ws))
    reps, zeros = _pair_up(ws, pick_last=False)
    if zeros:
        raise WeightError("quaternionic representation with zero weight")
    return WeightSystem("quaternionic", reps)


def check_torus_action(torus: TorusModel, points: Sequence[GaussianRational]) -> bool:
    """Evaluate the formal weights at rational circle points and compare with the matrix action.

    Checks that the embedded torus element stabilises its fixed forms and acts
    on each e_i ^ e_j by the monomial of that pair's character.
    """
    d = torus.embed(points)
    if not all(star_condition(d, i) for i in torus.fixed_forms):
        return False
    for p in PAIRS:
        chi = torus.pair_character(p)
        val = ONE
        for pt, a in zip(points, chi.exponents):
            val = val * GaussianRational.coerce(pt) ** a
        e = TwoForm.from_dict({p: ONE})
        if act(d, e) != e.scale(val):
            return False
    return True


def _weights(ws) -> tuple:
    if isinstance(ws, WeightSystem):
        return ws.weights
    return tuple(ws)


def pontrjagin_total(weights, variables, trunc: int = TRUNC) -> GradedPoly:
    """prod (1 + w^2) over one representative per +-pair."""
    out = GradedPoly.const(variables, trunc)
    for w in _weights(weights):
        p = w.as_poly(variables, trunc)
        out = out * (1 + p * p)
    return out


def chern_total(weights, variables, trunc: int = TRUNC) -> GradedPoly:
    """prod (1 + w) over all complex weights."""
    out = GradedPoly.const(variables, trunc)
    for w in _weights(weights):
        out = out * (1 + w.as_poly(variables, trunc))
    return out


def sp_total(weights, variables, trunc: int = TRUNC) -> GradedPoly:
    """prod (1 + w^2) over one representative per quaternionic +-pair."""
    out = GradedPoly.const(variables, trunc)
    for w in _weights(weights):
        p = w.as_poly(variables, trunc)
        out = out * (1 + p * p)
    return out


def sp_from_chern(weights, variables, trunc: int = TRUNC) -> GradedPoly:
    """sp_i = (-1)^i c_{2i} of the underlying complex representation (weights +-w)."""
    ws = _weights(weights)
    c = chern_total(list(ws) + [-w for w in ws], variables, 2 * trunc)
    out = GradedPoly.make(variables, trunc, {})
    for i in range(trunc // 2 + 1):
        out = out + c.part(2 * i) * (-1) ** i
    return out


def euler_top(weights, variables, orientation: Sequence[int] = None, trunc: int = TRUNC) -> GradedPoly:
    """prod of the pair representatives, each multiplied by its orientation sign."""
    if isinstance(weights, WeightSystem) and weights.zero_count:
        raise WeightError("zero weight present: odd orthogonal representation has no Euler class here")
    ws = _weights(weights)
    if any(w.is_zero() for w in ws):
        raise WeightError("zero weight present")
    orientation = list(orientation) if orientation is not None else [1] * len(ws)
    if len(orientation) != len(ws):
        raise ValueError("one orientation sign per weight pair")
    out = GradedPoly.const(variables, trunc)
    for w, o in zip(ws, orientation):
        out = out * (w.as_poly(variables, trunc) * o)
    return out


# ---------------------------------------------------------------------------

# the weights of pi_6 as printed, with -x2-x3 listed twice
PRINTED_PI6 = (Weight((0, -1, -1)), Weight((-1, 0, -1)), Weight((0, -1, -1)))


@dataclass
class Identity:
    name: str
    lhs: str
    rhs: str
    holds: bool
    sign: int = 1  # for identities stated up to sign, the sign that makes them hold

    def as_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds, "sign": self.sign}


@dataclass
class LemmaReport:
    n: int
    weights: dict
    identities: list
    notes: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(i.holds for i in self.identities)


def _signed(name: str, lhs: GradedPoly, rhs: GradedPoly) -> Identity:
    for s in (1, -1):
        if lhs * s == rhs:
            return Identity(name, f"{'' if s == 1 else '-'}({lhs})", str(rhs), True, s)
    return Identity(name, str(lhs), str(rhs), False, 0)


def verify_lemma_cohomo(n: int, printed_weights: bool = False, flip_labels: bool = False) -> LemmaReport:
    """Compare p_1, e with sp_1 / c_2, c_3 for Spin(n), 3 <= n <= 6, in the weight ring.

    ``printed_weights`` (n = 6 only) replaces the derived weights of pi_6 by
    the printed list with its repeated entry, to show the identity then fails.
    ``flip_labels`` (n = 4) swaps which quaternionic factor is rho4_1.
    """
    if n not in (3, 4, 5, 6):
        raise ValueError(f"the comparison covers 3 <= n <= 6, got {n}")
    torus = TORI[f"Spin{n}"]
    v = torus.variables
    pi = weights_of_action(torus, "pi")
    if n == 6 and printed_weights:
        pi = WeightSystem("real", PRINTED_PI6)
    p1 = pontrjagin_total(pi, v).part(2)
    ids = []
    wdata = {"pi": pi.render(v), "pi_zero_weights": pi.zero_count}
    notes = []

    if n == 3:
        rho = weights_of_action(torus, "rho")
        sp1 = sp_total(rho, v).part(2)
        wdata["rho"] = rho.render(v)
        ids.append(Identity("p1 = 4 sp1", str(p1), str(sp1 * 4), p1 == sp1 * 4))
    elif n == 4:
        r1 = weights_of_action(torus, "rho4_1", flip_labels)
        r2 = weights_of_action(torus, "rho4_2", flip_labels)
        s1 = sp_total(r1, v).part(2)
        s2 = sp_total(r2, v).part(2)
        wdata["rho4_1"] = r1.render(v)
        wdata["rho4_2"] = r2.render(v)
        ids.append(Identity("p1 = 2 sp1(rho4_1) + 2 sp1(rho4_2)", str(p1), str(s1 * 2 + s2 * 2), p1 == s1 * 2 + s2 * 2))
        e = euler_top(pi, v)
        ids.append(_signed("+-e = sp1(rho4_1) - sp1(rho4_2)", e, s1 - s2))
        notes.append(f"Euler sign realised: {ids[-1].sign:+d} (swapping the rho4 labels flips it)")
    elif n == 5:
        rho = weights_of_action(torus, "rho")
        sp1 = sp_total(rho, v).part(2)
        wdata["rho"] = rho.render(v)
        ids.append(Identity("p1 = 2 sp1", str(p1), str(sp1 * 2), p1 == sp1 * 2))
    else:
        rho = weights_of_action(torus, "rho")
        c = chern_total(rho, v)
        wdata["rho"] = rho.render(v)
        c2 = c.part(2)
        c3 = c.part(3)
        ids.append(Identity("c1 = 0", str(c.part(1)), "0", c.part(1).is_zero()))
        ids.append(Identity("p1 = -2 c2", str(p1), str(c2 * -2), p1 == c2 * -2))
        e = euler_top(pi, v)
        ids.append(_signed("e = +-c3", e, c3))
        derived = weights_of_action(torus, "pi").weights
        printed = PRINTED_PI6
        if len(set(printed)) < len(printed):
            dup = [w for w in printed if printed.count(w) > 1][0]
            missing = [w for w in derived if w not in printed]
            notes.append(
                f"printed pi_6 weight list repeats {dup.render(v)}; "
                f"the derived third weight is {', '.join(w.render(v) for w in missing)}"
            )
        notes.append(
            "the printed Chern product (1+x+y+z)(1+x)(1+y)(1+z) does not match the weights "
            f"{', '.join(rho.render(v))}; the derived weights are used"
        )
        if ids[-1].holds:
            notes.append(f"Euler sign realised: {ids[-1].sign:+d}")
    return LemmaReport(n=n, weights=wdata, identities=ids, notes=notes)
