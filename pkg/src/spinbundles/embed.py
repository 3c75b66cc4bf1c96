"""Bundle bookkeeping for the embedding RP^7 in R^11.

CP^3 sits in R^9 with normal bundle N (rank 3).  Pushing into R^11 gives
normal bundle N + 2, and RP^7 is the sphere bundle of eta = (H (x)_C H)_R.
The embedding follows once N + 2 = E + eta for a rank 3 bundle E, and that
is decided in KSP~(CP^3) = Z + Z/2 by the rho invariant.

sp_1 values are integers in units of x^2.  For a quaternionic line bundle Q
and an oriented real 2-plane bundle L the Kronecker product Sp(1) x SO(2)
-> Sp(2) gives sp_1(Q (x)_R L) = 2 sp_1(Q) + 2 p_1(L).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import lambda2
from .exact import DEFAULT_SEED
from .ktheory import (
    BundleDescriptor,
    CohCP3,
    KSPClass,
    classify_spin_bundles,
    direct_sum,
    divisible_by_two,
    sp1_of_ksp,
    trivial_bundle,
    whitney_p1,
)

STEPS = ("i", "ii", "iii", "iv")

AXIOMS = (
    ("CP^3 embeds smoothly in R^9", "trusted fact (James; Milgram)"),
    ("the unit sphere bundle of eta is diffeomorphic to RP^7", "trusted fact (tensor square of the Hopf fibration)"),
    ("KSP~(CP^3) = Z + Z/2 with sp_1 onto Z, KO~(CP^3) = Z via p_1", "trusted fact (Atiyah, K-theory presentation)"),
    ("spin bundles of rank 3..6 over CP^3 are classified by rho", "trusted fact (7-equivalences of classifying spaces)"),
)


class EmbeddingError(RuntimeError):
    pass


def sp1_from_p1(rank: int, p1: int) -> Fraction:
    """sp_1 of rho[P] for a spin bundle of rank 3 or 5 with the given p_1."""
    if rank == 3:
        return Fraction(p1, 4)
    if rank == 5:
        return Fraction(p1, 2)
    raise ValueError(f"rho lands in KSP~ only for rank 3 or 5 here, got {rank}")


# ---------------------------------------------------------------------------
# formal combinations


@dataclass(frozen=True)
class NamedClass:
    """A reduced KSP~ class known through its sp_1 value and, maybe, its torsion bit."""

    name: str
    sp1: int
    torsion: Optional[int] = None
    source: str = ""

    def resolved(self) -> bool:
        return self.torsion is not None


@dataclass(frozen=True)
class Term:
    coeff: int
    cls: NamedClass
    rule: str


@dataclass(frozen=True)
class KSPExpr:
    terms: tuple = ()

    def __add__(self, other: "KSPExpr") -> "KSPExpr":
        return KSPExpr(self.terms + other.terms)

    def scale(self, k: int) -> "KSPExpr":
        return KSPExpr(tuple(Term(k * t.coeff, t.cls, t.rule) for t in self.terms))

    def all_even(self) -> bool:
        return all(t.coeff % 2 == 0 for t in self.terms)

    def sp1(self) -> int:
        return sum(t.coeff * t.cls.sp1 for t in self.terms)

    def evaluate(self) -> KSPClass:
        """The class in Z + Z/2.  Unknown torsion bits are harmless under even coefficients."""
        out = KSPClass()
        for t in self.terms:
            if t.cls.torsion is None:
                if t.coeff % 2:
                    raise EmbeddingError(f"torsion of {t.cls.name} is unknown and its coefficient {t.coeff} is odd")
                out = out + KSPClass(t.coeff * t.cls.sp1, 0)
            else:
                out = out + KSPClass(t.cls.sp1, t.cls.torsion) * t.coeff
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = [f"{t.coeff}[{t.cls.name}]" for t in self.terms]
        return " + ".join(parts).replace("+ -", "- ")

    def as_list(self) -> list:
        return [
            {"coeff": t.coeff, "class": t.cls.name, "sp1": t.cls.sp1, "torsion": t.cls.torsion, "rule": t.rule}
            for t in self.terms
        ]


# ---------------------------------------------------------------------------
# the bundles


def eta_descriptor() -> BundleDescriptor:
    """eta = (H (x)_C H)_R: c_1 = 2x, so e = 2x and p_1 = e^2 = 4x^2."""
    e = CohCP3(0, 2)
    return BundleDescriptor("eta", 2, p1=e * e, w2=0, euler=e, notes=["e = c_1(H (x) H) = 2x"])


def tangent_p1() -> CohCP3:
    # c(T CP^3) = (1 + x)^4 and p(T) = (1 + x^2)^4
    return CohCP3(0, 0, 4)


def normal_descriptor() -> BundleDescriptor:
    """Normal bundle of CP^3 in R^9; p(N) p(T) = 1 forces p_1(N) = -p_1(T)."""
    return BundleDescriptor(
        "N", 9 - 6, p1=-tangent_p1(), w2=0, notes=["rank 9 - dim_R CP^3 = 3", "w_2(N) = w_2(T) = c_1(T) mod 2 = 0"]
    )


def solve_for_E() -> tuple:
    """The two spin bundles E with E + eta stably matching N + 2."""
    eta = eta_descriptor()
    target = direct_sum(normal_descriptor(), trivial_bundle(2), name="N+2")
    rank = target.rank - eta.rank
    p1 = target.p1 - eta.p1
    w2 = (target.w2 - eta.w2) % 2
    if w2 != 0:
        raise EmbeddingError("E would not be spin")
    cls = classify_spin_bundles(rank, p1.a2)
    if cls.count != 2:
        raise EmbeddingError(f"expected two candidates, classification gave {cls.count}")
    out = []
    for k, rho in enumerate(cls.classes):
        out.append(
            BundleDescriptor(
                f"E{k}", rank, p1=p1, w2=w2, rho=rho,
                notes=[f"sp1 = p1/4 = {sp1_of_ksp(rho)} (rank 3)"],
            )
        )
    return tuple(out)


def select_E(candidates) -> BundleDescriptor:
    candidates = list(candidates)
    if len(candidates) != 2:
        raise ValueError(f"need exactly two candidates, got {len(candidates)}")
    a, b = candidates
    if a.rho.free_part != b.rho.free_part or a.rho.torsion == b.rho.torsion:
        raise ValueError("candidates must differ exactly in the torsion bit")
    good = [c for c in candidates if divisible_by_two(c.rho)]
    if len(good) != 1:
        raise ValueError(f"{len(good)} of the candidates have rho divisible by two, expected exactly one")
    return good[0]


# ---------------------------------------------------------------------------
# rewriting through the Kronecker product


@dataclass(frozen=True)
class Split:
    """A rank 3 plus rank 2 spin split over CP^3, by characteristic data."""

    name3: str
    p1_3: int
    name2: str
    e2: int  # Euler class coefficient of the rank 2 summand (a multiple of x)
    rank3: int = 3
    rank2: int = 2
    rho3: Optional[KSPClass] = None


TENSOR_RULE = "rho_5 of a 3+2 split is (rho_3 part) (x)_R (spin lift of the 2-plane part), Kronecker product Sp(1) x SO(2) -> Sp(2)"
TRIVIAL_RULE = "tensoring with the trivial complex line 1_C doubles a quaternionic class"


def tensor_rewrite(split: Split) -> KSPExpr:
    """rho[xi_3 + xi_2] in terms of the rank 3 factor, via the Kronecker lift.

    With xi_2 trivial the complex line factor is 1_C and the class is doubled.
    Otherwise the term is Q (x)_R L, where Q is the quaternionic line of xi_3
    and L is the square root of xi_2 (e(L) = e(xi_2) / 2).
    """
    if (split.rank3, split.rank2) != (3, 2):
        raise ValueError(f"split must be 3+2, got {split.rank3}+{split.rank2}")
    if split.p1_3 % 4:
        raise ValueError(f"rank 3 spin bundles have p1 divisible by 4, got {split.p1_3}")
    if split.e2 % 2:
        raise ValueError("the rank 2 summand must be spin (even Euler class)")
    q = NamedClass(
        f"P_spin({split.name3}) x_rho3 H",
        split.p1_3 // 4,
        None if split.rho3 is None else split.rho3.torsion,
        "rank 3: sp1 = p1/4",
    )
    if split.e2 == 0:
        return KSPExpr((Term(2, q, TRIVIAL_RULE),))
    ell = split.e2 // 2
    # reduced (Q (x) L) - 2 = (Q - 1) (x) L + (L_H - 2): sp1 = 2 sp1(Q) + 2 p1(L)
    t = NamedClass(
        f"({q.name}) (x)_R P_spin({split.name2})",
        2 * q.sp1 + 2 * ell * ell,
        None,
        "sp1(Q (x)_R L) = 2 sp1(Q) + 2 p1(L)",
    )
    return KSPExpr((Term(1, t, TENSOR_RULE),))


def kronecker_support(samples: int = 2, seed: int = DEFAULT_SEED) -> dict:
    """Exact checks of the Kronecker lift that justify :func:`tensor_rewrite`."""
    rng = random.Random(seed)
    ok = True
    for _ in range(samples):
        rep = lambda2.kronecker_lift_check(lambda2.sample_spin3(rng), lambda2.sample_so2(rng))
        ok = ok and rep.ok
    return {"samples": samples, "seed": seed, "all_commute": ok}


# ---------------------------------------------------------------------------
# certificate


@dataclass
class Step:
    label: str
    claim: str
    citation: str
    ok: bool
    witness: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"label": self.label, "claim": self.claim, "citation": self.citation, "ok": self.ok, "witness": self.witness}


@dataclass
class EmbeddingCertificate:
    eta: BundleDescriptor
    normal: BundleDescriptor
    candidates: tuple
    chosen: BundleDescriptor
    axioms: tuple
    ledger: dict
    steps: list
    divisible_E_eta: Optional[bool] = None
    divisible_N2: Optional[bool] = None
    rho_E_eta: Optional[KSPClass] = None
    rho_N2: Optional[KSPClass] = None
    failed_step: Optional[str] = None

    @property
    def verdict(self) -> bool:
        return (
            self.failed_step is None
            and bool(self.divisible_E_eta)
            and bool(self.divisible_N2)
            and self.rho_E_eta is not None
            and self.rho_N2 is not None
            and sp1_of_ksp(self.rho_E_eta) == sp1_of_ksp(self.rho_N2)
        )

    def as_dict(self) -> dict:
        return {
            "eta": self.eta.as_dict(),
            "N": self.normal.as_dict(),
            "candidates": [c.as_dict() for c in self.candidates],
            "chosen": self.chosen.name,
            "axioms": [{"statement": s, "status": c} for s, c in self.axioms],
            "ledger": self.ledger,
            "steps": [s.as_dict() for s in self.steps],
            "divisible": {"E+eta": self.divisible_E_eta, "N+2": self.divisible_N2},
            "rho": {
                "E+eta": None if self.rho_E_eta is None else str(self.rho_E_eta),
                "N+2": None if self.rho_N2 is None else str(self.rho_N2),
            },
            "failed_step": self.failed_step,
            "verdict": self.verdict,
        }


def verify_embedding(tamper: bool = False, swap_labels: bool = False) -> EmbeddingCertificate:
    """Run the chain (i)-(iv).  ``tamper`` picks the candidate whose rho is not divisible by two."""
    eta = eta_descriptor()
    normal = normal_descriptor()
    candidates = solve_for_E()
    if swap_labels:
        candidates = tuple(reversed(candidates))
    chosen = select_E(candidates)
    if tamper:
        chosen = next(c for c in candidates if c is not chosen)
    n2 = direct_sum(normal, trivial_bundle(2), name="N+2")
    e_eta = direct_sum(chosen, eta, name="E+eta")

    ledger = {
        "p1(eta)": str(eta.p1),
        "p1(CP^3)": str(tangent_p1()),
        "p1(N)": str(normal.p1),
        "p1(E)": str(chosen.p1),
        "w2": {"eta": eta.w2, "N": normal.w2, "E": chosen.w2},
        "ranks": {"eta": eta.rank, "N": normal.rank, "E": chosen.rank, "N+2": n2.rank, "E+eta": e_eta.rank},
        "sp1 factor for E (rank 3)": "1/4",
        "sp1 factor for rank 5": "1/2",
    }
    cert = EmbeddingCertificate(eta, normal, candidates, chosen, AXIOMS, ledger, [])
    steps = cert.steps

    def fail(label):
        cert.failed_step = label
        return cert

    # (i) Pontrjagin classes of the two sides
    p_left = whitney_p1(chosen, eta)
    p_right = whitney_p1(normal, trivial_bundle(2))
    ok = p_left == p_right == CohCP3(0, 0, -4) and e_eta.w2 == n2.w2 == 0 and e_eta.rank == n2.rank
    steps.append(Step("i", "p1(E+eta) = p1(N+2) = -4x^2, both spin of rank 5", "product formula for Pontrjagin classes", ok,
                      {"p1(E+eta)": str(p_left), "p1(N+2)": str(p_right)}))
    if not ok:
        return fail("i")

    support = kronecker_support()

    # (ii) rho[N + 2]
    expr_n2 = tensor_rewrite(Split("N", normal.p1.a2, "2", 0))
    rho_n2 = expr_n2.evaluate()
    cert.rho_N2 = rho_n2
    cert.divisible_N2 = expr_n2.all_even() and divisible_by_two(rho_n2)
    ok = cert.divisible_N2 and sp1_of_ksp(rho_n2) == sp1_from_p1(5, p_right.a2)
    steps.append(Step("ii", "rho[N+2] = 2 rho[N] is divisible by two", "tensor lemma with trivial 2-plane factor", ok,
                      {"expression": str(expr_n2), "terms": expr_n2.as_list(), "class": str(rho_n2),
                       "sp1 via rank 5": str(sp1_from_p1(5, p_right.a2)), "kronecker": support}))
    if not ok:
        return fail("ii")

    # (iii) rho[E + eta]
    witness = {"rho[E]": str(chosen.rho)}
    try:
        half = chosen.rho.half()
    except ArithmeticError as exc:
        witness["error"] = f"no xi with xi + xi = rho[E]: {exc}"
        steps.append(Step("iii", "rho[E+eta] = 2[xi (x) L] - 2[rho(eta+1)]", "stable splitting of quaternionic bundles", False, witness))
        return fail("iii")
    xi = NamedClass("xi", half.free_part, half.torsion, "xi + xi = rho[E]")
    ell = eta.euler.a1 // 2  # e(L) = x, the spin lift of eta
    xi_l = NamedClass("xi (x)_R P_spin(eta)", 2 * xi.sp1 + 2 * ell * ell, None, "sp1(Q (x)_R L) = 2 sp1(Q) + 2 p1(L)")
    # 1_H (x)_R L = rho[3 + eta] = rho[(eta + 1) + 2] = 2 rho[eta + 1]
    eta1 = tensor_rewrite(Split("eta+1", eta.p1.a2, "2", 0))
    one_l = KSPExpr((Term(1, NamedClass("1_H (x)_R P_spin(eta)", 2 * ell * ell, None, "sp1 = 2 p1(L)"), TENSOR_RULE),))
    consistent = one_l.sp1() == eta1.sp1()
    expr = KSPExpr((Term(2, xi_l, TENSOR_RULE),)) + eta1.scale(-1)
    witness.update({
        "xi": str(half),
        "expression": str(expr),
        "terms": expr.as_list(),
        "1_H (x) L = 2 rho[eta+1]": consistent,
        "all coefficients even": expr.all_even(),
    })
    try:
        rho_e_eta = expr.evaluate()
    except EmbeddingError as exc:
        witness["error"] = str(exc)
        steps.append(Step("iii", "rho[E+eta] = 2[xi (x) L] - 2[rho(eta+1)]", "tensor lemma and stable splitting", False, witness))
        return fail("iii")
    cert.rho_E_eta = rho_e_eta
    cert.divisible_E_eta = expr.all_even() and divisible_by_two(rho_e_eta)
    direct = sp1_from_p1(5, p_left.a2)
    witness.update({"class": str(rho_e_eta), "sp1 via rank 5": str(direct)})
    ok = consistent and cert.divisible_E_eta and sp1_of_ksp(rho_e_eta) == direct
    steps.append(Step("iii", "rho[E+eta] = 2[xi (x) L] - 2[rho(eta+1)] is divisible by two", "tensor lemma and stable splitting", ok, witness))
    if not ok:
        return fail("iii")

    # (iv) equality in Z + Z/2
    ok = rho_e_eta == rho_n2 and sp1_of_ksp(rho_e_eta) == sp1_of_ksp(rho_n2)
    steps.append(Step("iv", "rho[E+eta] = rho[N+2], hence E + eta = N + 2", "classification of spin bundles by rho", ok,
                      {"rho[E+eta]": str(rho_e_eta), "rho[N+2]": str(rho_n2)}))
    if not ok:
        return fail("iv")
    return cert
