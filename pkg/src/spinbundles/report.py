"""Verification suites that produce :class:`Report` objects."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import charclass, clifford, embed, ktheory, lambda2
from .clifford import CliffordElement, cl_mul
from .exact import DEFAULT_SEED

PASS, FAIL = "pass", "fail"

# index set -> block template describing its stabiliser
STABILIZER_PATTERNS = {
    (1,): "Spin5",
    (1, 2): "Spin4",
    (1, 2, 6): "Spin3",
    (1, 3, 4, 5): "SO2",
    (1, 2, 5, 6): "Spin2",
}
# real dimensions found by the solver, kept as regression values
STABILIZER_DIMENSIONS = {(1,): 16, (1, 2): 8, (1, 2, 6): 4, (1, 3, 4, 5): 2, (1, 2, 5, 6): 2}
# complementary span is acted on through SO(k) for these
ORTHOGONAL_SETS = ((1,), (1, 2), (1, 2, 6), (1, 3, 4, 5))

EXHAUSTIVE_EVEN_ISO = 8
MAX_CLIFFORD_N = 12
SWEEP = range(-3, 4)


@dataclass
class StepResult:
    claim: str
    citation: str
    verdict: str
    witness: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"claim": self.claim, "citation": self.citation, "verdict": self.verdict, "witness": self.witness}


@dataclass
class Report:
    command: str
    inputs: dict
    seed: int
    steps: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return PASS if self.steps and all(s.verdict == PASS for s in self.steps) else FAIL

    def add(self, claim: str, citation: str, ok: bool, **witness) -> StepResult:
        step = StepResult(claim, citation, PASS if ok else FAIL, witness)
        self.steps.append(step)
        return step

    def extend(self, other: "Report", prefix: str = ""):
        for s in other.steps:
            self.steps.append(StepResult(f"{prefix}{s.claim}", s.citation, s.verdict, s.witness))

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "seed": self.seed,
            "steps": [s.as_dict() for s in self.steps],
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=False, default=str) + "\n"

    def to_text(self) -> str:
        lines = [f"{self.command}  seed={self.seed}  inputs={json.dumps(self.inputs, default=str)}"]
        for s in self.steps:
            lines.append(f"  [{s.verdict.upper()}] {s.claim}  ({s.citation})")
            for k, v in s.witness.items():
                if isinstance(v, list) and v and all(isinstance(x, str) for x in v):
                    lines.append(f"      {k}:")
                    lines.extend(f"        - {x}" for x in v)
                else:
                    lines.append(f"      {k}: {_short(v)}")
        lines.append(f"verdict: {self.verdict.upper()}")
        return "\n".join(lines) + "\n"


def _short(v) -> str:
    text = v if isinstance(v, str) else json.dumps(v, default=str)
    return text if len(text) <= 160 else text[:157] + "..."


# ---------------------------------------------------------------------------
# clifford


def clifford_report(n: int, seed: int = DEFAULT_SEED, samples: int = 20) -> Report:
    if not 1 <= n <= MAX_CLIFFORD_N:
        raise ValueError(f"n must satisfy 1 <= n <= {MAX_CLIFFORD_N}, got {n}")
    rep = Report("clifford", {"n": n, "samples": samples}, seed)
    info = clifford.irrep_table(n)
    rep.add(
        "irreducible representations of Cl_n: count and field type",
        "classification of Clifford modules",
        info.count == (2 if n % 4 == 3 else 1),
        count=info.count,
        field=info.field_type,
        dimension_over_field=info.dimension_over_field,
        real_dimension=info.real_dimension,
        kgroup=clifford.associated_kgroup(n),
    )
    if n <= 8:
        st = clifford.structure(n)
        derived = st.module_real_dim // clifford.FIELD_DIM[st.division_algebra]
        ok = (
            st.division_algebra == info.field_type
            and derived == info.dimension_over_field
            and st.components == info.count
        )
        rep.add(
            "table agrees with the decomposition computed from blades",
            "classification of Clifford modules",
            ok,
            division_algebra=st.division_algebra,
            components=st.components,
            module_real_dim=st.module_real_dim,
            involutions=[list(b) for b in st.involutions],
        )
    else:
        prev = clifford.irrep_table(n - 8)
        ok = (
            prev.count == info.count
            and prev.field_type == info.field_type
            and 16 * prev.dimension_over_field == info.dimension_over_field
        )
        rep.add("8-periodicity against Cl_(n-8)", "Bott periodicity Cl_(n+8) = Cl_n (x) R(16)", ok,
                previous=[prev.count, prev.field_type, prev.dimension_over_field])

    gens = [CliffordElement.gen(n, i) for i in range(1, n + 1)]
    minus_one = CliffordElement.scalar(n, -1)
    ok = all(cl_mul(g, g) == minus_one for g in gens) and all(
        cl_mul(a, b) == -cl_mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:]
    )
    rep.add("e_i^2 = -1 and e_i e_j = -e_j e_i", "defining relations of Cl_n", ok, generators=n)

    if n >= 2:
        if n <= EXHAUSTIVE_EVEN_ISO:
            res = clifford.check_even_iso(n)
            mode = "exhaustive"
        else:
            rng = random.Random(seed)
            basis = list(clifford.blades(n - 1))
            pairs = [(rng.choice(basis), rng.choice(basis)) for _ in range(samples)]
            res = clifford.check_even_iso(n, pairs)
            mode = "sampled"
        rep.add(
            "e_i -> e_i e_n extends to an isomorphism Cl_(n-1) -> Cl_n^0",
            "even subalgebra isomorphism",
            res["multiplicative"] and res["images_even"] and res["bijective"],
            mode=mode,
            pairs_checked=res["pairs_checked"],
            image_rank=res["image_rank"],
            failures=[list(map(list, f)) for f in res["failures"]],
        )
    return rep


# ---------------------------------------------------------------------------
# stabilizers


def parse_indices(text: str) -> tuple:
    try:
        idx = tuple(sorted({int(t) for t in text.replace(" ", "").split(",") if t}))
    except ValueError:
        raise ValueError(f"indices must be comma separated integers, got {text!r}")
    if not idx or any(i < 1 or i > 6 for i in idx):
        raise ValueError(f"indices must lie in 1..6, got {text!r}")
    return idx


def stabilizer_report(indices: Sequence[int], seed: int = DEFAULT_SEED, samples: int = 20) -> Report:
    idx = tuple(sorted(set(indices)))
    rep = Report("stabilizer", {"indices": list(idx), "samples": samples}, seed)
    spec = lambda2.stabilizer_space(idx)
    expected = STABILIZER_DIMENSIONS.get(idx)
    rep.add(
        "real dimension of the solution space of condition (*)",
        "stabilizer computation in SU(4) acting on anti-self-dual 2-forms",
        expected is None or spec.real_dimension == expected,
        dimension=spec.real_dimension,
        expected=expected,
    )
    pattern = STABILIZER_PATTERNS.get(idx)
    if pattern is not None:
        rep.add(
            f"solution space equals the {pattern} block pattern (both inclusions)",
            "explicit block form of the stabilizer",
            lambda2.pattern_match(spec, pattern),
            pattern=pattern,
        )
    if idx in ORTHOGONAL_SETS and samples > 0:
        us = lambda2.sample_stabilizer(idx, samples, seed)
        so_ok = cover_ok = member_ok = True
        for u in us:
            member_ok = member_ok and u.is_unitary() and spec.contains(u)
            a = lambda2.induced_orthogonal_action(u, idx)
            so_ok = so_ok and lambda2.is_special_orthogonal(a)
            cover_ok = cover_ok and lambda2.induced_orthogonal_action(u.scale(-1), idx) == a
        rep.add("sampled elements are unitary and satisfy (*)", "stabilizer definition", member_ok, samples=len(us))
        rep.add(
            f"induced action on span of omega_j, j in {list(lambda2.complement(idx))}, lies in SO({6 - len(idx)})",
            "exceptional isomorphisms as stabilizers",
            so_ok,
            samples=len(us),
        )
        rep.add("u and -u induce the same rotation", "double cover Spin -> SO", cover_ok, samples=len(us))
    return rep


def kronecker_report(seed: int = DEFAULT_SEED, samples: int = 20) -> Report:
    rep = Report("kronecker", {"samples": samples}, seed)
    rng = random.Random(seed)
    checks = {"lift_unitary": True, "in_spin5": True, "lift_equals_product": True, "commutes": True}
    for _ in range(samples):
        r = lambda2.kronecker_lift_check(lambda2.sample_spin3(rng), lambda2.sample_so2(rng))
        for k in checks:
            checks[k] = checks[k] and getattr(r, k)
    rep.add("Kronecker lift of Sp(1) x SO(2) lands in the omega_1 stabilizer",
            "tensor lemma, Kronecker product", checks["lift_unitary"] and checks["in_spin5"], samples=samples)
    rep.add("lift equals the product of the embedded factors", "tensor lemma, Kronecker product",
            checks["lift_equals_product"], samples=samples)
    rep.add("actions on omega_2..omega_6 agree up to the fixed permutation",
            "tensor lemma, commuting diagram", checks["commutes"], samples=samples,
            block_order=list(lambda2.BLOCK_ORDER))
    return rep


# ---------------------------------------------------------------------------
# characteristic classes


def lemma_cohomo_report(n: int, seed: int = DEFAULT_SEED, printed_weights: bool = False) -> Report:
    if n not in (3, 4, 5, 6):
        raise ValueError(f"n must be 3, 4, 5 or 6, got {n}")
    rep = Report("lemma-cohomo", {"n": n, "printed_weights": printed_weights}, seed)
    lr = charclass.verify_lemma_cohomo(n, printed_weights=printed_weights)
    torus = charclass.TORI[f"Spin{n}"]
    rep.add("torus acts diagonally on C^4 and fixes the chosen forms", "maximal torus of the stabilizer",
            charclass.check_torus_action(torus, _torus_points(torus.rank)), group=torus.group_tag)
    for ident in lr.identities:
        rep.add(ident.name, "Borel-Hirzebruch weight computation", ident.holds,
                lhs=ident.lhs, rhs=ident.rhs, sign=ident.sign, weights=lr.weights)
    if lr.notes:
        rep.add("notes", "weight bookkeeping", True, notes=lr.notes)
    return rep


def _torus_points(rank: int) -> list:
    from fractions import Fraction

    from .exact import circle_point, gq

    pts = []
    for t in (Fraction(1, 2), Fraction(2, 3), Fraction(-3, 4))[:rank]:
        a, b = circle_point(t)
        pts.append(gq(a, b))
    return pts


# ---------------------------------------------------------------------------
# classification


def classify_report(n: int, p1: int, euler: Optional[int] = None, seed: int = DEFAULT_SEED) -> Report:
    """Raises :class:`ktheory.ConstraintError` when the data violates the parity condition."""
    rep = Report("classify", {"n": n, "p1": p1, "euler": euler}, seed)
    _classify_step(rep, n, p1, euler)
    return rep


def _classify_step(rep: Report, n: int, p1: int, euler: Optional[int]):
    cert = ktheory.classify_spin_bundles(n, p1, euler)
    expected = ktheory.theorem_count(n)
    clause = f"classification theorem, clause ({min(n, 7) - 1})"
    data = f"p1 = {p1}x^2" + ("" if euler is None else f", e = {euler}")
    rep.add(f"Spin({n}) bundles with {data}: count {expected}", clause, cert.count == expected,
            count=cert.count, certificate=cert.as_dict())


def sweep_cases() -> list:
    """(n, p1, euler) over k, l in -3..3 satisfying each clause's constraint."""
    cases = []
    for k in SWEEP:
        cases.append((2, 4 * k * k, None))
    for k in SWEEP:
        cases.append((3, 4 * k, None))
    for k in SWEEP:
        for l in SWEEP:
            if (k - l) % 2 == 0:
                cases.append((4, 2 * k, l))
    for k in SWEEP:
        cases.append((5, 2 * k, None))
    for k in SWEEP:
        for l in SWEEP:
            cases.append((6, 2 * k, 2 * l))
    for n in (7, 8, 11):
        for k in SWEEP:
            cases.append((n, 2 * k, None))
    # p1 = 4k^2 repeats for +-k
    seen, out = set(), []
    for c in cases:
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def classify_sweep_report(seed: int = DEFAULT_SEED) -> Report:
    rep = Report("classify-sweep", {"k": [SWEEP.start, SWEEP.stop - 1]}, seed)
    for n, p1, e in sweep_cases():
        _classify_step(rep, n, p1, e)
    return rep


# ---------------------------------------------------------------------------
# embedding


def embed_report(tamper: bool = False, seed: int = DEFAULT_SEED) -> Report:
    rep = Report("embed", {"tamper": "other-candidate" if tamper else None}, seed)
    cert = embed.verify_embedding(tamper=tamper)
    for statement, status in cert.axioms:
        rep.add(statement, status, True, kind="axiom")
    rep.add("two candidates E0, E1 differing in the torsion bit", "classification theorem, clause (2)",
            len(cert.candidates) == 2, candidates=[c.as_dict() for c in cert.candidates], chosen=cert.chosen.name)
    for s in cert.steps:
        rep.add(f"({s.label}) {s.claim}", s.citation, s.ok, **s.witness)
    rep.add("final: E + eta = N + 2, so RP^7 embeds smoothly in R^11", "embedding theorem", cert.verdict,
            failed_step=cert.failed_step, ledger=cert.ledger)
    return rep


def all_report(seed: int = DEFAULT_SEED, samples: int = 20, typo_weights: bool = False) -> Report:
    rep = Report("all", {"samples": samples, "typo_weights": typo_weights}, seed)
    for n in range(1, 9):
        rep.extend(clifford_report(n, seed, samples), f"clifford n={n}: ")
    for idx in ORTHOGONAL_SETS + ((1, 2, 5, 6),):
        rep.extend(stabilizer_report(idx, seed, samples), f"stabilizer {','.join(map(str, idx))}: ")
    rep.extend(kronecker_report(seed, samples), "kronecker: ")
    for n in (3, 4, 5, 6):
        rep.extend(lemma_cohomo_report(n, seed, printed_weights=typo_weights and n == 6), f"lemma-cohomo n={n}: ")
    rep.extend(classify_sweep_report(seed), "classify: ")
    rep.extend(embed_report(False, seed), "embed: ")
    tampered = embed.verify_embedding(tamper=True)
    rep.add("embed: tampered candidate is rejected at step (iii)", "divisibility criterion for E",
            not tampered.verdict and tampered.failed_step == "iii", failed_step=tampered.failed_step)
    return rep
