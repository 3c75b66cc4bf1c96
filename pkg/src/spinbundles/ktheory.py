"""Cohomology and reduced K-groups of CP^3, and the count of spin bundles over it.

H*(CP^3; Z) = Z[x]/(x^4) with deg x = 2.  The reduced groups are taken as
presentations: KO~(CP^3) = Z (detected by p_1), KSP~(CP^3) = Z + Z/2 (free
part detected by sp_1), and K~(CP^3) embedded in H* by the total Chern class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


class ConstraintError(ValueError):
    """Characteristic data that no spin bundle of the requested rank can have."""


@dataclass(frozen=True)
class CohCP3:
    a0: int = 0
    a1: int = 0
    a2: int = 0
    a3: int = 0

    @classmethod
    def x(cls, k: int = 1, power: int = 1) -> "CohCP3":
        c = [0, 0, 0, 0]
        if power <= 3:
            c[power] = k
        return cls(*c)

    @property
    def coeffs(self) -> tuple:
        return (self.a0, self.a1, self.a2, self.a3)

    def __add__(self, other: "CohCP3") -> "CohCP3":
        return CohCP3(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CohCP3(*(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CohCP3(*(a * other for a in self.coeffs))
        c = [0, 0, 0, 0]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                if i + j < 4:
                    c[i + j] += a * b
        return CohCP3(*c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = CohCP3(1)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self):
        names = ["", "x", "x^2", "x^3"]
        parts = []
        for k, a in enumerate(self.coeffs):
            if a:
                parts.append(f"{a}{names[k]}" if k == 0 or abs(a) != 1 else ("-" if a < 0 else "") + names[k])
        return " + ".join(parts).replace("+ -", "- ") or "0"


@dataclass(frozen=True)
class KSPClass:
    """Element of KSP~(CP^3) = Z + Z/2."""

    free_part: int = 0
    torsion: int = 0

    def __post_init__(self):
        object.__setattr__(self, "torsion", self.torsion % 2)

    def __add__(self, other: "KSPClass") -> "KSPClass":
        return KSPClass(self.free_part + other.free_part, self.torsion + other.torsion)

    def __neg__(self):
        return KSPClass(-self.free_part, self.torsion)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int) -> "KSPClass":
        return KSPClass(self.free_part * k, self.torsion * k)

    __rmul__ = __mul__

    def half(self) -> "KSPClass":
        """A class j with j + j = self (torsion bit 0); raises if none exists."""
        if not divisible_by_two(self):
            raise ArithmeticError(f"{self} is not divisible by two")
        return KSPClass(self.free_part // 2, 0)

    def __str__(self):
        return f"({self.free_part}, {self.torsion})"


@dataclass(frozen=True)
class KOClass:
    free_part: int = 0

    def __add__(self, other):
        return KOClass(self.free_part + other.free_part)

    def __neg__(self):
        return KOClass(-self.free_part)


def sp1_of_ksp(k: KSPClass) -> int:
    """Projection onto the free summand; sp_1 = free_part * x^2 (sign fixed to +)."""
    return k.free_part


def p1_of_ko(k: KOClass) -> int:
    return k.free_part


def divisible_by_two(k: KSPClass) -> bool:
    return k.free_part % 2 == 0 and k.torsion == 0


# ---------------------------------------------------------------------------
# K~(CP^3) through the total Chern class


def _unit_mul(a, b):
    c = [0, 0, 0, 0]
    for i in range(4):
        for j in range(4 - i):
            c[i + j] += a[i] * b[j]
    return c


def _unit_inv(a):
    # a = 1 + u with u nilpotent: inverse 1 - u + u^2 - u^3
    u = [0, a[1], a[2], a[3]]
    out = [1, 0, 0, 0]
    term = [1, 0, 0, 0]
    for k in range(1, 4):
        term = _unit_mul(term, [-c for c in u])
        out = [p + q for p, q in zip(out, term)]
    return out


def _unit_pow(a, k: int):
    if k < 0:
        a, k = _unit_inv(a), -k
    out = [1, 0, 0, 0]
    for _ in range(k):
        out = _unit_mul(out, a)
    return out


def chern_decomposition(c1: int, c2: int, c3: int) -> Optional[dict]:
    """Write 1 + c1 x + c2 x^2 + c3 x^3 as a product of total Chern classes of line bundles.

    Uses g1 = c(H) = 1 + x, g2 = c(H^2 - 2H) = 1 - x^2 + 2x^3 and
    g3 = c(H^2 - 2H)^2 c(H^3 - 3H) ... reduced to 1 + 2x^3; returns the
    exponents of (g1, g2, g3), or None when the remainder has odd x^3 part.
    """
    g1 = [1, 1, 0, 0]
    g2 = _unit_mul([1, 2, 0, 0], _unit_pow(g1, -2))
    g3 = _unit_mul(_unit_mul([1, 3, 0, 0], _unit_pow(g1, -3)), _unit_pow(g2, -3))
    assert g2 == [1, 0, -1, 2] and g3 == [1, 0, 0, 2]
    target = [1, c1, c2, c3]
    rest = _unit_mul(target, _unit_pow(g1, -c1))
    k2 = -rest[2]
    rest = _unit_mul(rest, _unit_pow(g2, -k2))
    assert rest[1] == rest[2] == 0
    if rest[3] % 2:
        return None
    k3 = rest[3] // 2
    assert _unit_mul(_unit_mul(_unit_pow(g1, c1), _unit_pow(g2, k2)), _unit_pow(g3, k3)) == target
    return {"c(H)": c1, "c(H^2-2H)": k2, "c(H^3-3H)c(H^2-2H)^-3": k3}


def chern_image_member(c1: int, c2: int, c3: int) -> bool:
    """Whether 1 + c1 x + c2 x^2 + c3 x^3 is the total Chern class of an element of K~(CP^3).

    K(CP^3) is generated by the line bundles H^a, so the image is the group
    generated by the 1 + a x.  Every class with c3 even lies in it, and so does
    every class with c3 = c1 c2 mod 2.
    """
    return chern_decomposition(c1, c2, c3) is not None


@dataclass(frozen=True)
class KClass:
    """Element of K~(CP^3), stored by its total Chern class."""

    c1: int = 0
    c2: int = 0
    c3: int = 0

    def __post_init__(self):
        if not chern_image_member(self.c1, self.c2, self.c3):
            raise ValueError(f"1 + {self.c1}x + {self.c2}x^2 + {self.c3}x^3 is not a total Chern class")

    def __add__(self, other: "KClass") -> "KClass":
        c = _unit_mul([1, self.c1, self.c2, self.c3], [1, other.c1, other.c2, other.c3])
        return KClass(*c[1:])


# ---------------------------------------------------------------------------
# bundle records and the classification


@dataclass
class BundleDescriptor:
    name: str
    rank: int
    p1: CohCP3
    w2: int = 0
    euler: Optional[CohCP3] = None
    rho: object = None
    notes: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "p1": str(self.p1),
            "w2": self.w2,
            "euler": None if self.euler is None else str(self.euler),
            "rho": None if self.rho is None else str(self.rho),
            "notes": list(self.notes),
        }


def direct_sum(a: BundleDescriptor, b: BundleDescriptor, name: str = None) -> BundleDescriptor:
    """Rank, p_1 and w_2 of a Whitney sum (H* is torsion free, so p_1 adds)."""
    return BundleDescriptor(
        name=name or f"{a.name}+{b.name}",
        rank=a.rank + b.rank,
        p1=whitney_p1(a, b),
        w2=(a.w2 + b.w2) % 2,
    )


def whitney_p1(a: BundleDescriptor, b: BundleDescriptor) -> CohCP3:
    if a.p1 is None or b.p1 is None:
        raise ValueError("both bundles need p_1")
    return a.p1 + b.p1


def trivial_bundle(rank: int) -> BundleDescriptor:
    return BundleDescriptor(name=str(rank), rank=rank, p1=CohCP3(), w2=0)


@dataclass
class Classification:
    """How many Spin(n)-bundles over CP^3 carry given p_1 (and Euler class), and why."""

    n: int
    p1: int
    euler: Optional[int]
    count: int
    group: str
    fiber_size: int
    spin_structures: int
    parameters: dict
    classes: list
    explanation: str

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "p1": f"{self.p1}x^2",
            "euler": self.euler,
            "count": self.count,
            "group": self.group,
            "fiber_size": self.fiber_size,
            "spin_structures": self.spin_structures,
            "parameters": self.parameters,
            "classes": [str(c) for c in self.classes],
            "explanation": self.explanation,
        }


def classify_spin_bundles(n: int, p1_coeff: int, euler_coeff: Optional[int] = None) -> Classification:
    """Spin(n)-bundles over CP^3 with p_1 = p1_coeff x^2 (and Euler class, where given).

    Euler class coefficients refer to the generator of H^n: x for n = 2, x^2
    for n = 4, x^3 for n = 6.  Spin structures are unique since
    H^1(CP^3; Z/2) = 0.
    """
    if n < 2:
        raise ValueError(f"rank must be >= 2, got {n}")
    if euler_coeff is not None and n not in (2, 4, 6):
        raise ValueError(f"an Euler class is only taken for n = 2, 4, 6 (got n = {n})")

    if n == 2:
        # Spin(2)-bundles are complex line bundles L = mH; the SO(2)-bundle is L^2 with e = 2m x
        if p1_coeff < 0 or p1_coeff % 4:
            raise ConstraintError("Spin(2): p1 must be 4k^2 x^2 (p1 divisible by 4 and nonnegative)")
        k2 = p1_coeff // 4
        k = _isqrt_exact(k2)
        if k is None:
            raise ConstraintError("Spin(2): p1 must be 4k^2 x^2 (p1/4 must be a perfect square)")
        ms = sorted({k, -k})
        if euler_coeff is not None:
            if euler_coeff % 2:
                raise ConstraintError("Spin(2): the Euler class of a spin bundle is even")
            ms = [m for m in ms if 2 * m == euler_coeff]
        return Classification(
            n, p1_coeff, euler_coeff, len(ms), "H^2(CP^3;Z) = Z", len(ms), 1,
            {"k": k}, [f"e = {2 * m}x" for m in ms],
            "Spin(2)-bundles are SO(2)-bundles with even Euler class e = 2m x; p1 = e^2 "
            f"= 4m^2 x^2, so m = {' or '.join(str(m) for m in ms) or 'none'}",
        )

    if n in (3, 5):
        factor = 4 if n == 3 else 2
        if p1_coeff % factor:
            raise ConstraintError(f"Spin({n}): p1 must be {factor}k x^2 (p1 divisible by {factor})")
        sp1 = p1_coeff // factor
        classes = [KSPClass(sp1, 0), KSPClass(sp1, 1)]
        return Classification(
            n, p1_coeff, None, len(classes), "KSP~(CP^3) = Z + Z/2", 2, 1,
            {"k": sp1, "sp1": sp1}, classes,
            f"p1 = {factor} sp1 gives sp1 = {sp1}; sp1 is onto Z with kernel Z/2",
        )

    if n == 4:
        if euler_coeff is None:
            raise ConstraintError("Spin(4): the Euler class e = l x^2 is required")
        if p1_coeff % 2:
            raise ConstraintError("Spin(4): p1 must be 2k x^2 (p1 even)")
        k, l = p1_coeff // 2, euler_coeff
        if (k + l) % 2:
            raise ConstraintError("Spin(4): with p1 = 2k x^2 and e = l x^2, k and l must have the same parity")
        a, b = (k + l) // 2, (k - l) // 2
        classes = [(KSPClass(a, s), KSPClass(b, t)) for s in (0, 1) for t in (0, 1)]
        return Classification(
            n, p1_coeff, euler_coeff, len(classes), "KSP~(CP^3) + KSP~(CP^3)", 4, 1,
            {"k": k, "l": l, "sp1_1": a, "sp1_2": b}, [f"{c1}+{c2}" for c1, c2 in classes],
            f"p1 = 2(sp1' + sp1''), e = sp1' - sp1'' give sp1' = {a}, sp1'' = {b}; "
            "each has a Z/2 of lifts",
        )

    if n == 6:
        if euler_coeff is None:
            raise ConstraintError("Spin(6): the Euler class e = 2l x^3 is required")
        if p1_coeff % 2:
            raise ConstraintError("Spin(6): p1 must be 2k x^2 (p1 even)")
        if euler_coeff % 2:
            raise ConstraintError("Spin(6): e must be 2l x^3 (Euler coefficient even)")
        c2 = -(p1_coeff // 2)
        c3 = euler_coeff
        kc = KClass(0, c2, c3)
        return Classification(
            n, p1_coeff, euler_coeff, 1, "image of [CP^3, BSU] in K~(CP^3) (c1 = 0)", 1, 1,
            {"k": p1_coeff // 2, "l": euler_coeff // 2, "c1": 0, "c2": c2, "c3": c3},
            [f"c = 1 + {kc.c2}x^2 + {kc.c3}x^3"],
            "p1 = -2 c2 and e = c3 fix the total Chern class; c1 = 0 on the SU image; "
            "the total Chern class is injective on K~(CP^3)",
        )

    if p1_coeff % 2:
        raise ConstraintError(f"Spin({n}): p1 must be 2k x^2 (p1 = w2^2 = 0 mod 2)")
    return Classification(
        n, p1_coeff, None, 1, "KO~(CP^3) = Z (stable range)", 1, 1,
        {"k": p1_coeff // 2}, [KOClass(p1_coeff)],
        "n >= 7 is stable over a 6-complex; p1 is an isomorphism KO~(CP^3) -> H^4; "
        "w2 = 0 forces p1 even",
    )


def _isqrt_exact(v: int) -> Optional[int]:
    if v < 0:
        return None
    import math

    r = math.isqrt(v)
    return r if r * r == v else None


THEOREM_COUNTS = {2: 2, 3: 2, 4: 4, 5: 2, 6: 1, 7: 1}


def theorem_count(n: int) -> int:
    return THEOREM_COUNTS[min(n, 7)]
