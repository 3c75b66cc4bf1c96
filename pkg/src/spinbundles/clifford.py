"""Clifford algebras Cl_n with e_i^2 = -1, their even parts, and irreducible modules.

Basis blades are strictly increasing index tuples; ``()`` is the scalar blade.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator

FIELD_DIM = {"real": 1, "complex": 2, "quaternionic": 4}


def blade_product(a: tuple, b: tuple) -> tuple:
    """Return ``(sign, blade)`` with ``e_a e_b = sign * e_blade``.

    The sign counts the transpositions a merge of ``a`` and ``b`` needs
    (pairs ``i in a``, ``j in b`` with ``i > j``) plus one factor ``-1`` for
    every index the two blades share, since ``e_i e_i = -1``.
    """
    swaps = 0
    common = 0
    out = []
    ia = ib = 0
    # merge, counting how many elements of b jump over each element of a
    while ia < len(a) and ib < len(b):
        if a[ia] < b[ib]:
            out.append(a[ia])
            ia += 1
        elif a[ia] > b[ib]:
            swaps += len(a) - ia
            out.append(b[ib])
            ib += 1
        else:
            swaps += len(a) - ia - 1
            common += 1
            ia += 1
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    sign = -1 if (swaps + common) % 2 else 1
    return sign, tuple(out)


def blades(n: int) -> Iterator[tuple]:
    for k in range(n + 1):
        yield from combinations(range(1, n + 1), k)


class CliffordElement:
    """An element of Cl_n as a sparse map from blades to rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for blade, c in (terms or {}).items():
            blade = tuple(blade)
            if list(blade) != sorted(set(blade)) or (blade and not 1 <= blade[0] <= blade[-1] <= n):
                raise ValueError(f"{blade} is not a sorted blade of Cl_{n}")
            c = Fraction(c)
            if c:
                clean[blade] = clean.get(blade, 0) + c
        self.terms = {b: c for b, c in clean.items() if c}

    @classmethod
    def scalar(cls, n: int, c=1) -> "CliffordElement":
        return cls(n, {(): c})

    @classmethod
    def gen(cls, n: int, i: int) -> "CliffordElement":
        return cls(n, {(i,): 1})

    @classmethod
    def blade(cls, n: int, blade: tuple, c=1) -> "CliffordElement":
        return cls(n, {tuple(blade): c})

    def _check(self, other: "CliffordElement"):
        if not isinstance(other, CliffordElement):
            raise TypeError(f"expected CliffordElement, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"cannot combine elements of Cl_{self.n} and Cl_{other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CliffordElement.scalar(self.n, other)
        self._check(other)
        t = dict(self.terms)
        for b, c in other.terms.items():
            t[b] = t.get(b, 0) + c
        return CliffordElement(self.n, t)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.n, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CliffordElement(self.n, {b: c * other for b, c in self.terms.items()})
        return cl_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CliffordElement.scalar(self.n, other)
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def grades(self) -> set:
        return {len(b) for b in self.terms}

    def __repr__(self):
        if not self.terms:
            return f"Cl{self.n}(0)"
        parts = []
        for b in sorted(self.terms, key=lambda b: (len(b), b)):
            name = "e" + "".join(map(str, b)) if b else "1"
            parts.append(f"{self.terms[b]}*{name}")
        return f"Cl{self.n}(" + " + ".join(parts) + ")"


def cl_mul(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    """Product in Cl_n under e_i^2 = -1 and e_i e_j = -e_j e_i."""
    a._check(b)
    out = {}
    for ba, ca in a.terms.items():
        for bb, cb in b.terms.items():
            s, blade = blade_product(ba, bb)
            out[blade] = out.get(blade, 0) + s * ca * cb
    return CliffordElement(a.n, out)


def even_part(a: CliffordElement) -> CliffordElement:
    return CliffordElement(a.n, {b: c for b, c in a.terms.items() if len(b) % 2 == 0})


@lru_cache(maxsize=None)
def _even_iso_blade(n: int, blade: tuple) -> CliffordElement:
    # e_{i1}...e_{ik} maps to (e_{i1} e_n)...(e_{ik} e_n)
    out = CliffordElement.scalar(n)
    for i in blade:
        out = cl_mul(out, CliffordElement.blade(n, (i, n)))
    return out


def even_iso(a: CliffordElement) -> CliffordElement:
    """The isomorphism Cl_{n-1} -> Cl_n^0 determined by e_i -> e_i e_n, where n = a.n + 1."""
    n = a.n + 1
    out = CliffordElement(n)
    for blade, c in a.terms.items():
        out = out + _even_iso_blade(n, blade) * c
    return out


# ---------------------------------------------------------------------------
# structure of Cl_n as a real algebra


def commutes(a: tuple, b: tuple) -> bool:
    """Whether two blades commute: e_a e_b = (-1)^(|a||b| - |a & b|) e_b e_a."""
    return (len(a) * len(b) - len(set(a) & set(b))) % 2 == 0


def blade_square(a: tuple) -> int:
    return blade_product(a, a)[0]


def center_blades(n: int) -> list:
    """Blades spanning the center of Cl_n (blades commuting with every generator)."""
    return [b for b in blades(n) if all(commutes(b, (i,)) for i in range(1, n + 1))]


def _sparse_rank(vectors: list) -> int:
    """Rank of dict-vectors over Q by elimination on sparse rows."""
    pivots = {}
    rank = 0
    for v in vectors:
        v = dict(v)
        while v:
            key = min(v)
            if key in pivots:
                pv = pivots[key]
                f = v[key] / pv[key]
                for k, c in pv.items():
                    nv = v.get(k, 0) - f * c
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
            else:
                pivots[key] = v
                rank += 1
                break
    return rank


@dataclass(frozen=True)
class CliffordStructure:
    """The decomposition of Cl_n computed from its blades.

    ``involutions`` is a maximal commuting family of blades squaring to +1;
    ``f`` is the idempotent prod (1 + s)/2 they generate.
    """

    n: int
    center_dim: int
    components: int
    involutions: tuple
    module_real_dim: int
    division_algebra: str


def _blade_group(gens: list) -> dict:
    """Closure of a family of commuting blades under multiplication: blade -> sign."""
    group = {(): 1}
    for g in gens:
        new = dict(group)
        for b, s in group.items():
            sg, prod = blade_product(b, g)
            new[prod] = s * sg
        group = new
    return group


def structure(n: int) -> CliffordStructure:
    """Decompose Cl_n into simple components and find its irreducible module.

    A maximal family of commuting blade involutions yields an idempotent f.
    The corner fAf is spanned by the classes e_I f of blades commuting with
    the family; we check it is R, C or H from the squares and commutation of
    those generators, which certifies f primitive.  The irreducible module is
    the left ideal Cl_n f.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    center = center_blades(n)
    if len(center) == 1:
        components = 1
    else:
        vol = center[-1]
        components = 2 if blade_square(vol) == 1 else 1

    gens: list = []
    group = _blade_group(gens)
    for b in blades(n):
        if not b or blade_square(b) != 1 or b in group:
            continue
        if all(commutes(b, g) for g in gens):
            gens.append(b)
            group = _blade_group(gens)
    if any(s == -1 and b == () for b, s in group.items()):
        raise ArithmeticError("involution family generates -1")

    f = CliffordElement.scalar(n)
    for g in gens:
        f = cl_mul(f, (CliffordElement.scalar(n) + CliffordElement.blade(n, g)) * Fraction(1, 2))

    # corner algebra fAf: one generator per coset of the involution group
    reps = []
    seen = set()
    for b in blades(n):
        if b in seen or not all(commutes(b, g) for g in gens):
            continue
        for h in group:
            seen.add(blade_product(b, h)[1])
        reps.append(b)
    corner_dim = len(reps)
    others = [b for b in reps if b != ()]
    if corner_dim == 1:
        division = "real"
    elif corner_dim == 2 and blade_square(others[0]) == -1:
        division = "complex"
    elif corner_dim == 4:
        sq = [blade_square(b) for b in others]
        # quaternions: two anticommuting generators with square -1 (the third is their product)
        pairs = [(x, y) for x, y in combinations(others, 2) if not commutes(x, y)]
        if all(s == -1 for s in sq) and pairs:
            division = "quaternionic"
        else:
            raise ArithmeticError(f"corner algebra of Cl_{n} is not a division algebra")
    else:
        raise ArithmeticError(f"corner algebra of Cl_{n} has unexpected dimension {corner_dim}")

    left_ideal = [cl_mul(CliffordElement.blade(n, b), f).terms for b in blades(n)]
    module_dim = _sparse_rank(left_ideal)
    return CliffordStructure(
        n=n,
        center_dim=len(center),
        components=components,
        involutions=tuple(gens),
        module_real_dim=module_dim,
        division_algebra=division,
    )


def derived_module_dimension(n: int) -> int:
    """Dimension of the irreducible Cl_n-module over its division algebra, from :func:`structure`."""
    s = structure(n)
    return s.module_real_dim // FIELD_DIM[s.division_algebra]


# Frozen from derived_module_dimension(1..8); tests recompute them.
MODULE_DIMENSIONS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 4, 6: 8, 7: 8, 8: 16}


@dataclass(frozen=True)
class IrrepInfo:
    n: int
    count: int
    field_type: str
    dimension_over_field: int
    # with two irreps, which sign of the volume element is labelled rho^1
    labels: tuple = ()

    @property
    def real_dimension(self) -> int:
        return self.dimension_over_field * FIELD_DIM[self.field_type]


def irrep_table(n: int, flip_labels: bool = False) -> IrrepInfo:
    """Count and type of the irreducible real representations of Cl_n.

    Two irreps of equal dimension when n = 3 mod 4, otherwise one; complex
    for n = 1, 5 mod 8, quaternionic for n = 2, 3, 4 mod 8, real otherwise.
    The two irreps for n = 3 mod 4 are told apart by the sign with which the
    volume element acts; ``flip_labels`` swaps which is called the first.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"irrep_table needs n >= 1, got {n!r}")
    count = 2 if n % 4 == 3 else 1
    r = n % 8
    if r in (1, 5):
        field = "complex"
    elif r in (2, 3, 4):
        field = "quaternionic"
    else:
        field = "real"
    base = (n - 1) % 8 + 1
    dim = MODULE_DIMENSIONS[base] * 16 ** ((n - base) // 8)
    labels = ()
    if count == 2:
        labels = (-1, +1) if flip_labels else (+1, -1)
    return IrrepInfo(n=n, count=count, field_type=field, dimension_over_field=dim, labels=labels)


def associated_kgroup(n: int) -> str:
    """Which reduced K-group receives the invariant of a Spin(n)-bundle, by n mod 8."""
    table = {1: "KO", 2: "K", 3: "KSP", 4: "KSP+KSP", 5: "KSP", 6: "K", 7: "KO", 0: "KO+KO"}
    if n < 1:
        raise ValueError("n must be >= 1")
    return table[n % 8]


def check_even_iso(n: int, pairs=None) -> dict:
    """Check even_iso: Cl_{n-1} -> Cl_n^0 on blade pairs.

    Verifies multiplicativity on every pair (or on ``pairs`` when given), that
    images are even, and that the blade images are linearly independent and
    span a space of dimension 2^(n-1) = dim Cl_n^0.
    """
    m = n - 1
    basis = list(blades(m))
    failures = []
    if pairs is None:
        pairs = [(a, b) for a in basis for b in basis]
    for a, b in pairs:
        ea = CliffordElement.blade(m, a)
        eb = CliffordElement.blade(m, b)
        if even_iso(cl_mul(ea, eb)) != cl_mul(even_iso(ea), even_iso(eb)):
            failures.append((a, b))
    images = [even_iso(CliffordElement.blade(m, b)) for b in basis]
    all_even = all(len(k) % 2 == 0 for im in images for k in im.terms)
    rank = _sparse_rank([im.terms for im in images])
    return {
        "n": n,
        "pairs_checked": len(pairs),
        "multiplicative": not failures,
        "failures": failures[:5],
        "images_even": all_even,
        "image_rank": rank,
        "even_part_dim": 2 ** (n - 1),
        "bijective": rank == 2 ** (n - 1) == len(basis),
    }


def dims_consistent(n: int) -> bool:
    s = structure(n)
    total = 2 ** n
    per_component = total // s.components
    d = FIELD_DIM[s.division_algebra]
    m = s.module_real_dim // d
    return m * m * d == per_component and math.isqrt(per_component // d) == m
