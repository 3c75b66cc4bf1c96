"""Truncated polynomials with integer coefficients in weight variables.

Each variable has cohomological degree 2; ``trunc`` bounds the polynomial
degree, so a class of cohomological degree 2k is the degree-k part.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GradedPoly:
    variables: tuple
    trunc: int
    terms: tuple  # sorted ((exponents, coefficient), ...), nonzero coefficients only
    var_degree: int = 2

    @classmethod
    def make(cls, variables, trunc: int, terms: dict) -> "GradedPoly":
        variables = tuple(variables)
        clean = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise ValueError(f"exponent vector {exps} does not match variables {variables}")
            if sum(exps) > trunc or c == 0:
                continue
            clean[exps] = clean.get(exps, 0) + int(c)
        return cls(variables, trunc, tuple(sorted((e, c) for e, c in clean.items() if c)))

    @classmethod
    def const(cls, variables, trunc: int, c: int = 1) -> "GradedPoly":
        return cls.make(variables, trunc, {(0,) * len(tuple(variables)): c})

    @classmethod
    def linear(cls, variables, trunc: int, coeffs) -> "GradedPoly":
        terms = {}
        for k, c in enumerate(coeffs):
            e = [0] * len(coeffs)
            e[k] = 1
            terms[tuple(e)] = c
        return cls.make(variables, trunc, terms)

    @property
    def as_dict(self) -> dict:
        return dict(self.terms)

    def _compat(self, other: "GradedPoly"):
        if self.variables != other.variables:
            raise ValueError(f"variables differ: {self.variables} vs {other.variables}")

    def __add__(self, other):
        if isinstance(other, int):
            other = GradedPoly.const(self.variables, self.trunc, other)
        self._compat(other)
        t = self.as_dict
        for e, c in other.terms:
            t[e] = t.get(e, 0) + c
        return GradedPoly.make(self.variables, min(self.trunc, other.trunc), t)

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly.make(self.variables, self.trunc, {e: -c for e, c in self.terms})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedPoly.make(self.variables, self.trunc, {e: c * other for e, c in self.terms})
        self._compat(other)
        trunc = min(self.trunc, other.trunc)
        t = {}
        for e1, c1 in self.terms:
            d1 = sum(e1)
            for e2, c2 in other.terms:
                if d1 + sum(e2) > trunc:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return GradedPoly.make(self.variables, trunc, t)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = GradedPoly.const(self.variables, self.trunc)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = GradedPoly.const(self.variables, self.trunc, other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, self.terms))

    def truncate(self, trunc: int) -> "GradedPoly":
        return GradedPoly.make(self.variables, trunc, self.as_dict)

    def part(self, degree: int) -> "GradedPoly":
        """Homogeneous part of polynomial degree ``degree`` (cohomological degree 2*degree)."""
        return GradedPoly.make(self.variables, self.trunc, {e: c for e, c in self.terms if sum(e) == degree})

    def cohomology_part(self, cdeg: int) -> "GradedPoly":
        if cdeg % self.var_degree:
            return GradedPoly.make(self.variables, self.trunc, {})
        return self.part(cdeg // self.var_degree)

    def constant(self) -> int:
        return self.as_dict.get((0,) * len(self.variables), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        # ascending total degree, then lexicographic with x1 before x2 before x3
        order = sorted(self.terms, key=lambda ec: (sum(ec[0]), tuple(-x for x in ec[0])))
        out = []
        for exps, c in order:
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.variables, exps) if k
            )
            if not mono:
                piece = str(abs(c))
            elif abs(c) == 1:
                piece = mono
            else:
                piece = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            out.append((sign, piece))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, piece in out[1:]:
            s += f" {sign} {piece}"
        return s

    __repr__ = __str__
