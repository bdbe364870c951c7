"""Discriminant and bifurcation polynomials of the linear unfolding of
x_1^(l_1+1) + ... + x_n^(l_n+1).

Polynomials live in Z[a1, ..., an, z].  Arithmetic, resultants and exact
division are delegated to sympy; :class:`IntPoly` is a small immutable sparse
view used for reporting, comparison and serialization.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import sympy as sp

from .multiindex import ExponentVector

MAX_MU_DISCRIMINANT = 12
MAX_MU_BIFURCATION = 8


class ZeroPolynomial(ValueError):
    pass


class ResourceExceeded(RuntimeError):
    pass


def _order_key(exps: Sequence[int]) -> tuple:
    # graded lex with a1 < ... < an < z; variables are stored in that order
    return (sum(exps),) + tuple(reversed(exps))


@dataclass(frozen=True)
class IntPoly:
    vars: tuple[str, ...]
    terms: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self):
        merged: dict[tuple[int, ...], int] = {}
        for e, c in self.terms:
            e = tuple(int(x) for x in e)
            if len(e) != len(self.vars):
                raise ValueError(f"monomial {e} does not match variables {self.vars}")
            merged[e] = merged.get(e, 0) + int(c)
        terms = sorted(((e, c) for e, c in merged.items() if c), key=lambda t: _order_key(t[0]), reverse=True)
        object.__setattr__(self, "vars", tuple(self.vars))
        object.__setattr__(self, "terms", tuple(terms))

    @classmethod
    def from_dict(cls, vars: Sequence[str], d: Mapping) -> "IntPoly":
        return cls(tuple(vars), tuple(d.items()))

    @classmethod
    def from_sympy(cls, p: sp.Poly | sp.Expr, vars: Sequence[str]) -> "IntPoly":
        syms = sp.symbols(list(vars))
        poly = sp.Poly(p, *syms, domain="ZZ") if not isinstance(p, sp.Poly) else sp.Poly(p.as_expr(), *syms, domain="ZZ")
        return cls(tuple(vars), tuple((m, int(c)) for m, c in poly.terms()))

    def to_sympy(self) -> sp.Poly:
        syms = sp.symbols(list(self.vars))
        return sp.Poly.from_dict({e: c for e, c in self.terms} or {(0,) * len(self.vars): 0}, *syms, domain="ZZ")

    def as_dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise ValueError(f"{var} is not one of {self.vars}") from None

    def degree(self, var: str) -> int:
        k = self.index(var)
        return max((e[k] for e, _ in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=-1)

    def content(self) -> int:
        return math.gcd(*(c for _, c in self.terms)) if self.terms else 0

    def evaluate(self, values: Mapping[str, object]):
        out = 0
        for e, c in self.terms:
            term = c
            for v, k in zip(self.vars, e):
                if k:
                    term = term * values[v] ** k
            out += term
        return out

    def __neg__(self) -> "IntPoly":
        return IntPoly(self.vars, tuple((e, -c) for e, c in self.terms))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, self.terms))

    def __str__(self) -> str:
        return str(self.to_sympy().as_expr()) if self.terms else "0"

    def to_json(self) -> dict:
        return {"vars": list(self.vars), "terms": [{"exps": list(e), "coeff": str(c)} for e, c in self.terms]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: Mapping) -> "IntPoly":
        return cls(tuple(data["vars"]), tuple((tuple(t["exps"]), int(t["coeff"])) for t in data["terms"]))


def alpha_names(n: int) -> tuple[str, ...]:
    return tuple(f"a{k}" for k in range(1, n + 1))


def _res(f: sp.Expr, g: sp.Expr, x: sp.Symbol) -> sp.Expr:
    # sympy 1.14 swaps the operands when deg f < deg g without the sign
    # (-1)^(deg f * deg g); order them ourselves so the result is the
    # Sylvester determinant in the given order.
    m, n = sp.degree(f, x), sp.degree(g, x)
    if m >= n:
        return sp.resultant(f, g, x)
    return (-1) ** (m * n) * sp.resultant(g, f, x)


def resultant(P: IntPoly, Q: IntPoly, var: str) -> IntPoly:
    """Res_var(P, Q) over the remaining variables (same variable tuple kept)."""
    if P.vars != Q.vars:
        raise ValueError("operands use different variable tuples")
    if P.degree(var) < 0 or Q.degree(var) < 0:
        raise ZeroPolynomial("resultant of a zero polynomial")
    syms = sp.symbols(list(P.vars))
    x = syms[P.index(var)]
    r = _res(P.to_sympy().as_expr(), Q.to_sympy().as_expr(), x)
    return IntPoly.from_sympy(sp.expand(r), P.vars)


def _budget(l: ExponentVector, cap: int | None, default: int, what: str) -> None:
    cap = default if cap is None else cap
    if l.mu > cap:
        raise ResourceExceeded(f"{what} for mu = {l.mu} exceeds the budget mu <= {cap}")


def hl_discriminant(l, max_mu: int | None = None) -> IntPoly:
    """Monic p_Delta in z.

    Its roots are the values z = sum_k l_k a_k^(l_k+1) xi_k with a_k^l_k = alpha_k
    and xi_k ranging over l_k-th roots of unity.  Each factor is absorbed with
    prod_xi Q(z - c xi) = Res_w(w^l - c^l, Q(z - w)).
    """
    l = ExponentVector.of(l)
    _budget(l, max_mu, MAX_MU_DISCRIMINANT, "discriminant")
    names = alpha_names(l.n) + ("z",)
    a = sp.symbols(list(alpha_names(l.n)))
    z, w = sp.symbols("z w")
    P = z
    for k, lk in enumerate(l):
        c_pow = lk**lk * a[k] ** (lk + 1)
        P = sp.expand(_res(w**lk - c_pow, P.subs(z, z - w), w))
    poly = sp.Poly(P, *a, z)
    if poly.coeff_monomial(z ** l.mu) < 0:
        poly = -poly
    out = IntPoly.from_sympy(poly, names)
    return out


def hl_bifurcation(l, max_mu: int | None = None) -> IntPoly:
    """Primitive part of Res_z(p_Delta, d/dz p_Delta), leading sign positive."""
    l = ExponentVector.of(l)
    if l.mu < 2:
        raise ValueError("the bifurcation polynomial needs mu >= 2")
    _budget(l, max_mu, MAX_MU_BIFURCATION, "bifurcation polynomial")
    pd = hl_discriminant(l, max_mu=max(l.mu, MAX_MU_DISCRIMINANT))
    expr = pd.to_sympy().as_expr()
    z = sp.Symbol("z")
    r = sp.expand(_res(expr, sp.diff(expr, z), z))
    names = alpha_names(l.n)
    poly = IntPoly.from_sympy(r, names)
    c = poly.content()
    sign = 1 if poly.terms[0][1] > 0 else -1
    return IntPoly(names, tuple((e, sign * (v // c)) for e, v in poly.terms))


def vanishing_order(P: IntPoly, var: str) -> int:
    if P.is_zero():
        raise ZeroPolynomial("vanishing order of the zero polynomial")
    k = P.index(var)
    return min(e[k] for e, _ in P.terms)


def leading_coefficient(P: IntPoly, var: str) -> IntPoly:
    k = P.index(var)
    d = P.degree(var)
    rest = tuple(v for v in P.vars if v != var)
    return IntPoly(rest, tuple((e[:k] + e[k + 1:], c) for e, c in P.terms if e[k] == d))


def primitive(P: IntPoly) -> IntPoly:
    c = P.content()
    if not c:
        return P
    sign = 1 if P.terms[0][1] > 0 else -1
    return IntPoly(P.vars, tuple((e, sign * (v // c)) for e, v in P.terms))


def equal_up_to_unit(P: IntPoly, Q: IntPoly) -> bool:
    """Equality up to a nonzero rational constant."""
    if P.vars != Q.vars or len(P.terms) != len(Q.terms):
        return False
    if not P.terms:
        return True
    ratio = Fraction(P.terms[0][1], Q.terms[0][1])
    return all(e == f and Fraction(c, d) == ratio for (e, c), (f, d) in zip(P.terms, Q.terms))


def rename(P: IntPoly, mapping: Mapping[str, str]) -> IntPoly:
    return IntPoly(tuple(mapping.get(v, v) for v in P.vars), P.terms)


def power(P: IntPoly, k: int) -> IntPoly:
    return IntPoly.from_sympy(P.to_sympy() ** k, P.vars)


def bifurcation_total_degree(l) -> Fraction:
    """mu * sum_i (l_i^2 - 1)/l_i * prod_{j>i} l_j."""
    l = ExponentVector.of(l)
    e = l.exponents
    s = sum(Fraction(e[i] ** 2 - 1, e[i]) * math.prod(e[i + 1:]) for i in range(len(e)))
    return l.mu * s


def expected_vanishing_order(l, i: int) -> Fraction:
    l = ExponentVector.of(l)
    li = l.exponents[i - 1]
    return Fraction((li * li - 1) * l.mu, li)


@dataclass(frozen=True)
class DegreeReport:
    deg_z: int | None
    total_degree: int
    degrees: dict
    vanishing: dict
    content: int

    def to_json(self) -> dict:
        return {
            "deg_z": self.deg_z,
            "total_degree": self.total_degree,
            "degrees": self.degrees,
            "vanishing_orders": self.vanishing,
            "content": self.content,
        }


def degree_report(P: IntPoly, l=None) -> DegreeReport:
    alphas = [v for v in P.vars if v != "z"]
    return DegreeReport(
        deg_z=P.degree("z") if "z" in P.vars else None,
        total_degree=P.total_degree(),
        degrees={v: P.degree(v) for v in P.vars},
        vanishing={v: vanishing_order(P, v) for v in alphas},
        content=P.content(),
    )


def cubic_bifurcation_identity() -> tuple[IntPoly, IntPoly]:
    """Res_y(y^3 - 3py + 2q, d/dy) and -108(p^3 - q^2), in Z[p, q, y]."""
    names = ("p", "q", "y")
    p, q, y = sp.symbols(list(names))
    f = y**3 - 3 * p * y + 2 * q
    lhs = IntPoly.from_sympy(sp.expand(_res(f, sp.diff(f, y), y)), names)
    rhs = IntPoly.from_sympy(sp.expand(-108 * (p**3 - q**2)), names)
    return lhs, rhs
