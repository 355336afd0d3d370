"""Coalgebra structure of the groupoid algebra and the weak Hopf / Hopf algebroid checks."""
from __future__ import annotations

import itertools
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

import numpy as np

from .group_core import FiniteGroup, check_cap
from .groupoid import (
    AlgebraElement,
    Arrow,
    arrows,
    eps_gen,
    p_from_eps,
    p_idem,
    product,
    unit,
    word,
)
from .report import Report
from .subsets import e_subsets


class TensorElement:
    """Sparse linear combination of k-fold tensors of arrows."""

    __slots__ = ("group", "arity", "_terms")

    def __init__(self, group: FiniteGroup, arity: int, terms: Mapping | Iterable = ()):
        acc: dict[tuple[Arrow, ...], Rational] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            key = tuple(Arrow(*a) for a in key)
            if len(key) != arity:
                raise ValueError(f"expected {arity} tensor factors, got {len(key)}")
            acc[key] = acc.get(key, 0) + c
        self.group = group
        self.arity = arity
        self._terms = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def of(cls, *factors: AlgebraElement) -> "TensorElement":
        """Elementary tensor ``x_1 ⊗ ... ⊗ x_k``."""
        G = factors[0].group
        terms = {}
        for combo in itertools.product(*(list(f.items()) for f in factors)):
            key = tuple(a for a, _ in combo)
            c = 1
            for _, ci in combo:
                c *= ci
            terms[key] = c
        return cls(G, len(factors), terms)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.group is other.group and self.arity == other.arity and self._terms == other._terms

    __hash__ = None

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return TensorElement(self.group, self.arity, out)

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        """Componentwise product."""
        if other.arity != self.arity or other.group is not self.group:
            raise ValueError("tensor factors do not match")
        G = self.group
        by_source: dict[int, list] = {}
        for key, c in self._terms.items():
            by_source.setdefault(key[0].X, []).append((key, c))
        out: dict[tuple[Arrow, ...], Rational] = {}
        for rkey, d in other._terms.items():
            for lkey, c in by_source.get(G.translate(rkey[0].g, rkey[0].X), ()):
                parts = []
                for a, b in zip(lkey, rkey):
                    if a.X != G.translate(b.g, b.X):
                        break
                    parts.append(Arrow(G.mul(a.g, b.g), b.X))
                else:
                    key = tuple(parts)
                    out[key] = out.get(key, 0) + c * d
        return TensorElement(G, self.arity, out)

    def __repr__(self) -> str:
        return f"TensorElement(arity={self.arity}, {len(self._terms)} terms)"


def delta(x: AlgebraElement) -> TensorElement:
    return TensorElement(x.group, 2, {(a, a): c for a, c in x.items()})


def delta2(x: AlgebraElement) -> TensorElement:
    """``(Δ ⊗ id)Δ(x)``."""
    return TensorElement(x.group, 3, {(a, a, a): c for a, c in x.items()})


def counit(x: AlgebraElement) -> Rational:
    return sum((c for _, c in x.items()), 0)


def antipode(x: AlgebraElement) -> AlgebraElement:
    G = x.group
    return AlgebraElement(G, {Arrow(G.inv(a.g), G.translate(a.g, a.X)): c for a, c in x.items()})


def eps_s(x: AlgebraElement) -> AlgebraElement:
    """Source projection: ``(g, X) -> (e, X)``."""
    out: dict[Arrow, Rational] = {}
    for a, c in x.items():
        k = Arrow(0, a.X)
        out[k] = out.get(k, 0) + c
    return AlgebraElement(x.group, out)


def eps_t(x: AlgebraElement) -> AlgebraElement:
    """Target projection: ``(g, X) -> (e, gX)``."""
    G = x.group
    out: dict[Arrow, Rational] = {}
    for a, c in x.items():
        k = Arrow(0, G.translate(a.g, a.X))
        out[k] = out.get(k, 0) + c
    return AlgebraElement(G, out)


def _unit_arrows(G: FiniteGroup) -> list[AlgebraElement]:
    return [p_idem(G, Z) for Z in e_subsets(G, G.order)]


def eps_s_from_counit(x: AlgebraElement) -> AlgebraElement:
    """``1_(1) ε(x 1_(2))`` with ``Δ(1) = Σ (e,Z) ⊗ (e,Z)``."""
    total = AlgebraElement.zero(x.group)
    for u in _unit_arrows(x.group):
        total = total + u * counit(x * u)
    return total


def eps_t_from_counit(x: AlgebraElement) -> AlgebraElement:
    """``ε(1_(1) x) 1_(2)``."""
    total = AlgebraElement.zero(x.group)
    for u in _unit_arrows(x.group):
        total = total + u * counit(u * x)
    return total


def eps_s_prime(x: AlgebraElement) -> AlgebraElement:
    """``1_(1) ε(1_(2) x)``."""
    return eps_t_from_counit(x)


def eps_t_prime(x: AlgebraElement) -> AlgebraElement:
    """``ε(x 1_(1)) 1_(2)``."""
    return eps_s_from_counit(x)


def balanced_components(m_dims: Mapping[int, int], n_dims: Mapping[int, int]) -> tuple[dict[int, int], int]:
    """Per-subset products ``dim P_Z M · dim P_Z N`` and their sum."""
    if set(m_dims) != set(n_dims):
        raise ValueError("dimension tables are indexed by different subsets")
    per = {Z: m_dims[Z] * n_dims[Z] for Z in sorted(m_dims)}
    return per, sum(per.values())


def _single(G: FiniteGroup, a: Arrow) -> AlgebraElement:
    return AlgebraElement._wrap(G, {a: 1})


def _a(a: Arrow) -> list[int]:
    return [a.g, a.X]


def verify_weak_hopf(G: FiniteGroup, cap: int = 6) -> Report:
    """Exhaustive check of the weak bialgebra and weak Hopf axioms on arrows."""
    check_cap(G, cap, "verify_weak_hopf")
    rep = Report(f"weak hopf {G.label}")
    basis = arrows(G, G.order)
    elems = [_single(G, a) for a in basis]
    index = {a: i for i, a in enumerate(basis)}
    m = len(basis)
    one = unit(G)

    # pair product table: prod[i, j] = index of basis[i]·basis[j] or -1
    prod = np.full((m, m), -1, dtype=np.int64)
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            if a.X == G.translate(b.g, b.X):
                prod[i, j] = index[Arrow(G.mul(a.g, b.g), b.X)]

    c = rep.check("multiplication of arrows is associative")
    for i in range(m):
        for j in range(m):
            ij = prod[i, j]
            row = prod[ij] if ij >= 0 else np.full(m, -1)
            jk = prod[j]
            rhs = np.where(jk >= 0, prod[i, np.maximum(jk, 0)], -1)
            ok = np.array_equal(row, rhs)
            if not ok:
                k = int(np.argmax(row != rhs))
                c.case(False, x=_a(basis[i]), y=_a(basis[j]), z=_a(basis[k]))
            else:
                c.cases += m

    c = rep.check("coassociativity")
    for x in elems:
        c.case(delta2(x) == TensorElement.of(x, x, x), x=x.to_json())

    c = rep.check("counit law")
    for x in elems:
        left = AlgebraElement.zero(G)
        for (a, b), k in delta(x).terms.items():
            left = left + _single(G, b) * (k * counit(_single(G, a)))
        right = AlgebraElement.zero(G)
        for (a, b), k in delta(x).terms.items():
            right = right + _single(G, a) * (k * counit(_single(G, b)))
        c.case(left == x and right == x, x=x.to_json())

    c = rep.check("(3) Δ(xy) = Δ(x)Δ(y)")
    for x in elems:
        dx = delta(x)
        for y in elems:
            c.case(delta(x * y) == dx * delta(y), x=x.to_json(), y=y.to_json())

    c = rep.check("(4) ε(xyz) = ε(xy_(1))ε(y_(2)z) = ε(xy_(2))ε(y_(1)z)")
    defined = prod >= 0
    for i in range(m):
        # ε of a basis product is 1 when the product is defined, else 0
        xy = prod[i]
        lhs = np.zeros((m, m), dtype=bool)
        ok_rows = xy >= 0
        lhs[ok_rows] = defined[xy[ok_rows]]
        rhs = defined[i][:, None] & defined
        if np.array_equal(lhs, rhs):
            c.cases += m * m
        else:
            j, k = np.argwhere(lhs != rhs)[0]
            c.case(False, x=_a(basis[i]), y=_a(basis[j]), z=_a(basis[k]))

    d1 = delta(one)
    c = rep.check("(5) Δ(1) ⊗ 1 · 1 ⊗ Δ(1) = Δ²(1) = 1 ⊗ Δ(1) · Δ(1) ⊗ 1")
    left = TensorElement(G, 3, {(a, b, w): k for (a, b), k in d1.terms.items() for w, _ in one.items()})
    right = TensorElement(G, 3, {(w, a, b): k for (a, b), k in d1.terms.items() for w, _ in one.items()})
    d2 = delta2(one)
    c.case(left * right == d2 and right * left == d2)

    c = rep.check("Δ(1) ≠ 1 ⊗ 1")
    c.case(G.order < 2 or d1 != TensorElement.of(one, one), order=G.order)

    c = rep.check("eps_s(x) = 1_(1) ε(x 1_(2)) = s(x)")
    for x in elems:
        c.case(eps_s(x) == eps_s_from_counit(x), x=x.to_json())

    c = rep.check("eps_t(x) = ε(1_(1) x) 1_(2) = t(x)")
    for x in elems:
        c.case(eps_t(x) == eps_t_from_counit(x), x=x.to_json())

    c = rep.check("eps_s' = eps_t and eps_t' = eps_s")
    for x in elems:
        c.case(eps_s_prime(x) == eps_t(x) and eps_t_prime(x) == eps_s(x), x=x.to_json())

    c = rep.check("eps_s, eps_t idempotent and unital")
    c.case(eps_s(one) == one and eps_t(one) == one)
    for x in elems:
        c.case(eps_s(eps_s(x)) == eps_s(x) and eps_t(eps_t(x)) == eps_t(x), x=x.to_json())

    c = rep.check("images of eps_s and eps_t commute")
    units = _unit_arrows(G)
    for u in units:
        for v in units:
            c.case(u * v == v * u, u=u.to_json(), v=v.to_json())

    c = rep.check("(i) eps_s(h) = S(h_(1)) h_(2)")
    for x in elems:
        c.case(eps_s(x) == antipode(x) * x, x=x.to_json())

    c = rep.check("(ii) eps_t(h) = h_(1) S(h_(2))")
    for x in elems:
        c.case(eps_t(x) == x * antipode(x), x=x.to_json())

    c = rep.check("(iii) S(h) = S(h_(1)) h_(2) S(h_(3))")
    for x in elems:
        s = antipode(x)
        c.case(s * x * s == s, x=x.to_json())

    c = rep.check("S anti-multiplicative")
    for x in elems:
        for y in elems:
            c.case(antipode(x * y) == antipode(y) * antipode(x), x=x.to_json(), y=y.to_json())
    return rep


def balanced_projection(t: TensorElement) -> TensorElement:
    """``Δ(1)·t``: keeps only terms whose factors share a target."""
    return delta(unit(t.group)) * t


def _eps_word(G: FiniteGroup, gs) -> AlgebraElement:
    prefixes = list(itertools.accumulate(gs, G.mul))
    return product(G, (eps_gen(G, p) for p in prefixes))


def verify_lambda_hopf_algebroid(G: FiniteGroup, max_word_len: int = 3, cap: int = 6) -> Report:
    """Check that lambda preserves counit, antipode, comultiplication and base maps on words."""
    check_cap(G, cap, "verify_lambda_hopf_algebroid")
    if max_word_len > 3:
        raise ValueError("word length is limited to 3")
    rep = Report(f"hopf algebroid {G.label}")
    n = G.order
    c_counit = rep.check("lambda(eps_g1 eps_g1g2 ...) = eps_t(lambda(w))")
    c_anti = rep.check("lambda(S(w)) = S(lambda(w))")
    c_delta = rep.check("Δ(1)(lambda(w) ⊗ lambda(w)) = Δ(lambda(w))")
    c_units = rep.check("eps word is a 0-1 sum of unit arrows")
    for length in range(max_word_len + 1):
        for gs in itertools.product(range(n), repeat=length):
            lw = word(G, gs)
            ctx = {"word": list(gs)}
            lhs = _eps_word(G, gs)
            c_counit.case(lhs == eps_t(lw), **ctx)
            c_units.case(all(a.g == 0 and k == 1 for a, k in lhs.items()), **ctx)
            s_word = word(G, [G.inv(g) for g in reversed(gs)])
            c_anti.case(s_word == antipode(lw), **ctx)
            c_delta.case(balanced_projection(TensorElement.of(lw, lw)) == delta(lw), **ctx)

    c = rep.check("lambda(P_X) = (e, X) for P_X built from eps_g")
    for X in e_subsets(G, n):
        c.case(p_from_eps(G, X) == p_idem(G, X), X=X)

    c = rep.check("base algebra: lambda(eps_g) is in the span of unit arrows")
    for g in range(n):
        e = eps_gen(G, g)
        c.case(e == word(G, [g, G.inv(g)]) and eps_s(e) == e and eps_t(e) == e, g=g)
    return rep


def tensor_json(t: TensorElement) -> list[dict]:
    out = []
    for key in sorted(t.terms, key=lambda k: [(a.X, a.g) for a in k]):
        out.append({"factors": [{"g": a.g, "X": a.X} for a in key], "c": str(Fraction(t.terms[key]))})
    return out
