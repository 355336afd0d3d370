"""The groupoid algebra of subsets containing the identity.

An arrow ``(g, X)`` goes from ``X`` to ``gX`` and exists when ``g^{-1}`` lies
in ``X``.  The partial group algebra is modelled only through this basis:
the generator ``[g]`` is the sum of all arrows labelled ``g``, and the
idempotent ``P_X`` is the unit arrow ``(e, X)``.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .group_core import DEFAULT_CAP, FiniteGroup, check_cap
from .report import Report
from .subsets import e_subsets, fundamental_domain, isotropy


class Arrow(NamedTuple):
    g: int
    X: int


def arrow_key(a: Arrow) -> tuple[int, int]:
    return (a.X, a.g)


def source(G: FiniteGroup, a: Arrow) -> int:
    return a.X


def target(G: FiniteGroup, a: Arrow) -> int:
    return G.translate(a.g, a.X)


def is_arrow(G: FiniteGroup, g: int, X: int) -> bool:
    return bool(X & 1 and X >> G.inv(g) & 1 and 0 <= X <= G.full_mask)


class AlgebraElement:
    """Sparse exact linear combination of arrows; immutable."""

    __slots__ = ("group", "_terms")

    def __init__(self, group: FiniteGroup, terms: Mapping | Iterable = ()):
        acc: dict[Arrow, Rational] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for a, c in items:
            a = Arrow(*a)
            if not is_arrow(group, a.g, a.X):
                raise ValueError(f"({a.g}, {a.X}) is not an arrow of {group.label}")
            acc[a] = acc.get(a, 0) + c
        self.group = group
        self._terms = {a: c for a, c in acc.items() if c != 0}

    @classmethod
    def _wrap(cls, group: FiniteGroup, terms: dict) -> "AlgebraElement":
        obj = cls.__new__(cls)
        obj.group = group
        obj._terms = {a: c for a, c in terms.items() if c != 0}
        return obj

    @classmethod
    def basis(cls, group: FiniteGroup, g: int, X: int) -> "AlgebraElement":
        return cls(group, {Arrow(g, X): 1})

    @classmethod
    def zero(cls, group: FiniteGroup) -> "AlgebraElement":
        return cls._wrap(group, {})

    @property
    def terms(self) -> dict[Arrow, Rational]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Arrow, Rational]]:
        """Terms in deterministic ``(X, g)`` order."""
        for a in sorted(self._terms, key=arrow_key):
            yield a, self._terms[a]

    def coefficient(self, a: Arrow) -> Rational:
        return self._terms.get(a, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _same(self, other: "AlgebraElement") -> None:
        if other.group is not self.group:
            raise ValueError("elements belong to different groups")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same(other)
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out.get(a, 0) + c
        return AlgebraElement._wrap(self.group, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._wrap(self.group, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, Rational):
            return AlgebraElement._wrap(self.group, {a: c * other for a, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.group is other.group and self._terms == other._terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = [f"{c}*({a.g},{a.X})" for a, c in self.items()]
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"g": a.g, "X": a.X, "c": str(Fraction(c))} for a, c in self.items()]

    @classmethod
    def from_json(cls, group: FiniteGroup, data: Sequence[dict]) -> "AlgebraElement":
        return cls(group, [((d["g"], d["X"]), Fraction(d["c"])) for d in data])


def arrows(G: FiniteGroup, cap: int = DEFAULT_CAP) -> list[Arrow]:
    """All arrows, lexicographic in ``(X, g)``."""
    out = []
    for X in e_subsets(G, cap):
        for g in range(G.order):
            if X >> G.inv(g) & 1:
                out.append(Arrow(g, X))
    return out


def compose(G: FiniteGroup, a: Arrow, b: Arrow) -> Arrow | None:
    """``a·b`` in the groupoid, or None when ``s(a) != t(b)``."""
    if a.X != G.translate(b.g, b.X):
        return None
    return Arrow(G.mul(a.g, b.g), b.X)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._same(y)
    G = x.group
    by_source: dict[int, list] = defaultdict(list)
    for (g, X), c in x._terms.items():
        by_source[X].append((g, c))
    out: dict[Arrow, Rational] = {}
    cayley = G.cayley
    for (h, Y), d in y._terms.items():
        left = by_source.get(G.translate(h, Y))
        if not left:
            continue
        for g, c in left:
            key = Arrow(cayley[g][h], Y)
            out[key] = out.get(key, 0) + c * d
    return AlgebraElement._wrap(G, out)


def product(G: FiniteGroup, factors: Iterable[AlgebraElement]) -> AlgebraElement:
    result = unit(G)
    for f in factors:
        result = multiply(result, f)
    return result


def unit(G: FiniteGroup) -> AlgebraElement:
    return AlgebraElement._wrap(G, {Arrow(0, X): 1 for X in e_subsets(G, G.order)})


def lambda_gen(G: FiniteGroup, g: int) -> AlgebraElement:
    """Image of the generator ``[g]``: all arrows ``(g, X)`` with ``e, g^{-1}`` in X."""
    gi = G.inv(g)
    return AlgebraElement._wrap(
        G, {Arrow(g, X): 1 for X in e_subsets(G, G.order) if X >> gi & 1}
    )


def eps_gen(G: FiniteGroup, g: int) -> AlgebraElement:
    return AlgebraElement._wrap(
        G, {Arrow(0, X): 1 for X in e_subsets(G, G.order) if X >> g & 1}
    )


def p_idem(G: FiniteGroup, X: int) -> AlgebraElement:
    if not X & 1:
        raise ValueError(f"{G.format_set(X)} does not contain the identity")
    return AlgebraElement(G, {Arrow(0, X): 1})


def gamma_idem(G: FiniteGroup, X: int) -> AlgebraElement:
    """Central idempotent of the orbit of X, as the plain sum of its unit arrows."""
    if not X & 1:
        raise ValueError(f"{G.format_set(X)} does not contain the identity")
    T = fundamental_domain(G, G.order)
    return AlgebraElement._wrap(G, {Arrow(0, Y): 1 for Y in T.orbit(X)})


def gamma_idem_weighted(G: FiniteGroup, X: int) -> AlgebraElement:
    """Same idempotent written as ``(1/|G_X|) sum_{g^{-1} in X} P_{gX}``."""
    w = Fraction(1, isotropy(G, X).order)
    out: dict[Arrow, Rational] = {}
    for g in range(G.order):
        if X >> G.inv(g) & 1:
            key = Arrow(0, G.translate(g, X))
            out[key] = out.get(key, 0) + w
    return AlgebraElement._wrap(G, out)


def word(G: FiniteGroup, gs: Sequence[int]) -> AlgebraElement:
    """``lambda([g_1]) ... lambda([g_n])``; the empty word is the unit."""
    return product(G, (lambda_gen(G, g) for g in gs))


def normal_form(G: FiniteGroup, gs: Sequence[int]) -> AlgebraElement:
    """``eps_{g_1} eps_{g_1 g_2} ... eps_{g_1...g_n} lambda([g_1...g_n])``."""
    prefixes = list(itertools.accumulate(gs, G.mul))
    factors = [eps_gen(G, p) for p in prefixes]
    factors.append(lambda_gen(G, prefixes[-1] if prefixes else 0))
    return product(G, factors)


def p_from_eps(G: FiniteGroup, X: int) -> AlgebraElement:
    """``prod_{r in X} eps_r prod_{s not in X} (1 - eps_s)`` computed by multiplication."""
    one = unit(G)
    factors = [eps_gen(G, r) if X >> r & 1 else one - eps_gen(G, r) for r in range(G.order)]
    return product(G, factors)


def dimension(G: FiniteGroup, cap: int = DEFAULT_CAP) -> tuple[int, int]:
    """Number of arrows and the closed form ``2^{n-2}(n+1)``."""
    n = G.order
    count = len(arrows(G, cap))
    formula = Fraction(2) ** (n - 2) * (n + 1)
    return count, int(formula)


def _arrow_json(a: Arrow) -> dict:
    return {"g": a.g, "X": a.X}


def verify_foundations(G: FiniteGroup, cap: int = 8, max_word_len: int = 3) -> Report:
    """Exhaustively check the idempotent, partition-of-unity and partial representation identities."""
    check_cap(G, cap, "verify_foundations")
    rep = Report(f"foundations {G.label}")
    n = G.order
    subsets = e_subsets(G, n)
    T = fundamental_domain(G, n)
    one = unit(G)
    lam = [lambda_gen(G, g) for g in range(n)]
    eps = [eps_gen(G, g) for g in range(n)]
    P = {X: p_idem(G, X) for X in subsets}
    Gam = {X: gamma_idem(G, X) for X in subsets}
    zero = AlgebraElement.zero(G)

    c = rep.check("unit is two-sided identity on arrows")
    for a in arrows(G, n):
        b = AlgebraElement._wrap(G, {a: 1})
        c.case(one * b == b and b * one == b, arrow=_arrow_json(a))

    c = rep.check("P_X P_Y = [X=Y] P_X")
    for X in subsets:
        for Y in subsets:
            c.case(P[X] * P[Y] == (P[X] if X == Y else zero), X=X, Y=Y)

    c = rep.check("[g] P_X = [g^-1 in X] P_gX [g]")
    for g in range(n):
        for X in subsets:
            rhs = P[G.translate(g, X)] * lam[g] if X >> G.inv(g) & 1 else zero
            c.case(lam[g] * P[X] == rhs, g=g, X=X)

    c = rep.check("sum of P_X is 1")
    total = zero
    for X in subsets:
        total = total + P[X]
    c.case(total == one)

    c = rep.check("eps_g = [g][g^-1] = sum of P_X over X containing g")
    for g in range(n):
        c.case(lam[g] * lam[G.inv(g)] == eps[g], g=g)

    c = rep.check("eps_g idempotent")
    for g in range(n):
        c.case(eps[g] * eps[g] == eps[g], g=g)

    c = rep.check("eps_g eps_h = eps_h eps_g")
    for g in range(n):
        for h in range(n):
            c.case(eps[g] * eps[h] == eps[h] * eps[g], g=g, h=h)

    c = rep.check("[g] eps_h = eps_gh [g]")
    for g in range(n):
        for h in range(n):
            c.case(lam[g] * eps[h] == eps[G.mul(g, h)] * lam[g], g=g, h=h)

    c = rep.check("P_Y Gamma_X = [X~Y] P_Y")
    for X in subsets:
        for Y in subsets:
            rhs = P[Y] if T.equivalent(X, Y) else zero
            c.case(P[Y] * Gam[X] == rhs, X=X, Y=Y)

    c = rep.check("Gamma_Y Gamma_X = [X~Y] Gamma_X")
    for X in subsets:
        for Y in subsets:
            rhs = Gam[X] if T.equivalent(X, Y) else zero
            c.case(Gam[Y] * Gam[X] == rhs, X=X, Y=Y)

    c = rep.check("[g] Gamma_X = Gamma_X [g]")
    for g in range(n):
        for X in T.reps:
            c.case(lam[g] * Gam[X] == Gam[X] * lam[g], g=g, X=X)

    c = rep.check("Gamma_X central on arrows")
    for X in T.reps:
        for a in arrows(G, n):
            b = AlgebraElement._wrap(G, {a: 1})
            c.case(b * Gam[X] == Gam[X] * b, X=X, arrow=_arrow_json(a))

    c = rep.check("sum of Gamma_X over T is 1")
    total = zero
    for X in T.reps:
        total = total + Gam[X]
    c.case(total == one)

    c = rep.check("weighted and orbit-sum forms of Gamma_X agree")
    for X in subsets:
        c.case(gamma_idem_weighted(G, X) == Gam[X], X=X)

    c = rep.check("PR1: [e] = 1")
    c.case(lam[0] == one)

    c = rep.check("PR2: [g][h][h^-1] = [gh][h^-1]")
    for g in range(n):
        for h in range(n):
            hi = G.inv(h)
            c.case(lam[g] * lam[h] * lam[hi] == lam[G.mul(g, h)] * lam[hi], g=g, h=h)

    c = rep.check("PR3: [g^-1][g][h] = [g^-1][gh]")
    for g in range(n):
        gi = G.inv(g)
        for h in range(n):
            c.case(lam[gi] * lam[g] * lam[h] == lam[gi] * lam[G.mul(g, h)], g=g, h=h)

    c = rep.check("normal form of words")
    for length in range(max_word_len + 1):
        for gs in itertools.product(range(n), repeat=length):
            c.case(word(G, gs) == normal_form(G, gs), word=list(gs))

    c = rep.check("prod eps_r prod (1 - eps_s) = (e, X)")
    for X in subsets:
        c.case(p_from_eps(G, X) == P[X], X=X)

    c = rep.check("[g] (e, X) = (g, X)")
    for a in arrows(G, n):
        c.case(lam[a.g] * P[a.X] == AlgebraElement._wrap(G, {a: 1}), arrow=_arrow_json(a))

    c = rep.check("dimension 2^(n-2)(n+1)")
    count, formula = dimension(G, n)
    c.case(count == formula, count=count, formula=formula)
    return rep

