"""Blocks of the groupoid algebra as matrix algebras over isotropy group algebras."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Sequence

import numpy as np

from .characters import character_table
from .group_core import DEFAULT_CAP, FiniteGroup, Subgroup
from .groupoid import AlgebraElement, Arrow, arrows, dimension, gamma_idem, lambda_gen, p_idem
from .report import Report
from .subsets import OrbitTable, fundamental_domain


@dataclass(frozen=True)
class BlockInfo:
    X: int
    n: int
    isotropy: Subgroup

    @property
    def dim(self) -> int:
        return self.n * self.n * self.isotropy.order


def _clean(entry: Mapping[int, Rational]) -> dict[int, Rational]:
    return {t: c for t, c in entry.items() if c != 0}


class GroupAlgebraMatrix:
    """n x n matrix whose entries are sparse elements of kH, H a subgroup."""

    __slots__ = ("isotropy", "entries")

    def __init__(self, isotropy: Subgroup, entries: Sequence[Sequence[Mapping[int, Rational]]]):
        rows = []
        for row in entries:
            clean_row = []
            for entry in row:
                for t in entry:
                    if t not in isotropy:
                        raise ValueError(f"entry element {t} lies outside the isotropy subgroup")
                clean_row.append(_clean(entry))
            rows.append(tuple(clean_row))
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.isotropy = isotropy
        self.entries = tuple(rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def zero(cls, isotropy: Subgroup, n: int) -> "GroupAlgebraMatrix":
        return cls(isotropy, [[{} for _ in range(n)] for _ in range(n)])

    @classmethod
    def unit(cls, isotropy: Subgroup, n: int, i: int, j: int, t: int = 0, c: Rational = 1):
        """``c·t·E_ij``."""
        rows = [[{} for _ in range(n)] for _ in range(n)]
        rows[i][j] = {t: c}
        return cls(isotropy, rows)

    @classmethod
    def identity(cls, isotropy: Subgroup, n: int) -> "GroupAlgebraMatrix":
        return cls(isotropy, [[{0: 1} if i == j else {} for j in range(n)] for i in range(n)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraMatrix):
            return NotImplemented
        return self.isotropy.members == other.isotropy.members and self.entries == other.entries

    __hash__ = None

    def __add__(self, other: "GroupAlgebraMatrix") -> "GroupAlgebraMatrix":
        rows = []
        for ra, rb in zip(self.entries, other.entries):
            row = []
            for a, b in zip(ra, rb):
                s = dict(a)
                for t, c in b.items():
                    s[t] = s.get(t, 0) + c
                row.append(s)
            rows.append(row)
        return GroupAlgebraMatrix(self.isotropy, rows)

    def __matmul__(self, other: "GroupAlgebraMatrix") -> "GroupAlgebraMatrix":
        G = self.isotropy.parent
        n = self.n
        rows = [[{} for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for k in range(n):
                a = self.entries[i][k]
                if not a:
                    continue
                for j in range(n):
                    b = other.entries[k][j]
                    if not b:
                        continue
                    out = rows[i][j]
                    for s, c in a.items():
                        for t, d in b.items():
                            st = G.mul(s, t)
                            out[st] = out.get(st, 0) + c * d
        return GroupAlgebraMatrix(self.isotropy, rows)

    def specialize(self, rho) -> np.ndarray:
        """Replace each group element t by the matrix ``rho(t)`` (a d x d array)."""
        d = np.asarray(rho(0)).shape[0]
        n = self.n
        out = np.zeros((n * d, n * d), dtype=complex)
        for i, row in enumerate(self.entries):
            for j, entry in enumerate(row):
                for t, c in entry.items():
                    out[i * d:(i + 1) * d, j * d:(j + 1) * d] += float(c) * np.asarray(rho(t))
        return out

    def to_json(self) -> list:
        return [
            [[{"t": t, "c": str(Fraction(c))} for t, c in sorted(e.items())] for e in row]
            for row in self.entries
        ]

    def __repr__(self) -> str:
        return f"GroupAlgebraMatrix(n={self.n}, {self.to_json()})"


def blocks(G: FiniteGroup, cap: int = DEFAULT_CAP) -> list[BlockInfo]:
    T = fundamental_domain(G, cap)
    return [BlockInfo(X, len(T.transversal[X]), T.isotropy[X]) for X in T.reps]


def block_arrows(G: FiniteGroup, X: int) -> list[Arrow]:
    """Basis arrows of the block of X: arrows whose source lies in the orbit of X."""
    T = fundamental_domain(G, G.order)
    out = []
    for Y in sorted(T.orbit(X)):
        for g in range(G.order):
            if Y >> G.inv(g) & 1:
                out.append(Arrow(g, Y))
    return out


def _positions(T: OrbitTable, X: int) -> dict[int, int]:
    return {Y: i for i, Y in enumerate(T.orbit(X))}


def phi_block(G: FiniteGroup, X: int, x: AlgebraElement) -> GroupAlgebraMatrix:
    """Matrix of x in ``M_n(kG_X)``; arrow ``(g, g_j X)`` goes to ``(g_i^{-1} g g_j) E_ij``."""
    T = fundamental_domain(G, G.order)
    X = T.rep_of(X)
    gs = T.transversal[X]
    pos = _positions(T, X)
    n = len(gs)
    rows = [[{} for _ in range(n)] for _ in range(n)]
    for (g, Y), c in x.items():
        j = pos.get(Y)
        if j is None:
            raise ValueError(f"arrow ({g}, {Y}) is not in the block of {G.format_set(X)}")
        i = pos[G.translate(g, Y)]
        t = G.prod((G.inv(gs[i]), g, gs[j]))
        entry = rows[i][j]
        entry[t] = entry.get(t, 0) + c
    return GroupAlgebraMatrix(T.isotropy[X], rows)


def psi_block(G: FiniteGroup, X: int, m: GroupAlgebraMatrix) -> AlgebraElement:
    """Inverse of :func:`phi_block`: ``t E_ij`` goes to the arrow ``(g_i t g_j^{-1}, g_j X)``."""
    T = fundamental_domain(G, G.order)
    X = T.rep_of(X)
    gs = T.transversal[X]
    stab = T.isotropy[X]
    if m.n != len(gs):
        raise ValueError(f"expected a {len(gs)}x{len(gs)} matrix, got {m.n}x{m.n}")
    terms: dict[Arrow, Rational] = {}
    for i, row in enumerate(m.entries):
        for j, entry in enumerate(row):
            Y = G.translate(gs[j], X)
            for t, c in entry.items():
                if t not in stab:
                    raise ValueError(f"entry element {t} is not in the isotropy of {G.format_set(X)}")
                a = Arrow(G.prod((gs[i], t, G.inv(gs[j]))), Y)
                terms[a] = terms.get(a, 0) + c
    return AlgebraElement(G, terms)


def wedderburn_summary(G: FiniteGroup, cap: int = DEFAULT_CAP) -> list[int]:
    """Sorted sizes of the complex matrix algebras in the full decomposition."""
    sizes = []
    for b in blocks(G, cap):
        for d in character_table(b.isotropy).degrees:
            sizes.append(b.n * d)
    return sorted(sizes)


def _counted(sizes: Sequence[int]) -> list[tuple[int, int]]:
    return sorted(Counter(sizes).items())


def format_wedderburn(sizes: Sequence[int]) -> str:
    """Style ``7C ⊕ M_2(C) ⊕ M_3(C)``."""
    parts = []
    for size, count in _counted(sizes):
        k = "" if count == 1 else str(count)
        parts.append(f"{k}C" if size == 1 else f"{k}M_{size}(C)")
    return " ⊕ ".join(parts)


def format_wedderburn_md(sizes: Sequence[int]) -> str:
    """Style ``7·M1 ⊕ M2 ⊕ M3 over C``."""
    parts = []
    for size, count in _counted(sizes):
        parts.append(f"M{size}" if count == 1 else f"{count}·M{size}")
    return " ⊕ ".join(parts) + " over C"


def decomposition_json(G: FiniteGroup, spec: str, cap: int = DEFAULT_CAP) -> dict:
    count, _ = dimension(G, cap)
    return {
        "group": spec,
        "dim": count,
        "blocks": [{"X": b.X, "n": b.n, "isotropy_order": b.isotropy.order} for b in blocks(G, cap)],
        "wedderburn": wedderburn_summary(G, cap),
    }


def verify_blocks(G: FiniteGroup, cap: int = 8) -> Report:
    """Check that phi/psi are mutually inverse algebra maps on every block."""
    rep = Report(f"blocks {G.label}")
    T = fundamental_domain(G, cap)
    infos = blocks(G, cap)

    c = rep.check("block dimensions sum to dim")
    total = sum(b.dim for b in infos)
    c.case(total == len(arrows(G, cap)), total=total)

    for b in infos:
        X, n, stab = b.X, b.n, b.isotropy
        basis = block_arrows(G, X)
        elems = {a: AlgebraElement._wrap(G, {a: 1}) for a in basis}
        images = {a: phi_block(G, X, e) for a, e in elems.items()}

        c = rep.check("block basis size is n^2 |G_X|")
        c.case(len(basis) == b.dim, X=X)

        c = rep.check("psi(phi(x)) = x on block arrows")
        for a in basis:
            c.case(psi_block(G, X, images[a]) == elems[a], X=X, g=a.g, Y=a.X)

        c = rep.check("phi(psi(t E_ij)) = t E_ij")
        for i in range(n):
            for j in range(n):
                for t in stab.elements:
                    m = GroupAlgebraMatrix.unit(stab, n, i, j, t)
                    c.case(phi_block(G, X, psi_block(G, X, m)) == m, X=X, i=i, j=j, t=t)

        c = rep.check("phi multiplicative on block arrow pairs")
        for a in basis:
            for a2 in basis:
                c.case(
                    phi_block(G, X, elems[a] * elems[a2]) == images[a] @ images[a2],
                    X=X, left=list(a), right=list(a2),
                )

        c = rep.check("phi(P_{g_i X}) = E_ii")
        for i, Y in enumerate(T.orbit(X)):
            c.case(phi_block(G, X, p_idem(G, Y)) == GroupAlgebraMatrix.unit(stab, n, i, i), X=X, i=i)

        c = rep.check("phi(Gamma_X) = identity")
        c.case(phi_block(G, X, gamma_idem(G, X)) == GroupAlgebraMatrix.identity(stab, n), X=X)

        c = rep.check("phi additive on lambda generators")
        gam = gamma_idem(G, X)
        for g in range(G.order):
            lg = lambda_gen(G, g) * gam
            for h in range(G.order):
                lh = lambda_gen(G, h) * gam
                c.case(phi_block(G, X, lg + lh) == phi_block(G, X, lg) + phi_block(G, X, lh), X=X, g=g, h=h)
    return rep
