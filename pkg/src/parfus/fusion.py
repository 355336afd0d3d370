"""Grothendieck ring of the module category: fusion of simple labels."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .characters import character_table, tensor_multiplicities
from .group_core import DEFAULT_CAP, FiniteGroup
from .rep_theory import SimpleLabel, make_label, simple_labels, support_dims
from .report import Report
from .subsets import e_subsets, fundamental_domain, isotropy
from .weak_hopf import balanced_components


def canonicalize_label(G: FiniteGroup, Y: int, beta: int) -> SimpleLabel:
    """Move a label over any Y to its orbit representative.

    With ``Y = tX`` the isotropy groups satisfy ``G_Y = t G_X t^{-1}``, so the
    character is transported by ``chi(h) = beta(t h t^{-1})``.
    """
    T = fundamental_domain(G, G.order)
    X = T.rep_of(Y)
    if X == Y:
        return make_label(G, X, beta)
    t = T.translator(Y)
    src = character_table(isotropy(G, Y))
    if not 0 <= beta < src.size:
        raise ValueError(f"character index {beta} out of range")
    dst = character_table(T.isotropy[X])
    values = {h: src.value(beta, G.conjugate(t, h)) for h in dst.elements}
    return make_label(G, X, dst.find(values))


def fuse(G: FiniteGroup, a: SimpleLabel, b: SimpleLabel) -> list[tuple[SimpleLabel, int]]:
    """Decomposition of ``a ⊠ b``; empty unless both live over the same orbit."""
    if a.X != b.X:
        return []
    table = character_table(fundamental_domain(G, G.order).isotropy[a.X])
    return [(make_label(G, a.X, gamma), m) for gamma, m in tensor_multiplicities(table, a.alpha, b.alpha)]


@dataclass(frozen=True)
class FusionTable:
    group: FiniteGroup
    labels: tuple[SimpleLabel, ...]
    N: tuple[tuple[tuple[int, ...], ...], ...]

    def product(self, a: int, b: int) -> list[tuple[int, int]]:
        return [(c, m) for c, m in enumerate(self.N[a][b]) if m]

    def to_json(self) -> dict:
        return {
            "labels": [lab.to_json() for lab in self.labels],
            "N": [[list(row) for row in plane] for plane in self.N],
        }


def fusion_table(G: FiniteGroup, cap: int = DEFAULT_CAP) -> FusionTable:
    labels = tuple(simple_labels(G, cap))
    pos = {lab: i for i, lab in enumerate(labels)}
    k = len(labels)
    N = []
    for a in labels:
        plane = []
        for b in labels:
            row = [0] * k
            for lab, m in fuse(G, a, b):
                row[pos[lab]] += m
            plane.append(tuple(row))
        N.append(tuple(plane))
    return FusionTable(G, labels, tuple(N))


def unit_decomposition(G: FiniteGroup, cap: int = DEFAULT_CAP) -> list[SimpleLabel]:
    """Summands of the monoidal unit: the trivial character over every orbit."""
    return [make_label(G, X, 0) for X in fundamental_domain(G, cap).reps]


def label_name(G: FiniteGroup, lab: SimpleLabel) -> str:
    """``M_(X,ε)`` for trivial isotropy, ``M_(X,i)`` otherwise; ``X`` is named by the group when full."""
    T = fundamental_domain(G, G.order)
    X = G.label if lab.X == G.full_mask else G.format_set(lab.X)
    if G.order == 1:
        X = G.format_set(lab.X)
    char = "ε" if T.isotropy[lab.X].order == 1 else str(lab.alpha)
    return f"M_({X},{char})"


def _cell(G: FiniteGroup, table: FusionTable, a: int, b: int) -> str:
    parts = []
    for c, m in table.product(a, b):
        name = label_name(G, table.labels[c])
        parts.append(name if m == 1 else f"{m}·{name}")
    return " ⊕ ".join(parts) if parts else "0"


def _grid(table: FusionTable) -> list[list[str]]:
    G = table.group
    names = [label_name(G, lab) for lab in table.labels]
    rows = [["⊠"] + names]
    for a, name in enumerate(names):
        rows.append([name] + [_cell(G, table, a, b) for b in range(len(names))])
    return rows


def to_markdown(table: FusionTable) -> str:
    grid = _grid(table)
    lines = ["| " + " | ".join(grid[0]) + " |", "|" + "---|" * len(grid[0])]
    for row in grid[1:]:
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def to_csv(table: FusionTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(_grid(table))
    return buf.getvalue()


def verify_fusion(G: FiniteGroup, cap: int = 6) -> Report:
    rep = Report(f"fusion {G.label}")
    table = fusion_table(G, cap)
    labels = table.labels
    N = table.N
    k = len(labels)
    idx = range(k)

    c = rep.check("entries are non-negative integers")
    c.case(all(v >= 0 for plane in N for row in plane for v in row))

    c = rep.check("associativity of structure constants")
    arr = np.array(N, dtype=np.int64).reshape(k, k, k)
    for a in idx:
        # (a b) c versus a (b c), all b, c, d at once
        lhs = np.einsum("be,ecd->bcd", arr[a], arr)
        rhs = np.einsum("bcf,fd->bcd", arr, arr[a])
        if np.array_equal(lhs, rhs):
            c.cases += k ** 3
        else:
            b, cc, d = (int(v) for v in np.argwhere(lhs != rhs)[0])
            c.case(False, a=a, b=b, c=cc, d=d)

    c = rep.check("unit summands act as the identity")
    units = [labels.index(u) for u in unit_decomposition(G, cap)]
    for a in idx:
        left = [sum(N[u][a][d] for u in units) for d in idx]
        right = [sum(N[a][u][d] for u in units) for d in idx]
        expected = [int(d == a) for d in idx]
        c.case(left == expected and right == expected, a=a)

    c = rep.check("fusion vanishes across different orbits")
    for a in idx:
        for b in idx:
            if labels[a].X != labels[b].X:
                c.case(not any(N[a][b]), a=a, b=b)

    c = rep.check("dimension matches balanced tensor over A_par")
    dims = {lab: support_dims(G, lab) for lab in labels}
    for a in idx:
        for b in idx:
            _, total = balanced_components(dims[labels[a]], dims[labels[b]])
            fused = sum(m * labels[cc].dim for cc, m in enumerate(N[a][b]))
            c.case(total == fused, a=a, b=b, balanced=total, fused=fused)

    c = rep.check("fusion is commutative")
    for a in idx:
        for b in idx:
            c.case(N[a][b] == N[b][a], a=a, b=b)

    c = rep.check("canonicalize_label is the identity on representatives")
    for lab in labels:
        c.case(canonicalize_label(G, lab.X, lab.alpha) == lab, **lab.to_json())

    c = rep.check("canonicalize_label preserves dimension over every subset")
    for Y in e_subsets(G, G.order):
        tab = character_table(isotropy(G, Y))
        n_Y = bin(Y).count("1") // tab.order
        for beta, d in enumerate(tab.degrees):
            lab = canonicalize_label(G, Y, beta)
            c.case(lab.dim == n_Y * d, Y=Y, beta=beta)
    return rep
