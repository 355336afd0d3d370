"""Simple modules of the partial group algebra and their exact action matrices.

Each simple module is labelled by an orbit representative X and an
irreducible character of the isotropy group G_X.  Its dimension is
``n_X * deg(alpha)`` where ``n_X`` is the orbit size.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blocks import GroupAlgebraMatrix, phi_block
from .characters import CharacterTable, character_table, irrep_matrices
from .group_core import DEFAULT_CAP, FiniteGroup
from .groupoid import dimension, gamma_idem, lambda_gen
from .report import Report
from .subsets import e_subsets, fundamental_domain

COMMUTANT_TOL = 1e-9


@dataclass(frozen=True, order=True)
class SimpleLabel:
    X: int
    alpha: int
    dim: int

    def to_json(self) -> dict:
        return {"X": self.X, "alpha": self.alpha, "dim": self.dim}


def isotropy_table(G: FiniteGroup, X: int) -> CharacterTable:
    T = fundamental_domain(G, G.order)
    return character_table(T.isotropy[T.rep_of(X)])


def simple_labels(G: FiniteGroup, cap: int = DEFAULT_CAP) -> list[SimpleLabel]:
    """Labels in block order, then character order."""
    T = fundamental_domain(G, cap)
    out = []
    for X in T.reps:
        n = len(T.transversal[X])
        table = character_table(T.isotropy[X])
        for alpha, d in enumerate(table.degrees):
            out.append(SimpleLabel(X, alpha, n * d))
    return out


def make_label(G: FiniteGroup, X: int, alpha: int) -> SimpleLabel:
    T = fundamental_domain(G, G.order)
    if T.rep_of(X) != X:
        raise ValueError(f"{G.format_set(X)} is not an orbit representative")
    table = character_table(T.isotropy[X])
    if not 0 <= alpha < table.size:
        raise ValueError(f"character index {alpha} out of range for G_X of order {table.order}")
    return SimpleLabel(X, alpha, len(T.transversal[X]) * table.degrees[alpha])


def module_matrix(G: FiniteGroup, X: int, g: int) -> GroupAlgebraMatrix:
    """``phi_X(lambda([g]) Gamma_X)``: the action of [g] on every module over X at once."""
    return phi_block(G, X, lambda_gen(G, g) * gamma_idem(G, X))


def irrep(G: FiniteGroup, label: SimpleLabel):
    """Map parent element of G_X to the unitary matrix of character ``alpha``."""
    table = isotropy_table(G, label.X)
    mats = irrep_matrices(table, label.alpha)
    index = {g: i for i, g in enumerate(table.elements)}
    return lambda t: mats[index[t]]


def action_matrices(G: FiniteGroup, label: SimpleLabel) -> list[np.ndarray]:
    """Complex matrices of [g] on ``M_(X, alpha)``, one per group element."""
    rho = irrep(G, label)
    return [module_matrix(G, label.X, g).specialize(rho) for g in range(G.order)]


def support_dims(G: FiniteGroup, label: SimpleLabel) -> dict[int, int]:
    """``dim P_Z M`` for every subset Z containing e."""
    T = fundamental_domain(G, G.order)
    d = label.dim // len(T.transversal[label.X])
    orbit = set(T.orbit(label.X))
    return {Z: (d if Z in orbit else 0) for Z in e_subsets(G, G.order)}


def regular_support_dims(G: FiniteGroup) -> dict[int, int]:
    """``dim P_Z A_par``: one for every Z."""
    return {Z: 1 for Z in e_subsets(G, G.order)}


def commutant_dimension(mats: list[np.ndarray], tol: float = COMMUTANT_TOL) -> int:
    """Dimension of the space of matrices commuting with all of ``mats``."""
    m = mats[0].shape[0]
    eye = np.eye(m)
    system = np.vstack([np.kron(eye, A) - np.kron(A.T, eye) for A in mats])
    s = np.linalg.svd(system, compute_uv=False)
    scale = s[0] if s[0] > 0 else 1.0
    return int(np.sum(s <= tol * scale))


def verify_simples(G: FiniteGroup, cap: int = 8) -> Report:
    rep = Report(f"simples {G.label}")
    T = fundamental_domain(G, cap)
    labels = simple_labels(G, cap)
    n = G.order

    c = rep.check("sum of dim^2 over simples = dim")
    total = sum(lab.dim ** 2 for lab in labels)
    count, _ = dimension(G, cap)
    c.case(total == count, sum_dim_sq=total, dim=count)

    c = rep.check("number of simples = sum of class counts of G_X")
    c.case(len(labels) == sum(character_table(T.isotropy[X]).size for X in T.reps))

    for X in T.reps:
        m = [module_matrix(G, X, g) for g in range(n)]
        c = rep.check("module matrices multiply like lambda words")
        gam = gamma_idem(G, X)
        for g in range(n):
            for h in range(n):
                lhs = m[g] @ m[h]
                rhs = phi_block(G, X, lambda_gen(G, g) * lambda_gen(G, h) * gam)
                c.case(lhs == rhs, X=X, g=g, h=h)

    for lab in labels:
        A = action_matrices(G, lab)
        ctx = lab.to_json()
        ident = np.eye(lab.dim)

        c = rep.check("PR1 on simple")
        c.case(np.allclose(A[0], ident, atol=1e-9), **ctx)

        c = rep.check("PR2 on simple")
        for g in range(n):
            for h in range(n):
                hi = G.inv(h)
                ok = np.allclose(A[g] @ A[h] @ A[hi], A[G.mul(g, h)] @ A[hi], atol=1e-9)
                c.case(ok, g=g, h=h, **ctx)

        c = rep.check("PR3 on simple")
        for g in range(n):
            gi = G.inv(g)
            for h in range(n):
                ok = np.allclose(A[gi] @ A[g] @ A[h], A[gi] @ A[G.mul(g, h)], atol=1e-9)
                c.case(ok, g=g, h=h, **ctx)

        c = rep.check("commutant is one-dimensional")
        dim_c = commutant_dimension(A)
        c.case(dim_c == 1, commutant=dim_c, **ctx)

        c = rep.check("eps_g acts by [g in hX]")
        d = lab.dim // len(T.transversal[lab.X])
        orbit = T.orbit(lab.X)
        for g in range(n):
            eps = A[g] @ A[G.inv(g)]
            diag = np.concatenate([np.full(d, float(Y >> g & 1)) for Y in orbit])
            c.case(np.allclose(eps, np.diag(diag), atol=1e-9), g=g, **ctx)
    return rep


def simples_json(G: FiniteGroup, cap: int = DEFAULT_CAP) -> dict:
    labels = simple_labels(G, cap)
    return {
        "labels": [lab.to_json() for lab in labels],
        "sum_dim_sq": sum(lab.dim ** 2 for lab in labels),
    }
