"""Character tables of small groups and tensor-product multiplicities.

Abelian groups get exact tables: every value is ``exp(2 pi i q)`` with ``q`` a
rational phase. Non-abelian tables come from common eigenvectors of the class
multiplication matrices, which is enough for groups of order at most 16.
"""
from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

from .group_core import FiniteGroup, GroupError, Subgroup, bits, elementary_decomposition

VALUE_TOL = 1e-9
MULT_TOL = 1e-6
MAX_RETRIES = 12
SEED = 20240601

GroupLike = Union[FiniteGroup, Subgroup]


@dataclass(frozen=True)
class CharacterTable:
    """Rows are irreducible characters, columns are conjugacy classes.

    ``elements`` lists the parent-group indices of the group's elements, so a
    table for a subgroup can be evaluated directly on parent elements.
    """

    group: FiniteGroup  # the group itself, re-indexed from 0
    elements: tuple[int, ...]
    classes: tuple[int, ...]  # masks over local indices, ordered by smallest member
    chars: tuple[tuple[complex, ...], ...]
    degrees: tuple[int, ...]
    # exact phases per local element (abelian only): value = exp(2 pi i phase)
    phases: tuple[tuple[Fraction, ...], ...] | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def size(self) -> int:
        return len(self.chars)

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(bin(c).count("1") for c in self.classes)

    def _local(self, g: int) -> int:
        return self.elements.index(g)

    def class_of(self, local: int) -> int:
        for k, c in enumerate(self.classes):
            if c >> local & 1:
                return k
        raise KeyError(local)

    def value(self, alpha: int, g: int) -> complex:
        """Character ``alpha`` at the parent-group element ``g``."""
        return self.chars[alpha][self.class_of(self._local(g))]

    def row(self, alpha: int) -> np.ndarray:
        """Values at every element, in local element order."""
        cls = [self.class_of(i) for i in range(self.order)]
        return np.array([self.chars[alpha][k] for k in cls], dtype=complex)

    def matrix(self) -> np.ndarray:
        """All rows, one column per element."""
        return np.array([self.row(a) for a in range(self.size)])

    def find(self, values: dict[int, complex]) -> int:
        """Index of the row matching ``values`` (parent element -> value)."""
        for a in range(self.size):
            if all(abs(self.value(a, g) - v) < 1e-6 for g, v in values.items()):
                return a
        raise GroupError("no irreducible character matches the given values")


def _local_group(H: GroupLike) -> tuple[FiniteGroup, tuple[int, ...]]:
    if isinstance(H, Subgroup):
        return H.as_group, H.elements
    return H, tuple(range(H.order))


def _conjugacy_classes(G: FiniteGroup) -> tuple[int, ...]:
    seen = 0
    out = []
    for x in range(G.order):
        if seen >> x & 1:
            continue
        c = 0
        for g in range(G.order):
            c |= 1 << G.conjugate(g, x)
        seen |= c
        out.append(c)
    return tuple(out)


def _abelian_table(G: FiniteGroup):
    dec = elementary_decomposition(G)
    coords = dec.coordinates
    orders = dec.orders
    phases = []
    for ks in itertools.product(*(range(q) for q in orders)):
        row = []
        for x in range(G.order):
            ts = coords[x]
            row.append(sum((Fraction(k * t, q) for k, t, q in zip(ks, ts, orders)), Fraction(0)) % 1)
        phases.append(tuple(row))
    classes = tuple(1 << x for x in range(G.order))
    chars = tuple(tuple(cmath.exp(2j * cmath.pi * float(p)) for p in row) for row in phases)
    return classes, chars, tuple(1 for _ in phases), tuple(phases)


def _class_constants(G: FiniteGroup, classes: tuple[int, ...]) -> np.ndarray:
    """``c[r, s, t]`` = number of pairs (x in C_r, y in C_s) with x y = fixed element of C_t."""
    k = len(classes)
    which = {}
    for idx, c in enumerate(classes):
        for x in bits(c):
            which[x] = idx
    reps = [min(bits(c)) for c in classes]
    out = np.zeros((k, k, k))
    for r, cr in enumerate(classes):
        for x in bits(cr):
            for t, z in enumerate(reps):
                y = G.mul(G.inv(x), z)
                out[r, which[y], t] += 1
    return out


def _dixon_table(G: FiniteGroup, rng: np.random.Generator):
    classes = _conjugacy_classes(G)
    k = len(classes)
    sizes = np.array([bin(c).count("1") for c in classes], dtype=float)
    C = _class_constants(G, classes)
    n = G.order
    for _ in range(MAX_RETRIES):
        coeffs = rng.standard_normal(k)
        M = np.einsum("r,rst->st", coeffs, C)
        vals, vecs = np.linalg.eig(M)
        gaps = [abs(vals[i] - vals[j]) for i in range(k) for j in range(i)]
        if gaps and min(gaps) < 1e-6:
            continue
        rows = []
        for v in vecs.T:
            w = v / v[0]
            norm = float(np.sum(np.abs(w) ** 2 / sizes).real)
            deg = np.sqrt(n / norm)
            rows.append(deg * w / sizes)
        table = np.array(rows)
        degrees = np.rint(table[:, 0].real)
        if np.max(np.abs(table[:, 0] - degrees)) > 1e-6:
            continue
        gram = (table * sizes) @ table.conj().T / n
        if np.max(np.abs(gram - np.eye(k))) > VALUE_TOL:
            continue
        keyed = []
        for row, d in zip(table, degrees):
            key = (int(d), tuple((-round(z.real, 6), -round(z.imag, 6)) for z in row))
            keyed.append((key, row))
        keyed.sort(key=lambda kr: kr[0])
        chars = tuple(tuple(complex(z) for z in row) for _, row in keyed)
        return classes, chars, tuple(kr[0][0] for kr in keyed), None
    raise GroupError(f"class-sum eigenvectors did not separate for {G.label}")


@lru_cache(maxsize=None)
def _table_for(cayley: tuple[tuple[int, ...], ...]):
    from .group_core import from_cayley

    G = from_cayley([list(r) for r in cayley], check_associative=False)
    if G.is_abelian:
        return _abelian_table(G)
    return _dixon_table(G, np.random.default_rng(SEED))


def character_table(H: GroupLike) -> CharacterTable:
    """Full character table; the trivial character is always row 0."""
    G, elements = _local_group(H)
    if G.order > 16:
        raise GroupError(f"character tables are limited to order 16, got {G.order}")
    classes, chars, degrees, phases = _table_for(G.cayley)
    return CharacterTable(G, elements, classes, chars, degrees, phases)


def tensor_multiplicities(table: CharacterTable, a: int, b: int) -> list[tuple[int, int]]:
    """Multiplicity of each irreducible in the tensor product of ``a`` and ``b``."""
    sizes = np.array(table.class_sizes, dtype=float)
    chars = np.array(table.chars)
    prod = chars[a] * chars[b]
    out = []
    for c in range(table.size):
        m = np.sum(sizes * prod * np.conj(chars[c])) / table.order
        r = round(m.real)
        if abs(m - r) > MULT_TOL:
            raise GroupError(f"non-integral multiplicity {m} for ({a}, {b}, {c})")
        if r:
            out.append((c, int(r)))
    return out


def exact_product_index(table: CharacterTable, a: int, b: int) -> int:
    """For exact (abelian) tables: the row whose phases are the sum of ``a`` and ``b``."""
    if table.phases is None:
        raise GroupError("exact phases exist only for abelian tables")
    want = tuple((x + y) % 1 for x, y in zip(table.phases[a], table.phases[b]))
    return table.phases.index(want)


def irrep_matrices(table: CharacterTable, alpha: int, seed: int = SEED) -> list[np.ndarray]:
    """Unitary matrices of irreducible ``alpha``, one per local element.

    Degree-one characters are returned as 1x1 matrices. Higher degrees are cut
    out of the regular representation: project onto the isotypic component,
    then split it with a random Hermitian element of the commutant.
    """
    G = table.group
    n = G.order
    d = table.degrees[alpha]
    chi = table.row(alpha)
    if d == 1:
        return [np.array([[chi[g]]]) for g in range(n)]
    R = []
    for g in range(n):
        m = np.zeros((n, n))
        for h in range(n):
            m[G.mul(g, h), h] = 1
        R.append(m)
    P = sum(np.conj(chi[g]) * R[g] for g in range(n)) * d / n
    u, _, _ = np.linalg.svd(P)
    Q = u[:, : d * d]
    rng = np.random.default_rng(seed)
    for _ in range(MAX_RETRIES):
        A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        A = A + A.conj().T
        B = sum(R[g] @ A @ R[g].T for g in range(n))
        Bq = Q.conj().T @ B @ Q
        vals, vecs = np.linalg.eigh((Bq + Bq.conj().T) / 2)
        if d > 1 and abs(vals[d] - vals[d - 1]) < 1e-6:
            continue
        V = vecs[:, :d]
        if np.max(np.abs(vals[:d] - vals[0])) > 1e-6:
            continue
        basis = Q @ V
        mats = [basis.conj().T @ R[g] @ basis for g in range(n)]
        ok = all(abs(np.trace(mats[g]) - chi[g]) < 1e-8 for g in range(n))
        ok = ok and all(
            np.allclose(mats[G.mul(g, h)], mats[g] @ mats[h], atol=1e-8)
            for g in range(n) for h in range(n)
        )
        if ok:
            return mats
    raise GroupError(f"could not split the isotypic component of character {alpha}")

