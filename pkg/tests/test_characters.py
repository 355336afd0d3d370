import itertools

import numpy as np
import pytest

from conftest import SMALL
from parfus.characters import (
    character_table,
    exact_product_index,
    irrep_matrices,
    tensor_multiplicities,
)
from parfus.group_core import (
    GroupError,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_direct_product,
    make_symmetric,
    subgroup_from_generators,
)

EXTRA = [make_dihedral(8), make_dihedral(5), make_dihedral(6), make_dicyclic(3),
         make_direct_product(make_cyclic(2), make_symmetric(3))]


def _conjugacy_class_count(G):
    classes = {frozenset(G.conjugate(g, x) for g in range(G.order)) for x in range(G.order)}
    return len(classes)


@pytest.mark.parametrize("G", SMALL + EXTRA, ids=lambda G: G.label)
def test_orthogonality(G):
    t = character_table(G)
    M = t.matrix()
    n = G.order
    assert t.size == _conjugacy_class_count(G)
    assert np.allclose(M @ M.conj().T / n, np.eye(t.size), atol=1e-9)
    # column relation: sum over characters of chi(g) conj(chi(h)) = |C(g)| [g ~ h]
    C = M.conj().T @ M
    for g in range(n):
        for h in range(n):
            conj = any(G.conjugate(k, g) == h for k in range(n))
            cent = sum(1 for k in range(n) if G.mul(k, g) == G.mul(g, k))
            assert abs(C[g, h] - (cent if conj else 0)) < 1e-9
    assert sum(d * d for d in t.degrees) == n
    assert np.allclose(M[0], 1)


def test_s3_table(s3):
    t = character_table(s3)
    assert t.degrees == (1, 1, 2)
    # standard character = fixed points minus one, computed from permutations
    perms = list(itertools.permutations(range(3)))
    std = [sum(p[i] == i for i in range(3)) - 1 for p in perms]
    assert np.allclose(t.row(2), std)


def test_q8_and_d4_degrees():
    assert character_table(make_dicyclic(2)).degrees == (1, 1, 1, 1, 2)
    assert character_table(make_dihedral(4)).degrees == (1, 1, 1, 1, 2)


def test_order_sixteen_dihedral_degrees():
    assert sorted(character_table(make_dihedral(8)).degrees) == [1, 1, 1, 1, 2, 2, 2]


def test_c3_exact_phases(c3):
    t = character_table(c3)
    assert [list(map(str, row)) for row in t.phases] == [
        ["0", "0", "0"], ["0", "1/3", "2/3"], ["0", "2/3", "1/3"]]
    w = np.exp(2j * np.pi / 3)
    assert abs(t.value(1, 1) - w) < 1e-12


@pytest.mark.parametrize("G", [G for G in SMALL if G.is_abelian], ids=lambda G: G.label)
def test_abelian_exact_matches_float(G):
    t = character_table(G)
    for a in range(t.size):
        exact = np.exp(2j * np.pi * np.array([float(p) for p in t.phases[a]]))
        assert np.max(np.abs(exact - t.row(a))) < 1e-12
        for b in range(t.size):
            assert tensor_multiplicities(t, a, b) == [(exact_product_index(t, a, b), 1)]


def test_exact_index_rejects_non_abelian(s3):
    with pytest.raises(GroupError):
        exact_product_index(character_table(s3), 0, 0)


def test_s3_tensor_square(s3):
    t = character_table(s3)
    assert tensor_multiplicities(t, 2, 2) == [(0, 1), (1, 1), (2, 1)]
    assert tensor_multiplicities(t, 1, 2) == [(2, 1)]


@pytest.mark.parametrize("G", SMALL + EXTRA[:2], ids=lambda G: G.label)
def test_tensor_dimensions(G):
    t = character_table(G)
    for a in range(t.size):
        for b in range(t.size):
            total = sum(m * t.degrees[c] for c, m in tensor_multiplicities(t, a, b))
            assert total == t.degrees[a] * t.degrees[b]


def test_subgroup_table_uses_parent_indices(s3):
    A3 = subgroup_from_generators(s3, [3])
    t = character_table(A3)
    assert t.elements == A3.elements
    for g in A3.elements:
        assert abs(t.value(0, g) - 1) < 1e-12
    assert t.find({g: t.value(2, g) for g in A3.elements}) == 2


def test_find_missing_row(c3):
    with pytest.raises(GroupError):
        character_table(c3).find({1: 5.0})


@pytest.mark.parametrize("G", [make_symmetric(3), make_dihedral(4), make_dicyclic(2), make_dicyclic(3)],
                         ids=lambda G: G.label)
def test_irrep_matrices(G):
    t = character_table(G)
    for alpha in range(t.size):
        mats = irrep_matrices(t, alpha)
        d = t.degrees[alpha]
        for g in range(G.order):
            assert mats[g].shape == (d, d)
            assert np.allclose(mats[g] @ mats[g].conj().T, np.eye(d), atol=1e-8)
            assert abs(np.trace(mats[g]) - t.row(alpha)[g]) < 1e-8
            for h in range(G.order):
                assert np.allclose(mats[G.mul(g, h)], mats[g] @ mats[h], atol=1e-8)


def test_tables_are_deterministic():
    a = character_table(make_dihedral(4)).chars
    b = character_table(make_dihedral(4)).chars
    assert a == b


def test_order_limit():
    with pytest.raises(GroupError):
        character_table(make_symmetric(4))


def test_klein_rows_by_exponent(v4):
    t = character_table(v4)
    # each non-trivial row is -1 on exactly two elements
    signs = [sorted(np.round(t.row(a).real).astype(int)) for a in range(1, 4)]
    assert signs == [[-1, -1, 1, 1]] * 3
