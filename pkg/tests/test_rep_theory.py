import numpy as np
import pytest

import oracles
from conftest import SMALL, UP_TO_6
from parfus.blocks import GroupAlgebraMatrix
from parfus.group_core import make_cyclic, make_symmetric
from parfus.groupoid import dimension
from parfus.rep_theory import (
    SimpleLabel,
    action_matrices,
    commutant_dimension,
    make_label,
    module_matrix,
    simple_labels,
    simples_json,
    support_dims,
    verify_simples,
)
from parfus.subsets import fundamental_domain


def test_c3_catalog(c3):
    labels = simple_labels(c3)
    assert [lab.dim for lab in labels] == [1, 2, 1, 1, 1]
    assert sum(lab.dim ** 2 for lab in labels) == 8


def test_z4_catalog(z4):
    labels = simple_labels(z4)
    # one simple per summand of 7C + M_2(C) + M_3(C)
    assert len(labels) == 9
    assert len(labels) == oracles.center_dimension(z4)
    assert sum(lab.dim ** 2 for lab in labels) == 20


def test_trivial_group_catalog():
    assert simple_labels(make_cyclic(1)) == [SimpleLabel(1, 0, 1)]


@pytest.mark.parametrize("G", SMALL, ids=lambda G: G.label)
def test_sum_of_squares(G):
    assert sum(lab.dim ** 2 for lab in simple_labels(G)) == dimension(G)[0]


def test_module_matrix_c3(c3):
    # on the two-point orbit {e,a} ~ {e,a^2}, [a] is a single off-diagonal unit
    X = 0b011
    H = fundamental_domain(c3).isotropy[X]
    assert module_matrix(c3, X, 1) == GroupAlgebraMatrix.unit(H, 2, 0, 1)
    assert module_matrix(c3, X, 0) == GroupAlgebraMatrix.identity(H, 2)


def test_full_block_c3_is_character(c3):
    X = c3.full_mask
    for alpha in range(3):
        A = action_matrices(c3, make_label(c3, X, alpha))
        w = np.exp(2j * np.pi * alpha / 3)
        assert np.allclose(A[1], [[w]])


def test_make_label_errors(c3):
    with pytest.raises(ValueError):
        make_label(c3, 0b101, 0)  # not a representative
    with pytest.raises(ValueError):
        make_label(c3, 0b001, 1)


def test_commutant_dimension_basics():
    assert commutant_dimension([np.eye(3)]) == 9
    assert commutant_dimension([np.diag([1.0, 2.0, 3.0])]) == 3
    J = np.array([[0.0, 1.0], [0.0, 0.0]])
    assert commutant_dimension([J, J.T]) == 1


@pytest.mark.parametrize("G", [make_symmetric(3), make_cyclic(4)], ids=lambda G: G.label)
def test_partial_isometry_shadow(G):
    for lab in simple_labels(G):
        A = action_matrices(G, lab)
        for g in range(G.order):
            assert np.allclose(A[g] @ A[G.inv(g)] @ A[g], A[g], atol=1e-9)


def _regular_trace(G, g):
    """Trace of left multiplication by lambda([g]) on the algebra, from the oracle product."""
    x = oracles.lam(G, g)
    total = 0
    for b in oracles.groupoid_arrows(G):
        total += oracles.multiply(G, x, {b: 1}).get(b, 0)
    return total


@pytest.mark.parametrize("G", [make_cyclic(3), make_cyclic(4), make_symmetric(3)], ids=lambda G: G.label)
def test_simples_reproduce_regular_character(G):
    # semisimple: the regular module is the sum of dim(L) copies of each simple L
    labels = simple_labels(G)
    mats = {lab: action_matrices(G, lab) for lab in labels}
    for g in range(G.order):
        got = sum(lab.dim * np.trace(mats[lab][g]) for lab in labels)
        assert abs(got - _regular_trace(G, g)) < 1e-8


def test_support_dims(c3):
    lab = make_label(c3, 0b011, 0)
    dims = support_dims(c3, lab)
    assert dims == {1: 0, 3: 1, 5: 1, 7: 0}


def test_simples_json(c3):
    d = simples_json(c3)
    assert d["sum_dim_sq"] == 8
    assert [x["dim"] for x in d["labels"]] == [1, 2, 1, 1, 1]


@pytest.mark.parametrize("G", UP_TO_6, ids=lambda G: G.label)
def test_verify_simples_passes(G):
    rep = verify_simples(G)
    assert rep.passed, [c.to_json() for c in rep.failures()]
