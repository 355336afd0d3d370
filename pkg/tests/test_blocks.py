import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMALL, klein
from parfus.blocks import (
    GroupAlgebraMatrix,
    block_arrows,
    blocks,
    decomposition_json,
    format_wedderburn,
    format_wedderburn_md,
    phi_block,
    psi_block,
    verify_blocks,
    wedderburn_summary,
)
from parfus.characters import character_table
from parfus.group_core import make_cyclic, make_symmetric
from parfus.groupoid import AlgebraElement, arrows, dimension, gamma_idem, lambda_gen
from parfus.subsets import fundamental_domain


def test_z4_wedderburn():
    sizes = wedderburn_summary(make_cyclic(4))
    assert sizes == [1] * 7 + [2, 3]
    assert format_wedderburn(sizes) == "7C ⊕ M_2(C) ⊕ M_3(C)"
    assert format_wedderburn_md(sizes) == "7·M1 ⊕ M2 ⊕ M3 over C"


def test_klein_wedderburn():
    sizes = wedderburn_summary(klein())
    assert format_wedderburn(sizes) == "11C ⊕ M_3(C)"


def test_c3_wedderburn():
    assert format_wedderburn(wedderburn_summary(make_cyclic(3))) == "4C ⊕ M_2(C)"


def test_trivial_wedderburn():
    assert format_wedderburn(wedderburn_summary(make_cyclic(1))) == "C"


@pytest.mark.parametrize("G", SMALL, ids=lambda G: G.label)
def test_block_dimensions_sum(G):
    infos = blocks(G)
    assert sum(b.dim for b in infos) == dimension(G)[0]
    assert sum(s * s for s in wedderburn_summary(G)) == dimension(G)[0]
    for b in infos:
        assert len(block_arrows(G, b.X)) == b.dim


def test_c3_blocks(c3):
    assert [(b.n, b.isotropy.order) for b in blocks(c3)] == [(1, 1), (2, 1), (1, 3)]


@pytest.mark.parametrize("G", [make_cyclic(4), klein(), make_symmetric(3)], ids=lambda G: G.label)
def test_phi_psi_round_trip_on_basis(G):
    for b in blocks(G):
        for a in block_arrows(G, b.X):
            x = AlgebraElement(G, {a: 1})
            m = phi_block(G, b.X, x)
            # a single arrow lands on a single matrix unit
            assert sum(len(e) for row in m.entries for e in row) == 1
            assert psi_block(G, b.X, m) == x


def test_phi_rejects_foreign_arrow(c3):
    T = fundamental_domain(c3)
    with pytest.raises(ValueError):
        phi_block(c3, T.reps[0], AlgebraElement(c3, {arrows(c3)[-1]: 1}))


def test_psi_rejects_wrong_size(c3):
    T = fundamental_domain(c3)
    X = T.reps[1]
    H = T.isotropy[X]
    with pytest.raises(ValueError):
        psi_block(c3, X, GroupAlgebraMatrix.identity(H, 3))


def test_gamma_maps_to_identity(s3):
    for b in blocks(s3):
        m = phi_block(s3, b.X, gamma_idem(s3, b.X))
        assert m == GroupAlgebraMatrix.identity(b.isotropy, b.n)


@pytest.mark.parametrize("G", [make_cyclic(4), make_symmetric(3)], ids=lambda G: G.label)
def test_phi_multiplicative_random(G):
    infos = blocks(G)

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def prop(data):
        b = data.draw(st.sampled_from(infos))
        basis = block_arrows(G, b.X)
        elems = st.dictionaries(st.sampled_from(basis), st.integers(-2, 2), max_size=4)
        x = AlgebraElement(G, data.draw(elems))
        y = AlgebraElement(G, data.draw(elems))
        assert phi_block(G, b.X, x * y) == phi_block(G, b.X, x) @ phi_block(G, b.X, y)
        assert phi_block(G, b.X, x + y) == phi_block(G, b.X, x) + phi_block(G, b.X, y)

    prop()


def test_specialize_lambda_on_c3_full_block(c3):
    # on the one-point orbit {C3} the generator acts through the group algebra
    X = c3.full_mask
    m = phi_block(c3, X, lambda_gen(c3, 1) * gamma_idem(c3, X))
    table = character_table(fundamental_domain(c3).isotropy[X])
    for alpha in range(3):
        rho = lambda t: np.array([[table.value(alpha, t)]])
        assert np.allclose(m.specialize(rho), [[table.value(alpha, 1)]])


def test_decomposition_json_shape(z4):
    d = decomposition_json(z4, "cyclic:4")
    assert d["dim"] == 20
    assert d["wedderburn"] == [1] * 7 + [2, 3]
    assert sum(b["n"] ** 2 * b["isotropy_order"] for b in d["blocks"]) == 20


@pytest.mark.parametrize("G", [G for G in SMALL if G.order <= 6], ids=lambda G: G.label)
def test_verify_blocks_passes(G):
    rep = verify_blocks(G)
    assert rep.passed, [c.to_json() for c in rep.failures()]


def test_matrix_algebra_units(s3):
    H = fundamental_domain(s3).isotropy[s3.full_mask]
    for i, j, k, l in itertools.product(range(2), repeat=4):
        lhs = GroupAlgebraMatrix.unit(H, 2, i, j) @ GroupAlgebraMatrix.unit(H, 2, k, l)
        rhs = GroupAlgebraMatrix.unit(H, 2, i, l) if j == k else GroupAlgebraMatrix.zero(H, 2)
        assert lhs == rhs
