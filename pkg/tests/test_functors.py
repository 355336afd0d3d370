import pytest

from conftest import SMALL, klein
from parfus.characters import character_table
from parfus.fusion import fuse
from parfus.functors import (
    christmas_label,
    christmas_verify,
    coherence_report,
    matryoshka_all,
    matryoshka_label,
    matryoshka_phi,
    matryoshka_verify,
)
from parfus.group_core import (
    NotAbelianError,
    Subgroup,
    make_cyclic,
    make_direct_product,
    subgroup_from_generators,
    subgroups,
)
from parfus.rep_theory import SimpleLabel, simple_labels
from parfus.subsets import fundamental_domain


def test_christmas_label_is_one_point_orbit(s3):
    for H in subgroups(s3):
        table = character_table(H)
        for a in range(table.size):
            lab = christmas_label(s3, H, a)
            assert lab.dim == table.degrees[a]
            assert len(fundamental_domain(s3).orbit(lab.X)) == 1


def test_christmas_range_check(c3):
    H = Subgroup(c3, c3.full_mask)
    with pytest.raises(ValueError):
        christmas_label(c3, H, 3)


@pytest.mark.parametrize("G", [G for G in SMALL if not G.is_abelian], ids=lambda G: G.label)
def test_christmas_non_abelian(G):
    for H in subgroups(G):
        rep = christmas_verify(G, H)
        assert rep.passed, rep.to_json()


def test_christmas_full_group_c3(c3):
    rep = christmas_verify(c3, Subgroup(c3, c3.full_mask))
    targets = [t for _, t in rep.label_map]
    assert [(t.X, t.alpha) for t in targets] == [(7, 0), (7, 1), (7, 2)]
    assert rep.pairs == 9


def test_matryoshka_phi_z4():
    Z4 = make_cyclic(4)
    H = Subgroup(Z4, 0b0101)
    assert matryoshka_phi(Z4, H).map == (0, 1, 0, 1)


def test_matryoshka_phi_klein_diagonal():
    V = klein()
    assert matryoshka_phi(V, Subgroup(V, 0b1001)).map == (0, 1, 0, 1)


def test_matryoshka_z4_labels():
    Z4 = make_cyclic(4)
    H = Subgroup(Z4, 0b0101)
    rep = matryoshka_verify(Z4, H)
    assert rep.passed
    got = {(s.X, s.alpha): (t.X, t.alpha) for s, t in rep.label_map}
    # {e} pulls back to the kernel {e, a^2}; the sign character becomes chi(a) = -1
    assert got == {(1, 0): (5, 0), (3, 0): (15, 0), (3, 1): (15, 2)}


def test_matryoshka_needs_abelian(s3):
    with pytest.raises(NotAbelianError):
        matryoshka_phi(s3, Subgroup(s3, 1))


def test_matryoshka_without_adapted_basis():
    G = make_direct_product(make_cyclic(8), make_cyclic(2))
    H = subgroup_from_generators(G, [5])
    phi = matryoshka_phi(G, H)
    assert phi.is_surjective
    assert matryoshka_verify(G, H).passed


@pytest.mark.parametrize("G", [make_cyclic(4), klein(), make_cyclic(6),
                               make_direct_product(make_cyclic(2), make_cyclic(4))], ids=lambda G: G.label)
def test_matryoshka_module_level(G):
    for rep in matryoshka_all(G, module_level=True):
        assert rep.passed, rep.to_json()


def test_matryoshka_dims_preserved_z6():
    G = make_cyclic(6)
    for H in subgroups(G):
        phi = matryoshka_phi(G, H)
        for s in simple_labels(H.as_group):
            assert matryoshka_label(G, H, s, phi).dim == s.dim


def test_matryoshka_preserves_fusion_directly():
    G = make_direct_product(make_cyclic(2), make_cyclic(4))
    for H in subgroups(G):
        Hg = H.as_group
        src = simple_labels(Hg)
        img = {s: matryoshka_label(G, H, s) for s in src}
        for a in src:
            for b in src:
                want = sorted((img[c], m) for c, m in fuse(Hg, a, b))
                assert sorted(fuse(G, img[a], img[b])) == want


@pytest.mark.parametrize("G", [make_cyclic(4), make_cyclic(8), klein(), make_cyclic(12)], ids=lambda G: G.label)
def test_coherence_holds_for_these_groups(G):
    assert coherence_report(G).passed


def test_coherence_is_not_automatic():
    # different but equally valid surjections: reported, not required
    G = make_direct_product(make_cyclic(2), make_cyclic(4))
    rep = coherence_report(G)
    check = rep.checks[0]
    assert check.cases > 0
    assert not check.passed


def test_label_type():
    assert SimpleLabel(1, 0, 1) < SimpleLabel(3, 0, 1)
