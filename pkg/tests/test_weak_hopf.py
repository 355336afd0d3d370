from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import TINY
from parfus.group_core import make_cyclic, make_symmetric
from parfus.groupoid import AlgebraElement, Arrow, arrows, lambda_gen, unit
from parfus.weak_hopf import (
    TensorElement,
    antipode,
    balanced_components,
    balanced_projection,
    counit,
    delta,
    eps_s,
    eps_s_from_counit,
    eps_t,
    eps_t_from_counit,
    tensor_json,
    verify_lambda_hopf_algebroid,
    verify_weak_hopf,
)

S3 = make_symmetric(3)
Z4 = make_cyclic(4)


def elements(G, size=5):
    return st.dictionaries(st.sampled_from(arrows(G)), st.integers(-3, 3), max_size=size).map(
        lambda d: AlgebraElement(G, d))


@settings(max_examples=50, deadline=None)
@given(elements(S3), elements(S3))
def test_delta_multiplicative(x, y):
    assert delta(x * y) == delta(x) * delta(y)


@settings(max_examples=50, deadline=None)
@given(elements(S3), elements(S3))
def test_counit_weak_multiplicativity(x, y):
    # ε(xy) = Σ ε(x 1_(1)) ε(1_(2) y) with Δ(1) = Σ (e,Z)⊗(e,Z)
    units = [AlgebraElement(S3, {Arrow(0, Z): 1}) for Z in range(1, 64, 2)]
    assert counit(x * y) == sum(counit(x * u) * counit(u * y) for u in units)


@settings(max_examples=50, deadline=None)
@given(elements(S3), elements(S3))
def test_antipode_anti_multiplicative(x, y):
    assert antipode(x * y) == antipode(y) * antipode(x)
    assert antipode(antipode(x)) == x


@settings(max_examples=50, deadline=None)
@given(elements(Z4))
def test_antipode_axioms(x):
    # x_(1) S(x_(2)) = eps_t(x) and S(x_(1)) x_(2) = eps_s(x), termwise since Δ is diagonal
    left = AlgebraElement.zero(Z4)
    right = AlgebraElement.zero(Z4)
    for a, c in x.items():
        b = AlgebraElement(Z4, {a: c})
        left = left + b * antipode(AlgebraElement(Z4, {a: 1}))
        right = right + antipode(AlgebraElement(Z4, {a: 1})) * b
    assert left == eps_t(x)
    assert right == eps_s(x)


@settings(max_examples=50, deadline=None)
@given(elements(S3))
def test_counit_forms_of_source_and_target(x):
    assert eps_s(x) == eps_s_from_counit(x)
    assert eps_t(x) == eps_t_from_counit(x)
    assert eps_s(eps_s(x)) == eps_s(x)
    assert eps_t(eps_t(x)) == eps_t(x)


def test_delta_of_unit_is_not_trivial():
    for G in (make_cyclic(2), Z4, S3):
        one = unit(G)
        assert delta(one) != TensorElement.of(one, one)
    trivial = make_cyclic(1)
    assert delta(unit(trivial)) == TensorElement.of(unit(trivial), unit(trivial))


def test_tensor_product_componentwise(c3):
    x, y, z, w = (lambda_gen(c3, g) for g in (0, 1, 2, 1))
    assert TensorElement.of(x, y) * TensorElement.of(z, w) == TensorElement.of(x * z, y * w)


def test_tensor_arity_checked(c3):
    with pytest.raises(ValueError):
        TensorElement(c3, 2, {((0, 1),): 1})
    with pytest.raises(ValueError):
        TensorElement.of(unit(c3)) * TensorElement.of(unit(c3), unit(c3))


def test_balanced_projection_keeps_matching_targets(c3):
    lw = lambda_gen(c3, 1)
    assert balanced_projection(TensorElement.of(lw, lw)) == delta(lw)


def test_balanced_components():
    per, total = balanced_components({1: 2, 3: 1}, {3: 4, 1: 1})
    assert per == {1: 2, 3: 4}
    assert total == 6
    with pytest.raises(ValueError):
        balanced_components({1: 1}, {3: 1})


def test_tensor_json(c3):
    out = tensor_json(delta(Fraction(1, 2) * lambda_gen(c3, 1)))
    assert out[0]["c"] == "1/2"
    assert all(len(t["factors"]) == 2 for t in out)


@pytest.mark.parametrize("G", TINY, ids=lambda G: G.label)
def test_verify_weak_hopf_passes(G):
    rep = verify_weak_hopf(G)
    assert rep.passed, [c.to_json() for c in rep.failures()]


@pytest.mark.parametrize("G", TINY, ids=lambda G: G.label)
def test_hopf_algebroid_passes(G):
    rep = verify_lambda_hopf_algebroid(G)
    assert rep.passed, [c.to_json() for c in rep.failures()]


def test_hopf_algebroid_word_limit(c3):
    with pytest.raises(ValueError):
        verify_lambda_hopf_algebroid(c3, max_word_len=4)
