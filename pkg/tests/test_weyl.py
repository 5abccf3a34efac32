import pytest
from hypothesis import given
from hypothesis import strategies as st

from artinpal import coxeter, weyl
from artinpal.errors import BudgetExceededError, InfiniteTypeError
from artinpal.weyl import (
    WElement,
    ZPhi,
    build_root_system,
    compose,
    enumerate_group,
    image,
    is_identity,
    is_involution,
)

A3 = coxeter.builtin("A", 3)


def test_zphi_arithmetic():
    phi = ZPhi(0, 1)
    assert phi * phi == ZPhi(1, 1)  # phi^2 = phi + 1
    assert ZPhi(2, -1) + ZPhi(1, 3) == ZPhi(3, 2)
    assert ZPhi(1, 1) - 1 == ZPhi(0, 1)
    assert 2 - ZPhi(1, 1) == ZPhi(1, -1)
    assert 3 * phi == ZPhi(0, 3)
    assert -ZPhi(1, -2) == ZPhi(-1, 2)
    assert (phi * phi) * phi == phi * (phi * phi)


@pytest.mark.parametrize(
    "name,order",
    [
        ("A2", 6), ("A3", 24), ("B2", 8), ("B3", 48),
        ("H3", 120), ("I2(5)", 10), ("I2(7)", 14), ("D4", 192), ("F4", 1152),
    ],
)
def test_group_orders(name, order):
    rep = build_root_system(coxeter.named_matrix(name))
    assert len(enumerate_group(rep, 5000)) == order


def test_enumerate_cap():
    rep = build_root_system(A3)
    with pytest.raises(BudgetExceededError):
        enumerate_group(rep, 10)


def test_infinite_type_rejected():
    mixed = coxeter.parse_matrix("rank 3\nm 1 2 3\nm 2 3 4\nm 1 3 inf\n")
    with pytest.raises(InfiniteTypeError):
        build_root_system(mixed)


@pytest.mark.parametrize("name", ["A3", "B3", "H3", "I2(7)"])
def test_image_respects_relations(name):
    mat = coxeter.named_matrix(name)
    rep = build_root_system(mat)
    for lhs, rhs in mat.relations():
        assert image(rep, lhs) == image(rep, rhs)
    for s in mat.generators:
        assert is_identity(image(rep, (s, s)))
        assert is_identity(image(rep, (s, -s)))


def test_image_drops_signs():
    rep = build_root_system(A3)
    assert image(rep, (1, -2, 3)) == image(rep, (-1, 2, -3))


def test_predicates():
    rep = build_root_system(A3)
    e = rep.identity()
    assert is_identity(e) and not is_involution(e)
    s1 = image(rep, (1,))
    assert is_involution(s1) and not is_identity(s1)
    s12 = image(rep, (1, 2))  # order 3
    assert not is_involution(s12) and not is_identity(s12)


def test_witness_words():
    rep = build_root_system(coxeter.builtin("B", 2))
    elts = enumerate_group(rep, 100)
    for g in elts:
        assert image(rep, g.word).perm == g.perm
    # longest element of B2 has length 4
    assert max(len(g.word) for g in elts) == 4
    # words are shortest: BFS layers are length-graded
    lengths = sorted(len(g.word) for g in elts)
    assert lengths == [0, 1, 1, 2, 2, 3, 3, 4]


def test_welement_equality_ignores_word():
    a = WElement((1, 0, 2), word=(1,))
    b = WElement((1, 0, 2), word=(2, 1, 2))
    assert a == b


@given(st.lists(st.integers(1, 3), max_size=8), st.lists(st.integers(1, 3), max_size=8))
def test_image_is_homomorphism(u, v):
    rep = build_root_system(A3)
    assert image(rep, tuple(u) + tuple(v)).perm == compose(
        image(rep, u).perm, image(rep, v).perm
    )
