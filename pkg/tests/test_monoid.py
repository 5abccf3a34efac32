import pytest
from hypothesis import given
from hypothesis import strategies as st

from artinpal import coxeter, monoid
from artinpal.errors import (
    BudgetExceededError,
    DeltaUndefinedError,
    InfiniteTypeError,
    InvalidWordError,
)
from artinpal.monoid import (
    ExtractionTrace,
    PositiveWord,
    ambient_delta,
    apply_tau,
    blocking_left_index,
    compute_tau_perm,
    delta,
    divides_left,
    equals,
    finishing_set,
    format_word,
    left_extract,
    normal_form,
    parse_word,
    rev,
    right_lcm,
    starting_set,
    word,
)

A2 = coxeter.builtin("A", 2)
A3 = coxeter.builtin("A", 3)
B2 = coxeter.builtin("B", 2)
MIXED = coxeter.parse_matrix("rank 3\nm 1 2 3\nm 2 3 4\nm 1 3 inf\n")

a3_words = st.lists(st.integers(1, 3), max_size=6).map(
    lambda ls: word(A3, ls)
)
b2_words = st.lists(st.integers(1, 2), max_size=6).map(
    lambda ls: word(B2, ls)
)


def test_positive_word_validation():
    with pytest.raises(InvalidWordError):
        word(A2, (3,))
    with pytest.raises(InvalidWordError):
        word(A2, (0,))
    with pytest.raises(InvalidWordError):
        word(A2, (-1,))
    with pytest.raises(InvalidWordError):
        word(A2, (1,)) * word(A3, (1,))
    assert len(word(A2, (1, 2, 1))) == 3
    assert list(word(A2, (1, 2))) == [1, 2]


def test_rev():
    w = word(A3, (1, 2, 3, 2))
    assert rev(w).letters == (2, 3, 2, 1)
    assert rev(rev(w)) == w
    u, v = word(A3, (1, 2)), word(A3, (3,))
    assert rev(u * v) == rev(v) * rev(u)


def test_blocking_left_index():
    w = word(A3, (1, 3, 2))
    # both 1 and 3 fail to commute with 2 in A3
    assert blocking_left_index(w, 3) == 2
    assert blocking_left_index(w, 2) == 0  # m(1,3) = 2
    assert blocking_left_index(w, 1) == 0
    with pytest.raises(InvalidWordError):
        blocking_left_index(w, 4)
    with pytest.raises(InvalidWordError):
        blocking_left_index(w, 0)


def test_left_extract_examples():
    out = left_extract(word(A2, (2, 1, 2)), 1)
    assert out is not None and equals(word(A2, (1,)) * out, word(A2, (2, 1, 2)))
    assert left_extract(word(A3, (1, 2, 1)), 3) is None
    # letter present but blocked behind an inf label
    assert left_extract(word(MIXED, (3, 1)), 1) is None
    assert left_extract(word(MIXED, (2, 1, 2)), 1) is not None
    with pytest.raises(InvalidWordError):
        left_extract(word(A2, (1,)), 5)


def test_extraction_trace():
    trace = ExtractionTrace()
    out = left_extract(word(A2, (2, 1, 2)), 1, trace)
    assert out is not None
    assert trace.steps >= 1
    assert ("braid", 0, 3) in trace.rewrites
    assert trace.frames[0].parent is None
    assert trace.frames[0].length == 3
    assert trace.frames[0].pivot_blis == [1]
    # the inner call that pulled the alternating continuation
    inner = [f for f in trace.frames[1:]]
    assert inner and all(f.parent == 0 for f in inner)


@given(a3_words, st.integers(1, 3))
def test_extract_is_sound_and_detects_heads(w, s):
    out = left_extract(w, s)
    head = word(A3, (s,))
    if out is None:
        assert divides_left(head, w) is None
    else:
        assert equals(head * out, w)


def test_starting_finishing_sets():
    d = ambient_delta(A3)
    assert starting_set(d) == (1, 2, 3)
    assert finishing_set(d) == (1, 2, 3)
    w = word(A3, (2, 1))
    assert starting_set(w) == (2,)
    assert finishing_set(w) == (1,)
    assert starting_set(word(A3, ())) == ()


@given(a3_words, a3_words)
def test_starting_set_monotone_under_right_multiplication(u, v):
    assert set(starting_set(u)) <= set(starting_set(u * v))


def test_equals_braid_pairs():
    assert equals(word(A2, (1, 2, 1)), word(A2, (2, 1, 2)))
    assert not equals(word(A2, (1, 2)), word(A2, (2, 1)))
    assert equals(word(B2, (1, 2, 1, 2)), word(B2, (2, 1, 2, 1)))
    assert not equals(word(B2, (1, 2, 1)), word(B2, (2, 1, 2)))
    assert not equals(word(A2, (1,)), word(A2, (1, 1)))  # length mismatch
    with pytest.raises(InvalidWordError):
        equals(word(A2, (1,)), word(A3, (1,)))


@given(a3_words, a3_words)
def test_divides_left_quotient(u, v):
    q = divides_left(u, v)
    if q is not None:
        assert equals(u * q, v)
        assert len(u) + len(q) == len(v)


def test_right_lcm_values():
    d = right_lcm(word(A2, (1,)), word(A2, (2,)))
    assert d is not None and equals(d, word(A2, (1, 2, 1)))
    d = right_lcm(word(B2, (1,)), word(B2, (2,)))
    assert d is not None and equals(d, word(B2, (1, 2, 1, 2)))
    # an inf pair has no common multiple at all: proven absence, not a budget stop
    assert right_lcm(word(MIXED, (1,)), word(MIXED, (3,))) is None
    same = right_lcm(word(A2, (1, 2)), word(A2, (1, 2)))
    assert same is not None and equals(same, word(A2, (1, 2)))


def test_right_lcm_budget():
    with pytest.raises(BudgetExceededError):
        right_lcm(word(A2, (1,)), word(A2, (2,)), budget=2)
    with pytest.raises(ValueError):
        right_lcm(word(A2, (1, 2)), word(A2, (1,)), budget=1)


@given(a3_words, a3_words)
def test_right_lcm_is_common_multiple(u, v):
    d = right_lcm(u, v)
    assert d is not None
    assert divides_left(u, d) is not None
    assert divides_left(v, d) is not None


def test_delta_values():
    assert delta(A3, ()).letters == ()
    d13 = delta(A3, (1, 3))
    assert equals(d13, word(A3, (1, 3))) and len(d13) == 2
    d12 = delta(A3, (2, 1))
    assert equals(d12, word(A3, (1, 2, 1)))
    assert len(ambient_delta(A3)) == 6
    assert len(ambient_delta(B2)) == 4
    assert delta(MIXED, (1, 3)) is None
    tri = coxeter.CoxeterMatrix(3, ((1, 3, 3), (3, 1, 3), (3, 3, 1)))
    assert delta(tri, (1, 2, 3)) is None
    assert delta(tri, (1, 2)) is not None
    with pytest.raises(InvalidWordError):
        delta(A3, (5,))


def test_ambient_delta_infinite():
    with pytest.raises(DeltaUndefinedError):
        ambient_delta(MIXED)


def test_normal_form_examples():
    assert normal_form(word(A3, ())) == ()
    assert normal_form(word(A3, (1, 1))) == ((1,), (1,))
    d = ambient_delta(A3)
    assert normal_form(d) == ((1, 2, 3),)
    assert normal_form(word(A2, (1, 2, 1))) == normal_form(word(A2, (2, 1, 2)))
    # works over infinite type too; 3 is blocked behind the inf label,
    # so the starting set of (1, 3) is just {1}
    assert normal_form(word(MIXED, (1, 3))) == ((1,), (3,))


@given(a3_words, a3_words)
def test_normal_form_complete_invariant(u, v):
    assert (normal_form(u) == normal_form(v)) == equals(u, v)


@given(b2_words, b2_words)
def test_normal_form_complete_invariant_b2(u, v):
    assert (normal_form(u) == normal_form(v)) == equals(u, v)


def test_tau():
    assert compute_tau_perm(A2) == (2, 1)
    assert compute_tau_perm(A3) == (3, 2, 1)
    assert compute_tau_perm(B2) == (1, 2)
    assert apply_tau(word(A3, (1, 2))).letters == (3, 2)
    with pytest.raises(InfiniteTypeError):
        compute_tau_perm(MIXED)


@given(a3_words)
def test_tau_is_involutive_automorphism(w):
    assert apply_tau(apply_tau(w)) == w
    d = ambient_delta(A3)
    # defining property: w * Delta = Delta * tau(w)
    assert equals(w * d, d * apply_tau(w))


def test_parse_format_word():
    assert parse_word("e") == ()
    assert parse_word("1 -2  3") == (1, -2, 3)
    assert format_word(()) == "e"
    assert format_word((1, -2)) == "1 -2"
    assert parse_word(format_word((4, -4, 1))) == (4, -4, 1)
    with pytest.raises(InvalidWordError):
        parse_word("0")
    with pytest.raises(InvalidWordError):
        parse_word("1 x")
