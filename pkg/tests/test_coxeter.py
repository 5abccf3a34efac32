import pytest

from artinpal.coxeter import (
    INF,
    CoxeterMatrix,
    builtin,
    classify,
    is_finite_parabolic,
    is_finite_type,
    named_matrix,
    parse_matrix,
    serialize_matrix,
    sub_matrix,
    w_word,
)
from artinpal.errors import InvalidMatrixError, InvalidWordError


def test_w_word():
    assert w_word(1, 2, 3) == (1, 2, 1)
    assert w_word(2, 1, 4) == (2, 1, 2, 1)
    with pytest.raises(ValueError):
        w_word(1, 2, 1)
    with pytest.raises(ValueError):
        w_word(1, 1, 3)


def test_builtin_node_conventions():
    b4 = builtin("B", 4)
    assert b4.m(3, 4) == 4 and b4.m(1, 2) == 3 and b4.m(2, 3) == 3
    f4 = builtin("F4")
    assert f4.m(2, 3) == 4 and f4.m(1, 2) == 3 and f4.m(3, 4) == 3
    h3 = builtin("H3")
    assert h3.m(1, 2) == 5 and h3.m(2, 3) == 3
    d5 = builtin("D", 5)
    # fork at n-2: both 4 and 5 attach to 3, and 4, 5 commute
    assert d5.m(3, 4) == 3 and d5.m(3, 5) == 3 and d5.m(4, 5) == 2
    e6 = builtin("E6")
    assert e6.m(1, 3) == 3 and e6.m(2, 4) == 3 and e6.m(3, 4) == 3
    assert e6.m(1, 2) == 2
    i27 = builtin("I2", 7)
    assert i27.m(1, 2) == 7


def test_builtin_rejects():
    with pytest.raises(InvalidMatrixError):
        builtin("A", 0)
    with pytest.raises(InvalidMatrixError):
        builtin("B", 1)
    with pytest.raises(InvalidMatrixError):
        builtin("D", 3)
    with pytest.raises(InvalidMatrixError):
        builtin("I2", 4)
    with pytest.raises(InvalidMatrixError):
        builtin("Q", 3)


def test_classify_builtins():
    for name, fam, param in [
        ("A1", "A", 1), ("A5", "A", 5), ("B2", "B", 2), ("B6", "B", 6),
        ("D4", "D", 4), ("E6", "E6", None), ("E7", "E7", None),
        ("E8", "E8", None), ("F4", "F4", None), ("H3", "H3", None),
        ("H4", "H4", None), ("I2(5)", "I2", 5),
    ]:
        assert classify(builtin(fam, param)) == [name]


def test_classify_subsets_and_infinite():
    b4 = builtin("B", 4)
    assert classify(b4, (1, 2)) == ["A2"]
    assert classify(b4, (3, 4)) == ["B2"]
    assert classify(b4, (2, 3, 4)) == ["B3"]
    assert classify(b4, (1, 3)) == ["A1", "A1"]
    assert classify(b4, ()) == []
    # affine triangle: all labels 3, not finite
    tri = CoxeterMatrix(3, ((1, 3, 3), (3, 1, 3), (3, 3, 1)))
    assert classify(tri) is None
    assert not is_finite_type(tri)
    inf_m = CoxeterMatrix(2, ((1, INF), (INF, 1)))
    assert classify(inf_m) is None


def test_is_finite_parabolic():
    x = parse_matrix("rank 3\nm 1 2 3\nm 2 3 4\nm 1 3 inf\n")
    assert not is_finite_type(x)
    assert is_finite_parabolic(x, (1, 2))
    assert is_finite_parabolic(x, (2, 3))
    assert not is_finite_parabolic(x, (1, 3))
    assert is_finite_parabolic(x, ())


def test_named_matrix_forms():
    assert named_matrix("A3") == builtin("A", 3)
    assert named_matrix("b2") == builtin("B", 2)
    assert named_matrix("I2(9)") == builtin("I2", 9)
    assert named_matrix("I2.9") == builtin("I2", 9)
    assert named_matrix(" F4 ") == builtin("F4")
    for bad in ("A", "I2", "Z3", "A3(2)", ""):
        with pytest.raises(InvalidMatrixError):
            named_matrix(bad)


def test_parse_serialize_round_trip():
    for mat in (builtin("A", 4), builtin("B", 3), builtin("H3"),
                parse_matrix("rank 3\nm 1 2 3\nm 2 3 4\nm 1 3 inf\n")):
        assert parse_matrix(serialize_matrix(mat)) == mat


def test_parse_matrix_errors():
    with pytest.raises(InvalidMatrixError):
        parse_matrix("m 1 2 3\n")  # rank line must come first
    with pytest.raises(InvalidMatrixError):
        parse_matrix("rank 2\nm 1 2 3\nm 2 1 3\n")  # duplicate pair
    with pytest.raises(InvalidMatrixError):
        parse_matrix("rank 2\nm 1 2 1\n")
    with pytest.raises(InvalidMatrixError):
        parse_matrix("rank 3\nm 1 2 3\n")  # node 3 disconnected
    # an inf entry still counts as an edge for connectivity
    parse_matrix("rank 2\nm 1 2 inf\n")
    parse_matrix("rank 2\n# comment\n\nm 1 2 5\n")


def test_matrix_validation():
    with pytest.raises(InvalidMatrixError):
        CoxeterMatrix(2, ((1, 2), (3, 1)))  # asymmetric
    with pytest.raises(InvalidMatrixError):
        CoxeterMatrix(2, ((2, 3), (3, 1)))  # bad diagonal
    with pytest.raises(InvalidMatrixError):
        CoxeterMatrix(1, ((1, 1),))


def test_sub_matrix():
    b4 = builtin("B", 4)
    s = sub_matrix(b4, (2, 3, 4))
    assert s == builtin("B", 3)
    s2 = sub_matrix(b4, (1, 3))
    assert s2.m(1, 2) == 2  # relabelled, disconnected is fine here
    with pytest.raises(InvalidMatrixError):
        sub_matrix(b4, ())


def test_check_word():
    a2 = builtin("A", 2)
    assert a2.check_word((1, -2, 1)) == (1, -2, 1)
    with pytest.raises(InvalidWordError):
        a2.check_word((3,))
    with pytest.raises(InvalidWordError):
        a2.check_word((0,))
    with pytest.raises(InvalidWordError):
        a2.check_word((-1,), positive=True)


def test_relations():
    rels = builtin("B", 2).relations()
    assert rels == [((1, 2, 1, 2), (2, 1, 2, 1))]
    x = parse_matrix("rank 3\nm 1 2 3\nm 2 3 4\nm 1 3 inf\n")
    assert len(x.relations()) == 2  # the inf pair contributes none
