from fractions import Fraction

from modelbench.linalg import (
    SpanEchelon,
    mat,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    rref,
    solve,
    solve_affine,
)


def test_rref_and_rank():
    a = mat([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    r, pivots = rref(a)
    assert pivots == [0, 1]
    assert rank(a) == 2


def test_solve_and_nullspace():
    a = mat([[1, 0, 1], [0, 1, 1]])
    x = solve(a, [Fraction(3), Fraction(5)])
    assert x is not None
    assert mat_vec(a, x) == [Fraction(3), Fraction(5)]
    ns = nullspace(a)
    assert len(ns) == 1
    assert mat_vec(a, ns[0]) == [Fraction(0), Fraction(0)]


def test_solve_inconsistent():
    a = mat([[1, 1], [1, 1]])
    assert solve(a, [Fraction(0), Fraction(1)]) is None
    assert solve_affine(a, [Fraction(0), Fraction(1)]) is None


def test_mat_mul_identity():
    a = mat([[1, 2], [3, 4]])
    i = mat([[1, 0], [0, 1]])
    assert mat_mul(a, i) == a
    assert mat_mul(i, a) == a


def test_span_echelon_membership():
    sp = SpanEchelon()
    assert sp.add({"x": 1, "y": 2})
    assert sp.add({"y": 1, "z": 1})
    assert not sp.add({"x": 1, "y": 3, "z": 1})   # dependent
    assert sp.dim == 2
    assert sp.contains({"x": 2, "y": 4})
    assert not sp.contains({"z": 1})


def test_span_echelon_key_order_determinism():
    sp = SpanEchelon(key_order=["a", "b", "c"])
    sp.add({"c": 1, "a": 2})
    assert set(sp.pivot_keys()) == {"a"}
