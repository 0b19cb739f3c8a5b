import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from qrichardson.errors import BadShape, IndexOutOfBounds, NotSquare
from qrichardson.qmatrix import (
    confluence_check, normal_form, qmatrix_algebra, quantum_minor, row_degree, transpose,
)
from qrichardson.scalars import QScalar, q

M2 = qmatrix_algebra(2, 2)


def gen(alg, i, j):
    return alg.gen_index(i, j)


def test_normal_form_examples():
    a = M2
    x12_x11 = a.normal_form([(1, 2), (1, 1)])
    assert x12_x11.terms == {(gen(a, 1, 1), gen(a, 1, 2)): q ** -1}
    assert a.normal_form([(1, 1), (2, 2)]).terms == {(0, 3): QScalar(1)}
    got = a.normal_form([(2, 2), (1, 1)])
    assert got.terms == {(0, 3): QScalar(1), (1, 2): -(q - q ** -1)}
    assert got.specialize(1).terms == {(0, 3): Fraction(1)}


def test_remaining_relations():
    a = M2
    # same column: X21 X11 = q^-1 X11 X21; anti-diagonal pair commutes
    assert a.normal_form([(2, 1), (1, 1)]).terms == {(0, 2): q ** -1}
    assert a.normal_form([(2, 1), (1, 2)]).terms == {(1, 2): QScalar(1)}


def test_quantum_minor_examples():
    assert quantum_minor((1,), (1,), (2, 2)).terms == {(0,): QScalar(1)}
    det = quantum_minor((1, 2), (1, 2), (2, 2))
    assert det.terms == {(0, 3): QScalar(1), (1, 2): -q}


def test_minor_at_q1_is_the_determinant():
    X = sympy.Matrix(3, 3, lambda i, j: sympy.Symbol(f"x{i}{j}"))
    gens = list(X)
    for I, J in [((1, 2), (1, 3)), ((1, 2, 3), (1, 2, 3)), ((2, 3), (1, 2))]:
        minor = quantum_minor(I, J, (3, 3)).specialize(1)
        det = sympy.Poly(X.extract([i - 1 for i in I], [j - 1 for j in J]).det(), *gens)
        want = {}
        for exps, c in det.terms():
            want[tuple(g for g, e in enumerate(exps) for _ in range(e))] = Fraction(int(c))
        assert minor.terms == want


def test_transpose_of_minor_examples():
    assert transpose(quantum_minor((1, 2), (1, 3), (3, 3))) == quantum_minor((1, 3), (1, 2), (3, 3))
    a = qmatrix_algebra(3, 3)
    assert transpose(a.gen(1, 2)) == a.gen(2, 1)


def test_transpose_all_minors_m4():
    for t in (1, 2, 3):
        for I in itertools.combinations(range(1, 5), t):
            for J in itertools.combinations(range(1, 5), t):
                assert transpose(quantum_minor(I, J, (4, 4))) == quantum_minor(J, I, (4, 4))


def test_transpose_needs_square():
    with pytest.raises(NotSquare):
        transpose(qmatrix_algebra(2, 3).gen(1, 1))


def test_errors():
    with pytest.raises(IndexOutOfBounds):
        normal_form([(3, 1)], (2, 2))
    with pytest.raises(BadShape):
        quantum_minor((1, 2), (1,), (2, 2))
    with pytest.raises(BadShape):
        quantum_minor((2, 1), (1, 2), (2, 2))


def test_row_degree_examples():
    d = row_degree(quantum_minor((1, 3), (1, 2), (4, 2)))
    assert d.vector == (1, 0, 1, 0) and not d.zero
    zero = row_degree(M2.element({}))
    assert zero.zero
    a = qmatrix_algebra(2, 2)
    assert row_degree(a.gen(1, 1) + a.gen(2, 1)) is None


def test_confluence_m2_exhaustive():
    rep = confluence_check((2, 2), 3)
    assert rep.words_checked == 85 and rep.ok


def test_confluence_m23_and_m32():
    assert confluence_check((2, 3), 3).ok
    assert confluence_check((3, 2), 3).ok


words = st.lists(st.integers(0, 5), min_size=0, max_size=6)


@given(words, words)
def test_normal_form_multiplicative(w1, w2):
    a = qmatrix_algebra(3, 2)
    assert a.normal_form(w1 + w2) == a.normal_form(w1) * a.normal_form(w2)


@given(words, st.randoms(use_true_random=False))
def test_strategies_agree(w, rng):
    a = qmatrix_algebra(3, 2)
    ref = a.normal_form(w)
    assert a.normal_form(w, "leftmost") == ref
    assert a.normal_form(w, "rightmost") == ref
    assert a.normal_form(w, "random", rng) == ref


@given(words)
def test_q1_is_commutative(w):
    a = qmatrix_algebra(3, 2)
    assert a.normal_form(w).specialize(1).terms == {tuple(sorted(w)): Fraction(1)}
    assert qmatrix_algebra(3, 2, 1).normal_form(w).terms == {tuple(sorted(w)): Fraction(1)}


@given(words, words)
def test_row_degree_additive(w1, w2):
    a = qmatrix_algebra(3, 2)
    x, y = a.normal_form(w1), a.normal_form(w2)
    assert row_degree(x * y) == row_degree(x) + row_degree(y)


@given(st.lists(st.integers(0, 8), max_size=5))
def test_transpose_is_an_involutive_automorphism(w):
    a = qmatrix_algebra(3, 3)
    x = a.normal_form(w) + a.normal_form(w[::-1]).scale(q)
    assert transpose(transpose(x)) == x
    half = len(w) // 2
    assert transpose(a.normal_form(w[:half]) * a.normal_form(w[half:])) == \
        transpose(a.normal_form(w[:half])) * transpose(a.normal_form(w[half:]))


def test_mirror_convention_swaps_q():
    a = qmatrix_algebra(2, 2, None, True)
    assert a.normal_form([(1, 2), (1, 1)]).terms == {(0, 1): q}


def test_specialized_engine_matches_specialization():
    sym = qmatrix_algebra(3, 2)
    num = qmatrix_algebra(3, 2, Fraction(2))
    rng = random.Random(4)
    for _ in range(50):
        w = [rng.randrange(6) for _ in range(5)]
        assert sym.normal_form(w).specialize(2) == num.normal_form(w)
