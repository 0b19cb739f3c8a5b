import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrichardson.errors import NotComparable, ReconstructionFailed
from qrichardson.grassmann import StdExpansion, plucker_poset, straighten_word
from qrichardson.richardson import (
    coset_length, gk_dim, gorenstein_indicator, hibi_gorenstein, hilbert, multichain_counts,
    quotient_dimension, reconstruct_numerator, richardson,
)
from qrichardson.scalars import as_pure_q_power


def test_full_grassmannian():
    R = richardson(2, 4, (1, 2), (3, 4))
    assert R.complement == [] and len(R.interval) == 6
    assert gk_dim(R) == 5


def test_diamond_quotient_relation():
    R = richardson(2, 4, (1, 3), (2, 4))
    assert R.interval == [(1, 3), (1, 4), (2, 3), (2, 4)]
    exp = R.restricted.straightening[((1, 4), (2, 3))]
    assert list(exp.terms) == [((1, 3), (2, 4))]
    assert as_pure_q_power(exp[((1, 3), (2, 4))]) == (1, -1)
    prod = R.multiply(R.generator((1, 4)), R.generator((2, 3)))
    assert prod == exp


def test_point_interval():
    R = richardson(2, 4, (1, 4), (1, 4))
    assert gk_dim(R) == 1
    assert R.basis(3) == [((1, 4),) * 3]
    assert hilbert(R).numerator == [1]


def test_gk_examples():
    assert gk_dim(richardson(2, 4, (1, 3), (2, 4))) == 3
    with pytest.raises(NotComparable):
        richardson(2, 4, (1, 4), (2, 3))


def test_coset_length_examples():
    assert coset_length((1, 2)) == 0
    assert coset_length((3, 4)) == 4
    assert coset_length((1, 3)) == 1


def test_all_pairs_24_gk_agree():
    L, _ = plucker_poset(2, 4)
    pairs = [(a, b) for a in L.elements for b in L.elements if L.le(a, b)]
    assert len(pairs) == 20
    for a, b in pairs:
        R = richardson(2, 4, a, b)
        assert gk_dim(R) == sum(y - x for x, y in zip(a, b)) + 1 == R.lattice.rank() + 1


def test_coset_length_monotone():
    L, _ = plucker_poset(3, 6)
    for a, b in itertools.product(L.elements, repeat=2):
        if L.lt(a, b):
            assert 0 <= coset_length(a) < coset_length(b)


def test_diamond_hilbert():
    R = richardson(2, 4, (1, 3), (2, 4))
    data = hilbert(R, 6)
    assert data.h == [(d + 1) ** 2 for d in range(7)]
    assert data.krull == 3 and data.numerator == [1, 1] and data.palindromic
    assert gorenstein_indicator(R)


def test_two_chain_hilbert():
    R = richardson(2, 4, (1, 2), (1, 3))
    data = hilbert(R)
    assert data.h[:5] == [1, 2, 3, 4, 5]
    assert data.numerator == [1] and data.krull == 2
    assert gorenstein_indicator(R)


def test_full_24_hilbert():
    data = hilbert(richardson(2, 4, (1, 2), (3, 4)))
    assert data.h[:3] == [1, 6, 20]
    assert data.numerator == [1, 1] and data.palindromic


def test_reconstruction_failure():
    with pytest.raises(ReconstructionFailed):
        hilbert(richardson(2, 4, (1, 2), (3, 4)), 3)
    assert reconstruct_numerator([1, 1, 1, 1, 1, 1], 3) == [1, -2, 1]
    with pytest.raises(ReconstructionFailed):
        reconstruct_numerator([1, 2, 3, 4, 5, 6], 1)


def test_multichain_counts_bruteforce():
    L, _ = plucker_poset(2, 5)
    elems = L.elements
    h = multichain_counts(L, elems, 3)
    for d in range(4):
        brute = sum(1 for w in itertools.product(elems, repeat=d)
                    if all(L.le(x, y) for x, y in zip(w, w[1:])))
        assert h[d] == brute


def test_gorenstein_matches_purity_criterion():
    L, _ = plucker_poset(2, 5)
    for a, b in itertools.product(L.elements, repeat=2):
        if L.le(a, b):
            R = richardson(2, 5, a, b)
            assert gorenstein_indicator(R) == hibi_gorenstein(R.lattice)


@pytest.mark.parametrize("alpha,beta", [((1, 3), (2, 4)), ((1, 2), (3, 4)), ((1, 2), (2, 4))])
def test_h_is_q_independent(alpha, beta):
    R = richardson(2, 4, alpha, beta)
    h = hilbert(R).h
    for q in (None, 1, 2):
        assert [quotient_dimension(R, d, q) for d in (1, 2)] == h[1:3]


def test_schubert_case():
    # beta = max: only elements below alpha are killed
    R = richardson(2, 5, (1, 4), (4, 5))
    L, _ = plucker_poset(2, 5)
    assert set(R.complement) == {x for x in L.elements if not L.le((1, 4), x)}


@settings(max_examples=30)
@given(st.data())
def test_quotient_is_associative(data):
    R = richardson(2, 5, (1, 3), (3, 5))
    pick = st.sampled_from(R.interval)
    x, y, z = (R.generator(data.draw(pick)) for _ in range(3))
    assert R.multiply(R.multiply(x, y), z) == R.multiply(x, R.multiply(y, z))


def test_quotient_product_matches_full_then_drop():
    R = richardson(2, 5, (1, 3), (3, 5))
    keep = set(R.interval)
    for w in itertools.product(R.interval, repeat=2):
        full = straighten_word(w, R.table)
        dropped = StdExpansion({k: v for k, v in full.terms.items() if all(x in keep for x in k)})
        assert R.multiply(R.generator(w[0]), R.generator(w[1])) == dropped
