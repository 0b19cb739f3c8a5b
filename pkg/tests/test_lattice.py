import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qrichardson.errors import NotComparable, NotDistributive, NotALattice
from qrichardson.grassmann import plucker_poset
from qrichardson.lattice import (
    ChainProductRealization, FiniteLattice, birkhoff_check, canonical_realization, chain,
    chain_product, content, content_union, diamond, interval_and_complement, is_increasing,
    join_irreducibles, join_irreducibles_bruteforce, m3, max_omega, omega, omega_lemma_holds,
    omega_lemma_quadruples, prefix_lemma_holds, prefix_lemma_quadruples, weight,
)


def pi(m, n):
    return plucker_poset(m, n)


def test_join_irreducibles_examples():
    assert join_irreducibles(chain(3)) == ([2, 3], [1, 2, 3])
    L, _ = pi(2, 4)
    irr, irr_plus = join_irreducibles(L)
    assert irr == [(1, 3), (1, 4), (2, 3), (3, 4)]
    assert irr_plus == [(1, 2)] + irr
    assert join_irreducibles(diamond())[0] == ["b", "c"]


@pytest.mark.parametrize("L", [chain(1), chain(4), diamond(), pi(2, 4)[0], pi(2, 5)[0], pi(3, 6)[0]])
def test_irreducibles_match_definition(L):
    assert join_irreducibles(L)[0] == join_irreducibles_bruteforce(L)


@pytest.mark.parametrize("mn,rank", [((2, 4), 4), ((2, 5), 6), ((3, 6), 9), ((1, 5), 4)])
def test_birkhoff_rank(mn, rank):
    cert = birkhoff_check(pi(*mn)[0])
    assert cert.rank == rank == len(cert.irreducibles)


@pytest.mark.parametrize("p", [1, 2, 5])
def test_birkhoff_chain(p):
    assert birkhoff_check(chain(p)).rank == p - 1


def test_m3_is_not_distributive():
    with pytest.raises(NotDistributive):
        birkhoff_check(m3())
    assert m3().is_distributive() is False


def test_not_a_lattice():
    with pytest.raises(NotALattice):
        chain_product((2, 2), [(1, 2), (2, 1)])


def test_canonical_realization_examples():
    R = canonical_realization(chain(3))
    assert R.d == 2 and R.sizes == (2, 2)
    assert R.iota == {1: (1, 1), 2: (2, 1), 3: (2, 2)}
    R = canonical_realization(diamond())
    assert R.iota["a"] == (1, 1) and R.iota["d"] == (2, 2)
    assert {R.iota["b"], R.iota["c"]} == {(2, 1), (1, 2)}
    assert not R.increasing_images
    R = canonical_realization(chain(1))
    assert R.d == 1 and R.sizes == (2,) and R.iota == {1: (1,)}


@pytest.mark.parametrize("L", [chain(1), chain(4), diamond(), pi(2, 4)[0], pi(3, 6)[0]])
def test_canonical_realization_is_valid(L):
    R = canonical_realization(L)
    assert R.validate(L)
    assert R.N == 2 * max(R.sizes) + 1


def test_omega_examples():
    L, R = pi(2, 4)
    assert R.N == 9
    assert omega(R, (1, 4)) == 13
    assert omega(R, (2, 3)) == 21 and omega(R, (1, 3)) == 12 and omega(R, (2, 4)) == 22
    assert omega(R, (1, 4)) + omega(R, (2, 3)) == omega(R, (1, 3)) + omega(R, (2, 4))
    Rc = ChainProductRealization((3, 3, 3), {(1, 1, 1): (1, 1, 1)})
    assert omega(Rc, (1, 1, 1)) == (Rc.N ** 3 - 1) // (Rc.N - 1)


def test_weight_examples():
    L, R = pi(2, 4)
    M = max_omega(R, L.elements)
    assert M == 31
    assert weight(R, M, (3, 4)) == 1
    assert weight(R, M, (1, 2)) == 21
    w = lambda x: weight(R, M, x)
    assert w((1, 4)) + w((2, 3)) == 30 == w((1, 3)) + w((2, 4))


@pytest.mark.parametrize("L,R", [
    pi(2, 5), pi(3, 6),
    (diamond(), canonical_realization(diamond())),
    (chain(5), canonical_realization(chain(5))),
])
def test_omega_and_weight_monotone(L, R):
    M = max_omega(R, L.elements)
    for x, y in itertools.product(L.elements, repeat=2):
        if L.lt(x, y):
            assert omega(R, x) < omega(R, y)
            assert weight(R, M, x) > weight(R, M, y) >= 1


def test_content():
    assert content_union(content((1, 4)), content((2, 3))) == content((1, 2, 3, 4))
    assert content_union((1, 3), (2, 3)) == {1: 1, 2: 1, 3: 2}


@given(st.lists(st.integers(1, 6), min_size=2, max_size=2), st.lists(st.integers(1, 6), min_size=2, max_size=2))
def test_content_union_commutes(a, b):
    assert content_union(a, b) == content_union(b, a)
    assert sum(content_union(a, b).values()) == 4


def test_interval_examples():
    L, _ = pi(2, 4)
    interval, comp = interval_and_complement(L, (1, 3), (2, 4))
    assert interval == [(1, 3), (1, 4), (2, 3), (2, 4)]
    assert sorted(comp) == [(1, 2), (3, 4)]
    assert interval_and_complement(L, (1, 4), (1, 4))[0] == [(1, 4)]
    assert interval_and_complement(L, (1, 2), (3, 4))[1] == []
    with pytest.raises(NotComparable):
        interval_and_complement(L, (1, 4), (2, 3))


def test_every_interval_is_a_distributive_sublattice():
    L, _ = pi(2, 5)
    for a, b in itertools.product(L.elements, repeat=2):
        if L.le(a, b):
            interval, _ = interval_and_complement(L, a, b)
            assert L.sublattice(interval).is_distributive()


@pytest.mark.parametrize("L", [diamond(), pi(2, 4)[0], pi(2, 5)[0], chain(4)])
def test_rank_function_agrees_with_irreducible_count(L):
    irr, _ = join_irreducibles(L)
    for x in L.elements:
        assert L.rank_of(x) == sum(1 for p in irr if L.le(p, x))


def test_from_covers_closure_and_bounds():
    L = FiniteLattice.from_covers("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
    assert L.le("a", "d") and not L.le("b", "c")
    assert L.meet("b", "c") == "a" and L.join("b", "c") == "d"
    assert L.check_bounds()


# the two omega lemmas ----------------------------------------------------------------

def increasing(sizes):
    return [v for v in itertools.product(*(range(1, s + 1) for s in sizes)) if is_increasing(v)]


def test_lemmas_exhaustive_c4_c4():
    pool = increasing((4, 4))
    assert len(pool) == 10
    n = 0
    for I, J in itertools.product(pool, repeat=2):
        for quad in prefix_lemma_quadruples(I, J):
            assert prefix_lemma_holds(*quad)
        for quad in omega_lemma_quadruples(I, J):
            n += 1
            assert omega_lemma_holds(*quad, 9)
    assert n > 0


@given(st.randoms(use_true_random=False))
def test_omega_lemma_random_c5_cubed(rng):
    pool = increasing((5, 5, 5))
    I, J = rng.choice(pool), rng.choice(pool)
    for quad in omega_lemma_quadruples(I, J):
        assert omega_lemma_holds(*quad, 11)
    for quad in prefix_lemma_quadruples(I, J):
        assert prefix_lemma_holds(*quad)


def test_omega_lemma_strict_off_extremal():
    # a non-extremal split has strictly smaller omega sum on the left
    I, J = (1, 4, 4), (2, 3, 5)
    quads = omega_lemma_quadruples(I, J)
    assert quads
    N = 11
    enc = lambda v: sum(a * N ** (2 - t) for t, a in enumerate(v))
    for K, _, _, L in quads:
        extremal = K == tuple(map(min, I, J)) and L == tuple(map(max, I, J))
        assert (enc(I) + enc(J) == enc(K) + enc(L)) == extremal
        assert enc(I) + enc(J) <= enc(K) + enc(L)
