import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qrichardson.degeneration import extract_graded
from qrichardson.errors import InconsistentParameters, NotConfluent, NotDistributive
from qrichardson.grassmann import plucker_poset, straightening_table
from qrichardson.lattice import canonical_realization, chain, diamond, m3
from qrichardson.oracles import hibi_normal_form
from qrichardson.scalars import QScalar, q
from qrichardson.toric import (
    ScalarMonomial, ToricPresentation, commutative_presentation, confluence_certify,
    gkdim_toric, regularity_check, symbolic_presentation, toric_nf, torus_embedding,
    verify_torus_relations,
)


@pytest.fixture(scope="module")
def p24():
    return extract_graded(straightening_table(2, 4)).presentation


def test_symbolic_swap_and_split():
    L = diamond()
    P = symbolic_presentation(L)
    nf = toric_nf(P, ["d", "a"])
    assert nf.monomial == ("a", "d") and nf.scalar == ScalarMonomial.symbol("Q", "d", "a")
    nf = toric_nf(P, ["b", "c"])
    assert nf.monomial == ("a", "d") and nf.scalar == ScalarMonomial.symbol("C", "b", "c")
    nf = toric_nf(P, ["a", "b", "d"])
    assert nf.monomial == ("a", "b", "d") and nf.scalar.is_one()


def test_scalar_monomial_canonical_relations():
    L = diamond()
    pos = {x: i for i, x in enumerate(L.elements)}
    Qba = ScalarMonomial.symbol("Q", "b", "a")
    Qab = ScalarMonomial.symbol("Q", "a", "b")
    assert (Qba * Qab).canonical(pos).is_one()
    Ccb = ScalarMonomial.symbol("C", "c", "b")
    assert Ccb.canonical(pos) == (ScalarMonomial.symbol("Q", "c", "b") * ScalarMonomial.symbol("C", "b", "c")).canonical(pos)


@pytest.mark.parametrize("L", [chain(4), diamond(), plucker_poset(2, 4)[0], plucker_poset(2, 5)[0]])
def test_commutative_presentation_is_confluent(L):
    P = commutative_presentation(L)
    assert confluence_certify(P).ok


def test_commutative_nf_matches_hibi_oracle():
    L, _ = plucker_poset(2, 5)
    R = canonical_realization(L)
    P = commutative_presentation(L, R)
    rng = random.Random(1)
    for _ in range(200):
        w = [rng.choice(L.elements) for _ in range(rng.randint(1, 5))]
        nf = toric_nf(P, w)
        assert nf.scalar == 1
        assert nf.monomial == hibi_normal_form(R, L.elements, w)


def test_extracted_presentations_are_confluent(p24):
    assert confluence_certify(p24).ok
    assert confluence_certify(extract_graded(straightening_table(2, 5)).presentation).ok


def test_corrupted_c_is_rejected(p24):
    bad = dict(p24.cmap)
    bad[((1, 4), (2, 3))] = bad[((1, 4), (2, 3))] * q
    P = ToricPresentation(p24.lattice, p24.realization, p24.qmap, bad)
    with pytest.raises(InconsistentParameters):
        P.validate()
    assert not confluence_certify(P, validate=False).ok


def test_corrupted_q_is_rejected(p24):
    bad = dict(p24.qmap)
    bad[((1, 2), (3, 4))] = q ** 5
    with pytest.raises(InconsistentParameters):
        ToricPresentation(p24.lattice, p24.realization, bad, p24.cmap).validate()


def test_non_distributive_rejected():
    with pytest.raises(NotDistributive):
        commutative_presentation(m3())


def test_torus_identity_on_irr_plus(p24):
    torus, images = torus_embedding(p24)
    assert torus.gens == [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]
    for g in torus.gens:
        assert images[g] == torus.gen(g)
    assert images[(2, 4)].exps == (0, -1, 1, 1, 0)


def test_torus_relations_24(p24):
    checked, failures = verify_torus_relations(p24)
    assert checked == 36 + 2 and failures == []


def test_torus_diamond():
    L = diamond()
    P = commutative_presentation(L, one=QScalar(1))
    c = QScalar(3)
    P.cmap[("b", "c")] = c
    P.cmap[("c", "b")] = c
    torus, images = torus_embedding(P)
    assert images["d"].exps == (-1, 1, 1) and images["d"].scalar == 1 / c
    assert verify_torus_relations(P, torus, images)[1] == []


def test_torus_refuses_non_confluent():
    with pytest.raises(NotConfluent):
        torus_embedding(symbolic_presentation(diamond()))


def test_gkdim_examples(p24):
    assert gkdim_toric(p24) == 5
    assert gkdim_toric(chain(6)) == 6
    assert gkdim_toric(diamond()) == 3


def test_regularity_24(p24):
    assert all(regularity_check(p24, 4).values())


words24 = st.lists(st.sampled_from(list(itertools.combinations(range(1, 5), 2))), max_size=6)


@given(words24)
def test_length_preserved_and_idempotent(w):
    P = extract_graded(straightening_table(2, 4)).presentation
    nf = toric_nf(P, w)
    assert len(nf.monomial) == len(w)
    again = toric_nf(P, nf.monomial)
    assert again.monomial == nf.monomial and again.scalar == 1


@given(words24, words24)
def test_normal_forms_multiply(w1, w2):
    P = extract_graded(straightening_table(2, 4)).presentation
    a, b = toric_nf(P, w1), toric_nf(P, w2)
    direct = toric_nf(P, w1 + w2)
    via = toric_nf(P, a.monomial + b.monomial)
    assert direct.monomial == via.monomial
    assert direct.scalar == a.scalar * b.scalar * via.scalar
