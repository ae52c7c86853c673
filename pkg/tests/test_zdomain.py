import random

import pytest
from hypothesis import given, strategies as st

from combdim import linalg as la
from combdim.checks import random_ztriple
from combdim.cyclic_graph import CTriple
from combdim.errors import NotDirected
from combdim.towers import module_Mi
from combdim.trivext import Algebra, Ideal
from combdim.zdomain import (PrincIdeal, ZTriple, gamma_z, lemma71_check, lemma72_check, primitive,
                             witness_adjacent, z_adjacent)


def test_example_graph():
    G = gamma_z(ZTriple(2, ((1, 0), (2, 0), (0, 1))), PrincIdeal(6))
    assert G.labels == ((0, 1), (1, 0), (2, 0))
    assert G.adjacent(1, 2) and not G.adjacent(0, 1) and not G.adjacent(0, 2)
    assert witness_adjacent((1, 0), (2, 0), PrincIdeal(6), 12)


def test_zero_ideal_discrete():
    G = gamma_z(ZTriple(2, ((1, 0), (2, 0), (3, 0))), PrincIdeal(0))
    assert not G.edges and len(G) == 3


def test_single_vector():
    G = gamma_z(ZTriple(1, ((5,),)), PrincIdeal(3))
    assert len(G) == 1 and G.adjacent(0, 0)


def test_sign_identifies_cyclic_submodules():
    assert primitive((-2, 4)) == (2, -4)
    assert len(gamma_z(ZTriple(2, ((1, 2), (-1, -2))), PrincIdeal(2))) == 1


def test_marked_components():
    G = gamma_z(ZTriple(2, ((1, 0), (2, 0), (0, 1)), ((1, 0),)), PrincIdeal(2))
    assert {G.labels[m] for m in G.marked} == {(1, 0), (2, 0)}


def test_lemma72_examples():
    t = ZTriple(2, ((1, 1), (2, 2), (1, 0)))
    assert lemma72_check(t, [PrincIdeal(2), PrincIdeal(3)])
    assert lemma72_check(t, [PrincIdeal(5)])
    with pytest.raises(ValueError):
        lemma72_check(t, [PrincIdeal(0)])


def test_lemma71_examples():
    t = ZTriple(2, ((1, 0), (2, 0), (0, 1)))
    assert lemma71_check(t, [PrincIdeal(4), PrincIdeal(2)])
    assert lemma71_check(t, [PrincIdeal(3)])
    with pytest.raises(NotDirected):
        lemma71_check(t, [PrincIdeal(2), PrincIdeal(3)])


def test_lemma71_socle_family():
    A = Algebra(3, 2)
    M = module_Mi(3, 2, 1)
    t = CTriple(M, ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (1, 1, 0, 0, 0)))
    W1 = Ideal.soc(A, la.span([(1, 0)], 2, 3))
    assert lemma71_check(t, [W1, Ideal.soc(A)])
    W2 = Ideal.soc(A, la.span([(0, 1)], 2, 3))
    with pytest.raises(NotDirected):
        lemma71_check(t, [W1, W2])


vecs = st.lists(st.integers(-5, 5), min_size=2, max_size=3).filter(any)


@given(vecs, st.integers(1, 7), st.integers(1, 7), st.integers(-3, 3).filter(bool))
def test_graph_independent_of_nonzero_m(a, m1, m2, c):
    b = [c * x for x in a]
    t = ZTriple(len(a), (tuple(a), tuple(b), tuple(reversed(a))))
    assert gamma_z(t, PrincIdeal(m1)).same_labelled(gamma_z(t, PrincIdeal(m2)))


@given(vecs, st.data(), st.integers(1, 6))
def test_criterion_matches_witness(a, data, m):
    b = data.draw(st.lists(st.integers(-5, 5), min_size=len(a), max_size=len(a)).filter(any))
    bound = m * max(abs(x) for x in a + b)
    assert z_adjacent(a, b, PrincIdeal(m)) == witness_adjacent(a, b, PrincIdeal(m), bound)


@given(st.integers(0, 10 ** 6))
def test_lemma72_random(seed):
    rng = random.Random(seed)
    t = random_ztriple(rng)
    assert lemma72_check(t, [PrincIdeal(rng.randint(1, 9)) for _ in range(rng.randint(1, 3))])
