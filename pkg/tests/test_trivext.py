import random

import pytest
from hypothesis import given, strategies as st

from combdim import linalg as la
from combdim.checks import random_presentation
from combdim.cyclic_graph import gamma_full
from combdim.errors import FieldMismatch
from combdim.linalg import FpMatrix, Subspace
from combdim.towers import build, module_Mi, quotient_build
from combdim.trivext import (AModule, Algebra, Ideal, Submodule, act, annihilator, cyclic, direct_sum,
                             free_module, goldie_dim, ideal_image, in_decomposition_domain, is_pure,
                             presentation, quotient, radical_image, socle, star_meets, zero_module)

A22 = Algebra(2, 2)
A32 = Algebra(3, 2)


def test_elem_mul():
    x = A32.elem(2, (1, 0))
    assert A32.one() * x == x
    assert (A32.elem(0, (1, 1)) * A32.elem(0, (1, 2))) == A32.elem(0, (0, 0))
    assert x * A32.elem(1, (0, 1)) == A32.elem(2, (1, 2))


def test_free_module_shapes():
    F = free_module(A22, 1)
    assert F.d == 3 and all(la.rank(t) == 1 for t in F.T)
    assert free_module(A22, 0).d == 0
    F2 = free_module(A22, 2)
    assert F2.d == 6 and radical_image(F2).rank == 4


def test_presentation_identity_is_regular():
    P = presentation(A32, 1, 2, [[[1, 0], [0, 1]]])
    assert P.T == free_module(A32, 1).T


def test_presentation_Mi():
    n, i = 2, 1
    L0 = [[1, 0], [0, 1], [0, 0]]
    L1 = [[0, 0], [1, 0], [0, 1]]
    assert presentation(A32, 2, n + i, [L0, L1]) == module_Mi(3, n, i)


def test_presentation_semisimple():
    M = presentation(Algebra(2, 2), 0, 3, [])
    assert M.d == 3 and all(t.is_zero() for t in M.T)


def test_act():
    F = free_module(A22, 1)
    assert act((0, 0), F, (1, 0, 0)) == (0, 0, 0)
    assert act((1, 0), F, (1, 0, 0)) == (0, 1, 0)


def test_square_zero_enforced():
    t = FpMatrix.from_rows(2, [[0, 0], [1, 0]])
    with pytest.raises(ValueError):
        AModule(Algebra(2, 2), 2, (t, t.T))


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        AModule(Algebra(3, 1), 1, (FpMatrix.zeros(2, 1, 1),))


def test_ideal_images():
    F = free_module(A22, 1)
    gen = la.span([(1, 0, 0)], 3, 2)
    assert ideal_image(Ideal.zero(A22), F, gen).is_zero()
    assert ideal_image(Ideal.soc(A22), F, F.full()) == la.span([(0, 1, 0), (0, 0, 1)], 3, 2)
    e1 = Ideal.soc(A22, la.span([(1, 0)], 2, 2))
    assert ideal_image(e1, F, gen) == la.span([(0, 1, 0)], 3, 2)


def test_annihilator_cases():
    F = free_module(A22, 1)
    assert annihilator(F, Ideal.zero(A22)).is_full()
    assert annihilator(F, Ideal.whole(A22)).is_zero()
    assert annihilator(F, Ideal.soc(A22)) == socle(F)


def test_decomposition_domain_examples():
    assert in_decomposition_domain(free_module(A22, 1), Ideal.soc(A22))
    assert in_decomposition_domain(module_Mi(3, 2, 1), Ideal.soc(A32))
    k = AModule(Algebra(2, 0), 1, ())
    assert not in_decomposition_domain(k, Ideal.zero(k.algebra))
    assert in_decomposition_domain(zero_module(Algebra(2, 0)), Ideal.zero(Algebra(2, 0)))


def test_goldie():
    assert goldie_dim(free_module(A22, 1)) == 2
    assert goldie_dim(module_Mi(3, 2, 1)) == 3
    assert goldie_dim(zero_module(A22)) == 0


def test_cyclic_examples():
    F = free_module(A22, 1)
    assert cyclic(F, (0, 1, 0)).dim == 1
    assert cyclic(F, (1, 0, 0)).dim == 3
    M = module_Mi(3, 2, 1)
    assert cyclic(M, (1, 1, 0, 0, 0)).dim == 3
    with pytest.raises(ValueError):
        cyclic(F, (0, 0, 0))


def test_quotient_by_zero():
    M = module_Mi(3, 2, 1)
    Q = quotient(M, Submodule(M, M.zero()))
    assert Q.d == M.d and Q.T == M.T


def test_direct_summand_pure():
    rng = random.Random(5)
    for _ in range(10):
        M1 = random_presentation(rng, 3, 2, 1, 3)
        M2 = random_presentation(rng, 3, 2, 2, 2)
        S = direct_sum(M1, M2)
        U = la.span([S.unit_vector(k) for k in range(M1.d)], S.d, 3)
        for I in (Ideal.soc(S.algebra), Ideal.whole(S.algebra), Ideal.zero(S.algebra)):
            assert is_pure(Submodule(S, U), I)


@pytest.mark.parametrize("p,n,i", [(3, 2, 1), (3, 3, 1), (3, 3, 2), (2, 3, 2)])
def test_glued_quotient_is_Mi(p, n, i):
    Q = quotient_build((i,), p, n)
    M = module_Mi(p, n, i)
    J = Ideal.soc(Algebra(p, n))
    assert Q.d == 2 * (n + 1) - (n - i) == M.d
    assert goldie_dim(Q) == goldie_dim(M)
    assert Q == M
    assert gamma_full(Q, J).n_components == gamma_full(M, J).n_components


def test_star_meets_detects_socle_overlap():
    F = free_module(A22, 1)
    assert star_meets(F, Ideal.soc(A22), la.span([(0, 1, 0)], 3, 2))
    assert not star_meets(F, Ideal.soc(A22), F.zero())


# -- properties --------------------------------------------------------------


@st.composite
def presentations(draw):
    p = draw(st.sampled_from([2, 3]))
    n = draw(st.integers(0, 3))
    g = draw(st.integers(0, 3))
    N = draw(st.integers(0, 4))
    return random_presentation(random.Random(draw(st.integers(0, 10 ** 6))), p, n, g, N)


@given(presentations())
def test_action_squares_to_zero(M):
    for a in M.T:
        for b in M.T:
            assert la.matmul(a, b).is_zero()


@given(presentations(), st.data())
def test_ideal_image_inside_annihilator(M, data):
    A = M.algebra
    ideals = [Ideal.soc(A)] + ([Ideal.soc(A, la.span([data.draw(st.tuples(*[st.integers(0, A.p - 1)] * A.n))], A.n, A.p))]
                               if A.n else [])
    for I in ideals:
        assert la.is_subspace(ideal_image(I, M, M.full()), annihilator(M, I))


@given(presentations())
def test_radical_inside_socle(M):
    assert la.is_subspace(radical_image(M), socle(M))
