import random

import pytest
from hypothesis import given, strategies as st

from combdim.towers import (CSV_FIELDS, AdmSeq, RankFunction, allowed_terms, build, char2_report,
                            socle_orthogonal, is_admissible, quotient_build, rank, search, sigma_tilde,
                            truncation_purity, verify_thm31)
from combdim.trivext import Algebra, free_module, goldie_dim


def test_admissibility_examples():
    assert is_admissible((), 3, 3)
    assert is_admissible((2, 2, 1), 3, 3)
    assert not is_admissible((1,), 2, 2)
    assert not is_admissible((1, 2), 3, 3)
    assert not is_admissible((3,), 3, 3)
    assert is_admissible((3, 3), 2, 4) and not is_admissible((2,), 2, 4)
    with pytest.raises(ValueError):
        AdmSeq(3, 3, (0,))


def test_empty_sequence_is_regular_module():
    lvl = build(AdmSeq(3, 3))
    assert lvl.module == free_module(Algebra(3, 3), 1)
    assert lvl.gdim == 3
    assert quotient_build((), 3, 3) == lvl.module


@pytest.mark.parametrize("seq", [(1,), (2,), (2, 1), (2, 2), (2, 2, 1)])
def test_quotient_construction_matches_presentation(seq):
    assert quotient_build(seq, 3, 3) == build(seq, 3, 3).module


def test_sigma_tilde_sizes():
    assert sigma_tilde(build((), 3, 2)) == [(1, 0, 0)]
    l1 = build((1,), 3, 2)
    a0, a1 = l1.sigma
    assert sigma_tilde(l1) == [a0, a1, tuple((x + y) % 3 for x, y in zip(a0, a1))]
    assert len(sigma_tilde(build((1, 1), 3, 2))) == 7


def test_truncation_purity_examples():
    assert truncation_purity(build((), 3, 3))
    assert truncation_purity(build((2,), 3, 3))
    assert truncation_purity(build((2, 1), 3, 3))


def _admissible_seqs(p, n, depth):
    out, layer = [()], [()]
    for _ in range(depth):
        layer = [s + (i,) for s in layer for i in allowed_terms(p, n, s[-1] if s else None)]
        out += layer
    return out


def test_truncation_purity_sweep():
    rng = random.Random(7)
    seqs = _admissible_seqs(3, 4, 4)
    for seq in rng.sample(seqs, 12):
        lvl = build(seq, 3, 4)
        assert truncation_purity(lvl)
        assert lvl.gdim == 4 + sum(seq)


def test_rank_functions():
    lvl = build((2, 1), 3, 3)
    assert rank(lvl.module, RankFunction.GDIM) == 6
    assert rank(lvl.module, RankFunction.LENGTH) == lvl.module.d == 9


def test_socle_orthogonal_small_cases():
    assert socle_orthogonal(AdmSeq(3, 3), 2)
    assert socle_orthogonal(AdmSeq(3, 3, (2,)), 1)


def test_char2_report_asserts_only_large_terms():
    rep = char2_report(4, 2)
    assert rep.ok
    for c in rep.claims:
        if "by 1" in c.name or "by 2" in c.name:
            assert not c.asserted


def test_verify_char2_small():
    rep = verify_thm31(2, 2)
    assert rep.ok
    assert all(c.passed for c in rep.claims if c.name.startswith("local"))
    assert all(c.passed is None for c in rep.claims if c.name.startswith("M_"))


def test_verify_p3_n2_report():
    rep = verify_thm31(3, 2)
    failing = [c.name for c in rep.claims if c.asserted and c.passed is False]
    assert failing == ["M_(1,1) pair {alpha_0, alpha_new} fundamental"]
    names = [c.name for c in rep.claims]
    assert "local quotient Gdim 2" in names and "M_1 full cdim" in names


def test_search_depth_zero():
    rep = search(3, 3, 0, 5)
    assert len(rep.rows) == 1 and rep.rows[0].seq == ()


def test_search_empty_space_in_char2():
    rep = search(2, 2, 3, 5)
    assert [r.seq for r in rep.rows] == [()]


def test_search_csv_header_and_determinism():
    a = search(3, 3, 2, 3).to_csv()
    b = search(3, 3, 2, 3).to_csv()
    assert a == b
    assert a.splitlines()[0] == ",".join(CSV_FIELDS)
    assert "\r" not in a


@given(st.integers(0, 10 ** 6))
def test_gdim_formula(seed):
    rng = random.Random(seed)
    p, n = rng.choice([(3, 3), (3, 4), (2, 4), (5, 3)])
    seqs = _admissible_seqs(p, n, 3)
    seq = rng.choice(seqs)
    assert goldie_dim(build(seq, p, n).module) == n + sum(seq)
