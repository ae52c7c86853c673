import pytest

from combdim import checks


@pytest.mark.parametrize("name", checks.LEMMA_NAMES)
def test_named_suites_pass_small(name):
    for res in checks.run_lemma(name, trials=8, seed=3):
        assert res.passed, res.render()


def test_failure_records_counterexample():
    res = checks.CheckResult("demo")
    res.fail({"x": 1}, "broken")
    res.fail({"x": 2}, "broken again")
    assert not res.passed and res.violations == 2
    assert res.counterexample == {"x": 1}
    assert '"x": 1' in res.render()


def test_star_meets_agrees_with_enumeration():
    import random
    from combdim import linalg as la
    from combdim.trivext import Ideal, socle, star_meets
    rng = random.Random(11)
    for _ in range(15):
        M = checks.random_domain_module(rng, 2, 6)
        J = Ideal.soc(M.algebra)
        vecs = la.enumerate_vectors(socle(M))
        N = la.span([rng.choice(vecs)], M.d, 2)
        assert star_meets(M, J, N) == checks.star_meets_brute(M, J, N)


def test_unknown_suite():
    with pytest.raises(ValueError):
        checks.run_lemma("9.9")
