import itertools

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def all_vectors(p, d):
    return list(itertools.product(range(p), repeat=d))


def brute_span(vectors, p, d):
    """Every F_p-combination of ``vectors``, as a set."""
    vectors = list(vectors)
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(vectors)):
        v = [0] * d
        for c, w in zip(coeffs, vectors):
            v = [(x + c * y) % p for x, y in zip(v, w)]
        out.add(tuple(v))
    return out


@pytest.fixture
def brute():
    return brute_span


_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid and (report.when == "call" or report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        if report.when == "call" or name not in _criteria:
            _criteria[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split("_")[2])):
        status = "PASS" if _criteria[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
