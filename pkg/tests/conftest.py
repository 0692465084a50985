import pytest

from topoarg import fixture_path, load_model
from topoarg.core import Domain
from topoarg.probabilistic import pmodel_from_json
from topoarg.core import load_json


@pytest.fixture
def fig1():
    return load_model(fixture_path("fig1"))


@pytest.fixture
def zoo():
    return load_model(fixture_path("zoo"))


@pytest.fixture
def uniform3():
    return pmodel_from_json(load_json(fixture_path("uniform3")))


@pytest.fixture
def m(fig1):
    """Label-list to mask over the three-world domain."""
    return lambda *labels: fig1.domain.mask([str(x) for x in labels])


def masks(domain: Domain, *families):
    return [frozenset(domain.mask([str(x) for x in s]) for s in fam) for fam in families]


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number][1])
