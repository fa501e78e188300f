import pytest
from hypothesis import HealthCheck, settings

from baseseq import codec
from baseseq.corpus import load_examples, table_rows

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

EXAMPLE_CODE = "06142;1675"


@pytest.fixture(scope="session")
def example8():
    """The n=8 member of BS(9,8) used throughout as a reference."""
    return codec.decode(EXAMPLE_CODE, 8)


@pytest.fixture(scope="session")
def witness_rows():
    return table_rows()


@pytest.fixture(scope="session")
def example_rows():
    return load_examples()


def row_for(rows, table, edge):
    return next(r for r in rows if r.table == table and r.edge == edge)


@pytest.fixture(scope="session")
def members():
    """brute_force(n) results, computed once per session."""
    from baseseq.search import brute_force

    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = brute_force(n)
        return cache[n]

    return get


_CRITERIA: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _CRITERIA[number] = (title, rep.outcome, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, outcome, duration = _CRITERIA[number]
        status = "PASS" if outcome == "passed" else outcome.upper()
        terminalreporter.write_line(f"criterion {number:2d}: {status:7s} {title} ({duration:.1f}s)")
