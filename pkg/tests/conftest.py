from pathlib import Path

import pytest

from regkt.fingroup import cycles, from_permutations

GOLDEN = Path(__file__).parent / "golden"
NEGATIVE = Path(__file__).parent / "negative"

ACCEPTANCE_LINES = {}


def pytest_addoption(parser):
    parser.addoption("--long-running", action="store_true", default=False, help="run flag-gated long checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "long: long-running checks (enable with --long-running)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long-running"):
        return
    skip = pytest.mark.skip(reason="needs --long-running")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


def perm_group(name, degree, *gens):
    return from_permutations(degree, [cycles(degree, *g) for g in gens], name=name)


@pytest.fixture(scope="session")
def groups():
    return {
        "trivial": perm_group("trivial", 1),
        "C2": perm_group("C2", 2, [(1, 2)]),
        "C3": perm_group("C3", 3, [(1, 2, 3)]),
        "C4": perm_group("C4", 4, [(1, 2, 3, 4)]),
        "C6": perm_group("C6", 5, [(1, 2, 3), (4, 5)]),
        "C2xC2": perm_group("C2xC2", 4, [(1, 2), (3, 4)], [(1, 3), (2, 4)]),
        "C2xC2xC2": perm_group("C2xC2xC2", 6, [(1, 2)], [(3, 4)], [(5, 6)]),
        "S3": perm_group("S3", 3, [(1, 2, 3)], [(1, 2)]),
        "D4": perm_group("D4", 4, [(1, 2, 3, 4)], [(1, 3)]),
        "Q8": perm_group("Q8", 8, [(1, 2, 3, 4), (5, 6, 7, 8)], [(1, 5, 3, 7), (2, 8, 4, 6)]),
        "A4": perm_group("A4", 4, [(1, 2, 3)], [(1, 2), (3, 4)]),
    }
