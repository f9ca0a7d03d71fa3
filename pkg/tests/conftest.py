import random

import pytest

from stringhom import load_algebra
from stringhom.fixtures import NAMES, fixture
from stringhom.generate import algebra_corpus

# acceptance results collected by test_acceptance.py, printed at the end
CRITERIA: dict[int, tuple[str, bool, str]] = {}

# dims / top / socle read off the drawn approximations
E18 = {
    "1": ({"1": 1, "2": 1, "3": 1, "4": 1, "5": 1, "6": 1, "8": 1, "12": 1},
          {"1": 1, "4": 1, "8": 1, "12": 1}, {"2": 1, "3": 1, "6": 1}),
    "2": ({"1": 1, "2": 1}, {"2": 1}, {"1": 1}),
    "3": ({"3": 1, "7": 1, "9": 1}, {"3": 1}, {"7": 1, "9": 1}),
    "4": ({"4": 1, "6": 1, "8": 1}, {"4": 1, "8": 1}, {"6": 1}),
    "5": ({"1": 1, "2": 1, "3": 1, "4": 1, "5": 1, "6": 2, "8": 2, "9": 1},
          {"1": 1, "4": 1, "5": 1, "8": 1}, {"2": 1, "3": 1, "6": 1, "9": 1}),
    "6": ({"6": 1, "9": 1, "10": 1}, {"6": 1}, {"10": 1}),
    "7": ({"5": 1, "7": 2, "11": 1, "12": 1}, {"7": 1, "12": 1}, {"5": 1, "7": 1}),
    "8": ({"8": 1}, {"8": 1}, {"8": 1}),
    "9": ({"4": 1, "9": 1, "10": 1}, {"9": 1}, {"4": 1, "10": 1}),
    "10": ({"10": 2}, {"10": 1}, {"10": 1}),
    "11": ({"7": 1, "11": 1, "12": 1}, {"11": 1}, {"7": 1, "12": 1}),
    "12": ({"5": 1, "7": 2, "11": 1, "12": 1}, {"7": 1, "12": 1}, {"5": 1, "7": 1}),
}


@pytest.fixture(scope="session")
def e4():
    return fixture("e4")


@pytest.fixture(scope="session")
def e23():
    return fixture("e23")


@pytest.fixture(scope="session")
def e17():
    return fixture("e17")


@pytest.fixture(scope="session")
def e18():
    return fixture("e18")


@pytest.fixture(scope="session")
def e24():
    return fixture("e24")


@pytest.fixture(scope="session")
def all_fixtures():
    return {n: fixture(n) for n in NAMES}


@pytest.fixture(scope="session")
def corpus():
    return algebra_corpus(seed=20240531, count=50)


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def field_k():
    return load_algebra("vertices: 1\n")


@pytest.fixture(scope="session")
def a2():
    return load_algebra("vertices: 1 2\narrow a: 1 -> 2\n")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        name, ok, detail = CRITERIA[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {name}  {detail}")
