import pytest

from permkit import Group, Perm

ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


SQUARE_FLIPS = (
    Perm()(0, 2)(3, 5)(6, 8),
    Perm()(0, 6)(1, 7)(2, 8),
    Perm()(1, 3)(2, 6)(5, 7),
)


@pytest.fixture(scope="session")
def s4():
    return Group.generated_by([Perm()(0, 1), Perm()(0, 1, 2, 3)])


@pytest.fixture(scope="session")
def a4(s4):
    return s4.subgroup_search(lambda p: p.is_even())


@pytest.fixture(scope="session")
def v4():
    return Group.generated_by([Perm()(0, 1)(2, 3), Perm()(0, 2)(1, 3)])


@pytest.fixture(scope="session")
def d4():
    return Group.generated_by(SQUARE_FLIPS)


@pytest.fixture(scope="session")
def c6():
    return Group.generated_by([Perm()(0, 1, 2)(3, 4)])


@pytest.fixture(scope="session")
def named_groups(s4, a4, v4, d4, c6):
    return {"trivial": Group(), "V4": v4, "A4": a4, "S4": s4, "D4": d4, "C6": c6}
