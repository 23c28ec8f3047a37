import pytest

from lingroupoid import enumerate_identities, parse_identity

AC_NICE = "(xy)z=y(zx)"


@pytest.fixture(scope="session")
def ac_nice():
    return parse_identity(AC_NICE)


@pytest.fixture(scope="session")
def length6():
    return enumerate_identities(3, nontrivial_only=True)


@pytest.fixture(scope="session")
def length8():
    return enumerate_identities(4, nontrivial_only=True)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
