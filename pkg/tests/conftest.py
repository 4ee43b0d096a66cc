import pytest

from hexcover import build_catalog, default_catalog
from hexcover.cubic_enum import load_corpus

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


@pytest.fixture(scope="session")
def fresh_catalog():
    """A catalog derived from scratch in this session (about a minute)."""
    return build_catalog()


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("corpus")


@pytest.fixture(scope="session")
def corpus(corpus_dir):
    """Connected cubic graphs by vertex count, n = 4..14."""
    return {n: load_corpus(n, corpus_dir) for n in range(4, 15, 2)}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
