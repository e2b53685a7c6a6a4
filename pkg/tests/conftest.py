from __future__ import annotations

from pathlib import Path

import pytest

from negeval import Corpus, load_sem_conll

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURES / name


@pytest.fixture(scope="session")
def gold_corpus() -> Corpus:
    return load_sem_conll(fixture_path("two_systems_gold.conll"), name="two-systems-gold")


@pytest.fixture(scope="session")
def system_a() -> Corpus:
    return load_sem_conll(fixture_path("two_systems_a.conll"), name="system-a")


@pytest.fixture(scope="session")
def system_b() -> Corpus:
    return load_sem_conll(fixture_path("two_systems_b.conll"), name="system-b")


@pytest.fixture(scope="session")
def nested_corpus() -> Corpus:
    return load_sem_conll(fixture_path("nested_scopes.conll"), name="nested-scopes")
