from __future__ import annotations

from pathlib import Path

import pytest

from odsearch.data import (
    bundled_graph,
    bundled_labels,
    bundled_lexicon,
    bundled_profiles,
)
from odsearch.dialogue import DialogueEngine
from odsearch.index import build_index
from odsearch.linker import LocalLinker
from odsearch.records import read_corpus

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def lexicon():
    return bundled_lexicon()


@pytest.fixture(scope="session")
def graph():
    return bundled_graph()


@pytest.fixture(scope="session")
def labels():
    return bundled_labels()


@pytest.fixture(scope="session")
def profiles():
    return bundled_profiles()


@pytest.fixture(scope="session")
def linker(lexicon, graph, profiles):
    return LocalLinker(lexicon, graph, profiles)


@pytest.fixture(scope="session")
def cid(lexicon):
    """Resolve a bundled concept id from an unambiguous English surface."""

    def resolve(surface: str, language: str = "en") -> str:
        candidates = lexicon.lookup(surface, language)
        assert candidates, f"no lexicon entry for {surface!r}"
        return candidates[0][0]

    return resolve


@pytest.fixture(scope="session")
def mini_records():
    return list(read_corpus(FIXTURES / "mini.records.ndjson"))


@pytest.fixture(scope="session")
def mini_annotated(mini_records, linker):
    return [linker.annotate_dataset(record) for record in mini_records]


@pytest.fixture(scope="session")
def mini_index(mini_annotated):
    return build_index(mini_annotated)


@pytest.fixture()
def engine(mini_index, linker, labels):
    return DialogueEngine(mini_index, linker, labels)
