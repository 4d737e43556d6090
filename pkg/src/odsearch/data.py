"""Access to the bundled lexicon, concept graph, labels, and profiles."""

from __future__ import annotations

from pathlib import Path

from .langid import LanguageProfile, load_profiles
from .linker import ConceptGraph, ConceptLabels, Lexicon, LocalLinker

DATA_DIR = Path(__file__).parent / "data"

LEXICON_FILE = DATA_DIR / "lexicon.tsv"
GRAPH_FILE = DATA_DIR / "concept_graph.tsv"
LABELS_FILE = DATA_DIR / "concept_labels.tsv"
PROFILES_DIR = DATA_DIR / "profiles"
TRAINING_DIR = DATA_DIR / "training"


def bundled_lexicon() -> Lexicon:
    return Lexicon.from_tsv(LEXICON_FILE)


def bundled_graph() -> ConceptGraph:
    return ConceptGraph.from_tsv(GRAPH_FILE)


def bundled_labels() -> ConceptLabels:
    return ConceptLabels.from_tsv(LABELS_FILE)


def bundled_profiles() -> tuple[LanguageProfile, ...]:
    return load_profiles(PROFILES_DIR)


def bundled_training_texts() -> dict[str, str]:
    """Training corpora keyed by language code."""
    return {
        path.stem: path.read_text(encoding="utf-8")
        for path in sorted(TRAINING_DIR.glob("*.txt"))
    }


def default_local_linker() -> LocalLinker:
    """Linker over the bundled lexicon, graph, and language profiles."""
    return LocalLinker(bundled_lexicon(), bundled_graph(), bundled_profiles())
