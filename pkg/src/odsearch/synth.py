"""Deterministic synthetic corpora for scale and pipeline benchmarks."""

from __future__ import annotations

import random
from typing import Iterator, Sequence

from .linker import Lexicon
from .records import DEFAULT_PORTALS, DatasetRecord, PortalSpec

DEFAULT_SEED = 18342


def synthetic_records(
    spec: PortalSpec,
    count: int,
    surfaces: Sequence[str],
    seed: int = DEFAULT_SEED,
) -> Iterator[DatasetRecord]:
    """Generate plausible records for one portal from a surface pool."""
    rng = random.Random(f"{seed}:{spec.portal_id}")
    pool = sorted(surfaces)
    if not pool:
        raise ValueError(f"no surface forms for {spec.portal_id}")
    for i in range(count):
        title_words = rng.sample(pool, k=min(len(pool), rng.randint(2, 4)))
        body_words = [rng.choice(pool) for _ in range(rng.randint(6, 18))]
        keyword_pool = rng.sample(pool, k=min(len(pool), rng.randint(0, 4)))
        yield DatasetRecord(
            portal_id=spec.portal_id,
            dataset_id=f"syn-{i:05d}",
            title=" ".join(title_words).capitalize(),
            description=" ".join(body_words),
            keywords=tuple(dict.fromkeys(keyword_pool)),
            landing_url=f"{spec.api_base_url}/dataset/syn-{i:05d}",
            language=spec.expected_language,
            publisher=spec.portal_id,
        )


def table1_corpus(
    lexicon: Lexicon, seed: int = DEFAULT_SEED
) -> Iterator[DatasetRecord]:
    """The 18,342-record benchmark corpus: seven portals at their real sizes."""
    for spec in DEFAULT_PORTALS:
        surfaces = lexicon.surfaces(spec.expected_language)
        yield from synthetic_records(
            spec, spec.dataset_count_hint, surfaces, seed=seed
        )


def query_texts(
    lexicon: Lexicon, count: int, seed: int = DEFAULT_SEED
) -> list[str]:
    """Mixed-language query strings drawn from lexicon surface forms."""
    rng = random.Random(f"{seed}:queries")
    languages = lexicon.languages
    out: list[str] = []
    for _ in range(count):
        language = rng.choice(languages)
        pool = lexicon.surfaces(language)
        words = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
        out.append(" ".join(words))
    return out
