"""Character n-gram language identification.

Rank-profile classification: a profile is the 300 most frequent 1-4
character n-grams of a training text, ranked by frequency.  A query text
is profiled the same way and compared to every stored profile by the
out-of-place rank distance; the nearest profile's language wins unless
the margin over the runner-up is too small, in which case the text stays
undetermined ("und").
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InsufficientText, SchemaError
from .records import LANGUAGE_CODES

PROFILE_SIZE = 300
#: An n-gram absent from a stored profile costs the maximum rank penalty.
MISSING_PENALTY = PROFILE_SIZE
MIN_TRAINING_CHARS = 500
#: Texts producing fewer distinct n-grams than this stay undetermined.
MIN_QUERY_NGRAMS = 3
#: Minimum (d_second - d_best) / d_max separation for a confident call.
MARGIN = 0.02

NGRAM_MIN = 1
NGRAM_MAX = 4


@dataclass(frozen=True)
class LanguageProfile:
    """Ranked n-gram profile of one language.

    ``ngrams`` holds (n-gram, rank) pairs with ranks 0..len-1, gap-free,
    in rank order; n-grams are unique within a profile.
    """

    language: str
    ngrams: tuple[tuple[str, int], ...]
    _ranks: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ranks = {gram: rank for gram, rank in self.ngrams}
        if len(ranks) != len(self.ngrams):
            raise ValueError("profile n-grams must be unique")
        if sorted(ranks.values()) != list(range(len(ranks))):
            raise ValueError("profile ranks must be 0..len-1 without gaps")
        object.__setattr__(self, "_ranks", ranks)

    def rank(self, gram: str) -> int | None:
        return self._ranks.get(gram)


def _clean(text: str) -> str:
    """Lowercase and replace every non-letter with a space."""
    lowered = text.lower()
    return "".join(ch if ch.isalpha() else " " for ch in lowered)


def _ngram_counts(text: str) -> Counter[str]:
    """Count all 1-4 grams over space-padded tokens of the cleaned text."""
    counts: Counter[str] = Counter()
    for token in _clean(text).split():
        padded = f" {token} "
        size = len(padded)
        for n in range(NGRAM_MIN, NGRAM_MAX + 1):
            for i in range(size - n + 1):
                counts[padded[i : i + n]] += 1
    return counts


def _ranked_ngrams(counts: Counter[str]) -> tuple[tuple[str, int], ...]:
    """Keep the most frequent n-grams; ties break lexicographically."""
    ordered = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return tuple((gram, rank) for rank, (gram, _) in enumerate(ordered[:PROFILE_SIZE]))


def build_profile(training_text: str, language: str) -> LanguageProfile:
    """Build the ranked profile of a language from training text.

    Raises InsufficientText when the text is shorter than 500 characters.
    """
    if len(training_text) < MIN_TRAINING_CHARS:
        raise InsufficientText(
            f"need >= {MIN_TRAINING_CHARS} characters, got {len(training_text)}"
        )
    return LanguageProfile(language, _ranked_ngrams(_ngram_counts(training_text)))


def _distance(query: Sequence[tuple[str, int]], profile: LanguageProfile) -> int:
    total = 0
    for gram, query_rank in query:
        stored = profile.rank(gram)
        if stored is None:
            total += MISSING_PENALTY
        else:
            total += abs(query_rank - stored)
    return total


def detect_language(
    text: str, profiles: Iterable[LanguageProfile]
) -> tuple[str, float]:
    """Classify a text against a set of profiles.

    Returns (language, confidence in [0, 1]).  Total function: texts with
    fewer than three distinct n-grams, or whose best and second-best
    profile distances are separated by less than the margin, come back as
    ("und", 0.0).  Ties break by lexicographic language code, so the
    result never depends on profile order.
    """
    query = _ranked_ngrams(_ngram_counts(text))
    if len(query) < MIN_QUERY_NGRAMS:
        return ("und", 0.0)
    scored = sorted(
        ((_distance(query, profile), profile.language) for profile in profiles),
        key=lambda item: (item[0], item[1]),
    )
    if not scored:
        raise ValueError("profiles must be non-empty")
    d_max = MISSING_PENALTY * len(query)
    d_best, language = scored[0]
    if len(scored) > 1:
        d_second = scored[1][0]
        if (d_second - d_best) / d_max < MARGIN:
            return ("und", 0.0)
    return (language, 1.0 - d_best / d_max)


def write_profile(profile: LanguageProfile, path: str | Path) -> None:
    """Write a profile file: ``LANG <code>`` then ``<rank>\\t<ngram>`` lines."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"LANG {profile.language}\n")
        for gram, rank in profile.ngrams:
            fh.write(f"{rank}\t{gram}\n")


def read_profile(path: str | Path) -> LanguageProfile:
    """Read a profile file written by :func:`write_profile`."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        if not header.startswith("LANG "):
            raise SchemaError(f"{path}: missing LANG header")
        language = header[5:]
        if language not in LANGUAGE_CODES:
            raise SchemaError(f"{path}: unknown language {language!r}")
        ngrams: list[tuple[str, int]] = []
        for lineno, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            rank_text, sep, gram = line.partition("\t")
            if not sep:
                raise SchemaError(f"{path}:{lineno}: expected <rank>\\t<ngram>")
            ngrams.append((gram, int(rank_text)))
    return LanguageProfile(language, tuple(ngrams))


def load_profiles(directory: str | Path) -> tuple[LanguageProfile, ...]:
    """Load every ``*.profile`` file in a directory, sorted by file name."""
    paths = sorted(Path(directory).glob("*.profile"))
    return tuple(read_profile(path) for path in paths)
