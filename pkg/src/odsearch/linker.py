"""Entity/concept linking over a local multilingual lexicon and graph.

Text is tokenized, matched greedily against per-language lexicon
partitions (longest phrase first), and each matched mention is resolved
to one language-independent concept id by pruning weakly connected
candidate senses in a shared candidate graph.  Mentions whose final two
senses stay both unconnected and near-tied remain ambiguous; dataset
annotation force-resolves them, query annotation hands them to the
dialogue layer for clarification.

The same contract can be served by a remote linker; see
:class:`ExternalLinkerClient`.
"""

from __future__ import annotations

import json
import re
import unicodedata
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Mapping, Protocol, Sequence

import requests

from .errors import LinkerUnavailable, SchemaError
from .langid import LanguageProfile, detect_language
from .records import LANGUAGE_CODES, DatasetRecord, concat_text

CONCEPT_ID_RE = re.compile(r"c:[0-9]{8}\Z")
MAX_PHRASE_LEN = 5

#: Blend of sense prior vs graph connectivity in the pruning score.
PRIOR_WEIGHT = 0.3
DEGREE_WEIGHT = 0.7
#: A final sense pair with score ratio at or above this stays ambiguous.
AMBIGUITY_RATIO = 0.8

_SPLIT_RE = re.compile(r"[\W_]+", re.UNICODE)


def is_concept_id(value: str) -> bool:
    return bool(CONCEPT_ID_RE.match(value))


@dataclass(frozen=True)
class Mention:
    """A matched span of tokens with its candidate senses.

    ``token_span`` is half-open over the normalized token sequence;
    candidates are (concept id, prior) pairs in lexicon order (descending
    prior, ties by concept id).
    """

    surface: str
    token_span: tuple[int, int]
    candidates: tuple[tuple[str, float], ...]


@dataclass(frozen=True)
class Annotation:
    """Disambiguation result for one text.

    ``concepts`` is exactly the set of chosen ids; ``ambiguous`` mentions
    contribute no concept and carry the sense pair needing clarification.
    """

    concepts: frozenset[str]
    mentions: tuple[tuple[Mention, str], ...]
    ambiguous: tuple[Mention, ...]


@dataclass(frozen=True)
class AnnotatedDataset:
    """A dataset record plus its disambiguated concept set."""

    record: DatasetRecord
    concepts: frozenset[str]
    mentions: tuple[tuple[Mention, str], ...] = ()


class Lexicon:
    """Surface-form inventory: (surface, language) -> candidate senses."""

    def __init__(
        self,
        entries: Mapping[tuple[str, str], Sequence[tuple[str, float]]],
    ) -> None:
        partitions: dict[str, dict[str, tuple[tuple[str, float], ...]]] = {}
        max_len = 1
        for (surface, language), candidates in entries.items():
            if language not in LANGUAGE_CODES or language == "und":
                raise SchemaError(f"bad lexicon language {language!r}")
            if not surface:
                raise SchemaError("empty lexicon surface form")
            total = 0.0
            for concept, prior in candidates:
                if not is_concept_id(concept):
                    raise SchemaError(f"bad concept id {concept!r}")
                if not 0.0 < prior <= 1.0:
                    raise SchemaError(f"prior out of range for {surface!r}")
                total += prior
            if total > 1.0 + 1e-9:
                raise SchemaError(f"priors for {surface!r}/{language} sum to {total}")
            ordered = tuple(
                sorted(candidates, key=lambda cand: (-cand[1], cand[0]))
            )
            partitions.setdefault(language, {})[surface] = ordered
            max_len = max(max_len, surface.count(" ") + 1)
        if max_len > MAX_PHRASE_LEN:
            raise SchemaError(f"surface forms longer than {MAX_PHRASE_LEN} tokens")
        self._partitions = partitions
        self.max_phrase_len = max_len

    @property
    def languages(self) -> tuple[str, ...]:
        return tuple(sorted(self._partitions))

    def surfaces(self, language: str) -> tuple[str, ...]:
        """All surface forms of one partition, sorted."""
        return tuple(sorted(self._partitions.get(language, {})))

    def lookup(
        self, surface: str, language: str
    ) -> tuple[tuple[str, float], ...] | None:
        """Candidates for a normalized surface, or None.

        For "und" every partition is consulted; merged priors are divided
        by the number of partitions containing the surface, so the sum
        stays within one.
        """
        if language != "und":
            return self._partitions.get(language, {}).get(surface)
        hits = [
            partition[surface]
            for partition in self._partitions.values()
            if surface in partition
        ]
        if not hits:
            return None
        merged: dict[str, float] = {}
        for candidates in hits:
            for concept, prior in candidates:
                merged[concept] = merged.get(concept, 0.0) + prior / len(hits)
        return tuple(sorted(merged.items(), key=lambda cand: (-cand[1], cand[0])))

    @classmethod
    def from_tsv(cls, path: str | Path) -> "Lexicon":
        """Load ``surface\\tlang\\tconcept\\tprior`` lines (UTF-8)."""
        entries: dict[tuple[str, str], list[tuple[str, float]]] = {}
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line:
                    continue
                parts = line.split("\t")
                if len(parts) != 4:
                    raise SchemaError(f"{path}:{lineno}: expected 4 columns")
                surface, language, concept, prior_text = parts
                surface = " ".join(normalize_tokens(surface))
                try:
                    prior = float(prior_text)
                except ValueError as exc:
                    raise SchemaError(f"{path}:{lineno}: bad prior") from exc
                entries.setdefault((surface, language), []).append((concept, prior))
        return cls(entries)


class ConceptGraph:
    """Undirected weighted relatedness edges between concepts."""

    def __init__(self, edges: Iterable[tuple[str, str, float]] = ()) -> None:
        weights: dict[tuple[str, str], float] = {}
        for a, b, weight in edges:
            if a == b:
                raise SchemaError(f"self-loop on {a!r}")
            if not 0.0 < weight <= 1.0:
                raise SchemaError(f"edge weight out of range: {weight}")
            key = (a, b) if a < b else (b, a)
            if key in weights:
                raise SchemaError(f"duplicate edge {key}")
            weights[key] = weight
        self._weights = weights

    def __len__(self) -> int:
        return len(self._weights)

    def weight(self, a: str, b: str) -> float:
        if a == b:
            return 0.0
        key = (a, b) if a < b else (b, a)
        return self._weights.get(key, 0.0)

    @classmethod
    def from_tsv(cls, path: str | Path) -> "ConceptGraph":
        """Load ``concept\\tconcept\\tweight`` lines, smaller id first."""
        edges: list[tuple[str, str, float]] = []
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line:
                    continue
                parts = line.split("\t")
                if len(parts) != 3:
                    raise SchemaError(f"{path}:{lineno}: expected 3 columns")
                a, b, weight_text = parts
                if not (is_concept_id(a) and is_concept_id(b)):
                    raise SchemaError(f"{path}:{lineno}: bad concept id")
                if a >= b:
                    raise SchemaError(f"{path}:{lineno}: ids must be ascending")
                edges.append((a, b, float(weight_text)))
        return cls(edges)


class ConceptLabels:
    """Display labels per (concept, language), with sensible fallbacks."""

    def __init__(self, labels: Mapping[tuple[str, str], str]) -> None:
        self._labels = dict(labels)
        self._by_concept: dict[str, list[tuple[str, str]]] = {}
        for (concept, language), label in sorted(self._labels.items()):
            self._by_concept.setdefault(concept, []).append((language, label))

    def label(self, concept: str, language: str = "en") -> str:
        """Label in the requested language, else English, else any, else id."""
        for lang in (language, "en"):
            hit = self._labels.get((concept, lang))
            if hit:
                return hit
        known = self._by_concept.get(concept)
        if known:
            return known[0][1]
        return concept

    @classmethod
    def from_tsv(cls, path: str | Path) -> "ConceptLabels":
        """Load ``concept\\tlang\\tlabel`` lines."""
        labels: dict[tuple[str, str], str] = {}
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line:
                    continue
                parts = line.split("\t")
                if len(parts) != 3:
                    raise SchemaError(f"{path}:{lineno}: expected 3 columns")
                concept, language, label = parts
                labels[(concept, language)] = label
        return cls(labels)


def normalize_tokens(text: str, language: str = "und") -> list[str]:
    """NFC-normalize, lowercase, and split on non-letter/digit runs.

    Diacritics are preserved; empty tokens are dropped.  The language tag
    is accepted for interface parity but tokenization is language-neutral.
    """
    del language
    normalized = unicodedata.normalize("NFC", text).lower()
    return [token for token in _SPLIT_RE.split(normalized) if token]


def find_mentions(
    tokens: Sequence[str], language: str, lexicon: Lexicon
) -> list[Mention]:
    """Greedy longest-match, left to right, against one lexicon partition.

    At each position phrase lengths max_phrase_len..1 are tried; matched
    spans never overlap; unmatched tokens are skipped.
    """
    mentions: list[Mention] = []
    n = len(tokens)
    position = 0
    while position < n:
        matched = False
        for length in range(min(lexicon.max_phrase_len, n - position), 0, -1):
            phrase = " ".join(tokens[position : position + length])
            candidates = lexicon.lookup(phrase, language)
            if candidates:
                mentions.append(
                    Mention(phrase, (position, position + length), candidates)
                )
                position += length
                matched = True
                break
        if not matched:
            position += 1
    return mentions


def _canonical_order(mentions: Sequence[Mention]) -> list[Mention]:
    """Span-then-surface order, independent of input permutation."""
    return sorted(
        mentions,
        key=lambda m: (m.token_span, m.surface, m.candidates),
    )


def disambiguate(mentions: Sequence[Mention], graph: ConceptGraph) -> Annotation:
    """Resolve every mention to one sense by iterative candidate pruning.

    A candidate graph connects senses of *different* mentions through
    concept-graph edges.  Each sense scores 0.3 * prior + 0.7 * its
    normalized weighted degree; while any mention still has several
    candidates, the lowest-scoring candidate among the widest mentions is
    removed (ties drop the lexicographically greatest id first), degrees
    recomputed after every removal.  A mention whose last two senses were
    near-tied (score ratio >= 0.8) and never graph-connected is returned
    as ambiguous with both senses restored.
    """
    ordered = _canonical_order(mentions)
    for mention in ordered:
        if not mention.candidates:
            raise ValueError(f"mention {mention.surface!r} has no candidates")

    # Node = (mention position, concept id); prior kept alongside.
    alive: list[dict[str, float]] = [dict(m.candidates) for m in ordered]
    ever_connected: set[tuple[int, str]] = set()
    final_step: dict[int, tuple[str, str, float, float]] = {}

    def degrees() -> dict[tuple[int, str], float]:
        out: dict[tuple[int, str], float] = {}
        nodes = [
            (idx, concept) for idx, cands in enumerate(alive) for concept in cands
        ]
        for idx, concept in nodes:
            total = 0.0
            for other_idx, other_concept in nodes:
                if other_idx != idx:
                    total += graph.weight(concept, other_concept)
            out[(idx, concept)] = total
        return out

    while True:
        widths = [len(cands) for cands in alive]
        widest = max(widths, default=0)
        if widest <= 1:
            break
        degree = degrees()
        max_degree = max(degree.values(), default=0.0)
        for node, value in degree.items():
            if value > 0.0:
                ever_connected.add(node)

        def score(idx: int, concept: str) -> float:
            normalized = degree[(idx, concept)] / max_degree if max_degree else 0.0
            return PRIOR_WEIGHT * alive[idx][concept] + DEGREE_WEIGHT * normalized

        pool = [
            (idx, concept)
            for idx, cands in enumerate(alive)
            if len(cands) == widest
            for concept in cands
        ]
        lowest = min(score(*node) for node in pool)
        # Ties: greatest concept id goes first, then the latest mention.
        victim_idx, victim = max(
            (node for node in pool if score(*node) == lowest),
            key=lambda node: (node[1], node[0]),
        )
        if len(alive[victim_idx]) == 2:
            survivor = next(
                concept for concept in alive[victim_idx] if concept != victim
            )
            final_step[victim_idx] = (
                victim,
                survivor,
                score(victim_idx, victim),
                score(victim_idx, survivor),
            )
        del alive[victim_idx][victim]

    chosen: list[tuple[Mention, str]] = []
    ambiguous: list[Mention] = []
    for idx, mention in enumerate(ordered):
        survivor = next(iter(alive[idx]))
        step = final_step.get(idx)
        if step is not None:
            removed, kept, removed_score, kept_score = step
            near_tie = removed_score / kept_score >= AMBIGUITY_RATIO
            unconnected = (idx, removed) not in ever_connected and (
                idx,
                kept,
            ) not in ever_connected
            if near_tie and unconnected:
                pair = {removed, kept}
                restored = tuple(
                    cand for cand in mention.candidates if cand[0] in pair
                )
                ambiguous.append(replace(mention, candidates=restored))
                continue
        chosen.append((mention, survivor))

    return Annotation(
        concepts=frozenset(concept for _, concept in chosen),
        mentions=tuple(chosen),
        ambiguous=tuple(ambiguous),
    )


def force_resolve(mention: Mention) -> str:
    """Pick the highest-prior candidate; ties take the smallest id."""
    return min(mention.candidates, key=lambda cand: (-cand[1], cand[0]))[0]


class LinkerBackend(Protocol):
    """Anything that can turn text into an :class:`Annotation`."""

    def link(self, text: str, language: str) -> Annotation: ...


class LocalLinker:
    """Default backend: bundled lexicon, concept graph, and profiles."""

    def __init__(
        self,
        lexicon: Lexicon,
        graph: ConceptGraph,
        profiles: Sequence[LanguageProfile] = (),
    ) -> None:
        self.lexicon = lexicon
        self.graph = graph
        self.profiles = tuple(profiles)

    def detect(self, text: str) -> tuple[str, float]:
        if not self.profiles:
            return ("und", 0.0)
        return detect_language(text, self.profiles)

    def link(self, text: str, language: str = "und") -> Annotation:
        if language == "und" and self.profiles:
            language = self.detect(text)[0]
        tokens = normalize_tokens(text, language)
        mentions = find_mentions(tokens, language, self.lexicon)
        if not mentions and language != "und":
            # Short queries mislead the detector; the merged partitions
            # are the documented fallback for undetermined text.
            mentions = find_mentions(tokens, "und", self.lexicon)
        return disambiguate(mentions, self.graph)

    def annotate_dataset(self, record: DatasetRecord) -> AnnotatedDataset:
        return annotate_dataset(record, self.lexicon, self.graph, self.profiles)


def annotate_dataset(
    record: DatasetRecord,
    lexicon: Lexicon,
    graph: ConceptGraph,
    profiles: Sequence[LanguageProfile] = (),
) -> AnnotatedDataset:
    """Annotate one dataset record with its concept set.

    Language is detected from the concatenated text unless the record
    already carries one.  Ambiguous mentions are force-resolved to their
    highest-prior sense (ties: smallest id), so batch annotation is
    deterministic and every dataset gets a concept set.
    """
    text = concat_text(record)
    language = record.language
    if language == "und" and profiles:
        language = detect_language(text, profiles)[0]
    tokens = normalize_tokens(text, language)
    mentions = find_mentions(tokens, language, lexicon)
    if not mentions and language != "und":
        mentions = find_mentions(tokens, "und", lexicon)
    annotation = disambiguate(mentions, graph)
    resolved = list(annotation.mentions)
    for mention in annotation.ambiguous:
        resolved.append((mention, force_resolve(mention)))
    resolved.sort(key=lambda pair: pair[0].token_span)
    return AnnotatedDataset(
        record=replace(record, language=language),
        concepts=frozenset(concept for _, concept in resolved),
        mentions=tuple(resolved),
    )


ANNOTATED_FIELDS = (
    "portal_id",
    "dataset_id",
    "title",
    "description",
    "keywords",
    "landing_url",
    "language",
    "publisher",
    "concepts",
)


def write_annotated(dataset: AnnotatedDataset) -> str:
    """Serialize record plus sorted concept ids as one NDJSON line."""
    record = dataset.record
    doc = {
        "portal_id": record.portal_id,
        "dataset_id": record.dataset_id,
        "title": record.title,
        "description": record.description,
        "keywords": list(record.keywords),
        "landing_url": record.landing_url,
        "language": record.language,
        "publisher": record.publisher,
        "concepts": sorted(dataset.concepts),
    }
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":"))


def parse_annotated(line: str) -> AnnotatedDataset:
    """Parse a line written by :func:`write_annotated` (mentions omitted)."""
    from .errors import ParseError
    from .records import parse_canonical

    try:
        doc = json.loads(line)
    except ValueError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("line is not a JSON object")
    if "concepts" not in doc:
        raise SchemaError("missing key 'concepts'")
    concepts = doc.pop("concepts")
    if not isinstance(concepts, list) or any(
        not (isinstance(c, str) and is_concept_id(c)) for c in concepts
    ):
        raise SchemaError("key 'concepts' must be a list of concept ids")
    record = parse_canonical(json.dumps(doc, ensure_ascii=False))
    return AnnotatedDataset(record=record, concepts=frozenset(concepts))


def read_annotated(path: str | Path):
    """Yield annotated datasets from an NDJSON file."""
    from .errors import ParseError

    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield parse_annotated(line)
            except (ParseError, SchemaError) as exc:
                raise type(exc)(f"{path}:{lineno}: {exc}") from exc


def write_annotated_corpus(
    datasets: Iterable[AnnotatedDataset], path: str | Path
) -> int:
    """Write annotated datasets to an NDJSON file; returns the count."""
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for dataset in datasets:
            fh.write(write_annotated(dataset))
            fh.write("\n")
            count += 1
    return count


class ExternalLinkerClient:
    """Client for a remote linker service speaking the JSON contract.

    Request: ``POST {"text": ..., "lang": ...}``; response:
    ``{"annotations": [{"start": int, "end": int, "concept": str,
    "score": number}]}`` with start/end as token indices over
    :func:`normalize_tokens` output.  Network failures and timeouts
    surface as LinkerUnavailable.
    """

    def __init__(self, url: str, timeout: float = 5.0) -> None:
        self.url = url
        self.timeout = timeout

    def link(self, text: str, language: str = "und") -> Annotation:
        try:
            response = requests.post(
                self.url,
                json={"text": text, "lang": language},
                timeout=self.timeout,
            )
            response.raise_for_status()
            payload = response.json()
        except (requests.RequestException, ValueError) as exc:
            raise LinkerUnavailable(f"linker at {self.url}: {exc}") from exc
        annotations = payload.get("annotations")
        if not isinstance(annotations, list):
            raise LinkerUnavailable(f"linker at {self.url}: malformed response")
        tokens = normalize_tokens(text, language)
        mentions: list[tuple[Mention, str]] = []
        for entry in annotations:
            try:
                start = int(entry["start"])
                end = int(entry["end"])
                concept = str(entry["concept"])
                score = float(entry.get("score", 1.0))
            except (KeyError, TypeError, ValueError) as exc:
                raise LinkerUnavailable(
                    f"linker at {self.url}: malformed annotation"
                ) from exc
            surface = " ".join(tokens[start:end])
            mention = Mention(surface, (start, end), ((concept, score),))
            mentions.append((mention, concept))
        mentions.sort(key=lambda pair: pair[0].token_span)
        return Annotation(
            concepts=frozenset(concept for _, concept in mentions),
            mentions=tuple(mentions),
            ambiguous=(),
        )
