"""Inverted concept index: OR retrieval, AND refinement, co-occurrence.

An index is immutable once built.  Every query is answered from postings
lists (concept id -> ascending dataset ordinals); ranking is the number
of matching concepts with a fixed deterministic tie-break, refinement
filters an existing result set without rescoring, and suggestion
aggregation counts co-occurring concepts over the current hits.

Persistence is a single versioned, checksummed binary file; the byte
layout is documented in docs/index_format.md.
"""

from __future__ import annotations

import struct
import zlib
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .errors import CorruptIndex, DuplicateDataset, IoError, VersionMismatch
from .linker import AnnotatedDataset
from .records import DatasetRecord

MAGIC = b"ODCI"
INDEX_VERSION = 1


@dataclass(frozen=True)
class ResultSet:
    """Ranked hits for one query.

    Hits are (ordinal, score) sorted by score desc, then concept-set size
    desc, then ordinal asc; every hit intersects the query concepts and
    carries every active filter.
    """

    hits: tuple[tuple[int, int], ...]
    query_concepts: frozenset[str]
    active_filters: frozenset[str]


class ConceptIndex:
    """Immutable inverted map from concept ids to dataset ordinals."""

    def __init__(self, datasets: Iterable[AnnotatedDataset]) -> None:
        records: list[AnnotatedDataset] = []
        ordinals: dict[tuple[str, str], int] = {}
        postings: dict[str, list[int]] = {}
        for dataset in datasets:
            record = dataset.record
            key = (record.portal_id, record.dataset_id)
            if key in ordinals:
                raise DuplicateDataset(f"duplicate dataset {key}")
            ordinal = len(records)
            ordinals[key] = ordinal
            # Stored entries are summaries: mention spans are not kept.
            records.append(
                AnnotatedDataset(record=record, concepts=frozenset(dataset.concepts))
            )
            for concept in dataset.concepts:
                postings.setdefault(concept, []).append(ordinal)
        self._records = tuple(records)
        self._ordinals = ordinals
        self._postings = {
            concept: tuple(ordinal_list)
            for concept, ordinal_list in postings.items()
        }
        self.version = INDEX_VERSION

    def __len__(self) -> int:
        return len(self._records)

    @property
    def concept_count(self) -> int:
        return len(self._postings)

    @property
    def records(self) -> tuple[AnnotatedDataset, ...]:
        return self._records

    def record(self, ordinal: int) -> AnnotatedDataset:
        return self._records[ordinal]

    def ordinal(self, portal_id: str, dataset_id: str) -> int | None:
        return self._ordinals.get((portal_id, dataset_id))

    def postings(self, concept: str) -> tuple[int, ...]:
        return self._postings.get(concept, ())

    def concepts(self) -> Iterator[str]:
        return iter(sorted(self._postings))

    def search_any(self, query_concepts: Iterable[str]) -> ResultSet:
        """All datasets matching any query concept, ranked by match count.

        Ties rank larger concept sets first, then lower ordinals; an
        empty query yields no hits.
        """
        query = frozenset(query_concepts)
        counts: Counter[int] = Counter()
        for concept in query:
            for ordinal in self._postings.get(concept, ()):
                counts[ordinal] += 1
        hits = sorted(
            counts.items(),
            key=lambda hit: (
                -hit[1],
                -len(self._records[hit[0]].concepts),
                hit[0],
            ),
        )
        return ResultSet(tuple(hits), query, frozenset())

    def refine(self, result: ResultSet, selected: Iterable[str]) -> ResultSet:
        """Keep only hits whose concept sets contain every selected concept.

        Scores and relative order carry over unchanged; the selection is
        added to the active filters.
        """
        selection = frozenset(selected)
        hits = tuple(
            (ordinal, score)
            for ordinal, score in result.hits
            if selection <= self._records[ordinal].concepts
        )
        return ResultSet(
            hits, result.query_concepts, result.active_filters | selection
        )

    def top_cooccurring(
        self, result: ResultSet, k: int
    ) -> list[tuple[str, int]]:
        """The k concepts co-occurring most often within the current hits.

        Query concepts and active filters are excluded; ordering is
        document count desc, then concept id asc.
        """
        excluded = result.query_concepts | result.active_filters
        counts: Counter[str] = Counter()
        for ordinal, _ in result.hits:
            counts.update(self._records[ordinal].concepts - excluded)
        ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
        return ranked[: max(k, 0)]

    def save(self, destination: str | Path) -> None:
        save_index(self, destination)


def build_index(datasets: Iterable[AnnotatedDataset]) -> ConceptIndex:
    """Assign ordinals in input order and build the inverted map."""
    return ConceptIndex(datasets)


def _pack_str(out: bytearray, text: str) -> None:
    raw = text.encode("utf-8")
    out += struct.pack("<I", len(raw))
    out += raw


def save_index(index: ConceptIndex, destination: str | Path) -> None:
    """Write the single-file binary format (see docs/index_format.md)."""
    out = bytearray()
    out += MAGIC
    out += struct.pack("<I", index.version)
    out += struct.pack("<I", len(index))
    out += struct.pack("<I", index.concept_count)
    for dataset in index.records:
        record = dataset.record
        for text in (
            record.portal_id,
            record.dataset_id,
            record.title,
            record.description,
            record.landing_url,
            record.publisher,
            record.language,
        ):
            _pack_str(out, text)
        out += struct.pack("<I", len(record.keywords))
        for keyword in record.keywords:
            _pack_str(out, keyword)
        concepts = sorted(dataset.concepts)
        out += struct.pack("<I", len(concepts))
        for concept in concepts:
            _pack_str(out, concept)
    for concept in index.concepts():
        ordinals = index.postings(concept)
        _pack_str(out, concept)
        out += struct.pack("<I", len(ordinals))
        out += struct.pack(f"<{len(ordinals)}I", *ordinals)
    out += struct.pack("<I", zlib.crc32(bytes(out)))
    try:
        Path(destination).write_bytes(bytes(out))
    except OSError as exc:
        raise IoError(f"cannot write {destination}: {exc}") from exc


class _Reader:
    def __init__(self, data: bytes) -> None:
        self.data = data
        self.pos = 0

    def take(self, size: int) -> bytes:
        end = self.pos + size
        if end > len(self.data):
            raise CorruptIndex("unexpected end of file")
        chunk = self.data[self.pos : end]
        self.pos = end
        return chunk

    def u32(self) -> int:
        return struct.unpack("<I", self.take(4))[0]

    def text(self) -> str:
        size = self.u32()
        try:
            return self.take(size).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorruptIndex(f"bad UTF-8 at offset {self.pos}") from exc


def load_index(source: str | Path) -> ConceptIndex:
    """Read an index file; structurally identical to what was saved.

    Raises VersionMismatch for a foreign format version, CorruptIndex for
    checksum or structural damage, IoError when the file cannot be read.
    """
    try:
        data = Path(source).read_bytes()
    except OSError as exc:
        raise IoError(f"cannot read {source}: {exc}") from exc
    reader = _Reader(data)
    if reader.take(4) != MAGIC:
        raise CorruptIndex("bad magic")
    version = reader.u32()
    if version != INDEX_VERSION:
        raise VersionMismatch(f"index version {version}, expected {INDEX_VERSION}")
    if len(data) < 12:
        raise CorruptIndex("truncated file")
    stored = struct.unpack("<I", data[-4:])[0]
    if zlib.crc32(data[:-4]) != stored:
        raise CorruptIndex("checksum mismatch")

    record_count = reader.u32()
    concept_count = reader.u32()
    datasets: list[AnnotatedDataset] = []
    for _ in range(record_count):
        portal_id = reader.text()
        dataset_id = reader.text()
        title = reader.text()
        description = reader.text()
        landing_url = reader.text()
        publisher = reader.text()
        language = reader.text()
        keywords = tuple(reader.text() for _ in range(reader.u32()))
        concepts = frozenset(reader.text() for _ in range(reader.u32()))
        datasets.append(
            AnnotatedDataset(
                record=DatasetRecord(
                    portal_id=portal_id,
                    dataset_id=dataset_id,
                    title=title,
                    description=description,
                    keywords=keywords,
                    landing_url=landing_url,
                    language=language,
                    publisher=publisher,
                ),
                concepts=concepts,
            )
        )
    index = ConceptIndex(datasets)
    for _ in range(concept_count):
        concept = reader.text()
        count = reader.u32()
        ordinals = struct.unpack(f"<{count}I", reader.take(4 * count))
        if index.postings(concept) != ordinals:
            raise CorruptIndex(f"postings for {concept} disagree with records")
    if reader.pos != len(data) - 4:
        raise CorruptIndex("trailing bytes before checksum")
    return index
