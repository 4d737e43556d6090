import random
import struct
import zlib

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from odsearch.errors import CorruptIndex, DuplicateDataset, IoError, VersionMismatch
from odsearch.index import ResultSet, build_index, load_index, save_index
from odsearch.linker import AnnotatedDataset
from odsearch.records import DatasetRecord
from oracles import scan_refine, scan_search_any, scan_top_cooccurring

C_DOG = "c:00000001"
C_VIENNA = "c:00000002"
C_TREE = "c:00000003"


def dataset(portal, dataset_id, *concepts, title=None):
    return AnnotatedDataset(
        record=DatasetRecord(portal, dataset_id, title or dataset_id),
        concepts=frozenset(concepts),
    )


@pytest.fixture()
def dog_vienna_index():
    return build_index(
        [
            dataset("p", "d1", C_DOG, C_VIENNA),
            dataset("p", "d2", C_DOG),
            dataset("p", "d3", C_VIENNA),
        ]
    )


def random_corpus(rng, max_datasets=500, max_concepts=64):
    concepts = [f"c:{i:08d}" for i in range(1, rng.randint(2, max_concepts) + 1)]
    count = rng.randint(0, max_datasets)
    datasets = []
    for i in range(count):
        size = rng.randint(0, min(8, len(concepts)))
        datasets.append(
            dataset("p", f"d{i}", *rng.sample(concepts, k=size))
        )
    return concepts, datasets


class TestBuildIndex:
    def test_postings_are_exact_inverse(self, dog_vienna_index):
        index = dog_vienna_index
        assert index.postings(C_DOG) == (0, 1)
        assert index.postings(C_VIENNA) == (0, 2)
        for concept in index.concepts():
            for ordinal in index.postings(concept):
                assert concept in index.record(ordinal).concepts
        for ordinal in range(len(index)):
            for concept in index.record(ordinal).concepts:
                assert ordinal in index.postings(concept)

    def test_ordinals_follow_input_order(self, dog_vienna_index):
        assert dog_vienna_index.ordinal("p", "d1") == 0
        assert dog_vienna_index.ordinal("p", "d3") == 2
        assert dog_vienna_index.ordinal("p", "missing") is None

    def test_empty_stream(self):
        index = build_index([])
        assert len(index) == 0
        assert index.search_any({C_DOG}).hits == ()

    def test_duplicate_dataset_rejected(self):
        with pytest.raises(DuplicateDataset):
            build_index([dataset("p", "same", C_DOG), dataset("p", "same")])

    def test_same_id_in_different_portals_is_fine(self):
        index = build_index([dataset("a", "x", C_DOG), dataset("b", "x", C_DOG)])
        assert len(index) == 2


class TestSearchAny:
    def test_paper_ranking_example(self, dog_vienna_index):
        result = dog_vienna_index.search_any({C_DOG, C_VIENNA})
        assert result.hits[0] == (0, 2)
        assert set(result.hits[1:]) == {(1, 1), (2, 1)}
        # deterministic tie-break: equal score and set size, ordinal asc
        assert result.hits == ((0, 2), (1, 1), (2, 1))

    def test_empty_query(self, dog_vienna_index):
        result = dog_vienna_index.search_any(set())
        assert result.hits == ()
        assert result.query_concepts == frozenset()

    def test_unknown_concept(self, dog_vienna_index):
        assert dog_vienna_index.search_any({"c:99999999"}).hits == ()

    def test_larger_concept_sets_win_ties(self):
        index = build_index(
            [
                dataset("p", "small", C_DOG),
                dataset("p", "big", C_DOG, C_TREE),
            ]
        )
        result = index.search_any({C_DOG})
        assert [ordinal for ordinal, _ in result.hits] == [1, 0]

    def test_matches_linear_scan_oracle(self):
        rng = random.Random(1234)
        for _ in range(100):
            concepts, datasets = random_corpus(rng, max_datasets=200, max_concepts=50)
            index = build_index(datasets)
            sets = [d.concepts for d in datasets]
            for _ in range(3):
                query = set(rng.sample(concepts, k=rng.randint(0, min(6, len(concepts)))))
                got = index.search_any(query)
                assert list(got.hits) == scan_search_any(sets, query)


class TestRefine:
    def test_paper_and_semantics(self, dog_vienna_index):
        result = dog_vienna_index.search_any({C_DOG, C_VIENNA})
        refined = dog_vienna_index.refine(result, {C_VIENNA})
        assert [ordinal for ordinal, _ in refined.hits] == [0, 2]
        assert refined.active_filters == frozenset({C_VIENNA})

    def test_scores_and_order_preserved(self, dog_vienna_index):
        result = dog_vienna_index.search_any({C_DOG, C_VIENNA})
        refined = dog_vienna_index.refine(result, {C_VIENNA})
        kept = {ordinal: score for ordinal, score in result.hits}
        assert all(score == kept[ordinal] for ordinal, score in refined.hits)

    def test_refine_to_nothing(self, dog_vienna_index):
        result = dog_vienna_index.search_any({C_DOG})
        assert dog_vienna_index.refine(result, {"c:77777777"}).hits == ()

    def test_empty_selection_is_identity(self, dog_vienna_index):
        result = dog_vienna_index.search_any({C_DOG, C_VIENNA})
        refined = dog_vienna_index.refine(result, set())
        assert refined == result

    def test_composition_law(self):
        rng = random.Random(99)
        for _ in range(50):
            concepts, datasets = random_corpus(rng, max_datasets=80, max_concepts=20)
            index = build_index(datasets)
            query = set(rng.sample(concepts, k=min(4, len(concepts))))
            a = {rng.choice(concepts)}
            b = {rng.choice(concepts)}
            result = index.search_any(query)
            stepwise = index.refine(index.refine(result, a), b)
            joint = index.refine(result, a | b)
            assert stepwise == joint
            assert len(stepwise.hits) <= len(result.hits)

    def test_matches_linear_scan_oracle(self):
        rng = random.Random(4321)
        for _ in range(100):
            concepts, datasets = random_corpus(rng, max_datasets=150, max_concepts=40)
            index = build_index(datasets)
            sets = [d.concepts for d in datasets]
            query = set(rng.sample(concepts, k=min(5, len(concepts))))
            selected = set(rng.sample(concepts, k=min(2, len(concepts))))
            result = index.search_any(query)
            refined = index.refine(result, selected)
            assert list(refined.hits) == scan_refine(sets, result.hits, selected)


class TestTopCooccurring:
    def test_fixture_counts(self, dog_vienna_index):
        result = dog_vienna_index.search_any({C_DOG})
        assert dog_vienna_index.top_cooccurring(result, 5) == [(C_VIENNA, 1)]

    def test_k_zero(self, dog_vienna_index):
        result = dog_vienna_index.search_any({C_DOG})
        assert dog_vienna_index.top_cooccurring(result, 0) == []

    def test_excludes_query_and_filters(self, dog_vienna_index):
        result = dog_vienna_index.search_any({C_DOG, C_VIENNA})
        suggestions = dog_vienna_index.top_cooccurring(result, 10)
        assert suggestions == []

    def test_matches_exhaustive_counts(self):
        rng = random.Random(777)
        for _ in range(100):
            concepts, datasets = random_corpus(rng, max_datasets=150, max_concepts=40)
            index = build_index(datasets)
            sets = [d.concepts for d in datasets]
            query = set(rng.sample(concepts, k=min(4, len(concepts))))
            result = index.search_any(query)
            k = rng.randint(0, 10)
            got = index.top_cooccurring(result, k)
            want = scan_top_cooccurring(sets, result.hits, query, k)
            assert got == want
            assert all(count >= 1 for _, count in got)


@settings(max_examples=30)
@given(st.integers(0, 2**32 - 1))
def test_monotonicity_adding_concept_never_lowers_rank(seed):
    rng = random.Random(seed)
    concepts, datasets = random_corpus(rng, max_datasets=40, max_concepts=12)
    if not datasets:
        return
    target = rng.randrange(len(datasets))
    extra = rng.choice(concepts)
    query = set(rng.sample(concepts, k=min(3, len(concepts)))) | {extra}
    before = build_index(datasets)
    boosted = list(datasets)
    boosted[target] = AnnotatedDataset(
        record=datasets[target].record,
        concepts=datasets[target].concepts | {extra},
    )
    after = build_index(boosted)

    def rank(index, ordinal):
        hits = [o for o, _ in index.search_any(query).hits]
        return hits.index(ordinal) if ordinal in hits else len(hits)

    assert rank(after, target) <= rank(before, target)


class TestPersistence:
    def test_round_trip_preserves_all_queries(self, dog_vienna_index, tmp_path):
        path = tmp_path / "fixture.odci"
        save_index(dog_vienna_index, path)
        loaded = load_index(path)
        assert len(loaded) == len(dog_vienna_index)
        universe = list(dog_vienna_index.concepts())
        for size in range(len(universe) + 1):
            for query in [universe[:size]]:
                assert (
                    loaded.search_any(query).hits
                    == dog_vienna_index.search_any(query).hits
                )
        for ordinal in range(len(loaded)):
            assert loaded.record(ordinal) == dog_vienna_index.record(ordinal)

    def test_round_trip_on_mini_corpus(self, mini_index, tmp_path):
        path = tmp_path / "mini.odci"
        save_index(mini_index, path)
        loaded = load_index(path)
        assert [loaded.record(i) for i in range(len(loaded))] == [
            mini_index.record(i) for i in range(len(mini_index))
        ]
        assert list(loaded.concepts()) == list(mini_index.concepts())

    def test_truncated_file(self, dog_vienna_index, tmp_path):
        path = tmp_path / "x.odci"
        save_index(dog_vienna_index, path)
        data = path.read_bytes()
        path.write_bytes(data[: len(data) // 2])
        with pytest.raises(CorruptIndex):
            load_index(path)

    def test_flipped_byte_fails_checksum(self, dog_vienna_index, tmp_path):
        path = tmp_path / "x.odci"
        save_index(dog_vienna_index, path)
        data = bytearray(path.read_bytes())
        data[20] ^= 0xFF
        path.write_bytes(bytes(data))
        with pytest.raises(CorruptIndex):
            load_index(path)

    def test_version_zero_rejected(self, dog_vienna_index, tmp_path):
        path = tmp_path / "x.odci"
        save_index(dog_vienna_index, path)
        data = bytearray(path.read_bytes())
        data[4:8] = struct.pack("<I", 0)
        data[-4:] = struct.pack("<I", zlib.crc32(bytes(data[:-4])))
        path.write_bytes(bytes(data))
        with pytest.raises(VersionMismatch):
            load_index(path)

    def test_bad_magic(self, tmp_path):
        path = tmp_path / "x.odci"
        path.write_bytes(b"NOPE" + b"\x00" * 16)
        with pytest.raises(CorruptIndex):
            load_index(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(IoError):
            load_index(tmp_path / "absent.odci")

    def test_builds_are_byte_identical(self, mini_annotated, tmp_path):
        a, b = tmp_path / "a.odci", tmp_path / "b.odci"
        save_index(build_index(mini_annotated), a)
        save_index(build_index(mini_annotated), b)
        assert a.read_bytes() == b.read_bytes()
