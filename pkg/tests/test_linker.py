import json
import random
import threading
from dataclasses import replace
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import pytest

from odsearch.errors import LinkerUnavailable, ParseError, SchemaError
from odsearch.linker import (
    AnnotatedDataset,
    ConceptGraph,
    ConceptLabels,
    ExternalLinkerClient,
    Lexicon,
    Mention,
    annotate_dataset,
    disambiguate,
    find_mentions,
    force_resolve,
    normalize_tokens,
    parse_annotated,
    read_annotated,
    write_annotated,
    write_annotated_corpus,
)
from odsearch.records import DatasetRecord
from oracles import greedy_segments, simulate_pruning

C1, C2, C3 = "c:00000001", "c:00000002", "c:00000003"
C_FRUIT, C_COMPANY, C_ORCH = "c:00000011", "c:00000010", "c:00000280"


class TestNormalizeTokens:
    def test_punctuation_split(self):
        assert normalize_tokens("Hot-Dog in Wien!") == ["hot", "dog", "in", "wien"]

    def test_empty(self):
        assert normalize_tokens("") == []

    def test_diacritics_preserved(self):
        assert normalize_tokens("Árvores — São Paulo") == ["árvores", "são", "paulo"]

    def test_digits_kept_underscore_split(self):
        assert normalize_tokens("a_b 42") == ["a", "b", "42"]


def tiny_lexicon() -> Lexicon:
    return Lexicon(
        {
            ("hot dog", "en"): [(C3, 1.0)],
            ("dog", "en"): [(C2, 1.0)],
            ("vienna", "en"): [(C1, 1.0)],
        }
    )


class TestFindMentions:
    def test_longest_match_wins(self):
        mentions = find_mentions(["hot", "dog", "in", "vienna"], "en", tiny_lexicon())
        assert [(m.surface, m.token_span) for m in mentions] == [
            ("hot dog", (0, 2)),
            ("vienna", (3, 4)),
        ]
        assert mentions[0].candidates == ((C3, 1.0),)

    def test_empty_tokens(self):
        assert find_mentions([], "en", tiny_lexicon()) == []

    def test_single_exact_match(self):
        mentions = find_mentions(["dog"], "en", tiny_lexicon())
        assert [(m.surface, m.candidates) for m in mentions] == [("dog", ((C2, 1.0),))]

    def test_spans_ascending_and_non_overlapping(self, lexicon):
        tokens = normalize_tokens(
            "hunde in wien spielen im park neben der schule am see"
        )
        mentions = find_mentions(tokens, "de", lexicon)
        previous_end = 0
        for mention in mentions:
            start, end = mention.token_span
            assert start >= previous_end
            assert end > start
            previous_end = end

    def test_matches_reference_segmentation_on_random_inputs(self):
        rng = random.Random(42)
        vocabulary = ["a", "b", "c", "d", "e"]
        for _ in range(200):
            phrases = set()
            for _ in range(rng.randint(1, 8)):
                length = rng.randint(1, 3)
                phrases.add(" ".join(rng.choices(vocabulary, k=length)))
            entries = {
                (phrase, "en"): [(C1, 1.0)] for phrase in phrases
            }
            lexicon = Lexicon(entries)
            tokens = rng.choices(vocabulary, k=rng.randint(0, 12))
            got = [
                (m.token_span[0], m.token_span[1], m.surface)
                for m in find_mentions(tokens, "en", lexicon)
            ]
            want = greedy_segments(tokens, phrases, lexicon.max_phrase_len)
            assert got == want

    def test_und_language_merges_partitions(self):
        lexicon = Lexicon(
            {
                ("x", "de"): [(C1, 1.0)],
                ("x", "en"): [(C2, 1.0)],
                ("y", "en"): [(C3, 0.8)],
            }
        )
        mentions = find_mentions(["x", "y"], "und", lexicon)
        assert mentions[0].candidates == ((C1, 0.5), (C2, 0.5))
        # "y" exists in one partition only: prior unchanged
        assert mentions[1].candidates == ((C3, 0.8),)


def edge_graph(*edges):
    return ConceptGraph(edges)


class TestDisambiguate:
    def test_graph_pulls_related_sense(self):
        mentions = [
            Mention("apple", (0, 1), ((C_COMPANY, 0.5), (C_FRUIT, 0.5))),
            Mention("orchard", (1, 2), ((C_ORCH, 1.0),)),
        ]
        annotation = disambiguate(
            mentions, edge_graph((C_FRUIT, C_ORCH, 1.0))
        )
        chosen = dict(
            (m.surface, concept) for m, concept in annotation.mentions
        )
        assert chosen == {"apple": C_FRUIT, "orchard": C_ORCH}
        assert annotation.ambiguous == ()
        assert annotation.concepts == frozenset({C_FRUIT, C_ORCH})

    def test_single_candidate_is_chosen(self):
        mention = Mention("dog", (0, 1), ((C2, 1.0),))
        annotation = disambiguate([mention], edge_graph())
        assert annotation.mentions == ((mention, C2),)
        assert annotation.ambiguous == ()

    def test_equal_priors_no_edges_stay_ambiguous(self):
        mention = Mention("apple", (0, 1), ((C_COMPANY, 0.5), (C_FRUIT, 0.5)))
        annotation = disambiguate([mention], edge_graph())
        assert annotation.concepts == frozenset()
        assert annotation.mentions == ()
        assert [m.surface for m in annotation.ambiguous] == ["apple"]
        assert annotation.ambiguous[0].candidates == mention.candidates

    def test_clear_prior_gap_resolves_without_edges(self):
        mention = Mention("m", (0, 1), ((C1, 0.9), (C2, 0.1)))
        annotation = disambiguate([mention], edge_graph())
        assert annotation.mentions == ((mention, C1),)
        assert annotation.ambiguous == ()

    def test_permutation_invariance(self):
        mentions = [
            Mention("a", (0, 1), ((C1, 0.6), (C2, 0.4))),
            Mention("b", (1, 2), ((C3, 1.0),)),
            Mention("c", (2, 3), ((C2, 0.5), (C3, 0.5))),
        ]
        graph = edge_graph((C1, C3, 0.7), (C2, C3, 0.2))
        baseline = disambiguate(mentions, graph)
        rng = random.Random(3)
        for _ in range(5):
            shuffled = list(mentions)
            rng.shuffle(shuffled)
            assert disambiguate(shuffled, graph) == baseline

    def test_unrelated_graph_concept_changes_nothing(self):
        mentions = [
            Mention("apple", (0, 1), ((C_COMPANY, 0.5), (C_FRUIT, 0.5))),
            Mention("orchard", (1, 2), ((C_ORCH, 1.0),)),
        ]
        related = edge_graph((C_FRUIT, C_ORCH, 1.0))
        extra = edge_graph(
            (C_FRUIT, C_ORCH, 1.0), ("c:00000777", "c:00000778", 0.9)
        )
        assert disambiguate(mentions, related) == disambiguate(mentions, extra)

    def test_concepts_never_exceed_mentions(self, lexicon, graph):
        rng = random.Random(11)
        surfaces = lexicon.surfaces("de")
        for _ in range(50):
            tokens = []
            for _ in range(rng.randint(0, 6)):
                tokens.extend(rng.choice(surfaces).split(" "))
            mentions = find_mentions(tokens, "de", lexicon)
            annotation = disambiguate(mentions, graph)
            assert len(annotation.concepts) <= len(mentions)

    def test_agrees_with_simulation_oracle(self):
        rng = random.Random(99)
        concepts = [f"c:{i:08d}" for i in range(1, 9)]
        for _ in range(300):
            mention_count = rng.randint(1, 4)
            mentions = []
            for i in range(mention_count):
                size = rng.randint(1, 3)
                chosen = rng.sample(concepts, k=size)
                priors = [round(rng.uniform(0.1, 1.0), 2) for _ in chosen]
                total = sum(priors)
                cands = tuple(
                    sorted(
                        ((c, round(p / total, 6)) for c, p in zip(chosen, priors)),
                        key=lambda cp: (-cp[1], cp[0]),
                    )
                )
                mentions.append(Mention(f"s{i}", (i, i + 1), cands))
            edges = {}
            edge_list = []
            for _ in range(rng.randint(0, 6)):
                a, b = rng.sample(concepts, k=2)
                key = frozenset((a, b))
                if key in edges:
                    continue
                weight = round(rng.uniform(0.1, 1.0), 2)
                edges[key] = weight
                edge_list.append((min(a, b), max(a, b), weight))
            annotation = disambiguate(mentions, ConceptGraph(edge_list))
            want_chosen, want_ambiguous = simulate_pruning(
                [m.candidates for m in mentions], edges
            )
            got = {m.surface: concept for m, concept in annotation.mentions}
            for i, mention in enumerate(mentions):
                if i in want_ambiguous:
                    assert mention.surface in [
                        m.surface for m in annotation.ambiguous
                    ]
                else:
                    assert got[mention.surface] == want_chosen[i]


class TestAnnotateDataset:
    def test_hundezonen_record(self, mini_annotated, cid):
        annotated = {a.record.dataset_id: a for a in mini_annotated}
        concepts = annotated["hundezonen-wien"].concepts
        assert {cid("dog"), cid("vienna")} <= concepts
        assert annotated["hundezonen-wien"].record.language == "de"

    def test_unmatched_text_gives_empty_concepts(self, lexicon, graph, profiles):
        record = DatasetRecord("p", "d", "Qwrtzzz xplm", language="en")
        annotated = annotate_dataset(record, lexicon, graph, profiles)
        assert annotated.concepts == frozenset()

    def test_deterministic(self, mini_records, lexicon, graph, profiles):
        first = [annotate_dataset(r, lexicon, graph, profiles) for r in mini_records]
        second = [annotate_dataset(r, lexicon, graph, profiles) for r in mini_records]
        assert first == second

    def test_detects_language_when_unset(self, lexicon, graph, profiles):
        record = DatasetRecord(
            "p",
            "d",
            "Hundezonen Wien",
            "Bereiche für Hunde in der Stadt Wien und den Bezirken.",
            ("hund", "wien"),
        )
        annotated = annotate_dataset(record, lexicon, graph, profiles)
        assert annotated.record.language == "de"

    def test_preset_language_respected(self, lexicon, graph, profiles):
        record = DatasetRecord("p", "d", "perro", language="es")
        annotated = annotate_dataset(record, lexicon, graph, profiles)
        assert annotated.record.language == "es"
        assert len(annotated.concepts) == 1

    def test_force_resolution_highest_prior_smallest_id(self, lexicon, graph):
        record = DatasetRecord("p", "d", "apple", language="en")
        annotated = annotate_dataset(record, lexicon, graph)
        # equal priors: the smaller concept id wins deterministically
        assert annotated.concepts == frozenset({min(C_FRUIT, C_COMPANY)})

    def test_cross_lingual_bridge(self, lexicon, graph, profiles, cid):
        german = DatasetRecord("a", "1", "Hunde in Wien", language="de")
        italian = DatasetRecord("b", "2", "Cani a Vienna", language="it")
        left = annotate_dataset(german, lexicon, graph, profiles)
        right = annotate_dataset(italian, lexicon, graph, profiles)
        assert cid("dog") in left.concepts
        assert cid("dog") in right.concepts
        assert cid("vienna") in left.concepts & right.concepts


class TestForceResolve:
    def test_highest_prior_wins(self):
        mention = Mention("m", (0, 1), ((C1, 0.3), (C2, 0.7)))
        assert force_resolve(mention) == C2

    def test_tie_takes_smallest_id(self):
        mention = Mention("m", (0, 1), ((C2, 0.5), (C1, 0.5)))
        assert force_resolve(mention) == C1


class TestLexiconFiles:
    def test_priors_must_not_exceed_one(self):
        with pytest.raises(SchemaError):
            Lexicon({("x", "en"): [(C1, 0.7), (C2, 0.7)]})

    def test_bad_concept_id(self):
        with pytest.raises(SchemaError):
            Lexicon({("x", "en"): [("nope", 1.0)]})

    def test_bad_language(self):
        with pytest.raises(SchemaError):
            Lexicon({("x", "xx"): [(C1, 1.0)]})

    def test_tsv_column_count(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("a\ten\tc:00000001\n", encoding="utf-8")
        with pytest.raises(SchemaError):
            Lexicon.from_tsv(path)

    def test_candidates_sorted_by_prior_then_id(self):
        lexicon = Lexicon({("x", "en"): [(C2, 0.2), (C1, 0.8)]})
        assert lexicon.lookup("x", "en") == ((C1, 0.8), (C2, 0.2))


class TestConceptGraphFiles:
    def test_self_loop_rejected(self):
        with pytest.raises(SchemaError):
            ConceptGraph([(C1, C1, 0.5)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(SchemaError):
            ConceptGraph([(C1, C2, 0.5), (C2, C1, 0.4)])

    def test_tsv_requires_ascending_ids(self, tmp_path):
        path = tmp_path / "graph.tsv"
        path.write_text(f"{C2}\t{C1}\t0.5\n", encoding="utf-8")
        with pytest.raises(SchemaError):
            ConceptGraph.from_tsv(path)

    def test_weight_lookup_symmetric(self):
        graph = ConceptGraph([(C1, C2, 0.5)])
        assert graph.weight(C1, C2) == graph.weight(C2, C1) == 0.5
        assert graph.weight(C1, C3) == 0.0


class TestConceptLabels:
    def test_fallback_chain(self):
        labels = ConceptLabels({(C1, "de"): "Hund", (C2, "fr"): "chat"})
        assert labels.label(C1, "de") == "Hund"
        assert labels.label(C2, "de") == "chat"  # any language beats the raw id
        assert labels.label(C3, "de") == C3

    def test_english_preferred_over_arbitrary(self):
        labels = ConceptLabels({(C1, "en"): "dog", (C1, "de"): "Hund"})
        assert labels.label(C1, "fi") == "dog"


class TestAnnotatedNdjson:
    def test_round_trip(self, mini_annotated):
        for dataset in mini_annotated:
            line = write_annotated(dataset)
            parsed = parse_annotated(line)
            assert parsed.record == dataset.record
            assert parsed.concepts == dataset.concepts

    def test_missing_concepts_key(self):
        with pytest.raises(SchemaError):
            parse_annotated('{"portal_id":"p"}')

    def test_bad_concept_id(self, mini_annotated):
        doc = json.loads(write_annotated(mini_annotated[0]))
        doc["concepts"] = ["bogus"]
        with pytest.raises(SchemaError):
            parse_annotated(json.dumps(doc))

    def test_invalid_json(self):
        with pytest.raises(ParseError):
            parse_annotated("{")

    def test_corpus_file_round_trip(self, mini_annotated, tmp_path):
        path = tmp_path / "annotated.ndjson"
        count = write_annotated_corpus(mini_annotated, path)
        loaded = list(read_annotated(path))
        assert count == len(loaded) == len(mini_annotated)
        assert [a.record for a in loaded] == [a.record for a in mini_annotated]
        assert [a.concepts for a in loaded] == [a.concepts for a in mini_annotated]


class _LinkerStub(BaseHTTPRequestHandler):
    status = 200
    response: dict = {}
    seen: list[dict] = []

    def do_POST(self):
        length = int(self.headers.get("Content-Length", "0"))
        type(self).seen.append(json.loads(self.rfile.read(length)))
        if self.status != 200:
            self.send_error(self.status)
            return
        body = json.dumps(self.response).encode("utf-8")
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


@pytest.fixture()
def linker_stub():
    _LinkerStub.status = 200
    _LinkerStub.response = {"annotations": []}
    _LinkerStub.seen = []
    server = ThreadingHTTPServer(("127.0.0.1", 0), _LinkerStub)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        yield f"http://127.0.0.1:{server.server_port}/link"
    finally:
        server.shutdown()
        thread.join()


class TestExternalLinkerClient:
    def test_replay_maps_annotations(self, linker_stub):
        _LinkerStub.response = {
            "annotations": [
                {"start": 0, "end": 1, "concept": C2, "score": 0.9},
                {"start": 2, "end": 3, "concept": C1, "score": 0.8},
            ]
        }
        client = ExternalLinkerClient(linker_stub)
        annotation = client.link("dogs in vienna", "en")
        assert annotation.concepts == frozenset({C1, C2})
        assert [m.surface for m, _ in annotation.mentions] == ["dogs", "vienna"]
        assert annotation.ambiguous == ()
        assert _LinkerStub.seen == [{"text": "dogs in vienna", "lang": "en"}]

    def test_server_error_surfaces_as_unavailable(self, linker_stub):
        _LinkerStub.status = 500
        with pytest.raises(LinkerUnavailable):
            ExternalLinkerClient(linker_stub).link("dogs", "en")

    def test_connection_refused(self):
        client = ExternalLinkerClient("http://127.0.0.1:1/link", timeout=0.2)
        with pytest.raises(LinkerUnavailable):
            client.link("dogs", "en")

    def test_malformed_response(self, linker_stub):
        _LinkerStub.response = {"nonsense": True}
        with pytest.raises(LinkerUnavailable):
            ExternalLinkerClient(linker_stub).link("dogs", "en")
