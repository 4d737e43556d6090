import json

import pytest

from odsearch.cli import run
from odsearch.index import build_index, load_index
from odsearch.linker import read_annotated
from odsearch.records import read_corpus, write_corpus
from odsearch.synth import table1_corpus


@pytest.fixture(scope="module")
def pipeline(fixtures_dir, tmp_path_factory):
    """harvest -> annotate -> index over the CKAN fixture directory."""
    root = tmp_path_factory.mktemp("pipeline")
    corpus = root / "corpus.records.ndjson"
    annotated = root / "annotated.ndjson"
    index_file = root / "corpus.odci"
    assert run(
        [
            "harvest",
            "--portal",
            "data.gv.at",
            "--mode",
            "offline",
            "--source",
            str(fixtures_dir / "ckan"),
            "--out",
            str(corpus),
        ]
    ) == 0
    assert run(["annotate", "--in", str(corpus), "--out", str(annotated)]) == 0
    assert run(["index", "--in", str(annotated), "--out", str(index_file)]) == 0
    return {"corpus": corpus, "annotated": annotated, "index": index_file}


class TestHarvestVerb:
    def test_writes_canonical_corpus(self, pipeline):
        records = list(read_corpus(pipeline["corpus"]))
        assert len(records) == 34
        assert all(record.portal_id == "data.gv.at" for record in records)


class TestAnnotateVerb:
    def test_output_has_concepts_and_languages(self, pipeline):
        annotated = list(read_annotated(pipeline["annotated"]))
        assert len(annotated) == 34
        assert any(dataset.concepts for dataset in annotated)
        dogzones = next(
            dataset
            for dataset in annotated
            if dataset.record.dataset_id == "hundezonen-wien"
        )
        assert dogzones.record.language == "de"

    def test_deterministic_output_bytes(self, pipeline, tmp_path):
        again = tmp_path / "again.ndjson"
        assert run(
            ["annotate", "--in", str(pipeline["corpus"]), "--out", str(again)]
        ) == 0
        assert again.read_bytes() == pipeline["annotated"].read_bytes()


class TestIndexVerb:
    def test_index_loads_and_matches_in_process_build(self, pipeline):
        loaded = load_index(pipeline["index"])
        in_process = build_index(read_annotated(pipeline["annotated"]))
        assert len(loaded) == len(in_process) == 34
        assert list(loaded.concepts()) == list(in_process.concepts())

    def test_empty_input_gives_valid_empty_index(self, tmp_path):
        src = tmp_path / "empty.ndjson"
        src.write_text("", encoding="utf-8")
        out = tmp_path / "empty.odci"
        assert run(["index", "--in", str(src), "--out", str(out)]) == 0
        assert len(load_index(out)) == 0


class TestQueryVerb:
    def test_json_output_first_hit(self, pipeline, capsys):
        assert run(
            [
                "query",
                "--index",
                str(pipeline["index"]),
                "hunde in wien",
                "--json",
            ]
        ) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["hits"][0]["title"] == "Hundezonen Wien"
        assert payload["hits"][0]["score"] == 2

    def test_json_output_stable_bytes(self, pipeline, capsys):
        args = ["query", "--index", str(pipeline["index"]), "hunde", "--json"]
        assert run(args) == 0
        first = capsys.readouterr().out
        assert run(args) == 0
        second = capsys.readouterr().out
        assert first == second

    def test_human_readable_table(self, pipeline, capsys):
        assert run(["query", "--index", str(pipeline["index"]), "hunde"]) == 0
        out = capsys.readouterr().out
        assert "query concepts:" in out
        assert "Hundezonen Wien" in out

    def test_pipeline_matches_in_process_search(self, pipeline, capsys, linker):
        assert run(
            ["query", "--index", str(pipeline["index"]), "hunde in wien", "--json"]
        ) == 0
        payload = json.loads(capsys.readouterr().out)
        index = build_index(read_annotated(pipeline["annotated"]))
        annotation = linker.link("hunde in wien", "de")
        result = index.search_any(annotation.concepts)
        got = [(hit["title"], hit["score"]) for hit in payload["hits"]]
        want = [
            (index.record(ordinal).record.title, score)
            for ordinal, score in result.hits[:50]
        ]
        assert got == want


class TestStatsVerb:
    def test_table1_corpus_counts(self, lexicon, tmp_path, capsys):
        corpus = tmp_path / "table1.records.ndjson"
        write_corpus(table1_corpus(lexicon), corpus)
        assert run(["stats", "--in", str(corpus)]) == 0
        out = capsys.readouterr().out
        for portal, count in [
            ("dati.trentino.it", 5285),
            ("data.gov.ie", 4796),
            ("datamx.io", 2767),
            ("data.gv.at", 2323),
            ("dados.gov.br", 2061),
            ("beta.avoindata.fi", 820),
            ("www.nosdonnees.fr", 290),
        ]:
            assert f"portal\t{portal}\t{count}" in out
        assert "total\t18342" in out

    def test_language_counts(self, fixtures_dir, capsys):
        assert run(
            ["stats", "--in", str(fixtures_dir / "mini.records.ndjson")]
        ) == 0
        out = capsys.readouterr().out
        assert "language\tde\t3" in out
        assert "language\ten\t4" in out
        assert "total\t12" in out


class TestExitCodes:
    def test_usage_error_unknown_verb(self):
        assert run(["frobnicate"]) == 1

    def test_usage_error_missing_arguments(self):
        assert run(["harvest", "--portal", "x"]) == 1

    def test_help_exits_zero(self):
        assert run(["--help"]) == 0

    def test_runtime_error_missing_index(self, tmp_path):
        assert run(["query", "--index", str(tmp_path / "none.odci"), "x"]) == 2

    def test_runtime_error_missing_corpus(self, tmp_path):
        assert run(["stats", "--in", str(tmp_path / "none.ndjson")]) == 2
