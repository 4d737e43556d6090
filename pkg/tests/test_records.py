import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from odsearch.errors import MalformedMetadata, ParseError, SchemaError
from odsearch.records import (
    LANGUAGE_CODES,
    DatasetRecord,
    concat_text,
    parse_canonical,
    parse_ckan_package,
    read_corpus,
    write_canonical,
)

PORTAL = "data.gv.at"


class TestParseCkanPackage:
    def test_direct_field_mapping_and_keyword_dedup(self):
        raw = (
            '{"id":"x1","title":"Bäume Wien","notes":"Baumkataster",'
            '"tags":[{"name":"baum"},{"name":"baum"}]}'
        )
        record = parse_ckan_package(raw)
        assert record.dataset_id == "x1"
        assert record.title == "Bäume Wien"
        assert record.description == "Baumkataster"
        assert record.keywords == ("baum",)

    def test_absent_field_defaults(self):
        record = parse_ckan_package('{"id":"x2","title":"T"}')
        assert record.title == "T"
        assert record.description == ""
        assert record.keywords == ()
        assert record.landing_url == ""
        assert record.publisher == ""
        assert record.language == "und"

    def test_name_fallbacks(self):
        record = parse_ckan_package({"name": "only-name"})
        assert record.title == "only-name"
        assert record.dataset_id == "only-name"

    def test_missing_title_and_name(self):
        with pytest.raises(MalformedMetadata):
            parse_ckan_package({"id": "x", "notes": "no title"})

    def test_missing_id_and_name(self):
        with pytest.raises(MalformedMetadata):
            parse_ckan_package({"title": "T"})

    def test_invalid_json(self):
        with pytest.raises(ParseError):
            parse_ckan_package("{not json")

    def test_non_object_document(self):
        with pytest.raises(MalformedMetadata):
            parse_ckan_package("[1,2,3]")

    def test_fixture_corpus_matches_handwritten_expectations(self, fixtures_dir):
        expected = list(read_corpus(fixtures_dir / "ckan_expected.records.ndjson"))
        by_id = {record.dataset_id: record for record in expected}
        parsed = 0
        for path in sorted((fixtures_dir / "ckan").glob("*.json")):
            raw = path.read_text(encoding="utf-8")
            if path.stem == "pkg-017":
                with pytest.raises(MalformedMetadata):
                    parse_ckan_package(raw, portal_id=PORTAL)
                continue
            record = parse_ckan_package(raw, portal_id=PORTAL)
            assert record == by_id[record.dataset_id]
            parsed += 1
        assert parsed == len(expected) == 34

    def test_deterministic_on_fixture(self, fixtures_dir):
        raw = (fixtures_dir / "ckan" / "pkg-000.json").read_text(encoding="utf-8")
        assert parse_ckan_package(raw, PORTAL) == parse_ckan_package(raw, PORTAL)


class TestCanonical:
    def test_round_trip_on_fixture_records(self, fixtures_dir):
        for record in read_corpus(fixtures_dir / "ckan_expected.records.ndjson"):
            assert parse_canonical(write_canonical(record)) == record

    def test_missing_key(self):
        line = write_canonical(DatasetRecord("p", "d", "T"))
        doc = json.loads(line)
        del doc["title"]
        with pytest.raises(SchemaError, match="title"):
            parse_canonical(json.dumps(doc))

    def test_unknown_key_rejected(self):
        doc = json.loads(write_canonical(DatasetRecord("p", "d", "T")))
        doc["foo"] = 1
        with pytest.raises(SchemaError, match="foo"):
            parse_canonical(json.dumps(doc))

    def test_wrong_type(self):
        doc = json.loads(write_canonical(DatasetRecord("p", "d", "T")))
        doc["description"] = 7
        with pytest.raises(SchemaError):
            parse_canonical(json.dumps(doc))

    def test_keyword_duplicates_rejected(self):
        doc = json.loads(write_canonical(DatasetRecord("p", "d", "T")))
        doc["keywords"] = ["a", "a"]
        with pytest.raises(SchemaError):
            parse_canonical(json.dumps(doc))

    def test_unknown_language_rejected(self):
        doc = json.loads(write_canonical(DatasetRecord("p", "d", "T")))
        doc["language"] = "xx"
        with pytest.raises(SchemaError):
            parse_canonical(json.dumps(doc))

    def test_invalid_json(self):
        with pytest.raises(ParseError):
            parse_canonical("{")

    def test_non_object_line(self):
        with pytest.raises(SchemaError):
            parse_canonical("[]")


keywords_strategy = st.lists(
    st.text(min_size=1, max_size=8), unique=True, max_size=5
).map(tuple)

records_strategy = st.builds(
    DatasetRecord,
    portal_id=st.text(max_size=12),
    dataset_id=st.text(min_size=1, max_size=12),
    title=st.text(min_size=1, max_size=30),
    description=st.text(max_size=60),
    keywords=keywords_strategy,
    landing_url=st.text(max_size=30),
    language=st.sampled_from(LANGUAGE_CODES),
    publisher=st.text(max_size=20),
)


@given(records_strategy)
def test_round_trip_identity(record):
    assert parse_canonical(write_canonical(record)) == record


@given(records_strategy)
def test_concat_text_length(record):
    joins = max(0, len(record.keywords) - 1)
    expected = (
        len(record.title)
        + len(record.description)
        + sum(len(k) for k in record.keywords)
        + joins
        + 2
    )
    assert len(concat_text(record)) == expected


class TestConcatText:
    def test_stated_format(self):
        record = DatasetRecord("p", "d", "A", "B", ("c", "d"))
        assert concat_text(record) == "A\nB\nc d"

    def test_empty_description_and_keywords(self):
        record = DatasetRecord("p", "d", "A")
        assert concat_text(record) == "A\n\n"

    def test_unicode_title_fixture(self, fixtures_dir):
        records = {
            r.dataset_id: r
            for r in read_corpus(fixtures_dir / "ckan_expected.records.ndjson")
        }
        record = records["maerkte"]
        assert concat_text(record) == (
            "Märkte Wien\nAlle Wiener Märkte mit Öffnungszeiten.\nmarkt lebensmittel"
        )
