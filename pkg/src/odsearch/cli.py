"""Operator CLI chaining the pipeline stages.

Verbs: harvest, annotate, index, query, stats, serve.  Every stage reads
and writes plain files so each step stays independently testable and
diffable.  Exit codes: 0 success, 1 usage error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import data as bundled
from .errors import OdsearchError
from .harvest import DEFAULT_PAGE_SIZE, harvest_portal
from .index import build_index, load_index, save_index
from .langid import load_profiles
from .linker import (
    ConceptGraph,
    ConceptLabels,
    Lexicon,
    LocalLinker,
    read_annotated,
    write_annotated_corpus,
)
from .records import LANGUAGE_CODES, PortalSpec, read_corpus, write_corpus


def _env(name: str, default: str | None = None) -> str | None:
    return os.environ.get(f"ODSEARCH_{name}", default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="odsearch",
        description="Cross-lingual open-dataset search pipeline",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("harvest", help="pull portal metadata into canonical NDJSON")
    p.add_argument("--portal", required=True, help="portal id (host name)")
    p.add_argument("--mode", choices=("offline", "online"), default="offline")
    p.add_argument(
        "--source",
        required=True,
        help="directory of CKAN package JSON files, or the portal API base URL",
    )
    p.add_argument("--out", required=True, help="output .records.ndjson path")
    p.add_argument("--page-size", type=int, default=DEFAULT_PAGE_SIZE)
    p.add_argument(
        "--expected-lang", choices=LANGUAGE_CODES, default="und",
        help="advisory portal language",
    )

    p = sub.add_parser("annotate", help="attach concept sets to a corpus")
    p.add_argument("--in", dest="src", required=True)
    p.add_argument("--out", required=True)
    _add_resource_flags(p)

    p = sub.add_parser("index", help="build an index file from annotated NDJSON")
    p.add_argument("--in", dest="src", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("query", help="one-shot search against an index file")
    p.add_argument("--index", required=True)
    p.add_argument("text")
    p.add_argument("--lang", choices=LANGUAGE_CODES)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    _add_resource_flags(p)

    p = sub.add_parser("stats", help="per-portal and per-language corpus counts")
    p.add_argument("--in", dest="src", required=True)

    p = sub.add_parser("serve", help="run the HTTP search service")
    p.add_argument("--index", default=_env("INDEX"), required=_env("INDEX") is None)
    p.add_argument("--host", default=_env("HOST", "127.0.0.1"))
    p.add_argument("--port", type=int, default=int(_env("PORT", "8080") or 8080))
    p.add_argument("--session-ttl", type=float, default=None)
    p.add_argument("--external-linker", default=_env("EXTERNAL_LINKER"))
    _add_resource_flags(p)
    p.add_argument("--labels", default=_env("LABELS"))

    return parser


def _add_resource_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lexicon", default=_env("LEXICON"))
    p.add_argument("--graph", default=_env("GRAPH"))
    p.add_argument("--profiles", default=_env("PROFILES"))


def _local_linker(args: argparse.Namespace) -> LocalLinker:
    lexicon = (
        Lexicon.from_tsv(args.lexicon) if args.lexicon else bundled.bundled_lexicon()
    )
    graph = (
        ConceptGraph.from_tsv(args.graph) if args.graph else bundled.bundled_graph()
    )
    profiles = (
        load_profiles(args.profiles) if args.profiles else bundled.bundled_profiles()
    )
    return LocalLinker(lexicon, graph, profiles)


def _cmd_harvest(args: argparse.Namespace) -> int:
    spec = PortalSpec(
        portal_id=args.portal,
        api_base_url=args.source if args.mode == "online" else "",
        expected_language=args.expected_lang,
    )
    stream = harvest_portal(spec, args.mode, args.source, args.page_size)
    count = write_corpus(stream, args.out)
    print(f"harvested {count} records -> {args.out}")
    return 0


def _cmd_annotate(args: argparse.Namespace) -> int:
    linker = _local_linker(args)
    annotated = (linker.annotate_dataset(r) for r in read_corpus(args.src))
    count = write_annotated_corpus(annotated, args.out)
    print(f"annotated {count} records -> {args.out}")
    return 0


def _cmd_index(args: argparse.Namespace) -> int:
    index = build_index(read_annotated(args.src))
    save_index(index, args.out)
    print(f"indexed {len(index)} datasets, {index.concept_count} concepts -> {args.out}")
    return 0


def _cmd_query(args: argparse.Namespace) -> int:
    from .service import MAX_SEARCH_HITS, _result_payload, build_resources

    index = load_index(args.index)
    linker = _local_linker(args)
    res = build_resources(
        index,
        lexicon=linker.lexicon,
        graph=linker.graph,
        profiles=linker.profiles,
    )
    language = args.lang or "und"
    if language == "und":
        language = linker.detect(args.text)[0]
    annotation = linker.link(args.text, language)
    display = language if language != "und" else "en"
    result = index.search_any(annotation.concepts)
    ambiguous = [
        {
            "surface": mention.surface,
            "senses": [
                {"id": concept, "label": res.labels.label(concept, display)}
                for concept, _ in mention.candidates
            ],
        }
        for mention in annotation.ambiguous
    ]
    payload = _result_payload(res, result, display, ambiguous)
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True))
        return 0
    concepts = ", ".join(entry["label"] for entry in payload["query_concepts"])
    print(f"query concepts: {concepts or '(none)'}")
    for mention in payload["ambiguous"]:
        senses = " / ".join(s["label"] for s in mention["senses"])
        print(f"ambiguous: {mention['surface']} ({senses})")
    if not payload["hits"]:
        print("no matching datasets")
        return 0
    for hit in payload["hits"][:MAX_SEARCH_HITS]:
        print(
            f"{hit['rank']:>3}. [{hit['score']}] {hit['title']}"
            f"  ({hit['portal']}, {hit['language']})"
        )
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    portals: dict[str, int] = {}
    languages: dict[str, int] = {}
    total = 0
    for record in read_corpus(args.src):
        portals[record.portal_id] = portals.get(record.portal_id, 0) + 1
        languages[record.language] = languages.get(record.language, 0) + 1
        total += 1
    for portal, count in sorted(portals.items(), key=lambda kv: (-kv[1], kv[0])):
        print(f"portal\t{portal}\t{count}")
    for language, count in sorted(languages.items(), key=lambda kv: (-kv[1], kv[0])):
        print(f"language\t{language}\t{count}")
    print(f"total\t{total}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app, resources_from_files

    res = resources_from_files(
        index_path=args.index,
        lexicon_path=args.lexicon,
        graph_path=args.graph,
        labels_path=args.labels,
        profiles_dir=args.profiles,
        external_linker_url=args.external_linker,
        session_ttl=args.session_ttl,
    )
    app = create_app(res)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


_COMMANDS = {
    "harvest": _cmd_harvest,
    "annotate": _cmd_annotate,
    "index": _cmd_index,
    "query": _cmd_query,
    "stats": _cmd_stats,
    "serve": _cmd_serve,
}


def run(argv: list[str] | None = None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    logging.basicConfig(
        level=logging.INFO, format="%(levelname)s %(name)s %(message)s"
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return _COMMANDS[args.verb](args)
    except (OdsearchError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
