"""Brute-force reference implementations used to cross-check the library.

Everything here is written as plainly as possible, with independent data
structures, so a bug in the optimized code cannot hide in its oracle.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence


# --- retrieval -------------------------------------------------------------


def scan_search_any(
    concept_sets: Sequence[frozenset[str]], query: Iterable[str]
) -> list[tuple[int, int]]:
    """Linear scan: every dataset intersecting the query, ranked."""
    wanted = set(query)
    hits = []
    for ordinal, concepts in enumerate(concept_sets):
        score = len(concepts & wanted)
        if score > 0:
            hits.append((ordinal, score))
    hits.sort(key=lambda hit: (-hit[1], -len(concept_sets[hit[0]]), hit[0]))
    return hits


def scan_refine(
    concept_sets: Sequence[frozenset[str]],
    hits: Sequence[tuple[int, int]],
    selected: Iterable[str],
) -> list[tuple[int, int]]:
    """Keep hits whose datasets contain every selected concept."""
    needed = set(selected)
    return [
        (ordinal, score)
        for ordinal, score in hits
        if needed.issubset(concept_sets[ordinal])
    ]


def scan_top_cooccurring(
    concept_sets: Sequence[frozenset[str]],
    hits: Sequence[tuple[int, int]],
    excluded: Iterable[str],
    k: int,
) -> list[tuple[str, int]]:
    """Exhaustive count of co-occurring concepts over the hit set."""
    skip = set(excluded)
    counts: dict[str, int] = {}
    for ordinal, _ in hits:
        for concept in concept_sets[ordinal]:
            if concept not in skip:
                counts[concept] = counts.get(concept, 0) + 1
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return ranked[: max(k, 0)]


# --- language identification ------------------------------------------------


def rank_ngrams(text: str, top: int = 300) -> dict[str, int]:
    """Rank 1-4 grams of space-padded alphabetic tokens by frequency."""
    cleaned = []
    for ch in text.lower():
        cleaned.append(ch if ch.isalpha() else " ")
    counts: dict[str, int] = {}
    for token in "".join(cleaned).split():
        padded = " " + token + " "
        for n in (1, 2, 3, 4):
            for i in range(len(padded) - n + 1):
                gram = padded[i : i + n]
                counts[gram] = counts.get(gram, 0) + 1
    ordered = sorted(counts, key=lambda gram: (-counts[gram], gram))
    return {gram: rank for rank, gram in enumerate(ordered[:top])}


def out_of_place_distance(
    query_ranks: Mapping[str, int], profile_ranks: Mapping[str, int], penalty: int = 300
) -> int:
    total = 0
    for gram, rank in query_ranks.items():
        if gram in profile_ranks:
            total += abs(rank - profile_ranks[gram])
        else:
            total += penalty
    return total


def classify(text: str, profiles: Mapping[str, Mapping[str, int]]) -> str:
    """Nearest profile by out-of-place distance, with the margin rule."""
    query = rank_ngrams(text)
    if len(query) < 3:
        return "und"
    distances = sorted(
        (out_of_place_distance(query, ranks), lang)
        for lang, ranks in profiles.items()
    )
    if len(distances) > 1:
        d_max = 300 * len(query)
        if (distances[1][0] - distances[0][0]) / d_max < 0.02:
            return "und"
    return distances[0][1]


# --- mention detection -------------------------------------------------------


def greedy_segments(
    tokens: Sequence[str], phrases: set[str], max_len: int
) -> list[tuple[int, int, str]]:
    """Reference longest-match segmentation over a plain phrase set."""
    out = []
    i = 0
    while i < len(tokens):
        found = None
        length = min(max_len, len(tokens) - i)
        while length >= 1:
            candidate = " ".join(tokens[i : i + length])
            if candidate in phrases:
                found = (i, i + length, candidate)
                break
            length -= 1
        if found:
            out.append(found)
            i = found[1]
        else:
            i += 1
    return out


# --- disambiguation ----------------------------------------------------------


def simulate_pruning(
    mention_candidates: Sequence[Sequence[tuple[str, float]]],
    edges: Mapping[frozenset[str], float],
    prior_weight: float = 0.3,
    degree_weight: float = 0.7,
    ratio: float = 0.8,
) -> tuple[list[str | None], list[int]]:
    """Step-by-step simulation of the candidate pruning procedure.

    Mentions are given in canonical order.  Returns (chosen concept per
    mention with None for ambiguous ones, indices of ambiguous mentions).
    """
    state = [dict(cands) for cands in mention_candidates]
    had_degree: set[tuple[int, str]] = set()
    last_pair: dict[int, tuple[str, str, float, float]] = {}

    def edge(a: str, b: str) -> float:
        if a == b:
            return 0.0
        return edges.get(frozenset((a, b)), 0.0)

    while True:
        sizes = [len(cands) for cands in state]
        biggest = max(sizes)
        if biggest < 2:
            break
        nodes = [(i, c) for i, cands in enumerate(state) for c in cands]
        degree = {}
        for i, c in nodes:
            degree[(i, c)] = sum(
                edge(c, other_c) for j, other_c in nodes if j != i
            )
        top = max(degree.values()) if degree else 0.0
        for node, value in degree.items():
            if value > 0:
                had_degree.add(node)
        scores = {}
        for i, c in nodes:
            normalized = degree[(i, c)] / top if top > 0 else 0.0
            scores[(i, c)] = prior_weight * state[i][c] + degree_weight * normalized
        pool = [(i, c) for i, c in nodes if sizes[i] == biggest]
        best_low = min(scores[node] for node in pool)
        tied = [node for node in pool if scores[node] == best_low]
        tied.sort(key=lambda node: (node[1], node[0]))
        victim_i, victim_c = tied[-1]
        if len(state[victim_i]) == 2:
            other = [c for c in state[victim_i] if c != victim_c][0]
            last_pair[victim_i] = (
                victim_c,
                other,
                scores[(victim_i, victim_c)],
                scores[(victim_i, other)],
            )
        del state[victim_i][victim_c]

    chosen: list[str | None] = []
    ambiguous: list[int] = []
    for i, cands in enumerate(state):
        survivor = list(cands)[0]
        if i in last_pair:
            removed, kept, removed_score, kept_score = last_pair[i]
            never_connected = (i, removed) not in had_degree and (
                i,
                kept,
            ) not in had_degree
            if never_connected and removed_score / kept_score >= ratio:
                chosen.append(None)
                ambiguous.append(i)
                continue
        chosen.append(survivor)
    return chosen, ambiguous
