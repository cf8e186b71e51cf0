"""Pretrained word vectors, cosine nearest neighbours, and complexity-ranked
substitution suggestions.

The vector format is the common textual one: a ``<vocab_size> <dim>`` header
followed by one ``word v1 ... v_dim`` line per entry. Search is an exhaustive
scan — adequate at the vocabulary sizes this tool works with — and fully
deterministic: ties break on ascending word order, and a zero vector compares
as minus infinity so it always ranks last.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import DimensionMismatch, EmptySuggestions, ParseError, UnknownWord
from .lexindex import LexIndex, lookup

log = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class EmbeddingTable:
    dim: int
    vocab: dict[str, tuple[float, ...]]


@dataclass(frozen=True, slots=True)
class Suggestion:
    """One substitution candidate; cs and n are None when not indexed."""

    lemma: str
    cosine_similarity: float
    cs: float | None
    n: int | None


def load_vectors(path: str | Path) -> EmbeddingTable:
    """Load a textual vector file; duplicate words keep their first vector."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline()
        parts = header.split()
        if len(parts) != 2:
            raise ParseError(1, "expected header '<vocab_size> <dim>'")
        try:
            vocab_size, dim = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(1, f"non-integer header fields {parts!r}") from None
        if vocab_size < 0 or dim < 1:
            raise ParseError(1, f"bad header values vocab_size={vocab_size}, dim={dim}")
        vocab: dict[str, tuple[float, ...]] = {}
        data_lines = 0
        for line_no, line in enumerate(fh, start=2):
            if not line.strip():
                continue
            data_lines += 1
            parts = line.split()
            word = parts[0]
            if len(parts) - 1 != dim:
                raise DimensionMismatch(
                    f"line {line_no}: expected {dim} components, got {len(parts) - 1}"
                )
            try:
                vector = tuple(float(p) for p in parts[1:])
            except ValueError:
                raise ParseError(line_no, "non-numeric vector component") from None
            if any(not math.isfinite(v) for v in vector):
                raise ParseError(line_no, "non-finite vector component")
            if word in vocab:
                log.warning("duplicate word %r at line %d ignored", word, line_no)
                continue
            vocab[word] = vector
    if data_lines != vocab_size:
        raise ParseError(1, f"header declares {vocab_size} vectors, file has {data_lines}")
    return EmbeddingTable(dim=dim, vocab=vocab)


def _cosine(u: tuple[float, ...], v: tuple[float, ...]) -> float:
    dot = 0.0
    nu = 0.0
    nv = 0.0
    for a, b in zip(u, v):
        dot += a * b
        nu += a * a
        nv += b * b
    if nu == 0.0 or nv == 0.0:
        return float("-inf")  # zero vectors rank last instead of producing NaN
    return dot / (math.sqrt(nu) * math.sqrt(nv))


def nearest(table: EmbeddingTable, query: str, k: int) -> list[tuple[str, float]]:
    """Top-k vocabulary words by cosine similarity, excluding the query.

    Ties break on ascending word order; fewer than k candidates returns all.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    q = table.vocab.get(query)
    if q is None:
        raise UnknownWord(f"{query!r} not in embedding vocabulary")
    scored = [
        (_cosine(vec, q), word) for word, vec in table.vocab.items() if word != query
    ]
    scored.sort(key=lambda t: (-t[0], t[1]))
    return [(word, sim) for sim, word in scored[:k]]


def suggest(
    index: LexIndex,
    table: EmbeddingTable,
    lemma: str,
    k: int,
    exclude: Iterable[str] = (),
) -> list[Suggestion]:
    """Complexity-ranked substitution candidates for a lemma.

    Takes the top-k cosine neighbours, drops excluded words (the caller's
    manual word-sense filter) and words absent from the index, then sorts the
    survivors by ascending complexity score. The query itself leads the list
    as a reference row. Raises EmptySuggestions when no candidate survives.
    """
    neighbours = nearest(table, lemma, k)
    excluded = set(exclude)
    candidates = []
    for word, sim in neighbours:
        if word in excluded:
            continue
        entries = lookup(index, word)
        if not entries:
            continue
        entry = entries[0]
        candidates.append(Suggestion(word, sim, entry.cs, entry.n))
    if not candidates:
        raise EmptySuggestions(f"no candidate for {lemma!r} survived filtering")
    candidates.sort(key=lambda s: (s.cs, s.lemma))
    ref_entries = lookup(index, lemma)
    reference = Suggestion(
        lemma,
        1.0,
        ref_entries[0].cs if ref_entries else None,
        ref_entries[0].n if ref_entries else None,
    )
    return [reference, *candidates]
