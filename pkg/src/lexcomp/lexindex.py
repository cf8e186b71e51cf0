"""Inverted lemma index over all corpora, with per-lemma complexity scores.

A lemma's complexity score is the median LIX of the documents it occurs in,
discounted by its document-frequency share: ``median_lix * (1 - n/m)``.
Within-document frequency is deliberately ignored — a document either
contains a lemma or it does not — so domain-heavy terms cannot inflate the
aggregates. Only content words (nouns, verbs, adjectives, adverbs) are
indexed, keyed by (lemma, pos).
"""

from __future__ import annotations

import math
import re
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .corpus import CONTENT_POS, Document, Pos
from .errors import EmptyIndex, InvalidCounts, InvariantViolation, ParseError

#: Deterministic iteration order for content PoS (alphabetical by name).
POS_ORDER = tuple(sorted(CONTENT_POS, key=lambda p: p.name))

_HEADER = re.compile(r"#m=(\d+)\tcorpora=(.*)$")


@dataclass(frozen=True, slots=True)
class LemmaEntry:
    lemma: str
    pos: Pos
    doc_ids: frozenset[str]  # empty for entries read back from an aggregates file
    n: int
    median_lix: float
    cs: float


@dataclass(slots=True)
class LexIndex:
    """Built index; treat as immutable after construction."""

    m: int
    entries: dict[tuple[str, Pos], LemmaEntry]
    corpus_labels: list[str]


def median(values: Sequence[float]) -> float:
    """Middle value; mean of the two middle values for even-length input."""
    if not values:
        raise ValueError("median of empty sequence")
    ordered = sorted(values)
    mid = len(ordered) // 2
    if len(ordered) % 2:
        return ordered[mid]
    return (ordered[mid - 1] + ordered[mid]) / 2


def complexity_score(median_lix: float, n: int, m: int) -> float:
    """Discount a median document LIX by the lemma's document-frequency share."""
    if not 1 <= n <= m:
        raise InvalidCounts(f"need 1 <= n <= m, got n={n}, m={m}")
    if not math.isfinite(median_lix) or median_lix < 0:
        raise InvalidCounts(f"median LIX must be finite and >= 0, got {median_lix!r}")
    return median_lix * (1 - n / m)


def build_index(docs: Sequence[Document]) -> LexIndex:
    """Index every content-word lemma by the set of documents containing it.

    Deterministic and independent of document order: presence is a set, the
    median is order-free, and entries are stored in sorted key order.
    """
    if not docs:
        raise ValueError("no documents to index")
    lix_by_doc: dict[str, float] = {}
    for doc in docs:
        if doc.doc_id in lix_by_doc:
            raise InvariantViolation(f"duplicate document id {doc.doc_id!r}")
        lix_by_doc[doc.doc_id] = doc.stats.lix
    presence: dict[tuple[str, Pos], set[str]] = defaultdict(set)
    for doc in docs:
        for sentence in doc.sentences:
            for token in sentence:
                if token.pos in CONTENT_POS:
                    presence[(token.lemma.lower(), token.pos)].add(doc.doc_id)
    if not presence:
        raise EmptyIndex("no content-word token in any document")
    m = len(docs)
    entries: dict[tuple[str, Pos], LemmaEntry] = {}
    for key in sorted(presence, key=lambda k: (k[0], k[1].name)):
        lemma, pos = key
        doc_ids = frozenset(presence[key])
        med = median([lix_by_doc[i] for i in doc_ids])
        entries[key] = LemmaEntry(
            lemma=lemma,
            pos=pos,
            doc_ids=doc_ids,
            n=len(doc_ids),
            median_lix=med,
            cs=complexity_score(med, len(doc_ids), m),
        )
    labels = sorted({doc.corpus_label for doc in docs})
    return LexIndex(m=m, entries=entries, corpus_labels=labels)


def lookup(index: LexIndex, lemma: str, pos: Pos | None = None) -> list[LemmaEntry]:
    """All entries for a case-folded lemma, optionally restricted to one PoS."""
    key_lemma = lemma.lower()
    poses = (pos,) if pos is not None else POS_ORDER
    return [
        index.entries[(key_lemma, p)] for p in poses if (key_lemma, p) in index.entries
    ]


def frequency_partition(
    index: LexIndex, threshold: float = 0.05
) -> tuple[list[LemmaEntry], list[LemmaEntry]]:
    """Split entries into (high, low) document-frequency groups.

    An entry is high-frequency when ``n/m > threshold``; the boundary value
    itself goes low.
    """
    high: list[LemmaEntry] = []
    low: list[LemmaEntry] = []
    for key in sorted(index.entries, key=lambda k: (k[0], k[1].name)):
        entry = index.entries[key]
        (high if entry.n / index.m > threshold else low).append(entry)
    return high, low


def export_aggregates(index: LexIndex, path: str | Path) -> None:
    """Write aggregated statistics only — no raw text, no per-document data.

    Format: one header line ``#m=<int>\\tcorpora=<comma-list>`` followed by
    ``lemma\\tpos\\tn\\tmedian_lix\\tcs`` records sorted by (lemma, pos), with
    reals at full shortest-round-trip precision.
    """
    for label in index.corpus_labels:
        if "," in label or "\t" in label or "\n" in label:
            raise ValueError(f"corpus label {label!r} cannot contain comma/tab/newline")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"#m={index.m}\tcorpora={','.join(index.corpus_labels)}\n")
        for key in sorted(index.entries, key=lambda k: (k[0], k[1].name)):
            e = index.entries[key]
            fh.write(f"{e.lemma}\t{e.pos.name}\t{e.n}\t{e.median_lix!r}\t{e.cs!r}\n")


def import_aggregates(path: str | Path) -> LexIndex:
    """Read an aggregates file back; document id sets are not recoverable."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        match = _HEADER.match(header)
        if not match:
            raise ParseError(1, "expected header '#m=<int>\\tcorpora=<comma-list>'")
        m = int(match.group(1))
        labels = [s for s in match.group(2).split(",") if s]
        entries: dict[tuple[str, Pos], LemmaEntry] = {}
        for line_no, line in enumerate(fh, start=2):
            if not line.strip():
                continue
            fields = line.rstrip("\n").split("\t")
            if len(fields) != 5:
                raise ParseError(line_no, f"expected 5 fields, got {len(fields)}")
            lemma, pos_name, n_str, med_str, cs_str = fields
            try:
                pos = Pos[pos_name]
            except KeyError:
                raise ParseError(line_no, f"unknown PoS {pos_name!r}") from None
            if pos not in CONTENT_POS:
                raise InvariantViolation(f"line {line_no}: non-content PoS {pos_name}")
            try:
                n = int(n_str)
                med = float(med_str)
                cs = float(cs_str)
            except ValueError as exc:
                raise ParseError(line_no, f"bad numeric field: {exc}") from None
            if n < 1:
                raise InvariantViolation(f"line {line_no}: document frequency {n} < 1")
            if n > m:
                raise InvariantViolation(f"line {line_no}: n={n} exceeds m={m}")
            key = (lemma, pos)
            if key in entries:
                raise InvariantViolation(f"line {line_no}: duplicate entry {lemma}/{pos_name}")
            entries[key] = LemmaEntry(lemma, pos, frozenset(), n, med, cs)
    return LexIndex(m=m, entries=entries, corpus_labels=labels)
