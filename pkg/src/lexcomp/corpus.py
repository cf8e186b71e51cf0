"""Corpus ingestion: plain text and CoNLL-U, with per-document readability stats.

Documents are immutable after construction and safe to share across threads.
The plain-text path is a deliberately simple fallback for corpora without
annotations: sentences split on terminal punctuation, tokens on whitespace,
lemma = lowercased surface, part of speech unknown.
"""

from __future__ import annotations

import enum
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from . import metrics
from .errors import EmptyDocument, ParseError

log = logging.getLogger(__name__)


class Pos(enum.Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    ADJ = "ADJ"
    ADV = "ADV"
    OTHER = "OTHER"


#: The part-of-speech classes scored as content words.
CONTENT_POS = frozenset({Pos.NOUN, Pos.VERB, Pos.ADJ, Pos.ADV})

# AUX folds into VERB so modal-like verbs stay scoreable; everything else
# (pronouns, adpositions, proper nouns, punctuation, ...) is OTHER.
_UPOS_MAP = {
    "NOUN": Pos.NOUN,
    "VERB": Pos.VERB,
    "AUX": Pos.VERB,
    "ADJ": Pos.ADJ,
    "ADV": Pos.ADV,
}

# Terminal punctuation sequences end a sentence only before whitespace or
# end of input, so abbreviations mid-token never split.
_SENTENCE_END = re.compile(r"[.!?]+(?:\s+|$)")

_NEWDOC = re.compile(r"#\s*newdoc\s+id\s*=\s*(\S.*?)\s*$")


def letter_count(text: str) -> int:
    """Number of alphabetic characters; digits and punctuation never count."""
    return sum(1 for ch in text if ch.isalpha())


def map_upos(upos: str) -> Pos:
    """Coarsen a Universal Dependencies PoS tag to the scored classes."""
    return _UPOS_MAP.get(upos, Pos.OTHER)


@dataclass(frozen=True, slots=True)
class Token:
    surface: str
    lemma: str
    pos: Pos
    letter_count: int

    @classmethod
    def make(cls, surface: str, lemma: str, pos: Pos) -> "Token":
        return cls(surface, lemma, pos, letter_count(surface))


@dataclass(frozen=True, slots=True)
class DocumentStats:
    """Counts behind the readability formulas for one document.

    ``long_word_count`` is the number of tokens with more than six letters.
    """

    token_count: int
    sentence_count: int
    long_word_count: int
    letters: int
    lix: float
    cli: float


@dataclass(frozen=True, slots=True)
class Document:
    doc_id: str
    corpus_label: str
    sentences: tuple[tuple[Token, ...], ...]
    stats: DocumentStats


def _stats_from_sentences(sentences: Sequence[Sequence[Token]]) -> DocumentStats:
    tokens = [t for s in sentences for t in s]
    token_count = len(tokens)
    sentence_count = len(sentences)
    long_words = sum(1 for t in tokens if t.letter_count > 6)
    letters = sum(t.letter_count for t in tokens)
    inputs = metrics.cli_inputs(token_count, sentence_count, letters)
    return DocumentStats(
        token_count=token_count,
        sentence_count=sentence_count,
        long_word_count=long_words,
        letters=letters,
        lix=metrics.lix(token_count, sentence_count, long_words),
        cli=metrics.coleman_liau(inputs.letters_per_100_words, inputs.sentences_per_100_words),
    )


def compute_stats(doc: Document) -> DocumentStats:
    """Recompute stats from the sentences; bit-identical to the stored value."""
    return _stats_from_sentences(doc.sentences)


def make_document(
    doc_id: str, corpus_label: str, sentences: Sequence[Sequence[Token]]
) -> Document:
    """Assemble a Document, rejecting anything without an alphabetic token."""
    sents = tuple(tuple(s) for s in sentences if s)
    if not any(t.letter_count > 0 for s in sents for t in s):
        raise EmptyDocument(f"{doc_id}: no token with at least one letter")
    return Document(doc_id, corpus_label, sents, _stats_from_sentences(sents))


def _strip_punct(raw: str) -> str:
    """Strip leading/trailing non-alphanumerics; internal hyphens etc. stay."""
    start, end = 0, len(raw)
    while start < end and not raw[start].isalnum():
        start += 1
    while end > start and not raw[end - 1].isalnum():
        end -= 1
    return raw[start:end]


def ingest_plain(text: str, doc_id: str, corpus_label: str) -> Document:
    """Ingest raw text as one document via the fallback tokenizer.

    Digits-only tokens count toward the token total but can never be long
    words. Raises EmptyDocument when no token with a letter survives.
    """
    if not text.strip():
        raise EmptyDocument(f"{doc_id}: empty text")
    sentences = []
    for chunk in _SENTENCE_END.split(text):
        tokens = []
        for raw in chunk.split():
            surface = _strip_punct(raw)
            if surface:
                tokens.append(Token.make(surface, surface.lower(), Pos.OTHER))
        if tokens:
            sentences.append(tokens)
    return make_document(doc_id, corpus_label, sentences)


def to_plain_text(doc: Document) -> str:
    """Render a document back to plain text, one period per sentence."""
    return " ".join(" ".join(t.surface for t in s) + "." for s in doc.sentences)


def ingest_conllu(lines: Iterable[str], corpus_label: str) -> list[Document]:
    """Parse a CoNLL-U stream into documents.

    Documents begin at ``# newdoc id = X`` markers; a blank line ends a
    sentence. Only the ID/FORM/LEMMA/UPOS columns are consulted. Multiword
    range lines (ID ``1-2``) and empty nodes (ID ``1.1``) contribute no
    tokens. Documents without an alphabetic token are skipped with a warning,
    while malformed lines raise ParseError with their line number.
    """
    docs: list[Document] = []
    doc_id: str | None = None
    sentences: list[list[Token]] = []
    current: list[Token] = []

    def finish_sentence() -> None:
        nonlocal current
        if current:
            sentences.append(current)
            current = []

    def finish_document() -> None:
        nonlocal sentences
        finish_sentence()
        if doc_id is not None:
            try:
                docs.append(make_document(doc_id, corpus_label, sentences))
            except EmptyDocument:
                log.warning("document %r has no alphabetic token, skipped", doc_id)
        sentences = []

    line_no = 0
    for line_no, line in enumerate(lines, start=1):
        line = line.rstrip("\n")
        if not line.strip():
            finish_sentence()
            continue
        if line.startswith("#"):
            marker = _NEWDOC.match(line)
            if marker:
                finish_document()
                doc_id = marker.group(1)
            continue
        if doc_id is None:
            raise ParseError(line_no, "token line before any '# newdoc id =' marker")
        fields = line.split("\t")
        if len(fields) < 4:
            raise ParseError(
                line_no, f"expected ID/FORM/LEMMA/UPOS columns, got {len(fields)} fields"
            )
        token_id, form, lemma, upos = fields[0], fields[1], fields[2], fields[3]
        if "-" in token_id:
            continue  # multiword range line; the word parts follow
        if "." in token_id:
            continue  # empty node, not a surface token
        if not token_id.isdigit():
            raise ParseError(line_no, f"bad token id {token_id!r}")
        if not form:
            raise ParseError(line_no, "empty FORM column")
        if not lemma:
            raise ParseError(line_no, "empty LEMMA column")
        if lemma == "_":
            lemma = form
        current.append(Token.make(form, lemma.lower(), map_upos(upos)))
    finish_document()
    return docs


@dataclass(frozen=True, slots=True)
class ManifestEntry:
    path: Path
    corpus_label: str
    format: str  # "plain" | "conllu"
    source: str  # path exactly as written in the manifest; doc id for plain files


def read_manifest(path: str | Path) -> list[ManifestEntry]:
    """Read a corpus manifest: ``path<TAB>corpus_label<TAB>format`` per line.

    Relative paths resolve against the manifest's directory.
    """
    manifest_path = Path(path)
    base = manifest_path.parent
    entries = []
    with open(manifest_path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.rstrip("\n").split("\t")
            if len(fields) != 3:
                raise ParseError(line_no, f"expected 3 tab-separated fields, got {len(fields)}")
            rel, label, fmt = fields
            if fmt not in ("plain", "conllu"):
                raise ParseError(line_no, f"unknown format {fmt!r} (expected plain|conllu)")
            entry_path = Path(rel)
            if not entry_path.is_absolute():
                entry_path = base / entry_path
            entries.append(ManifestEntry(entry_path, label, fmt, rel))
    return entries


def ingest_manifest(path: str | Path) -> list[Document]:
    """Ingest every file listed in a manifest, in manifest order."""
    docs: list[Document] = []
    for entry in read_manifest(path):
        if entry.format == "plain":
            text = entry.path.read_text(encoding="utf-8")
            docs.append(ingest_plain(text, entry.source, entry.corpus_label))
        else:
            with open(entry.path, encoding="utf-8") as fh:
                docs.extend(ingest_conllu(fh, entry.corpus_label))
    return docs
