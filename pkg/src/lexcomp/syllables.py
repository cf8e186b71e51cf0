"""Rule-based syllable counting for Norwegian orthography.

A syllable nucleus is a vowel group: configured diphthongs count as a single
nucleus (greedy longest match, scanning left to right) and every remaining
vowel character is its own nucleus. Non-letters break vowel runs, and a
string without any vowel counts zero syllables — zero marks non-word input
rather than an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import ParseError

#: Norwegian vowel letters, both cases.
DEFAULT_VOWELS = frozenset("aeiouyæøåAEIOUYÆØÅ")

#: The six common Norwegian diphthongs; override for Nynorsk variants.
DEFAULT_DIPHTHONGS = frozenset({"ei", "au", "øy", "ai", "oi", "ou"})


@dataclass(frozen=True)
class SyllableRuleSet:
    vowels: frozenset[str] = DEFAULT_VOWELS
    diphthongs: frozenset[str] = DEFAULT_DIPHTHONGS

    def __post_init__(self):
        folded = {v.lower() for v in self.vowels}
        for d in self.diphthongs:
            if len(d) != 2 or any(ch not in folded for ch in d.lower()):
                raise ValueError(f"diphthong {d!r} must be two configured vowel characters")


DEFAULT_RULES = SyllableRuleSet()


def count_syllables(word: str, rules: SyllableRuleSet = DEFAULT_RULES) -> int:
    """Count syllable nuclei in a word, case-insensitively."""
    w = word.lower()
    vowels = {v.lower() for v in rules.vowels}
    diphthongs = {d.lower() for d in rules.diphthongs}
    count = 0
    i = 0
    while i < len(w):
        if w[i] in vowels:
            count += 1
            i += 2 if w[i : i + 2] in diphthongs else 1
        else:
            i += 1
    return count


def evaluate_counter(
    lexicon: list[tuple[str, int]], rules: SyllableRuleSet = DEFAULT_RULES
) -> float:
    """Exact-match accuracy of the counter against gold syllable counts."""
    if not lexicon:
        raise ValueError("lexicon must be non-empty")
    hits = sum(1 for word, gold in lexicon if count_syllables(word, rules) == gold)
    return hits / len(lexicon)


def load_lexicon(path: str | Path) -> list[tuple[str, int]]:
    """Read a ``word<TAB>count`` lexicon file."""
    entries = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.rstrip("\n").split("\t")
            if len(fields) != 2:
                raise ParseError(line_no, f"expected 'word<TAB>count', got {len(fields)} fields")
            try:
                entries.append((fields[0], int(fields[1])))
            except ValueError:
                raise ParseError(line_no, f"bad count {fields[1]!r}") from None
    return entries


def bundled_lexicon() -> list[tuple[str, int]]:
    """The packaged 50-word Bokmål lexicon with hand-marked vowel groups."""
    ref = resources.files("lexcomp.data").joinpath("syllable_lexicon.tsv")
    with resources.as_file(ref) as path:
        return load_lexicon(path)
