"""Document-level readability scores: LIX, Coleman-Liau, and the LIX band scale.

All arithmetic is done in double precision; rounding happens only at display
time, never here.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

from .errors import InvalidCounts


@functools.total_ordering
@enum.unique
class LixBand(enum.Enum):
    """Five-step readability scale anchored at the classic LIX reference points.

    The reference points (20/30/40/50/60) describe band centers, not edges;
    scores are assigned to the band whose reference point is nearest, i.e.
    boundaries sit at the midpoints 25/35/45/55.
    """

    VERY_EASY = ("VeryEasy", 20.0)
    EASY = ("Easy", 30.0)
    MEDIUM = ("Medium", 40.0)
    DIFFICULT = ("Difficult", 50.0)
    VERY_DIFFICULT = ("VeryDifficult", 60.0)

    def __init__(self, label: str, threshold: float):
        self.label = label
        self.threshold = threshold

    def __lt__(self, other: "LixBand") -> bool:
        if not isinstance(other, LixBand):
            return NotImplemented
        return self.threshold < other.threshold


_BAND_UPPER_BOUNDS = (
    (25.0, LixBand.VERY_EASY),
    (35.0, LixBand.EASY),
    (45.0, LixBand.MEDIUM),
    (55.0, LixBand.DIFFICULT),
)


@dataclass(frozen=True, slots=True)
class CliInputs:
    """Per-100-word averages feeding the Coleman-Liau formula."""

    letters_per_100_words: float
    sentences_per_100_words: float


def lix(tokens: int, sentences: int, long_words: int) -> float:
    """Readability as mean sentence length plus the percentage of long words.

    ``tokens/sentences + 100*long_words/tokens``, where a long word has more
    than six letters.
    """
    if tokens < 1 or sentences < 1:
        raise InvalidCounts(
            f"need tokens >= 1 and sentences >= 1, got {tokens} and {sentences}"
        )
    if not 0 <= long_words <= tokens:
        raise InvalidCounts(f"long_words {long_words} outside [0, {tokens}]")
    return tokens / sentences + long_words * 100 / tokens


def coleman_liau(letters_per_100: float, sentences_per_100: float) -> float:
    """Coleman-Liau index: ``0.0588*L - 0.296*S - 15.8``."""
    if sentences_per_100 <= 0:
        raise InvalidCounts(f"sentences per 100 words must be > 0, got {sentences_per_100}")
    return 0.0588 * letters_per_100 - 0.296 * sentences_per_100 - 15.8


def cli_inputs(tokens: int, sentences: int, letters: int) -> CliInputs:
    """Scale raw counts to the per-100-word averages Coleman-Liau expects."""
    if tokens < 1:
        raise InvalidCounts(f"need tokens >= 1, got {tokens}")
    return CliInputs(
        letters_per_100_words=100 * letters / tokens,
        sentences_per_100_words=100 * sentences / tokens,
    )


def lix_band(score: float) -> LixBand:
    """Map a LIX score to its readability band."""
    if not math.isfinite(score):
        raise InvalidCounts(f"LIX score must be finite, got {score!r}")
    for upper, band in _BAND_UPPER_BOUNDS:
        if score < upper:
            return band
    return LixBand.VERY_DIFFICULT
