"""Figure rendering for the CLI report paths.

Every function writes a PNG next to the delimited output and returns the
path. Rendering is headless (Agg backend) and side-effect free beyond the
written file.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import syllables
from .corpus import letter_count
from .lexindex import LexIndex, frequency_partition

_DPI = 150


def _finish(fig, path: str | Path) -> Path:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=_DPI, bbox_inches="tight")
    plt.close(fig)
    return out


def save_score_distributions(
    scores_by_label: dict[str, list[float]], path: str | Path, metric: str = "lix"
) -> Path:
    """Overlaid per-corpus histograms of document scores."""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for label in sorted(scores_by_label):
        ax.hist(scores_by_label[label], bins=40, density=True, alpha=0.55, label=label)
    ax.set_xlabel(f"document {metric.upper()} score")
    ax.set_ylabel("density")
    ax.legend()
    ax.set_title(f"Distribution of {metric.upper()} scores per corpus")
    return _finish(fig, path)


def save_ecdf_overlay(
    scores_by_label: dict[str, list[float]], path: str | Path, metric: str = "lix"
) -> Path:
    """Empirical CDFs per corpus; the vertical gaps are the KS statistics."""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for label in sorted(scores_by_label):
        values = sorted(scores_by_label[label])
        n = len(values)
        ax.step(values, [(i + 1) / n for i in range(n)], where="post", label=label)
    ax.set_xlabel(f"document {metric.upper()} score")
    ax.set_ylabel("ECDF")
    ax.legend()
    ax.set_title(f"Empirical CDFs of {metric.upper()} scores")
    return _finish(fig, path)


def save_cs_histogram(index: LexIndex, path: str | Path) -> Path:
    """Distribution of complexity scores over all indexed lemmas."""
    values = [e.cs for e in index.entries.values()]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.hist(values, bins=50, color="tab:blue")
    ax.set_xlabel("complexity score")
    ax.set_ylabel("lemmas")
    ax.set_title(f"Complexity scores for {len(values)} content lemmas")
    return _finish(fig, path)


def save_frequency_scatter(
    index: LexIndex, path: str | Path, threshold: float = 0.05
) -> Path:
    """Complexity vs document-frequency share, split at the threshold."""
    high, low = frequency_partition(index, threshold)
    fig, axes = plt.subplots(1, 2, figsize=(11, 4.5), sharey=True)
    for ax, part, name in ((axes[0], low, "low"), (axes[1], high, "high")):
        ax.scatter([e.n / index.m for e in part], [e.cs for e in part], s=8, alpha=0.4)
        ax.set_title(f"{name}-frequency lemmas (n={len(part)})")
        ax.set_xlabel("document frequency n/m")
    axes[0].set_ylabel("complexity score")
    fig.suptitle(f"Complexity vs frequency (threshold {threshold:g})")
    return _finish(fig, path)


def save_word_feature_scatter(index: LexIndex, path: str | Path) -> Path:
    """Complexity vs word length and vs syllable count."""
    entries = list(index.entries.values())
    cs = [e.cs for e in entries]
    lengths = [letter_count(e.lemma) for e in entries]
    sylls = [syllables.count_syllables(e.lemma) for e in entries]
    fig, axes = plt.subplots(1, 2, figsize=(11, 4.5), sharey=True)
    axes[0].scatter(lengths, cs, s=8, alpha=0.4)
    axes[0].set_xlabel("letters in lemma")
    axes[0].set_ylabel("complexity score")
    axes[1].scatter(sylls, cs, s=8, alpha=0.4, color="tab:orange")
    axes[1].set_xlabel("syllables in lemma")
    fig.suptitle("Complexity vs word-level features")
    return _finish(fig, path)
