"""Shared fixtures: a small hand-built index/vector pair used by the
suggestion, CLI and service tests, plus a constructed index for the
frequency-correlation analyses."""

import random

import pytest

from lexcomp.corpus import Pos
from lexcomp.embeddings import EmbeddingTable
from lexcomp.lexindex import LemmaEntry, LexIndex, complexity_score


def entry(lemma: str, pos: Pos, n: int, median_lix: float, m: int) -> LemmaEntry:
    return LemmaEntry(
        lemma=lemma,
        pos=pos,
        doc_ids=frozenset(),
        n=n,
        median_lix=median_lix,
        cs=complexity_score(median_lix, n, m),
    )


def make_suggest_index() -> LexIndex:
    """Six entries, m=10; medføre's neighbours bety/resultere straddle it in cs."""
    m = 10
    entries = {}
    for e in (
        entry("bety", Pos.VERB, 9, 30.0, m),        # cs 3.0
        entry("resultere", Pos.VERB, 2, 40.0, m),   # cs 32.0
        entry("medføre", Pos.VERB, 4, 42.0, m),     # cs 25.2
        entry("lys", Pos.NOUN, 5, 44.0, m),         # cs 22.0
        entry("lys", Pos.ADJ, 3, 38.0, m),          # cs 26.6
        entry("hus", Pos.NOUN, 8, 25.0, m),         # cs 5.0
    ):
        entries[(e.lemma, e.pos)] = e
    return LexIndex(m=m, entries=entries, corpus_labels=["news", "children"])


VECTOR_LINES = [
    "5 3",
    "medføre 1.0 0.0 0.0",
    "bety 0.9 0.1 0.0",
    "resultere 0.8 0.2 0.0",
    "utenfor 0.0 1.0 0.0",
    "nullvec 0.0 0.0 0.0",
]


def make_suggest_table() -> EmbeddingTable:
    vocab = {}
    for line in VECTOR_LINES[1:]:
        parts = line.split()
        vocab[parts[0]] = tuple(float(p) for p in parts[1:])
    return EmbeddingTable(dim=3, vocab=vocab)


def make_analysis_index(
    seed: int = 7, m: int = 2000, n_high: int = 200, n_low: int = 1200
) -> LexIndex:
    """Constructed index for the frequency analyses.

    High-frequency entries get their cs from the discount formula with a
    narrow median distribution, so cs is driven by (1 - n/m). Low-frequency
    entries draw cs independently of n.
    """
    rng = random.Random(seed)
    poses = [Pos.NOUN, Pos.VERB, Pos.ADJ, Pos.ADV]
    used: set[str] = set()

    def word() -> str:
        while True:
            w = "".join(
                rng.choice("abdefghiklmnoprstuv") for _ in range(rng.randint(4, 10))
            )
            if w not in used:
                used.add(w)
                return w

    entries = {}
    for _ in range(n_high):
        n = rng.randint(int(m * 0.05) + 1, int(m * 0.95))
        med = rng.gauss(40.0, 3.0)
        e = entry(word(), rng.choice(poses), n, med, m)
        entries[(e.lemma, e.pos)] = e
    for _ in range(n_low):
        n = rng.randint(1, int(m * 0.05))
        cs = rng.uniform(10.0, 60.0)
        med = cs / (1 - n / m)
        lemma, pos = word(), rng.choice(poses)
        entries[(lemma, pos)] = LemmaEntry(lemma, pos, frozenset(), n, med, cs)
    return LexIndex(m=m, entries=entries, corpus_labels=["synthetic"])


@pytest.fixture
def suggest_index() -> LexIndex:
    return make_suggest_index()


@pytest.fixture
def suggest_table() -> EmbeddingTable:
    return make_suggest_table()


@pytest.fixture
def vectors_file(tmp_path):
    path = tmp_path / "vectors.txt"
    path.write_text("\n".join(VECTOR_LINES) + "\n", encoding="utf-8")
    return path


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    outcomes: dict[str, str] = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance" not in nodeid:
                continue
            name = nodeid.split("::")[-1]
            if status == "passed" and getattr(report, "when", "call") != "call":
                continue
            if outcomes.get(name) != "FAIL":
                outcomes[name] = "PASS" if status == "passed" else "FAIL"
    if outcomes:
        terminalreporter.write_sep("=", "acceptance criteria")
        for name in sorted(outcomes):
            terminalreporter.write_line(f"{outcomes[name]}: {name}")
