import random

import pytest

from lexcomp.corpus import Pos, Token, make_document
from lexcomp.errors import EmptyIndex, InvalidCounts, InvariantViolation, ParseError
from lexcomp.lexindex import (
    LemmaEntry,
    LexIndex,
    build_index,
    complexity_score,
    export_aggregates,
    frequency_partition,
    import_aggregates,
    lookup,
    median,
)

FILLER = Token.make("og", "og", Pos.OTHER)


def doc_with(doc_id, label, lix_target, content=()):
    """One-sentence document whose LIX equals its token count.

    All filler tokens are short OTHER words, so ``LIX = tokens/1 + 0``.
    ``content`` lists (surface, pos) content words placed at the front.
    """
    tokens = [Token.make(surface, surface.lower(), pos) for surface, pos in content]
    tokens += [FILLER] * (lix_target - len(tokens))
    assert len(tokens) == lix_target
    return make_document(doc_id, label, [tokens])


class TestMedian:
    def test_odd_length(self):
        assert median([3.0, 1.0, 2.0]) == 2.0

    def test_even_length_mean_of_middles(self):
        assert median([1.0, 2.0, 3.0, 4.0]) == 2.5

    def test_singleton(self):
        assert median([7.0]) == 7.0

    def test_empty_raises(self):
        with pytest.raises(ValueError):
            median([])


class TestComplexityScore:
    def test_full_presence_is_zero(self):
        for m in (1, 3, 10, 1000):
            assert complexity_score(40.0, m, m) == 0.0

    def test_hand_computed(self):
        assert complexity_score(40.0, 1, 10) == 36.0
        assert complexity_score(50.0, 5, 10) == 25.0

    @pytest.mark.parametrize("n,m", [(0, 10), (11, 10), (-1, 5)])
    def test_invalid_counts(self, n, m):
        with pytest.raises(InvalidCounts):
            complexity_score(40.0, n, m)

    def test_negative_median_rejected(self):
        with pytest.raises(InvalidCounts):
            complexity_score(-1.0, 1, 2)

    def test_strictly_decreasing_in_n(self):
        previous = None
        for n in range(1, 101):
            cs = complexity_score(50.0, n, 100)
            if previous is not None:
                assert cs < previous
            previous = cs


class TestBuildIndex:
    def test_within_document_repeats_count_once(self):
        doc = make_document(
            "d1", "x", [[Token.make("hus", "hus", Pos.NOUN)] * 5 + [FILLER] * 5]
        )
        index = build_index([doc])
        assert index.entries[("hus", Pos.NOUN)].n == 1

    def test_full_presence_forces_zero_cs(self):
        docs = [
            doc_with(f"d{i}", "x", target, content=[("hus", Pos.NOUN)])
            for i, target in enumerate([20, 40, 60])
        ]
        index = build_index(docs)
        e = index.entries[("hus", Pos.NOUN)]
        assert (e.n, index.m) == (3, 3)
        assert e.median_lix == 40.0
        assert e.cs == 0.0

    def test_single_presence_discount(self):
        docs = [doc_with("d0", "x", 40, content=[("unik", Pos.NOUN)])]
        docs += [doc_with(f"d{i}", "x", 30) for i in range(1, 10)]
        # the nine filler-only documents need some content word for realism
        docs.append(doc_with("d10", "x", 25, content=[("vanlig", Pos.ADJ)]))
        index = build_index(docs)
        e = index.entries[("unik", Pos.NOUN)]
        assert index.m == 11
        assert e.n == 1
        assert e.median_lix == 40.0
        assert e.cs == pytest.approx(40.0 * (1 - 1 / 11), abs=1e-15)

    def test_other_pos_excluded(self):
        doc = make_document(
            "d", "x", [[Token.make("og", "og", Pos.OTHER), Token.make("hus", "hus", Pos.NOUN)]]
        )
        index = build_index([doc])
        assert set(index.entries) == {("hus", Pos.NOUN)}

    def test_no_content_words_raises(self):
        doc = make_document("d", "x", [[FILLER, FILLER]])
        with pytest.raises(EmptyIndex):
            build_index([doc])

    def test_duplicate_doc_id_rejected(self):
        docs = [
            doc_with("same", "x", 20, content=[("hus", Pos.NOUN)]),
            doc_with("same", "x", 30, content=[("hus", Pos.NOUN)]),
        ]
        with pytest.raises(InvariantViolation):
            build_index(docs)

    def test_median_recomputable_from_doc_ids(self):
        rng = random.Random(3)
        docs = []
        for i in range(20):
            content = [("hus", Pos.NOUN)] if rng.random() < 0.5 else [("bil", Pos.NOUN)]
            docs.append(doc_with(f"d{i}", "x", rng.randint(10, 60), content=content))
        index = build_index(docs)
        lix_by_doc = {d.doc_id: d.stats.lix for d in docs}
        for entry in index.entries.values():
            values = [lix_by_doc[i] for i in entry.doc_ids]
            assert median(values) == entry.median_lix
            assert entry.n == len(entry.doc_ids)

    def test_order_independent(self, tmp_path):
        rng = random.Random(4)
        docs = [
            doc_with(f"d{i}", rng.choice("ab"), rng.randint(10, 60),
                     content=[(rng.choice(["hus", "bil", "fin"]), rng.choice([Pos.NOUN, Pos.ADJ]))])
            for i in range(30)
        ]
        index_a = build_index(docs)
        shuffled = docs[:]
        rng.shuffle(shuffled)
        index_b = build_index(shuffled)
        path_a, path_b = tmp_path / "a.tsv", tmp_path / "b.tsv"
        export_aggregates(index_a, path_a)
        export_aggregates(index_b, path_b)
        assert path_a.read_bytes() == path_b.read_bytes()

    def test_corpus_labels_sorted_unique(self):
        docs = [
            doc_with("d1", "news", 20, content=[("hus", Pos.NOUN)]),
            doc_with("d2", "children", 25, content=[("hus", Pos.NOUN)]),
            doc_with("d3", "news", 30, content=[("hus", Pos.NOUN)]),
        ]
        assert build_index(docs).corpus_labels == ["children", "news"]

    def test_rare_word_in_easy_texts_scores_below_spread_word(self):
        # a lemma confined to easy documents undercuts one that also appears
        # in hard documents, even though both are "easy" words
        docs = [
            doc_with("e1", "children", 19, content=[("undulat", Pos.NOUN), ("fugl", Pos.NOUN)]),
            doc_with("e2", "children", 20, content=[("undulat", Pos.NOUN), ("fugl", Pos.NOUN)]),
            doc_with("h1", "news", 45, content=[("fugl", Pos.NOUN)]),
            doc_with("h2", "news", 50, content=[("fugl", Pos.NOUN)]),
        ]
        docs += [doc_with(f"p{i}", "news", 40, content=[("sak", Pos.NOUN)]) for i in range(6)]
        index = build_index(docs)
        confined = index.entries[("undulat", Pos.NOUN)]
        spread = index.entries[("fugl", Pos.NOUN)]
        assert confined.cs < spread.cs


class TestLookup:
    def test_pos_restriction(self, suggest_index):
        both = lookup(suggest_index, "lys")
        assert {e.pos for e in both} == {Pos.NOUN, Pos.ADJ}
        only = lookup(suggest_index, "lys", Pos.ADJ)
        assert len(only) == 1 and only[0].pos is Pos.ADJ

    def test_case_folded(self, suggest_index):
        assert lookup(suggest_index, "HUS")[0].lemma == "hus"

    def test_unknown_returns_empty(self, suggest_index):
        assert lookup(suggest_index, "finnesikke") == []

    def test_known_lemma_has_cs(self, suggest_index):
        (e,) = lookup(suggest_index, "bety")
        assert e.cs == pytest.approx(3.0)


class TestFrequencyPartition:
    def make_index(self, ns, m=100):
        entries = {}
        for i, n in enumerate(ns):
            lemma = f"w{i:03d}"
            entries[(lemma, Pos.NOUN)] = LemmaEntry(
                lemma, Pos.NOUN, frozenset(), n, 40.0, 40.0 * (1 - n / m)
            )
        return LexIndex(m=m, entries=entries, corpus_labels=["x"])

    def test_boundary_goes_low(self):
        index = self.make_index([6, 5, 1])
        high, low = frequency_partition(index, 0.05)
        assert [e.n for e in high] == [6]
        assert sorted(e.n for e in low) == [1, 5]

    def test_zero_threshold_puts_all_high(self):
        index = self.make_index([1, 2, 3])
        high, low = frequency_partition(index, 0.0)
        assert len(high) == 3 and not low


class TestAggregatesFile:
    def test_round_trip_bit_identical(self, tmp_path, suggest_index):
        first = tmp_path / "first.tsv"
        second = tmp_path / "second.tsv"
        export_aggregates(suggest_index, first)
        loaded = import_aggregates(first)
        assert loaded.m == suggest_index.m
        assert loaded.corpus_labels == suggest_index.corpus_labels
        for key, entry in suggest_index.entries.items():
            again = loaded.entries[key]
            assert again.cs == entry.cs
            assert again.median_lix == entry.median_lix
            assert again.n == entry.n
        export_aggregates(loaded, second)
        assert first.read_bytes() == second.read_bytes()

    def test_file_shape(self, tmp_path):
        entries = {
            ("hus", Pos.NOUN): LemmaEntry("hus", Pos.NOUN, frozenset(), 2, 30.0, 15.0),
            ("gå", Pos.VERB): LemmaEntry("gå", Pos.VERB, frozenset(), 1, 20.0, 15.0),
        }
        index = LexIndex(m=4, entries=entries, corpus_labels=["a", "b"])
        path = tmp_path / "x.tsv"
        export_aggregates(index, path)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "#m=4\tcorpora=a,b"
        assert len(lines) == 3
        assert lines[1].startswith("gå\tVERB\t1\t")  # lemma-ascending order

    def test_import_rejects_n_greater_than_m(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("#m=3\tcorpora=x\nhus\tNOUN\t4\t30.0\t10.0\n", encoding="utf-8")
        with pytest.raises(InvariantViolation):
            import_aggregates(path)

    def test_import_rejects_bad_header(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("m=3 corpora=x\n", encoding="utf-8")
        with pytest.raises(ParseError):
            import_aggregates(path)

    def test_import_rejects_non_content_pos(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("#m=3\tcorpora=x\nog\tOTHER\t1\t30.0\t10.0\n", encoding="utf-8")
        with pytest.raises(InvariantViolation):
            import_aggregates(path)
