"""Command-line frontend: ingest corpora, score documents, validate corpus
separation, build and query the lemma index, run analyses, and serve the API.

All tabular output is TSV on stdout or an ``--out`` file; passing
``--figures DIR`` additionally renders the matching plots as PNG files.
Exit codes: 0 success, 1 I/O or configuration failure, 2 not-found.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from . import embeddings, lexindex, metrics, stats, synth, syllables
from .corpus import Document, Pos, ingest_manifest, letter_count
from .errors import (
    AllFiltered,
    DegenerateSample,
    EmptySuggestions,
    LexcompError,
    UnknownWord,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NOT_FOUND = 2

ENV_INDEX = "LEXCOMP_INDEX"
ENV_VECTORS = "LEXCOMP_VECTORS"
ENV_PORT = "LEXCOMP_PORT"


@dataclass
class RunConfig:
    sigma_k: float = 4.0
    hard_max: float = 100.0
    metric: str = "lix"
    freq_threshold: float = 0.05

    def __post_init__(self):
        if self.sigma_k <= 0:
            raise ValueError(f"sigma_k must be > 0, got {self.sigma_k}")
        if not 0 < self.freq_threshold < 1:
            raise ValueError(f"freq_threshold must be in (0, 1), got {self.freq_threshold}")
        if self.metric not in ("lix", "cli"):
            raise ValueError(f"metric must be lix or cli, got {self.metric!r}")


def _emit(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _metric_value(doc: Document, metric: str) -> float:
    return doc.stats.lix if metric == "lix" else doc.stats.cli


def _group_by_label(docs: list[Document]) -> dict[str, list[Document]]:
    grouped: dict[str, list[Document]] = {}
    for doc in docs:
        grouped.setdefault(doc.corpus_label, []).append(doc)
    return grouped


def _filter_docs(
    grouped: dict[str, list[Document]], cfg: RunConfig
) -> dict[str, list[Document]]:
    """Per-corpus outlier removal on the configured metric, keeping Documents."""
    kept: dict[str, list[Document]] = {}
    for label in sorted(grouped):
        docs = grouped[label]
        values = [_metric_value(d, cfg.metric) for d in docs]
        lo, hi = stats.outlier_bounds(values, cfg.sigma_k)
        survivors = [
            d for d, v in zip(docs, values) if lo <= v <= hi and v <= cfg.hard_max
        ]
        if not survivors:
            raise AllFiltered(f"corpus {label!r}: outlier filter removed every document")
        kept[label] = survivors
    return kept


def cmd_synth(args) -> int:
    manifest = synth.generate_corpus(args.out, args.docs_per_class, args.seed)
    print(manifest)
    return EXIT_OK


def cmd_score(args) -> int:
    cfg = RunConfig(sigma_k=args.sigma_k, hard_max=args.hard_max, metric=args.metric)
    docs = ingest_manifest(args.manifest)
    if not docs:
        print("error: manifest yielded no documents", file=sys.stderr)
        return EXIT_FAILURE
    rows = ["doc_id\tcorpus_label\ttokens\tsentences\tlong_words\tlix\tcli\tband"]
    for d in docs:
        s = d.stats
        band = metrics.lix_band(s.lix).label
        rows.append(
            f"{d.doc_id}\t{d.corpus_label}\t{s.token_count}\t{s.sentence_count}"
            f"\t{s.long_word_count}\t{s.lix:.2f}\t{s.cli:.2f}\t{band}"
        )
    grouped = _group_by_label(docs)
    filtered = _filter_docs(grouped, cfg)
    report = ["corpus_label\tcount\tmean\tstd"]
    for label in sorted(filtered):
        d = stats.describe([_metric_value(doc, cfg.metric) for doc in filtered[label]])
        report.append(f"{label}\t{d.count}\t{d.mean:.2f}\t{d.std:.2f}")
    if args.out:
        _emit(rows, args.out)
        _emit(report, None)
    else:
        _emit(rows + [""] + report, None)
    if args.figures:
        from . import figures

        by_label = {
            label: [_metric_value(d, cfg.metric) for d in filtered[label]]
            for label in filtered
        }
        path = figures.save_score_distributions(
            by_label, Path(args.figures) / f"{cfg.metric}_distributions.png", cfg.metric
        )
        print(f"figure: {path}", file=sys.stderr)
    return EXIT_OK


def cmd_validate(args) -> int:
    cfg = RunConfig(sigma_k=args.sigma_k, hard_max=args.hard_max, metric=args.metric)
    docs = ingest_manifest(args.manifest)
    grouped = _group_by_label(docs)
    if len(grouped) < 2:
        print("error: need at least two corpus labels to validate", file=sys.stderr)
        return EXIT_FAILURE
    for label, group in sorted(grouped.items()):
        if len(group) < 2:
            print(f"error: corpus {label!r} has fewer than 2 documents", file=sys.stderr)
            return EXIT_FAILURE
    filtered = _filter_docs(grouped, cfg)
    values = {
        label: [_metric_value(d, cfg.metric) for d in filtered[label]]
        for label in filtered
    }
    rows = ["corpus_a\tcorpus_b\tstatistic\tp_value\tsignificant_0.01"]
    for a, b in combinations(sorted(values), 2):
        result = stats.ks_two_sample(values[a], values[b])
        flag = "true" if result.p_value < 0.01 else "false"
        rows.append(f"{a}\t{b}\t{result.statistic:.6g}\t{result.p_value:.6g}\t{flag}")
    _emit(rows, args.out)
    if args.figures:
        from . import figures

        path = figures.save_ecdf_overlay(
            values, Path(args.figures) / f"{cfg.metric}_ecdf.png", cfg.metric
        )
        print(f"figure: {path}", file=sys.stderr)
    return EXIT_OK


def cmd_build(args) -> int:
    cfg = RunConfig(sigma_k=args.sigma_k, hard_max=args.hard_max)
    docs = ingest_manifest(args.manifest)
    if not docs:
        print("error: manifest yielded no documents", file=sys.stderr)
        return EXIT_FAILURE
    filtered = _filter_docs(_group_by_label(docs), cfg)
    retained = [d for label in sorted(filtered) for d in filtered[label]]
    index = lexindex.build_index(retained)
    lexindex.export_aggregates(index, args.out)
    print(f"m={index.m}\tentries={len(index.entries)}\tout={args.out}")
    return EXIT_OK


def _format_cs(value: float | None) -> str:
    return "" if value is None else f"{value:.2f}"


def cmd_query(args) -> int:
    index = lexindex.import_aggregates(args.index)
    pos = Pos[args.pos] if args.pos else None
    entries = lexindex.lookup(index, args.lemma, pos)
    lines = ["lemma\tpos\tcs\tn"]
    lines += [f"{e.lemma}\t{e.pos.name}\t{e.cs:.2f}\t{e.n}" for e in entries]
    if args.suggest is None:
        if not entries:
            print(f"error: lemma {args.lemma!r} not in index", file=sys.stderr)
            return EXIT_NOT_FOUND
        _emit(lines, args.out)
        return EXIT_OK
    if not args.vectors:
        print("error: --suggest requires --vectors", file=sys.stderr)
        return EXIT_FAILURE
    table = embeddings.load_vectors(args.vectors)
    exclude = {w for w in (args.exclude or "").split(",") if w}
    try:
        result = embeddings.suggest(index, table, args.lemma, args.suggest, exclude)
    except UnknownWord:
        print(f"error: {args.lemma!r} not in embedding vocabulary", file=sys.stderr)
        return EXIT_NOT_FOUND
    except EmptySuggestions:
        print(f"no suggestion for {args.lemma!r} survived filtering", file=sys.stderr)
        _emit(["lemma\tcosine_similarity\tcs\tn"], args.out)
        return EXIT_OK
    lines = ["lemma\tcosine_similarity\tcs\tn"]
    for s in result:
        n = "" if s.n is None else str(s.n)
        lines.append(f"{s.lemma}\t{s.cosine_similarity:.4f}\t{_format_cs(s.cs)}\t{n}")
    _emit(lines, args.out)
    return EXIT_OK


def _spearman_row(name: str, xs: list[float], ys: list[float]) -> str:
    try:
        r = stats.spearman(xs, ys)
        return f"{name}\t{r.n}\t{r.rho:.4f}\t{r.p_value:.6g}"
    except DegenerateSample:
        return f"{name}\t{len(xs)}\tdegenerate\tdegenerate"


def cmd_analyze(args) -> int:
    cfg = RunConfig(freq_threshold=args.freq_threshold)
    index = lexindex.import_aggregates(args.index)
    high, low = lexindex.frequency_partition(index, cfg.freq_threshold)
    for name, part in (("high", high), ("low", low)):
        if len(part) < 3:
            print(
                f"error: {name}-frequency partition has {len(part)} entries, need >= 3",
                file=sys.stderr,
            )
            return EXIT_FAILURE
    rows = ["analysis\tn\trho\tp_value"]
    rows.append(
        _spearman_row(
            f"cs_vs_frequency_high(n/m>{cfg.freq_threshold:g})",
            [e.cs for e in high],
            [e.n / index.m for e in high],
        )
    )
    rows.append(
        _spearman_row(
            f"cs_vs_frequency_low(n/m<={cfg.freq_threshold:g})",
            [e.cs for e in low],
            [e.n / index.m for e in low],
        )
    )
    everything = high + low
    rows.append(
        _spearman_row(
            "cs_vs_word_length",
            [e.cs for e in everything],
            [float(letter_count(e.lemma)) for e in everything],
        )
    )
    rows.append(
        _spearman_row(
            "cs_vs_syllables",
            [e.cs for e in everything],
            [float(syllables.count_syllables(e.lemma)) for e in everything],
        )
    )
    _emit(rows, args.out)
    if args.figures:
        from . import figures

        fig_dir = Path(args.figures)
        for path in (
            figures.save_cs_histogram(index, fig_dir / "cs_histogram.png"),
            figures.save_frequency_scatter(
                index, fig_dir / "cs_vs_frequency.png", cfg.freq_threshold
            ),
            figures.save_word_feature_scatter(index, fig_dir / "cs_vs_word_features.png"),
        ):
            print(f"figure: {path}", file=sys.stderr)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from . import service

    index_path = args.index or os.environ.get(ENV_INDEX)
    if not index_path:
        print(f"error: no index file (--index or ${ENV_INDEX})", file=sys.stderr)
        return EXIT_FAILURE
    vectors_path = args.vectors or os.environ.get(ENV_VECTORS)
    index = lexindex.import_aggregates(index_path)
    table = embeddings.load_vectors(vectors_path) if vectors_path else None
    app = service.create_app(index, table, cors_origins=args.cors_origin or None)
    port = args.port if args.port is not None else int(os.environ.get(ENV_PORT, "8000"))
    uvicorn.run(app, host=args.host, port=port)
    return EXIT_OK


def _add_filter_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--sigma-k", type=float, default=4.0, help="outlier cut in std devs")
    parser.add_argument("--hard-max", type=float, default=100.0, help="absolute score ceiling")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexcomp",
        description="Estimate lexical complexity from document-level readability distributions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate the bundled four-class synthetic corpus")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--docs-per-class", type=int, default=500)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("score", help="score every document and report per-corpus stats")
    p.add_argument("manifest")
    p.add_argument("--out", help="write the per-document table here instead of stdout")
    p.add_argument("--figures", help="directory for rendered figures")
    p.add_argument("--metric", choices=("lix", "cli"), default="lix")
    _add_filter_flags(p)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("validate", help="pairwise KS tests between corpora")
    p.add_argument("manifest")
    p.add_argument("--out")
    p.add_argument("--figures")
    p.add_argument("--metric", choices=("lix", "cli"), default="lix")
    _add_filter_flags(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("build", help="build the lemma index and export aggregates")
    p.add_argument("manifest")
    p.add_argument("--out", required=True, help="aggregates file to write")
    _add_filter_flags(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="look up a lemma, optionally with suggestions")
    p.add_argument("index")
    p.add_argument("lemma")
    p.add_argument("--pos", choices=[pos.name for pos in lexindex.POS_ORDER])
    p.add_argument("--suggest", type=int, metavar="K", help="suggest K substitution candidates")
    p.add_argument("--vectors", help="word-vector file (required with --suggest)")
    p.add_argument("--exclude", help="comma-separated words to drop (wrong word sense)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("analyze", help="frequency/length/syllable correlation report")
    p.add_argument("index")
    p.add_argument("--freq-threshold", type=float, default=0.05)
    p.add_argument("--out")
    p.add_argument("--figures")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("serve", help="run the read-only HTTP API")
    p.add_argument("--index", help=f"aggregates file (default ${ENV_INDEX})")
    p.add_argument("--vectors", help=f"word-vector file (default ${ENV_VECTORS})")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, help=f"default ${ENV_PORT} or 8000")
    p.add_argument(
        "--cors-origin",
        action="append",
        help="origin allowed via CORS; repeat for several",
    )
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LexcompError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
