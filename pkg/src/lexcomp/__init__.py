"""Lexical complexity estimation from document-level readability distributions."""

from .corpus import (
    CONTENT_POS,
    Document,
    DocumentStats,
    Pos,
    Token,
    compute_stats,
    ingest_conllu,
    ingest_manifest,
    ingest_plain,
)
from .embeddings import EmbeddingTable, Suggestion, load_vectors, nearest, suggest
from .lexindex import (
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
from .metrics import CliInputs, LixBand, cli_inputs, coleman_liau, lix, lix_band
from .stats import (
    DescriptiveStats,
    KsResult,
    SpearmanResult,
    describe,
    filter_outliers,
    ks_two_sample,
    spearman,
)
from .syllables import SyllableRuleSet, count_syllables, evaluate_counter

__version__ = "0.1.0"

__all__ = [
    "CONTENT_POS",
    "CliInputs",
    "DescriptiveStats",
    "Document",
    "DocumentStats",
    "EmbeddingTable",
    "KsResult",
    "LemmaEntry",
    "LexIndex",
    "LixBand",
    "Pos",
    "SpearmanResult",
    "Suggestion",
    "SyllableRuleSet",
    "Token",
    "build_index",
    "cli_inputs",
    "coleman_liau",
    "complexity_score",
    "compute_stats",
    "count_syllables",
    "describe",
    "evaluate_counter",
    "export_aggregates",
    "filter_outliers",
    "frequency_partition",
    "import_aggregates",
    "ingest_conllu",
    "ingest_manifest",
    "ingest_plain",
    "ks_two_sample",
    "lix",
    "lix_band",
    "load_vectors",
    "lookup",
    "median",
    "nearest",
    "spearman",
    "suggest",
]
