"""Compiler, decision procedures, reports, the MULT_m benchmark and the corpus runner."""

from .compile import CompileOptions, EngineKind, LedgerEntry, compile, decide, solve
from .reports import (
    CrosscheckOptions,
    CrosscheckReport,
    Mismatch,
    SizeLedger,
    crosscheck,
    qf_bound,
    size_report,
    theorem_exponent,
)
from .mult import DEFAULT_CAP, MultBench, bench_mult, build_mult
from .corpus import (
    CorpusItem,
    CorpusOptions,
    CorpusResult,
    CorpusSummary,
    check_item,
    generate_corpus,
    run_corpus,
    run_corpus_sync,
)

__all__ = [
    "CompileOptions",
    "EngineKind",
    "LedgerEntry",
    "compile",
    "decide",
    "solve",
    "CrosscheckOptions",
    "CrosscheckReport",
    "Mismatch",
    "SizeLedger",
    "crosscheck",
    "qf_bound",
    "size_report",
    "theorem_exponent",
    "DEFAULT_CAP",
    "MultBench",
    "bench_mult",
    "build_mult",
    "CorpusItem",
    "CorpusOptions",
    "CorpusResult",
    "CorpusSummary",
    "check_item",
    "generate_corpus",
    "run_corpus",
    "run_corpus_sync",
]
