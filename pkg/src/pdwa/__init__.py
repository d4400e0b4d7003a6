"""Presburger arithmetic decided with deterministic word automata."""

from .errors import (
    PdwaError,
    FormulaError,
    ParseError,
    EncodingError,
    AutomatonError,
    AtomError,
    QeError,
    EngineError,
    CapExceeded,
)
from .encoding import TupleWord, decode_int, decode_nat, encode_int, sign_extend, sign_vector
from .formula import Cmp, Div, Formula, LinearTerm, VarId, free_vars, metrics, parse, rename_apart
from .automaton import Dwa, Nfa, equivalent, find_witness, membership, minimize, to_dot
from .atoms import build_atom, build_bounded, build_div, build_eq_optimal, build_ineq_optimal
from .qelim import check_bounds, eliminate_all, eliminate_exists, eval_qf
from .engine import (
    CompileOptions,
    EngineKind,
    bench_mult,
    build_mult,
    compile,
    crosscheck,
    decide,
    run_corpus,
    size_report,
    solve,
)

__all__ = [
    # Errors
    "PdwaError",
    "FormulaError",
    "ParseError",
    "EncodingError",
    "AutomatonError",
    "AtomError",
    "QeError",
    "EngineError",
    "CapExceeded",
    # Encoding
    "TupleWord",
    "decode_int",
    "decode_nat",
    "encode_int",
    "sign_extend",
    "sign_vector",
    # Formulas
    "Cmp",
    "Div",
    "Formula",
    "LinearTerm",
    "VarId",
    "free_vars",
    "metrics",
    "parse",
    "rename_apart",
    # Automata
    "Dwa",
    "Nfa",
    "equivalent",
    "find_witness",
    "membership",
    "minimize",
    "to_dot",
    # Atom constructions
    "build_atom",
    "build_bounded",
    "build_div",
    "build_eq_optimal",
    "build_ineq_optimal",
    # Quantifier elimination
    "check_bounds",
    "eliminate_all",
    "eliminate_exists",
    "eval_qf",
    # Engine
    "CompileOptions",
    "EngineKind",
    "bench_mult",
    "build_mult",
    "compile",
    "crosscheck",
    "decide",
    "run_corpus",
    "size_report",
    "solve",
]
