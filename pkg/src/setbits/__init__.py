"""Finite sets encoded as integers, with bit utilities and a set-expression language."""
from .big_set import BigSet, word_count
from .bench import BenchReport, bench
from .errors import (
    BitIndexError,
    CodeRangeError,
    ConversionError,
    DomainError,
    ElementRangeError,
    SetError,
    UniverseMismatchError,
    UniverseSizeError,
)
from .expr import ExprError, evaluate, evaluate_text, parse, render, tokenize
from .oracle import NaiveSet, OpProgram, generate_program, run_differential
from .small_set import SmallSet

__all__ = [
    "BigSet", "SmallSet", "NaiveSet", "word_count",
    "BenchReport", "bench",
    "OpProgram", "generate_program", "run_differential",
    "ExprError", "evaluate", "evaluate_text", "parse", "render", "tokenize",
    "BitIndexError", "CodeRangeError", "ConversionError", "DomainError",
    "ElementRangeError", "SetError", "UniverseMismatchError", "UniverseSizeError",
]
