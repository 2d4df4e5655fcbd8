"""Index for approximately longest common substrings over the LZ77 parse."""

from ._alcs import (
    Index,
    LcsAnswer,
    QueryResult,
    QueryStats,
    build_index,
    exact_lcs,
    generate_corpus,
    lz77_parse,
    verify_result,
)

__all__ = [
    "Index",
    "LcsAnswer",
    "QueryResult",
    "QueryStats",
    "build_index",
    "exact_lcs",
    "generate_corpus",
    "lz77_parse",
    "verify_result",
]
