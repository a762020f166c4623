"""Heuristic LCS/SCS computation and wildcard pattern discovery."""

from ._core import (
    __version__,
    alphabet_supersequence,
    brute_lcs,
    brute_scs,
    exact_lcs_pair,
    exact_scs_pair,
    generate,
    heuristic_lcs,
    heuristic_scs,
    is_subsequence,
    is_supersequence,
    language_count,
    lcs_to_scs,
    ls_score,
    min_height_merge,
    normalize_pattern,
    pals,
    pals_star,
    pattern_matches,
    refine,
    scs_to_lcs,
    sensitivity,
    strip_wildcards,
    sum_height_merge,
)

__all__ = [
    "__version__",
    "alphabet_supersequence",
    "brute_lcs",
    "brute_scs",
    "exact_lcs_pair",
    "exact_scs_pair",
    "generate",
    "heuristic_lcs",
    "heuristic_scs",
    "is_subsequence",
    "is_supersequence",
    "language_count",
    "lcs_to_scs",
    "ls_score",
    "min_height_merge",
    "normalize_pattern",
    "pals",
    "pals_star",
    "pattern_matches",
    "refine",
    "scs_to_lcs",
    "sensitivity",
    "strip_wildcards",
    "sum_height_merge",
]
