"""Exact-arithmetic total positivity toolkit.

All rational values cross the boundary as "p/q" strings; matrices are lists
of rows of such strings (bare integer strings like "3" are fine).
"""

from ._tpkit import (
    assemble,
    compound,
    condensation_sequence,
    condense,
    determinant,
    factorize,
    generate_tn_params,
    generate_tp,
    hankel_from_sequence,
    is_tn,
    is_tp,
    is_tp2c,
    is_tp_hankel,
    lindstrom_minor,
    minor,
    moment_sequence,
    sylvester_check,
    tp2c_threshold,
    verify_paper,
    verify_paper_cases,
)

__all__ = [
    "assemble",
    "compound",
    "condensation_sequence",
    "condense",
    "determinant",
    "factorize",
    "generate_tn_params",
    "generate_tp",
    "hankel_from_sequence",
    "is_tn",
    "is_tp",
    "is_tp2c",
    "is_tp_hankel",
    "lindstrom_minor",
    "minor",
    "moment_sequence",
    "sylvester_check",
    "tp2c_threshold",
    "verify_paper",
    "verify_paper_cases",
]
