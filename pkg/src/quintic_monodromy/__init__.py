"""Exact verification toolkit for the monodromy group of the quintic-mirror family."""

__version__ = "0.1.0"

from .matrix_core import (CharPoly, IntMatrix, ModMatrix, SymplecticForm, adjugate, charpoly,
                          conjugate_exact, det, find_invariant_form, inverse_unimodular,
                          is_symplectic, mat_mul, mat_pow, reduce_mod)
from .group_engine import (FiniteMatrixGroup, GeneratorSet, Word, closure, decode, element_order,
                           encode, enumerate_gamma_hat, evaluate_word, gamma_hat_element, member,
                           sp_order)
from .verification import VerificationReport, run_all, run_checks

__all__ = [
    "CharPoly", "IntMatrix", "ModMatrix", "SymplecticForm", "adjugate", "charpoly",
    "conjugate_exact", "det", "find_invariant_form", "inverse_unimodular", "is_symplectic",
    "mat_mul", "mat_pow", "reduce_mod", "FiniteMatrixGroup", "GeneratorSet", "Word", "closure",
    "decode", "element_order", "encode", "enumerate_gamma_hat", "evaluate_word",
    "gamma_hat_element", "member", "sp_order", "VerificationReport", "run_all", "run_checks",
]
