"""Kostka polynomials attached to limit symbols for G(l,1,m).

Two independent routes: the Lusztig-Shoji block solver applied to the Molien matrix
Omega, and graded Demazure characters from nonsymmetric Macdonald polynomials at t = 0.
"""

from .combinatorics import MultiPartition, Partition, enumerate_multipartitions, parse, serialize
from .errors import (BudgetExceeded, InvalidInput, InvariantViolation, KostkaError)
from .exact import CyclotomicScalar, GradedPolynomial, RationalFunction
from .limit_kostka import cross_check, kminus_demazure
from .lusztig_shoji import solve
from .macdonald import nonsym_macdonald_t0
from .molien import omega_matrix
from .wreath import character_table

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "CyclotomicScalar", "GradedPolynomial", "InvalidInput",
    "InvariantViolation", "KostkaError", "MultiPartition", "Partition", "RationalFunction",
    "character_table", "cross_check", "enumerate_multipartitions", "kminus_demazure",
    "nonsym_macdonald_t0", "omega_matrix", "parse", "serialize", "solve",
]
