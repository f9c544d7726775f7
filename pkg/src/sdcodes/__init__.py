"""Self-dual codes from dual-containing BCH and quadratic-residue codes.

Finite fields (:mod:`gf`), polynomials (:mod:`polyring`), cyclotomic
cosets (:mod:`cyclo`), cyclic and linear codes (:mod:`codes`), the
constructions (:mod:`construct`) and minimum-distance engines
(:mod:`mindist`).
"""

from .codes import CyclicCode, LinearCode, qr_code
from .errors import BudgetExceeded, CodeError, InputError, TheoremViolation
from .gf import Field, FieldElement, field_of_order, make_extension, make_prime_field
from .polyring import Polynomial

__all__ = [
    "BudgetExceeded",
    "CodeError",
    "CyclicCode",
    "Field",
    "FieldElement",
    "InputError",
    "LinearCode",
    "Polynomial",
    "TheoremViolation",
    "field_of_order",
    "make_extension",
    "make_prime_field",
    "qr_code",
]

__version__ = "0.1.0"
