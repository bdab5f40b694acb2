"""plethy: exact symmetric-function and plethysm engine.

Computes the Frobenius characteristics of the cyclic-induced module
families lie, conj and the two-adic variant lie2, verifies the plethystic
identities relating them, reproduces the reference decomposition tables,
and scans the two open Schur-positivity conjectures.
"""

from .partitions import partitions_of, z_of
from .symfunc import SymFunc, e, h, hall_inner, p, plethysm, s
from .schur import SchurExpansion, character, is_schur_positive, to_schur
from .lie_family import conj, ell, lie, lie2, whitehouse_deficit
from .series import Series, SeriesContext

__version__ = "0.1.0"

__all__ = [
    "partitions_of",
    "z_of",
    "SymFunc",
    "p",
    "h",
    "e",
    "s",
    "plethysm",
    "hall_inner",
    "SchurExpansion",
    "character",
    "to_schur",
    "is_schur_positive",
    "lie",
    "conj",
    "lie2",
    "ell",
    "whitehouse_deficit",
    "Series",
    "SeriesContext",
    "__version__",
]
