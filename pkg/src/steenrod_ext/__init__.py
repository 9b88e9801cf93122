"""Z/2-bases of Ext_A^{k, k+n}(Z/2, Z/2) over the mod-2 Steenrod algebra, k <= 5.

Monomials in known indecomposable generators are enumerated at a bidegree,
known product relations become rows of a GF(2) matrix, and the quotient
basis is read off the reduced matrix.  Parametric stem families, a grid
sweep, and a pattern miner sit on top; an HTTP service and a CLI expose
the whole pipeline.
"""

from .catalog import FAMILIES, Generator, GeneratorFamily, gen
from .ext import ExtBasisReport, compute_ext_basis
from .families import StuCase, SweepResult, stem_power, stem_stu, sweep_stu
from .monomial import Bidegree, Monomial, canonicalize, enumerate_monomials, format_monomial
from .pattern import Pattern, discover_patterns, render_theorem

__version__ = "0.1.0"

__all__ = [
    "FAMILIES",
    "Generator",
    "GeneratorFamily",
    "gen",
    "ExtBasisReport",
    "compute_ext_basis",
    "StuCase",
    "SweepResult",
    "stem_power",
    "stem_stu",
    "sweep_stu",
    "Bidegree",
    "Monomial",
    "canonicalize",
    "enumerate_monomials",
    "format_monomial",
    "Pattern",
    "discover_patterns",
    "render_theorem",
    "__version__",
]
