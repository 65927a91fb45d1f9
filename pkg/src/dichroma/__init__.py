"""dichroma: exact dichromate invariants of small matroids and multigraphs.

The package computes, with arbitrary-precision integer arithmetic, the
Potts partition polynomial of a multigraph, the Tutte polynomial of a
matroid, the dichromate specialization Y(q, t), its nonnegative
companion Yhat(p, t), Whitney numbers of the level lattices, the
characteristic polynomial, and the simplicial homology ranks that the
companion's coefficients count.  Every quantity is computed by at least
two independent routes and the ``verify`` machinery (and test suite)
checks them against each other exactly.
"""

from .errors import (
    AxiomViolation,
    DichromaError,
    IdentityError,
    InputError,
    NonExactDivision,
    SizeCapExceeded,
)
from .graphs import Multigraph
from .matroid import ElementType, Matroid, from_bases, from_graph, from_rank_table, uniform
from .poly import BiPoly, falling_factorial
from .simplicial import BettiVector, SimplicialComplex, betti_numbers

__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "BettiVector",
    "BiPoly",
    "DichromaError",
    "ElementType",
    "IdentityError",
    "InputError",
    "Matroid",
    "Multigraph",
    "NonExactDivision",
    "SimplicialComplex",
    "SizeCapExceeded",
    "betti_numbers",
    "falling_factorial",
    "from_bases",
    "from_graph",
    "from_rank_table",
    "uniform",
    "__version__",
]
