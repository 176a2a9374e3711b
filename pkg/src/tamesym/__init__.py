"""tamesym: exact stable-Morita invariants of tame symmetric algebras.

Builds finite-dimensional quotient path algebras from quiver presentations
and computes the invariants used to separate them up to stable equivalence
of Morita type: centres, socles, Reynolds/Higman ideals, stable centres,
Cartan/Smith data, stable Grothendieck groups and Kuelshammer ideal
quotients.
"""

__version__ = "0.1.0"

from .fields import Field
from .linalg import MatrixF, MatrixZ, SmithForm, Subspace
from .presentation import Presentation, parse_presentation
from .build import Algebra, build_algebra, cartan_matrix, multiply

__all__ = [
    "Field",
    "MatrixF",
    "MatrixZ",
    "SmithForm",
    "Subspace",
    "Presentation",
    "parse_presentation",
    "Algebra",
    "build_algebra",
    "cartan_matrix",
    "multiply",
    "__version__",
]
