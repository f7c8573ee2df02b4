"""Macaulay inverse systems of Artinian reductions of Gorenstein point sets."""
from .apolarity import (
    ApolarityResult,
    RecoveryResult,
    annihilator_piece,
    catalecticant,
    dependence_coefficients,
    derivative_span_dimension,
    dual_form,
    inverse_system_generator,
    power_span_dimension,
    recover_linear_form,
    verify,
)
from .gorenstein import GorensteinReport, cayley_bacharach, gorenstein_report, is_symmetric
from .linalg import RationalMatrix, nullspace, rank, rref
from .points import (
    HilbertData,
    PointConfiguration,
    evaluation_matrix,
    hilbert_data,
    hilbert_function,
    vanishing_ideal_piece,
)
from .polyring import GradedPoly, contract, evaluate, linear_power, monomial_basis, parse_poly

__version__ = "0.1.0"
