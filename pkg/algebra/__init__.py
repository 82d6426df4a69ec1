from .matrices import (
    IntMatrix, SmithResult, smith_normal_form, rank_over_rationals, rational_nullspace,
)
from .homology import (
    HomologyGroup, RationalHomologyBasis, homology_from_boundaries, betti_from_boundaries,
    rational_homology_basis, induced_map_on_homology,
)
from .polynomials import IntPolynomial, MultiPoly, series_coefficient, series_coefficients
from .fitting import FitResult, fit_polynomial, sample_window, residuals

__all__ = [
    'IntMatrix',
    'SmithResult',
    'smith_normal_form',
    'rank_over_rationals',
    'rational_nullspace',
    'HomologyGroup',
    'RationalHomologyBasis',
    'homology_from_boundaries',
    'betti_from_boundaries',
    'rational_homology_basis',
    'induced_map_on_homology',
    'IntPolynomial',
    'MultiPoly',
    'series_coefficient',
    'series_coefficients',
    'FitResult',
    'fit_polynomial',
    'sample_window',
    'residuals',
]
