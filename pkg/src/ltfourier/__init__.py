"""Lubin-Tate formal groups and p-adic Fourier/Mahler theory at finite precision."""
from .padic import (PadicElement, PadicField, PrecisionError, different_valuation,
                    make_field, teichmuller)
from .newton import NewtonPolygon, newton_polygon
from .series import MultiSeries, RationalRing, TruncSeries, gauss_norm, reversion, series_exp, series_log
from .period import PeriodRing, PeriodScalar, period_exponents
from .lubin_tate import LubinTateGroup, make_lt_group, multiplicative_frobenius
from .mahler import (MahlerBasis, coefficient_bound_experiment, convergence_check, mahler_expand,
                     norm_estimate_43, norm_estimate_44, pairing, pairing_monomial)
from .amice import amice_transform, mellin_demo, units_support_check

__version__ = "0.1.0"

__all__ = [
    "LubinTateGroup",
    "MahlerBasis",
    "MultiSeries",
    "NewtonPolygon",
    "PadicElement",
    "PadicField",
    "PeriodRing",
    "PeriodScalar",
    "PrecisionError",
    "RationalRing",
    "TruncSeries",
    "amice_transform",
    "coefficient_bound_experiment",
    "convergence_check",
    "different_valuation",
    "gauss_norm",
    "mahler_expand",
    "make_field",
    "make_lt_group",
    "mellin_demo",
    "multiplicative_frobenius",
    "newton_polygon",
    "norm_estimate_43",
    "norm_estimate_44",
    "pairing",
    "pairing_monomial",
    "period_exponents",
    "reversion",
    "series_exp",
    "series_log",
    "teichmuller",
    "units_support_check",
    "__version__",
]
