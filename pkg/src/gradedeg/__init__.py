"""Exact degree functions of graded rings and Rees-algebra equations of plane curves."""

from .polyring import PolyRing, Polynomial, TermOrder, parse_polynomial, substitute
from .groebner import Ideal, buchberger, normal_form, colon, saturate, artinian_length
from .monomial import MonomialIdeal
from .hilbert import HilbertSeries, hilbert_series, hilbert_series_monomial, samuel_fit

__version__ = "0.1.0"
