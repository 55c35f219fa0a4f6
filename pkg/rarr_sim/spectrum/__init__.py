"""
Time-integrated emission spectra of the cavity output
"""

from .analytic import (
    MODES,
    SPECTRUM_COLUMNS,
    SpectrumGrid,
    full_spectrum,
    mode_spectrum,
    peak_summary,
    residue_transform,
    single_mode_spectrum,
)
from .peaks import Peak, detect_peaks
from .quadrature import parseval_weight, truncated_double_quadrature

__all__ = [
    "MODES",
    "SPECTRUM_COLUMNS",
    "Peak",
    "SpectrumGrid",
    "residue_transform",
    "mode_spectrum",
    "single_mode_spectrum",
    "full_spectrum",
    "detect_peaks",
    "peak_summary",
    "parseval_weight",
    "truncated_double_quadrature",
]
