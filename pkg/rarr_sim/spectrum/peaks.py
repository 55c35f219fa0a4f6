"""
Local maxima of sampled spectra.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

import numpy as np
from scipy.signal import find_peaks

# peaks lower than this fraction of the global maximum are ignored
PEAK_FLOOR = 1e-6
# minimum index distance between neighbouring peaks
PEAK_SEPARATION = 2


@dataclass(frozen=True)
class Peak:
    location: float
    height: float


def detect_peaks(
    axis: np.ndarray,
    density: np.ndarray,
    floor: float = PEAK_FLOOR,
    separation: int = PEAK_SEPARATION,
) -> Tuple[Peak, ...]:
    """
    Find local maxima above ``floor`` times the global maximum.

    Args:
        axis: Sample positions
        density: Non-negative samples on ``axis``
        floor: Relative height threshold
        separation: Minimum distance in samples between reported peaks

    Returns:
        Peaks in axis order
    """
    density = np.asarray(density, dtype=float)
    top = float(density.max()) if density.size else 0.0
    if top <= 0.0:
        return ()
    indices, _ = find_peaks(density, height=floor * top, distance=separation)
    return tuple(Peak(location=float(axis[i]), height=float(density[i])) for i in indices)


def summarize_peaks(peaks: Dict[str, Tuple[Peak, ...]]) -> Dict[str, Union[int, List[float]]]:
    """Flatten per-component peaks into ``peaks.<component>.<field>`` entries."""
    summary: Dict[str, Union[int, List[float]]] = {}
    for component, found in peaks.items():
        summary[f"peaks.{component}.count"] = len(found)
        summary[f"peaks.{component}.locations"] = [p.location for p in found]
        summary[f"peaks.{component}.heights"] = [p.height for p in found]
    return summary
