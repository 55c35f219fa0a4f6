"""
Dormand-Prince 5(4) integrator with dense output.

The fifth-order solution is propagated (local extrapolation) and the
embedded fourth-order one only drives the step-size control. The last stage
of an accepted step is reused as the first stage of the next one. Dense
output uses the quartic continuous extension of the pair.

``tolerance`` is a bound on the accumulated error over [0, t_end]: each step
may contribute at most ``tolerance * h / t_end`` relative to the state size.
"""

import logging
import math
from typing import List, Optional

import numpy as np

from ..errors import NumericalError, ParameterError, StepSizeUnderflowError
from .system import OdeSystem

logger = logging.getLogger(__name__)

MIN_TOLERANCE = 1e-14
MAX_TOLERANCE = 1e-6
MAX_STEPS = 2_000_000

SAFETY = 0.9
MIN_FACTOR = 0.2
MAX_FACTOR = 5.0
# error per unit step scales as h**4
ERROR_EXPONENT = -1.0 / 4.0

C = np.array([0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1, 1])
A = [
    np.array([]),
    np.array([1 / 5]),
    np.array([3 / 40, 9 / 40]),
    np.array([44 / 45, -56 / 15, 32 / 9]),
    np.array([19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729]),
    np.array([9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656]),
    np.array([35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84]),
]
B = np.array([35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0])
B_HAT = np.array([5179 / 57600, 0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40])
E = B - B_HAT

# continuous extension: y(t0 + theta h) = y0 + h * (K^T P) @ [theta, theta^2, theta^3, theta^4]
P = np.array([
    [1, -8048581381 / 2820520608, 8663915743 / 2820520608, -12715105075 / 11282082432],
    [0, 0, 0, 0],
    [0, 131558114200 / 32700410799, -68118460800 / 10900136933, 87487479700 / 32700410799],
    [0, -1754552775 / 470086768, 14199869525 / 1410260304, -10690763975 / 1880347072],
    [0, 127303824393 / 49829197408, -318862633887 / 49829197408, 701980252875 / 199316789632],
    [0, -282668133 / 205662961, 2019193451 / 616988883, -1453857185 / 822651844],
    [0, 40617522 / 29380423, -110615467 / 29380423, 69997945 / 29380423],
])


class DenseTrajectory:
    """
    Piecewise-quartic interpolant over the accepted steps.

    Calling the trajectory with a time or an array of times returns the
    state with shape (dimension, N).
    """

    def __init__(
        self,
        starts: np.ndarray,
        widths: np.ndarray,
        states: np.ndarray,
        coefficients: np.ndarray,
        t_end: float,
        n_rejected: int = 0,
    ):
        self.starts = starts
        self.widths = widths
        self.states = states
        self.coefficients = coefficients
        self.n_rejected = n_rejected
        self.t_end = float(t_end)

    @property
    def n_steps(self) -> int:
        return int(self.starts.size)

    @property
    def final_state(self) -> np.ndarray:
        return self(self.t_end)[:, 0]

    def __call__(self, t) -> np.ndarray:
        times = np.atleast_1d(np.asarray(t, dtype=float))
        span = 1e-12 * max(1.0, self.t_end)
        if times.size and (times.min() < -span or times.max() > self.t_end + span):
            raise ParameterError(f"dense output requested outside [0, {self.t_end}]")
        index = np.clip(np.searchsorted(self.starts, times, side="right") - 1, 0, self.n_steps - 1)
        theta = (times - self.starts[index]) / self.widths[index]
        powers = np.stack([theta, theta ** 2, theta ** 3, theta ** 4], axis=-1)
        increments = np.einsum("nij,nj->ni", self.coefficients[index], powers)
        values = self.states[index] + self.widths[index, None] * increments
        return values.T

    def amplitudes(self, t) -> np.ndarray:
        """Same as calling the trajectory; lets ``sample_trajectory`` tabulate oracle runs."""
        return self(t)


def _initial_step(system: OdeSystem, t_end: float, tolerance: float) -> float:
    rate = max(float(np.abs(system.matrix).sum(axis=1).max()), 1e-12)
    return min(t_end, (tolerance ** 0.25) / rate)


def integrate(
    system: OdeSystem,
    t_end: float,
    tolerance: float = 1e-10,
    fixed_step: Optional[float] = None,
) -> DenseTrajectory:
    """
    Integrate dC/dt = M C from the initial state up to ``t_end``.

    Args:
        system: Amplitude system to integrate
        t_end: Final time, positive
        tolerance: Error bound in [1e-14, 1e-6]
        fixed_step: Take uniform steps of (at most) this size without error
            control instead of adapting the step

    Returns:
        Dense trajectory evaluable anywhere in [0, t_end]

    Raises:
        ParameterError: If ``t_end`` or ``tolerance`` is out of range
        StepSizeUnderflowError: If the controller needs a step below the
            floating-point resolution of the current time
    """
    if not t_end > 0 or not math.isfinite(t_end):
        raise ParameterError(f"t_end must be positive and finite, got {t_end}")
    if not MIN_TOLERANCE <= tolerance <= MAX_TOLERANCE:
        raise ParameterError(
            f"tolerance must lie in [{MIN_TOLERANCE:g}, {MAX_TOLERANCE:g}], got {tolerance:g}"
        )
    if fixed_step is not None and not fixed_step > 0:
        raise ParameterError(f"fixed_step must be positive, got {fixed_step}")

    f = system.rhs
    t = 0.0
    y = system.initial_state.astype(complex)
    k_first = f(t, y)

    if fixed_step is not None:
        n_fixed = max(1, math.ceil(t_end / fixed_step - 1e-9))
        h = t_end / n_fixed
    else:
        h = _initial_step(system, t_end, tolerance)

    starts: List[float] = []
    widths: List[float] = []
    states: List[np.ndarray] = []
    coefficients: List[np.ndarray] = []
    rejected = 0
    stages = np.empty((7, y.size), dtype=complex)

    while t < t_end:
        if len(starts) >= MAX_STEPS:
            raise NumericalError(f"step limit {MAX_STEPS} reached at t={t:.6g}")
        h = min(h, t_end - t)
        if h <= 1e-14 * max(1.0, abs(t)):
            raise StepSizeUnderflowError(t)

        stages[0] = k_first
        for s in range(1, 7):
            y_stage = y + h * (A[s] @ stages[:s])
            stages[s] = f(t + C[s] * h, y_stage)
        # the seventh stage is evaluated at the propagated solution
        y_new = y + h * (B @ stages)

        if fixed_step is None:
            error = h * (E @ stages)
            scale = tolerance * (h / t_end) * (1.0 + max(np.abs(y).max(), np.abs(y_new).max()))
            ratio = float(np.abs(error).max() / scale)
            if not math.isfinite(ratio) or ratio > 1.0:
                rejected += 1
                h *= MIN_FACTOR if not math.isfinite(ratio) else max(MIN_FACTOR, SAFETY * ratio ** ERROR_EXPONENT)
                continue
            factor = MAX_FACTOR if ratio == 0.0 else min(MAX_FACTOR, SAFETY * ratio ** ERROR_EXPONENT)
        else:
            factor = 1.0

        starts.append(t)
        widths.append(h)
        states.append(y)
        coefficients.append(stages.T @ P)

        t = t_end if t_end - (t + h) <= 1e-9 * h else t + h
        y = y_new
        k_first = stages[6].copy()
        h *= factor

    logger.debug("integration finished: steps=%d rejected=%d", len(starts), rejected)
    return DenseTrajectory(
        starts=np.array(starts),
        widths=np.array(widths),
        states=np.array(states),
        coefficients=np.array(coefficients),
        t_end=t_end,
        n_rejected=rejected,
    )
