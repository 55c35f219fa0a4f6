"""
Characteristic cubic of the two-mode amplitude system and its roots.

The slowly varying amplitudes obey dC/dt = M C with

    M = [[-Gamma/2,   -i g_a,    -i g_b              ],
         [-i g_a,     -kappa/2,   0                  ],
         [-i g_b,      0,         i delta_omega - kappa/2]]

so every amplitude is a sum of exp(lambda t) over the three roots of
p(lambda) = det(lambda I - M).
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..errors import ConvergenceError
from ..models import SystemParams, ensure_valid

logger = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-10
COINCIDENCE_TOL = 1e-8
MAX_NEWTON_ITERATIONS = 50
BRANCH_LABELS = ("lambda_1", "lambda_2", "lambda_3")

_CUBE_ROOTS_OF_UNITY = (1.0, complex(-0.5, math.sqrt(3) / 2), complex(-0.5, -math.sqrt(3) / 2))


@dataclass(frozen=True)
class CubicCoefficients:
    """Monic cubic lambda**3 + c2 lambda**2 + c1 lambda + c0."""

    c2: complex
    c1: complex
    c0: complex

    @property
    def coefficients(self) -> Tuple[complex, complex, complex, complex]:
        return (1.0 + 0j, self.c2, self.c1, self.c0)

    @property
    def scale(self) -> float:
        """Reference magnitude for residual tolerances."""
        return max(1.0, abs(self.c2), abs(self.c1), abs(self.c0))

    @property
    def imaginary_axis_symmetric(self) -> bool:
        """True when p(i mu) = -i q(mu) for a real cubic q, i.e. all roots lie on the imaginary axis."""
        return self.c2.real == 0.0 and self.c1.imag == 0.0 and self.c0.real == 0.0

    def __call__(self, lam):
        return ((lam + self.c2) * lam + self.c1) * lam + self.c0

    def derivative(self, lam):
        return (3.0 * lam + 2.0 * self.c2) * lam + self.c1


@dataclass(frozen=True)
class EigenTriple:
    """
    Three complex eigenfrequencies with branch labels.

    ``coincident`` is set when two roots are closer than the coincidence
    tolerance; the residue form of the amplitudes is singular there.
    """

    lambdas: Tuple[complex, complex, complex]
    branch_labels: Tuple[str, str, str] = BRANCH_LABELS
    coincident: bool = False
    residual: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.array(self.lambdas, dtype=complex)

    def reordered(self, order) -> "EigenTriple":
        """Return the triple with ``lambdas`` permuted by ``order`` and labels kept in place."""
        return EigenTriple(
            lambdas=tuple(self.lambdas[i] for i in order),
            branch_labels=self.branch_labels,
            coincident=self.coincident,
            residual=self.residual,
        )


def characteristic_cubic(params: SystemParams, quiet: bool = False) -> CubicCoefficients:
    """
    Build det(lambda I - M) for the two-mode amplitude system.

    Args:
        params: Validated parameter set
        quiet: Skip logging of validation warnings (used inside sweeps)

    Returns:
        Monic cubic coefficients
    """
    ensure_valid(params, quiet=quiet)
    g2 = params.g_a ** 2 + params.g_b ** 2
    dw = params.delta_omega

    if params.lossless:
        # lambda^3 - i dw lambda^2 + (g_a^2 + g_b^2) lambda - i g_a^2 dw
        return CubicCoefficients(
            c2=complex(0.0, -dw),
            c1=complex(g2, 0.0),
            c0=complex(0.0, -params.g_a ** 2 * dw),
        )

    e = params.gamma / 2
    k = params.kappa / 2
    d = complex(-k, dw)
    return CubicCoefficients(
        c2=e + k - d,
        c1=e * k - d * (e + k) + g2,
        c0=-e * k * d - params.g_a ** 2 * d + params.g_b ** 2 * k,
    )


def solve_cubic(coeffs: CubicCoefficients) -> EigenTriple:
    """
    Find the three roots of a monic complex cubic.

    Closed-form seeds (trigonometric form when every root sits on the
    imaginary axis, Cardano otherwise) are polished by Newton iteration.
    Roots come back ordered by ascending imaginary part, then real part.

    Raises:
        ConvergenceError: If polishing leaves a residual above the tolerance
    """
    if coeffs.imaginary_axis_symmetric:
        roots = _imaginary_axis_roots(coeffs)
    else:
        roots = [_polish(coeffs, seed) for seed in _cardano_seeds(coeffs)]

    roots.sort(key=lambda lam: (lam.imag, lam.real))
    residual = max(abs(coeffs(lam)) for lam in roots)
    spread = max(1.0, max(abs(lam) for lam in roots))
    gap = min(abs(roots[i] - roots[j]) for i in range(3) for j in range(i + 1, 3))
    coincident = gap < COINCIDENCE_TOL * spread
    if coincident:
        logger.debug("coincident roots: gap=%.3e", gap)
    return EigenTriple(lambdas=tuple(roots), coincident=coincident, residual=residual)


def _cardano_seeds(coeffs: CubicCoefficients) -> List[complex]:
    a, b, c = coeffs.c2, coeffs.c1, coeffs.c0
    shift = a / 3
    p = b - a * a / 3
    q = 2 * a ** 3 / 27 - a * b / 3 + c

    root = cmath.sqrt(q * q / 4 + p ** 3 / 27)
    u3 = -q / 2 + root
    if abs(-q / 2 - root) > abs(u3):
        u3 = -q / 2 - root
    if u3 == 0:
        return [-shift] * 3

    u = u3 ** (1.0 / 3.0)
    seeds = []
    for omega in _CUBE_ROOTS_OF_UNITY:
        uk = u * omega
        seeds.append(uk - p / (3 * uk) - shift)
    return seeds


def _imaginary_axis_roots(coeffs: CubicCoefficients) -> List[complex]:
    # p(i mu) = -i (mu^3 + A mu^2 + B mu + C) with real A, B, C
    A = coeffs.c2.imag
    B = -coeffs.c1.real
    C = -coeffs.c0.imag

    def q(mu: float) -> float:
        return ((mu + A) * mu + B) * mu + C

    def dq(mu: float) -> float:
        return (3 * mu + 2 * A) * mu + B

    p = B - A * A / 3
    r = 2 * A ** 3 / 27 - A * B / 3 + C
    if p >= 0:
        # a real cubic with three real roots has p < 0 unless all coincide
        if p > 0 or r != 0:
            return [_polish(coeffs, seed) for seed in _cardano_seeds(coeffs)]
        return [complex(0.0, -A / 3)] * 3

    amplitude = 2 * math.sqrt(-p / 3)
    argument = max(-1.0, min(1.0, 3 * r / (p * amplitude)))
    # a double root is only resolvable to sqrt(eps); merge it exactly
    if 1.0 - abs(argument) <= 1e-14:
        argument = math.copysign(1.0, argument)
    theta = math.acos(argument) / 3
    mus = [amplitude * math.cos(theta - 2 * math.pi * j / 3) - A / 3 for j in range(3)]

    polished = []
    tol = RESIDUAL_TOL * coeffs.scale
    for mu in mus:
        for _ in range(MAX_NEWTON_ITERATIONS):
            value = q(mu)
            slope = dq(mu)
            if abs(value) <= tol * 1e-3 or slope == 0:
                break
            step = value / slope
            mu -= step
            if abs(step) <= 4 * np.finfo(float).eps * max(1.0, abs(mu)):
                break
        if abs(q(mu)) > tol:
            raise ConvergenceError("Newton polishing did not converge", abs(q(mu)))
        polished.append(complex(0.0, mu))
    return polished


def _polish(coeffs: CubicCoefficients, lam: complex) -> complex:
    tol = RESIDUAL_TOL * coeffs.scale
    for _ in range(MAX_NEWTON_ITERATIONS):
        value = coeffs(lam)
        slope = coeffs.derivative(lam)
        if abs(value) <= tol * 1e-3 or slope == 0:
            break
        step = value / slope
        lam -= step
        if abs(step) <= 4 * np.finfo(float).eps * max(1.0, abs(lam)):
            break
    residual = abs(coeffs(lam))
    if residual > tol:
        raise ConvergenceError("Newton polishing did not converge", residual)
    return complex(lam)
