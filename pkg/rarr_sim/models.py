"""
Parameter models shared by every module.

All frequencies and rates are plain floats in one angular-frequency unit chosen
by the caller; presets and CLI defaults use ``g_a = 1``.
"""

import logging
from typing import Any, List, Mapping, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from . import keyvalue
from .errors import ConfigError, ParameterError

logger = logging.getLogger(__name__)

# g_b / g_a at which the weak-vibronic picture is considered broken
WEAK_COUPLING_RATIO = 0.5
# omega_a - omega_b must exceed this many g_a for the mode spectra to separate
SEPARABILITY_FACTOR = 10.0

M = TypeVar("M", bound="_ParamsModel")


class _ParamsModel(BaseModel):
    """Frozen parameter model with key-value (de)serialization."""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    @classmethod
    def from_key_values(cls: Type[M], values: Union[str, Mapping[str, Any]]) -> M:
        """
        Build the model from a key-value document or an already parsed mapping.

        Raises:
            ConfigError: If a field is missing, unknown or not a number
        """
        if isinstance(values, str):
            values = keyvalue.parse(values)
        try:
            return cls.model_validate(dict(values))
        except ValidationError as exc:
            raise ConfigError(describe_validation_error(exc)) from exc

    def to_key_values(self) -> str:
        """Serialize to a key-value document."""
        return keyvalue.dumps(self.model_dump())


class SystemParams(_ParamsModel):
    """Rates and frequencies of the vibronic emitter in the lossy two-mode cavity."""

    g_a: float = Field(..., description="Coupling of the electronic transition to mode a")
    g_b: float = Field(0.0, description="Coupling of the Raman-assisted transition to mode b")
    delta_omega: float = Field(0.0, description="Detuning from exact Raman resonance (signed)")
    gamma: float = Field(0.0, description="Atomic decay rate")
    kappa: float = Field(0.0, description="Cavity damping rate, identical for both modes")
    omega_a: float = Field(0.0, description="Carrier frequency of mode a (spectral origin only)")
    omega_b: float = Field(0.0, description="Carrier frequency of mode b (spectral origin only)")

    @property
    def lossless(self) -> bool:
        return self.gamma == 0.0 and self.kappa == 0.0

    @property
    def has_carriers(self) -> bool:
        return self.omega_a != 0.0 or self.omega_b != 0.0

    @property
    def spectrally_separable(self) -> bool:
        return self.omega_a - self.omega_b > SEPARABILITY_FACTOR * self.g_a

    def with_detuning(self, delta_omega: float) -> "SystemParams":
        """Return a copy detuned by ``delta_omega`` from the Raman resonance."""
        return self.model_copy(update={"delta_omega": float(delta_omega)})


class SingleModeParams(_ParamsModel):
    """Emitter coupled to a single lossy cavity mode."""

    g_a: float = Field(..., description="Coupling strength")
    delta_omega_a: float = Field(0.0, description="Cavity-atom detuning omega_a - omega_21 (signed)")
    gamma: float = Field(0.0, description="Atomic decay rate")
    kappa: float = Field(0.0, description="Cavity damping rate")

    @property
    def lossless(self) -> bool:
        return self.gamma == 0.0 and self.kappa == 0.0


class ValidationReport(BaseModel):
    """Itemized outcome of :func:`validate`."""

    model_config = ConfigDict(frozen=True)

    errors: Tuple[str, ...] = Field((), description="Violations that reject the parameter set")
    warnings: Tuple[str, ...] = Field((), description="Broken modelling assumptions")
    separable: bool = Field(False, description="Whether the two mode spectra are well separated")

    @property
    def is_valid(self) -> bool:
        return not self.errors


def validate(params: Union[SystemParams, SingleModeParams]) -> ValidationReport:
    """
    Check a parameter set against the physical constraints of the model.

    Never raises and has no side effects; the caller decides what to do with
    the returned report.

    Args:
        params: Two-mode or single-mode parameter set

    Returns:
        Report listing errors, warnings and the spectral-separability flag
    """
    errors: List[str] = []
    warnings: List[str] = []

    if not params.g_a > 0:
        errors.append("g_a must be positive")
    if params.gamma < 0:
        errors.append("gamma must be non-negative")
    if params.kappa < 0:
        errors.append("kappa must be non-negative")

    separable = False
    if isinstance(params, SystemParams):
        if params.g_b < 0:
            errors.append("g_b must be non-negative")
        elif params.g_a > 0 and params.g_b >= WEAK_COUPLING_RATIO * params.g_a:
            warnings.append("weak-coupling assumption g_b<<g_a not satisfied")
        separable = params.spectrally_separable
        if params.has_carriers and not separable:
            warnings.append(
                "spectral separability omega_a - omega_b >> g_a not satisfied; "
                "mode spectra overlap"
            )

    return ValidationReport(errors=tuple(errors), warnings=tuple(warnings), separable=separable)


def ensure_valid(
    params: Union[SystemParams, SingleModeParams], quiet: bool = False
) -> ValidationReport:
    """
    Validate ``params`` and raise if the report carries errors.

    Args:
        params: Parameter set to check
        quiet: Do not log the report warnings

    Raises:
        ParameterError: If any constraint is violated
    """
    report = validate(params)
    if not report.is_valid:
        raise ParameterError("; ".join(report.errors), report=report)
    for warning in () if quiet else report.warnings:
        logger.warning("parameter warning: %s", warning)
    return report


def describe_validation_error(exc: ValidationError) -> str:
    """Condense a pydantic error into a one-line diagnostic naming the field."""
    parts = []
    for error in exc.errors():
        field = ".".join(str(loc) for loc in error.get("loc", ())) or "<root>"
        if error.get("type") == "missing":
            parts.append(f"missing required field {field}")
        else:
            parts.append(f"{field}: {error.get('msg', 'invalid value')}")
    return "; ".join(parts)
