"""
Figure presets pinning the published parameter sets.

Every preset uses g_a = 1; the loss rates of the emission and spectrum
presets are Gamma = 0.05 g_a and kappa = 0.07 g_a with g_b = 0.1 g_a.
"""

from typing import Callable, Dict

from ..errors import ConfigError
from ..models import SystemParams
from .config import GridSpec, RunConfig

_LOSSES = {"gamma": 0.05, "kappa": 0.07}


def _fig2() -> RunConfig:
    return RunConfig(
        task="eigen-sweep",
        params=SystemParams(g_a=1.0, g_b=0.1),
        grid=GridSpec(start=0.0, stop=3.0, count=600),
        preset="fig2",
    )


def _fig3(name: str, delta_omega: float) -> RunConfig:
    return RunConfig(
        task="trajectory",
        params=SystemParams(g_a=1.0, g_b=0.1, delta_omega=delta_omega),
        grid=GridSpec(start=0.0, stop=100.0, count=2000),
        preset=name,
    )


def _fig4() -> RunConfig:
    return RunConfig(
        task="emission-sweep",
        params=SystemParams(g_a=1.0, g_b=0.1, **_LOSSES),
        grid=GridSpec(start=0.0, stop=3.0, count=300),
        preset="fig4",
    )


def _fig5(name: str, delta_omega: float) -> RunConfig:
    return RunConfig(
        task="spectrum",
        params=SystemParams(g_a=1.0, g_b=0.1, delta_omega=delta_omega, **_LOSSES),
        grid=GridSpec(start=-2.0, stop=2.0, count=4001),
        preset=name,
    )


PRESETS: Dict[str, Callable[[], RunConfig]] = {
    "fig2": _fig2,
    "fig3a": lambda: _fig3("fig3a", 0.0),
    "fig3b": lambda: _fig3("fig3b", 1.0),
    "fig4": _fig4,
    "fig5-raman": lambda: _fig5("fig5-raman", 0.0),
    "fig5-rarr": lambda: _fig5("fig5-rarr", 1.0),
}


def preset(name: str) -> RunConfig:
    """
    Return the configuration reproducing one figure.

    Raises:
        ConfigError: If ``name`` is not a known preset
    """
    try:
        factory = PRESETS[name]
    except KeyError:
        raise ConfigError(f"unknown preset {name!r}; expected one of {', '.join(PRESETS)}") from None
    return factory()
