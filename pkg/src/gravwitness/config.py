"""Physical constants, experiment configuration, validation and JSON I/O."""

import enum
import json
import math
from dataclasses import dataclass, replace

from .errors import (
    NegativeDecoherence,
    NegativeWidth,
    NonPositiveMass,
    NonPositiveSeparation,
    NonPositiveTime,
    UnitParseError,
)
from .units import parse_quantity


@dataclass(frozen=True)
class PhysicalConstants:
    """Newtonian gravitational constant and reduced Planck constant (SI).

    Fixed CODATA values by default so results are reproducible bit for bit.
    Overriding them is an expert-only escape hatch (see the "expert" section
    of the JSON config schema); nothing in the normal interface exposes it.
    """

    G: float = 6.67430e-11  # m^3 kg^-1 s^-2
    hbar: float = 1.054571817e-34  # J s


CODATA = PhysicalConstants()


class Geometry(enum.Enum):
    """Spatial layout of the superposed test masses."""

    PARALLEL2 = "parallel2"
    LINEAR2 = "linear2"
    PARALLEL3 = "parallel3"
    TRIANGLE3 = "triangle3"

    @property
    def n_qubits(self):
        return 2 if self in (Geometry.PARALLEL2, Geometry.LINEAR2) else 3

    @property
    def dim(self):
        return 2 ** self.n_qubits

    @classmethod
    def from_label(cls, label):
        try:
            return cls(str(label).strip().lower())
        except ValueError:
            valid = ", ".join(g.value for g in cls)
            raise UnitParseError(
                f"geometry = {label!r} is not one of: {valid}"
            ) from None


@dataclass(frozen=True)
class ExperimentConfig:
    """One interferometer run: masses, layout and decoherence, all SI.

    mass     test-mass mass [kg] (both/all masses equal)
    d_min    minimal separation between superposition instances [m]
    delta_x  spatial superposition width [m], held constant over tau
    tau      interaction (hold) time [s]
    gamma    total decoherence rate [Hz]
    """

    mass: float
    d_min: float
    delta_x: float
    tau: float
    gamma: float
    geometry: Geometry
    constants: PhysicalConstants = CODATA

    def with_values(self, **kwargs):
        return replace(self, **kwargs)


def validate(config):
    """Return `config` unchanged if every field invariant holds.

    Raises the field-specific ConfigFieldError naming the offending field.
    delta_x = 0 and gamma = 0 are legal degenerate inputs.
    """
    if not (config.mass > 0 and math.isfinite(config.mass)):
        raise NonPositiveMass(config.mass)
    if not (config.d_min > 0 and math.isfinite(config.d_min)):
        raise NonPositiveSeparation(config.d_min)
    if not (config.delta_x >= 0 and math.isfinite(config.delta_x)):
        raise NegativeWidth(config.delta_x)
    if not (config.tau > 0 and math.isfinite(config.tau)):
        raise NonPositiveTime(config.tau)
    if not (config.gamma >= 0 and math.isfinite(config.gamma)):
        raise NegativeDecoherence(config.gamma)
    return config


_FIELD_DIMENSIONS = {
    "mass": "mass",
    "d_min": "length",
    "delta_x": "length",
    "tau": "time",
    "gamma": "frequency",
}


def config_from_dict(obj):
    """Build an ExperimentConfig from the external JSON schema.

    Expected keys: mass, d_min, delta_x, tau, gamma (suffixed strings or SI
    numbers) and geometry (one of parallel2, linear2, parallel3, triangle3).
    An optional "expert" object may override {"G": ..., "hbar": ...}.
    """
    missing = [k for k in (*_FIELD_DIMENSIONS, "geometry") if k not in obj]
    if missing:
        raise UnitParseError(f"config missing key(s): {', '.join(missing)}")
    values = {
        name: parse_quantity(obj[name], dim)
        for name, dim in _FIELD_DIMENSIONS.items()
    }
    constants = CODATA
    expert = obj.get("expert")
    if expert:
        constants = PhysicalConstants(
            G=float(expert.get("G", CODATA.G)),
            hbar=float(expert.get("hbar", CODATA.hbar)),
        )
    return validate(
        ExperimentConfig(
            geometry=Geometry.from_label(obj["geometry"]),
            constants=constants,
            **values,
        )
    )


def config_to_dict(config):
    """Serialize to the external schema with plain SI numbers.

    Re-parsing the result reproduces the SI values exactly (bare numbers are
    read as base SI units).
    """
    out = {
        "mass": config.mass,
        "d_min": config.d_min,
        "delta_x": config.delta_x,
        "tau": config.tau,
        "gamma": config.gamma,
        "geometry": config.geometry.value,
    }
    if config.constants != CODATA:
        out["expert"] = {"G": config.constants.G, "hbar": config.constants.hbar}
    return out


def config_from_json(text):
    return config_from_dict(json.loads(text))


def load_config(path):
    with open(path, "r", encoding="utf-8") as fh:
        return config_from_json(fh.read())
