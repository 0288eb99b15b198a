"""Parsing of unit-suffixed quantity strings ("35 um", "1e-14 kg", "5 mHz").

All conversion factors are exact powers of ten, applied through Decimal so
that e.g. "35 um" yields the same float as the literal 35e-6 bit for bit.
Bare numbers (no suffix) are taken to be in the SI base unit of the
expected dimension.
"""

import re
from decimal import Decimal

from .errors import UnitParseError

# unit suffix -> (dimension, decimal exponent relative to the SI base unit)
_UNITS = {
    "kg": ("mass", 0),
    "g": ("mass", -3),
    "mg": ("mass", -6),
    "ug": ("mass", -9),
    "ng": ("mass", -12),
    "m": ("length", 0),
    "cm": ("length", -2),
    "mm": ("length", -3),
    "um": ("length", -6),
    "µm": ("length", -6),
    "μm": ("length", -6),
    "nm": ("length", -9),
    "s": ("time", 0),
    "ms": ("time", -3),
    "us": ("time", -6),
    "kHz": ("frequency", 3),
    "Hz": ("frequency", 0),
    "mHz": ("frequency", -3),
    "uHz": ("frequency", -6),
}

BASE_UNIT = {"mass": "kg", "length": "m", "time": "s", "frequency": "Hz"}

_QUANTITY_RE = re.compile(
    r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*"
    r"([A-Za-zµμ]*)\s*$"
)


def parse_quantity(value, dimension):
    """Convert a quantity to a float in SI base units.

    `value` may be a number (already SI) or a string with an optional unit
    suffix. The suffix must belong to `dimension` (one of "mass", "length",
    "time", "frequency").
    """
    if dimension not in BASE_UNIT:
        raise ValueError(f"unknown dimension {dimension!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if not isinstance(value, str):
        raise UnitParseError(f"expected number or string, got {type(value).__name__}")

    m = _QUANTITY_RE.match(value)
    if m is None:
        raise UnitParseError(f"cannot parse quantity {value!r}")
    number, unit = m.group(1), m.group(2)
    if unit == "":
        return float(number)
    if unit not in _UNITS:
        raise UnitParseError(f"unknown unit {unit!r} in {value!r}")
    dim, exponent = _UNITS[unit]
    if dim != dimension:
        raise UnitParseError(
            f"unit {unit!r} is a {dim} unit, expected {dimension} in {value!r}"
        )
    # Decimal scaling is exact for powers of ten; a single rounding happens
    # at the final float conversion.
    return float(Decimal(number).scaleb(exponent))


def format_quantity(si_value, dimension):
    """Render an SI float as a parseable suffixed string in the base unit."""
    return f"{si_value!r} {BASE_UNIT[dimension]}"
