import pytest

from gravwitness.config import (
    CODATA,
    ExperimentConfig,
    Geometry,
    config_from_dict,
    config_to_dict,
    validate,
)
from gravwitness.errors import (
    NegativeDecoherence,
    NegativeWidth,
    NonPositiveMass,
    NonPositiveSeparation,
    NonPositiveTime,
    UnitParseError,
)


def make(**overrides):
    base = dict(
        mass=1e-15,
        d_min=35e-6,
        delta_x=10e-6,
        tau=1.0,
        gamma=0.0,
        geometry=Geometry.PARALLEL2,
    )
    base.update(overrides)
    return ExperimentConfig(**base)


def test_constants_are_codata():
    assert CODATA.G == 6.67430e-11
    assert CODATA.hbar == 1.054571817e-34


def test_valid_config_passes_through():
    cfg = make()
    assert validate(cfg) is cfg


def test_zero_width_is_legal():
    assert validate(make(delta_x=0.0)).delta_x == 0.0


def test_zero_decoherence_is_legal():
    assert validate(make(gamma=0.0)).gamma == 0.0


@pytest.mark.parametrize(
    "field,value,error",
    [
        ("mass", 0.0, NonPositiveMass),
        ("mass", -1e-15, NonPositiveMass),
        ("mass", float("nan"), NonPositiveMass),
        ("d_min", 0.0, NonPositiveSeparation),
        ("delta_x", -1e-9, NegativeWidth),
        ("tau", 0.0, NonPositiveTime),
        ("gamma", -0.1, NegativeDecoherence),
    ],
)
def test_invariant_violations_name_the_field(field, value, error):
    with pytest.raises(error) as excinfo:
        validate(make(**{field: value}))
    assert excinfo.value.field == field


def test_json_schema_parsing():
    cfg = config_from_dict(
        {
            "mass": "1e-14 kg",
            "d_min": "35 um",
            "delta_x": "5 um",
            "tau": "1 s",
            "gamma": "1e-3 Hz",
            "geometry": "parallel2",
        }
    )
    assert cfg.mass == 1e-14
    assert cfg.d_min == 35e-6
    assert cfg.delta_x == 5e-6
    assert cfg.tau == 1.0
    assert cfg.gamma == 1e-3
    assert cfg.geometry is Geometry.PARALLEL2


def test_json_round_trip_is_exact():
    cfg = config_from_dict(
        {
            "mass": "1e-15 kg",
            "d_min": "21 um",
            "delta_x": "7.25 um",
            "tau": "0.5 s",
            "gamma": "12 mHz",
            "geometry": "triangle3",
        }
    )
    again = config_from_dict(config_to_dict(cfg))
    assert again == cfg  # identical SI floats, not merely close


def test_missing_key_and_bad_geometry():
    with pytest.raises(UnitParseError):
        config_from_dict({"mass": "1e-15 kg"})
    with pytest.raises(UnitParseError):
        config_from_dict(
            {
                "mass": "1e-15 kg",
                "d_min": "35 um",
                "delta_x": "0 um",
                "tau": "1 s",
                "gamma": "0 Hz",
                "geometry": "hexagon7",
            }
        )


def test_expert_constant_override():
    cfg = config_from_dict(
        {
            "mass": "1e-15 kg",
            "d_min": "35 um",
            "delta_x": "0 um",
            "tau": "1 s",
            "gamma": "0 Hz",
            "geometry": "parallel2",
            "expert": {"G": 7e-11},
        }
    )
    assert cfg.constants.G == 7e-11
    assert cfg.constants.hbar == CODATA.hbar
    assert "expert" in config_to_dict(cfg)


def test_geometry_qubit_counts():
    assert Geometry.PARALLEL2.n_qubits == 2
    assert Geometry.LINEAR2.n_qubits == 2
    assert Geometry.PARALLEL3.n_qubits == 3
    assert Geometry.TRIANGLE3.n_qubits == 3
    assert Geometry.PARALLEL3.dim == 8
