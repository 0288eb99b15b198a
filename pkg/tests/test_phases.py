import itertools
import math

import pytest

from gravwitness.config import ExperimentConfig, Geometry
from gravwitness.errors import ApproximationOutOfRegime
from gravwitness.phases import (
    PhaseSet,
    effective_rate_approx,
    phases_for,
    phases_linear2,
    phases_parallel2,
    phases_parallel3,
    phases_triangle3,
)


def cfg(geometry, mass=1e-15, d_min=35e-6, delta_x=10e-6, tau=1.0, gamma=0.0):
    return ExperimentConfig(mass, d_min, delta_x, tau, gamma, geometry)


# Frozen expected values from an independent 50-digit evaluation of the
# rate formulas with the CODATA constants.
OMEGA1_PAR2_71UM = -0.010087334070512404  # m=1e-15, d=35um, dx=71um
OMEGA1_LIN2_4UM = 0.18546283869056097  # m=1e-14, d=35um, dx=4um
OMEGA2_LIN2_4UM = -0.15095812451557288
OMEGA_SUM_LIN2_4UM = 0.034504714174988088
PAR3_TABLE_45UM = {  # m=1e-15, d=35um, dx=45um
    (0, 0, 0): 0.0,
    (0, 0, 1): -0.0084169229743533525,
    (0, 1, 0): -0.013961935595528552,
    (0, 1, 1): -0.0084169229743533525,
    (1, 0, 0): -0.0084169229743533525,
    (1, 0, 1): -0.013961935595528552,
    (1, 1, 0): -0.0084169229743533525,
    (1, 1, 1): 0.0,
}


def test_zero_width_gives_zero_rates_everywhere():
    for geometry in Geometry:
        ps = phases_for(cfg(geometry, delta_x=0.0))
        assert all(rate == 0.0 for rate in ps.rates.values())


def test_parallel2_structure():
    ps = phases_parallel2(cfg(Geometry.PARALLEL2, delta_x=71e-6))
    assert ps.rates[(0, 0)] == 0.0
    assert ps.rates[(1, 1)] == 0.0  # both-down branch keeps the pair distance
    assert ps.rates[(1, 0)] == ps.rates[(0, 1)]
    assert ps.rates[(1, 0)] == pytest.approx(OMEGA1_PAR2_71UM, rel=1e-12)


def test_parallel2_rate_sum_negative_for_any_width():
    for dx in (1e-9, 1e-6, 35e-6, 200e-6):
        assert phases_parallel2(cfg(Geometry.PARALLEL2, delta_x=dx)).rate_sum() < 0.0


def test_parallel2_monotone_in_width_and_separation():
    # |omega_sum| strictly increases with width, strictly decreases with
    # separation (finite sampling stands in for the comparative statics)
    widths = [1e-6 * k for k in (1, 5, 10, 20, 50, 100)]
    sums = [
        abs(phases_parallel2(cfg(Geometry.PARALLEL2, delta_x=dx)).rate_sum())
        for dx in widths
    ]
    assert all(a < b for a, b in zip(sums, sums[1:]))
    seps = [10e-6, 21e-6, 35e-6, 70e-6, 140e-6]
    sums = [
        abs(phases_parallel2(cfg(Geometry.PARALLEL2, d_min=d)).rate_sum())
        for d in seps
    ]
    assert all(a > b for a, b in zip(sums, sums[1:]))


def test_linear2_values_and_signs():
    ps = phases_linear2(cfg(Geometry.LINEAR2, mass=1e-14, delta_x=4e-6))
    assert ps.rates[(1, 0)] == pytest.approx(OMEGA1_LIN2_4UM, rel=1e-12)
    assert ps.rates[(0, 1)] == pytest.approx(OMEGA2_LIN2_4UM, rel=1e-12)
    assert ps.rate_sum() == pytest.approx(OMEGA_SUM_LIN2_4UM, rel=1e-12)
    assert ps.rates[(1, 1)] == 0.0
    for dx in (1e-9, 1e-6, 35e-6, 200e-6):
        ps = phases_linear2(cfg(Geometry.LINEAR2, delta_x=dx))
        assert ps.rates[(1, 0)] > 0.0 > ps.rates[(0, 1)]
        assert ps.rate_sum() > 0.0


def test_parallel3_table():
    ps = phases_parallel3(cfg(Geometry.PARALLEL3, delta_x=45e-6))
    for branch, expected in PAR3_TABLE_45UM.items():
        if expected == 0.0:
            assert ps.rates[branch] == 0.0
        else:
            assert ps.rates[branch] == pytest.approx(expected, rel=1e-12)


def test_parallel3_reduces_to_pairwise_parallel2():
    # each mixed pair contributes the 2-qubit parallel rate at its own
    # separation d*(k-i)
    c = cfg(Geometry.PARALLEL3, delta_x=45e-6)
    pair_near = phases_parallel2(
        cfg(Geometry.PARALLEL2, delta_x=45e-6, d_min=c.d_min)
    ).rates[(1, 0)]
    pair_far = phases_parallel2(
        cfg(Geometry.PARALLEL2, delta_x=45e-6, d_min=2 * c.d_min)
    ).rates[(1, 0)]
    ps = phases_parallel3(c)
    assert ps.rates[(0, 1, 0)] == pytest.approx(2 * pair_near, rel=1e-12)
    assert ps.rates[(0, 0, 1)] == pytest.approx(pair_near + pair_far, rel=1e-12)


def test_triangle3_permutation_symmetry():
    ps = phases_triangle3(cfg(Geometry.TRIANGLE3, delta_x=45e-6))
    for branch in ps.rates:
        for perm in itertools.permutations(branch):
            assert ps.rates[perm] == ps.rates[branch]
    assert ps.rates[(1, 0, 0)] == ps.rates[(0, 1, 0)] == ps.rates[(0, 0, 1)]
    # the chain layout is NOT permutation symmetric
    ps_chain = phases_parallel3(cfg(Geometry.PARALLEL3, delta_x=45e-6))
    assert ps_chain.rates[(0, 1, 0)] != ps_chain.rates[(1, 0, 0)]


def test_rates_are_continuous_at_zero_width():
    # linear rates are first order in the width, parallel ones second order;
    # both shrink smoothly to the exact zero at delta_x = 0
    for geometry in Geometry:
        previous = None
        for dx in (1e-9, 1e-10, 1e-11, 1e-12):
            level = max(abs(r) for r in phases_for(cfg(geometry, delta_x=dx)).rates.values())
            if previous is not None:
                assert level <= previous
            previous = level
        assert previous < 1e-8


def test_geometry_mismatch_rejected():
    with pytest.raises(ValueError):
        phases_parallel2(cfg(Geometry.LINEAR2))
    with pytest.raises(ValueError):
        phases_triangle3(cfg(Geometry.PARALLEL3))


def test_phase_set_invariants_enforced():
    with pytest.raises(ValueError):
        PhaseSet(2, {(0, 0): 0.0, (0, 1): 1.0})  # incomplete
    with pytest.raises(ValueError):
        PhaseSet(2, {(0, 0): 0.1, (0, 1): 0.0, (1, 0): 0.0, (1, 1): 0.0})
    with pytest.raises(ValueError):
        PhaseSet(
            2,
            {(0, 0): 0.0, (0, 1): math.inf, (1, 0): 0.0, (1, 1): 0.0},
        )


def test_effective_rate_parallel_formula():
    c = cfg(Geometry.PARALLEL2, delta_x=0.35e-6)  # dx/d = 0.01
    k = c.constants.G * c.mass**2 / c.constants.hbar
    assert effective_rate_approx(c) == pytest.approx(
        k * 2 * c.delta_x**2 / c.d_min**3, rel=1e-12
    )
    assert effective_rate_approx(cfg(Geometry.PARALLEL2, delta_x=0.0)) == 0.0


def test_effective_rate_is_twice_the_exact_small_width_sum():
    # the printed estimate carries a factor 2 relative to the exact
    # small-width limit of |omega_1 + omega_2|
    c = cfg(Geometry.PARALLEL2, delta_x=35e-9)  # dx/d = 1e-3
    exact = abs(phases_parallel2(c).rate_sum())
    assert exact / effective_rate_approx(c) == pytest.approx(0.5, abs=1e-5)


def test_effective_rate_warns_out_of_regime():
    with pytest.warns(ApproximationOutOfRegime):
        effective_rate_approx(cfg(Geometry.PARALLEL2, delta_x=10e-6))
    with pytest.raises(ValueError):
        effective_rate_approx(cfg(Geometry.PARALLEL3))
