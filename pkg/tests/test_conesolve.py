"""Model-cone heat and resolvent solvers against independent checks."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from coneasym.conesolve import (
    ModeProblem,
    RadialProfile,
    csv_to_rows,
    default_grid,
    heat_kernel,
    heat_mode,
    heat_mode_patch,
    heat_pde_residual,
    heat_small_x_series,
    resolvent_mode,
    resolvent_residual,
    rows_to_csv,
    sectorial_sweep,
    solution_rows,
)
from coneasym.errors import QuadratureFailure, ScenarioError, SpectrumRay
from coneasym._kernels import heat_rows


def test_profile_shapes():
    bump = RadialProfile("bump", 1.0, 2.0)
    xs = np.array([0.5, 1.0, 1.5, 2.0, 3.0])
    vals = bump(xs)
    assert vals[0] == vals[1] == vals[3] == vals[4] == 0.0
    assert vals[2] == pytest.approx(1.0)

    box = RadialProfile("indicator", 1.0, 2.0)
    assert list(box(xs)) == [0.0, 0.0, 1.0, 0.0, 0.0]

    with pytest.raises(ScenarioError):
        RadialProfile("bump", 2.0, 1.0)
    with pytest.raises(ScenarioError):
        RadialProfile("bump", 0.0, 1.0)
    with pytest.raises(ScenarioError):
        RadialProfile("triangle", 1.0, 2.0)


def test_exact_self_similar_solution_satisfies_pde():
    """t^(-(n+1)/2) exp(-x^2/4t) solves the lam = 0 radial heat equation."""
    for n in (1, 2, 3):
        ts = np.linspace(0.5, 1.5, 201)
        xs = np.linspace(0.5, 2.0, 151)
        tt, xx = np.meshgrid(ts, xs, indexing="ij")
        values = tt ** (-0.5 * (n + 1)) * np.exp(-xx * xx / (4.0 * tt))
        assert heat_pde_residual(n, 0.0, ts, xs, values) < 1e-6


def test_solver_output_satisfies_pde(bump12):
    ts = np.linspace(0.8, 1.2, 41)
    xs = np.linspace(0.5, 1.0, 51)
    values = heat_mode_patch(1, -4.0, bump12, ts, xs)
    assert heat_pde_residual(1, -4.0, ts, xs, values) < 5e-6


def test_kernel_scaling_identity():
    rng = np.random.default_rng(99)
    for _ in range(5):
        nu = float(rng.uniform(0.0, 4.0))
        n = int(rng.integers(1, 4))
        t, x, xi = (float(v) for v in rng.uniform(0.2, 2.0, size=3))
        rho = float(rng.uniform(0.5, 2.0))
        left = heat_kernel(nu, n, rho * rho * t, rho * x, rho * xi)
        right = rho ** (-(n + 1)) * heat_kernel(nu, n, t, x, xi)
        assert abs(left - right) <= 1e-12 * abs(right)


def test_mass_is_conserved():
    """For the constant mode (nu = 0, n = 1) the kernel integrates to one
    against the cone measure x dx."""
    t, xi = 0.7, 2.0
    total, err = quad(lambda x: heat_kernel(0.0, 1, t, x, xi) * x, 1e-12, xi + 30.0 * math.sqrt(t),
                      points=[xi], limit=200)
    assert err < 1e-7
    assert abs(total - 1.0) < 1e-8


def test_small_x_series_bridges_solver(bump12):
    problem = ModeProblem(n=1, lam=-2.25, t=1.0, profile=bump12)
    xs = np.geomspace(1e-4, 1e-3, 9)
    sol = heat_mode(problem, xs)
    series = heat_small_x_series(problem, num_terms=3)
    predicted = sum(c * xs**e for e, c in series)
    rel = np.max(np.abs(predicted - sol.values) / np.abs(sol.values))
    assert rel < 1e-8


def test_small_x_series_leading_exponent(bump12):
    problem = ModeProblem(n=2, lam=-6.0, t=0.5, profile=bump12)
    series = heat_small_x_series(problem)
    assert series[0][0] == pytest.approx(2.0)  # -mu_2 for S^2-like mode
    assert series[1][0] == pytest.approx(4.0)


def test_heat_mode_validates_grid(bump12):
    problem = ModeProblem(n=1, lam=0.0, t=1.0, profile=bump12)
    with pytest.raises(ScenarioError):
        heat_mode(problem, np.array([-1.0, 1.0]))
    with pytest.raises(ScenarioError):
        heat_mode(problem, np.array([]))


def test_heat_mode_tolerance_failure(bump12):
    problem = ModeProblem(n=1, lam=0.0, t=1.0, profile=bump12)
    with pytest.raises(QuadratureFailure):
        heat_mode(problem, np.array([0.5]), rel_tol=1e-15, max_depth=1)


def test_backends_agree(bump12):
    xs = default_grid(decades=(-3, 0), points_per_decade=4)
    args = (1.5, 1, 1.0, xs, bump12.lo, bump12.hi, bump12.fcode,
            bump12.center, bump12.width, 1e-10, 20)
    v_numba, _, _, ok_a = heat_rows(*args, "numba")
    v_numpy, _, _, ok_b = heat_rows(*args, "numpy")
    assert ok_a.all() and ok_b.all()
    assert np.max(np.abs(v_numba - v_numpy) / np.abs(v_numpy)) < 1e-13


def test_default_grid():
    grid = default_grid()
    assert grid.size == 49
    assert grid[0] == pytest.approx(1e-4)
    assert grid[-1] == pytest.approx(1e-1)


def test_csv_round_trip(bump12):
    problem = ModeProblem(n=1, lam=-4.0, t=1.0, profile=bump12)
    sol = heat_mode(problem, np.geomspace(1e-3, 1e-1, 7))
    rows = solution_rows([(1, sol)])
    back = csv_to_rows(rows_to_csv(rows))
    assert back == rows  # %.17g round-trips doubles exactly


def test_resolvent_residual_small(bump12):
    lam = 2.0 + 1.0j
    xs = np.linspace(1.2, 1.8, 601)
    sol = resolvent_mode(1, -4.0, lam, bump12, xs)
    res = resolvent_residual(1, -4.0, lam, xs, sol.values, bump12(xs))
    assert res < 1e-7


def test_resolvent_regular_branch_at_origin(bump12):
    """Below the support the solution is a multiple of the regular branch
    x^((1-n)/2) I_nu, so log-slope at 0 is -mu = nu - (n-1)/2."""
    xs = np.geomspace(1e-6, 1e-5, 5)
    sol = resolvent_mode(1, -4.0, 3.0 + 0.0j, bump12, xs)
    slopes = np.diff(np.log(np.abs(sol.values))) / np.diff(np.log(xs))
    assert np.allclose(slopes, 2.0, atol=1e-6)


def test_resolvent_decays_past_support(bump12):
    xs = np.array([2.5, 3.5, 5.0, 8.0])
    sol = resolvent_mode(1, -4.0, 1.0 + 1.0j, bump12, xs)
    mags = np.abs(sol.values)
    assert np.all(np.diff(mags) < 0)


def test_spectrum_ray_rejected(bump12):
    for lam in (-1.0 + 0.0j, 0.0 + 0.0j):
        with pytest.raises(SpectrumRay):
            resolvent_mode(1, -4.0, lam, bump12, np.array([1.0]))
    # positive reals are fine
    resolvent_mode(1, -4.0, 0.5 + 0.0j, bump12, np.array([1.0]))


def test_sectorial_sweep_structure():
    report = sectorial_sweep(
        1, -1.0, RadialProfile("bump", 4.0, 12.0),
        moduli=(1.0, 10.0), ray_args=(0.0,),
        x_eval=np.geomspace(1e-2, 24.0, 40),
    )
    assert set(report) == {"n", "lam_mode", "rays", "uniform_within_factor_2"}
    ray = report["rays"][0]
    assert len(ray["lam_times_sup"]) == 2
    assert ray["ratio"] >= 1.0
