"""Indicial roots, conormal symbol algebra, pole bookkeeping."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coneasym.errors import SpectrumError
from coneasym.indicial import (
    conormal_poly_coeffs,
    conormal_symbol,
    conormal_symbol_power,
    exact_sqrt,
    indicial_roots,
    pole_set,
    root_multiplicity,
)
from coneasym.spectra import circle_spectrum, custom_spectrum


def test_exact_sqrt():
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert exact_sqrt(Fraction(0)) == 0
    assert exact_sqrt(Fraction(2)) is None
    assert exact_sqrt(Fraction(1, 3)) is None


@given(
    n=st.integers(min_value=1, max_value=6),
    num=st.integers(min_value=0, max_value=400),
    den=st.integers(min_value=1, max_value=12),
)
@settings(max_examples=200, deadline=None)
def test_vieta_exact(n, num, den):
    """q- + q+ = n-1 and q- q+ = lambda; exact when the discriminant is a
    perfect rational square (roots come back as Fractions), float otherwise."""
    lam = Fraction(-num, den)
    data = indicial_roots(n, lam)
    if isinstance(data.q_minus, Fraction):
        assert data.q_minus + data.q_plus == n - 1
        assert data.q_minus * data.q_plus == lam
    else:
        assert abs(float(data.q_minus + data.q_plus) - (n - 1)) <= 1e-12
        assert abs(float(data.q_minus * data.q_plus) - float(lam)) <= 1e-10 * max(1.0, -float(lam))


@given(
    n=st.integers(min_value=1, max_value=6),
    lam=st.floats(min_value=-500.0, max_value=0.0),
)
@settings(max_examples=200, deadline=None)
def test_vieta_float(n, lam):
    data = indicial_roots(n, lam)
    assert abs(float(data.q_minus + data.q_plus) - (n - 1)) <= 1e-12 * max(1.0, n - 1.0)
    assert abs(float(data.q_minus * data.q_plus) - lam) <= 1e-11 * max(1.0, abs(lam))


def test_indicial_roots_exact_path():
    data = indicial_roots(2, Fraction(-6))
    assert data.nu == Fraction(5, 2)
    assert data.mu == Fraction(-2)
    assert data.q_minus == Fraction(-2)
    assert data.q_plus == Fraction(3)
    assert isinstance(data.mu, Fraction)


def test_positive_eigenvalue_rejected():
    with pytest.raises(SpectrumError):
        indicial_roots(2, Fraction(1))


def test_conormal_symbol_values():
    # sigma(z) = z^2 - (n-1) z + lam
    assert conormal_symbol(3, Fraction(-4), Fraction(1)) == 1 - 2 - 4
    assert conormal_symbol(1, -4.0, 2.0) == 0.0


def test_composed_symbol_coefficients_by_hand():
    # n=1, lam=-4: sigma_2(z) = (z^2-4)(z^2+4z) = z^4 + 4z^3 - 4z^2 - 16z
    assert conormal_poly_coeffs(1, Fraction(-4), 2) == [0, -16, -4, 4, 1]


def test_composed_symbol_roots_oracle():
    """numpy.roots of the composed polynomial must be the shifted pairs."""
    n, lam, k = 2, -3.0, 3
    coeffs = conormal_poly_coeffs(n, lam, k)
    got = sorted(np.roots(list(map(float, reversed(coeffs)))).real)
    data = indicial_roots(n, lam)
    expected = sorted(
        float(q) - 2 * i for q in (data.q_minus, data.q_plus) for i in range(k)
    )
    assert np.allclose(got, expected, atol=1e-6)


def test_symbol_power_matches_coefficients():
    rng = np.random.default_rng(7)
    for n, lam in ((1, -4.0), (2, -6.0), (3, -7.0)):
        for k in (1, 2, 4):
            coeffs = [float(c) for c in conormal_poly_coeffs(n, lam, k)]
            for _ in range(5):
                z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
                horner = 0j
                for c in reversed(coeffs):
                    horner = horner * z + c
                direct = conormal_symbol_power(n, lam, k, z)
                assert abs(direct - horner) <= 1e-12 * max(1.0, abs(direct))


def test_root_multiplicity_exact():
    # (z-1)^2 (z+2) = z^3 - 3z + 2
    coeffs = [Fraction(2), Fraction(-3), Fraction(0), Fraction(1)]
    assert root_multiplicity(coeffs, Fraction(1)) == 2
    assert root_multiplicity(coeffs, Fraction(-2)) == 1
    assert root_multiplicity(coeffs, Fraction(3)) == 0


def test_pole_set_circle_k1():
    cs = circle_spectrum(radius=Fraction(1, 2), j_max=2)
    poles = pole_set(cs, 1)
    by_location = {p.location: p for p in poles.poles}
    assert by_location[Fraction(0)].order == 2
    assert by_location[Fraction(2)].order == 1
    assert by_location[Fraction(-2)].order == 1
    # descending locations
    locations = [float(p.location) for p in poles.poles]
    assert locations == sorted(locations, reverse=True)


def test_pole_set_k2_orders():
    """Order is the max over modes: at -2 the shifted constant-mode double
    root dominates the simple mode-1 root."""
    cs = circle_spectrum(radius=Fraction(1, 2), j_max=1)
    poles = pole_set(cs, 2)
    by_location = {p.location: p for p in poles.poles}
    assert by_location[Fraction(0)].order == 2
    pole = by_location[Fraction(-2)]
    assert pole.order == 2
    assert {j for j, _, _ in pole.provenance} == {0, 1}
    assert len(pole.provenance) == 3


def test_pole_merge_flags_near_collision():
    mu_a = -2.0 + 4e-10
    mu_b = -2.0 - 4e-10
    lam_a = mu_a * (1.0 - mu_a)
    lam_b = mu_b * (1.0 - mu_b)
    cs = custom_spectrum(2, [(0, 1), (lam_a, 1), (lam_b, 1)])
    poles = pole_set(cs, 1)
    near = [p for p in poles.poles if abs(float(p.location) + 2.0) < 1e-6]
    assert len(near) == 1
    assert near[0].approximate
    assert len(near[0].provenance) == 2


def test_pole_set_exact_no_flags(circle_half):
    poles = pole_set(circle_half, 2)
    assert not any(p.approximate for p in poles.poles)


def test_pole_set_json(circle_half):
    import json

    payload = json.loads(pole_set(circle_half, 2).to_json())
    assert payload["k"] == 2
    assert all({"location", "order", "provenance"} <= set(p) for p in payload["poles"])
