"""Bessel evaluations used by the model-cone solvers.

Orders nu in [0, 60] and arguments 0 < |z| <= 1e4 are supported; outside
that box a DomainError is raised rather than returning a value of unknown
quality.  Real-argument I_nu uses the native series/asymptotic kernel (the
hot path of the heat quadrature, numba-compiled when available) with a
relative-error target of 1e-10; K, J, Y and all complex arguments delegate
to scipy.special, which meets the same target on this box.

Scaling conventions for ``scaled=True``: I carries e^(-Re z), K carries
e^(+z); for real z these are the classic overflow-free pairs.
"""

import math
from dataclasses import dataclass

from scipy import special as _sp

from ._kernels import ive_native
from .errors import DomainError

_NU_MAX = 60.0
_Z_MAX = 1.0e4
# exp overflow bound: unscaled I (resp. underflow of K) beyond this cannot
# meet the relative-error contract in double precision.
_UNSCALED_Z_MAX = 700.0


def _check_order(nu: float) -> float:
    nu = float(nu)
    if not 0.0 <= nu <= _NU_MAX:
        raise DomainError(f"order {nu} outside [0, {_NU_MAX}]")
    return nu


def _check_real_arg(z) -> float:
    z = float(z)
    if not 0.0 < z <= _Z_MAX:
        raise DomainError(f"argument {z} outside (0, {_Z_MAX}]")
    return z


def _check_complex_arg(z) -> complex:
    z = complex(z)
    if not 0.0 < abs(z) <= _Z_MAX:
        raise DomainError(f"|argument| {abs(z)} outside (0, {_Z_MAX}]")
    if z.imag == 0.0 and z.real < 0.0:
        raise DomainError("argument on the negative real axis")
    return z


@dataclass(frozen=True)
class BesselEval:
    """One evaluation record: which function, where, and the value."""

    kind: str
    order: float
    argument: object
    value: object
    scaled: bool


def bessel_i(nu, z, scaled: bool = False):
    """Modified Bessel I_nu; native kernel for real z, scipy for complex."""
    nu = _check_order(nu)
    if isinstance(z, complex):
        z = _check_complex_arg(z)
        return complex(_sp.ive(nu, z)) if scaled else complex(_sp.iv(nu, z))
    z = _check_real_arg(z)
    scaled_value = ive_native(nu, z)
    if scaled:
        return scaled_value
    if z > _UNSCALED_Z_MAX:
        raise DomainError(
            f"unscaled I overflows for z={z}; request scaled=True"
        )
    return scaled_value * math.exp(z)


def bessel_k(nu, z, scaled: bool = False):
    """Modified Bessel K_nu (scipy-backed)."""
    nu = _check_order(nu)
    if isinstance(z, complex):
        z = _check_complex_arg(z)
        return complex(_sp.kve(nu, z)) if scaled else complex(_sp.kv(nu, z))
    z = _check_real_arg(z)
    if scaled:
        return float(_sp.kve(nu, z))
    if z > _UNSCALED_Z_MAX:
        raise DomainError(
            f"unscaled K underflows for z={z}; request scaled=True"
        )
    return float(_sp.kv(nu, z))


def bessel_j(nu, z) -> float:
    """Bessel J_nu for real positive arguments (scipy-backed)."""
    nu = _check_order(nu)
    z = _check_real_arg(z)
    return float(_sp.jv(nu, z))


def bessel_y(nu, z) -> float:
    """Bessel Y_nu for real positive arguments (scipy-backed)."""
    nu = _check_order(nu)
    z = _check_real_arg(z)
    return float(_sp.yv(nu, z))


def log_gamma(x) -> float:
    """log Gamma on (0, inf)."""
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def evaluate(kind: str, nu, z, scaled: bool = False) -> BesselEval:
    """Uniform entry point returning a BesselEval record."""
    table = {
        "i": lambda: bessel_i(nu, z, scaled),
        "k": lambda: bessel_k(nu, z, scaled),
        "j": lambda: bessel_j(nu, z),
        "y": lambda: bessel_y(nu, z),
    }
    if kind not in table:
        raise DomainError(f"unknown Bessel kind {kind!r}")
    if kind in ("j", "y") and scaled:
        raise DomainError("scaled evaluation applies to I and K only")
    return BesselEval(kind=kind, order=float(nu), argument=z, value=table[kind](), scaled=scaled)
