"""Low-level numerical kernels.

Scaled modified Bessel function of the first kind, the model-cone heat
kernel built from it, and adaptive Gauss-Legendre quadrature that turns the
kernel into mode solutions.  Everything here works on plain float64 scalars
and is compiled with numba when the ``numba`` backend is active; the
``numpy`` backend drives the same adaptive refinement with vectorized
panels on top of ``scipy.special.ive``.

Notation: the mode operator on the model cone of dimension n+1 is

    L = d^2/dx^2 + (n/x) d/dx + lambda / x^2,   nu^2 = ((n-1)/2)^2 - lambda,

and its heat kernel with respect to the measure xi^n dxi is

    p_nu(t, x, xi) = (x xi)^((1-n)/2) (2t)^(-1)
                     * exp(-(x^2 + xi^2) / (4t)) * I_nu(x xi / (2t)).

The exponentially scaled form used throughout multiplies by
exp(-(x-xi)^2/(4t)) and e^(-w) I_nu(w), w = x xi/(2t), so no intermediate
overflows for any (t, x, xi) in range.
"""

import math

import numpy as np
from scipy import special as _sp

from ._backend import HAS_NUMBA, maybe_njit

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)
_GL_NODES = np.ascontiguousarray(_GL_NODES)
_GL_WEIGHTS = np.ascontiguousarray(_GL_WEIGHTS)

# exp underflows to 0 below this; the scaled series start is formed in
# log space so the check is exact.
_LOG_TINY = -745.0


def _ive_series(nu, z):
    """e^(-z) I_nu(z) by the ascending series, summed outward from its
    largest term.

    The central index m* solves (m+1)(nu+m+1) = (z/2)^2; the term there is
    formed with lgamma in log space, so the start never overflows, and the
    two sweeps away from m* add strictly positive, decreasing terms (no
    cancellation for real z >= 0).
    """
    half = 0.5 * z
    q = half * half
    m0 = 0.5 * (math.sqrt(nu * nu + 4.0 * q) - (nu + 2.0))
    mstar = 0
    if m0 > 0.0:
        mstar = int(m0)
    logt = (
        (nu + 2.0 * mstar) * math.log(half)
        - math.lgamma(mstar + 1.0)
        - math.lgamma(nu + mstar + 1.0)
        - z
    )
    if logt < _LOG_TINY:
        return 0.0
    t0 = math.exp(logt)
    total = t0
    t = t0
    m = mstar
    while m < mstar + 1000000:
        m += 1
        t *= q / (m * (nu + m))
        total += t
        if t <= total * 1e-17:
            break
    t = t0
    m = mstar
    while m > 0:
        t *= m * (nu + m) / q
        total += t
        m -= 1
        if t <= total * 1e-17:
            break
    return total


def _ive_asym(nu, z):
    """e^(-z) I_nu(z) by the large-argument expansion

    (2 pi z)^(-1/2) * sum_m (-1)^m a_m(nu) / z^m,
    a_m = prod_{i=1..m} (4 nu^2 - (2i-1)^2) / (8 i).

    Valid only where the series has settled below 1e-15 before its terms
    turn; the dispatcher guarantees that region.
    """
    fournu2 = 4.0 * nu * nu
    term = 1.0
    total = 1.0
    m = 0
    while m < 40:
        m += 1
        odd = 2.0 * m - 1.0
        term *= -(fournu2 - odd * odd) / (8.0 * m * z)
        total += term
        if abs(term) <= abs(total) * 1e-17:
            break
    return total / math.sqrt(2.0 * math.pi * z)


def _ive_scalar(nu, z):
    """Scaled modified Bessel e^(-z) I_nu(z) for real nu >= 0, z > 0."""
    if z >= 40.0 and z >= 1.6 * nu * nu + 25.0:
        return _ive_asym(nu, z)
    return _ive_series(nu, z)


def _profile_scalar(xi, fcode, a, b, p0, p1):
    """Source profile value at xi, supported on [a, b].

    fcode 0: smooth bump exp(1 - 1/(1-u^2)), u the affine map of [a,b] to
    [-1,1]; fcode 1: gaussian centered at p0 with width p1, truncated to
    [a,b]; fcode 2: indicator of [a,b].
    """
    if xi <= a or xi >= b:
        return 0.0
    if fcode == 0:
        u = (2.0 * xi - a - b) / (b - a)
        return math.exp(1.0 - 1.0 / (1.0 - u * u))
    if fcode == 1:
        r = (xi - p0) / p1
        return math.exp(-r * r)
    return 1.0


def _heat_kernel_scalar(nu, n, t, x, xi):
    """Heat kernel p_nu(t, x, xi), overflow-safe scaled evaluation."""
    w = x * xi / (2.0 * t)
    d = x - xi
    pref = (x * xi) ** (0.5 * (1.0 - n)) / (2.0 * t)
    return pref * math.exp(-d * d / (4.0 * t)) * _ive_scalar(nu, w)


def _heat_panel(nu, n, t, x, a, b, fcode, flo, fhi, p0, p1, nodes, weights):
    """16-point Gauss-Legendre estimate of the mode integral on [a, b]."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    s = 0.0
    for i in range(nodes.shape[0]):
        xi = c + h * nodes[i]
        fv = _profile_scalar(xi, fcode, flo, fhi, p0, p1)
        if fv != 0.0:
            s += weights[i] * fv * _heat_kernel_scalar(nu, n, t, x, xi) * xi**n
    return s * h


def _heat_adaptive(
    nu, n, t, x, lo, hi, fcode, p0, p1, abs_tol, max_depth, nodes, weights
):
    """One adaptive bisection sweep; error budget abs_tol spread by width.

    Returns (value, error_estimate, panel_count, converged).
    """
    max_stack = 256
    sa = np.empty(max_stack)
    sb = np.empty(max_stack)
    si = np.empty(max_stack)
    sd = np.empty(max_stack, np.int64)
    sa[0] = lo
    sb[0] = hi
    si[0] = _heat_panel(nu, n, t, x, lo, hi, fcode, lo, hi, p0, p1, nodes, weights)
    sd[0] = 0
    top = 1
    width0 = hi - lo
    total = 0.0
    err = 0.0
    panels = 0
    ok = True
    while top > 0:
        top -= 1
        a = sa[top]
        b = sb[top]
        i1 = si[top]
        depth = sd[top]
        m = 0.5 * (a + b)
        il = _heat_panel(nu, n, t, x, a, m, fcode, lo, hi, p0, p1, nodes, weights)
        ir = _heat_panel(nu, n, t, x, m, b, fcode, lo, hi, p0, p1, nodes, weights)
        e = abs(i1 - (il + ir))
        budget = abs_tol * (b - a) / width0
        if e <= budget or depth >= max_depth or top + 2 > max_stack:
            if e > budget:
                ok = False
            total += il + ir
            err += e
            panels += 2
        else:
            sa[top] = a
            sb[top] = m
            si[top] = il
            sd[top] = depth + 1
            top += 1
            sa[top] = m
            sb[top] = b
            si[top] = ir
            sd[top] = depth + 1
            top += 1
    return total, err, panels, ok


def _heat_value(nu, n, t, x, lo, hi, fcode, p0, p1, rel_tol, max_depth, nodes, weights):
    """Mode integral at one eval point to relative tolerance rel_tol.

    A coarse whole-support panel fixes the magnitude scale (the integrand
    is nonnegative, so the scale cannot collapse by cancellation); a second
    sweep with a tightened budget runs only if the first misses.
    """
    coarse = _heat_panel(nu, n, t, x, lo, hi, fcode, lo, hi, p0, p1, nodes, weights)
    scale = abs(coarse)
    if scale == 0.0:
        scale = 1e-300
    value, err, panels, ok = _heat_adaptive(
        nu, n, t, x, lo, hi, fcode, p0, p1, 0.5 * rel_tol * scale, max_depth, nodes, weights
    )
    if ok and err <= rel_tol * abs(value):
        return value, err, panels, True
    value2, err2, panels2, ok2 = _heat_adaptive(
        nu, n, t, x, lo, hi, fcode, p0, p1,
        0.3 * rel_tol * max(abs(value), 1e-300), max_depth, nodes, weights,
    )
    converged = ok2 and err2 <= rel_tol * abs(value2)
    return value2, err2, panels + panels2, converged


def _heat_rows_loop(
    nu, n, t, xs, lo, hi, fcode, p0, p1, rel_tol, max_depth, nodes, weights,
    out_val, out_err, out_panels, out_ok,
):
    for i in range(xs.shape[0]):
        v, e, pn, ok = _heat_value(
            nu, n, t, xs[i], lo, hi, fcode, p0, p1, rel_tol, max_depth, nodes, weights
        )
        out_val[i] = v
        out_err[i] = e
        out_panels[i] = pn
        out_ok[i] = ok


if HAS_NUMBA:
    _jit = maybe_njit(cache=True, nogil=True)
    _ive_series = _jit(_ive_series)
    _ive_asym = _jit(_ive_asym)
    _ive_scalar = _jit(_ive_scalar)
    _profile_scalar = _jit(_profile_scalar)
    _heat_kernel_scalar = _jit(_heat_kernel_scalar)
    _heat_panel = _jit(_heat_panel)
    _heat_adaptive = _jit(_heat_adaptive)
    _heat_value = _jit(_heat_value)
    _heat_rows_loop = _jit(_heat_rows_loop)


def ive_native(nu: float, z: float) -> float:
    """Native scaled I: series/asymptotic split, jitted when available."""
    return _ive_scalar(float(nu), float(z))


def heat_kernel_value(nu: float, n: int, t: float, x: float, xi: float) -> float:
    """p_nu(t, x, xi) through the native kernel path."""
    return _heat_kernel_scalar(float(nu), float(n), float(t), float(x), float(xi))


# ---------------------------------------------------------------------------
# numpy/scipy fallback path: identical adaptive control flow, vectorized
# panels, scipy's ive in place of the native series.
# ---------------------------------------------------------------------------


def _profile_np(xi, fcode, a, b, p0, p1):
    out = np.zeros_like(xi)
    inside = (xi > a) & (xi < b)
    if fcode == 0:
        u = (2.0 * xi[inside] - a - b) / (b - a)
        out[inside] = np.exp(1.0 - 1.0 / (1.0 - u * u))
    elif fcode == 1:
        r = (xi[inside] - p0) / p1
        out[inside] = np.exp(-(r * r))
    else:
        out[inside] = 1.0
    return out


def _heat_panel_np(nu, n, t, x, a, b, fcode, flo, fhi, p0, p1):
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    xi = c + h * _GL_NODES
    fv = _profile_np(xi, fcode, flo, fhi, p0, p1)
    w = x * xi / (2.0 * t)
    kern = (
        (x * xi) ** (0.5 * (1.0 - n))
        / (2.0 * t)
        * np.exp(-((x - xi) ** 2) / (4.0 * t))
        * _sp.ive(nu, w)
    )
    return h * float(np.sum(_GL_WEIGHTS * fv * kern * xi**n))


def _heat_value_np(nu, n, t, x, lo, hi, fcode, p0, p1, rel_tol, max_depth):
    def sweep(abs_tol):
        stack = [(lo, hi, _heat_panel_np(nu, n, t, x, lo, hi, fcode, lo, hi, p0, p1), 0)]
        width0 = hi - lo
        total = 0.0
        err = 0.0
        panels = 0
        ok = True
        while stack:
            a, b, i1, depth = stack.pop()
            m = 0.5 * (a + b)
            il = _heat_panel_np(nu, n, t, x, a, m, fcode, lo, hi, p0, p1)
            ir = _heat_panel_np(nu, n, t, x, m, b, fcode, lo, hi, p0, p1)
            e = abs(i1 - (il + ir))
            budget = abs_tol * (b - a) / width0
            if e <= budget or depth >= max_depth or len(stack) > 254:
                if e > budget:
                    ok = False
                total += il + ir
                err += e
                panels += 2
            else:
                stack.append((a, m, il, depth + 1))
                stack.append((m, b, ir, depth + 1))
        return total, err, panels, ok

    scale = abs(_heat_panel_np(nu, n, t, x, lo, hi, fcode, lo, hi, p0, p1))
    if scale == 0.0:
        scale = 1e-300
    value, err, panels, ok = sweep(0.5 * rel_tol * scale)
    if ok and err <= rel_tol * abs(value):
        return value, err, panels, True
    value2, err2, panels2, ok2 = sweep(0.3 * rel_tol * max(abs(value), 1e-300))
    return value2, err2, panels + panels2, ok2 and err2 <= rel_tol * abs(value2)


def heat_rows(nu, n, t, xs, lo, hi, fcode, p0, p1, rel_tol, max_depth, backend):
    """Mode integral along an array of eval points.

    Returns (values, error_estimates, panel_counts, converged_flags); the
    per-point results do not depend on the order of xs.
    """
    xs = np.ascontiguousarray(np.asarray(xs, dtype=np.float64))
    out_val = np.empty(xs.shape[0])
    out_err = np.empty(xs.shape[0])
    out_panels = np.empty(xs.shape[0], np.int64)
    out_ok = np.empty(xs.shape[0], np.bool_)
    if backend == "numba":
        _heat_rows_loop(
            float(nu), float(n), float(t), xs, float(lo), float(hi), int(fcode),
            float(p0), float(p1), float(rel_tol), int(max_depth),
            _GL_NODES, _GL_WEIGHTS, out_val, out_err, out_panels, out_ok,
        )
    else:
        for i, x in enumerate(xs):
            v, e, pn, ok = _heat_value_np(
                float(nu), float(n), float(t), float(x), float(lo), float(hi),
                int(fcode), float(p0), float(p1), float(rel_tol), int(max_depth),
            )
            out_val[i] = v
            out_err[i] = e
            out_panels[i] = pn
            out_ok[i] = ok
    return out_val, out_err, out_panels, out_ok
