"""Backend selection for the numerical kernels.

Two interchangeable kernel paths exist:

* ``numba``: scalar kernels compiled with ``@njit`` (the default when numba
  imports cleanly),
* ``numpy``: vectorized kernels on top of numpy/scipy ufuncs.

``CONE_ASYM_BACKEND`` picks the path (``auto`` | ``numba`` | ``numpy``);
``CONE_ASYM_THREADS`` caps worker threads used by scenario solves and by
numba's thread pool.  Both paths produce results that agree to quadrature
tolerance; per path, output is independent of evaluation order.
"""

import os

from .errors import ConeAsymError

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised on minimal installs
    numba = None
    HAS_NUMBA = False


def requested_backend() -> str:
    """Return the backend name requested via CONE_ASYM_BACKEND."""
    value = os.environ.get("CONE_ASYM_BACKEND", "auto").strip().lower()
    if value not in ("auto", "numba", "numpy"):
        raise ConeAsymError(
            f"CONE_ASYM_BACKEND must be auto, numba or numpy, got {value!r}"
        )
    return value


def active_backend() -> str:
    """Resolve the backend actually in use: 'numba' or 'numpy'."""
    value = requested_backend()
    if value == "auto":
        return "numba" if HAS_NUMBA else "numpy"
    if value == "numba" and not HAS_NUMBA:
        raise ConeAsymError("CONE_ASYM_BACKEND=numba but numba is not importable")
    return value


def thread_cap() -> int:
    """Worker-thread cap from CONE_ASYM_THREADS (default: 1, serial)."""
    raw = os.environ.get("CONE_ASYM_THREADS", "").strip()
    if not raw:
        return 1
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ConeAsymError(f"CONE_ASYM_THREADS must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ConeAsymError("CONE_ASYM_THREADS must be >= 1")
    return cap


def apply_thread_cap() -> int:
    """Apply the thread cap to numba's pool (if active) and return it."""
    cap = thread_cap()
    if HAS_NUMBA:
        try:
            numba.set_num_threads(min(cap, numba.config.NUMBA_NUM_THREADS))
        except ValueError:  # pragma: no cover - single-core hosts
            pass
    return cap


def maybe_njit(**kwargs):
    """Return numba.njit(**kwargs) when numba is available, else identity."""
    if HAS_NUMBA:
        return numba.njit(**kwargs)

    def _identity(fn):
        return fn

    return _identity
