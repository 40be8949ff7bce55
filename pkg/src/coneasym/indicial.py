"""Indicial roots and conormal symbols of the cone Laplacian.

Restricted to a single cross-section mode with eigenvalue lam, the
Mellin (conormal) symbol of the Laplacian is the quadratic

    sigma(z) = z^2 - (n-1) z + lam,

whose roots are the indicial pair

    q^{+/-} = (n-1)/2 +/- sqrt(((n-1)/2)^2 - lam),

so q^- + q^+ = n-1 and q^- q^+ = lam.  The symbol of the k-th power
composes with unit shifts of 2:

    sigma_k(z) = sigma(z) sigma(z+2) ... sigma(z+2(k-1)).

Poles of the inverted symbol (locations q_j^{+/-} - 2i) drive the
asymptotic templates; their order is the maximum over modes of the scalar
root multiplicity.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from . import jsonio
from .errors import PositiveEigenvalue

_TOL = 1e-12
_MERGE_TOL = 1e-9


def exact_sqrt(value: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


@dataclass(frozen=True)
class IndicialData:
    """Indicial pair of one mode; exact Fractions when constructible."""

    n: int
    lam: object
    nu: object
    mu: object
    q_minus: object
    q_plus: object


def indicial_roots(n: int, lam) -> IndicialData:
    """Indicial data of one mode: nu, mu = (n-1)/2 - nu, and q^{+/-}."""
    if isinstance(lam, Rational):
        lam = Fraction(lam)
        if lam > 0:
            raise PositiveEigenvalue(f"eigenvalue {lam} is positive")
        half = Fraction(n - 1, 2)
        disc = half * half - lam
        nu = exact_sqrt(disc)
        if nu is None:
            nu = math.sqrt(float(disc))
    else:
        lam = float(lam)
        if lam > _TOL:
            raise PositiveEigenvalue(f"eigenvalue {lam} is positive")
        half = 0.5 * (n - 1)
        nu = math.sqrt(half * half - lam)
    q_minus = half - nu
    q_plus = half + nu
    return IndicialData(n=n, lam=lam, nu=nu, mu=q_minus, q_minus=q_minus, q_plus=q_plus)


def conormal_symbol(n: int, lam, z):
    """sigma(z) = z^2 - (n-1) z + lam; z may be complex."""
    return z * z - (n - 1) * z + lam


def conormal_symbol_power(n: int, lam, k: int, z):
    """sigma_k(z) = prod_{i=0..k-1} sigma(z + 2i)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = 1
    for i in range(k):
        out = out * conormal_symbol(n, lam, z + 2 * i)
    return out


def conormal_poly_coeffs(n: int, lam, k: int) -> list:
    """Ascending coefficients of sigma_k, exact when lam is rational."""
    if k < 1:
        raise ValueError("k must be >= 1")
    exact = isinstance(lam, Rational)
    lam = Fraction(lam) if exact else float(lam)
    coeffs = [Fraction(1)] if exact else [1.0]
    for i in range(k):
        const = 4 * i * i - 2 * i * (n - 1) + lam
        lin = 4 * i - (n - 1)
        factor = [const, lin, Fraction(1) if exact else 1.0]
        out = [Fraction(0) if exact else 0.0] * (len(coeffs) + 2)
        for a, ca in enumerate(coeffs):
            for b, cb in enumerate(factor):
                out[a + b] += ca * cb
        coeffs = out
    return coeffs


def root_multiplicity(coeffs, z0) -> int:
    """Multiplicity of z0 as a root, by exact synthetic division.

    Requires rational coefficients and root; the factorization oracle for
    the composed symbol.
    """
    if not all(isinstance(c, Rational) for c in coeffs) or not isinstance(z0, Rational):
        raise TypeError("root_multiplicity requires exact rational input")
    coeffs = [Fraction(c) for c in coeffs]
    z0 = Fraction(z0)
    mult = 0
    while len(coeffs) > 1:
        # synthetic division by (z - z0); remainder is p(z0)
        degree = len(coeffs) - 1
        quotient = [Fraction(0)] * degree
        quotient[degree - 1] = coeffs[degree]
        for i in range(degree - 1, 0, -1):
            quotient[i - 1] = coeffs[i] + z0 * quotient[i]
        remainder = coeffs[0] + z0 * quotient[0]
        if remainder != 0:
            break
        mult += 1
        coeffs = quotient
    return mult


@dataclass(frozen=True)
class Pole:
    """One pole of the inverted composed symbol.

    ``provenance`` lists every (mode j, branch '+'/'-', shift 2i) that
    lands here; ``order`` is the max over modes of the per-mode root
    multiplicity; ``approximate`` marks a floating-point merge.
    """

    location: object
    order: int
    provenance: tuple
    approximate: bool = False


@dataclass(frozen=True)
class PoleSet:
    k: int
    poles: tuple

    def locations(self) -> list:
        return [p.location for p in self.poles]

    def to_json(self) -> str:
        return jsonio.dumps(
            {
                "k": self.k,
                "poles": [
                    {
                        "location": p.location,
                        "order": p.order,
                        "provenance": [
                            {"j": j, "branch": branch, "shift": shift}
                            for (j, branch, shift) in p.provenance
                        ],
                        "approximate": p.approximate,
                    }
                    for p in self.poles
                ],
            }
        )


def pole_set(cross_section, k: int) -> PoleSet:
    """All poles q_j^{+/-} - 2i, i < k, grouped and ordered by location.

    Exact locations group exactly; float locations merge within 1e-9 and
    the pole is flagged approximate when the merged values were not
    identical.  Poles are listed with decreasing location (increasing
    candidate exponent -location).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    entries = []  # (location, j, branch, shift, per-mode key)
    for j, lam in enumerate(cross_section.eigenvalues):
        data = indicial_roots(cross_section.n, lam)
        for i in range(k):
            entries.append((data.q_plus - 2 * i, j, "+", 2 * i))
            entries.append((data.q_minus - 2 * i, j, "-", 2 * i))
    groups = _group_locations(entries)
    poles = []
    for location, members, approximate in groups:
        per_mode: dict[int, int] = {}
        for _, j, _, _ in members:
            per_mode[j] = per_mode.get(j, 0) + 1
        order = max(per_mode.values())
        provenance = tuple(sorted((j, branch, shift) for _, j, branch, shift in members))
        poles.append(Pole(location, order, provenance, approximate))
    poles.sort(key=lambda p: -float(p.location))
    return PoleSet(k=k, poles=tuple(poles))


def _group_locations(entries):
    """Group (location, ...) tuples: exact equality for rationals, 1e-9
    absolute merge for floats (rationals within 1e-9 of a float group merge
    into it, flagged)."""
    exact: dict[Fraction, list] = {}
    inexact: list = []
    for entry in entries:
        loc = entry[0]
        if isinstance(loc, Rational):
            exact.setdefault(Fraction(loc), []).append(entry)
        else:
            inexact.append(entry)
    groups = []
    used_exact = set()
    inexact.sort(key=lambda e: float(e[0]))
    cluster: list = []
    for entry in inexact:
        if cluster and float(entry[0]) - float(cluster[-1][0]) > _MERGE_TOL:
            groups.append(_finish_cluster(cluster, exact, used_exact))
            cluster = []
        cluster.append(entry)
    if cluster:
        groups.append(_finish_cluster(cluster, exact, used_exact))
    for key, members in exact.items():
        if key not in used_exact:
            groups.append((key, members, False))
    return groups


def _finish_cluster(cluster, exact, used_exact):
    values = [float(e[0]) for e in cluster]
    members = list(cluster)
    approximate = max(values) > min(values)
    center = sum(values) / len(values)
    for key, entries in exact.items():
        if key not in used_exact and abs(float(key) - center) <= _MERGE_TOL:
            members.extend(entries)
            used_exact.add(key)
            approximate = True
    return (center, members, approximate)
