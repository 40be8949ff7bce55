"""Command-line interface.

Subcommands: template, solve, fit, recover, check-resolvent, selftest.
Outputs are deterministic for identical inputs (floats carry 17 significant
digits; JSON artifacts carry a 'generator' version field and CSV files a
'# coneasym <version>' first line).
"""

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from . import acceptance, jsonio
from ._backend import apply_thread_cap
from .conesolve import (
    ModeProblem,
    RadialProfile,
    csv_to_rows,
    heat_mode,
    rows_to_csv,
    sectorial_sweep,
    solution_rows,
    sweep_to_json,
)
from .errors import (
    ConeAsymError,
    ContinuityHypothesisFailed,
    DomainError,
    FitError,
    KTooSmall,
    NotASpectralExponent,
    QuadratureFailure,
    ScenarioError,
    SpectrumError,
    SpectrumRay,
    WindowViolation,
)
from .fitrecover import peel_exponents, recover_spectrum, reports_from_jsonl, reports_to_jsonl
from .spectra import circle_spectrum, custom_spectrum, sphere_spectrum
from .templates import render_uexp, template_closed_form, template_differences, template_inductive
from .version import __version__
from .weights import admissible_window, window_midpoint

EXIT_CODES = {
    "usage": 2,
    "window": 3,
    "k_too_small": 4,
    "continuity": 5,
    "quadrature": 6,
    "spectrum_ray": 7,
    "domain": 8,
    "fit": 9,
    "spectrum": 10,
    "scenario": 11,
    "selftest": 12,
    "sectorial": 13,
    "internal": 1,
}

_EXIT_DOC = """exit codes:
  0   success
  1   unexpected internal error
  2   usage error
  3   weight exponent outside the admissible window
  4   power k too small (k >= 2 required)
  5   continuity hypothesis s + 2k > (n+1)/p fails
  6   quadrature tolerance not reached
  7   resolvent parameter on the spectral ray
  8   special-function argument outside its domain
  9   exponent fit failed (degenerate samples / noise floor / not spectral)
  10  invalid cross-section spectrum
  11  malformed scenario or i/o problem
  12  selftest criterion failed
  13  sectorial uniformity check failed
"""


def _parse_number(text):
    """Number from CLI/JSON: '1/2' stays an exact fraction."""
    if isinstance(text, str) and "/" in text:
        return Fraction(text)
    if isinstance(text, str):
        value = float(text)
    else:
        value = text
    if isinstance(value, float) and value.is_integer():
        return value
    return value


def build_cross_section(spec: dict):
    name = spec.get("name", "custom")
    j_max = int(spec.get("j_max", 8))
    if name.startswith("s") and name[1:].isdigit():
        return sphere_spectrum(int(name[1:]), j_max)
    if name == "sphere":
        return sphere_spectrum(int(spec["n"]), j_max)
    if name == "circle":
        radius = spec.get("radius")
        radius_squared = spec.get("radius_squared")
        return circle_spectrum(
            radius=_parse_number(radius) if radius is not None else None,
            j_max=j_max,
            radius_squared=_parse_number(radius_squared) if radius_squared is not None else None,
        )
    if name == "custom" or ("eigenvalues" in spec):
        pairs = list(zip(
            [_parse_number(v) for v in spec["eigenvalues"]],
            [int(m) for m in spec["multiplicities"]],
        ))
        return custom_spectrum(int(spec["n"]), pairs, name=spec.get("name", "custom"))
    raise ScenarioError(f"unknown cross-section spec {spec!r}")


def resolve_gamma(gamma, cross_section):
    if gamma == "midpoint":
        window = admissible_window(cross_section.n, cross_section.lambda1)
        if window is None:
            raise WindowViolation("cannot take midpoint of an empty window")
        return window_midpoint(window)
    return _parse_number(gamma)


@dataclass(frozen=True)
class Scenario:
    """Validated solve configuration."""

    cross_section: object
    modes: tuple
    gamma: object
    k: int
    s: float
    p: float
    profile: RadialProfile
    t_values: tuple
    x_grid: np.ndarray
    rel_tol: float

    @staticmethod
    def from_dict(data: dict) -> "Scenario":
        cs = build_cross_section(data["cross_section"])
        gamma = resolve_gamma(data.get("gamma", "midpoint"), cs)
        window = admissible_window(cs.n, cs.lambda1)
        if window is None:
            raise WindowViolation("admissible weight window is empty")
        lo, hi = float(window[0]), float(window[1])
        if not lo < float(gamma) < hi:
            raise WindowViolation(f"gamma={float(gamma)} outside window ({lo}, {hi})")
        modes = tuple(int(j) for j in data.get("modes", [0]))
        for j in modes:
            if not 0 <= j < len(cs.eigenvalues):
                raise ScenarioError(f"mode index {j} outside the provided spectrum")
        prof = data.get("profile", {"shape": "bump", "support": [1.0, 2.0]})
        support = prof.get("support", [1.0, 2.0])
        profile = RadialProfile(
            shape=prof.get("shape", "bump"),
            lo=float(support[0]),
            hi=float(support[1]),
            center=float(prof.get("center", 0.5 * (support[0] + support[1]))),
            width=float(prof.get("width", 0.25 * (support[1] - support[0]))),
        )
        ts = tuple(float(t) for t in data.get("t", [1.0]))
        if not ts or any(t <= 0 for t in ts):
            raise ScenarioError("t values must be positive")
        grid_spec = data.get("x_grid", {"decades": [-4, -1], "points_per_decade": 16})
        if "points" in grid_spec:
            grid = np.asarray([float(v) for v in grid_spec["points"]])
        else:
            dec = grid_spec.get("decades", [-4, -1])
            ppd = int(grid_spec.get("points_per_decade", 16))
            count = int(round((dec[1] - dec[0]) * ppd)) + 1
            grid = np.geomspace(10.0 ** dec[0], 10.0 ** dec[1], count)
        if grid.size == 0 or not np.all(grid > 0):
            raise ScenarioError("x grid must be positive")
        return Scenario(
            cross_section=cs,
            modes=modes,
            gamma=gamma,
            k=int(data.get("k", 3)),
            s=float(data.get("s", 0.0)),
            p=float(data.get("p", 2.0)),
            profile=profile,
            t_values=ts,
            x_grid=grid,
            rel_tol=float(data.get("rel_tol", 1e-9)),
        )


def solve_scenario(scenario: Scenario, backend: str | None = None) -> list:
    """Run every (mode, t) task; deterministic row order."""
    tasks = [
        (j, t)
        for j in scenario.modes
        for t in scenario.t_values
    ]

    def run(task):
        j, t = task
        problem = ModeProblem(
            n=scenario.cross_section.n,
            lam=float(scenario.cross_section.eigenvalues[j]),
            t=t,
            profile=scenario.profile,
        )
        return j, heat_mode(problem, scenario.x_grid, rel_tol=scenario.rel_tol, backend=backend)

    workers = apply_thread_cap()
    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            solutions = list(pool.map(run, tasks))
    else:
        solutions = [run(task) for task in tasks]
    return solution_rows(solutions)


def _write_output(text: str, out: str | None):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_template(args) -> int:
    cs = build_cross_section(_cross_section_args(args))
    gamma = resolve_gamma(args.gamma, cs)
    build = template_inductive if args.inductive else template_closed_form
    template = build(cs, gamma, args.k)
    if args.check:
        other = template_inductive(cs, gamma, args.k)
        diffs = template_differences(template, other)
        if diffs:
            sys.stderr.write("construction mismatch:\n" + "\n".join(diffs) + "\n")
            return EXIT_CODES["internal"]
    if args.text:
        report = render_uexp(template, s=args.s, p=args.p)
        _write_output(report.text() + "\n", args.out)
    else:
        payload = jsonio.loads(template.to_json())
        payload = {"generator": f"coneasym {__version__}", **payload}
        _write_output(jsonio.dumps(payload), args.out)
    return 0


def _cross_section_args(args) -> dict:
    if args.custom:
        with open(args.custom) as fh:
            return jsonio.loads(fh.read())
    spec = {"name": args.cross_section, "j_max": args.j_max}
    if args.radius is not None:
        spec["radius"] = args.radius
    if args.radius_squared is not None:
        spec["radius_squared"] = args.radius_squared
    return spec


def cmd_solve(args) -> int:
    with open(args.scenario) as fh:
        scenario = Scenario.from_dict(jsonio.loads(fh.read()))
    rows = solve_scenario(scenario, backend=args.backend)
    _write_output(rows_to_csv(rows), args.out)
    return 0


def cmd_fit(args) -> int:
    with open(args.csv) as fh:
        rows = csv_to_rows(fh.read())
    groups: dict = {}
    for mode_j, nu, t, x, v in rows:
        groups.setdefault((mode_j, t), []).append((x, v))
    reports = []
    for (mode_j, t), pts in sorted(groups.items()):
        pts.sort()
        x = np.array([p[0] for p in pts])
        v = np.array([p[1] for p in pts])
        lead_window = tuple(args.lead_window) if args.lead_window else None
        next_window = tuple(args.next_window) if args.next_window else None
        for report in peel_exponents(
            x, v, max_terms=args.max_terms,
            lead_window=lead_window, next_window=next_window,
        ):
            reports.append(replace(report, mode_j=mode_j, t=t))
    _write_output(reports_to_jsonl(reports), args.out)
    return 0


def cmd_recover(args) -> int:
    with open(args.fits) as fh:
        reports = reports_from_jsonl(fh.read())
    summary = recover_spectrum(reports, n=args.n, gamma=args.gamma, k=args.k)
    _write_output(summary.to_json(), args.out)
    return 0


def cmd_check_resolvent(args) -> int:
    profile = RadialProfile("bump", args.support[0], args.support[1])
    report = sectorial_sweep(args.n, args.lam_mode, profile)
    _write_output(sweep_to_json(report), args.out)
    if not report["uniform_within_factor_2"]:
        return EXIT_CODES["sectorial"]
    return 0


def cmd_selftest(args) -> int:
    ids = None
    if args.criteria:
        ids = [int(v) for v in args.criteria.split(",")]
    results = acceptance.run_all(ids)
    for result in results:
        sys.stdout.write(acceptance.format_line(result) + "\n")
    if all(r.passed for r in results):
        sys.stdout.write("all criteria passed\n")
        return 0
    return EXIT_CODES["selftest"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coneasym",
        description="Asymptotic templates and model-cone solvers near a conical singularity.",
        epilog=_EXIT_DOC,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"coneasym {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("template", help="emit the expansion template for a cross-section")
    p.add_argument("--cross-section", default="s2", help="s1, s2, s3, ..., or circle")
    p.add_argument("--radius", help="circle radius (accepts fractions like 2/3)")
    p.add_argument("--radius-squared", help="exact squared radius (e.g. 1/2)")
    p.add_argument("--custom", help="path to a cross-section JSON file")
    p.add_argument("--j-max", type=int, default=14)
    p.add_argument("--gamma", default="midpoint", help="weight exponent or 'midpoint'")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=float, default=0.0)
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--inductive", action="store_true", help="build by induction instead of the closed formula")
    p.add_argument("--check", action="store_true", help="cross-check both constructions")
    p.add_argument("--text", action="store_true", help="human-readable expansion instead of JSON")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_template)

    p = sub.add_parser("solve", help="solve heat modes from a scenario config")
    p.add_argument("--scenario", required=True)
    p.add_argument("--backend", choices=["numba", "numpy"], default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("fit", help="fit small-x exponents from a solution CSV")
    p.add_argument("--csv", required=True)
    p.add_argument("--max-terms", type=int, default=2)
    p.add_argument("--lead-window", type=float, nargs=2, default=None)
    p.add_argument("--next-window", type=float, nargs=2, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_fit)

    p = sub.add_parser("recover", help="recover eigenvalues from fit reports")
    p.add_argument("--fits", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_recover)

    p = sub.add_parser("check-resolvent", help="sectorial uniformity sweep")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--lam-mode", type=float, default=-3.0)
    p.add_argument("--support", type=float, nargs=2, default=[4.0, 12.0])
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_check_resolvent)

    p = sub.add_parser("selftest", help="run the full acceptance suite")
    p.add_argument("--criteria", default=None, help="comma-separated criterion ids")
    p.set_defaults(fn=cmd_selftest)
    return parser


_ERROR_EXITS = [
    (WindowViolation, "window"),
    (KTooSmall, "k_too_small"),
    (ContinuityHypothesisFailed, "continuity"),
    (QuadratureFailure, "quadrature"),
    (SpectrumRay, "spectrum_ray"),
    (DomainError, "domain"),
    (FitError, "fit"),
    (NotASpectralExponent, "fit"),
    (SpectrumError, "spectrum"),
    (ScenarioError, "scenario"),
]


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except tuple(cls for cls, _ in _ERROR_EXITS) as exc:
        for cls, key in _ERROR_EXITS:
            if isinstance(exc, cls):
                sys.stderr.write(f"error: {exc}\n")
                return EXIT_CODES[key]
        raise
    except (OSError, ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CODES["scenario"]
    except ConeAsymError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CODES["internal"]


if __name__ == "__main__":
    sys.exit(main())
