"""Asymptotics of heat flow near an isolated conical singularity.

Builds the exponent/log template of solutions near the cone tip from the
cross-section spectrum, solves model-cone heat and resolvent problems to
high accuracy, and closes the loop by recovering eigenvalues from the
numerically observed exponents.
"""

from ._backend import active_backend, requested_backend
from .conesolve import (
    ModeProblem,
    ModeSolution,
    RadialProfile,
    ResolventModeSolution,
    default_grid,
    heat_kernel,
    heat_mode,
    heat_mode_patch,
    heat_pde_residual,
    heat_small_x_series,
    resolvent_mode,
    resolvent_residual,
    sectorial_sweep,
)
from .errors import (
    ConeAsymError,
    ContinuityHypothesisFailed,
    DegenerateSamples,
    DomainError,
    FitError,
    KTooSmall,
    NoiseFloor,
    NotASpectralExponent,
    QuadratureFailure,
    ScenarioError,
    SpectrumError,
    SpectrumRay,
    TruncationTooShort,
    WindowViolation,
)
from .fitrecover import (
    FitReport,
    RecoverySummary,
    fit_leading_exponent,
    peel_exponents,
    recover_lambda,
    recover_spectrum,
)
from .indicial import (
    IndicialData,
    Pole,
    PoleSet,
    conormal_poly_coeffs,
    conormal_symbol,
    conormal_symbol_power,
    indicial_roots,
    pole_set,
    root_multiplicity,
)
from .spectra import (
    CrossSection,
    circle_spectrum,
    custom_spectrum,
    harmonic_multiplicity,
    sphere_spectrum,
)
from .templates import (
    AsymTerm,
    ExpansionReport,
    ExpansionTemplate,
    Origin,
    render_uexp,
    template_closed_form,
    template_differences,
    template_inductive,
)
from .version import __version__
from .weights import (
    WeightConfig,
    WeightInterval,
    admissible_window,
    basic_window,
    j_interval,
    locate_interval,
    make_weight_config,
    membership,
    quadrature_membership,
    window_midpoint,
)

__all__ = [
    "__version__",
    "active_backend",
    "requested_backend",
    "CrossSection",
    "circle_spectrum",
    "custom_spectrum",
    "harmonic_multiplicity",
    "sphere_spectrum",
    "IndicialData",
    "Pole",
    "PoleSet",
    "indicial_roots",
    "conormal_symbol",
    "conormal_symbol_power",
    "conormal_poly_coeffs",
    "root_multiplicity",
    "pole_set",
    "WeightConfig",
    "WeightInterval",
    "admissible_window",
    "basic_window",
    "window_midpoint",
    "j_interval",
    "locate_interval",
    "membership",
    "quadrature_membership",
    "make_weight_config",
    "Origin",
    "AsymTerm",
    "ExpansionTemplate",
    "ExpansionReport",
    "template_closed_form",
    "template_inductive",
    "template_differences",
    "render_uexp",
    "RadialProfile",
    "ModeProblem",
    "ModeSolution",
    "ResolventModeSolution",
    "default_grid",
    "heat_kernel",
    "heat_mode",
    "heat_mode_patch",
    "heat_small_x_series",
    "heat_pde_residual",
    "resolvent_mode",
    "resolvent_residual",
    "sectorial_sweep",
    "FitReport",
    "RecoverySummary",
    "fit_leading_exponent",
    "peel_exponents",
    "recover_lambda",
    "recover_spectrum",
    "ConeAsymError",
    "SpectrumError",
    "WindowViolation",
    "KTooSmall",
    "ContinuityHypothesisFailed",
    "DomainError",
    "QuadratureFailure",
    "SpectrumRay",
    "FitError",
    "DegenerateSamples",
    "NoiseFloor",
    "NotASpectralExponent",
    "ScenarioError",
    "TruncationTooShort",
]
