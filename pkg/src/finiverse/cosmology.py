"""Vacuum pointset cosmology calculator and scale-factor integrator.

Core quantities, all plain SI floats:

* vacuum point count  P = rho_vac * L_U**4 / (pi*hbar*c)
* cosmological constant  Lambda = 8*pi*G*rho_vac/c**4, equivalently
  (8*pi**2*hbar*G/c**3) * P / L_U**4
* linearized expansion  L_U(dt) = L_U0*(1 + H0*dt) and
  P(dt) = (c**3*Lambda/(8*pi**2*hbar*G)) * L_U0**4 * (1 + 4*H0*dt)
* exact flat-space rate  dP/dt = 4*H0*P0 and growth exp(4*H0*dt)
* pointset density  P/L_U**3 and the minimum resolvable diameter
  (pi*hbar*c/(rho_vac*L_U))**(1/3)

``evolve_scale_factor`` integrates the coupled system

    addot/a = -(4*pi*G/3)*(rho + 3*p/c**2) + Lambda*c**2/a**2
    rhodot  = -3*(adot/a)*(rho + p/c**2)

with classical fixed-step fourth-order Runge-Kutta and a mandatory
step-halving endpoint verification, recording the first-integral
residual (adot/a)**2 - (8*pi*G/3)*rho + kappa*c**2/a**2 - Lambda*c**2/a**2
at every sample.

Conformance note: the Lambda term is implemented as Lambda*c**2/a**2 in
both the acceleration equation and the first integral, the convention
adopted consistently throughout this package; the textbook form divides
by 3 and omits the scale factor.  For the vacuum equation of state with
Lambda = 0 (the validated regime) the difference is moot.  Expansion is
linearized as L_U0*(1 + H0*dt) where noted, so the linearized forms
carry a documented validity guard |H0*dt| <= 0.1 and emit
LinearityWarning beyond it.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from numbers import Real
from typing import Callable, Optional

from .constants import CODATA2018, GIGAYEAR, Constants
from .errors import (
    CurvatureUnsupportedError,
    InvalidInputError,
    NonPositiveScaleFactorError,
    SizeLimitError,
    StepTooLargeError,
)

__all__ = [
    "LINEAR_GUARD",
    "LinearityWarning",
    "CosmologyParams",
    "OBSERVED",
    "FluidState",
    "ScaleFactorTrajectory",
    "vacuum_point_count",
    "lambda_from_density",
    "universe_diameter_at",
    "point_count_at_linear",
    "point_count_rate",
    "point_count_rate_general",
    "point_count_growth_factor",
    "growth_exponent_per_gigayear",
    "pointset_density",
    "min_metric_diameter",
    "planck_vacuum_density",
    "acceleration_constant_check",
    "vacuum_pressure_law",
    "dust_pressure_law",
    "friedmann_hubble_rate",
    "evolve_scale_factor",
    "load_config",
]

#: |H0*dt| beyond which the linearized formulas are flagged
LINEAR_GUARD = 0.1

#: integrator refuses runs needing more steps than this
MAX_STEPS = 1_000_000


class LinearityWarning(UserWarning):
    """A linearized expansion formula was evaluated outside |H0*dt| <= 0.1."""


@dataclass(frozen=True)
class CosmologyParams:
    """Observational inputs: vacuum energy density (J/m^3), present
    universe diameter (m), Hubble constant (1/s), curvature sign."""

    rho_vac: float = 5.4e-10
    L_U0: float = 8.8e26
    H0: float = 2.19e-18
    kappa: int = 0

    def __post_init__(self):
        for name in ("rho_vac", "L_U0", "H0"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, Real) or v <= 0:
                raise InvalidInputError(f"{name} must be positive, got {v!r}")
        if self.kappa not in (-1, 0, 1):
            raise InvalidInputError(f"curvature sign must be -1, 0 or +1, got {self.kappa!r}")


#: present-day observational defaults
OBSERVED = CosmologyParams()


def vacuum_point_count(params: CosmologyParams,
                       constants: Constants = CODATA2018) -> float:
    """Number of vacuum points in the observable universe:
    rho_vac * L_U0**4 / (pi*hbar*c)."""
    return params.rho_vac * params.L_U0**4 / (math.pi * constants.hbar * constants.c)


def lambda_from_density(params: CosmologyParams,
                        constants: Constants = CODATA2018) -> float:
    """Cosmological constant 8*pi*G*rho_vac/c**4, in 1/m^2."""
    return 8 * math.pi * constants.G * params.rho_vac / constants.c**4


def _linear_guard(h0dt: float, what: str) -> None:
    if abs(h0dt) > LINEAR_GUARD:
        warnings.warn(
            f"{what} evaluated at H0*dt = {h0dt:.3g}, outside the linear "
            f"validity guard |H0*dt| <= {LINEAR_GUARD}",
            LinearityWarning,
            stacklevel=3,
        )


def universe_diameter_at(params: CosmologyParams, dt: float) -> float:
    """Linear Hubble growth of the diameter: L_U0 * (1 + H0*dt)."""
    if isinstance(dt, bool) or not isinstance(dt, Real) or dt < 0:
        raise InvalidInputError(f"time offset must be nonnegative, got {dt!r}")
    _linear_guard(params.H0 * dt, "universe_diameter_at")
    return params.L_U0 * (1 + params.H0 * dt)


def point_count_at_linear(params: CosmologyParams, dt: float,
                          constants: Constants = CODATA2018) -> float:
    """Linearized point count at time offset dt:
    (c**3*Lambda/(8*pi**2*hbar*G)) * L_U0**4 * (1 + 4*H0*dt).

    At dt = 0 this reduces exactly to vacuum_point_count.
    """
    if isinstance(dt, bool) or not isinstance(dt, Real):
        raise InvalidInputError(f"time offset must be a real number, got {dt!r}")
    _linear_guard(params.H0 * dt, "point_count_at_linear")
    lam = lambda_from_density(params, constants)
    prefactor = constants.c**3 * lam / (8 * math.pi**2 * constants.hbar * constants.G)
    return prefactor * params.L_U0**4 * (1 + 4 * params.H0 * dt)


def point_count_rate(params: CosmologyParams,
                     constants: Constants = CODATA2018) -> float:
    """Flat-space point-count rate dP/dt = 4 * H0 * P0, in 1/s."""
    if params.kappa != 0:
        raise CurvatureUnsupportedError(
            "the closed-form rate 4*H0*P0 holds only for flat spatial "
            f"sections (kappa = 0), got kappa = {params.kappa}"
        )
    return 4 * params.H0 * vacuum_point_count(params, constants)


def point_count_rate_general(params: CosmologyParams, dt: float,
                             hubble_rate: float, accel_ratio: float,
                             constants: Constants = CODATA2018) -> float:
    """General point-count rate for an arbitrary expansion history:

    (c**3*Lambda/(2*pi**2*hbar*G)) * L_U0**4
        * ((addot/a - (adot/a)**2)*dt + adot/a)

    with adot/a = hubble_rate (1/s) and addot/a = accel_ratio (1/s^2)
    evaluated on that history.  For constant hubble_rate = H0 (so
    accel_ratio = H0**2) it reduces to 4*H0*P0 at every dt.
    """
    lam = lambda_from_density(params, constants)
    prefactor = constants.c**3 * lam / (2 * math.pi**2 * constants.hbar * constants.G)
    bracket = (accel_ratio - hubble_rate**2) * dt + hubble_rate
    return prefactor * params.L_U0**4 * bracket


def point_count_growth_factor(H0: float, dt: float) -> float:
    """Exponential point-count growth over dt: exp(4*H0*dt)."""
    return math.exp(4 * H0 * dt)


def growth_exponent_per_gigayear(H0: float) -> float:
    """The exponent 4*H0*dt accumulated over one gigayear."""
    return 4 * H0 * GIGAYEAR


def pointset_density(params: CosmologyParams,
                     constants: Constants = CODATA2018) -> float:
    """Vacuum points per cubic meter: vacuum_point_count / L_U0**3."""
    return vacuum_point_count(params, constants) / params.L_U0**3


def min_metric_diameter(params: CosmologyParams,
                        constants: Constants = CODATA2018) -> float:
    """Edge of the smallest vacuum box expected to hold about one point:
    (pi*hbar*c/(rho_vac*L_U0))**(1/3), in meters."""
    return (math.pi * constants.hbar * constants.c / (params.rho_vac * params.L_U0)) ** (1 / 3)


def planck_vacuum_density(constants: Constants = CODATA2018) -> float:
    """Vacuum energy density set by the Planck length:
    c**4 / (8*pi*G*l_planck**2), in J/m^3."""
    return constants.c**4 / (8 * math.pi * constants.G * constants.l_planck**2)


def acceleration_constant_check(params: CosmologyParams,
                                constants: Constants = CODATA2018) -> float:
    """Constant acceleration ratio addot/a of a vacuum-dominated epoch.

    With rho = rho_vac/c**2 and p = -rho_vac the acceleration equation
    collapses to (8*pi*G/(3*c**2)) * rho_vac > 0.
    """
    return 8 * math.pi * constants.G * params.rho_vac / (3 * constants.c**2)


# ---------------------------------------------------------------------------
# scale-factor integration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FluidState:
    """Instantaneous state: scale factor, its rate, mass density (kg/m^3),
    pressure (Pa), and time (s)."""

    a: float
    a_dot: float
    rho: float
    p: float = 0.0
    t: float = 0.0

    def __post_init__(self):
        if not (isinstance(self.a, Real) and self.a > 0):
            raise NonPositiveScaleFactorError(f"scale factor must be positive, got {self.a!r}")

    @property
    def hubble(self) -> float:
        return self.a_dot / self.a


@dataclass(frozen=True)
class ScaleFactorTrajectory:
    """Time-ordered integration output.

    ``friedmann_residuals[i]`` is the first-integral defect at sample i
    and ``acceleration_ratios[i]`` the instantaneous addot/a;
    ``halving_rel_diff`` records how much the endpoint moved when the
    run was repeated at half step (always <= 1e-6, enforced).
    """

    samples: tuple
    step: float
    scheme_order: int = 4
    friedmann_residuals: tuple = field(default=())
    acceleration_ratios: tuple = field(default=())
    halving_rel_diff: float = 0.0

    def __post_init__(self):
        ts = [s.t for s in self.samples]
        if any(t1 >= t2 for t1, t2 in zip(ts, ts[1:])):
            raise InvalidInputError("sample times must be strictly increasing")
        if any(s.a <= 0 for s in self.samples):
            raise NonPositiveScaleFactorError("trajectory contains a nonpositive scale factor")

    @property
    def final(self) -> FluidState:
        return self.samples[-1]


def vacuum_pressure_law(constants: Constants = CODATA2018) -> Callable[[float], float]:
    """Equation of state p = -c**2 * rho (vacuum-like fluid)."""
    c2 = constants.c**2
    return lambda rho: -c2 * rho


def dust_pressure_law() -> Callable[[float], float]:
    """Pressureless matter: p = 0 for any density."""
    return lambda rho: 0.0


def friedmann_hubble_rate(rho: float, lam: float = 0.0, kappa: int = 0,
                          a: float = 1.0,
                          constants: Constants = CODATA2018) -> float:
    """Expansion rate adot/a satisfying the first integral:
    sqrt((8*pi*G/3)*rho - kappa*c**2/a**2 + lam*c**2/a**2)."""
    c2 = constants.c**2
    h2 = (8 * math.pi * constants.G / 3) * rho - kappa * c2 / a**2 + lam * c2 / a**2
    if h2 < 0:
        raise InvalidInputError(f"no real expansion rate: H^2 = {h2} < 0")
    return math.sqrt(h2)


def _derivatives(a, a_dot, rho, eos, lam, constants):
    if a <= 0:
        raise NonPositiveScaleFactorError(
            f"scale factor reached {a} during integration"
        )
    p = eos(rho)
    c2 = constants.c**2
    accel_ratio = -(4 * math.pi * constants.G / 3) * (rho + 3 * p / c2) + lam * c2 / a**2
    rho_dot = -3 * (a_dot / a) * (rho + p / c2)
    return a_dot, a * accel_ratio, rho_dot


def _integrate(initial, eos, lam, kappa, t_end, step, constants, record):
    """Fixed-step classical RK4 over [initial.t, t_end].

    Returns (samples, residuals, accel_ratios) when ``record`` is true,
    else just the endpoint triple (a, a_dot, rho).
    """
    c2 = constants.c**2
    g83 = 8 * math.pi * constants.G / 3
    a, a_dot, rho = initial.a, initial.a_dot, initial.rho
    t = initial.t

    samples = []
    residuals = []
    accels = []

    def snap():
        p = eos(rho)
        accel = -(4 * math.pi * constants.G / 3) * (rho + 3 * p / c2) + lam * c2 / a**2
        residual = (a_dot / a) ** 2 - g83 * rho + kappa * c2 / a**2 - lam * c2 / a**2
        samples.append(FluidState(a=a, a_dot=a_dot, rho=rho, p=p, t=t))
        residuals.append(residual)
        accels.append(accel)

    if record:
        snap()
    while t < t_end:
        h = min(step, t_end - t)
        k1 = _derivatives(a, a_dot, rho, eos, lam, constants)
        k2 = _derivatives(a + 0.5 * h * k1[0], a_dot + 0.5 * h * k1[1],
                          rho + 0.5 * h * k1[2], eos, lam, constants)
        k3 = _derivatives(a + 0.5 * h * k2[0], a_dot + 0.5 * h * k2[1],
                          rho + 0.5 * h * k2[2], eos, lam, constants)
        k4 = _derivatives(a + h * k3[0], a_dot + h * k3[1],
                          rho + h * k3[2], eos, lam, constants)
        a += h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0])
        a_dot += h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])
        rho += h / 6 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2])
        t += h
        if a <= 0:
            raise NonPositiveScaleFactorError(f"scale factor reached {a} at t = {t}")
        if record:
            snap()
    if record:
        return samples, residuals, accels
    return a, a_dot, rho


def evolve_scale_factor(initial: FluidState, eos: Callable[[float], float],
                        lam: float, kappa: int, t_end: float, step: float,
                        constants: Constants = CODATA2018) -> ScaleFactorTrajectory:
    """Integrate the acceleration + continuity system with fixed-step RK4.

    The run is always repeated at half step; if the endpoint scale
    factor differs by more than 1e-6 relative, StepTooLargeError is
    raised instead of returning an untrustworthy trajectory.  Samples
    land on every full step plus the exact endpoint, each carrying the
    monitored Friedmann residual and acceleration ratio.
    """
    if kappa not in (-1, 0, 1):
        raise InvalidInputError(f"curvature sign must be -1, 0 or +1, got {kappa!r}")
    if not (isinstance(step, Real) and step > 0):
        raise InvalidInputError(f"step must be positive, got {step!r}")
    if not (isinstance(t_end, Real) and t_end > initial.t):
        raise InvalidInputError(f"t_end must exceed the initial time {initial.t}")
    if not callable(eos):
        raise InvalidInputError("eos must be a callable pressure law p(rho)")
    span = t_end - initial.t
    if span / step > MAX_STEPS:
        raise SizeLimitError(
            f"{math.ceil(span / step)} steps exceed the limit {MAX_STEPS}"
        )

    samples, residuals, accels = _integrate(
        initial, eos, lam, kappa, t_end, step, constants, record=True
    )
    a_half, _, _ = _integrate(
        initial, eos, lam, kappa, t_end, step / 2, constants, record=False
    )
    a_end = samples[-1].a
    rel = abs(a_end - a_half) / max(abs(a_half), abs(a_end))
    if rel > 1e-6:
        raise StepTooLargeError(
            f"halving the step moved the endpoint by relative {rel:.3e} "
            f"(> 1e-6); reduce step below {step}"
        )
    return ScaleFactorTrajectory(
        samples=tuple(samples),
        step=float(step),
        scheme_order=4,
        friedmann_residuals=tuple(residuals),
        acceleration_ratios=tuple(accels),
        halving_rel_diff=rel,
    )


# ---------------------------------------------------------------------------
# configuration file
# ---------------------------------------------------------------------------

_CONSTANT_KEYS = ("hbar", "c", "G", "l_planck", "l_strong")
_PARAM_KEYS = ("rho_vac", "L_U0", "H0", "kappa")


def load_config(path, base_constants: Constants = CODATA2018,
                base_params: CosmologyParams = OBSERVED) -> tuple[Constants, CosmologyParams]:
    """Read a flat key=value config file overriding constants and params.

    Recognized keys: hbar, c, G, l_planck, l_strong, rho_vac, L_U0, H0,
    kappa.  Blank lines and lines starting with '#' are skipped; any
    other key raises InvalidInputError.
    """
    consts = {k: getattr(base_constants, k) for k in _CONSTANT_KEYS}
    pars = {k: getattr(base_params, k) for k in _PARAM_KEYS}
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise InvalidInputError(f"cannot read config file {path}: {exc}") from None
    with fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise InvalidInputError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            try:
                num = int(value) if key == "kappa" else float(value)
            except ValueError:
                raise InvalidInputError(
                    f"{path}:{lineno}: bad numeric value {value!r} for {key}"
                ) from None
            if key in consts:
                consts[key] = num
            elif key in pars:
                pars[key] = num
            else:
                raise InvalidInputError(f"{path}:{lineno}: unknown key {key!r}")
    return Constants(**consts), CosmologyParams(**pars)
