"""Command-line surface: `finiverse <subcommand> <action> [--flags]`.

Every report is deterministic: the same argv produces byte-identical
JSON.  Floats render as 15-significant-digit decimal strings, exact
rationals as {"num": ..., "den": ...}; every physical output carries a
unit string.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import cosmology, fields, geometry, hilbert, regularization
from .constants import CODATA2018, GIGAYEAR
from .cosmology import OBSERVED, CosmologyParams, LinearityWarning
from .errors import FiniverseError, InvalidInputError, SizeLimitError, UsageError

__all__ = ["RunReport", "dispatch", "render_json", "render_text", "main"]


@dataclass
class RunReport:
    command: str
    status: str = "ok"  # ok | none | error
    inputs: dict = dc_field(default_factory=dict)
    outputs: dict = dc_field(default_factory=dict)  # name -> (value, unit)
    formula: str = ""
    message: str = ""
    error: str | None = None
    witness: object = None
    warnings: list = dc_field(default_factory=list)
    exit_code: int = 0
    fmt: str = "text"

    def to_dict(self) -> dict:
        doc = {"command": self.command, "status": self.status}
        if self.inputs:
            doc["inputs"] = {k: _jsonify(v) for k, v in self.inputs.items()}
        if self.status == "none":
            doc["result"] = None
        doc["outputs"] = {
            name: {"value": _jsonify(value), "unit": unit}
            for name, (value, unit) in self.outputs.items()
        }
        if self.formula:
            doc["formula"] = self.formula
        if self.message:
            doc["message"] = self.message
        if self.error is not None:
            doc["error"] = self.error
            if self.witness is not None:
                doc["witness"] = _jsonify(self.witness)
        if self.warnings:
            doc["warnings"] = list(self.warnings)
        doc["exit_code"] = self.exit_code
        return doc


def _fmt_float(v: float) -> str:
    return format(float(v), ".15g")


def _jsonify(v):
    if isinstance(v, bool):
        return v
    if isinstance(v, Fraction):
        return {"num": v.numerator, "den": v.denominator}
    if isinstance(v, float):
        return _fmt_float(v)
    if isinstance(v, int):
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonify(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonify(x) for k, x in v.items()}
    return str(v)


def render_json(report: RunReport) -> bytes:
    return (json.dumps(report.to_dict(), ensure_ascii=False) + "\n").encode("utf-8")


def _text_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return _fmt_float(v)
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_text_value(x) for x in v) + ")"
    return str(v)


def _render_grid(rows: list) -> list[str]:
    width = max(len(str(cell)) for row in rows for cell in row)
    return ["  ".join(str(cell).rjust(width) for cell in row) for row in rows]


def render_text(report: RunReport) -> str:
    lines = [f"command: {report.command}", f"status: {report.status}"]
    if report.inputs:
        lines.append(
            "inputs: " + " ".join(f"{k}={_text_value(v)}" for k, v in report.inputs.items())
        )
    for name, (value, unit) in report.outputs.items():
        if isinstance(value, (list, tuple)) and value and isinstance(value[0], (list, tuple)):
            lines.append(f"{name}:")
            lines.extend("  " + row for row in _render_grid(value))
        else:
            suffix = "" if unit in ("", None) else f" [{unit}]"
            lines.append(f"{name} = {_text_value(value)}{suffix}")
    if report.status == "none":
        lines.append("result: none")
    if report.message:
        lines.append(f"message: {report.message}")
    if report.error is not None:
        lines.append(f"error: {report.error}")
        if report.witness is not None:
            lines.append(f"witness: {_text_value(report.witness)}")
    for w in report.warnings:
        lines.append(f"warning: {w}")
    if report.formula:
        lines.append(f"formula: {report.formula}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 2
        raise UsageError(message)


def _field_spec_from(args) -> fields.FieldSpec:
    if getattr(args, "gaussian", False):
        return fields.make_gaussian_extension(args.p)
    return fields.make_extension_field(args.p, args.k)


def _field_spec_from_order(q: int) -> fields.FieldSpec:
    if q < 2:
        raise InvalidInputError(f"field order must be at least 2, got {q}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    k = 0
    n = q
    while n % p == 0 and n > 1:
        n //= p
        k += 1
    if n != 1:
        raise InvalidInputError(f"{q} is not a prime power")
    return fields.make_extension_field(p, k)


def _parse_element(spec: fields.FieldSpec, text: str) -> fields.FieldElement:
    if ":" in text:
        return spec.element([int(c) for c in text.split(":")])
    return spec.element(int(text))


def _parse_vector(spec: fields.FieldSpec, text: str) -> list:
    return [_parse_element(spec, part) for part in text.split(",")]


def _parse_rational_points(text: str) -> list[geometry.RationalPoint]:
    points = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise InvalidInputError(f"point {chunk!r} is not x,y")
        points.append(geometry.RationalPoint(Fraction(parts[0]), Fraction(parts[1])))
    return points


def _constants_and_params(args):
    constants, params = CODATA2018, OBSERVED
    if getattr(args, "config", None):
        constants, params = cosmology.load_config(args.config)
    overrides = {}
    for flag, name in (("rho_vac", "rho_vac"), ("l_u", "L_U0"), ("h0", "H0"), ("kappa", "kappa")):
        v = getattr(args, flag, None)
        if v is not None:
            overrides[name] = v
    if overrides:
        params = CosmologyParams(
            rho_vac=overrides.get("rho_vac", params.rho_vac),
            L_U0=overrides.get("L_U0", params.L_U0),
            H0=overrides.get("H0", params.H0),
            kappa=overrides.get("kappa", params.kappa),
        )
    return constants, params


def _params_inputs(params: CosmologyParams) -> dict:
    return {
        "rho_vac": params.rho_vac,
        "L_U0": params.L_U0,
        "H0": params.H0,
        "kappa": params.kappa,
    }


# -- handlers ----------------------------------------------------------------


def _axiom_outputs(report) -> dict:
    out = {"order": (report.order, "elements"), "all_pass": (report.all_pass, "")}
    for name, check in report.checks.items():
        out[name] = ("pass" if check.passed else f"FAIL witness {check.witness}", "")
    return out


def _handle_field_table(args) -> RunReport:
    spec = _field_spec_from(args)
    if spec.order > 64:
        raise SizeLimitError(f"table rendering capped at order 64, got {spec.order}")
    elements, add_t, mul_t = fields.operation_tables(spec)
    labels = [str(e) for e in elements]

    def grid(table, symbol):
        rows = [[symbol] + labels]
        for i, lab in enumerate(labels):
            rows.append([lab] + [labels[int(j)] for j in table[i]])
        return rows

    return RunReport(
        command="field table",
        inputs={"p": spec.p, "k": spec.k, "modulus": _poly_str(spec.modulus_poly)},
        outputs={
            "add_table": (grid(add_t, "+"), ""),
            "mul_table": (grid(mul_t, "*"), ""),
        },
        formula="arithmetic mod p and mod the modulus polynomial",
    )


def _poly_str(coeffs) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            var = "x" if i == 1 else f"x^{i}"
            terms.append(var if c == 1 else f"{c}{var}")
    return "+".join(terms) if terms else "0"


def _handle_field_gaussian(args) -> RunReport:
    spec = fields.make_gaussian_extension(args.p)
    return RunReport(
        command="field gaussian",
        inputs={"p": args.p},
        outputs={
            "order": (spec.order, "elements"),
            "modulus": (_poly_str(spec.modulus_poly), ""),
            "is_field": (True, ""),
        },
        formula="pairs x+iy mod p form a field iff p mod 4 == 3",
    )


def _handle_field_axioms(args) -> RunReport:
    if args.ring is not None:
        report = fields.verify_modular_ring_axioms(args.ring)
        inputs = {"ring": f"Z/{args.ring}"}
    else:
        spec = _field_spec_from(args)
        report = fields.verify_field_axioms(spec)
        inputs = {"p": spec.p, "k": spec.k}
    return RunReport(
        command="field axioms",
        inputs=inputs,
        outputs=_axiom_outputs(report),
        formula="exhaustive truth-table check of all field axioms",
    )


def _handle_field_inverse(args) -> RunReport:
    spec = _field_spec_from(args)
    element = _parse_element(spec, args.element)
    return RunReport(
        command="field inverse",
        inputs={"p": spec.p, "k": spec.k, "element": str(element)},
        outputs={"inverse": (str(element.inverse()), "")},
        formula="extended Euclidean algorithm on coefficient polynomials",
    )


def _handle_geometry_degenerate(args) -> RunReport:
    spec = _field_spec_from_order(args.q)
    space = geometry.AffineSpace(spec, args.dim)
    pair = geometry.find_degenerate_pair(space)
    inputs = {"q": args.q, "dim": args.dim}
    if pair is None:
        return RunReport(
            command="geometry degenerate",
            status="none",
            inputs=inputs,
            message="no distinct point pair at squared distance zero",
            formula="d2(x,y) = sum((x_i-y_i)^2) over GF(q)",
        )
    return RunReport(
        command="geometry degenerate",
        inputs=inputs,
        outputs={
            "first": (str(pair[0]), ""),
            "second": (str(pair[1]), ""),
            "squared_distance": (str(geometry.squared_distance(*pair)), ""),
        },
        formula="d2(x,y) = sum((x_i-y_i)^2) over GF(q)",
    )


def _handle_geometry_lines(args) -> RunReport:
    spec = _field_spec_from_order(args.q)
    space = geometry.AffineSpace(spec, args.dim)
    lines = geometry.enumerate_lines(space)
    per_line = {len(l.points) for l in lines}
    structure = geometry.incidence_structure(space)
    degrees = set(structure.point_degrees().values())
    return RunReport(
        command="geometry lines",
        inputs={"q": args.q, "dim": args.dim},
        outputs={
            "points": (space.point_count, ""),
            "lines": (len(lines), ""),
            "points_per_line": (sorted(per_line), ""),
            "lines_per_point": (sorted(degrees), ""),
        },
        formula="lines = q^(dim-1)*(q^dim-1)/(q-1), each with q points",
    )


def _handle_geometry_hesse(args) -> RunReport:
    spec = _field_spec_from_order(args.q)
    space = geometry.AffineSpace(spec, args.dim)
    check = geometry.check_hesse_property(geometry.incidence_structure(space))
    outputs = {"holds": (check.holds, "")}
    if not check.holds:
        outputs["witness_pair"] = (check.witness, "")
        outputs["detail"] = (check.detail, "")
    return RunReport(
        command="geometry hesse",
        inputs={"q": args.q, "dim": args.dim},
        outputs=outputs,
        formula="every line through two points carries a third",
    )


def _handle_geometry_ordinary(args) -> RunReport:
    points = _parse_rational_points(args.points)
    result = geometry.find_ordinary_line(points)
    if result.status == geometry.COLLINEAR:
        return RunReport(
            command="geometry ordinary-line",
            status="none",
            inputs={"points": args.points},
            message="all points are collinear; no ordinary line exists",
        )
    i, j = result.pair
    return RunReport(
        command="geometry ordinary-line",
        inputs={"points": args.points},
        outputs={
            "pair": (result.pair, ""),
            "through": (f"{points[i]} and {points[j]}", ""),
            "line": (result.line, "a*x+b*y+c=0"),
        },
        formula="exact rational scan over all point pairs",
    )


def _handle_geometry_cardinality(args) -> RunReport:
    count = geometry.pointset_cardinality(args.order, args.dim)
    return RunReport(
        command="geometry cardinality",
        inputs={"order": args.order, "dim": args.dim},
        outputs={"cardinality": (count, "points")},
        formula="card = order^dim",
    )


def _handle_geometry_diameter(args) -> RunReport:
    d = geometry.subspace_diameter(args.step, args.order)
    return RunReport(
        command="geometry diameter",
        inputs={"step": args.step, "order": args.order},
        outputs={"diameter": (d, "m")},
        formula="diam = step*(order-1)",
    )


def _handle_hilbert_cardinality(args) -> RunReport:
    count = hilbert.hilbert_cardinality(args.p, args.k, args.dim)
    return RunReport(
        command="hilbert cardinality",
        inputs={"p": args.p, "k": args.k, "dim": args.dim},
        outputs={"cardinality": (count, "vectors")},
        formula="card = p^(k*dim)",
    )


def _handle_hilbert_norm(args) -> RunReport:
    spec = _field_spec_from(args)
    vec = hilbert.FiniteVector(_parse_vector(spec, args.vector))
    n2 = hilbert.norm_squared(vec)
    return RunReport(
        command="hilbert norm",
        inputs={"p": spec.p, "k": spec.k, "vector": str(vec)},
        outputs={
            "norm_squared": (str(n2), ""),
            "isotropic": (hilbert.is_isotropic(vec), ""),
        },
        formula="<v,v> = sum(conj(v_n)*v_n)",
    )


def _handle_hilbert_inner(args) -> RunReport:
    spec = _field_spec_from(args)
    u = hilbert.FiniteVector(_parse_vector(spec, args.u))
    v = hilbert.FiniteVector(_parse_vector(spec, args.v))
    return RunReport(
        command="hilbert inner",
        inputs={"p": spec.p, "k": spec.k, "u": str(u), "v": str(v)},
        outputs={"inner_product": (str(hilbert.inner_product(u, v)), "")},
        formula="<u,v> = sum(conj(u_n)*v_n)",
    )


def _handle_reg_bernoulli(args) -> RunReport:
    return RunReport(
        command="regularize bernoulli",
        inputs={"n": args.n},
        outputs={"value": (regularization.bernoulli(args.n), "dimensionless")},
        formula="sum_{j<=n} C(n+1,j)*B_j = n+1 (B_1 = +1/2 convention)",
    )


def _handle_reg_zeta(args) -> RunReport:
    return RunReport(
        command="regularize zeta",
        inputs={"s": args.s},
        outputs={"value": (regularization.zeta_negative(args.s), "dimensionless")},
        formula="zeta(-s) = -B_(s+1)/(s+1)",
    )


def _handle_reg_partial_sum(args) -> RunReport:
    return RunReport(
        command="regularize partial-sum",
        inputs={"n": args.n},
        outputs={"value": (regularization.partial_sum_linear(args.n), "dimensionless")},
        formula="S(N) = N*(N+1)/2",
    )


def _handle_reg_mode_energy(args) -> RunReport:
    constants, _ = _constants_and_params(args)
    omega = regularization.mode_energy(args.m0, args.kx, args.ky, args.kz, constants)
    return RunReport(
        command="regularize mode-energy",
        inputs={"m0": args.m0, "kx": args.kx, "ky": args.ky, "kz": args.kz},
        outputs={"omega": (omega, "rad/s")},
        formula="omega = c*sqrt((m0*c/hbar)^2 + kx^2+ky^2+kz^2)",
    )


def _handle_reg_vacuum(args) -> RunReport:
    constants, _ = _constants_and_params(args)
    if args.n is not None:
        energy = regularization.vacuum_energy_partial(args.l, args.n, constants)
        return RunReport(
            command="regularize vacuum",
            inputs={"L": args.l, "N": args.n},
            outputs={"energy": (energy, "J")},
            formula="E(L,N) = (sqrt(3)*pi*hbar*c/L)*N*(N+1)/2",
        )
    energy = regularization.vacuum_energy_regularized(args.l, constants)
    return RunReport(
        command="regularize vacuum",
        inputs={"L": args.l},
        outputs={"energy": (energy, "J")},
        formula="E(L) = (sqrt(3)*pi*hbar*c/L)*(-1/12)",
    )


def _handle_reg_oscillator(args) -> RunReport:
    constants, _ = _constants_and_params(args)
    energy = regularization.oscillator_count_energy(args.l, args.count, constants)
    return RunReport(
        command="regularize oscillator-energy",
        inputs={"L": args.l, "P": args.count},
        outputs={"energy": (energy, "J")},
        formula="E = pi*hbar*c*P/L",
    )


def _handle_reg_point_bound(args) -> RunReport:
    return RunReport(
        command="regularize point-bound",
        inputs={"K": args.k_cutoff},
        outputs={"bound": (regularization.point_bound_from_cutoff(args.k_cutoff), "points")},
        formula="P < (sqrt(3)/2)*K*(K+1)",
    )


def _handle_cosmo_point_count(args) -> RunReport:
    constants, params = _constants_and_params(args)
    return RunReport(
        command="cosmo point-count",
        inputs=_params_inputs(params),
        outputs={"point_count": (cosmology.vacuum_point_count(params, constants), "points")},
        formula="P = rho_vac*L_U^4/(pi*hbar*c)",
    )


def _handle_cosmo_lambda(args) -> RunReport:
    constants, params = _constants_and_params(args)
    return RunReport(
        command="cosmo lambda",
        inputs=_params_inputs(params),
        outputs={"lambda": (cosmology.lambda_from_density(params, constants), "1/m^2")},
        formula="Lambda = 8*pi*G*rho_vac/c^4",
    )


def _handle_cosmo_rate(args) -> RunReport:
    constants, params = _constants_and_params(args)
    return RunReport(
        command="cosmo rate",
        inputs=_params_inputs(params),
        outputs={"rate": (cosmology.point_count_rate(params, constants), "1/s")},
        formula="dP/dt = 4*H0*P",
    )


def _handle_cosmo_growth(args) -> RunReport:
    constants, params = _constants_and_params(args)
    dt = args.dt_gyr * GIGAYEAR
    return RunReport(
        command="cosmo growth",
        inputs={"H0": params.H0, "dt_gyr": args.dt_gyr},
        outputs={
            "exponent": (4 * params.H0 * dt, "dimensionless"),
            "factor": (cosmology.point_count_growth_factor(params.H0, dt), "dimensionless"),
            "exponent_per_gyr": (cosmology.growth_exponent_per_gigayear(params.H0), "1/Gyr"),
        },
        formula="P(dt)/P(0) = exp(4*H0*dt)",
    )


def _handle_cosmo_density(args) -> RunReport:
    constants, params = _constants_and_params(args)
    rho_p = cosmology.pointset_density(params, constants)
    return RunReport(
        command="cosmo density",
        inputs=_params_inputs(params),
        outputs={
            "density": (rho_p, "1/m^3"),
            "volume_per_point": (1 / rho_p, "m^3"),
        },
        formula="rho_P = P/L_U^3",
    )


def _handle_cosmo_min_diameter(args) -> RunReport:
    constants, params = _constants_and_params(args)
    return RunReport(
        command="cosmo min-diameter",
        inputs=_params_inputs(params),
        outputs={"min_diameter": (cosmology.min_metric_diameter(params, constants), "m")},
        formula="d_min = (pi*hbar*c/(rho_vac*L_U))^(1/3)",
    )


def _handle_cosmo_planck_density(args) -> RunReport:
    constants, params = _constants_and_params(args)
    rho = cosmology.planck_vacuum_density(constants)
    fed = CosmologyParams(rho_vac=rho, L_U0=params.L_U0, H0=params.H0, kappa=params.kappa)
    return RunReport(
        command="cosmo planck-density",
        inputs={"l_planck": constants.l_planck, "L_U0": params.L_U0},
        outputs={
            "planck_density": (rho, "J/m^3"),
            "min_diameter_at_planck_density": (
                cosmology.min_metric_diameter(fed, constants),
                "m",
            ),
        },
        formula="rho_vac = c^4/(8*pi*G*l_planck^2)",
    )


def _handle_cosmo_diameter_at(args) -> RunReport:
    constants, params = _constants_and_params(args)
    return RunReport(
        command="cosmo diameter-at",
        inputs={**_params_inputs(params), "dt": args.dt},
        outputs={"diameter": (cosmology.universe_diameter_at(params, args.dt), "m")},
        formula="L_U(dt) = L_U0*(1+H0*dt)",
    )


def _handle_cosmo_count_at(args) -> RunReport:
    constants, params = _constants_and_params(args)
    return RunReport(
        command="cosmo count-at",
        inputs={**_params_inputs(params), "dt": args.dt},
        outputs={
            "point_count": (cosmology.point_count_at_linear(params, args.dt, constants), "points")
        },
        formula="P(dt) = (c^3*Lambda/(8*pi^2*hbar*G))*L_U0^4*(1+4*H0*dt)",
    )


def _handle_cosmo_accel(args) -> RunReport:
    constants, params = _constants_and_params(args)
    return RunReport(
        command="cosmo accel",
        inputs=_params_inputs(params),
        outputs={
            "accel_ratio": (cosmology.acceleration_constant_check(params, constants), "1/s^2")
        },
        formula="addot/a = (8*pi*G/(3*c^2))*rho_vac",
    )


def _handle_cosmo_evolve(args) -> RunReport:
    constants, _ = _constants_and_params(args)
    eos = (
        cosmology.vacuum_pressure_law(constants)
        if args.eos == "vacuum"
        else cosmology.dust_pressure_law()
    )
    a_dot0 = args.adot0
    if a_dot0 is None:
        rate = cosmology.friedmann_hubble_rate(
            args.rho0, args.lam, args.kappa_flat, args.a0, constants
        )
        a_dot0 = args.a0 * rate
    initial = cosmology.FluidState(a=args.a0, a_dot=a_dot0, rho=args.rho0, p=eos(args.rho0), t=0.0)
    traj = cosmology.evolve_scale_factor(
        initial, eos, args.lam, args.kappa_flat, args.t_end, args.step, constants
    )
    max_resid = max(abs(r) for r in traj.friedmann_residuals)
    return RunReport(
        command="cosmo evolve",
        inputs={
            "eos": args.eos,
            "a0": args.a0,
            "adot0": a_dot0,
            "rho0": args.rho0,
            "lambda": args.lam,
            "kappa": args.kappa_flat,
            "t_end": args.t_end,
            "step": args.step,
        },
        outputs={
            "a_end": (traj.final.a, "dimensionless"),
            "rho_end": (traj.final.rho, "kg/m^3"),
            "samples": (len(traj.samples), ""),
            "max_friedmann_residual": (max_resid, "1/s^2"),
            "halving_rel_diff": (traj.halving_rel_diff, "dimensionless"),
        },
        formula=(
            "addot/a = -(4*pi*G/3)*(rho+3*p/c^2) + Lambda*c^2/a^2; "
            "rhodot = -3*(adot/a)*(rho+p/c^2)"
        ),
    )


# ---------------------------------------------------------------------------
# parser construction
# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="finiverse", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--config", default=None, help="key=value constants/params file")

    subs = parser.add_subparsers(dest="subcommand", required=True)

    def action(sub, name, handler, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        p.set_defaults(handler=handler)
        return p

    f = subs.add_parser("field").add_subparsers(dest="action", required=True)
    p = action(f, "table", _handle_field_table)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--gaussian", action="store_true")
    p = action(f, "gaussian", _handle_field_gaussian)
    p.add_argument("--p", type=int, required=True)
    p = action(f, "axioms", _handle_field_axioms)
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--gaussian", action="store_true")
    p.add_argument("--ring", type=int, default=None, help="check Z/n instead of a field")
    p = action(f, "inverse", _handle_field_inverse)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--gaussian", action="store_true")
    p.add_argument("--element", required=True)

    g = subs.add_parser("geometry").add_subparsers(dest="action", required=True)
    for name, handler in (
        ("degenerate", _handle_geometry_degenerate),
        ("lines", _handle_geometry_lines),
        ("hesse", _handle_geometry_hesse),
    ):
        p = action(g, name, handler)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--dim", type=int, default=2)
    p = action(g, "ordinary-line", _handle_geometry_ordinary)
    p.add_argument("--points", required=True, help='"x1,y1;x2,y2;..." exact rationals')
    p = action(g, "cardinality", _handle_geometry_cardinality)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p = action(g, "diameter", _handle_geometry_diameter)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--order", type=int, required=True)

    h = subs.add_parser("hilbert").add_subparsers(dest="action", required=True)
    p = action(h, "cardinality", _handle_hilbert_cardinality)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--dim", type=int, required=True)
    p = action(h, "norm", _handle_hilbert_norm)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--gaussian", action="store_true")
    p.add_argument("--vector", required=True, help='coords "c0:c1,c0:c1" or ints')
    p = action(h, "inner", _handle_hilbert_inner)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--gaussian", action="store_true")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)

    r = subs.add_parser("regularize").add_subparsers(dest="action", required=True)
    p = action(r, "bernoulli", _handle_reg_bernoulli)
    p.add_argument("--n", type=int, required=True)
    p = action(r, "zeta", _handle_reg_zeta)
    p.add_argument("--s", type=int, required=True)
    p = action(r, "partial-sum", _handle_reg_partial_sum)
    p.add_argument("--n", type=int, required=True)
    p = action(r, "mode-energy", _handle_reg_mode_energy)
    p.add_argument("--m0", type=float, default=0.0)
    p.add_argument("--kx", type=float, default=0.0)
    p.add_argument("--ky", type=float, default=0.0)
    p.add_argument("--kz", type=float, default=0.0)
    p = action(r, "vacuum", _handle_reg_vacuum)
    p.add_argument("--l", type=float, required=True, help="box edge, m")
    p.add_argument("--n", type=int, default=None, help="cutoff; omit for regularized value")
    p = action(r, "oscillator-energy", _handle_reg_oscillator)
    p.add_argument("--l", type=float, required=True)
    p.add_argument("--count", type=float, required=True)
    p = action(r, "point-bound", _handle_reg_point_bound)
    p.add_argument("--k", dest="k_cutoff", type=int, required=True)

    c = subs.add_parser("cosmo").add_subparsers(dest="action", required=True)

    def cosmo_action(name, handler):
        p = action(c, name, handler)
        p.add_argument("--rho-vac", dest="rho_vac", type=float, default=None)
        p.add_argument("--l-u", dest="l_u", type=float, default=None)
        p.add_argument("--h0", dest="h0", type=float, default=None)
        p.add_argument("--kappa", type=int, default=None)
        return p

    cosmo_action("point-count", _handle_cosmo_point_count)
    cosmo_action("lambda", _handle_cosmo_lambda)
    cosmo_action("rate", _handle_cosmo_rate)
    p = cosmo_action("growth", _handle_cosmo_growth)
    p.add_argument("--dt-gyr", dest="dt_gyr", type=float, default=1.0)
    cosmo_action("density", _handle_cosmo_density)
    cosmo_action("min-diameter", _handle_cosmo_min_diameter)
    cosmo_action("planck-density", _handle_cosmo_planck_density)
    p = cosmo_action("diameter-at", _handle_cosmo_diameter_at)
    p.add_argument("--dt", type=float, required=True, help="seconds")
    p = cosmo_action("count-at", _handle_cosmo_count_at)
    p.add_argument("--dt", type=float, required=True, help="seconds")
    cosmo_action("accel", _handle_cosmo_accel)
    p = action(c, "evolve", _handle_cosmo_evolve)
    p.add_argument("--eos", choices=("vacuum", "dust"), default="vacuum")
    p.add_argument("--a0", type=float, default=1.0)
    p.add_argument("--adot0", type=float, default=None, help="default: on the first integral")
    p.add_argument("--rho0", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=0.0)
    p.add_argument("--kappa", dest="kappa_flat", type=int, default=0, choices=(-1, 0, 1))
    p.add_argument("--t-end", dest="t_end", type=float, required=True)
    p.add_argument("--step", type=float, required=True)

    return parser


_PARSER = _build_parser()


def dispatch(argv: list[str]) -> RunReport:
    """Parse argv, run exactly one operation, and return its report."""
    command = " ".join(argv[:2]) if argv else ""
    try:
        args = _PARSER.parse_args(argv)
    except UsageError as exc:
        return RunReport(
            command=command, status="error", error="Usage",
            message=str(exc), exit_code=2,
        )
    fmt = getattr(args, "format", "text")
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", LinearityWarning)
            report = args.handler(args)
            report.warnings.extend(
                str(w.message) for w in caught if issubclass(w.category, LinearityWarning)
            )
    except FiniverseError as exc:
        report = RunReport(
            command=command,
            status="error",
            error=exc.code,
            message=str(exc),
            witness=getattr(exc, "witness", None),
            exit_code=1,
        )
    report.fmt = fmt
    return report


def main(argv: list[str] | None = None) -> int:
    report = dispatch(sys.argv[1:] if argv is None else argv)
    if report.fmt == "json":
        sys.stdout.buffer.write(render_json(report))
        sys.stdout.flush()
    else:
        sys.stdout.write(render_text(report))
    if report.exit_code == 2:
        print(f"usage error: {report.message}", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
