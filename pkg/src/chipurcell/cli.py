"""Command-line interface: single-point rates, parameter sweeps, reflection
tables, machine-readable output.

Scenario files are JSON with complex numbers as two-element [re, im] arrays
and SI units throughout (dipoles in C m and A m^2, frequencies in rad/s,
lengths in m). Each response channel (eps, mu, kappa) is either a constant
[re, im] or a single-resonance Lorentz model evaluated at the transition
frequency:

    {"model": "lorentz", "background": 1.0, "strength": S,
     "omega0": w0, "gamma": g}          ->  background + S w0^2/(w0^2 - w^2 - i g w)
    {"model": "lorentz_chiral", "strength": S, "omega0": w0, "gamma": g}
                                        ->  S w0 w/(w0^2 - w^2 - i g w)

Exit codes: 0 success, 2 schema/usage error, 3 physics precondition
violation, 4 quadrature nonconvergence.

CSV schema v1 (frozen; golden files pin the exact bytes):
    rate:    geometry,method,limit,gamma_el,gamma_ch,gamma_vac,gamma_total,s_disc
    sweep:   param,gamma_el,gamma_ch,gamma_vac,s_disc,method,status
    fresnel: k_par_over_k0,r_ss_re,r_ss_im,r_pp_re,r_pp_im,r_sp_re,r_sp_im,r_ps_re,r_ps_im,status
Floats are written with 17 significant digits.
"""

from __future__ import annotations

import argparse
import copy
import json
import sys
from typing import Optional

import numpy as np

from .bulk import rates_bulk
from .errors import PhysicsError, QuadratureError, SchemaError
from .halfspace import (
    Handedness,
    Limit,
    PlanarGeometry,
    fresnel_general,
    rates_halfspace,
    rates_mirror,
)
from .media import MediumResponse
from .molecules import TransitionDipoles
from .onsager import CavityConfig, rates_lfc
from .rates import RateBreakdown
from .sommerfeld import QuadratureSpec

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_PHYSICS = 3
EXIT_QUADRATURE = 4

AUTO_NONRETARDED_BELOW = 0.1
AUTO_RETARDED_ABOVE = 10.0


def _fmt(x: float) -> str:
    return f"{x:.17g}"


# ---------------------------------------------------------------------------
# Scenario parsing
# ---------------------------------------------------------------------------

def _complex_from(node, where: str, omega: float) -> complex:
    if isinstance(node, (int, float)):
        return complex(node)
    if isinstance(node, list):
        if len(node) != 2 or not all(isinstance(v, (int, float)) for v in node):
            raise SchemaError(f"{where}: complex values are two-element [re, im] arrays")
        return complex(node[0], node[1])
    if isinstance(node, dict):
        model = node.get("model")
        if model == "lorentz":
            try:
                bg = float(node.get("background", 1.0))
                s = float(node["strength"])
                w0 = float(node["omega0"])
                g = float(node["gamma"])
            except (KeyError, TypeError, ValueError) as exc:
                raise SchemaError(f"{where}: lorentz model needs strength, omega0, gamma") from exc
            return bg + s * w0**2 / (w0**2 - omega**2 - 1j * g * omega)
        if model == "lorentz_chiral":
            try:
                s = float(node["strength"])
                w0 = float(node["omega0"])
                g = float(node["gamma"])
            except (KeyError, TypeError, ValueError) as exc:
                raise SchemaError(f"{where}: lorentz_chiral model needs strength, omega0, gamma") from exc
            return s * w0 * omega / (w0**2 - omega**2 - 1j * g * omega)
        raise SchemaError(f"{where}: unknown response model {model!r}")
    raise SchemaError(f"{where}: expected number, [re, im] or model object")


def _vector3_from(node, where: str) -> np.ndarray:
    if not (isinstance(node, list) and len(node) == 3):
        raise SchemaError(f"{where}: expected a 3-element array of [re, im] pairs")
    return np.array([_complex_from(c, f"{where}[{i}]", 0.0) for i, c in enumerate(node)])


def parse_molecule(node, where: str = "molecule") -> TransitionDipoles:
    if not isinstance(node, dict):
        raise SchemaError(f"{where}: expected an object")
    for key in ("d", "m", "omega_ik"):
        if key not in node:
            raise SchemaError(f"{where}: missing required field {key!r}")
    omega = node["omega_ik"]
    if not isinstance(omega, (int, float)) or not omega > 0:
        raise SchemaError(f"{where}.omega_ik: must be a positive number (rad/s)")
    try:
        return TransitionDipoles(
            d=_vector3_from(node["d"], f"{where}.d"),
            m=_vector3_from(node["m"], f"{where}.m"),
            omega_ik=float(omega),
            isotropic=bool(node.get("isotropic", False)),
        )
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def parse_medium(node, omega: float, where: str = "medium") -> MediumResponse:
    if not isinstance(node, dict):
        raise SchemaError(f"{where}: expected an object")
    for key in ("eps", "mu", "kappa"):
        if key not in node:
            raise SchemaError(f"{where}: missing required field {key!r}")
    return MediumResponse(
        eps=_complex_from(node["eps"], f"{where}.eps", omega),
        mu=_complex_from(node["mu"], f"{where}.mu", omega),
        kappa=_complex_from(node["kappa"], f"{where}.kappa", omega),
        omega=omega,
    )


def _choose_limit(method_node, omega: float, z_m: float) -> Limit:
    name = method_node.get("limit", "auto")
    if name in ("retarded", "nonretarded", "numeric"):
        return Limit(name)
    if name != "auto":
        raise SchemaError(f"method.limit: unknown value {name!r}")
    lo, hi = method_node.get("auto_thresholds", [AUTO_NONRETARDED_BELOW, AUTO_RETARDED_ABOVE])
    from .constants import CONSTANTS

    k0z = omega * z_m / CONSTANTS.c
    if k0z < lo:
        return Limit.NONRETARDED
    if k0z > hi:
        return Limit.RETARDED
    return Limit.NUMERIC


def parse_quadrature(node) -> QuadratureSpec:
    if node is None:
        return QuadratureSpec()
    if not isinstance(node, dict):
        raise SchemaError("method.quadrature: expected an object")
    kwargs = {}
    for key in ("rel_tol", "abs_floor", "evanescent_cutoff_u"):
        if key in node:
            kwargs[key] = float(node[key])
    if "max_panels" in node:
        kwargs["max_panels"] = int(node["max_panels"])
    try:
        return QuadratureSpec(**kwargs)
    except ValueError as exc:
        raise SchemaError(f"method.quadrature: {exc}") from exc


def run_scenario(scenario: dict) -> tuple[RateBreakdown, dict]:
    """Validate and execute one scenario; returns (breakdown, annotations)."""
    if not isinstance(scenario, dict):
        raise SchemaError("scenario: expected a JSON object")
    mol = parse_molecule(scenario.get("molecule"))
    geom_node = scenario.get("geometry")
    if not isinstance(geom_node, dict) or "kind" not in geom_node:
        raise SchemaError("geometry: expected an object with a 'kind' field")
    kind = geom_node["kind"]
    method_node = scenario.get("method", {})
    if not isinstance(method_node, dict):
        raise SchemaError("method: expected an object")
    quad = parse_quadrature(method_node.get("quadrature"))
    annotations: dict = {"geometry": kind}

    if kind in ("bulk", "bulk_lfc", "halfspace"):
        med = parse_medium(scenario.get("medium"), mol.omega_ik)
    elif kind == "mirror":
        med = None
    else:
        raise SchemaError(f"geometry.kind: unknown value {kind!r}")

    if kind == "bulk":
        breakdown = rates_bulk(med, mol)
        annotations["limit"] = "static"
    elif kind == "bulk_lfc":
        if "radius_a" not in geom_node:
            raise SchemaError("geometry: bulk_lfc requires 'radius_a' (m)")
        cav = CavityConfig(radius_a=float(geom_node["radius_a"]), host=med)
        breakdown = rates_lfc(cav, mol, f0_source=method_node.get("f0_source", "appendix"))
        annotations["limit"] = "small_radius"
    else:
        if "z_m" not in geom_node:
            raise SchemaError(f"geometry: {kind} requires 'z_m' (m)")
        z_m = float(geom_node["z_m"])
        limit = _choose_limit(method_node, mol.omega_ik, z_m)
        annotations["limit"] = limit.value
        if kind == "mirror":
            hand = geom_node.get("handedness", "right")
            if hand not in ("right", "left"):
                raise SchemaError("geometry.handedness: must be 'right' or 'left'")
            geom = PlanarGeometry(z_m=z_m, handedness=Handedness(hand))
            breakdown = rates_mirror(
                geom, mol, limit, spec=quad,
                drreths_form=method_node.get("drreths_form", "dimensional"),
            )
            if method_node.get("compare_numeric") and limit is not Limit.NUMERIC:
                other = rates_mirror(geom, mol, Limit.NUMERIC, spec=quad)
                annotations["comparison"] = _compare(breakdown, other)
        else:
            geom = PlanarGeometry(z_m=z_m, medium=med)
            breakdown = rates_halfspace(geom, mol, limit, spec=quad)
            if method_node.get("compare_numeric") and limit is not Limit.NUMERIC:
                other = rates_halfspace(geom, mol, Limit.NUMERIC, spec=quad)
                annotations["comparison"] = _compare(breakdown, other)
    return breakdown, annotations


def _compare(closed: RateBreakdown, numeric: RateBreakdown) -> dict:
    def rel(a, b):
        scale = max(abs(a), abs(b))
        return abs(a - b) / scale if scale > 0 else 0.0

    return {
        "numeric_gamma_ch": numeric.gamma_ch,
        "numeric_gamma_el": numeric.gamma_el,
        "rel_diff_gamma_ch": rel(closed.gamma_ch, numeric.gamma_ch),
        "rel_diff_gamma_el": rel(closed.gamma_el, numeric.gamma_el),
    }


# ---------------------------------------------------------------------------
# Output rendering
# ---------------------------------------------------------------------------

def _breakdown_dict(b: RateBreakdown, annotations: dict) -> dict:
    out = {
        "geometry": annotations.get("geometry"),
        "method": b.method.value,
        "limit": annotations.get("limit"),
        "gamma_el": b.gamma_el,
        "gamma_ch": b.gamma_ch,
        "gamma_vac": b.gamma_vac,
        "gamma_total": b.gamma_total,
        "s_disc": b.s_disc,
        "gamma_ch_over_gamma_vac": b.gamma_ch / b.gamma_vac if b.gamma_vac else 0.0,
        "assembly": b.assembly,
    }
    if "comparison" in annotations:
        out["comparison"] = annotations["comparison"]
    return out

def _print_human(d: dict, stream) -> None:
    print(f"geometry : {d['geometry']}   method: {d['method']}   limit: {d['limit']}", file=stream)
    for key, unit in (
        ("gamma_el", "1/s"),
        ("gamma_ch", "1/s"),
        ("gamma_vac", "1/s"),
        ("gamma_total", "1/s"),
    ):
        print(f"{key:12s} = {_fmt(d[key]):>25s} {unit}", file=stream)
    print(f"{'s_disc':12s} = {_fmt(d['s_disc']):>25s} (dimensionless)", file=stream)
    print(f"{'G_ch/G_vac':12s} = {_fmt(d['gamma_ch_over_gamma_vac']):>25s} (dimensionless)", file=stream)
    print(f"assembly     : {d['assembly']}", file=stream)
    if "comparison" in d:
        comp = d["comparison"]
        print(
            "comparison   : numeric gamma_ch = "
            f"{_fmt(comp['numeric_gamma_ch'])}  rel_diff = {_fmt(comp['rel_diff_gamma_ch'])}",
            file=stream,
        )


RATE_CSV_HEADER = "geometry,method,limit,gamma_el,gamma_ch,gamma_vac,gamma_total,s_disc"
SWEEP_CSV_HEADER = "param,gamma_el,gamma_ch,gamma_vac,s_disc,method,status"
FRESNEL_CSV_HEADER = (
    "k_par_over_k0,r_ss_re,r_ss_im,r_pp_re,r_pp_im,r_sp_re,r_sp_im,r_ps_re,r_ps_im,status"
)


def _rate_csv(d: dict) -> str:
    row = ",".join(
        [
            str(d["geometry"]),
            str(d["method"]),
            str(d["limit"]),
            _fmt(d["gamma_el"]),
            _fmt(d["gamma_ch"]),
            _fmt(d["gamma_vac"]),
            _fmt(d["gamma_total"]),
            _fmt(d["s_disc"]),
        ]
    )
    return RATE_CSV_HEADER + "\n" + row + "\n"


# ---------------------------------------------------------------------------
# Sweep parameter addressing
# ---------------------------------------------------------------------------

def _set_path(scenario: dict, path: str, value: float) -> None:
    """Set a scalar scenario field by dotted path.

    Complex [re, im] leaves accept trailing '.re' / '.im' selectors; a bare
    path to a [re, im] leaf sets the real part.
    """
    parts = path.split(".")
    sel = None
    if parts[-1] in ("re", "im"):
        sel = parts[-1]
        parts = parts[:-1]
    node = scenario
    for p in parts[:-1]:
        if not isinstance(node, dict) or p not in node:
            raise SchemaError(f"sweep param path {path!r}: no field {p!r}")
        node = node[p]
    leaf = parts[-1]
    if not isinstance(node, dict) or leaf not in node:
        raise SchemaError(f"sweep param path {path!r}: no field {leaf!r}")
    cur = node[leaf]
    if isinstance(cur, list) and len(cur) == 2:
        idx = 1 if sel == "im" else 0
        cur[idx] = value
    elif isinstance(cur, (int, float)) and sel is None:
        node[leaf] = value
    else:
        raise SchemaError(f"sweep param path {path!r}: target is not a scalar")


def run_sweep(scenario: dict, param: str, lo: float, hi: float, points: int, log: bool) -> list[str]:
    """Execute the sweep; returns CSV lines (header + one row per grid point)."""
    if points < 1:
        raise SchemaError("sweep requires points >= 1")
    if log:
        if lo <= 0 or hi <= 0:
            raise SchemaError("log-scale sweep requires positive endpoints")
        grid = np.geomspace(lo, hi, points)
    else:
        grid = np.linspace(lo, hi, points)
    lines = [SWEEP_CSV_HEADER]
    for x in grid:
        scen = copy.deepcopy(scenario)
        _set_path(scen, param, float(x))
        try:
            b, _ = run_scenario(scen)
            lines.append(
                ",".join(
                    [
                        _fmt(float(x)),
                        _fmt(b.gamma_el),
                        _fmt(b.gamma_ch),
                        _fmt(b.gamma_vac),
                        _fmt(b.s_disc),
                        b.method.value,
                        "ok",
                    ]
                )
            )
        except (PhysicsError, QuadratureError) as exc:
            nan = _fmt(float("nan"))
            lines.append(
                ",".join([_fmt(float(x)), nan, nan, nan, nan, "none", f"error:{type(exc).__name__}"])
            )
    return lines


def run_fresnel(eps: complex, mu: complex, kappa: complex, omega: float,
                kpar_max: float, points: int) -> list[str]:
    """Reflection-coefficient table over k_par/k0 in [0, kpar_max]."""
    if points < 2:
        raise SchemaError("fresnel requires points >= 2")
    med = MediumResponse(eps, mu, kappa, omega)
    k0 = med.k0
    lines = [FRESNEL_CSV_HEADER]
    for x in np.linspace(0.0, kpar_max, points):
        try:
            r = fresnel_general(med, float(x) * k0)
            lines.append(
                ",".join(
                    [_fmt(float(x))]
                    + [_fmt(v) for v in (
                        r.r_ss.real, r.r_ss.imag, r.r_pp.real, r.r_pp.imag,
                        r.r_sp.real, r.r_sp.imag, r.r_ps.real, r.r_ps.imag,
                    )]
                    + ["ok"]
                )
            )
        except PhysicsError as exc:
            nan = _fmt(float("nan"))
            lines.append(",".join([_fmt(float(x))] + [nan] * 8 + [f"error:{type(exc).__name__}"]))
    return lines


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def _parse_complex_arg(text: str, name: str) -> complex:
    try:
        re_s, im_s = text.split(",")
        return complex(float(re_s), float(im_s))
    except ValueError as exc:
        raise SchemaError(f"--{name}: expected RE,IM") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chipurcell",
        description="Chirality-sensitive Purcell-effect calculator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rate = sub.add_parser("rate", help="single-point decay rates from a scenario file")
    p_rate.add_argument("--config", required=True, help="scenario JSON file")
    p_rate.add_argument("--json", action="store_true", help="machine-readable JSON to stdout")
    p_rate.add_argument("--csv", metavar="PATH", help="write a one-row CSV to PATH")

    p_sweep = sub.add_parser("sweep", help="sweep one scalar scenario field")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--param", required=True, help="dotted path, e.g. geometry.z_m or medium.kappa.re")
    p_sweep.add_argument("--from", dest="lo", type=float, required=True)
    p_sweep.add_argument("--to", dest="hi", type=float, required=True)
    p_sweep.add_argument("--points", type=int, required=True)
    p_sweep.add_argument("--log", action="store_true", help="geometric grid")
    p_sweep.add_argument("--csv", metavar="PATH", required=True)

    p_fres = sub.add_parser("fresnel", help="reflection-coefficient table")
    p_fres.add_argument("--eps", required=True, help="RE,IM")
    p_fres.add_argument("--mu", required=True, help="RE,IM")
    p_fres.add_argument("--kappa", required=True, help="RE,IM")
    p_fres.add_argument("--omega", type=float, required=True, help="rad/s")
    p_fres.add_argument("--kpar-max", dest="kpar_max", type=float, required=True,
                        help="grid upper end in units of k0")
    p_fres.add_argument("--points", type=int, required=True)
    p_fres.add_argument("--csv", metavar="PATH", required=True)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "rate":
            try:
                with open(args.config, "r", encoding="utf-8") as fh:
                    scenario = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise SchemaError(f"cannot load scenario {args.config!r}: {exc}") from exc
            breakdown, annotations = run_scenario(scenario)
            d = _breakdown_dict(breakdown, annotations)
            if args.csv:
                with open(args.csv, "w", encoding="utf-8", newline="") as fh:
                    fh.write(_rate_csv(d))
            if args.json:
                json.dump(d, sys.stdout, indent=2)
                print()
            else:
                _print_human(d, sys.stdout)
            return EXIT_OK
        if args.command == "sweep":
            try:
                with open(args.config, "r", encoding="utf-8") as fh:
                    scenario = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise SchemaError(f"cannot load scenario {args.config!r}: {exc}") from exc
            lines = run_sweep(scenario, args.param, args.lo, args.hi, args.points, args.log)
            with open(args.csv, "w", encoding="utf-8", newline="") as fh:
                fh.write("\n".join(lines) + "\n")
            print(f"wrote {len(lines) - 1} rows to {args.csv}")
            return EXIT_OK
        if args.command == "fresnel":
            lines = run_fresnel(
                _parse_complex_arg(args.eps, "eps"),
                _parse_complex_arg(args.mu, "mu"),
                _parse_complex_arg(args.kappa, "kappa"),
                args.omega,
                args.kpar_max,
                args.points,
            )
            with open(args.csv, "w", encoding="utf-8", newline="") as fh:
                fh.write("\n".join(lines) + "\n")
            print(f"wrote {len(lines) - 1} rows to {args.csv}")
            return EXIT_OK
        raise SchemaError(f"unknown command {args.command!r}")
    except SchemaError as exc:
        print(f"error (schema): {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except PhysicsError as exc:
        print(f"error (physics): {exc}", file=sys.stderr)
        return EXIT_PHYSICS
    except QuadratureError as exc:
        print(f"error (quadrature): {exc}", file=sys.stderr)
        return EXIT_QUADRATURE


if __name__ == "__main__":
    sys.exit(main())
