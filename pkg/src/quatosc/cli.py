"""Command line front end: spectrum, gram, verify and sample commands.

State descriptors are line-delimited JSON read from a file or stdin, e.g.

    {"kind": "ho1d", "n": 1, "m": 2, "theta": 0.7853981633974483}

Reports are emitted as JSON (default) or CSV with deterministic formatting:
fixed key order and shortest round-trip decimals, so identical invocations
produce byte-identical bodies.  The wall-time footer field is the only
run-dependent value.

Exit codes: 0 success, 1 usage error, 2 validation error, 3 numerical
check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
import time
import warnings

import numpy as np

from . import quaternion as qt
from .oscillator1d import (
    QPair,
    build_via_ladder,
    energy_nm,
    energy_nm_correction_form,
    gram,
    hamiltonian,
    ladder,
    psi_n,
    psi_nm,
    schrodinger_residual,
)
from .multidim import (
    QSphericalHarmonic,
    SplitSpec,
    angular_gram,
    product_state,
    radial_energy,
    radial_gram,
    radial_ode_residual,
    radial_state,
    split_state,
)
from .specfun import make_rule
from .wavestate import (
    PhysicalParams,
    apply,
    evaluate,
    expectation,
    inner_quad,
    time_derivative,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_CHECK_FAILED = 3

_KIND_FIELDS = {
    "ho1d": {"kind", "n", "m", "theta", "params"},
    "product": {"kind", "factors", "params"},
    "split": {"kind", "dims", "slot0_dims", "slot1_dims", "n", "m", "theta", "params"},
    "radial": {"kind", "u", "v", "l", "theta", "params"},
    "spherical": {"kind", "l", "m1", "m2", "theta", "params"},
}


class ValidationError(Exception):
    """Invalid descriptor, grid or option combination (exit code 2)."""


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let values like -4:4:9 reach --grid instead of looking like options
        self._negative_number_matcher = re.compile(r"^-\d|^-\.\d")


# ---------------------------------------------------------------------------
# descriptor handling

def _load_descriptors(path: str) -> list[dict]:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ValidationError(f"cannot read {path}: {exc}") from exc
    descriptors = []
    for ln, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"line {ln}: invalid JSON: {exc}") from exc
        if not isinstance(obj, dict):
            raise ValidationError(f"line {ln}: descriptor must be a JSON object")
        descriptors.append(obj)
    return descriptors


def _check_fields(desc: dict) -> str:
    kind = desc.get("kind")
    if kind not in _KIND_FIELDS:
        raise ValidationError(f"unknown state kind: {kind!r}")
    extra = set(desc) - _KIND_FIELDS[kind]
    if extra:
        raise ValidationError(f"unknown fields for kind {kind!r}: {sorted(extra)}")
    return kind


def _get_int(desc: dict, name: str, minimum: int = 0) -> int:
    v = desc.get(name)
    if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
        raise ValidationError(f"field {name!r} must be an integer >= {minimum}, got {v!r}")
    return v


def _get_signed_int(desc: dict, name: str) -> int:
    v = desc.get(name)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ValidationError(f"field {name!r} must be an integer, got {v!r}")
    return v


def _get_num(desc: dict, name: str, default=None) -> float:
    v = desc.get(name, default)
    if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(float(v)):
        raise ValidationError(f"field {name!r} must be a finite number, got {v!r}")
    return float(v)


def _params_for(desc: dict, args) -> PhysicalParams:
    mu, omega, hbar = args.mu, args.omega, args.hbar
    override = desc.get("params")
    if override is not None:
        if not isinstance(override, dict):
            raise ValidationError("'params' must be an object")
        extra = set(override) - {"mu", "omega", "hbar"}
        if extra:
            raise ValidationError(f"unknown params fields: {sorted(extra)}")
        mu = float(override.get("mu", mu))
        omega = float(override.get("omega", omega))
        hbar = float(override.get("hbar", hbar))
    try:
        return PhysicalParams(mu, omega, hbar)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc


def _qpair(desc: dict) -> QPair:
    try:
        return QPair(_get_int(desc, "n"), _get_int(desc, "m"), _get_num(desc, "theta", 0.0))
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc


def _build_state(desc: dict, args):
    """Returns (kind, label_dict, state_object, params)."""
    kind = _check_fields(desc)
    params = _params_for(desc, args)
    if kind == "ho1d":
        q = _qpair(desc)
        return kind, {"n": q.n, "m": q.m, "theta": q.theta}, psi_nm(q, params), params
    if kind == "product":
        factors = desc.get("factors")
        if not isinstance(factors, list) or not factors:
            raise ValidationError("'factors' must be a non-empty list")
        qs = []
        for f in factors:
            if not isinstance(f, dict) or set(f) - {"n", "m", "theta"}:
                raise ValidationError(f"invalid product factor: {f!r}")
            qs.append(_qpair(f))
        label = {"factors": [{"n": q.n, "m": q.m, "theta": q.theta} for q in qs]}
        return kind, label, product_state(qs, params), params
    if kind == "split":
        dims = _get_int(desc, "dims", minimum=1)
        for name in ("slot0_dims", "slot1_dims"):
            v = desc.get(name)
            if not isinstance(v, list) or not all(isinstance(k, int) and not isinstance(k, bool) for k in v):
                raise ValidationError(f"field {name!r} must be a list of integers")
        try:
            spec = SplitSpec(dims, frozenset(desc["slot0_dims"]), frozenset(desc["slot1_dims"]),
                             _get_int(desc, "n"), _get_int(desc, "m"), _get_num(desc, "theta", 0.0))
            state = split_state(spec, params, allow_overlap=args.allow_overlap)
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc
        label = {"dims": dims, "slot0_dims": sorted(spec.slot0_dims),
                 "slot1_dims": sorted(spec.slot1_dims), "n": spec.n, "m": spec.m,
                 "theta": spec.theta}
        return kind, label, state, params
    if kind == "radial":
        try:
            state = radial_state(_get_int(desc, "u"), _get_int(desc, "v"), _get_int(desc, "l"),
                                 _get_num(desc, "theta", 0.0), params)
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc
        label = {"u": state.u, "v": state.v, "l": state.l, "theta": state.theta}
        return kind, label, state, params
    # spherical
    try:
        spec = QSphericalHarmonic(_get_int(desc, "l"), _get_signed_int(desc, "m1"),
                                  _get_signed_int(desc, "m2"), _get_num(desc, "theta", 0.0))
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    label = {"l": spec.l, "m1": spec.m1, "m2": spec.m2, "theta": spec.theta}
    return kind, label, spec, params


# ---------------------------------------------------------------------------
# report emission

def _emit_json(report: dict, wall_time: float) -> str:
    report = dict(report)
    report["wall_time_s"] = wall_time
    return json.dumps(report, indent=2) + "\n"


def _emit_csv(header: list[str], rows: list[list], wall_time: float) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    buf.write(f"# wall_time_s {wall_time!r}\n")
    return buf.getvalue()


def _matrix(a: np.ndarray) -> list[list]:
    return [[x.item() for x in row] for row in np.asarray(a)]


def _print(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


# ---------------------------------------------------------------------------
# commands

def cmd_spectrum(args) -> int:
    t0 = time.perf_counter()
    descriptors = _load_descriptors(args.states)
    if not descriptors:
        sys.stderr.write("spectrum: no state descriptors provided\n")
        return EXIT_USAGE
    rows = []
    deltas_expect, deltas_forms, deltas_quad = [], [], []
    rules_cache: dict[int, list] = {}
    caught: list[str] = []
    for desc in descriptors:
        kind, label, state, params = _build_state(desc, args)
        if kind != "ho1d":
            raise ValidationError("spectrum supports only 'ho1d' descriptors")
        q = QPair(label["n"], label["m"], label["theta"])
        unit = params.energy_quantum
        e_closed = energy_nm(q, params) / unit
        e_forms = energy_nm_correction_form(q, params) / unit
        h = hamiltonian(params)
        e_exp = expectation(h, state, args.time) / unit
        rules = rules_cache.setdefault(args.quad_order, [make_rule("gauss_hermite", args.quad_order)])
        with warnings.catch_warnings(record=True) as grabbed:
            warnings.simplefilter("always")
            e_quad = inner_quad(apply(h, state), state, args.time, rules) / unit
        caught.extend(str(w.message) for w in grabbed)
        rows.append({"n": q.n, "m": q.m, "theta": q.theta,
                     "energy": e_closed, "energy_correction_form": e_forms,
                     "energy_expectation": e_exp, "energy_quadrature": e_quad,
                     "delta_expectation": abs(e_exp - e_closed),
                     "delta_quadrature": abs(e_quad - e_closed)})
        deltas_expect.append(abs(e_exp - e_closed))
        deltas_forms.append(abs(e_forms - e_closed))
        deltas_quad.append(abs(e_quad - e_closed))
    checks = {
        "max_delta_expectation": max(deltas_expect),
        "max_delta_forms": max(deltas_forms),
        "max_delta_quadrature": max(deltas_quad),
        "tolerance": args.tol if args.tol is not None else 1e-10,
        "warnings": sorted(set(caught)),
    }
    checks["within_tolerance"] = bool(checks["max_delta_expectation"] <= checks["tolerance"])
    report = {
        "command": "spectrum",
        "inputs": {"states": descriptors, "time": args.time, "quad_order": args.quad_order,
                   "mu": args.mu, "omega": args.omega, "hbar": args.hbar},
        "results": {"energy_unit": "hbar*omega", "rows": rows},
        "checks": checks,
    }
    wall = time.perf_counter() - t0
    if args.format == "csv":
        header = ["n", "m", "theta", "energy", "energy_correction_form",
                  "energy_expectation", "energy_quadrature", "delta_expectation", "delta_quadrature"]
        _print(_emit_csv(header, [[r[k] for k in header] for r in rows], wall))
    else:
        _print(_emit_json(report, wall))
    return EXIT_OK


def cmd_gram(args) -> int:
    t0 = time.perf_counter()
    descriptors = _load_descriptors(args.states)
    if not descriptors:
        sys.stderr.write("gram: no state descriptors provided\n")
        return EXIT_USAGE
    built = [_build_state(d, args) for d in descriptors]
    kinds = {b[0] for b in built}
    if len(kinds) > 1:
        raise ValidationError(f"gram requires homogeneous state kinds, got {sorted(kinds)}")
    kind = built[0][0]
    if len({b[3] for b in built}) > 1:
        raise ValidationError("gram requires all states to share physical parameters")
    params = built[0][3]
    labels = [b[1] for b in built]
    results: dict = {"kind": kind, "labels": labels}
    checks: dict = {}
    if kind == "ho1d":
        pairs = [QPair(l["n"], l["m"], l["theta"]) for l in labels]
        g = gram(pairs, args.time, params)
        states = [psi_nm(q, params) for q in pairs]
        rules = [make_rule("gauss_hermite", args.quad_order)]
        quad_dev = 0.0
        with warnings.catch_warnings(record=True) as grabbed:
            warnings.simplefilter("always")
            for i in range(len(states)):
                for j in range(len(states)):
                    quad_dev = max(quad_dev, abs(g.entries[i, j]
                                                 - inner_quad(states[i], states[j], args.time, rules)))
        results["parallel"] = _matrix(g.parallel)
        results["theta_equal"] = _matrix(g.theta_equal)
        checks["max_quadrature_delta"] = quad_dev
        checks["warnings"] = sorted({str(w.message) for w in grabbed})
    elif kind == "radial":
        try:
            g = radial_gram([b[2] for b in built])
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc
        results["parallel"] = _matrix(g.parallel)
        results["theta_equal"] = _matrix(g.theta_equal)
    elif kind == "spherical":
        g = angular_gram([b[2] for b in built], n_polar=args.quad_order,
                         n_azimuth=2 * args.quad_order, conjugate_slot1=args.conjugate_angular)
        results["conjugate_slot1"] = args.conjugate_angular
        results["parallel"] = _matrix(g.parallel)
        results["theta_equal"] = _matrix(g.theta_equal)
    else:
        raise ValidationError(f"gram does not support kind {kind!r}")
    results["entries"] = _matrix(g.entries)
    results["closed_form"] = _matrix(g.closed_form)
    off = g.closed_form - np.diag(np.diag(g.closed_form))
    tol = args.tol if args.tol is not None else 1e-10
    checks["max_closed_form_deviation"] = g.max_closed_form_deviation()
    checks["non_orthogonal_closed_form"] = bool(np.max(np.abs(off), initial=0.0) > tol)
    checks["tolerance"] = tol
    report = {
        "command": "gram",
        "inputs": {"states": descriptors, "time": args.time, "quad_order": args.quad_order,
                   "mu": args.mu, "omega": args.omega, "hbar": args.hbar},
        "results": results,
        "checks": checks,
    }
    wall = time.perf_counter() - t0
    if args.format == "csv":
        header = [f"g{j}" for j in range(len(labels))]
        _print(_emit_csv(header, [[float(x) for x in row] for row in g.entries], wall))
    else:
        _print(_emit_json(report, wall))
    return EXIT_OK


# --- verify suites ---------------------------------------------------------

def _check(name: str, value: float, threshold: float, comparison: str = "<=") -> dict:
    passed = value <= threshold if comparison == "<=" else value >= threshold
    return {"name": name, "value": float(value), "threshold": float(threshold),
            "comparison": comparison, "passed": bool(passed)}


def _suite_algebra(tol, quad_order) -> list[dict]:
    rng = np.random.default_rng(7)
    qs = [qt.Quaternion(*rng.uniform(-2.0, 2.0, size=4)) for _ in range(200)]
    norm_dev = assoc_dev = sc_dev = sym_dev = quad_i_dev = 0.0
    for p, q, r in zip(qs, qs[1:] + qs[:1], qs[2:] + qs[:2]):
        norm_dev = max(norm_dev, abs(abs(p * q) - abs(p) * abs(q)))
        assoc_dev = max(assoc_dev, abs((p * q) * r - p * (q * r)))
        sc_dev = max(sc_dev, abs(qt.sc(p * qt.conj(q)) - qt.sc(q * qt.conj(p))))
        z0, z1 = qt.right_mul_i(p).to_symplectic()
        w0, w1 = p.to_symplectic()
        sym_dev = max(sym_dev, abs(z0 - 1j * w0), abs(z1 + 1j * w1))
        p4 = p
        for _ in range(4):
            p4 = qt.right_mul_i(p4)
        quad_i_dev = max(quad_i_dev, abs(p4 - p))
    return [
        _check("hamilton_product_norm_multiplicative", norm_dev, tol or 1e-12),
        _check("hamilton_product_associative", assoc_dev, tol or 1e-12),
        _check("scalar_part_symmetry", sc_dev, tol or 1e-14),
        _check("right_i_symplectic_action", sym_dev, tol or 1e-15),
        _check("right_i_fourth_power_identity", quad_i_dev, tol or 1e-15),
    ]


def _suite_ladder(tol, quad_order) -> list[dict]:
    params = PhysicalParams()
    lower, raise_op = ladder("lower"), ladder("raise")
    ground_killed = psi_n(0, params)
    ground_killed = apply(lower, ground_killed).norm()
    comm_dev = 0.0
    for n in range(21):
        s = psi_n(n, params)
        comm = apply(lower, apply(raise_op, s)) - apply(raise_op, apply(lower, s))
        comm_dev = max(comm_dev, (comm - s).norm())
    build_dev = 0.0
    grid = np.linspace(-6.0, 6.0, 41)
    for n in range(7):
        for m in range(7):
            q = QPair(n, m, 0.7)
            a, b = build_via_ladder(q, params), psi_nm(q, params)
            build_dev = max(build_dev, max(abs(evaluate(a - b, x, 0.4)) for x in grid))
    return [
        _check("lowering_annihilates_ground_state", ground_killed, tol or 1e-13),
        _check("ladder_commutator_is_identity", comm_dev, tol or 1e-10),
        _check("algebraic_state_matches_direct_build", build_dev, tol or 1e-10),
    ]


def _residual_samples() -> list[QPair]:
    samples = []
    thetas = [0.0, math.pi / 6, math.pi / 4, math.pi / 3, math.pi / 2]
    for k in range(20):
        samples.append(QPair(k % 5, (k * 3) % 4, thetas[k % 5]))
    return samples


def _suite_residual(tol, quad_order) -> list[dict]:
    params = PhysicalParams()
    res_dev = 0.0
    for q in _residual_samples():
        res_dev = max(res_dev, schrodinger_residual(psi_nm(q, params), t=0.9))
    fd_dev = 0.0
    h = 1e-6
    for q in _residual_samples()[:5]:
        s = psi_nm(q, params)
        ds = time_derivative(s)
        for x in (-1.3, 0.2, 2.1):
            analytic = evaluate(ds, x, 0.7)
            numeric = (evaluate(s, x, 0.7 + h) - evaluate(s, x, 0.7 - h)) * (0.5 / h)
            fd_dev = max(fd_dev, abs(analytic - numeric))
    return [
        _check("schrodinger_residual_on_solutions", res_dev, tol or 1e-10),
        _check("time_derivative_matches_finite_differences", fd_dev, tol or 1e-6),
    ]


def _suite_radial(tol, quad_order) -> list[dict]:
    params = PhysicalParams()
    gram_dev = 0.0
    for l in range(4):
        states = [radial_state(u, v, l, math.pi / 3, params) for u in range(5) for v in range(5)]
        g = radial_gram(states)
        gram_dev = max(gram_dev, g.max_closed_form_deviation())
    res_true = 0.0
    res_margin = math.inf
    for (u, v, l) in [(0, 0, 0), (1, 2, 1), (3, 1, 2), (2, 4, 3)]:
        state = radial_state(u, v, l, 0.6, params)
        res_true = max(res_true, radial_ode_residual(state))
        grid = np.asarray([abs(state.evaluate(r)) for r in np.linspace(0.15, 6.0, 40)])
        peak = float(np.max(grid))
        for shift in (-1.0, 1.0):
            energies = (radial_energy(u, l, params) + shift, radial_energy(v, l, params) + shift)
            res_margin = min(res_margin, radial_ode_residual(state, energies) / peak)
    return [
        _check("radial_gram_matches_closed_form", gram_dev, tol or 1e-10),
        _check("radial_equation_residual_at_true_energy", res_true, tol or 1e-9),
        _check("radial_residual_detects_energy_shift", res_margin, 0.05, comparison=">="),
    ]


def _angular_specs(l_max: int) -> list[QSphericalHarmonic]:
    specs = []
    for l in range(min(l_max, 2) + 1):
        for m1 in range(-l, l + 1):
            for m2 in range(-l, l + 1):
                specs.append(QSphericalHarmonic(l, m1, m2, 0.6))
    for l in range(3, l_max + 1):
        for m1, m2 in ((-l, l), (l, l - 1), (0, 1), (l, l)):
            specs.append(QSphericalHarmonic(l, m1, m2, 0.6))
    return specs


def _suite_angular(tol, quad_order) -> list[dict]:
    specs = _angular_specs(6)
    g = angular_gram(specs, n_polar=quad_order, n_azimuth=2 * quad_order)
    pattern_dev = g.max_closed_form_deviation()
    norm_dev = float(np.max(np.abs(np.diag(g.entries) - 1.0)))
    return [
        _check("angular_states_unit_norm", norm_dev, tol or 1e-10),
        _check("angular_gram_matches_closed_form", pattern_dev, tol or 1e-9),
    ]


_SUITES = {
    "algebra": _suite_algebra,
    "ladder": _suite_ladder,
    "residual": _suite_residual,
    "radial": _suite_radial,
    "angular": _suite_angular,
}


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    checks = []
    for name in names:
        checks.extend(_SUITES[name](args.tol, args.quad_order))
    failed = [c["name"] for c in checks if not c["passed"]]
    report = {
        "command": "verify",
        "inputs": {"suite": args.suite, "tol": args.tol, "quad_order": args.quad_order},
        "results": {"checks": checks},
        "checks": {"all_passed": not failed, "failed": failed},
    }
    wall = time.perf_counter() - t0
    if args.format == "csv":
        header = ["name", "value", "threshold", "comparison", "passed"]
        _print(_emit_csv(header, [[c[k] for k in header] for c in checks], wall))
    else:
        _print(_emit_json(report, wall))
    return EXIT_OK if not failed else EXIT_CHECK_FAILED


def _parse_grid(spec: str) -> np.ndarray:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValidationError(f"grid must be MIN:MAX:COUNT, got {spec!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ValidationError(f"grid must be MIN:MAX:COUNT, got {spec!r}") from exc
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi) or count < 2:
        raise ValidationError(f"grid requires min < max and count >= 2, got {spec!r}")
    return np.linspace(lo, hi, count)


def cmd_sample(args) -> int:
    t0 = time.perf_counter()
    descriptors = _load_descriptors(args.states)
    if not descriptors:
        sys.stderr.write("sample: no state descriptors provided\n")
        return EXIT_USAGE
    if len(descriptors) != 1:
        raise ValidationError("sample expects exactly one state descriptor")
    grid = _parse_grid(args.grid)
    kind, label, state, _params = _build_state(descriptors[0], args)
    rows = []
    for x in grid:
        if kind == "ho1d":
            value = evaluate(state, float(x), args.time)
        elif kind == "radial":
            if x <= 0:
                raise ValidationError("radial samples require positive radii")
            value = state.evaluate(float(x))
        else:
            raise ValidationError(f"sample supports 'ho1d' and 'radial' kinds, got {kind!r}")
        z0, z1 = value.to_symplectic()
        rows.append([float(x), z0.real, z0.imag, z1.real, z1.imag, abs(value)])
    header = ["x", "re_z0", "im_z0", "re_z1", "im_z1", "abs"]
    wall = time.perf_counter() - t0
    if args.format == "json":
        report = {
            "command": "sample",
            "inputs": {"states": descriptors, "grid": args.grid, "time": args.time,
                       "mu": args.mu, "omega": args.omega, "hbar": args.hbar},
            "results": {"columns": header, "rows": rows},
            "checks": {},
        }
        _print(_emit_json(report, wall))
    else:
        _print(_emit_csv(header, rows, wall))
    return EXIT_OK


# ---------------------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser, states: bool = True) -> None:
    if states:
        parser.add_argument("--states", required=True,
                            help="path to line-delimited JSON descriptors, or '-' for stdin")
    parser.add_argument("--time", type=float, default=0.0, help="evaluation time t")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--mu", type=float, default=1.0, help="oscillator mass")
    parser.add_argument("--omega", type=float, default=1.0, help="angular frequency")
    parser.add_argument("--hbar", type=float, default=1.0)
    parser.add_argument("--tol", type=float, default=None, help="tolerance override")
    parser.add_argument("--quad-order", type=int, default=64, dest="quad_order",
                        help="quadrature order for the cross-check paths")
    parser.add_argument("--conjugate-angular", action="store_true", dest="conjugate_angular",
                        help="conjugate the slot-1 spherical harmonic")
    parser.add_argument("--allow-overlap", action="store_true", dest="allow_overlap",
                        help="permit overlapping dimension sets in split states")


def build_parser() -> _Parser:
    parser = _Parser(prog="quatosc",
                     description="Quaternionic harmonic oscillator computations and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="energy table: closed forms vs expectation values")
    _add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("gram", help="Gram matrix of candidate basis states")
    _add_common(p)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("suite", choices=tuple(_SUITES) + ("all",))
    _add_common(p, states=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="tabulate a state on a grid")
    p.add_argument("--grid", required=True, help="MIN:MAX:COUNT")
    _add_common(p)
    p.set_defaults(func=cmd_sample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.func(args)
    except ValidationError as exc:
        sys.stderr.write(f"quatosc {args.command}: {exc}\n")
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
