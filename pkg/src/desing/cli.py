"""Command-line front end.

Subcommands: weights, blowup, analyze, portrait, verify.  Exit codes:
0 success, 1 domain error (bad input field, unbound parameter, failed
verification), 2 usage error.  Output is deterministic for a fixed
configuration and seed; DESING_SEED overrides the property-check seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .charts import ChartId, blow_up_in_chart
from .dsl import parse_field_spec, lower_to_polynomials
from .dynamo import GridSpec, frame_chart, frame_original, frame_polar, sample_portrait
from .equilibria import (
    DERIVATION_NOTES,
    MODEL_DIRECTIONAL,
    MODEL_HYPERBOLIC_X,
    MODEL_HYPERBOLIC_Y,
    MODEL_SPHERE,
    GlobalReport,
    global_divisor_report,
)
from .errors import DesingError
from .polar import Branch, HYPERBOLA, SPHERE, desingularize_polar, polar_pushforward
from .selfcheck import run_all
from .vectorfield import VectorField
from .weights import infer_weights

_MODELS = (MODEL_SPHERE, MODEL_DIRECTIONAL, MODEL_HYPERBOLIC_X, MODEL_HYPERBOLIC_Y)
_FRAMES = ("original", "K1", "K2", "K3", "K4", "sphere", "hyperbolic-x", "hyperbolic-y")


def _param_binding(text: str):
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected name=value, got {text!r}")
    try:
        return (name.strip(), Fraction(value.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational value in {text!r}: {exc}")


def _grid(text: str):
    try:
        uspec, vspec = text.split(",")
        u0, u1, nu = uspec.split(":")
        v0, v1, nv = vspec.split(":")
        return (float(u0), float(u1), int(nu), float(v0), float(v1), int(nv))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected umin:umax:nu,vmin:vmax:nv, got {text!r}: {exc}"
        )


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="desing",
        description="Blow-up desingularization of planar polynomial vector fields",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="vector-field file ('-' for stdin)")
        p.add_argument(
            "--param",
            action="append",
            default=[],
            type=_param_binding,
            metavar="NAME=VALUE",
            help="bind a parameter to an exact rational (repeatable)",
        )
        p.add_argument("-o", "--output", default=None, help="write output to a file")

    p = sub.add_parser("weights", help="infer the quasi-homogeneous type")
    add_common(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("blowup", help="print raw and desingularized blown-up fields")
    add_common(p)
    p.add_argument("--model", choices=_MODELS, default=MODEL_DIRECTIONAL)
    p.add_argument("--charts", default="K1,K2,K3,K4", help="comma-separated chart subset")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("analyze", help="global divisor equilibria report")
    add_common(p)
    p.add_argument("--model", choices=_MODELS, default=MODEL_SPHERE)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("portrait", help="emit trajectory data for phase portraits")
    add_common(p)
    p.add_argument("--frame", choices=_FRAMES, default="original")
    p.add_argument("--grid", type=_grid, required=True, metavar="U0:U1:NU,V0:V1:NV")
    p.add_argument("--t-end", type=float, default=1.0)
    p.add_argument("--step", type=float, default=1e-2)

    p = sub.add_parser("verify", help="run the invariant suite and report pass/fail")
    p.add_argument("input", nargs="?", default=None, help="optional field file ('-' for stdin)")
    p.add_argument(
        "--param", action="append", default=[], type=_param_binding, metavar="NAME=VALUE"
    )
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--seed", type=int, default=0, help="property-check seed (DESING_SEED overrides)")

    return top


# -- helpers ---------------------------------------------------------------------


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_field(path: str) -> VectorField:
    return lower_to_polynomials(parse_field_spec(_read_source(path)))


def _emit(text: str, output: "str | None"):
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def render_json(payload) -> str:
    """Stable JSON rendering; loading the output and re-rendering reproduces
    the bytes exactly."""
    return json.dumps(payload, sort_keys=True, indent=2, allow_nan=False) + "\n"


def _frac(value) -> str:
    return str(value)


def _num(value):
    """JSON value for a coordinate: exact rationals as strings, floats as-is."""
    if isinstance(value, Fraction):
        return str(value)
    return float(value)


def _field_payload(f: VectorField):
    return {
        "state_vars": list(f.state_vars),
        "params": [{"name": p.name, "positive": p.positive} for p in f.params],
        "f1": str(f.f1),
        "f2": str(f.f2),
    }


def _chart_payload(cf):
    return {
        "radial": cf.radial_var,
        "angular": cf.angular_var,
        "divisor": cf.divisor,
        "raw": [str(cf.raw[0]), str(cf.raw[1])],
        "desingularized": [str(cf.desing[0]), str(cf.desing[1])],
    }


def _polar_payload(pf):
    return {
        "signature": pf.sigma,
        "branch": pf.branch.value,
        "angle": pf.angle_name,
        "radius": pf.radial_name,
        "angular": pf.angular.pretty(),
        "radial": pf.radial.pretty(),
        "desingularized": pf.desingularized,
    }


def _eigen_payload(eq):
    return {
        "chart": eq.chart,
        "coords": [_num(c) for c in eq.coords],
        "coords_float": [float(c) for c in eq.coords_float],
        "exact": eq.exact,
        "interval": None if eq.interval is None else [_frac(eq.interval[0]), _frac(eq.interval[1])],
        "jacobian": [[_num(x) for x in row] for row in eq.jacobian],
        "eigenvalues": [[z.real, z.imag] for z in eq.eigenvalues],
        "eigenvalues_exact": None
        if eq.eigenvalues_exact is None
        else [_frac(v) for v in eq.eigenvalues_exact],
        "classification": eq.classification,
    }


def analysis_payload(report: GlobalReport):
    return {
        "model": report.model,
        "field": _field_payload(report.field),
        "bindings": {k: _frac(v) for k, v in report.bindings.items()},
        "weights": {
            "alpha": report.weights.alpha,
            "beta": report.weights.beta,
            "k": report.weights.k,
        },
        "charts": {name: _chart_payload(cf) for name, cf in report.chart_fields.items()},
        "polar": None
        if report.polar_raw is None
        else {"raw": _polar_payload(report.polar_raw), "desingularized": _polar_payload(report.polar_desing)},
        "equilibria": [
            {
                "angle": m.angle,
                "classification": m.classification,
                "members": [_eigen_payload(e) for e in m.members],
            }
            for m in report.equilibria
        ],
        "flow": [{"start": arc.start, "end": arc.end, "sign": arc.sign} for arc in report.flow],
        "degenerate_charts": report.degenerate_charts,
        "notes": report.notes,
        "derivation_notes": [dict(n) for n in DERIVATION_NOTES],
    }


def _fmt_complex(z: complex) -> str:
    if z.imag == 0:
        return f"{z.real:.12g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.12g} {sign} {abs(z.imag):.12g}i"


def render_analysis_text(report: GlobalReport) -> str:
    lines = []
    f = report.field
    lines.append(f"field: {f}")
    if report.bindings:
        shown = ", ".join(f"{k} = {v}" for k, v in sorted(report.bindings.items()))
        lines.append(f"bindings: {shown}")
    lines.append(f"weights: {report.weights}")
    lines.append(f"model: {report.model}")
    lines.append("")
    lines.append("charts:")
    for name in sorted(report.chart_fields):
        cf = report.chart_fields[name]
        r, w = cf.radial_var, cf.angular_var
        lines.append(f"  {name}: raw            {r}' = {cf.raw[0]}")
        lines.append(f"  {'':{len(name)}}  {'':14} {w}' = {cf.raw[1]}")
        lines.append(f"  {'':{len(name)}}  desingularized {r}' = {cf.desing[0]}")
        lines.append(f"  {'':{len(name)}}  {'':14} {w}' = {cf.desing[1]}")
    if report.polar_raw is not None:
        pf, pd = report.polar_raw, report.polar_desing
        a, r = pf.angle_name, pf.radial_name
        lines.append("")
        lines.append("polar form:")
        lines.append(f"  raw            {a}' = {pf.angular.pretty()}")
        lines.append(f"  {'':14} {r}' = {pf.radial.pretty()}")
        if pd is not None:
            lines.append(f"  desingularized {a}' = {pd.angular.pretty()}")
            lines.append(f"  {'':14} {r}' = {pd.radial.pretty()}")
    lines.append("")
    if report.degenerate_charts:
        lines.append(
            "degenerate charts (a line of divisor equilibria): "
            + ", ".join(report.degenerate_charts)
        )
    angle_label = "angle" if report.model in (MODEL_SPHERE, MODEL_DIRECTIONAL) else "phi"
    lines.append(f"divisor equilibria ({len(report.equilibria)}):")
    for i, m in enumerate(report.equilibria, 1):
        lines.append(f"  [{i}] {angle_label} = {m.angle:.12g}  {m.classification}")
        for e in m.members:
            coords = ", ".join(_frac(c) if isinstance(c, Fraction) else f"{c:.12g}" for c in e.coords)
            eig = ", ".join(_fmt_complex(z) for z in e.eigenvalues)
            exact = ""
            if e.eigenvalues_exact is not None:
                exact = " (exact: " + ", ".join(_frac(v) for v in e.eigenvalues_exact) + ")"
            lines.append(f"      {e.chart}: coords ({coords}); eigenvalues {eig}{exact}")
    lines.append("")
    lines.append("flow (sign of the angular component between equilibria):")
    for arc in report.flow:
        start = "-inf" if arc.start is None else f"{arc.start:.12g}"
        end = "+inf" if arc.end is None else f"{arc.end:.12g}"
        word = {1: "increasing", -1: "decreasing", 0: "zero"}[arc.sign]
        lines.append(f"  {start} -> {end}: {word}")
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append("")
    lines.append("cross-derivation notes (published vs derived forms; derived is used):")
    for n in DERIVATION_NOTES:
        lines.append(f"  [{n['key']}]")
        lines.append(f"    published: {n['published']}")
        lines.append(f"    derived:   {n['derived']}")
        lines.append(f"    {n['detail']}")
    return "\n".join(lines) + "\n"


# -- subcommands -------------------------------------------------------------------


def _cmd_weights(args) -> int:
    f = _load_field(args.input)
    w = infer_weights(f)
    if args.format == "json":
        _emit(render_json({"alpha": w.alpha, "beta": w.beta, "k": w.k}), args.output)
    else:
        _emit(f"{w}\n", args.output)
    return 0


def _cmd_blowup(args) -> int:
    f = _load_field(args.input)
    w = infer_weights(f)
    if args.model == MODEL_DIRECTIONAL:
        try:
            names = [ChartId(c.strip()) for c in args.charts.split(",") if c.strip()]
        except ValueError as exc:
            raise DesingError(f"unknown chart in --charts: {exc}")
        cfs = {c.value: blow_up_in_chart(f, w, c) for c in names}
        payload = {
            "weights": {"alpha": w.alpha, "beta": w.beta, "k": w.k},
            "charts": {n: _chart_payload(cf) for n, cf in cfs.items()},
        }
        if args.format == "json":
            _emit(render_json(payload), args.output)
            return 0
        lines = [f"weights: {w}"]
        for name in sorted(cfs):
            lines.append(cfs[name].pretty())
        _emit("\n".join(lines) + "\n", args.output)
        return 0
    sigma = SPHERE if args.model == MODEL_SPHERE else HYPERBOLA
    branch = Branch.Y if args.model == MODEL_HYPERBOLIC_Y else Branch.X
    raw = polar_pushforward(f, sigma, branch)
    des = desingularize_polar(polar_pushforward(f, sigma, branch))
    payload = {
        "weights": {"alpha": w.alpha, "beta": w.beta, "k": w.k},
        "raw": _polar_payload(raw),
        "desingularized": _polar_payload(des),
    }
    if args.format == "json":
        _emit(render_json(payload), args.output)
        return 0
    lines = [f"weights: {w}", "raw:", raw.pretty(), "desingularized:", des.pretty()]
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_analyze(args) -> int:
    f = _load_field(args.input)
    w = infer_weights(f)
    report = global_divisor_report(f, w, dict(args.param), model=args.model)
    if args.format == "json":
        _emit(render_json(analysis_payload(report)), args.output)
    else:
        _emit(render_analysis_text(report), args.output)
    return 0


def _cmd_portrait(args) -> int:
    f = _load_field(args.input)
    bindings = dict(args.param)
    if args.frame == "original":
        frame = frame_original(f, bindings)
    elif args.frame in ("K1", "K2", "K3", "K4"):
        w = infer_weights(f)
        frame = frame_chart(blow_up_in_chart(f, w, ChartId(args.frame)), bindings)
    else:
        sigma = SPHERE if args.frame == "sphere" else HYPERBOLA
        branch = Branch.Y if args.frame.endswith("-y") else Branch.X
        pf = desingularize_polar(polar_pushforward(f, sigma, branch))
        frame = frame_polar(pf, bindings)
    u0, u1, nu, v0, v1, nv = args.grid
    grid = GridSpec(u0, u1, nu, v0, v1, nv, t_end=args.t_end, step=args.step)
    trajectories = sample_portrait(frame, grid)
    rows = ["frame,traj_id,t,u,v"]
    for tid, tr in enumerate(trajectories):
        for t, u, v in tr.points:
            rows.append(f"{tr.frame},{tid},{t:.17g},{u:.17g},{v:.17g}")
    _emit("\n".join(rows) + "\n", args.output)
    return 0


def _cmd_verify(args) -> int:
    seed = int(os.environ.get("DESING_SEED", args.seed))
    if args.input is None:
        f, bindings = None, {"a": Fraction(1)}
        if args.param:
            bindings = dict(args.param)
    else:
        f = _load_field(args.input)
        bindings = dict(args.param)
    results = run_all(seed=seed, f=f, bindings=bindings)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = f" {r.detail}" if r.detail else ""
        lines.append(f"{status} {r.name} ({r.cases} cases){detail}")
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed (seed {seed})")
    _emit("\n".join(lines) + "\n", args.output)
    return 1 if failed else 0


_DISPATCH = {
    "weights": _cmd_weights,
    "blowup": _cmd_blowup,
    "analyze": _cmd_analyze,
    "portrait": _cmd_portrait,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except DesingError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
