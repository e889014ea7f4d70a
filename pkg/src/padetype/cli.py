"""Command-line front end.

Problem specs and model files are JSON. Complex numbers are written as
``[re, im]`` pairs; plain numbers are accepted on input. CSV output uses 17
significant digits so that values round-trip exactly.

Exit codes: 0 success, 2 invalid spec or arguments, 3 numerical failure,
4 pole detection/removal budget exceeded.
"""
import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import barycentric as bary
from . import chebyshev as cheb
from . import nodes as gen
from . import polecontrol as pc
from . import rational
from .apps.accelerate import accelerate
from .apps.laplace import evaluate_inverse, invert_from_interpolant, mapped_transform
from .apps.piecewise import Piece, piecewise_fit
from .errors import (
    InputError,
    IterationBudgetExceeded,
    NumericalFailure,
    PadeTypeError,
    SingularAtOrigin,
    ValueUnavailable,
)
from .functions import KNOWN, known

EXIT_SPEC, EXIT_NUMERIC, EXIT_BUDGET = 2, 3, 4

# closed-form inverse transforms usable as references for laplace-invert
INVERSE_REFERENCES = {
    "one_minus_cos_over_s": lambda s: 2 * (1 - np.cos(s)) / s,
    "exp_neg": lambda s: np.exp(-s),
    "cos": np.cos,
}


class SpecError(InputError):
    pass


# ---------------------------------------------------------------- encoding

def enc(z):
    z = complex(z)
    return [z.real, z.imag]


def enc_list(arr):
    return [enc(z) for z in np.asarray(arr, dtype=complex).ravel()]


def dec(x):
    if isinstance(x, (list, tuple)):
        if len(x) != 2:
            raise SpecError("complex numbers must be [re, im] pairs, got %r" % (x,))
        return complex(float(x[0]), float(x[1]))
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return complex(x)
    raise SpecError("not a number: %r" % (x,))


def dec_list(xs):
    if not isinstance(xs, list):
        raise SpecError("expected a list of numbers, got %r" % (xs,))
    return np.array([dec(x) for x in xs], dtype=complex)


def write_atomic(path, text):
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def fmt(x):
    return "%.17g" % x


def csv_text(header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- spec parsing

@dataclass
class Options:
    scaled_rows: bool = True
    rcond: Optional[float] = None
    node_tol: float = bary.NODE_TOL


@dataclass
class ProblemSpec:
    series: np.ndarray
    nodes: np.ndarray
    values: np.ndarray
    mode: str = "rational"
    basis: str = "power"
    p: Optional[int] = None
    q: Optional[int] = None
    k: Optional[int] = None
    zeros: np.ndarray = field(default_factory=lambda: np.zeros(0, complex))
    poles: np.ndarray = field(default_factory=lambda: np.zeros(0, complex))
    options: Options = field(default_factory=Options)
    func: Optional[object] = None
    interval: Optional[tuple] = None
    raw: dict = field(default_factory=dict)


def _function(entry):
    """``"cos"`` or ``{"name": "tan_over", "params": {"omega": 4}}``."""
    if entry is None:
        return None
    name, params = (entry, {}) if isinstance(entry, str) else (entry.get("name"), entry.get("params", {}))
    if name not in KNOWN:
        raise SpecError("unknown function %r (known: %s)" % (name, ", ".join(sorted(KNOWN))))
    return known(name, 1, **params)[1]


def _series(entry, basis):
    if isinstance(entry, list):
        return dec_list(entry)
    if isinstance(entry, dict) and "known" in entry:
        name, n, params = entry["known"], int(entry.get("n", 20)), entry.get("params", {})
        if name not in KNOWN:
            raise SpecError("unknown series %r" % name)
        if basis == "chebyshev":
            func = known(name, 1, **params)[1]
            return cheb.cheb_coefficients(func, n, int(entry.get("quad_points", 256)))
        return np.asarray(known(name, n, **params)[0], dtype=complex)
    raise SpecError("series must be a coefficient list or {\"known\": name, \"n\": count}")


def _nodes(entry):
    if isinstance(entry, list):
        return dec_list(entry)
    if isinstance(entry, dict) and "generator" in entry:
        kind = entry["generator"]
        if kind == "equidistant":
            return gen.equidistant(float(entry["a"]), float(entry["b"]), int(entry["n"])).astype(complex)
        if kind == "roots_of_unity":
            return gen.roots_of_unity(int(entry["n"]))
        if kind == "chebyshev_zeros":
            return gen.chebyshev_zeros(int(entry["n"])).astype(complex)
        raise SpecError("unknown node generator %r" % kind)
    raise SpecError("nodes must be a list or a generator object")


def _opt_int(d, key):
    return None if d.get(key) is None else int(d[key])


def parse_spec(data):
    if not isinstance(data, dict):
        raise SpecError("spec must be a JSON object")
    try:
        basis = data.get("basis", "power")
        if basis not in ("power", "chebyshev"):
            raise SpecError("basis must be power or chebyshev")
        mode = data.get("mode", "chebyshev" if basis == "chebyshev" else "rational")
        if mode not in ("rational", "barycentric", "chebyshev"):
            raise SpecError("unknown mode %r" % mode)
        func = _function(data.get("function"))
        series = _series(data["series"], basis) if "series" in data else np.zeros(0, complex)
        tau = _nodes(data["nodes"]) if "nodes" in data else np.zeros(0, complex)
        if "values" in data:
            values = dec_list(data["values"])
        elif func is not None:
            values = np.asarray(func(tau), dtype=complex)
        else:
            values = np.zeros(0, complex)
        if values.size != tau.size:
            raise SpecError("%d values for %d nodes" % (values.size, tau.size))
        deg = data.get("degrees", {})
        if isinstance(deg, int):
            deg = {"k": deg}
        opts = data.get("options", {})
        options = Options(
            scaled_rows=bool(opts.get("scaled_rows", True)),
            rcond=None if opts.get("rcond") is None else float(opts["rcond"]),
            node_tol=float(opts.get("node_tol", bary.NODE_TOL)),
        )
        interval = data.get("interval")
        if interval is not None:
            interval = (float(interval[0]), float(interval[1]))
        return ProblemSpec(
            series=series, nodes=tau, values=values, mode=mode, basis=basis,
            p=_opt_int(deg, "p"), q=_opt_int(deg, "q"), k=_opt_int(deg, "k"),
            zeros=dec_list(data.get("zeros", [])), poles=dec_list(data.get("poles", [])),
            options=options, func=func, interval=interval, raw=data,
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise SpecError("malformed spec: %s" % exc) from exc


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise SpecError("cannot read %s: %s" % (path, exc.strerror)) from exc
    except json.JSONDecodeError as exc:
        raise SpecError("%s is not valid JSON: %s" % (path, exc)) from exc


def parse_grid(text):
    try:
        a, b, n = text.split(":")
        a, b, n = float(a), float(b), int(n)
    except ValueError as exc:
        raise SpecError("grid must look like a:b:n, got %r" % text) from exc
    if n < 2 or not a < b:
        raise SpecError("grid needs a < b and n >= 2")
    return a, b, n


# ---------------------------------------------------------------- models on disk

def model_to_dict(model):
    if isinstance(model, rational.RationalModel):
        out = {"type": "rational", "num": enc_list(model.num), "den": enc_list(model.den)}
        if model.nodes is not None:
            out["nodes"] = enc_list(model.nodes)
    elif isinstance(model, bary.BarycentricModel):
        out = {
            "type": "barycentric",
            "nodes": enc_list(model.nodes),
            "values": enc_list(model.values),
            "weights": enc_list(model.weights),
            "weight_kind": model.weight_kind,
            "n_coeffs": model.n_coeffs,
        }
    elif isinstance(model, cheb.ChebyshevModel):
        return {"type": "chebyshev", "h": enc_list(model.h), "e": enc_list(model.e),
                "series": enc_list(model.series)}
    else:
        raise TypeError("cannot serialize %r" % type(model))
    out["prescribed_zeros"] = enc_list(model.prescribed_zeros)
    out["prescribed_poles"] = enc_list(model.prescribed_poles)
    if model.report is not None:
        out["solve"] = {"rank": model.report.rank, "condition": model.report.condition,
                        "residual_norm": model.report.residual_norm}
    return out


def model_from_dict(d):
    try:
        kind = d["type"]
        if kind == "rational":
            return rational.RationalModel(
                dec_list(d["num"]), dec_list(d["den"]),
                dec_list(d.get("prescribed_zeros", [])), dec_list(d.get("prescribed_poles", [])),
                nodes=dec_list(d["nodes"]) if "nodes" in d else None,
            )
        if kind == "barycentric":
            return bary.BarycentricModel(
                dec_list(d["nodes"]), dec_list(d["values"]), dec_list(d["weights"]),
                d.get("weight_kind", "fitted"),
                dec_list(d.get("prescribed_zeros", [])), dec_list(d.get("prescribed_poles", [])),
                n_coeffs=d.get("n_coeffs"),
            )
        if kind == "chebyshev":
            return cheb.ChebyshevModel(dec_list(d["h"]), dec_list(d["e"]), dec_list(d.get("series", [])))
    except (KeyError, TypeError) as exc:
        raise SpecError("malformed model file: %s" % exc) from exc
    raise SpecError("unknown model type %r" % d.get("type"))


def fit_from_spec(spec):
    o = spec.options
    if spec.mode == "chebyshev":
        return cheb.fit_cheb(spec.series, spec.nodes, spec.values, spec.k, o.rcond)
    if spec.mode == "barycentric":
        return bary.fit_weights_partial(spec.series, spec.nodes, spec.values, spec.k,
                                        spec.zeros, spec.poles, rcond=o.rcond)
    if spec.zeros.size or spec.poles.size:
        k = spec.k if spec.k is not None else spec.p
        if k is None:
            raise SpecError("degrees.k is required")
        return rational.fit_partial(spec.series, spec.nodes, spec.values, k,
                                    spec.zeros, spec.poles, o.scaled_rows, o.rcond)
    p = spec.p if spec.p is not None else spec.k
    if p is None:
        raise SpecError("degrees need p (and optionally q) or k")
    q = spec.q if spec.q is not None else p
    return rational.fit(spec.series, spec.nodes, spec.values, p, q, o.scaled_rows, o.rcond)


def problem_from_spec(spec):
    if spec.mode == "chebyshev":
        raise SpecError("pole removal works on rational or barycentric fits")
    k = spec.k if spec.k is not None else spec.p
    if k is None:
        if spec.mode == "barycentric":
            k = spec.nodes.size - 1
        else:
            raise SpecError("degrees.k is required")
    return pc.FitProblem(
        spec.series, spec.nodes, spec.values, k, spec.mode, func=spec.func,
        zeros=tuple(spec.zeros), poles=tuple(spec.poles),
        scaled=spec.options.scaled_rows, rcond=spec.options.rcond,
    )


def report_to_dict(r):
    return {
        "location": enc(r.location),
        "method": r.method,
        "bracket": None if r.bracket is None else list(r.bracket),
        "residual_value": None if not np.isfinite(r.residual_value) else r.residual_value,
    }


# ---------------------------------------------------------------- commands

def _apply_flags(spec, args):
    if args.rcond is not None:
        spec.options.rcond = args.rcond
    if args.no_row_scaling:
        spec.options.scaled_rows = False
    return spec


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise SpecError("--%s is required for %s" % (name.replace("_", "-"), args.command))


def _spec(args):
    _need(args, "spec")
    return _apply_flags(parse_spec(load_json(args.spec)), args)


def _interval(args, spec=None):
    if args.grid is not None:
        return parse_grid(args.grid)
    if spec is not None and spec.interval is not None:
        return spec.interval[0], spec.interval[1], 500
    raise SpecError("--grid a:b:n (or an \"interval\" key in --spec) is required")


def cmd_fit(args):
    _need(args, "out")
    spec = _spec(args)
    write_atomic(args.out, dump_json(model_to_dict(fit_from_spec(spec))))


def cmd_cheb_fit(args):
    _need(args, "out")
    spec = _spec(args)
    spec.mode = "chebyshev"
    write_atomic(args.out, dump_json(model_to_dict(fit_from_spec(spec))))


def cmd_eval(args):
    _need(args, "model", "out")
    model = model_from_dict(load_json(args.model))
    if args.grid is not None:
        a, b, n = parse_grid(args.grid)
        t = np.linspace(a, b, n)
    elif args.spec is not None:
        t = parse_spec(load_json(args.spec)).nodes
    else:
        raise SpecError("--grid or --spec is required for eval")
    spec = parse_spec(load_json(args.spec)) if args.spec is not None else None
    if spec is not None and isinstance(model, bary.BarycentricModel):
        R = np.asarray(model(t, spec.options.node_tol), dtype=complex)
    else:
        R = np.asarray(model(t), dtype=complex)
    header = ["t", "R", "R_imag"]
    cols = [np.real(t), R.real, R.imag]
    if np.iscomplexobj(t) and np.any(np.imag(t)):
        header.insert(1, "t_imag")
        cols.insert(1, np.imag(t))
    func = spec.func if spec is not None else None
    if func is not None:
        ref = np.asarray(func(t), dtype=complex)
        err = np.abs(R - ref)
        with np.errstate(divide="ignore"):
            lg = np.log10(err)
        header += ["f_ref", "abs_err", "log10_err"]
        cols += [ref.real, err, lg]
    write_atomic(args.out, csv_text(header, zip(*cols)))


def cmd_poles(args):
    _need(args, "model", "out")
    model = model_from_dict(load_json(args.model))
    a, b, n = _interval(args)
    reports = pc.detect_poles(model, (a, b), n, args.threshold)
    write_atomic(args.out, dump_json([report_to_dict(r) for r in reports]))


def cmd_fix_poles(args):
    _need(args, "out")
    spec = _spec(args)
    a, b, n = _interval(args, spec)
    problem = problem_from_spec(spec)
    try:
        model, problem, history = pc.remove_poles_iterate(
            problem, (a, b), args.max_iter, grid_n=n, threshold=args.threshold
        )
    except ValueUnavailable as exc:
        raise SpecError("%s; add a \"function\" key to --spec" % exc) from exc
    out = {
        "model": model_to_dict(model),
        "history": [
            {"report": report_to_dict(h.report), "replaced_index": h.replaced_index,
             "old_node": enc(h.old_node), "new_node": enc(h.new_node)}
            for h in history
        ],
    }
    write_atomic(args.out, dump_json(out))


def cmd_laplace_invert(args):
    """Fit ``F`` at ``tau_i = (a/p_i)**power``, invert, sample ``f(s)``."""
    _need(args, "out")
    data = load_json(args.spec) if args.spec else None
    if data is None:
        raise SpecError("--spec is required for laplace-invert")
    lap = data.get("laplace")
    if not isinstance(lap, dict) or "p_nodes" not in lap:
        raise SpecError("laplace-invert needs a \"laplace\" block with p_nodes")
    a = float(lap.get("a", 1.0))
    power = int(lap.get("power", 2))
    n_terms = int(lap.get("n_terms", 30))
    p_nodes = dec_list(lap["p_nodes"])
    if np.any(p_nodes == 0):
        raise SpecError("p_nodes must be nonzero")
    data = dict(data, nodes=enc_list((a / p_nodes) ** power))
    spec = _apply_flags(parse_spec(data), args)
    model = fit_from_spec(spec)
    if isinstance(model, cheb.ChebyshevModel):
        raise SpecError("laplace-invert works on power-series fits")
    if isinstance(model, bary.BarycentricModel):
        model = model.to_rational()
    coeffs = invert_from_interpolant(model, a, power, n_terms)
    F = mapped_transform(model, a, power)
    s_a, s_b, s_n = parse_grid(args.grid) if args.grid else (0.0, 8.0, 801)
    s = np.linspace(s_a, s_b, s_n)
    fhat = evaluate_inverse(coeffs, s)
    header = ["s", "f_hat"]
    cols = [s, fhat.real]
    ref_name = lap.get("reference")
    if ref_name is not None:
        if ref_name not in INVERSE_REFERENCES:
            raise SpecError("unknown reference %r" % ref_name)
        with np.errstate(divide="ignore", invalid="ignore"):
            ref = INVERSE_REFERENCES[ref_name](s)
        err = np.abs(fhat - ref)
        with np.errstate(divide="ignore"):
            lg = np.log10(err)
        header += ["f_ref", "abs_err", "log10_err"]
        cols += [ref, err, lg]
    base = os.path.splitext(args.out)[0]
    series_doc = {"A": enc(F.A), "alpha": enc_list(F.alpha), "beta": enc_list(F.beta),
                  "coefficients": enc_list(coeffs), "model": model_to_dict(model)}
    write_atomic(base + "_series.json", dump_json(series_doc))
    write_atomic(args.out, csv_text(header, zip(*cols)))


def cmd_accelerate(args):
    _need(args, "out")
    data = load_json(args.spec) if args.spec else None
    if data is None:
        raise SpecError("--spec is required for accelerate")
    spec = _apply_flags(parse_spec(dict(data, values=data.get("samples", data.get("values")))), args)
    if "tau_inf" not in data:
        raise SpecError("accelerate needs tau_inf")
    k = spec.k if spec.k is not None else spec.p
    if k is None:
        raise SpecError("degrees.k is required")
    mode = "barycentric" if spec.mode == "barycentric" else "rational"
    T = accelerate(spec.values, spec.nodes, dec(data["tau_inf"]), k, spec.series, mode,
                   spec.options.scaled_rows, spec.options.rcond)
    rows = [(n, z.real, z.imag) for n, z in enumerate(T)]
    write_atomic(args.out, csv_text(["n", "T", "T_imag"], rows))


def cmd_piecewise(args):
    _need(args, "out")
    data = load_json(args.spec) if args.spec else None
    if data is None:
        raise SpecError("--spec is required for piecewise")
    spec = _apply_flags(parse_spec({k: v for k, v in data.items() if k != "pieces"}), args)
    func = spec.func
    pieces = []
    for entry in data.get("pieces", []):
        tau = _nodes(entry["nodes"])
        if "values" in entry:
            vals = dec_list(entry["values"])
        elif func is not None:
            vals = np.asarray(func(tau), dtype=complex)
        else:
            raise SpecError("piece values or a spec function are required")
        pieces.append(Piece(tuple(float(x) for x in entry["interval"]), tau, vals))
    k = spec.k if spec.k is not None else spec.p
    if k is None:
        raise SpecError("degrees.k is required")
    scaled = bool(data.get("options", {}).get("scaled_rows", False)) and not args.no_row_scaling
    res = piecewise_fit(pieces, spec.series, k, spec.mode, scaled,
                        float(data.get("center", 0.0)), spec.options.rcond)
    out = {
        "models": [model_to_dict(m) for m in res.models],
        "conditions": res.conditions,
        "junction": {
            "taylor": [enc_list(row) for row in res.taylor],
            "derivatives": [enc_list(row) for row in res.derivatives],
            "max_disagreement": res.max_disagreement,
        },
    }
    write_atomic(args.out, dump_json(out))


COMMANDS = {
    "fit": cmd_fit,
    "eval": cmd_eval,
    "poles": cmd_poles,
    "fix-poles": cmd_fix_poles,
    "cheb-fit": cmd_cheb_fit,
    "laplace-invert": cmd_laplace_invert,
    "accelerate": cmd_accelerate,
    "piecewise": cmd_piecewise,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SpecError(message)


def build_parser():
    parser = _Parser(prog="padetype", description="Padé-type rational interpolation toolkit")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--spec", help="problem spec (JSON)")
    parser.add_argument("--model", help="model file written by fit")
    parser.add_argument("--out", help="output file")
    parser.add_argument("--grid", help="a:b:n uniform grid (evaluation points or detection interval)")
    parser.add_argument("--threshold", type=float, help="magnitude threshold for grid pole detection")
    parser.add_argument("--max-iter", type=int, default=10, help="pole removal budget")
    parser.add_argument("--rcond", type=float, help="relative singular value cutoff")
    parser.add_argument("--no-row-scaling", action="store_true", help="do not scale rows by tau**-q")
    return parser


def _join_grid(argv):
    # "--grid -1:1:5" would otherwise read as an unknown option
    out, it = [], iter(argv)
    for tok in it:
        if tok == "--grid":
            out.append("--grid=" + next(it, ""))
        else:
            out.append(tok)
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_join_grid(argv))
        COMMANDS[args.command](args)
    except IterationBudgetExceeded as exc:
        print("padetype: budget exceeded: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except InputError as exc:
        print("padetype: invalid input: %s" % exc, file=sys.stderr)
        return EXIT_SPEC
    except (NumericalFailure, SingularAtOrigin, ValueUnavailable, np.linalg.LinAlgError) as exc:
        print("padetype: numerical failure: %s" % exc, file=sys.stderr)
        return EXIT_NUMERIC
    except PadeTypeError as exc:
        print("padetype: %s" % exc, file=sys.stderr)
        return EXIT_NUMERIC
    return 0


if __name__ == "__main__":
    sys.exit(main())
