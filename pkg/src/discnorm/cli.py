"""Command-line front-end.

One subcommand per result cluster: ``norm``, ``sample``, ``decompose``,
``dual``, ``monotonicity``, ``misalign``, ``check-heisenberg``, ``quasi``.
Reports go to stdout (or ``--output``) as deterministic JSON; ``sample``
and ``misalign`` can emit CSV instead.  Exit codes: 0 success, 1 domain
error, 2 I/O or parse error; in JSON mode errors are mirrored as
``{"error": {"code": ..., "message": ...}}`` on stderr.
"""

from __future__ import annotations

import argparse
import io as _io
import os
import sys

from . import analysis, decomposition, duality, norms, sampling
from .io import ParseError, load_input, render_json, write_events_csv

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2


def _tol(args):
    if args.tol is not None:
        return args.tol
    env = os.environ.get("DISC_TOL")
    return float(env) if env else norms.DEFAULT_TOL


def _load(args, path, as_kind=None):
    return load_input(
        path,
        as_kind=as_kind if as_kind is not None else args.as_kind,
        t0=args.t0,
        dt=args.dt,
    )


def _load_values(args, path):
    """Sequence or event-train input, reduced to its value sequence."""
    kind, obj = _load(args, path)
    if kind == "sequence":
        return obj
    if kind == "events":
        return list(obj.values)
    raise ValueError("this command expects a sequence of values, not a sampled signal")


def _load_weights(args, path):
    kind, obj = _load(args, path)
    if kind == "sequence":
        return duality.FunctionalWeights.from_values(obj)
    if kind == "signal":
        return duality.FunctionalWeights(tuple(obj.times.tolist()), tuple(obj.samples.tolist()))
    raise ValueError("weights input must be a value sequence or a sampled signal")


def _load_signal(args, path):
    kind, obj = _load(args, path, as_kind=args.as_kind or "signal")
    if kind != "signal":
        raise ValueError("this command expects a sampled signal")
    return obj


def _cmd_norm(args):
    values = _load_values(args, args.input)
    kind = norms.NormKind(args.kind)
    if kind is norms.NormKind.P and args.p is None:
        raise ValueError("--kind p requires --p")
    return "json", {"value": norms.compute_norm(values, kind, args.p)}


def _cmd_sample(args):
    signal = _load_signal(args, args.input)
    config = sampling.SamplerConfig(args.scheme, args.theta, if_reset=args.if_reset)
    encoded = sampling.encode(signal, config)
    if args.format == "csv":
        buf = _io.StringIO()
        write_events_csv(encoded, buf)
        return "csv", buf.getvalue()
    return "json", encoded.to_json_dict()


def _cmd_decompose(args):
    if args.mode == "discrete":
        values = _load_values(args, args.input)
        return "json", decomposition.jordan_discrete(values).to_dict()
    signal = _load_signal(args, args.input)
    return "json", decomposition.jordan_continuous(signal).to_dict()


def _cmd_dual(args):
    weights = _load_weights(args, args.input)
    return "json", duality.dual_report(weights, tol=_tol(args)).to_dict()


def _cmd_monotonicity(args):
    weights = _load_weights(args, args.input)
    return "json", {"mu_mon": duality.monotonicity_measure(weights, tol=_tol(args))}


def _cmd_misalign(args):
    values = _load_values(args, args.input)
    k_max = args.k_max if args.k_max is not None else len(values)
    profile = analysis.misalignment(values, k_max)
    if args.format == "csv":
        lines = ["k,delta"]
        lines += [f"{k},{d!r}" if isinstance(d, float) else f"{k},{d}"
                  for k, d in zip(profile.k_values, profile.deltas)]
        return "csv", "\n".join(lines) + "\n"
    return "json", profile.to_dict()


def _cmd_heisenberg(args):
    values = _load_values(args, args.input)
    return "json", analysis.heisenberg_check(values, tol=_tol(args)).to_dict()


def _cmd_quasi(args):
    f = _load_signal(args, args.inputs[0])
    g = _load_signal(args, args.inputs[1])
    config = sampling.SamplerConfig(args.scheme, args.theta, if_reset=args.if_reset)
    report = sampling.quasi_isometry_check(f, g, config, tol=_tol(args))
    return "json", report.to_dict()


def _add_common(sub, inputs=1):
    if inputs == 1:
        sub.add_argument("input", help="input data file")
    else:
        sub.add_argument("inputs", nargs=2, metavar="INPUT", help="two input data files")
    sub.add_argument("--as", dest="as_kind", choices=("sequence", "events", "signal"),
                     default=None, help="override input format detection")
    sub.add_argument("--t0", type=float, default=0.0,
                     help="start time for single-column signal input")
    sub.add_argument("--dt", type=float, default=1.0,
                     help="sample spacing for single-column signal input")
    sub.add_argument("--tol", type=float, default=None,
                     help="absolute tolerance (default 1e-9, or DISC_TOL)")
    sub.add_argument("--output", default=None, help="write the report here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="discnorm",
        description="Discrepancy-norm computations for sequences, signals and event trains.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("norm", help="norm of a value sequence")
    p.add_argument("--kind", choices=[k.value for k in norms.NormKind], default="d")
    p.add_argument("--p", type=float, default=None, help="exponent for --kind p")
    _add_common(p)
    p.set_defaults(handler=_cmd_norm, format="json")

    p = subs.add_parser("sample", help="encode a signal into an event train")
    p.add_argument("--scheme", choices=("sod", "if"), required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--if-reset", action="store_true",
                   help="reset the IF integrator to zero at each event")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    _add_common(p)
    p.set_defaults(handler=_cmd_sample)

    p = subs.add_parser("decompose", help="Jordan-type monotone decomposition")
    p.add_argument("--mode", choices=("discrete", "continuous"), required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_decompose, format="json")

    p = subs.add_parser("dual", help="dual norms, variation and monotonicity report")
    _add_common(p)
    p.set_defaults(handler=_cmd_dual, format="json")

    p = subs.add_parser("monotonicity", help="monotonicity measure of a weight sequence")
    _add_common(p)
    p.set_defaults(handler=_cmd_monotonicity, format="json")

    p = subs.add_parser("misalign", help="shift misalignment profile")
    p.add_argument("--k-max", type=int, default=None,
                   help="maximum shift (default: sequence length)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    _add_common(p)
    p.set_defaults(handler=_cmd_misalign)

    p = subs.add_parser("check-heisenberg", help="l1 <= disc*bv report for ternary input")
    _add_common(p)
    p.set_defaults(handler=_cmd_heisenberg, format="json")

    p = subs.add_parser("quasi", help="quasi-isometry bounds for a signal pair")
    p.add_argument("--scheme", choices=("sod", "if"), required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--if-reset", action="store_true")
    _add_common(p, inputs=2)
    p.set_defaults(handler=_cmd_quasi)

    return parser


def _emit_error(args, code, name, message):
    if getattr(args, "format", "json") == "json":
        sys.stderr.write(render_json({"error": {"code": name, "message": message}}) + "\n")
    else:
        sys.stderr.write(f"error ({name}): {message}\n")
    return code


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        fmt, payload = args.handler(args)
    except ParseError as exc:
        return _emit_error(args, EXIT_IO, "parse-error", str(exc))
    except OSError as exc:
        return _emit_error(args, EXIT_IO, "io-error", str(exc))
    except (ValueError, TypeError) as exc:
        return _emit_error(args, EXIT_DOMAIN, "domain-error", str(exc))

    text = render_json(payload) + "\n" if fmt == "json" else payload
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            return _emit_error(args, EXIT_IO, "io-error", str(exc))
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
