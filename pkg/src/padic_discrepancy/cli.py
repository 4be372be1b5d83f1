"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time

import numpy as np

from . import verify
from .discrepancy import Disc, exact_discrepancy, fraction_str, l2_norm_sq
from .leveque import discrepancy_bound, weyl_table
from .padic import ParameterError, PrecisionError, SizeError
from .sequences import SequenceParseError, SequenceSpec, parse_sequence_file

DEFAULT_PRECISION = 12


class UsageError(Exception):
    pass


def decimal(x) -> str:
    """12 significant digits, for CSV columns."""
    return f"{float(x):.12g}"


def _parse_linear(text: str):
    fields = {}
    for part in text.split(","):
        key, sep, val = part.partition("=")
        if not sep or key.strip() not in ("a", "b"):
            raise UsageError(f"--linear expects a=INT,b=INT, got {text!r}")
        try:
            fields[key.strip()] = int(val)
        except ValueError:
            raise UsageError(f"--linear expects a=INT,b=INT, got {text!r}") from None
    if set(fields) != {"a", "b"}:
        raise UsageError(f"--linear expects a=INT,b=INT, got {text!r}")
    return fields["a"], fields["b"]


def _parse_explicit(text: str):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"--explicit expects comma-separated integers, got {text!r}") from None


def resolve_spec(args, N: int = None) -> SequenceSpec:
    """Build the SequenceSpec named by exactly one source flag."""
    sources = [s for s in ("linear", "explicit", "random_seed", "input")
               if getattr(args, s) is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --linear, --explicit, --random-seed, --input")
    if args.input is not None:
        with open(args.input, encoding="utf-8") as fh:
            return parse_sequence_file(fh.read())
    if args.p is None:
        raise UsageError("--p is required unless --input is given")
    K = args.precision if args.precision is not None else DEFAULT_PRECISION
    N = args.n if N is None else N
    if args.explicit is not None:
        values = _parse_explicit(args.explicit)
        if N is not None and N != len(values):
            raise UsageError(f"--n {N} disagrees with {len(values)} explicit values")
        q = args.p ** K
        if any(not 0 <= v < q for v in values):
            raise UsageError(f"explicit values must lie in [0, {args.p}^{K})")
        return SequenceSpec.explicit(values, args.p, K)
    if N is None:
        raise UsageError("--n is required for --linear and --random-seed")
    if args.linear is not None:
        a, b = _parse_linear(args.linear)
        return SequenceSpec.linear(a, b, N, args.p, K)
    return SequenceSpec.random(args.random_seed, N, args.p, K)


def _trunc(args, spec) -> int:
    return spec.K if args.trunc is None else args.trunc


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_discrepancy(args) -> str:
    report = exact_discrepancy(resolve_spec(args))
    if args.format == "csv":
        witness = str(report.witness) if isinstance(report.witness, Disc) else report.witness
        return _csv(["value", "witness", "limit_term", "finite_max", "N", "K"],
                    [[decimal(report.value), witness, decimal(report.limit_term),
                      decimal(report.finite_max), report.N, report.K]])
    return _json(report.to_dict())


def cmd_bound(args) -> str:
    spec = resolve_spec(args)
    report = discrepancy_bound(spec, _trunc(args, spec))
    if args.format == "csv":
        d = report.to_dict()
        return _csv(list(d), [[decimal(report.tail) if k == "tail" else v for k, v in d.items()]])
    return _json(report.to_dict())


def cmd_weyl(args) -> str:
    spec = resolve_spec(args)
    rows = weyl_table(spec, _trunc(args, spec)).to_rows()
    if args.format == "csv":
        return _csv(["character", "re", "im", "abs"],
                    [[r["character"], repr(r["re"]), repr(r["im"]), repr(r["abs"])] for r in rows])
    return _json(rows)


def cmd_l2norm(args) -> str:
    spec = resolve_spec(args)
    value = l2_norm_sq(spec)
    if args.format == "csv":
        return _csv(["l2_norm_sq", "N", "K"], [[decimal(value), spec.N, spec.K]])
    return _json({"l2_norm_sq": fraction_str(value), "N": spec.N, "K": spec.K})


def sweep(n_start: int, n_end: int, ratio: float) -> list:
    if ratio <= 1:
        raise UsageError("--ratio must be > 1")
    if n_start < 1 or n_end < n_start:
        raise UsageError("need 1 <= --n-start <= --n-end")
    out, j = [], 0
    while True:
        N = round(n_start * ratio ** j)
        if N > n_end:
            return out
        if not out or N != out[-1]:
            out.append(N)
        j += 1


def loglog_fit(ns, values):
    """OLS slope and intercept of log(value) on log(N), with the RMS residual."""
    x, y = np.log(np.asarray(ns, float)), np.log(np.asarray(values, float))
    slope, intercept = np.polyfit(x, y, 1)
    resid = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    return float(slope), float(intercept), resid


def scan_rows(args) -> list:
    if args.explicit is not None or args.input is not None:
        raise UsageError("scan needs a --linear or --random-seed source")
    if args.n_start is None or args.n_end is None:
        raise UsageError("scan needs --n-start and --n-end")
    rows = []
    for N in sweep(args.n_start, args.n_end, args.ratio):
        spec = resolve_spec(args, N=N)
        t0 = time.perf_counter()
        d = exact_discrepancy(spec).value
        bound = discrepancy_bound(spec, _trunc(args, spec)).bound
        ms = (time.perf_counter() - t0) * 1e3
        rows.append({"N": N, "discrepancy": d, "bound": bound,
                     "ratio": bound / float(d), "runtime_ms": ms})
    return rows


def cmd_scan(args) -> str:
    rows = scan_rows(args)
    slope, intercept, resid = loglog_fit([r["N"] for r in rows], [r["bound"] for r in rows])
    if args.format == "json":
        return _json({
            "rows": [dict(r, discrepancy=fraction_str(r["discrepancy"])) for r in rows],
            "slope": slope, "intercept": intercept, "residual": resid,
        })
    text = _csv(["N", "discrepancy", "bound", "ratio", "runtime_ms"],
                [[r["N"], decimal(r["discrepancy"]), decimal(r["bound"]),
                  decimal(r["ratio"]), f"{r['runtime_ms']:.3f}"] for r in rows])
    return text + f"# slope={slope:.12g} intercept={intercept:.12g} residual={resid:.12g}\n"


def cmd_verify(args):
    primes = [args.p] if args.p is not None else [2, 3]
    checks = verify.run(args.suite, primes, args.seed)
    text = "".join(c.line() + "\n" for c in checks)
    return text, all(c.ok for c in checks)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padic-discrepancy",
        description="Discrepancy of finite sequences in the p-adic integers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt_default="json"):
        p.add_argument("--p", type=int)
        p.add_argument("--precision", type=int, help=f"digits K (default {DEFAULT_PRECISION})")
        p.add_argument("--linear", metavar="a=INT,b=INT")
        p.add_argument("--explicit", metavar="v1,v2,...")
        p.add_argument("--random-seed", type=int)
        p.add_argument("--input", metavar="FILE")
        p.add_argument("--n", type=int)
        p.add_argument("--trunc", type=int, help="truncation exponent (default: precision)")
        p.add_argument("--format", choices=("csv", "json"), default=fmt_default)
        p.add_argument("--out", metavar="PATH")

    for name in ("discrepancy", "bound", "weyl", "l2norm"):
        add_common(sub.add_parser(name))
    scan = sub.add_parser("scan")
    add_common(scan, fmt_default="csv")
    scan.add_argument("--n-start", type=int)
    scan.add_argument("--n-end", type=int)
    scan.add_argument("--ratio", type=float, default=2.0)

    ver = sub.add_parser("verify")
    ver.add_argument("--suite", choices=["all", *verify.SUITES], default="all")
    ver.add_argument("--p", type=int, choices=(2, 3, 5, 7))
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--out", metavar="PATH")
    return parser


COMMANDS = {"discrepancy": cmd_discrepancy, "bound": cmd_bound, "weyl": cmd_weyl,
            "l2norm": cmd_l2norm, "scan": cmd_scan}


def _emit(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            text, ok = cmd_verify(args)
            _emit(text, args.out)
            return 0 if ok else 1
        _emit(COMMANDS[args.command](args), args.out)
        return 0
    except (UsageError, ParameterError, PrecisionError, SizeError, SequenceParseError,
            OSError) as exc:
        print(f"padic-discrepancy {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
