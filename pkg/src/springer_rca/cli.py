"""Command-line front end: computations and verification suites as reports.

Exit codes: 0 success (all checks pass), 2 usage error, 3 unsupported
parameters, 4 under-truncation (the minimal sufficient degree is printed).
Output is deterministic for a given configuration regardless of the
parallelism degree; rationals are emitted in lowest terms as strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .core import Params, build_graded_basis, enumerate_fixed_points
from .errors import (
    SearchBudgetError,
    SpringerRcaError,
    UnderTruncationError,
    UnsupportedParametersError,
)
from .operators import (
    DressPolynomial,
    commutator,
    minuscule_monopole,
    operator_e,
    operator_f,
    operator_h,
    operator_x,
    operator_y,
)
from .verify import SUITE_NAMES, applicable_suites, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_UNDER_TRUNCATION = 4

OPERATOR_NAMES = ("X", "Y", "E", "F", "H", "Er", "Fr", "monopole", "commutator-XY")
DRESS_NAMES = ("1", "e1", "e2")
THREADS_ENV = "SPRINGER_RCA_THREADS"


class UsageError(Exception):
    pass


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="springer-rca",
        description=(
            "Exact monopole-operator computations and verification suites "
            "for Hilbert schemes of the curve x^n = t^k"
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, default=None, help="matrix size n")
        p.add_argument("--k", type=int, default=None, help="t-degree k")
        p.add_argument(
            "--max-degree", "-D", type=int, default=None, dest="max_degree",
            help="graded truncation degree",
        )
        p.add_argument(
            "--format", choices=("json", "csv"), default=None, dest="format",
            help="output format (default json)",
        )
        p.add_argument("--output", default=None, help="output path (default stdout)")
        p.add_argument(
            "--threads", type=int, default=None,
            help=f"parallelism degree, capped by ${THREADS_ENV}",
        )
        p.add_argument("--config", default=None, help="key=value config file")

    p_fixed = sub.add_parser("fixed-points", help="enumerate fixed points per degree")
    common(p_fixed)

    p_op = sub.add_parser("operator", help="serialize an operator's matrix blocks")
    common(p_op)
    p_op.add_argument("--op", choices=OPERATOR_NAMES, default=None, help="operator name")
    p_op.add_argument("--r", type=int, default=None, help="coweight size for Er/Fr")
    p_op.add_argument(
        "--dress", choices=DRESS_NAMES, default=None,
        help="dressing polynomial for Er/Fr/monopole (default 1)",
    )
    p_op.add_argument(
        "--coweight", default=None,
        help="comma-separated minuscule coweight for --op monopole, e.g. 1,1,0",
    )

    p_verify = sub.add_parser("verify", help="run verification suites")
    common(p_verify)
    p_verify.add_argument(
        "--suite", choices=SUITE_NAMES + ("all",), default=None, help="suite name"
    )
    return parser


def _load_config(path):
    values = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value, got {raw!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            values[key.replace("-", "_")] = value
    return values


_INT_KEYS = {"n", "k", "max_degree", "threads", "r"}


def _merge_config(args):
    if not args.config:
        return args
    config = _load_config(args.config)
    for key, value in config.items():
        if not hasattr(args, key):
            raise UsageError(f"unknown config key {key!r}")
        if getattr(args, key) is None:
            setattr(args, key, int(value) if key in _INT_KEYS else value)
    return args


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"missing required option --{name.replace('_', '-')}")


def _params(args):
    _require(args, "n", "k")
    try:
        return Params(args.n, args.k)
    except ValueError as exc:
        if isinstance(exc, SpringerRcaError):
            raise
        raise UsageError(str(exc))


def _threads(args):
    requested = args.threads if args.threads is not None else 1
    if requested < 1:
        raise UsageError("--threads must be positive")
    cap = os.environ.get(THREADS_ENV)
    if cap is not None:
        requested = min(requested, max(1, int(cap)))
    return requested


def _rational(value):
    return str(value)


def _emit(args, payload, csv_rows):
    if (args.format or "json") == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(csv_rows)
        text = buffer.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _payload(args, command, results):
    return {
        "params": {"n": args.n, "k": args.k, "max_degree": args.max_degree},
        "command": command,
        "results": results,
        "version": __version__,
    }


def cmd_fixed_points(args):
    params = _params(args)
    _require(args, "max_degree")
    if args.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    strata = [
        enumerate_fixed_points(params, d) for d in range(args.max_degree + 1)
    ]
    results = {
        "counts": [len(s) for s in strata],
        "strata": [
            {"degree": d, "count": len(s), "labels": [list(a) for a in s]}
            for d, s in enumerate(strata)
        ],
    }
    csv_rows = [("degree", "index", "label")]
    for d, stratum in enumerate(strata):
        for i, label in enumerate(stratum):
            csv_rows.append((d, i, " ".join(str(x) for x in label)))
    _emit(args, _payload(args, "fixed-points", results), csv_rows)
    return EXIT_OK


def _dress_polynomial(name, n):
    if name in (None, "1"):
        return None
    if name == "e1":
        return DressPolynomial.elementary(n, 1)
    if name == "e2":
        return DressPolynomial.elementary(n, 2)
    raise UsageError(f"unknown dressing {name!r}")


def _build_operator(args, basis):
    params = basis.params
    name = args.op
    dressable = name in ("Er", "Fr", "monopole")
    if args.dress not in (None, "1") and not dressable:
        raise UsageError(f"operator {name} does not take a dressing")
    dress = _dress_polynomial(args.dress, params.n)
    if name == "X":
        return operator_x(basis)
    if name == "Y":
        return operator_y(basis)
    if name in ("E", "F", "H"):
        if params.n != 2 or params.k % 2 == 0:
            raise UnsupportedParametersError(
                f"operator {name} requires n = 2 and odd k, got "
                f"({params.n}, {params.k})"
            )
        if name == "E":
            return operator_e(basis, 2)
        if name == "F":
            return operator_f(basis, 2).scaled(-1)
        return operator_h(basis)
    if name in ("Er", "Fr"):
        _require(args, "r")
        if not 1 <= args.r <= params.n:
            raise UsageError(f"--r must lie in [1, {params.n}]")
        builder = operator_e if name == "Er" else operator_f
        return builder(basis, args.r, dress)
    if name == "monopole":
        if args.coweight is None:
            raise UsageError("--op monopole requires --coweight")
        try:
            vector = tuple(int(x) for x in args.coweight.split(","))
        except ValueError:
            raise UsageError(f"cannot parse coweight {args.coweight!r}")
        if len(vector) != params.n:
            raise UsageError(f"coweight must have length n = {params.n}")
        try:
            return minuscule_monopole(basis, vector, dress)
        except ValueError as exc:
            if isinstance(exc, SpringerRcaError):
                raise
            raise UsageError(str(exc))
    if name == "commutator-XY":
        return commutator(operator_x(basis), operator_y(basis))
    raise UsageError(f"unknown operator {name!r}")


def cmd_operator(args):
    params = _params(args)
    _require(args, "max_degree", "op")
    basis = build_graded_basis(params, args.max_degree)
    op = _build_operator(args, basis)
    blocks = []
    csv_rows = [("degree", "row", "col", "value")]
    for d in sorted(op.blocks):
        block = op.blocks[d]
        entries = [
            [i, j, _rational(value)] for (i, j), value in block.sorted_entries()
        ]
        blocks.append(
            {
                "degree": d,
                "rows": block.nrows,
                "cols": block.ncols,
                "entries": entries,
            }
        )
        csv_rows.extend((d, i, j, v) for i, j, v in entries)
    results = {"operator": args.op, "shift": op.shift, "blocks": blocks}
    _emit(args, _payload(args, "operator", results), csv_rows)
    return EXIT_OK


def cmd_verify(args):
    params = _params(args)
    _require(args, "suite")
    if args.suite != "stabilizer":
        _require(args, "max_degree")
    if args.suite == "all":
        names = applicable_suites(params)
        skipped = [s for s in SUITE_NAMES if s not in names]
    else:
        names = [args.suite]
        skipped = []
    threads = _threads(args)
    if threads > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(run_suite, name, params, args.max_degree)
                for name in names
            ]
            reports = [f.result() for f in futures]
    else:
        reports = [run_suite(name, params, args.max_degree) for name in names]
    all_passed = all(r.passed for r in reports)
    results = {
        "suites": [
            {"suite": name, **report.to_dict()}
            for name, report in zip(names, reports)
        ],
        "skipped_suites": skipped,
        "all_passed": all_passed,
    }
    csv_rows = [("suite", "status", "claim")]
    csv_rows.extend((name, r.status, r.claim) for name, r in zip(names, reports))
    _emit(args, _payload(args, "verify", results), csv_rows)
    return EXIT_OK if all_passed else 1


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        args = _merge_config(args)
        if args.command == "fixed-points":
            return cmd_fixed_points(args)
        if args.command == "operator":
            return cmd_operator(args)
        if args.command == "verify":
            return cmd_verify(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnderTruncationError as exc:
        print(f"error: under-truncation: {exc}", file=sys.stderr)
        return EXIT_UNDER_TRUNCATION
    except UnsupportedParametersError as exc:
        print(f"error: unsupported parameters: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
