"""Command-line interface: construction, verification, sweeps, powers.

Commands:
    show-r      print the right-justified Pascal matrix
    show-u      print the eigenvector matrix U
    show-w      print the scaled eigenvector matrix W
    eigen       print the eigenvalues (and their numeric gap)
    verify      run exact/numeric verifications, emit machine-readable reports
    power       compute an integer power of the Pascal matrix (x = 1)
    identities  sweep the six binomial identities over parameter boxes

Common flags: --n <int>, --m <int>, --x {1|<int>|symbolic},
--format {pretty|json|csv}, --tol <float>, --check {...}, --only <identity>,
and per-parameter ranges such as --N -6..12.

Exit status: 0 when everything requested succeeded and every verification
passed, 1 when some verification failed, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys

from . import spectral
from .binomial import DEFAULT_BOXES, Identity, sweep_identity
from .pascal import build_r, build_rx, build_u, build_w


_RANGE_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")

VERIFY_CHECKS = ("eigen", "involution", "power", "diag", "all")
DEFAULT_POWER_RANGE = range(-3, 7)


def _parse_x(text: str):
    """--x value: 'symbolic' -> None, otherwise an integer."""
    if text == "symbolic":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an integer or 'symbolic', got {text!r}"
        )


def _parse_range(text: str) -> tuple[int, int]:
    m = _RANGE_RE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected a range like -6..12, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _parse_dim(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"dimension must be >= 1, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rjpascal",
        description="Exact spectral toolkit for right-justified Pascal matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix_cmd(name, help_text, formats):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=_parse_dim, required=True, help="matrix dimension")
        p.add_argument(
            "--x", type=_parse_x, default=1, metavar="{1|<int>|symbolic}",
            help="coefficient specialization (default 1)",
        )
        p.add_argument("--format", choices=formats, default="pretty")
        return p

    add_matrix_cmd("show-r", "print the Pascal matrix", ("pretty", "json", "csv"))
    add_matrix_cmd("show-u", "print the eigenvector matrix", ("pretty", "json"))
    add_matrix_cmd("show-w", "print the scaled eigenvector matrix", ("pretty", "json"))
    add_matrix_cmd("eigen", "print the eigenvalues", ("pretty", "json"))

    pv = sub.add_parser("verify", help="run verifications, report pass/fail")
    pv.add_argument("--n", type=_parse_dim, required=True)
    pv.add_argument("--check", choices=VERIFY_CHECKS, default="all")
    pv.add_argument(
        "--x", type=_parse_x, default=1, metavar="{1|<int>|symbolic}",
        help="coefficient specialization (default 1)",
    )
    pv.add_argument("--m", type=int, default=None,
                    help="single exponent for the power check (default -3..6)")
    pv.add_argument("--tol", type=float, default=None,
                    help="numeric tolerance (default 1e-9 for n <= 8, else 1e-8)")
    pv.add_argument("--format", choices=("pretty", "json"), default="json")

    pp = sub.add_parser("power", help="integer power of the Pascal matrix at x = 1")
    pp.add_argument("--n", type=_parse_dim, required=True)
    pp.add_argument("--m", type=int, required=True, help="any integer exponent")
    pp.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")

    pi = sub.add_parser("identities", help="brute-force identity sweeps")
    pi.add_argument(
        "--only", choices=[ident.value for ident in Identity], default=None,
        help="sweep a single identity (default: all six)",
    )
    for name in ("N", "J", "K", "I", "M", "L"):
        pi.add_argument(
            f"--{name}", type=_parse_range, default=None, metavar="a..b",
            help=f"range for parameter {name} where the identity uses it",
        )
    pi.add_argument("--format", choices=("pretty", "json"), default="json")

    return parser


def _usage_error(message: str) -> int:
    print(f"rjpascal: error: {message}", file=sys.stderr)
    return 2


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _x_label(x):
    return "symbolic" if x is None else x


def _cmd_show(args) -> int:
    if args.command == "show-r":
        if args.x is None:
            matrix = build_rx(args.n)
            if args.format == "csv":
                return _usage_error("csv is only valid for integer-valued output")
        else:
            matrix = build_rx(args.n).specialize(args.x).to_int_matrix()
    else:
        build = build_u if args.command == "show-u" else build_w
        matrix = build(args.n)
        if args.x is not None:
            matrix = matrix.specialize(args.x)
    if args.format == "csv":
        print(matrix.to_csv(), end="")
    elif args.format == "json":
        _emit_json(matrix.to_json())
    else:
        print(matrix)
    return 0


def _cmd_eigen(args) -> int:
    lams = [spectral.eigenvalue(args.n, j) for j in range(1, args.n + 1)]
    if args.x is not None:
        lams = [lam.specialize(args.x) for lam in lams]
    gap = None if args.x is None else spectral.eigen_distinctness(args.n, args.x)
    if args.format == "json":
        obj = {
            "n": args.n,
            "x": _x_label(args.x),
            "eigenvalues": [
                {"j": j, "value": lam.to_json()}
                for j, lam in enumerate(lams, start=1)
            ],
        }
        if gap is not None and math.isfinite(gap):
            obj["min_gap"] = gap
        _emit_json(obj)
    else:
        for j, lam in enumerate(lams, start=1):
            print(f"lambda_{j} = {lam}")
        if gap is not None:
            print(f"min pairwise gap = {gap:.12g}")
    return 0


def _report(check: str, n: int, params: dict, passed: bool, residual=None) -> dict:
    obj = {"check": check, "n": n, "params": params, "pass": passed}
    if residual is not None:
        obj["residual"] = residual
    return obj


def _cmd_verify(args) -> int:
    n, x = args.n, args.x
    explicit = args.check != "all"
    checks = VERIFY_CHECKS[:-1] if args.check == "all" else (args.check,)
    if explicit and args.check == "power" and x != 1:
        return _usage_error("the power check is defined at x = 1 only")
    if explicit and args.check == "diag" and x is None:
        return _usage_error("the diag check is numeric; pass an integer --x")

    reports = []
    for check in checks:
        if check == "eigen":
            for p in range(1, n + 1):
                ok = spectral.verify_eigenpair(n, p, x=x)
                reports.append(
                    _report("eigen", n, {"p": p, "x": _x_label(x)}, ok)
                )
        elif check == "involution":
            ok = spectral.verify_involution(n, x=x)
            reports.append(_report("involution", n, {"x": _x_label(x)}, ok))
        elif check == "power":
            if x != 1:
                continue  # only defined at x = 1; skipped under --check all
            exponents = [args.m] if args.m is not None else list(DEFAULT_POWER_RANGE)
            for m in exponents:
                ok = (
                    spectral.matrix_power_closed_form(n, m).matrix
                    == spectral.matrix_power_oracle(n, m)
                )
                reports.append(_report("power", n, {"m": m}, ok))
        elif check == "diag":
            if x is None:
                continue  # numeric only; skipped under --check all
            rep = spectral.verify_diagonalization_numeric(n, float(x), args.tol)
            base = {"x": x, "tol": rep.tol}
            reports.append(
                _report("diag-involution", n, base, rep.residual_involution <= rep.tol,
                        rep.residual_involution)
            )
            reports.append(
                _report("diag-eigen", n, base, rep.residual_diagonalization <= rep.tol,
                        rep.residual_diagonalization)
            )

    if args.format == "json":
        _emit_json(reports)
    else:
        for rep in reports:
            tag = "PASS" if rep["pass"] else "FAIL"
            extra = "".join(f" {k}={v}" for k, v in rep["params"].items())
            res = f" residual={rep['residual']:.3g}" if "residual" in rep else ""
            print(f"[{tag}] {rep['check']} n={rep['n']}{extra}{res}")
    return 0 if all(rep["pass"] for rep in reports) else 1


def _cmd_power(args) -> int:
    result = spectral.matrix_power_closed_form(args.n, args.m)
    if args.format == "csv":
        print(result.matrix.to_csv(), end="")
    elif args.format == "json":
        obj = result.matrix.to_json()
        obj["m"] = args.m
        _emit_json(obj)
    else:
        print(result.matrix)
    return 0


def _cmd_identities(args) -> int:
    idents = [Identity(args.only)] if args.only else list(Identity)
    reports = []
    for ident in idents:
        box = dict(DEFAULT_BOXES[ident])
        for name in ident.param_names:
            override = getattr(args, name, None)
            if override is not None:
                box[name] = override
        try:
            reports.append(sweep_identity(ident, box))
        except ValueError as exc:
            return _usage_error(str(exc))

    if args.format == "json":
        _emit_json([rep.to_json() for rep in reports])
    else:
        for rep in reports:
            box = " ".join(f"{k}={lo}..{hi}" for k, (lo, hi) in rep.box.items())
            print(
                f"{rep.identity.value}: {box} -> {rep.cases_checked} cases, "
                f"{len(rep.failures)} failures, {len(rep.skipped)} skipped"
            )
            for failure in rep.failures:
                print(f"  FAIL {failure.params}: lhs={failure.lhs} rhs={failure.rhs}")
    return 0 if all(rep.ok for rep in reports) else 1


_HANDLERS = {
    "show-r": _cmd_show,
    "show-u": _cmd_show,
    "show-w": _cmd_show,
    "eigen": _cmd_eigen,
    "verify": _cmd_verify,
    "power": _cmd_power,
    "identities": _cmd_identities,
}

_RANGE_FLAGS = frozenset({"--N", "--J", "--K", "--I", "--M", "--L"})


def _merge_range_flags(argv: list[str]) -> list[str]:
    """Join '--N -6..12' into '--N=-6..12' so argparse does not read the
    leading minus of the range as a new flag."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RANGE_FLAGS and i + 1 < len(argv) and _RANGE_RE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_range_flags(list(argv)))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return _HANDLERS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
