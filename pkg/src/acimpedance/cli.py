"""Command-line front end: ``acimpedance {solve,sweep,singular,compare,check} FILE ...``.

Results go to stdout (or ``--out``), diagnostics to stderr.  Exit status:

    0  success (a disagreeing ``compare`` is still a success)
    1  usage or netlist syntax error, unreadable file
    2  network validation error
    3  at least one ``check`` failed
    4  numerical failure: pole of an admittance, root finder did not converge
"""

from __future__ import annotations

import argparse
import io
import math
import sys
from typing import List, Optional, Sequence

from .errors import ConvergenceError, NetlistSyntaxError, NetworkValidationError, PoleError
from .exact import DEFAULT_ZERO_TOL, RationalFunction, format_rational
from .impedance import (ComparisonReport, ComplexImpedanceResult, SweepRow, SymbolicImpedanceResult,
                        compare, effective_complex, effective_symbolic, sweep)
from .netlist import load_netlist
from .solver import SingularSet, singular_frequencies
from .verify import FAIL, CheckReport, run_all

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_CHECK_FAILED = 3
EXIT_NUMERIC = 4

FORMATS = ("text", "structured")

#: Real or imaginary parts this far below the modulus are rounding noise and print as 0.
_NOISE = 1e-14


def _split(z: complex):
    mag = abs(z)
    re = 0.0 if abs(z.real) <= _NOISE * mag else z.real
    im = 0.0 if abs(z.imag) <= _NOISE * mag else z.imag
    # adding 0.0 turns -0.0 into 0.0
    return f"{re + 0.0:.12g}", f"{im + 0.0:.12g}"


def format_complex(z) -> str:
    """``a+bi`` with 12 significant digits; ``inf`` for an infinite value."""
    z = complex(z)
    if math.isinf(z.real) or math.isinf(z.imag):
        return "inf"
    re, im = _split(z)
    return f"{re}{'' if im.startswith('-') else '+'}{im}i"


def format_coeffs(f: RationalFunction) -> str:
    num, den = f.integer_form()
    return f"num={','.join(map(format_rational, num))} den={','.join(map(format_rational, den))}"


def _compact(f: RationalFunction) -> str:
    return str(f).replace(" ", "")


def serialize_result(result, fmt: str = "structured") -> str:
    """Deterministic text for any result object produced by the CLI.

    ``structured`` emits one record of ``key=value`` tokens per line; ``text``
    is laid out for reading.  Sweep rows (a list of :class:`SweepRow`) are
    always CSV, and check reports always one record per check.
    """
    if fmt not in FORMATS and fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(result, list) and all(isinstance(r, SweepRow) for r in result):
        return sweep_csv(result)
    if isinstance(result, list) and all(isinstance(r, CheckReport) for r in result):
        return "".join(r.line() + "\n" for r in result)
    if isinstance(result, SymbolicImpedanceResult):
        if fmt == "text":
            return f"Z(lam) = {result.Z}\nP(lam) = {result.P}\n"
        return (f"Z={_compact(result.Z)} {format_coeffs(result.Z)}\n"
                f"P={_compact(result.P)} {format_coeffs(result.P)}\n")
    if isinstance(result, ComplexImpedanceResult):
        if fmt == "text":
            out = (f"lambda = {format_complex(result.lam)}\nclass  = {result.cls}\n"
                   f"Z      = {format_complex(result.Z)}\nP      = {format_complex(result.P)}\n")
            if result.note:
                out += f"note   = {result.note}\n"
            return out
        line = (f"lambda={format_complex(result.lam)} Z={format_complex(result.Z)} "
                f"class={result.cls} P={format_complex(result.P)}")
        return line + (f" note={result.note.replace(' ', '-')}\n" if result.note else "\n")
    if isinstance(result, ComparisonReport):
        z2 = "none" if result.Z2 is None else format_complex(result.Z2)
        agree = "yes" if result.agree else "no"
        if fmt == "text":
            return (f"lambda = {format_complex(result.lam)}\nclass  = {result.cls}\n"
                    f"Z1     = {format_complex(result.Z1)}\nZ2     = {z2}\n"
                    f"agree  = {agree}\nnote   = {result.note}\n")
        return (f"lambda={format_complex(result.lam)} class={result.cls} Z1={format_complex(result.Z1)} "
                f"Z2={z2} agree={agree} note={result.note}\n")
    if isinstance(result, SingularSet):
        return _singular_text(result)
    raise TypeError(f"cannot serialize {type(result).__name__}")


def sweep_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    buf.write("omega,re_Z,im_Z,class\n")
    for row in rows:
        if row.result is None:
            re = im = "nan"
        else:
            z = row.result.Z
            re, im = ("inf", "0") if math.isinf(z.real) else _split(z)
        buf.write(f"{row.omega:.12g},{re},{im},{row.cls}\n")
    return buf.getvalue()


def _singular_text(s: SingularSet) -> str:
    if s.identically_zero:
        return "determinant=0 identically-zero\n"
    lines = [f"determinant {format_coeffs(s.determinant)}"]
    for f in s.frequencies:
        lines.append(f"lambda={format_complex(f.value)} multiplicity={f.multiplicity} "
                     f"physical={'yes' if f.physical else 'no'}")
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _lambda_arg(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")
    try:
        re, im = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}") from None
    return complex(re, im)


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _add_point(p, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--omega", type=float, metavar="W", help="evaluate at lambda = i*W")
    g.add_argument("--lambda", dest="lam", type=_lambda_arg, metavar="RE,IM",
                   help="evaluate at a complex lambda (write --lambda=-1,0 for a negative real part)")
    return g


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="acimpedance", description="Effective impedance of RLC networks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="effective impedance, exact or at one lambda")
    p.add_argument("file")
    g = _add_point(p)
    g.add_argument("--symbolic", action="store_true", help="exact Z(lam) and P(lam)")
    p.add_argument("--tol", type=float, default=DEFAULT_ZERO_TOL)
    p.add_argument("--format", choices=FORMATS, default="structured")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("sweep", help="CSV table of Z(i*omega)")
    p.add_argument("file")
    p.add_argument("--omega-min", type=float, required=True)
    p.add_argument("--omega-max", type=float, required=True)
    p.add_argument("--points", type=_positive_int, required=True)
    p.add_argument("--log", action="store_true", help="geometric instead of uniform spacing")
    p.add_argument("--tol", type=float, default=DEFAULT_ZERO_TOL)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("singular", help="zeros of the Dirichlet determinant")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("compare", help="complex versus symbolic impedance at one lambda")
    p.add_argument("file")
    _add_point(p)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--format", choices=FORMATS, default="structured")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("check", help="run the verification suite on the network")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=_positive_int, default=100)
    p.add_argument("--out", metavar="PATH")
    return parser


def _point(args) -> complex:
    return 1j * args.omega if args.omega is not None else args.lam


def _run(args) -> int:
    net = load_netlist(args.file)
    status = EXIT_OK
    if args.command == "solve":
        if args.symbolic:
            text = serialize_result(effective_symbolic(net), args.format)
        else:
            text = serialize_result(effective_complex(net, _point(args), args.tol), args.format)
    elif args.command == "sweep":
        if not (0 < args.omega_min <= args.omega_max):
            raise _UsageError("need 0 < --omega-min <= --omega-max")
        text = sweep_csv(sweep(net, args.omega_min, args.omega_max, args.points, args.log, args.tol))
    elif args.command == "singular":
        text = serialize_result(singular_frequencies(net, tol=args.tol))
    elif args.command == "compare":
        text = serialize_result(compare(net, _point(args), tol=args.tol), args.format)
    else:
        reports = run_all(net, seed=args.seed, trials=args.trials)
        text = serialize_result(reports)
        if any(r.status == FAIL for r in reports):
            status = EXIT_CHECK_FAILED
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


class _UsageError(Exception):
    pass


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (_UsageError, NetlistSyntaxError, OSError) as exc:
        return _fail(EXIT_USAGE, exc)
    except NetworkValidationError as exc:
        return _fail(EXIT_VALIDATION, exc)
    except (PoleError, ConvergenceError) as exc:
        return _fail(EXIT_NUMERIC, exc)


def _fail(code: int, exc: Exception) -> int:
    print(f"acimpedance: error: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
