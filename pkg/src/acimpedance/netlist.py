"""Line-oriented netlist format.

::

    # comment
    net <name>                      (optional)
    mode strict|raw                 (optional, default strict)
    terminals <a0> <a1>
    edge <x> <y> [R=<lit>] [L=<lit>] [C=<lit>|inf]
    wedge <x> <y> num=<c0,c1,...> den=<c0,c1,...>    (raw mode only)

Literals are integers, ``p/q`` rationals or decimals, all read exactly.
Coefficient lists are in ascending powers of ``lam``.  Vertices are declared
implicitly, in order of first appearance.
"""

from __future__ import annotations

import io
from importlib import resources
from pathlib import Path
from typing import Union

from .errors import NetlistSyntaxError, NetworkValidationError
from .exact import Polynomial, RationalFunction, format_rational, to_rational
from .network import RAW, STRICT, RLC, Network, RawWeight, build_network

EXAMPLE_NAMES = ("nontrivial", "solutions", "complex_omega", "non_pos_w", "minus_lambda", "resistors")


def _literal(text: str, lineno: int):
    try:
        return to_rational(text)
    except ValueError:
        raise NetlistSyntaxError(f"bad numeric literal {text!r}", lineno) from None


def _coeff_list(text: str, lineno: int) -> Polynomial:
    if not text:
        raise NetlistSyntaxError("empty coefficient list", lineno)
    return Polynomial([_literal(t, lineno) for t in text.split(",")])


def _keyvals(tokens, allowed, lineno):
    out = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or not value:
            raise NetlistSyntaxError(f"expected key=value, got {tok!r}", lineno)
        if key not in allowed:
            raise NetlistSyntaxError(f"unknown parameter {key!r}", lineno)
        if key in out:
            raise NetlistSyntaxError(f"parameter {key!r} given twice", lineno)
        out[key] = value
    return out


def parse_netlist(text: str) -> Network:
    """Parse netlist text into a validated :class:`Network`.

    Syntax problems raise :class:`NetlistSyntaxError` (with the line number);
    graph or parameter problems raise :class:`NetworkValidationError`.
    """
    name = None
    mode = None
    terminals = None
    edges = []
    wedge_lines = []
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "net":
            if len(rest) != 1:
                raise NetlistSyntaxError("usage: net <name>", lineno)
            if name is not None:
                raise NetlistSyntaxError("duplicate net line", lineno)
            name = rest[0]
        elif head == "mode":
            if len(rest) != 1 or rest[0] not in (STRICT, RAW):
                raise NetlistSyntaxError("usage: mode strict|raw", lineno)
            if mode is not None:
                raise NetlistSyntaxError("duplicate mode line", lineno)
            mode = rest[0]
        elif head == "terminals":
            if len(rest) != 2:
                raise NetlistSyntaxError("usage: terminals <a0> <a1>", lineno)
            if terminals is not None:
                raise NetlistSyntaxError("exactly one terminals line is allowed", lineno)
            terminals = tuple(rest)
        elif head == "edge":
            if len(rest) < 2:
                raise NetlistSyntaxError("usage: edge <x> <y> [R=..] [L=..] [C=..]", lineno)
            x, y, *params = rest
            kv = _keyvals(params, ("R", "L", "C"), lineno)
            R = _literal(kv["R"], lineno) if "R" in kv else 0
            L = _literal(kv["L"], lineno) if "L" in kv else 0
            C = kv.get("C")
            if C is not None and C != "inf":
                C = _literal(C, lineno)
            try:
                edges.append((x, y, RLC.from_rlc(R, L, C)))
            except NetworkValidationError as exc:
                raise NetworkValidationError(f"line {lineno}: {exc}") from None
        elif head == "wedge":
            if len(rest) != 4:
                raise NetlistSyntaxError("usage: wedge <x> <y> num=<c0,...> den=<c0,...>", lineno)
            x, y, *params = rest
            kv = _keyvals(params, ("num", "den"), lineno)
            if set(kv) != {"num", "den"}:
                raise NetlistSyntaxError("wedge needs both num= and den=", lineno)
            num = _coeff_list(kv["num"], lineno)
            den = _coeff_list(kv["den"], lineno)
            if den.is_zero():
                raise NetworkValidationError(f"line {lineno}: zero denominator")
            try:
                edges.append((x, y, RawWeight(RationalFunction(num, den))))
            except NetworkValidationError as exc:
                raise NetworkValidationError(f"line {lineno}: {exc}") from None
            wedge_lines.append(lineno)
        else:
            raise NetlistSyntaxError(f"unknown statement {head!r}", lineno)
    if terminals is None:
        raise NetlistSyntaxError("missing terminals line")
    if not edges:
        raise NetlistSyntaxError("netlist has no edges")
    mode = mode or STRICT
    if mode == STRICT and wedge_lines:
        raise NetworkValidationError(f"line {wedge_lines[0]}: wedge is only allowed in raw mode")
    return build_network(None, edges, terminals[0], terminals[1], mode=mode, name=name)


def load_netlist(path: Union[str, Path]) -> Network:
    return parse_netlist(Path(path).read_text())


def example_text(name: str) -> str:
    """Text of one of the netlists bundled with the package."""
    return resources.files(__package__).joinpath("netlists", f"{name}.net").read_text()


def example_path(name: str) -> Path:
    return Path(str(resources.files(__package__).joinpath("netlists", f"{name}.net")))


def load_example(name: str) -> Network:
    return parse_netlist(example_text(name))


def _coeffs(p: Polynomial) -> str:
    return ",".join(format_rational(c) for c in p.coeffs) or "0"


def render_netlist(net: Network) -> str:
    """Netlist text for ``net``; parsing it back yields the same network."""
    out = io.StringIO()
    if net.name:
        out.write(f"net {net.name}\n")
    out.write(f"mode {net.mode}\n")
    out.write(f"terminals {net.a0} {net.a1}\n")
    for x, y, p in net.edges:
        if isinstance(p, RLC):
            parts = [f"edge {x} {y}"]
            if p.R:
                parts.append(f"R={format_rational(p.R)}")
            if p.L:
                parts.append(f"L={format_rational(p.L)}")
            if p.D:
                parts.append(f"C={format_rational(1 / p.D)}")
            out.write(" ".join(parts) + "\n")
        else:
            w = p.weight
            out.write(f"wedge {x} {y} num={_coeffs(w.num)} den={_coeffs(w.den)}\n")
    return out.getvalue()
