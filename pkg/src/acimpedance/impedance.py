"""Effective impedance and admittance, energy forms, comparison and sweeps.

Two notions of effective impedance are computed here:

* ``effective_complex`` solves at one complex ``lam``.  Multiple solutions
  all give the same admittance; when no solution exists the convention is
  ``Z = 0`` and ``P = inf``.
* ``effective_symbolic`` solves once over rational functions and returns
  ``Z(lam)`` exactly.

They coincide wherever the complex system is nonsingular.  ``compare``
reports what happens at a given ``lam`` without asserting either way.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import List, Mapping, Optional

from .errors import ImpedanceError, NonPositiveWeightError, PoleError
from .exact import DEFAULT_ZERO_TOL, RationalFunction, evaluate, rsum
from .network import Network, Vertex
from .solver import DirichletOutcome, SolutionClass, SymbolicSolution, solve_complex, solve_symbolic

INF = complex(math.inf, 0.0)
DEFAULT_COMPARE_TOL = 1e-8


def is_infinite(z) -> bool:
    return cmath.isinf(z)


@dataclass
class ComplexImpedanceResult:
    lam: complex
    Z: complex
    P: complex
    cls: SolutionClass
    note: Optional[str] = None
    outcome: Optional[DirichletOutcome] = None


@dataclass
class SymbolicImpedanceResult:
    Z: RationalFunction
    P: RationalFunction
    solution: SymbolicSolution


@dataclass
class ComparisonReport:
    lam: complex
    Z1: complex
    Z2: Optional[complex]
    agree: bool
    note: str
    cls: SolutionClass


def admittance_from(net: Network, v: Mapping[Vertex, complex], weights) -> complex:
    """``sum_{x ~ a0} v(x) rho_{x a0}`` using already evaluated ``weights``."""
    total = 0j
    for x, r in weights[net.a0].items():
        total += v[x] * r
    return total


def effective_complex(net: Network, lam: complex, tol: float = DEFAULT_ZERO_TOL) -> ComplexImpedanceResult:
    """Effective impedance at a fixed ``lam``.

    An admittance that vanishes (to ``tol`` relative to its terms) leaves
    ``Z`` undefined; it is then reported as ``INF`` with a note.
    """
    lam = complex(lam)
    outcome = solve_complex(net, lam, tol)
    if outcome.cls is SolutionClass.NONE:
        return ComplexImpedanceResult(lam, 0j, INF, outcome.cls, outcome=outcome)
    weights = net.evaluate(lam, tol)
    v = outcome.particular
    terms = [v[x] * r for x, r in weights[net.a0].items()]
    P = sum(terms, 0j)
    bound = max((abs(t) for t in terms), default=0.0)
    if P == 0 or abs(P) <= tol * bound:
        return ComplexImpedanceResult(lam, INF, P, outcome.cls, note="zero admittance", outcome=outcome)
    return ComplexImpedanceResult(lam, 1 / P, P, outcome.cls, outcome=outcome)


def effective_symbolic(net: Network) -> SymbolicImpedanceResult:
    """Exact effective impedance and admittance as rational functions of ``lam``."""
    sol = solve_symbolic(net)
    P = RationalFunction.zero()
    for x, r in net.weights[net.a0].items():
        P = P + sol[x] * r
    if P.is_zero():  # pragma: no cover - P > 0 for positive weights
        raise ArithmeticError("effective admittance vanishes identically")
    return SymbolicImpedanceResult(P.inverse(), P, sol)


def energy_complex(net: Network, v: Mapping[Vertex, complex], lam: complex,
                   tol: float = DEFAULT_ZERO_TOL) -> complex:
    """``1/2 sum_{x,y} |v(y) - v(x)|^2 rho_xy(lam)`` (the admittance is not conjugated)."""
    weights = net.evaluate(lam, tol)
    total = 0j
    for x in net.vertices:
        for y, r in weights[x].items():
            d = v[y] - v[x]
            total += (d.real * d.real + d.imag * d.imag) * r
    return total / 2


def energy_symbolic(net: Network, v: Mapping[Vertex, RationalFunction]) -> RationalFunction:
    """``1/2 sum_{x,y} (v(y) - v(x))^2 rho_xy``, exactly; each edge counted once."""
    return rsum(energy_terms(net, v))


def energy_terms(net: Network, v: Mapping[Vertex, RationalFunction]) -> List[RationalFunction]:
    """The per-edge summands ``(v(y) - v(x))^2 rho_xy`` of :func:`energy_symbolic`."""
    out = []
    for x, y, r in net.edge_pairs():
        d = v[y] - v[x]
        if d:
            out.append(d * d * r)
    return out


def compare(net: Network, lam: complex, tol: float = DEFAULT_COMPARE_TOL,
            zero_tol: float = DEFAULT_ZERO_TOL,
            symbolic: Optional[SymbolicImpedanceResult] = None) -> ComparisonReport:
    """Evaluate both impedances at ``lam`` and report whether they agree.

    ``agree`` means ``|Z1 - Z2| <= tol * max(1, |Z2|)``.  When the symbolic
    impedance is unavailable (a non-positive weight) ``Z2`` is ``None`` and
    the note is ``"no-symbolic"``.  ``symbolic`` may carry a precomputed
    result to avoid re-solving.
    """
    lam = complex(lam)
    r1 = effective_complex(net, lam, zero_tol)
    if symbolic is None:
        try:
            symbolic = effective_symbolic(net)
        except NonPositiveWeightError:
            return ComparisonReport(lam, r1.Z, None, False, "no-symbolic", r1.cls)
    try:
        z2 = evaluate(symbolic.Z, lam, zero_tol)
    except PoleError:
        return ComparisonReport(lam, r1.Z, None, False, "pole", r1.cls)
    if is_infinite(r1.Z):
        agree = False
    else:
        agree = abs(r1.Z - z2) <= tol * max(1.0, abs(z2))
    note = {
        SolutionClass.UNIQUE: "generic",
        SolutionClass.MULTIPLE: "singular-multiple",
        SolutionClass.NONE: "singular-none",
    }[r1.cls]
    return ComparisonReport(lam, r1.Z, z2, agree, note, r1.cls)


@dataclass
class SweepRow:
    omega: float
    result: Optional[ComplexImpedanceResult]
    status: str = "ok"

    @property
    def cls(self) -> str:
        return str(self.result.cls) if self.result is not None else self.status


def omega_grid(omega_min: float, omega_max: float, points: int, log: bool = False) -> List[float]:
    if not (0 < omega_min <= omega_max) or not math.isfinite(omega_max):
        raise ValueError("need 0 < omega_min <= omega_max < inf")
    if points < 1:
        raise ValueError("points must be >= 1")
    if points == 1:
        return [float(omega_min)]
    if log:
        a, b = math.log(omega_min), math.log(omega_max)
        grid = [math.exp(a + (b - a) * k / (points - 1)) for k in range(points)]
    else:
        grid = [omega_min + (omega_max - omega_min) * k / (points - 1) for k in range(points)]
    grid[0], grid[-1] = float(omega_min), float(omega_max)
    return grid


def sweep(net: Network, omega_min: float, omega_max: float, points: int, log: bool = False,
          tol: float = DEFAULT_ZERO_TOL) -> List[SweepRow]:
    """``effective_complex`` at ``lam = i*omega`` over a uniform (or geometric) grid.

    A failing point becomes a row with an error status; the sweep continues.
    """
    rows = []
    for omega in omega_grid(omega_min, omega_max, points, log):
        try:
            rows.append(SweepRow(omega, effective_complex(net, 1j * omega, tol)))
        except PoleError:
            rows.append(SweepRow(omega, None, "pole"))
        except (ImpedanceError, ArithmeticError) as exc:
            rows.append(SweepRow(omega, None, f"error:{type(exc).__name__}"))
    return rows
