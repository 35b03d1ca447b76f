"""Two-terminal networks: graph, edge parameters, admittances and the Laplacian."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Hashable, Iterable, Mapping, Optional, Tuple, Union

from .errors import NetworkValidationError
from .exact import DEFAULT_ZERO_TOL, RationalFunction, Polynomial, evaluate, to_rational

STRICT = "strict"
RAW = "raw"

Vertex = Hashable


@dataclass(frozen=True)
class RLC:
    """Series resistor/inductor/capacitor on one edge.

    ``D`` is the elastance ``1/C``; ``D = 0`` stands for an absent capacitor
    (infinite capacitance).  At least one of ``R``, ``L``, ``D`` must be nonzero.
    """

    R: Fraction = Fraction(0)
    L: Fraction = Fraction(0)
    D: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("R", "L", "D"):
            value = to_rational(getattr(self, name))
            if value < 0:
                raise NetworkValidationError(f"{name} must be non-negative, got {value}")
            object.__setattr__(self, name, value)
        if not (self.R or self.L or self.D):
            raise NetworkValidationError("edge with R = L = D = 0 (R^2 + L^2 + D^2 must be nonzero)")

    @classmethod
    def from_rlc(cls, R=0, L=0, C=None) -> "RLC":
        """Build from a capacitance; ``C=None`` or ``math.inf`` means no capacitor."""
        if C is None or (isinstance(C, float) and math.isinf(C)) or C == "inf":
            D = Fraction(0)
        else:
            C = to_rational(C)
            if C <= 0:
                raise NetworkValidationError(f"capacitance must be positive, got {C}")
            D = 1 / C
        return cls(R, L, D)

    @property
    def C(self):
        return math.inf if self.D == 0 else 1 / self.D

    def admittance(self) -> RationalFunction:
        return RationalFunction(Polynomial((0, 1)), Polynomial((self.D, self.R, self.L)))


@dataclass(frozen=True)
class RawWeight:
    """An arbitrary nonzero rational-function weight (not necessarily of RLC form)."""

    weight: RationalFunction

    def __post_init__(self):
        if not isinstance(self.weight, RationalFunction):
            raise TypeError("RawWeight needs a RationalFunction")
        if self.weight.is_zero():
            raise NetworkValidationError("raw edge weight must not be the zero function")

    def admittance(self) -> RationalFunction:
        return self.weight


EdgeParams = Union[RLC, RawWeight]


def admittance(params: EdgeParams) -> RationalFunction:
    """Edge admittance ``lam / (L lam^2 + R lam + D)`` (or the stored raw weight)."""
    return params.admittance()


@dataclass(frozen=True, eq=False)
class Network:
    """A connected finite graph with two terminals and rational-function admittances.

    Use :func:`build_network` to construct one; it validates the graph and
    merges parallel edges by summing their admittances.  ``edges`` keeps the
    edges exactly as given (for serialization); ``weights`` is the merged,
    symmetric adjacency ``{x: {y: rho_xy}}``.
    """

    vertices: Tuple[Vertex, ...]
    edges: Tuple[Tuple[Vertex, Vertex, EdgeParams], ...]
    a0: Vertex
    a1: Vertex
    mode: str = STRICT
    name: Optional[str] = None
    weights: Mapping[Vertex, Mapping[Vertex, RationalFunction]] = field(default=None, repr=False)

    @property
    def interior(self) -> Tuple[Vertex, ...]:
        return tuple(v for v in self.vertices if v != self.a0 and v != self.a1)

    def neighbors(self, x: Vertex):
        return self.weights[x].keys()

    def weight(self, x: Vertex, y: Vertex) -> RationalFunction:
        """``rho_xy``, zero when ``x`` and ``y`` are not adjacent."""
        w = self.weights[x].get(y)
        return w if w is not None else RationalFunction.zero()

    def edge_pairs(self):
        """Each merged edge once, as ``(x, y, rho_xy)`` in vertex order."""
        index = {v: i for i, v in enumerate(self.vertices)}
        for x in self.vertices:
            for y, w in self.weights[x].items():
                if index[x] < index[y]:
                    yield x, y, w

    def nonpositive_edges(self):
        """Merged edges whose weight is not positive in the ordered field."""
        return [(x, y, w) for x, y, w in self.edge_pairs() if not w.is_positive()]

    @property
    def all_positive(self) -> bool:
        return not self.nonpositive_edges()

    @property
    def is_rlc(self) -> bool:
        return all(isinstance(p, RLC) for _, _, p in self.edges)

    @property
    def is_rc(self) -> bool:
        """No inductance anywhere (every edge impedance has non-positive imaginary part)."""
        return self.is_rlc and all(p.L == 0 for _, _, p in self.edges)

    @property
    def is_rl(self) -> bool:
        """No capacitor anywhere (every edge impedance has non-negative imaginary part)."""
        return self.is_rlc and all(p.D == 0 for _, _, p in self.edges)

    def evaluate(self, lam: complex, tol: float = DEFAULT_ZERO_TOL):
        """Merged adjacency with every admittance evaluated at ``lam``.

        Raises :class:`~acimpedance.errors.PoleError` when some admittance has
        a pole at ``lam``.
        """
        lam = complex(lam)
        cache = {}
        out = {}
        for x in self.vertices:
            row = {}
            for y, w in self.weights[x].items():
                key = (y, x)
                if key in cache:
                    row[y] = cache[key]
                else:
                    row[y] = cache[(x, y)] = evaluate(w, lam, tol)
            out[x] = row
        return out

    def admittance_poles_at(self, lam: complex, tol: float = DEFAULT_ZERO_TOL) -> bool:
        lam = complex(lam)
        for _, _, w in self.edge_pairs():
            if abs(w.den(lam)) <= tol * w.den.magnitude_at(lam):
                return True
        return False


def build_network(vertices: Optional[Iterable[Vertex]], edges: Iterable, a0: Vertex, a1: Vertex,
                  mode: str = STRICT, name: Optional[str] = None) -> Network:
    """Validate and assemble a :class:`Network`.

    ``edges`` holds ``(x, y, params)`` triples with ``params`` an :class:`RLC`
    or :class:`RawWeight`.  ``vertices`` may be ``None``; the order of first
    appearance in ``edges`` is then used.
    """
    if mode not in (STRICT, RAW):
        raise NetworkValidationError(f"unknown mode {mode!r}")
    edge_list = []
    for e in edges:
        x, y, params = e
        if x == y:
            raise NetworkValidationError(f"self-loop at {x!r}")
        if not isinstance(params, (RLC, RawWeight)):
            raise TypeError(f"edge parameters must be RLC or RawWeight, got {type(params).__name__}")
        if mode == STRICT and isinstance(params, RawWeight):
            raise NetworkValidationError(f"raw weight on edge {x!r}-{y!r} is not allowed in strict mode")
        edge_list.append((x, y, params))
    if not edge_list:
        raise NetworkValidationError("network has no edges")

    if vertices is None:
        order = []
        seen = set()
        for x, y, _ in edge_list:
            for v in (x, y):
                if v not in seen:
                    seen.add(v)
                    order.append(v)
        for v in (a0, a1):
            if v not in seen:
                seen.add(v)
                order.append(v)
    else:
        order = list(vertices)
        if len(set(order)) != len(order):
            raise NetworkValidationError("duplicate vertex")
        seen = set(order)
        for x, y, _ in edge_list:
            for v in (x, y):
                if v not in seen:
                    raise NetworkValidationError(f"edge endpoint {v!r} is not a declared vertex")

    if a0 == a1:
        raise NetworkValidationError("terminals a0 and a1 must differ")
    for t in (a0, a1):
        if t not in seen:
            raise NetworkValidationError(f"terminal {t!r} is not a vertex")

    weights: Dict[Vertex, Dict[Vertex, RationalFunction]] = {v: {} for v in order}
    for x, y, params in edge_list:
        w = params.admittance()
        if y in weights[x]:
            w = weights[x][y] + w
        weights[x][y] = w
        weights[y][x] = w
    for x in order:
        for y in [y for y, w in weights[x].items() if w.is_zero()]:
            del weights[x][y]

    _check_connected(order, weights)
    return Network(tuple(order), tuple(edge_list), a0, a1, mode, name, weights)


def _check_connected(order, weights):
    start = order[0]
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in weights[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != len(order):
        missing = [v for v in order if v not in seen]
        raise NetworkValidationError(f"graph is disconnected; unreachable: {missing!r}")


def vertex_weight(net: Network, x: Vertex) -> RationalFunction:
    """``rho(x)``: sum of the admittances of the edges at ``x``."""
    total = RationalFunction.zero()
    for w in net.weights[x].values():
        total = total + w
    return total


def laplacian_apply(net: Network, f: Mapping[Vertex, object], lam: Optional[complex] = None,
                    tol: float = DEFAULT_ZERO_TOL) -> Dict[Vertex, object]:
    """``(Delta f)(x) = sum_y (f(y) - f(x)) rho_xy`` for every vertex.

    With ``lam`` the admittances are evaluated there and the result is complex;
    without it the computation stays in the rational-function field.
    """
    w = net.evaluate(lam, tol) if lam is not None else net.weights
    return {x: _laplacian_at(w, f, x) for x in net.vertices}


def _laplacian_at(w, f, x):
    fx = f[x]
    terms = [(f[y] - fx) * r for y, r in w[x].items()]
    if not terms:
        return fx - fx
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    return total


def gradient(f: Mapping[Vertex, object], x: Vertex, y: Vertex):
    """Difference operator ``f(y) - f(x)``."""
    return f[y] - f[x]
