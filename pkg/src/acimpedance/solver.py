"""Dirichlet problem on the interior vertices, over either field.

The linear system has one row per non-boundary vertex ``x``::

    sum_{y interior} rho_xy v(y) - rho(x) v(x) = - sum_{b boundary} rho_xb v(b)

With the default boundary ``v(a0) = 0, v(a1) = 1`` the right-hand side is
``-rho_{x a1}``.  :func:`gauss_solve` reduces it to row echelon form with
field-appropriate pivoting and reports rank, a particular solution and a
nullspace basis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import NonPositiveWeightError
from .exact import DEFAULT_ZERO_TOL, RationalFunction
from .fields import SYMBOLIC, ComplexField
from .network import Network, Vertex
from .roots import DEFAULT_ROOT_TOL, DEFAULT_MAX_ITER, poly_roots


class SolutionClass(str, enum.Enum):
    UNIQUE = "Unique"
    MULTIPLE = "Multiple"
    NONE = "None"

    def __str__(self):
        return self.value


@dataclass
class DirichletSystem:
    unknowns: Tuple[Vertex, ...]
    matrix: List[list]
    rhs: list
    field: object
    boundary: Dict[Vertex, object]
    lam: Optional[complex] = None


@dataclass
class GaussResult:
    rank: int
    n: int
    consistent: bool
    particular: Optional[list]
    nullspace: List[list]
    pivot_columns: Tuple[int, ...]

    @property
    def full_rank(self) -> bool:
        return self.rank == self.n


@dataclass
class DirichletOutcome:
    cls: SolutionClass
    lam: complex
    particular: Optional[Dict[Vertex, complex]] = None
    nullspace: List[Dict[Vertex, complex]] = field(default_factory=list)

    def member(self, coefficients: Sequence[complex]) -> Dict[Vertex, complex]:
        """``particular + sum t_i * basis_i``; any such function solves the problem."""
        if self.particular is None:
            raise ValueError("no solution exists")
        if len(coefficients) != len(self.nullspace):
            raise ValueError("need one coefficient per nullspace vector")
        out = dict(self.particular)
        for t, vec in zip(coefficients, self.nullspace):
            for x, val in vec.items():
                out[x] = out[x] + t * val
        return out


@dataclass
class SymbolicSolution:
    values: Dict[Vertex, RationalFunction]

    def __getitem__(self, x):
        return self.values[x]


def default_boundary(net: Network) -> Dict[Vertex, int]:
    return {net.a0: 0, net.a1: 1}


def assemble(net: Network, lam: Optional[complex] = None, boundary: Optional[Mapping] = None,
             field=None, tol: float = DEFAULT_ZERO_TOL) -> DirichletSystem:
    """Build the interior linear system.

    ``lam=None`` gives the exact system over rational functions; otherwise the
    admittances are evaluated at ``lam`` (a pole raises ``PoleError``).
    Unknowns follow the network's vertex order.
    """
    if field is None:
        field = SYMBOLIC if lam is None else ComplexField(tol)
    if boundary is None:
        boundary = default_boundary(net)
    boundary = {b: field.coerce(val) for b, val in boundary.items()}
    if not boundary:
        raise ValueError("boundary set must be non-empty")
    for b in boundary:
        if b not in net.weights:
            raise ValueError(f"boundary vertex {b!r} is not in the network")
    w = net.weights if lam is None else net.evaluate(lam, tol)
    unknowns = tuple(v for v in net.vertices if v not in boundary)
    index = {v: i for i, v in enumerate(unknowns)}
    n = len(unknowns)
    matrix = []
    rhs = []
    for x in unknowns:
        row = [field.zero] * n
        diag = field.zero
        b = field.zero
        for y, r in w[x].items():
            diag = diag - r
            j = index.get(y)
            if j is not None:
                row[j] = row[j] + r
            else:
                val = boundary[y]
                if val:
                    b = b - r * val
        row[index[x]] = row[index[x]] + diag
        matrix.append(row)
        rhs.append(b)
    return DirichletSystem(unknowns, matrix, rhs, field, boundary, None if lam is None else complex(lam))


def _scale(field, rows) -> float:
    if field.exact:
        return 1.0
    return max((abs(x) for row in rows for x in row), default=0.0) or 1.0


def gauss_solve(system: DirichletSystem) -> GaussResult:
    """Reduced row echelon elimination over ``system.field``.

    Complex entries whose magnitude is at most ``tol * max|entry|`` of the
    augmented matrix count as zero.  Free variables are set to 0 in the
    particular solution.
    """
    fld = system.field
    n = len(system.unknowns)
    aug = [list(row) + [b] for row, b in zip(system.matrix, system.rhs)]
    m = len(aug)
    scale = _scale(fld, aug)
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        k = fld.pivot([aug[i][c] for i in range(r, m)])
        if k is None or fld.is_zero(aug[r + k][c], scale):
            continue
        k += r
        aug[r], aug[k] = aug[k], aug[r]
        prow = aug[r]
        p = prow[c]
        inv = fld.one / p
        prow[c] = fld.one
        for j in range(c + 1, n + 1):
            if prow[j]:
                prow[j] = prow[j] * inv
        for i in range(m):
            if i == r:
                continue
            row = aug[i]
            factor = row[c]
            if not factor:
                continue
            row[c] = fld.zero
            for j in range(c + 1, n + 1):
                if prow[j]:
                    row[j] = row[j] - factor * prow[j]
        pivots.append(c)
        r += 1
    rank = r
    consistent = all(fld.is_zero(aug[i][n], scale) for i in range(rank, m))
    nullspace = []
    free = [c for c in range(n) if c not in pivots]
    for f in free:
        vec = [fld.zero] * n
        vec[f] = fld.one
        for i, c in enumerate(pivots):
            vec[c] = -aug[i][f]
        nullspace.append(vec)
    particular = None
    if consistent:
        particular = [fld.zero] * n
        for i, c in enumerate(pivots):
            particular[c] = aug[i][n]
    return GaussResult(rank, n, consistent, particular, nullspace, tuple(pivots))


def determinant(matrix: Sequence[Sequence], fld) -> object:
    """Determinant by elimination with the field's pivot rule (1 for an empty matrix)."""
    a = [list(row) for row in matrix]
    n = len(a)
    det = fld.one
    scale = _scale(fld, a)
    for c in range(n):
        k = fld.pivot([a[i][c] for i in range(c, n)])
        if k is None or fld.is_zero(a[c + k][c], scale):
            return fld.zero
        k += c
        if k != c:
            a[c], a[k] = a[k], a[c]
            det = -det
        p = a[c][c]
        det = det * p
        inv = fld.one / p
        for i in range(c + 1, n):
            factor = a[i][c]
            if not factor:
                continue
            factor = factor * inv
            for j in range(c + 1, n):
                if a[c][j]:
                    a[i][j] = a[i][j] - factor * a[c][j]
    return det


def _full(unknowns, vector, boundary):
    out = dict(boundary)
    out.update(zip(unknowns, vector))
    return out


def _ordered(net, values):
    return {v: values[v] for v in net.vertices}


def solve_symbolic(net: Network, boundary: Optional[Mapping] = None) -> SymbolicSolution:
    """Unique solution over the ordered field of rational functions.

    Requires every (merged) edge weight to be positive; otherwise
    :class:`~acimpedance.errors.NonPositiveWeightError`.
    """
    bad = net.nonpositive_edges()
    if bad:
        x, y, w = bad[0]
        raise NonPositiveWeightError(
            f"weight {w} on edge {x!r}-{y!r} is not positive; the ordered-field solution does not apply")
    system = assemble(net, boundary=boundary)
    result = gauss_solve(system)
    if not result.full_rank:  # pragma: no cover - excluded by the maximum principle
        raise ArithmeticError("singular Dirichlet system over positive weights")
    boundary_vals = {b: system.field.coerce(v) for b, v in system.boundary.items()}
    return SymbolicSolution(_ordered(net, _full(system.unknowns, result.particular, boundary_vals)))


def solve_complex(net: Network, lam: complex, tol: float = DEFAULT_ZERO_TOL,
                  boundary: Optional[Mapping] = None) -> DirichletOutcome:
    """Classify and solve the problem at a fixed complex ``lam``."""
    lam = complex(lam)
    system = assemble(net, lam, boundary=boundary, tol=tol)
    result = gauss_solve(system)
    boundary_vals = dict(system.boundary)
    if not result.consistent:
        return DirichletOutcome(SolutionClass.NONE, lam)
    particular = _ordered(net, _full(system.unknowns, result.particular, boundary_vals))
    if result.full_rank:
        return DirichletOutcome(SolutionClass.UNIQUE, lam, particular)
    zero_bd = {b: 0j for b in system.boundary}
    basis = [_ordered(net, _full(system.unknowns, vec, zero_bd)) for vec in result.nullspace]
    return DirichletOutcome(SolutionClass.MULTIPLE, lam, particular, basis)


def determinant_symbolic(net: Network) -> RationalFunction:
    """Exact determinant of the interior system (``1`` when there are no interior vertices)."""
    system = assemble(net)
    return determinant(system.matrix, SYMBOLIC)


@dataclass(frozen=True)
class SingularFrequency:
    value: complex
    physical: bool
    multiplicity: int = 1


@dataclass
class SingularSet:
    determinant: RationalFunction
    frequencies: List[SingularFrequency]
    identically_zero: bool = False

    @property
    def physical(self) -> List[complex]:
        return [s.value for s in self.frequencies if s.physical]


def is_physical(z: complex, tol: float) -> bool:
    """Purely imaginary with positive imaginary part, to relative tolerance ``tol``."""
    mag = max(1.0, abs(z))
    return abs(z.real) <= tol * mag and z.imag > tol * mag


def singular_frequencies(net: Network, tol: float = 1e-8, root_tol: float = DEFAULT_ROOT_TOL,
                         max_iter: int = DEFAULT_MAX_ITER) -> SingularSet:
    """Zeros of the interior determinant, excluding poles of edge admittances.

    Physical zeros (``lam = i*omega`` with ``omega > 0``) are flagged.  An
    identically zero determinant (possible only for raw weights) is reported
    through ``identically_zero`` with no frequencies.
    """
    det = determinant_symbolic(net)
    if det.is_zero():
        return SingularSet(det, [], identically_zero=True)
    if det.num.degree < 1:
        return SingularSet(det, [])
    counts = {}
    for z in poly_roots(det.num, tol=root_tol, max_iter=max_iter):
        counts[z] = counts.get(z, 0) + 1
    out = [SingularFrequency(z, is_physical(z, tol), k) for z, k in counts.items()
           if not net.admittance_poles_at(z, tol)]
    return SingularSet(det, out)
