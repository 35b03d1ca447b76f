"""Complex roots of polynomials by Aberth-Ehrlich simultaneous iteration."""

from __future__ import annotations

import cmath
import math
from typing import Sequence

from .errors import ConvergenceError
from .exact import Polynomial, squarefree_decomposition

DEFAULT_ROOT_TOL = 1e-12
DEFAULT_MAX_ITER = 500

# Fixed irrational offset (1/golden ratio turns) so no starting point lands
# on a symmetry axis of a real polynomial.
_ANGLE_OFFSET = 2 * math.pi * (math.sqrt(5) - 1) / 2


def _horner2(coeffs: Sequence[complex], z: complex):
    p = 0j
    dp = 0j
    for c in reversed(coeffs):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _scale_at(abs_coeffs: Sequence[float], z: complex) -> float:
    r = abs(z)
    acc = 0.0
    for c in reversed(abs_coeffs):
        acc = acc * r + c
    return acc


def roots_numeric(coeffs: Sequence[complex], tol: float = DEFAULT_ROOT_TOL,
                  max_iter: int = DEFAULT_MAX_ITER) -> list:
    """All roots of the polynomial with ascending complex ``coeffs``.

    Converged when every root satisfies ``|p(z)| <= tol * sum |c_i| |z|^i``.
    Roots of multiplicity > 1 converge only linearly; :func:`poly_roots`
    removes them exactly before calling this.
    """
    c = [complex(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    n = len(c) - 1
    if n < 1:
        raise ValueError("polynomial of degree < 1 has no roots to find")
    zeros = 0
    while c[zeros] == 0:
        zeros += 1
    c = c[zeros:]
    n = len(c) - 1
    found = [0j] * zeros
    if n == 0:
        return found
    if n == 1:
        return found + [-c[0] / c[1]]

    lead = c[-1]
    c = [x / lead for x in c]
    abs_c = [abs(x) for x in c]
    radius = 1.0 + max(abs_c[:-1])
    z = [radius * cmath.exp(1j * (2 * math.pi * k / n + _ANGLE_OFFSET)) for k in range(n)]
    done = [False] * n
    residual = [math.inf] * n

    for _ in range(max_iter):
        for k in range(n):
            if done[k]:
                continue
            p, dp = _horner2(c, z[k])
            scale = _scale_at(abs_c, z[k])
            residual[k] = abs(p) / scale if scale else abs(p)
            if residual[k] <= tol:
                done[k] = True
                continue
            if dp == 0:
                # stationary point: nudge along the fixed offset direction
                z[k] += 1e-3 * radius * cmath.exp(1j * _ANGLE_OFFSET)
                continue
            ratio = p / dp
            repulsion = sum(1 / (z[k] - z[j]) for j in range(n) if j != k and z[k] != z[j])
            denom = 1 - ratio * repulsion
            z[k] -= ratio / denom if denom != 0 else ratio
        if all(done):
            return found + [_polish(c, r) for r in z]
    worst = max(residual)
    raise ConvergenceError(
        f"root iteration did not reach tol={tol} in {max_iter} steps (residual {worst:.3e})",
        best=found + z,
        residual=worst,
    )


def _polish(c, z, steps=3):
    # a few Newton steps; accepted only while the residual keeps shrinking
    p, dp = _horner2(c, z)
    best = abs(p)
    for _ in range(steps):
        if dp == 0 or best == 0:
            break
        cand = z - p / dp
        p2, dp2 = _horner2(c, cand)
        if abs(p2) >= best:
            break
        z, p, dp, best = cand, p2, dp2, abs(p2)
    return z


def poly_roots(p: Polynomial, tol: float = DEFAULT_ROOT_TOL,
               max_iter: int = DEFAULT_MAX_ITER) -> list:
    """Complex roots of an exact polynomial, repeated according to multiplicity.

    The polynomial is split exactly into square-free factors first, so every
    numerical solve sees simple roots only.
    """
    if p.degree < 1:
        raise ValueError("poly_roots needs a polynomial of degree >= 1")
    out = []
    for factor, mult in squarefree_decomposition(p):
        rs = roots_numeric(factor.to_complex(), tol=tol, max_iter=max_iter)
        for r in rs:
            out.extend([r] * mult)
    return sort_roots(out)


def sort_roots(roots):
    return sorted(roots, key=lambda z: (round(z.real, 9), round(z.imag, 9)))
