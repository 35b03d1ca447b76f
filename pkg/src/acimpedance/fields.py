"""The two scalar fields a network can be solved over.

Both expose the same small surface so that one elimination routine serves
either: ``zero``/``one``, ``coerce`` for constants, ``is_zero`` (exact or
scale-relative), and ``pivot`` to pick a pivot among candidate entries.
Arithmetic itself is Python's operator protocol on the values.
"""

from __future__ import annotations

from .exact import DEFAULT_ZERO_TOL, RationalFunction, to_rational


class ComplexField:
    """Complex numbers at a fixed frequency, with a scale-relative zero test.

    ``is_zero(x, scale)`` holds when ``|x| <= tol * scale``; the caller passes
    the largest magnitude in the matrix so rank decisions do not depend on
    units.
    """

    exact = False
    zero = 0j
    one = 1 + 0j

    def __init__(self, tol: float = DEFAULT_ZERO_TOL):
        if not tol >= 0:
            raise ValueError("tolerance must be non-negative")
        self.tol = tol

    def coerce(self, x) -> complex:
        return complex(x)

    def is_zero(self, x, scale: float = 1.0) -> bool:
        return abs(x) <= self.tol * scale

    def magnitude(self, x) -> float:
        return abs(x)

    def pivot(self, candidates):
        """Index (into ``candidates``) of the entry of largest magnitude."""
        best, best_mag = None, -1.0
        for i, x in enumerate(candidates):
            m = abs(x)
            if m > best_mag:
                best, best_mag = i, m
        return best

    def __repr__(self):
        return f"ComplexField(tol={self.tol!r})"


class RationalFunctionField:
    """Exact rational functions; zero means identically zero."""

    exact = True
    zero = RationalFunction.zero()
    one = RationalFunction.one()

    def coerce(self, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        return RationalFunction.constant(to_rational(x))

    def is_zero(self, x, scale=None) -> bool:
        return x.is_zero()

    def magnitude(self, x) -> float:
        return 0.0 if x.is_zero() else 1.0

    def pivot(self, candidates):
        """Index of the nonzero entry of least total degree, ``None`` if all vanish."""
        best, best_deg = None, None
        for i, x in enumerate(candidates):
            if x.is_zero():
                continue
            d = x.total_degree
            if best_deg is None or d < best_deg:
                best, best_deg = i, d
        return best

    def __repr__(self):
        return "RationalFunctionField()"


SYMBOLIC = RationalFunctionField()
