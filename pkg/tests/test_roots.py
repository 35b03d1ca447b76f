import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from acimpedance.errors import ConvergenceError
from acimpedance.exact import Polynomial
from acimpedance.roots import poly_roots, roots_numeric


def _from_roots(roots):
    p = Polynomial([1])
    for r in roots:
        p = p * Polynomial([-r, 1])
    return p


def _match(found, expected, tol):
    remaining = list(found)
    for e in expected:
        best = min(remaining, key=lambda z: abs(z - e))
        assert abs(best - e) <= tol, (found, expected)
        remaining.remove(best)


def test_quadratic_with_imaginary_roots():
    rs = poly_roots(Polynomial([2, 0, 1]))             # lam^2 + 2
    _match(rs, [1j * math.sqrt(2), -1j * math.sqrt(2)], 1e-12)


def test_bridge_determinant_factor():
    # 3 lam^4 + 7 lam^2 + 2 = (3 lam^2 + 1)(lam^2 + 2)
    rs = poly_roots(Polynomial([2, 0, 7, 0, 3]))
    s2, s3 = math.sqrt(2), 1 / math.sqrt(3)
    _match(rs, [1j * s2, -1j * s2, 1j * s3, -1j * s3], 1e-12)


def test_repeated_roots_are_exact_multiplicities():
    p = Polynomial([1, 0, 1]) ** 3 * Polynomial([1, 1])
    rs = poly_roots(p)
    assert len(rs) == 7
    assert sum(1 for z in rs if abs(z - 1j) < 1e-12) == 3
    assert sum(1 for z in rs if abs(z + 1) < 1e-12) == 1


def test_zero_roots_stripped():
    assert roots_numeric([0, 0, 1]) == [0j, 0j]
    assert roots_numeric([0, 2, 1]) == [0j, -2 + 0j]


def test_constant_rejected():
    with pytest.raises(ValueError):
        poly_roots(Polynomial([3]))


def test_non_convergence_reports_best_iterate():
    with pytest.raises(ConvergenceError) as info:
        roots_numeric([1, 0, 0, 0, 0, 0, 1], tol=1e-300, max_iter=2)
    assert len(info.value.best) == 6
    assert info.value.residual > 0


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=4))
def test_round_trip_conjugate_closed(pairs):
    # real polynomial built from a conjugate-closed root set
    roots = []
    for a, b in pairs:
        roots.append(complex(a, b))
        if b:
            roots.append(complex(a, -b))
    p = Polynomial([1])
    for z in roots:
        if z.imag:
            if z.imag > 0:
                p = p * Polynomial([z.real ** 2 + z.imag ** 2, -2 * z.real, 1])
        else:
            p = p * Polynomial([-int(z.real), 1])
    found = poly_roots(p)
    assert len(found) == len(roots)
    _match(found, roots, 1e-7)
    # the computed set is itself closed under conjugation
    _match([z.conjugate() for z in found], found, 1e-7)


@given(st.lists(st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
                min_size=1, max_size=5))
def test_backward_error_small(roots):
    coeffs = [1 + 0j]
    for r in roots:
        coeffs = [(coeffs[i - 1] if i else 0) - r * (coeffs[i] if i < len(coeffs) else 0)
                  for i in range(len(coeffs) + 1)]
    found = roots_numeric(coeffs)
    scale = lambda z: sum(abs(c) * abs(z) ** i for i, c in enumerate(coeffs))
    for z in found:
        p = sum(c * z ** i for i, c in enumerate(coeffs))
        assert abs(p) <= 1e-9 * scale(z) + 1e-300
