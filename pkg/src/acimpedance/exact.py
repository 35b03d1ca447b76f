"""Exact polynomials and rational functions in one variable over the rationals.

Coefficients are stored in ascending powers of the variable (printed as
``lam``).  Integer coefficients are kept as Python ``int``; anything else is a
:class:`fractions.Fraction`.

A :class:`RationalFunction` is always in lowest terms with *integer*
numerator and denominator that share no common content, and a denominator
whose leading coefficient is positive.  Equal functions therefore have
identical representations, and the sign of the numerator's leading
coefficient decides the order: ``f > 0`` when the ratio of the leading
coefficients is positive.  Under this order ``lam`` exceeds every integer.

Polynomial gcds go through a primitive remainder sequence over the integers,
which keeps rational arithmetic out of the hot paths.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Tuple, Union

from .errors import PoleError

Rational = Fraction

#: Degree reported for the zero polynomial.  Negative so that ``deg p < deg q``
#: comparisons keep working; never confused with the degree 0 of a constant.
ZERO_DEGREE = -1

#: Default relative tolerance used to decide that a complex value is zero.
DEFAULT_ZERO_TOL = 1e-10

Scalar = Union[int, Fraction, str]


def to_rational(value) -> Fraction:
    """Convert ``value`` to an exact :class:`Fraction`.

    Strings are parsed exactly (``"0.5"`` and ``"1/2"`` give the same value).
    Floats go through their shortest decimal representation, so ``0.1``
    becomes ``1/10`` rather than the nearest binary fraction.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite coefficient {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not an exact rational literal: {value!r}") from None
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _coeff(value):
    return _normalize(to_rational(value))


def format_rational(q) -> str:
    """``p/q``, or a bare integer when the denominator is 1."""
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _trim(c) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


# -- coefficient-tuple kernels (ints in the rational-function code) ----------

def _zadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _zsub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def _zmul(a, b):
    if not a or not b:
        return ()
    if len(b) == 1:
        s = b[0]
        return tuple(c * s for c in a)
    if len(a) == 1:
        s = a[0]
        return tuple(c * s for c in b)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _content(a) -> int:
    return math.gcd(*a) if a else 0


def _zprimitive(a):
    """Primitive part with positive leading coefficient."""
    g = _content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return a
    return tuple(c // g for c in a)


def _zprem(a, b):
    """Pseudo-remainder: remainder of ``lc(b)^k * a`` on division by ``b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    for k in range(len(r) - 1 - db, -1, -1):
        q = r[k + db]
        if lb != 1:
            for j in range(k + db):
                r[j] *= lb
        if q:
            for j in range(db):
                r[k + j] -= q * b[j]
        r[k + db] = 0
    return _trim(r[:db])


def _zgcd(a, b):
    """Primitive gcd (positive leading coefficient) of nonzero integer polynomials."""
    a = _zprimitive(a)
    b = _zprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    while True:
        if len(b) == 1:
            return (1,)
        r = _zprem(a, b)
        if not r:
            return b
        a, b = b, _zprimitive(r)


def _zexact_div(a, b):
    """``a / b`` for integer polynomials when the quotient is known to be integral."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    n = len(r) - 1 - db
    if n < 0:
        raise ArithmeticError("inexact polynomial division")
    q = [0] * (n + 1)
    for k in range(n, -1, -1):
        top = r[k + db]
        if top:
            c, rem = divmod(top, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            q[k] = c
            for j in range(db + 1):
                r[k + j] -= c * b[j]
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return tuple(q)


def _clear_denominators(*polys):
    """Scale every coefficient tuple by one common factor so all become integers."""
    lcm = 1
    for p in polys:
        for c in p:
            if not isinstance(c, int):
                d = c.denominator
                lcm = lcm * d // math.gcd(lcm, d)
    if lcm == 1:
        return tuple(tuple(int(c) for c in p) for p in polys)
    return tuple(tuple(int(c * lcm) for c in p) for p in polys)


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    >>> p = Polynomial([1, 0, 3])   # 3*lam^2 + 1
    >>> (p * Polynomial([2, 0, 1])) == Polynomial([2, 0, 7, 0, 3])
    True
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _trim([_coeff(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs) -> "Polynomial":
        # caller guarantees int/Fraction entries and no trailing zeros
        p = cls.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Polynomial":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        return _poly_str(self.coeffs)

    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._raw(_norm_all(_zadd(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._raw(_norm_all(_zsub(self.coeffs, other.coeffs)))

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._raw(_norm_all(_zmul(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial._raw((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, s: Scalar) -> "Polynomial":
        s = _coeff(s)
        return Polynomial._raw(_norm_all([c * s for c in self.coeffs]))

    def __divmod__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dc = other.coeffs
        dn = len(dc) - 1
        if len(rem) - 1 < dn:
            return Polynomial._raw(()), self
        inv_lead = Fraction(1, 1) / dc[-1]
        quot = [0] * (len(rem) - dn)
        for k in range(len(rem) - 1 - dn, -1, -1):
            q = _normalize(rem[k + dn] * inv_lead)
            quot[k] = q
            if q:
                for j in range(dn + 1):
                    rem[k + j] = _normalize(rem[k + j] - q * dc[j])
        return Polynomial._raw(_trim(quot)), Polynomial._raw(_trim(rem[:dn]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "Polynomial":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        inv = Fraction(1, 1) / self.coeffs[-1]
        return Polynomial._raw(tuple(_normalize(c * inv) for c in self.coeffs))

    def primitive(self) -> "Polynomial":
        """Integer polynomial with content 1 and positive leading coefficient; same roots."""
        if not self.coeffs:
            return self
        (ints,) = _clear_denominators(self.coeffs)
        return Polynomial._raw(_zprimitive(ints))

    def derivative(self) -> "Polynomial":
        return Polynomial._raw(_trim([c * i for i, c in enumerate(self.coeffs)][1:]))

    def __call__(self, x):
        """Horner evaluation: exact for rational ``x``, floating for complex ``x``."""
        if isinstance(x, (complex, float)):
            acc = 0j
            for c in reversed(self.coeffs):
                acc = acc * x + float(c)
            return acc
        x = to_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _normalize(acc)

    def magnitude_at(self, x: complex) -> float:
        """``sum |c_i| |x|^i``, the scale against which ``|p(x)|`` is judged small."""
        r = abs(x)
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * r + abs(float(c))
        return acc

    def to_complex(self) -> list:
        return [complex(float(c)) for c in self.coeffs]


def _norm_all(c) -> tuple:
    return _trim([_normalize(x) for x in c])


def _as_poly(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Polynomial._raw(_trim([_normalize(x)]))
    return NotImplemented


def _poly_str(coeffs: Sequence, var: str = "lam") -> str:
    if not coeffs:
        return "0"
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{format_rational(mag)}*{power}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor.

    Raises ``ValueError`` when both inputs are zero.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    (za,) = _clear_denominators(a.coeffs)
    (zb,) = _clear_denominators(b.coeffs)
    return Polynomial._raw(_zgcd(za, zb)).monic()


def squarefree_decomposition(p: Polynomial) -> list:
    """Yun's algorithm: pairs ``(factor, multiplicity)`` with monic square-free factors.

    The product of ``factor ** multiplicity`` equals ``p.monic()``.
    """
    if p.degree < 1:
        return []
    p = p.monic()
    dp = p.derivative()
    g = poly_gcd(p, dp)
    b = p.exact_div(g)
    c = dp.exact_div(g)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree >= 1:
        a = poly_gcd(b, d)
        if a.degree >= 1:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def _fix_content(n, d):
    g = math.gcd(_content(n), _content(d))
    if d[-1] < 0:
        g = -g
    if g != 1:
        n = tuple(c // g for c in n)
        d = tuple(c // g for c in d)
    return n, d


def _reduce(n, d):
    """Canonical integer form of ``n/d`` (integer tuples, ``d`` nonzero)."""
    if not n:
        return (), (1,)
    if len(d) > 1 and len(n) > 1:
        g = _zgcd(n, d)
        if len(g) > 1:
            n = _zexact_div(n, g)
            d = _zexact_div(d, g)
    return _fix_content(n, d)


class RationalFunction:
    """Element of the ordered field of real rational functions in ``lam``.

    >>> f = RationalFunction([0, 2, 2], [0, 4])      # (2 lam^2 + 2 lam)/(4 lam)
    >>> f.integer_form()
    ([1, 1], [2])
    """

    __slots__ = ("_n", "_d")

    def __init__(self, num=(), den=(1,)):
        num = num if isinstance(num, Polynomial) else _poly_from(num)
        den = den if isinstance(den, Polynomial) else _poly_from(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        n, d = _clear_denominators(num.coeffs, den.coeffs)
        self._n, self._d = _reduce(n, d)

    @classmethod
    def _make(cls, n, d) -> "RationalFunction":
        f = cls.__new__(cls)
        f._n = n
        f._d = d
        return f

    @classmethod
    def constant(cls, c: Scalar) -> "RationalFunction":
        q = to_rational(c)
        if not q:
            return cls._make((), (1,))
        return cls._make((q.numerator,), (q.denominator,))

    @classmethod
    def lam(cls) -> "RationalFunction":
        """The indeterminate itself."""
        return cls._make((0, 1), (1,))

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls._make((), (1,))

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls._make((1,), (1,))

    @property
    def num(self) -> Polynomial:
        return Polynomial._raw(self._n)

    @property
    def den(self) -> Polynomial:
        return Polynomial._raw(self._d)

    def integer_form(self) -> Tuple[list, list]:
        """``(num, den)`` as integer coefficient lists with no common content.

        The denominator's leading coefficient is positive; zero is ``([0], [1])``.
        This is also the printed form, e.g. ``(lam^2 + 1)/(3*lam + 1)``.
        """
        return list(self._n) or [0], list(self._d)

    def is_zero(self) -> bool:
        return not self._n

    def __bool__(self) -> bool:
        return bool(self._n)

    def sign(self) -> int:
        """+1 if ``self > 0``, -1 if ``self < 0``, 0 for the zero function."""
        if not self._n:
            return 0
        return 1 if self._n[-1] > 0 else -1

    def is_positive(self) -> bool:
        return self.sign() > 0

    @property
    def total_degree(self) -> int:
        return max(len(self._n) - 1, 0) + len(self._d) - 1

    def compare(self, other) -> int:
        """-1, 0 or 1 as ``self`` is below, equal to, or above ``other``."""
        return (self - other).sign()

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __eq__(self, other) -> bool:
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self) -> int:
        return hash((self._n, self._d))

    def __repr__(self) -> str:
        return f"RationalFunction({list(self._n)}, {list(self._d)})"

    def __str__(self) -> str:
        if self._d == (1,):
            return _poly_str(self._n)
        num, den = _poly_str(self._n), _poly_str(self._d)
        # parenthesize sums, not single terms
        if sum(1 for c in self._n if c) > 1:
            num = f"({num})"
        if sum(1 for c in self._d if c) > 1 or len(self._d) > 1 and self._d[-1] != 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __add__(self, other) -> "RationalFunction":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self._n, self._d, other._n, other._d
        if not a:
            return other
        if not c:
            return self
        if b == d:
            n = _zadd(a, c)
            if not n:
                return _ZERO
            return RationalFunction._make(*_reduce(n, b))
        if len(b) == 1 or len(d) == 1:
            n = _zadd(_zmul(a, d), _zmul(c, b))
            if not n:
                return _ZERO
            # a/b and c/d are reduced, so only the non-constant side can cancel
            return RationalFunction._make(*_reduce(n, _zmul(b, d)))
        # a/b + c/d = (a d' + c b') / (b d')  with b = g b', d = g d'
        g = _zgcd(b, d)
        if len(g) > 1:
            b_g = _zexact_div(b, g)
            d_g = _zexact_div(d, g)
        else:
            b_g, d_g = b, d
        n = _zadd(_zmul(a, d_g), _zmul(c, b_g))
        if not n:
            return _ZERO
        den = _zmul(b, d_g)
        if len(g) > 1 and len(n) > 1:
            h = _zgcd(n, g)
            if len(h) > 1:
                n = _zexact_div(n, h)
                den = _zexact_div(den, h)
        return RationalFunction._make(*_fix_content(n, den))

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._make(tuple(-x for x in self._n), self._d)

    def __sub__(self, other) -> "RationalFunction":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self._n, self._d, other._n, other._d
        if not a or not c:
            return _ZERO
        if other is self:
            # a/b in lowest terms, so a^2/b^2 is too
            return RationalFunction._make(_zmul(a, a), _zmul(b, b))
        if len(b) > 1 and len(c) > 1:
            g = _zgcd(c, b)
            if len(g) > 1:
                c, b = _zexact_div(c, g), _zexact_div(b, g)
        if len(d) > 1 and len(a) > 1:
            g = _zgcd(a, d)
            if len(g) > 1:
                a, d = _zexact_div(a, g), _zexact_div(d, g)
        return RationalFunction._make(*_fix_content(_zmul(a, c), _zmul(b, d)))

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self._n:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction._make(*_fix_content(self._d, self._n))

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._n:
            raise ZeroDivisionError("division by the zero rational function")
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        p = Polynomial._raw(self._n) ** n
        q = Polynomial._raw(self._d) ** n
        return RationalFunction._make(*_fix_content(p.coeffs, q.coeffs)) if p else _ZERO

    def __call__(self, x, tol: float = DEFAULT_ZERO_TOL):
        return evaluate(self, x, tol)


_ZERO = RationalFunction._make((), (1,))


def _lcm_sum(terms):
    """Numerator and a common denominator (the lcm) of ``sum(terms)``, unreduced."""
    return _lcm_sum_pairs((t._n, t._d) for t in terms)


def _lcm_sum_pairs(pairs):
    groups = {}
    for n, d in pairs:
        if n:
            prev = groups.get(d)
            groups[d] = n if prev is None else _zadd(prev, n)
    items = [(n, d) for d, n in groups.items() if n]
    if len(items) <= 1:
        return items[0] if items else ((), (1,))
    lcm = (1,)
    for _, d in items:
        if len(d) == 1 and len(lcm) == 1:
            lcm = (lcm[0] * d[0] // math.gcd(lcm[0], d[0]),)
            continue
        g = _zgcd(lcm, d) if len(lcm) > 1 and len(d) > 1 else (1,)
        part = _zexact_div(d, g) if len(g) > 1 else d
        if len(part) == 1:
            # constant cofactor: only the integer content has to grow
            c = part[0]
            k = c // math.gcd(c, _content(lcm))
            if k != 1:
                lcm = tuple(x * k for x in lcm)
        else:
            lcm = _zmul(lcm, part)
    num = ()
    for n, d in items:
        num = _zadd(num, _zmul(n, _zexact_div(lcm, d)))
    return num, lcm


def rsum(terms: Iterable[RationalFunction]) -> RationalFunction:
    """Sum of rational functions with a single final reduction.

    Terms with identical denominators are added numerator-wise; the distinct
    denominators are combined into their lcm, each gcd involving one term
    denominator.
    """
    num, den = _lcm_sum(terms)
    if not num:
        return _ZERO
    return RationalFunction._make(*_reduce(num, den))


def sign_of_quadratic_form(terms: Iterable[Tuple[RationalFunction, RationalFunction, RationalFunction]]) -> int:
    """Sign of a sum whose terms are ``(a - b)^2 * w`` or plain rational functions.

    Each element is either a triple ``(a, b, w)`` or a single
    :class:`RationalFunction` added as is.  Differences and products are
    formed without gcds and the sum is brought over the lcm of the
    denominators but never reduced.  Every denominator involved has a
    positive leading coefficient, so the sign is read off the numerator.
    """
    pairs = []
    for t in terms:
        if isinstance(t, RationalFunction):
            pairs.append((t._n, t._d))
            continue
        a, b, w = t
        if a._d == b._d:
            dn, dd = _zsub(a._n, b._n), a._d
        else:
            dn = _zsub(_zmul(a._n, b._d), _zmul(b._n, a._d))
            dd = _zmul(a._d, b._d)
        if dn:
            pairs.append((_zmul(_zmul(dn, dn), w._n), _zmul(_zmul(dd, dd), w._d)))
    return _pair_sign(_lcm_sum_pairs(pairs)[0])


def _pair_sign(num) -> int:
    if not num:
        return 0
    return 1 if num[-1] > 0 else -1


def _poly_from(x) -> Polynomial:
    if isinstance(x, (int, Fraction, str, float)) and not isinstance(x, bool):
        return Polynomial((x,))
    return Polynomial(x)


def _as_ratfunc(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction(x)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return RationalFunction.constant(x)
    return NotImplemented


def evaluate(f: RationalFunction, x, tol: float = DEFAULT_ZERO_TOL):
    """Value of ``f`` at ``x``.

    Exact for rational ``x``.  For complex ``x`` numerator and denominator are
    evaluated by Horner's rule, and ``|den(x)| <= tol * sum |d_i||x|^i``
    raises :class:`~acimpedance.errors.PoleError`.
    """
    if isinstance(x, (complex, float)):
        x = complex(x)
        den = f.den
        d = den(x)
        if abs(d) <= tol * den.magnitude_at(x):
            raise PoleError(f"pole of {f} at {x}", point=x)
        return f.num(x) / d
    q = to_rational(x)
    d = f.den(q)
    if d == 0:
        raise PoleError(f"pole of {f} at {q}", point=q)
    return _normalize(Fraction(f.num(q)) / d)


def ratfunc(num: Iterable[Scalar], den: Iterable[Scalar] = (1,)) -> RationalFunction:
    """Shorthand constructor from ascending coefficient lists."""
    return RationalFunction(Polynomial(num), Polynomial(den))


LAM = RationalFunction.lam()
