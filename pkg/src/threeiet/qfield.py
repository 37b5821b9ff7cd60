"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

Every real parameter of a three-interval exchange (slopes, lengths,
intercepts, eigenvalues) lives in a single field Q(sqrt(d)).  Values are
stored canonically as ``a + b*sqrt(d)`` with rational ``a, b`` and
squarefree ``d >= 2``; a rational value carries ``d = None`` and mixes
freely with every field.  Comparisons never touch floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DivisionByZero, MixedFields, RationalBase

__all__ = [
    "Quadratic",
    "make_quadratic",
    "sqrt",
    "as_quadratic",
    "sign",
    "compare",
    "conjugate",
    "floor",
    "coords_in_basis",
    "in_Z_eps",
    "is_sturm",
    "minimal_polynomial",
    "is_quadratic_unit",
    "parse_quadratic",
]


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(k, m)`` with ``n == k*k*m`` and ``m`` squarefree."""
    k, m = 1, 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        if n % p == 0:
            n //= p
            m *= p
        p += 1 if p == 2 else 2
    return k, m * n


@dataclass(frozen=True, eq=True)
class Quadratic:
    """The number ``a + b*sqrt(d)``; construct through :func:`make_quadratic`."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b == 0:
            if self.d is not None:
                raise ValueError("rational values carry no d; use make_quadratic")
        elif self.d is None or self.d < 2 or _squarefree_split(self.d)[0] != 1:
            raise ValueError(f"d must be squarefree and >= 2, got {self.d}")

    # -- predicates -------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def trace(self) -> Fraction:
        return 2 * self.a

    def norm(self) -> Fraction:
        if self.d is None:
            return self.a * self.a
        return self.a * self.a - self.b * self.b * self.d

    def conjugate(self) -> Quadratic:
        if self.d is None:
            return self
        return _raw(self.a, -self.b, self.d)

    # -- arithmetic -------------------------------------------------------
    def _field(self, other: Quadratic) -> int | None:
        if self.d is None:
            return other.d
        if other.d is None or other.d == self.d:
            return self.d
        raise MixedFields(f"cannot combine Q(sqrt({self.d})) with Q(sqrt({other.d}))")

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _build(self.a + other.a, self.b + other.b, self._field(other))

    __radd__ = __add__

    def __neg__(self):
        return _raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _build(self.a - other.a, self.b - other.b, self._field(other))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        d = self._field(other)
        rad = self.b * other.b * d if d is not None else Fraction(0)
        return _build(
            self.a * other.a + rad,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.a == 0 and other.b == 0:
            raise DivisionByZero("division by zero in quadratic field")
        self._field(other)
        n = other.norm()
        c = other.conjugate()
        return self * _build(c.a / n, c.b / n, c.d)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ONE / (self ** (-k))
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- ordering ---------------------------------------------------------
    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: whichever of a^2, b^2 d dominates wins
        lhs = self.a * self.a
        rhs = self.b * self.b * self.d
        return sa if lhs > rhs else sb

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self):
        if self.d is None:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __lt__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else self._cmp(other) < 0

    def __le__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else self._cmp(other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else self._cmp(other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else self._cmp(other) >= 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- display ----------------------------------------------------------
    def __float__(self) -> float:
        return float(self.approx(20))

    def approx(self, digits: int = 15) -> Decimal:
        """Decimal approximation for display only."""
        with localcontext() as ctx:
            ctx.prec = digits + 10
            val = Decimal(self.a.numerator) / Decimal(self.a.denominator)
            if self.d is not None:
                val += Decimal(self.b.numerator) / Decimal(self.b.denominator) * Decimal(self.d).sqrt()
            ctx.prec = digits
            return +val

    def __str__(self) -> str:
        if self.d is None:
            return _fmt_rat(self.a)
        op = "+" if self.b > 0 else "-"
        return f"{_fmt_rat(self.a)}{op}{_fmt_rat(abs(self.b))}*sqrt({self.d})"

    def __repr__(self) -> str:
        return f"Quadratic({str(self)!r})"


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _raw(a: Fraction, b: Fraction, d: int | None) -> Quadratic:
    # skips validation; callers guarantee canonical form
    q = object.__new__(Quadratic)
    object.__setattr__(q, "a", a)
    object.__setattr__(q, "b", b)
    object.__setattr__(q, "d", d)
    return q


def _build(a: Fraction, b: Fraction, d: int | None) -> Quadratic:
    if b == 0:
        return _raw(a, b, None)
    return _raw(a, b, d)


def _coerce(x):
    if isinstance(x, Quadratic):
        return x
    if isinstance(x, (int, _RationalABC)):
        return _raw(Fraction(x), Fraction(0), None)
    return NotImplemented


ZERO = Quadratic(Fraction(0))
ONE = Quadratic(Fraction(1))


def as_quadratic(x) -> Quadratic:
    q = _coerce(x)
    if q is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a quadratic number")
    return q


def make_quadratic(a, b=0, D: int = 1) -> Quadratic:
    """Canonical ``a + b*sqrt(D)``: square factors of D move into b."""
    a, b = Fraction(a), Fraction(b)
    if D < 1:
        raise ValueError("D must be a positive integer")
    k, m = _squarefree_split(D)
    if b == 0:
        return Quadratic(a)
    if m == 1:
        return Quadratic(a + b * k)
    return Quadratic(a, b * k, m)


def sqrt(D: int) -> Quadratic:
    return make_quadratic(0, 1, D)


def sign(x) -> int:
    return as_quadratic(x).sign()


def compare(x, y) -> int:
    return (as_quadratic(x) - as_quadratic(y)).sign()


def conjugate(x) -> Quadratic:
    return as_quadratic(x).conjugate()


def floor(x) -> int:
    x = as_quadratic(x)
    if x.d is None:
        return math.floor(x.a)
    # integer estimate of b*sqrt(d), then fix up with exact comparisons
    b = x.b
    root = math.isqrt(b.numerator * b.numerator * x.d)
    est = math.floor(x.a + Fraction(root if b > 0 else -root, b.denominator))
    while x < est:
        est -= 1
    while x >= est + 1:
        est += 1
    return est


def coords_in_basis(x, eps) -> tuple[Fraction, Fraction]:
    """Rationals ``(s, t)`` with ``x == s + t*eps``."""
    x, eps = as_quadratic(x), as_quadratic(eps)
    if eps.is_rational:
        raise RationalBase("basis element must be irrational")
    if x.d is not None and x.d != eps.d:
        raise MixedFields(f"{x} does not lie in Q(sqrt({eps.d}))")
    t = x.b / eps.b
    return x.a - t * eps.a, t


def in_Z_eps(x, eps) -> bool:
    s, t = coords_in_basis(x, eps)
    return s.denominator == 1 and t.denominator == 1


def is_sturm(eps) -> bool:
    """Quadratic irrational in (0, 1) whose conjugate lies outside (0, 1)."""
    eps = as_quadratic(eps)
    if eps.is_rational or not (0 < eps < 1):
        return False
    c = eps.conjugate()
    return not (0 < c < 1)


def minimal_polynomial(x) -> tuple[Fraction, ...]:
    """Monic minimal polynomial, coefficients from the leading term down."""
    x = as_quadratic(x)
    if x.is_rational:
        return (Fraction(1), -x.a)
    return (Fraction(1), -x.trace(), x.norm())


def is_quadratic_unit(lam) -> bool:
    lam = as_quadratic(lam)
    if lam.is_rational:
        return False
    _, tr, nm = minimal_polynomial(lam)
    return tr.denominator == 1 and nm in (1, -1)


_RAT = r"-?\d+(?:/\d+)?"
_QUAD_RE = re.compile(rf"^\s*({_RAT})\s*(?:([+-])\s*(\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(\d+)\s*\))?\s*$")


def parse_quadratic(text: str) -> Quadratic:
    """Parse literals such as ``"3/2-1/2*sqrt(5)"`` or ``"-1/3"``."""
    m = _QUAD_RE.match(text)
    if not m:
        raise ValueError(f"malformed quadratic literal: {text!r}")
    a, op, b, d = m.groups()
    try:
        a = Fraction(a)
        b = Fraction(b) if op else Fraction(0)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    if op is None:
        return Quadratic(a)
    if int(d) < 1:
        raise ValueError(f"sqrt argument must be positive in {text!r}")
    return make_quadratic(a, b if op == "+" else -b, int(d))
