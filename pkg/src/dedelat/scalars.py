"""Exact scalar arithmetic: rationals and elements of quadratic fields.

Rationals are plain ``fractions.Fraction`` values. Elements of Q(sqrt(d)) are
``QuadElement`` instances storing two Fractions; all arithmetic is exact and
every operation returns a new value. Mixing two different discriminants is a
hard error.

String format (no spaces): ``p/q`` for rationals, ``a/b+c/e*sqrt(d)`` for
quadratic elements, with integral values printed without the ``/1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import MixedDiscriminant

Rational = Fraction

_SQUAREFREE_OK = {}


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n in _SQUAREFREE_OK:
        return _SQUAREFREE_OK[n]
    if n == 0:
        return False
    m, ok, p = n, True, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                ok = False
                break
        p += 1 if p == 2 else 2
    _SQUAREFREE_OK[n] = ok
    return ok


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational value, got {type(x).__name__}")


@dataclass(frozen=True)
class QuadElement:
    """``a + b*sqrt(d)`` with exact rational components.

    ``d`` must be squarefree and not 0 or 1. Operands of binary operations
    must share ``d``; ints and Fractions coerce to the element's field.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))
        if self.d in (0, 1) or not is_squarefree(self.d):
            raise ValueError(f"invalid field discriminant parameter d={self.d}")

    def _coerce(self, other) -> "QuadElement":
        if isinstance(other, QuadElement):
            if other.d != self.d:
                raise MixedDiscriminant(f"sqrt({self.d}) vs sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElement(_as_fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElement(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElement(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElement(o.a - self.a, o.b - self.b, self.d)

    def __neg__(self):
        return QuadElement(-self.a, -self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElement(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero quadratic element")
        return QuadElement(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElement):
            if other.d != self.d:
                return not self and not other
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def conjugate(self) -> "QuadElement":
        return QuadElement(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm ``a**2 - d*b**2``; multiplicative, zero only at zero."""
        return self.a * self.a - self.d * self.b * self.b

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def primitive_parts(self) -> tuple[Fraction, int, int]:
        """Split a nonzero element as ``r*(p + q*sqrt(d))`` with ``r`` a
        positive rational, ``gcd(p, q) = 1`` and ``(p, q)`` lexicographically
        positive. Used to canonicalize index-module scalars."""
        if not self:
            raise ZeroDivisionError("primitive_parts of zero")
        den = self.a.denominator * self.b.denominator // gcd(
            self.a.denominator, self.b.denominator
        )
        na = self.a.numerator * (den // self.a.denominator)
        nb = self.b.numerator * (den // self.b.denominator)
        g = gcd(na, nb)
        na, nb = na // g, nb // g
        if na < 0 or (na == 0 and nb < 0):
            na, nb = -na, -nb
        return Fraction(g, den), na, nb

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"QuadElement({self.a!r}, {self.b!r}, d={self.d})"


def quad_zero(d: int) -> QuadElement:
    return QuadElement(Fraction(0), Fraction(0), d)


def quad_one(d: int) -> QuadElement:
    return QuadElement(Fraction(1), Fraction(0), d)


def quad_sqrt(d: int) -> QuadElement:
    """The element sqrt(d) itself."""
    return QuadElement(Fraction(0), Fraction(1), d)


def format_scalar(x) -> str:
    """Canonical reduced string form of a Fraction or QuadElement."""
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if not isinstance(x, QuadElement):
        raise TypeError(f"cannot format {type(x).__name__} as a scalar")
    if x.b == 0:
        return str(x.a)
    root = f"{abs(x.b)}*sqrt({x.d})"
    if x.a == 0:
        return root if x.b > 0 else "-" + root
    sign = "+" if x.b > 0 else "-"
    return f"{x.a}{sign}{root}"


_QUAD_RE = re.compile(
    r"^(?P<a>[+-]?\d+(?:/\d+)?(?=[+-]))?"
    r"(?P<sign>[+-])?(?:(?P<c>\d+(?:/\d+)?)\*)?sqrt\((?P<d>-?\d+)\)$"
)


def parse_scalar(text: str, d: int | None = None):
    """Parse the canonical string form back into a Fraction or QuadElement.

    If ``d`` is given, plain rationals are promoted into Q(sqrt(d)) and a
    mismatching discriminant in the text is rejected.
    """
    s = text.strip().replace(" ", "")
    if "sqrt" not in s:
        q = Fraction(s)
        return QuadElement(q, Fraction(0), d) if d is not None else q
    m = _QUAD_RE.match(s)
    if not m:
        raise ValueError(f"malformed scalar {text!r}")
    a = Fraction(m.group("a") or 0)
    b = Fraction(m.group("c") or 1)
    if m.group("sign") == "-":
        b = -b
    dd = int(m.group("d"))
    if d is not None and dd != d:
        raise MixedDiscriminant(f"scalar {text!r} lives in sqrt({dd}), not sqrt({d})")
    return QuadElement(a, b, dd)
