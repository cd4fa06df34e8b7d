"""Canonical nonzero fractional ideals of the supported Dedekind rings.

Over Z, S^-1 Z and over Z-inside-Q(sqrt(d)) an ideal is a positive rational
``q`` (the ideal qA), with unit primes stripped in the ZS case. Over a
maximal imaginary quadratic order O_d an ideal is stored by a denominator
and the column-style Hermite basis ``{a, b + c*w} / den`` with
``0 <= b < a``, ``c | a``, ``c | b`` and ``gcd(den, a, b, c) = 1``; equal
ideals therefore compare equal field-by-field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import SchemaError, UnsupportedConfig
from .intlinalg import clear_denominators, hnf_rows
from .rings import KIND_OD, RingConfig, check_same_config
from .scalars import QuadElement


@dataclass(frozen=True)
class FractionalIdeal:
    config: RingConfig
    q: Fraction | None = None
    den: int | None = None
    a: int | None = None
    b: int | None = None
    c: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def unit(cls, config: RingConfig) -> "FractionalIdeal":
        return cls.from_rational(config, Fraction(1))

    @classmethod
    def from_rational(cls, config: RingConfig, q) -> "FractionalIdeal":
        q = abs(Fraction(q))
        if q == 0:
            raise ValueError("fractional ideals are nonzero")
        if config.kind == KIND_OD:
            n, d = q.numerator, q.denominator
            g = gcd(n, d)  # always 1 for a Fraction, kept for clarity
            return cls(config, den=d // g, a=n // g, b=0, c=n // g)
        return cls(config, q=config.strip_units(q))

    @classmethod
    def from_elements(cls, config: RingConfig, elements) -> "FractionalIdeal":
        """Ideal whose Z-span is generated by ``elements`` (the caller must
        supply a set whose Z-span is already A-stable, e.g. products of
        ideal bases or ``{g, g*w}`` for a principal ideal)."""
        if config.kind != KIND_OD:
            # A-span of rationals: the gcd ideal.
            q = Fraction(0)
            for e in elements:
                e = config.coerce_scalar(e)
                if isinstance(e, QuadElement):
                    raise ValueError("rational ideals need rational generators")
                q = _fraction_gcd(q, e)
            return cls.from_rational(config, q)
        pairs = [config.to_omega_coords(e) for e in elements]
        return cls._from_omega_pairs(config, pairs)

    @classmethod
    def principal(cls, config: RingConfig, g) -> "FractionalIdeal":
        """The ideal generated by a single nonzero field element."""
        g = config.coerce_scalar(g)
        if not g:
            raise ValueError("fractional ideals are nonzero")
        if config.kind != KIND_OD:
            if isinstance(g, QuadElement):
                raise ValueError(f"{g} does not generate a fractional ideal of Z")
            return cls.from_rational(config, g)
        return cls.from_elements(config, [g, g * config.omega()])

    @classmethod
    def _from_omega_pairs(cls, config, pairs) -> "FractionalIdeal":
        rows, den = clear_denominators([[y, x] for x, y in pairs])
        h = [r for r in hnf_rows(rows) if any(r)]
        if len(h) != 2 or h[0][0] == 0 or h[1][1] == 0:
            raise ValueError("generators do not span a full module")
        c, b = h[0]
        a = h[1][1]
        g = gcd(gcd(a, b), gcd(c, den))
        return cls(config, den=den // g, a=a // g, b=b // g, c=c // g)

    # -- basic structure ----------------------------------------------------

    @property
    def is_rational_kind(self) -> bool:
        return self.q is not None

    def z_basis(self) -> tuple:
        """Z-module basis: ``(q,)`` over a PID, two elements over O_d."""
        if self.is_rational_kind:
            return (self.q,)
        return (
            QuadElement(Fraction(self.a, self.den), Fraction(0), self.config.d),
            self.config.from_omega_coords(
                Fraction(self.b, self.den), Fraction(self.c, self.den)
            ),
        )

    def is_unit_ideal(self) -> bool:
        return self == FractionalIdeal.unit(self.config)

    def is_integral(self) -> bool:
        if self.is_rational_kind:
            return self.config.is_ring_integer(self.q)
        return self.den == 1

    # -- arithmetic ----------------------------------------------------------

    def __mul__(self, other: "FractionalIdeal") -> "FractionalIdeal":
        check_same_config(self.config, other.config)
        if self.is_rational_kind:
            return FractionalIdeal.from_rational(self.config, self.q * other.q)
        prods = [x * y for x in self.z_basis() for y in other.z_basis()]
        return FractionalIdeal.from_elements(self.config, prods)

    def __add__(self, other: "FractionalIdeal") -> "FractionalIdeal":
        """Ideal sum: the smallest ideal containing both operands."""
        check_same_config(self.config, other.config)
        if self.is_rational_kind:
            return FractionalIdeal.from_rational(
                self.config, _fraction_gcd(self.q, other.q)
            )
        return FractionalIdeal.from_elements(
            self.config, list(self.z_basis()) + list(other.z_basis())
        )

    def scale(self, t) -> "FractionalIdeal":
        """Multiply by a nonzero rational."""
        t = abs(Fraction(t))
        if t == 0:
            raise ValueError("scaling an ideal by zero")
        if self.is_rational_kind:
            return FractionalIdeal.from_rational(self.config, self.q * t)
        num, den = t.numerator, t.denominator
        g = gcd(
            gcd(self.a * num, self.b * num), gcd(self.c * num, self.den * den)
        )
        return FractionalIdeal(
            self.config,
            den=self.den * den // g,
            a=self.a * num // g,
            b=self.b * num // g,
            c=self.c * num // g,
        )

    def mul_element(self, e) -> "FractionalIdeal":
        """Multiply by a nonzero field element."""
        e = self.config.coerce_scalar(e)
        if not e:
            raise ValueError("scaling an ideal by zero")
        if isinstance(e, Fraction) or e.is_rational:
            return self.scale(e if isinstance(e, Fraction) else e.a)
        return FractionalIdeal.from_elements(
            self.config, [e * x for x in self.z_basis()]
        )

    def conjugate(self) -> "FractionalIdeal":
        if self.is_rational_kind:
            return self
        return FractionalIdeal.from_elements(
            self.config, [x.conjugate() for x in self.z_basis()]
        )

    def inverse(self) -> "FractionalIdeal":
        if self.is_rational_kind:
            return FractionalIdeal.from_rational(self.config, 1 / self.q)
        return self.conjugate().scale(1 / self.norm())

    def __pow__(self, n: int) -> "FractionalIdeal":
        if n < 0:
            return self.inverse() ** (-n)
        out = FractionalIdeal.unit(self.config)
        for _ in range(n):
            out = out * self
        return out

    def norm(self) -> Fraction:
        """Group index [A : a] for integral ideals, extended multiplicatively."""
        if self.is_rational_kind:
            return self.q
        return Fraction(self.a * self.c, self.den * self.den)

    # -- membership & principality -------------------------------------------

    def contains(self, e) -> bool:
        e = self.config.coerce_scalar(e)
        if self.is_rational_kind:
            if isinstance(e, QuadElement):
                if not e.is_rational:
                    return False
                e = e.a
            return self.config.is_ring_integer(e / self.q)
        u, v = self.config.to_omega_coords(e)
        t = v * self.den / self.c
        if t.denominator != 1:
            return False
        s = (u * self.den - t * self.b) / self.a
        return s.denominator == 1

    def generator_if_principal(self):
        """A generating field element if the ideal is principal, else None.

        Over O_d the positive-definite norm form of the Hermite basis is
        enumerated for elements of norm exactly N(ideal); any solution is a
        generator (unique up to units).
        """
        if self.is_rational_kind:
            return self.q
        if self.config.d >= 0:  # unreachable with the supported configs
            raise UnsupportedConfig("principality over real quadratic orders")
        den, a, b, c = self.den, self.a, self.b, self.c
        d = self.config.d
        if d % 4 == 1:
            # 4*N(x*a + y*(b+c*w)) = (2ax + (2b+c)y)^2 - d (cy)^2
            aa, bb, cc = 4 * a * a, 4 * a * (2 * b + c), (2 * b + c) ** 2 - d * c * c
            target = 4 * (a * c)
        else:
            aa, bb, cc = a * a, 2 * a * b, b * b - d * c * c
            target = a * c
        disc = 4 * aa * cc - bb * bb  # positive: the form is definite
        ymax = isqrt(4 * aa * target // disc)
        for y in range(-ymax, ymax + 1):
            dx = bb * bb * y * y - 4 * aa * (cc * y * y - target)
            if dx < 0:
                continue
            r = isqrt(dx)
            if r * r != dx:
                continue
            for num in ((-bb * y + r), (-bb * y - r)):
                if num % (2 * aa):
                    continue
                x = num // (2 * aa)
                if x == 0 and y == 0:
                    continue
                g = self.config.from_omega_coords(
                    Fraction(x * a, den), Fraction(0)
                ) + self.config.from_omega_coords(
                    Fraction(y * b, den), Fraction(y * c, den)
                )
                return g
        return None

    # -- serialization --------------------------------------------------------

    def to_json(self):
        if self.is_rational_kind:
            return str(self.q)
        return {"den": self.den, "hnf": [[self.a, self.b], [0, self.c]]}

    @classmethod
    def from_json(cls, config: RingConfig, data) -> "FractionalIdeal":
        if config.kind != KIND_OD:
            if not isinstance(data, str):
                raise SchemaError("rational ideal must be a string like '3/2'")
            try:
                q = Fraction(data)
            except (ValueError, ZeroDivisionError) as exc:
                raise SchemaError(f"bad ideal {data!r}: {exc}") from exc
            if q <= 0:
                raise SchemaError("ideal generator must be a positive rational")
            return cls.from_rational(config, q)
        try:
            den = int(data["den"])
            (a, b), (z, c) = data["hnf"]
            a, b, z, c = int(a), int(b), int(z), int(c)
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad ideal object: {exc}") from exc
        if den <= 0 or z != 0 or a <= 0 or c <= 0:
            raise SchemaError("ideal hnf must be [[a,b],[0,c]] with a,c,den > 0")
        w = config.omega()
        e1 = QuadElement(Fraction(a, den), Fraction(0), config.d)
        e2 = config.from_omega_coords(Fraction(b, den), Fraction(c, den))
        try:
            ideal = cls.from_elements(config, [e1, e2])
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
        for e in ideal.z_basis():
            if not ideal.contains(e * w):
                raise SchemaError("module is not stable under the order")
        return ideal

    def __str__(self) -> str:
        if self.is_rational_kind:
            return f"({self.q})"
        return f"[{self.a},{self.b}+{self.c}w]/{self.den}"


def _fraction_gcd(x: Fraction, y: Fraction) -> Fraction:
    if x == 0:
        return abs(y)
    if y == 0:
        return abs(x)
    return Fraction(
        gcd(x.numerator * y.denominator, y.numerator * x.denominator),
        x.denominator * y.denominator,
    )
