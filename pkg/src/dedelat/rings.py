"""Ring configurations: which Dedekind ring A sits inside which field K.

Four configurations are supported:

* ``Z``   — A = Z,                 K = Q
* ``ZS``  — A = S^-1 Z,            K = Q          (primes of S inverted)
* ``Od``  — A = O_d (maximal order), K = Q(sqrt(d)), d < 0
* ``ZQd`` — A = Z,                 K = Q(sqrt(d)) (the case K larger than
  the fraction field of A)

For ``Od`` the canonical generator of the order is ``w = sqrt(d)`` when
d % 4 != 1 and ``w = (1 + sqrt(d)) / 2`` when d % 4 == 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConfigMismatch, SchemaError
from .scalars import QuadElement, is_squarefree, parse_scalar

KIND_Z = "Z"
KIND_ZS = "ZS"
KIND_OD = "Od"
KIND_ZQD = "ZQd"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1 if p == 2 else 2
    return True


@dataclass(frozen=True)
class RingConfig:
    kind: str
    d: int | None = None
    primes: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind == KIND_Z:
            pass
        elif self.kind == KIND_ZS:
            if not self.primes:
                raise ValueError("ZS needs a nonempty set of primes")
            for p in self.primes:
                if not _is_prime(p):
                    raise ValueError(f"{p} is not prime")
        elif self.kind == KIND_OD:
            if self.d is None or self.d >= 0 or not is_squarefree(self.d):
                raise ValueError("Od needs a squarefree d < 0")
        elif self.kind == KIND_ZQD:
            if self.d in (None, 0, 1) or not is_squarefree(self.d):
                raise ValueError("ZQd needs a squarefree d != 0, 1")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")
        object.__setattr__(self, "primes", frozenset(self.primes))

    # -- structure ---------------------------------------------------------

    @property
    def field_is_quadratic(self) -> bool:
        return self.kind in (KIND_OD, KIND_ZQD)

    @property
    def ring_is_quadratic(self) -> bool:
        return self.kind == KIND_OD

    @property
    def field_equals_fraction_field(self) -> bool:
        """False exactly for ZQd, where K strictly contains Frac(A)."""
        return self.kind != KIND_ZQD

    def omega_coeffs(self) -> tuple[Fraction, Fraction]:
        """The order generator w as ``x + y*sqrt(d)``."""
        if self.d % 4 == 1:
            return Fraction(1, 2), Fraction(1, 2)
        return Fraction(0), Fraction(1)

    def omega(self) -> QuadElement:
        x, y = self.omega_coeffs()
        return QuadElement(x, y, self.d)

    def to_omega_coords(self, e) -> tuple[Fraction, Fraction]:
        """Coordinates of a field element in the basis (1, w)."""
        q = self.coerce_scalar(e)
        if isinstance(q, Fraction):
            return q, Fraction(0)
        x, y = self.omega_coeffs()
        t = q.b / y
        return q.a - t * x, t

    def from_omega_coords(self, u, v) -> QuadElement:
        x, y = self.omega_coeffs()
        return QuadElement(Fraction(u) + Fraction(v) * x, Fraction(v) * y, self.d)

    # -- scalars -----------------------------------------------------------

    def coerce_scalar(self, x):
        """Normalize a scalar into this configuration's field type."""
        if self.field_is_quadratic:
            if isinstance(x, QuadElement):
                if x.d != self.d and (x.a or x.b):
                    raise ConfigMismatch(
                        f"element of sqrt({x.d}) in a sqrt({self.d}) context"
                    )
                return QuadElement(x.a, x.b, self.d)
            return QuadElement(Fraction(x), Fraction(0), self.d)
        if isinstance(x, QuadElement):
            if x.b:
                raise ConfigMismatch("quadratic element in a rational context")
            return x.a
        return Fraction(x)

    def zero(self):
        return self.coerce_scalar(0)

    def one(self):
        return self.coerce_scalar(1)

    def parse_scalar(self, text: str):
        return self.coerce_scalar(
            parse_scalar(text, self.d if self.field_is_quadratic else None)
        )

    def strip_units(self, q: Fraction) -> Fraction:
        """Remove unit prime factors (primes of S) from a positive rational;
        identity outside the ZS configuration."""
        if self.kind != KIND_ZS:
            return q
        num, den = q.numerator, q.denominator
        for p in self.primes:
            while num % p == 0:
                num //= p
            while den % p == 0:
                den //= p
        return Fraction(num, den)

    def is_ring_integer(self, q: Fraction) -> bool:
        """Whether a rational lies in A (only meaningful for A inside Q)."""
        if self.kind == KIND_ZS:
            return self.strip_units(Fraction(1, q.denominator)).denominator == 1
        return q.denominator == 1

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        if self.kind == KIND_Z:
            return {"kind": "Z"}
        if self.kind == KIND_ZS:
            return {"kind": "ZS", "primes": sorted(self.primes)}
        return {"kind": self.kind, "d": self.d}

    @classmethod
    def from_json(cls, data) -> "RingConfig":
        if not isinstance(data, dict) or "kind" not in data:
            raise SchemaError("ring must be an object with a 'kind'")
        kind = data["kind"]
        try:
            if kind == KIND_Z:
                return cls(KIND_Z)
            if kind == KIND_ZS:
                return cls(KIND_ZS, primes=frozenset(data["primes"]))
            if kind in (KIND_OD, KIND_ZQD):
                return cls(kind, d=int(data["d"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad ring object: {exc}") from exc
        raise SchemaError(f"unknown ring kind {kind!r}")

    def __str__(self) -> str:
        if self.kind == KIND_Z:
            return "Z in Q"
        if self.kind == KIND_ZS:
            return f"Z_S in Q, S={sorted(self.primes)}"
        if self.kind == KIND_OD:
            return f"O_{self.d} in Q(sqrt({self.d}))"
        return f"Z in Q(sqrt({self.d}))"


def check_same_config(a: RingConfig, b: RingConfig) -> None:
    if a != b:
        raise ConfigMismatch(f"{a} vs {b}")


Z_IN_Q = RingConfig(KIND_Z)
