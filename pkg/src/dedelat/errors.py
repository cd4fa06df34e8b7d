"""Exception hierarchy shared across the package.

Division by zero is reported with the stdlib ``ZeroDivisionError`` (that is
what ``fractions.Fraction`` raises already); everything else derives from
``DedelatError`` so the CLI can map domain failures to exit code 3.
"""


class DedelatError(Exception):
    """Base class for all domain errors raised by this package."""


class MixedDiscriminant(DedelatError):
    """Arithmetic between quadratic elements of different fields."""


class ConfigMismatch(DedelatError):
    """Operands belong to different ring configurations."""


class ZeroLattice(DedelatError):
    """The zero module was passed where a nonzero lattice is required."""


class NotALattice(DedelatError):
    """A module over Z inside a quadratic field whose Z-rank exceeds the
    dimension of its K-span; the index calculus is undefined for it."""


class UnsupportedConfig(DedelatError):
    """Operation not available for this ring configuration."""


class UnsupportedExtension(DedelatError):
    """Scalar extension requested between unrelated configurations."""


class NotInvertible(DedelatError):
    """Inverse of a Zero or Full index module."""


class HypothesisViolated(DedelatError):
    """Index-module product requested outside the proven hypotheses."""


class NotASublattice(DedelatError):
    """Second lattice is not contained in the first."""


class RankMismatch(DedelatError):
    """Lattices do not have equal rank."""


class PreconditionViolated(DedelatError):
    """Generic precondition failure (spans not full, wrong field, ...)."""


class UnknownSuite(DedelatError):
    """Verification suite name not recognized."""


class SchemaError(DedelatError):
    """Malformed JSON input document."""
