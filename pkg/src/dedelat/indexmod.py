"""The index-module of a pair of lattices and the calculus around it.

``index_module(R, S)`` is the module of determinants of K-endomorphisms of
the joint span mapping R into S. It is Zero when rank(R) > rank(S), the
whole field K when the spans differ (and rank(R) <= rank(S)), and otherwise
a scaled fractional ideal computed from the Steinitz forms of both sides.

The companion routes — relative invariant via top exterior minors, Fitting
ideal via the minor closure of a presentation, and the group index via the
integer-matrix oracle — are deliberately independent code paths so they can
cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    ConfigMismatch,
    HypothesisViolated,
    NotASublattice,
    NotInvertible,
    PreconditionViolated,
    RankMismatch,
    ZeroLattice,
)
from .ideals import FractionalIdeal
from .lattices import PseudoLattice
from .linalg import det, solve_in_span
from .rings import KIND_Z, RingConfig, check_same_config
from .scalars import QuadElement, format_scalar

VARIANT_ZERO = "zero"
VARIANT_FULL = "full"
VARIANT_SPAN = "span"


@dataclass(frozen=True)
class IndexModule:
    config: RingConfig
    variant: str
    ideal: FractionalIdeal | None = None
    scalar: object = None

    @classmethod
    def zero(cls, config: RingConfig) -> "IndexModule":
        return cls(config, VARIANT_ZERO)

    @classmethod
    def full(cls, config: RingConfig) -> "IndexModule":
        return cls(config, VARIANT_FULL)

    @classmethod
    def span(cls, config: RingConfig, ideal: FractionalIdeal, scalar) -> "IndexModule":
        """Canonical Span value: the scalar is folded into the ideal when it
        lies in the fraction field of A; otherwise (K strictly larger) it is
        normalized to the primitive integer-coefficient representative."""
        check_same_config(config, ideal.config)
        s = config.coerce_scalar(scalar)
        if not s:
            raise ValueError("span scalar must be nonzero")
        if config.field_equals_fraction_field:
            return cls(config, VARIANT_SPAN, ideal.mul_element(s), Fraction(1))
        if isinstance(s, QuadElement) and not s.is_rational:
            r, p, q = s.primitive_parts()
            prim = QuadElement(Fraction(p), Fraction(q), config.d)
            return cls(config, VARIANT_SPAN, ideal.scale(r), prim)
        rat = s.a if isinstance(s, QuadElement) else s
        return cls(config, VARIANT_SPAN, ideal.scale(abs(rat)), Fraction(1))

    @property
    def is_span(self) -> bool:
        return self.variant == VARIANT_SPAN

    def to_json(self):
        if self.variant != VARIANT_SPAN:
            return {"variant": self.variant}
        return {
            "variant": VARIANT_SPAN,
            "ideal": self.ideal.to_json(),
            "scalar": format_scalar(self.scalar),
        }

    @classmethod
    def from_json(cls, config: RingConfig, data) -> "IndexModule":
        from .errors import SchemaError

        if not isinstance(data, dict) or "variant" not in data:
            raise SchemaError("index module must be an object with a 'variant'")
        variant = data["variant"]
        if variant == VARIANT_ZERO:
            return cls.zero(config)
        if variant == VARIANT_FULL:
            return cls.full(config)
        if variant == VARIANT_SPAN:
            ideal = FractionalIdeal.from_json(config, data["ideal"])
            scalar = config.parse_scalar(data["scalar"])
            return cls.span(config, ideal, scalar)
        raise SchemaError(f"unknown variant {variant!r}")

    def __str__(self) -> str:
        if self.variant != VARIANT_SPAN:
            return self.variant
        return f"span({self.ideal}, {format_scalar(self.scalar)})"


def index_module(source: PseudoLattice, target: PseudoLattice) -> IndexModule:
    """The index module of the pair (source, target): determinants of the
    endomorphisms of the joint span carrying source into target."""
    check_same_config(source.config, target.config)
    if source.ambient_dim != target.ambient_dim:
        raise ConfigMismatch(
            f"ambient dimensions differ: {source.ambient_dim} vs {target.ambient_dim}"
        )
    if source.is_zero:
        raise ZeroLattice("the first lattice must be nonzero")
    config = source.config
    if target.is_zero:
        return IndexModule.zero(config)
    if source.rank > target.rank:
        return IndexModule.zero(config)
    if not source.same_span(target):
        return IndexModule.full(config)
    st_src = source.steinitz
    st_tgt = target.steinitz
    coords = [solve_in_span(st_src.basis, b) for b in st_tgt.basis]
    change = det(coords)
    return IndexModule.span(
        config, st_tgt.ideal * st_src.ideal.inverse(), change
    )


def index_invert(x: IndexModule) -> IndexModule:
    """Inverse module {y in K : x*y inside A}; defined for Span values."""
    if not x.is_span:
        raise NotInvertible(f"cannot invert a {x.variant} index module")
    scalar = x.scalar
    inv_scalar = (
        scalar.inverse() if isinstance(scalar, QuadElement) else 1 / scalar
    )
    return IndexModule.span(x.config, x.ideal.inverse(), inv_scalar)


def index_product(x: IndexModule, y: IndexModule) -> IndexModule:
    """Module product, with the absorbing rules valid under the chain
    hypotheses (a shared span on one side). Zero*Full style combinations are
    rejected: no chain of lattices can produce them."""
    check_same_config(x.config, y.config)
    if x.is_span and y.is_span:
        return IndexModule.span(x.config, x.ideal * y.ideal, x.scalar * y.scalar)
    if x.is_span:
        return y
    if y.is_span:
        return x
    raise HypothesisViolated(
        f"{x.variant} * {y.variant} cannot arise from a lattice chain"
    )


def cyclicity_witness(x: IndexModule):
    """A field element g with x = A*g when the Span ideal is principal;
    None when the module is not cyclic."""
    if not x.is_span:
        raise PreconditionViolated("cyclicity is defined for Span values")
    g = x.ideal.generator_if_principal()
    if g is None:
        return None
    return x.config.coerce_scalar(g) * x.scalar


def relative_invariant(
    numerator: PseudoLattice, denominator: PseudoLattice
) -> IndexModule:
    """Quotient of the ideals cut out by the top exterior powers of the two
    lattices; equals index_module(denominator, numerator). Requires K to be
    the fraction field of A and both spans to fill the ambient space."""
    check_same_config(numerator.config, denominator.config)
    config = numerator.config
    if not config.field_equals_fraction_field:
        raise PreconditionViolated("relative invariant needs K = Frac(A)")
    if numerator.ambient_dim != denominator.ambient_dim:
        raise PreconditionViolated("ambient dimensions differ")
    dim = numerator.ambient_dim
    for lat in (numerator, denominator):
        if lat.is_zero or lat.rank != dim:
            raise PreconditionViolated("lattices must span the ambient space")
    top = _top_minor_ideal(numerator, dim)
    bottom = _top_minor_ideal(denominator, dim)
    return IndexModule.span(config, top * bottom.inverse(), 1)


def _top_minor_ideal(lattice: PseudoLattice, dim: int) -> FractionalIdeal:
    """Ideal generated by the images of all dim-fold generator wedges."""
    gens = lattice.nonzero_gens()
    total = None
    for subset in combinations(range(len(gens)), dim):
        minor = det([list(gens[i][1]) for i in subset])
        if not minor:
            continue
        part = FractionalIdeal.principal(lattice.config, minor)
        for i in subset:
            part = part * gens[i][0]
        total = part if total is None else total + part
    if total is None:  # pragma: no cover - excluded by the span precondition
        raise PreconditionViolated("no nonzero top minor")
    return total


def fitting_ideal_quotient(
    lattice: PseudoLattice, sublattice: PseudoLattice
) -> FractionalIdeal:
    """Fitting ideal of lattice/sublattice via the minor closure of the
    presentation in the free cover of the Steinitz basis.

    All maximal minors of the sublattice generators written in the Steinitz
    basis generate the Fitting ideal of (free cover)/sublattice; dividing by
    the Steinitz ideal accounts for the cover/lattice gap. This route never
    consults index_module, so the two can be compared as independent
    computations.
    """
    check_same_config(lattice.config, sublattice.config)
    config = lattice.config
    if not config.field_equals_fraction_field:
        raise PreconditionViolated("Fitting route needs K = Frac(A)")
    if lattice.is_zero:
        raise ZeroLattice("the ambient lattice must be nonzero")
    for v in sublattice.scaled_elements():
        if not lattice.contains(v):
            raise NotASublattice("second lattice is not contained in the first")
    if sublattice.is_zero or sublattice.rank != lattice.rank:
        raise RankMismatch("lattices must have equal rank")
    st = lattice.steinitz
    rank = st.rank
    gens = sublattice.nonzero_gens()
    coords = [solve_in_span(st.basis, list(v)) for _, v in gens]
    total = None
    for subset in combinations(range(len(gens)), rank):
        minor = det([coords[i] for i in subset])
        if not minor:
            continue
        part = FractionalIdeal.principal(config, minor)
        for i in subset:
            part = part * gens[i][0]
        total = part if total is None else total + part
    assert total is not None  # rank equality guarantees a nonzero minor
    return total * st.ideal.inverse()


def group_index(lattice: PseudoLattice, sublattice: PseudoLattice) -> int:
    """Cardinality of lattice/sublattice (unit primes ignored over S^-1 Z),
    computed through the restriction-of-scalars oracle."""
    from .zoracle import oracle_group_index

    check_same_config(lattice.config, sublattice.config)
    if lattice.is_zero:
        raise ZeroLattice("the ambient lattice must be nonzero")
    for v in sublattice.scaled_elements():
        if not lattice.contains(v):
            raise NotASublattice("second lattice is not contained in the first")
    if sublattice.is_zero or sublattice.rank != lattice.rank:
        raise RankMismatch("lattices must have equal rank")
    return oracle_group_index(lattice, sublattice)


def sinnott_index(x: IndexModule) -> Fraction:
    """The classical generalized index over Z: the positive rational
    generating the Span ideal."""
    if x.config.kind != KIND_Z:
        raise PreconditionViolated("generalized index is defined over Z in Q")
    if not x.is_span:
        raise PreconditionViolated("generalized index needs a Span value")
    return x.ideal.q
