"""A-lattices in K^n as pseudo-matrices.

A ``PseudoLattice`` is a finite list of pairs (fractional ideal, vector); it
represents the module sum of ideal·vector. ``steinitz`` reduces it to the
normalized pseudo-basis  m·b0 (+) A·b1 (+) ... (+) A·b_{d-1}  with an
integral ideal m: over the PID-like configurations by an integer Hermite
reduction of the scaled generators, over O_d by a Dedekind pseudo-Hermite
elimination followed by pairwise aggregation of the coefficient ideals into
slot 0.

Steinitz output is not canonical — only the represented module is. Use
``same_module`` for equality; never compare bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .errors import (
    ConfigMismatch,
    NotALattice,
    UnsupportedExtension,
    ZeroLattice,
)
from .ideals import FractionalIdeal
from .intlinalg import clear_denominators, hnf_rows, solve_row_combination
from .linalg import mat_vec, rref, solve_in_span
from .rings import KIND_OD, KIND_Z, KIND_ZQD, RingConfig, check_same_config
from .scalars import QuadElement


@dataclass(frozen=True)
class SteinitzForm:
    """Normalized pseudo-basis: ideal on slot 0, ring on the others."""

    ideal: FractionalIdeal
    basis: tuple

    @property
    def rank(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class PseudoLattice:
    config: RingConfig
    ambient_dim: int
    gens: tuple

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be >= 1")
        if not self.gens:
            raise ValueError("a pseudo-lattice needs at least one generator")
        norm = []
        for ideal, vec in self.gens:
            if not isinstance(ideal, FractionalIdeal):
                raise TypeError("generator coefficients must be ideals")
            check_same_config(ideal.config, self.config)
            if len(vec) != self.ambient_dim:
                raise ValueError("generator vector has the wrong length")
            norm.append((ideal, tuple(self.config.coerce_scalar(x) for x in vec)))
        object.__setattr__(self, "gens", tuple(norm))

    # -- basic structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(not any(v) for _, v in self.gens)

    def nonzero_gens(self):
        return [(ideal, v) for ideal, v in self.gens if any(v)]

    def scaled_elements(self):
        """Vectors t·v for every pseudo-generator (ideal, v) and every
        Z-basis element t of the ideal; they generate the module over A."""
        out = []
        for ideal, v in self.nonzero_gens():
            for t in ideal.z_basis():
                out.append(tuple(self.config.coerce_scalar(t) * x for x in v))
        return out

    # -- span ----------------------------------------------------------------

    @cached_property
    def span(self) -> tuple:
        """A K-basis of the K-span, as reduced echelon rows."""
        if self.is_zero:
            raise ZeroLattice("the zero module has no span basis")
        vecs = [v for _, v in self.nonzero_gens()]
        basis, _ = rref(vecs)
        return tuple(tuple(r) for r in basis)

    @property
    def rank(self) -> int:
        return len(self.span)

    def span_contains(self, vector) -> bool:
        vec = [self.config.coerce_scalar(x) for x in vector]
        if self.is_zero:
            return not any(vec)
        return solve_in_span(self.span, vec) is not None

    def same_span(self, other: "PseudoLattice") -> bool:
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.rank == other.rank and all(
            self.span_contains(v) for v in other.span
        )

    # -- Steinitz form ---------------------------------------------------------

    @cached_property
    def steinitz(self) -> SteinitzForm:
        if self.is_zero:
            raise ZeroLattice("the zero module has no pseudo-basis")
        if self.config.kind == KIND_OD:
            return _steinitz_quadratic(self.config, self.nonzero_gens())
        return _steinitz_pid(self.config, self.nonzero_gens(), self.rank)

    # -- membership & equality --------------------------------------------------

    def contains(self, vector) -> bool:
        vec = [self.config.coerce_scalar(x) for x in vector]
        if self.is_zero:
            return not any(vec)
        st = self.steinitz
        coords = solve_in_span(st.basis, vec)
        if coords is None:
            return False
        unit = FractionalIdeal.unit(self.config)
        for i, coord in enumerate(coords):
            holder = st.ideal if i == 0 else unit
            if not holder.contains(coord):
                return False
        return True

    def same_module(self, other: "PseudoLattice") -> bool:
        check_same_config(self.config, other.config)
        if self.ambient_dim != other.ambient_dim:
            raise ConfigMismatch("ambient dimensions differ")
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return all(other.contains(v) for v in self.scaled_elements()) and all(
            self.contains(v) for v in other.scaled_elements()
        )

    # -- constructions ------------------------------------------------------------

    def apply_map(self, matrix) -> "PseudoLattice":
        """Image lattice under a K-linear map given by an n x n row matrix."""
        rows = [[self.config.coerce_scalar(x) for x in r] for r in matrix]
        gens = [(ideal, tuple(mat_vec(rows, v))) for ideal, v in self.gens]
        return PseudoLattice(self.config, self.ambient_dim, tuple(gens))

    def scale_module(self, scalar) -> "PseudoLattice":
        s = self.config.coerce_scalar(scalar)
        gens = [(ideal, tuple(s * x for x in v)) for ideal, v in self.gens]
        return PseudoLattice(self.config, self.ambient_dim, tuple(gens))

    def extend_to(self, target: RingConfig) -> "PseudoLattice":
        """Scalar extension to a larger ring: Z -> S^-1 Z, or Z inside
        Q(sqrt(d)) -> O_d. Coefficient ideals are mapped to the ideals they
        generate; vectors are unchanged."""
        src = self.config
        ok = (src.kind == KIND_Z and target.kind == "ZS") or (
            src.kind == KIND_ZQD
            and target.kind == KIND_OD
            and src.d == target.d
        )
        if not ok:
            raise UnsupportedExtension(f"cannot extend {src} to {target}")
        gens = tuple(
            (FractionalIdeal.from_rational(target, ideal.q), v)
            for ideal, v in self.gens
        )
        return PseudoLattice(target, self.ambient_dim, gens)

    # -- serialization ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "ring": self.config.to_json(),
            "ambient_dim": self.ambient_dim,
            "gens": [
                {
                    "ideal": ideal.to_json(),
                    "vector": [_scalar_str(x) for x in v],
                }
                for ideal, v in self.gens
            ],
        }

    @classmethod
    def from_json(cls, data, config: RingConfig | None = None) -> "PseudoLattice":
        from .errors import SchemaError

        if not isinstance(data, dict):
            raise SchemaError("lattice must be a JSON object")
        if "ring" in data:
            config = RingConfig.from_json(data["ring"])
        if config is None:
            raise SchemaError("no ring given for lattice")
        try:
            dim = int(data["ambient_dim"])
            raw_gens = data["gens"]
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad lattice object: {exc}") from exc
        if not isinstance(raw_gens, list) or not raw_gens:
            raise SchemaError("lattice needs a nonempty list of generators")
        gens = []
        for g in raw_gens:
            try:
                ideal = FractionalIdeal.from_json(config, g["ideal"])
                vec = [config.parse_scalar(s) for s in g["vector"]]
            except (KeyError, TypeError, ValueError) as exc:
                raise SchemaError(f"bad generator: {exc}") from exc
            gens.append((ideal, tuple(vec)))
        try:
            return cls(config, dim, tuple(gens))
        except (ValueError, TypeError) as exc:
            raise SchemaError(str(exc)) from exc


def _scalar_str(x) -> str:
    from .scalars import format_scalar

    return format_scalar(x)


def direct_sum(parts) -> PseudoLattice:
    """Block-embed the parts into the concatenated ambient space."""
    parts = list(parts)
    if not parts:
        raise ValueError("direct sum of no parts")
    config = parts[0].config
    for p in parts[1:]:
        check_same_config(config, p.config)
    total = sum(p.ambient_dim for p in parts)
    gens = []
    offset = 0
    zero = config.zero()
    for p in parts:
        for ideal, v in p.gens:
            vec = [zero] * total
            vec[offset : offset + p.ambient_dim] = list(v)
            gens.append((ideal, tuple(vec)))
        offset += p.ambient_dim
    return PseudoLattice(config, total, tuple(gens))


# -- PID-style reduction (A = Z or S^-1 Z, possibly inside a quadratic field) --


def _steinitz_pid(config, gens, span_rank) -> SteinitzForm:
    quad_ambient = config.kind == KIND_ZQD
    rows = []
    for ideal, v in gens:
        scaled = [config.coerce_scalar(ideal.q) * x for x in v]
        rows.append(_flatten(scaled) if quad_ambient else scaled)
    int_rows, den = clear_denominators(rows)
    basis_rows = [r for r in hnf_rows(int_rows) if any(r)]
    basis = []
    for r in basis_rows:
        vec = [Fraction(x, den) for x in r]
        basis.append(tuple(_unflatten(vec, config)) if quad_ambient else tuple(vec))
    if quad_ambient and len(basis) != span_rank:
        raise NotALattice(
            f"Z-rank {len(basis)} exceeds K-span dimension {span_rank}"
        )
    return SteinitzForm(FractionalIdeal.unit(config), tuple(basis))


def _flatten(vec):
    out = []
    for x in vec:
        out.extend((x.a, x.b))
    return out


def _unflatten(flat, config):
    return [
        QuadElement(flat[i], flat[i + 1], config.d) for i in range(0, len(flat), 2)
    ]


# -- Dedekind pseudo-Hermite reduction over O_d --


def _steinitz_quadratic(config, gens) -> SteinitzForm:
    pseudo = _pseudo_basis(config, gens)
    ideal, slot0 = pseudo[0]
    tail = []
    for other_ideal, vec in pseudo[1:]:
        unit_vec, (ideal, slot0) = _merge_pair(config, ideal, slot0, other_ideal, vec)
        tail.append(tuple(unit_vec))
    # Normalize the aggregated ideal to an integral primitive one.
    g = gcd(gcd(ideal.a, ideal.b), ideal.c)
    t = Fraction(ideal.den, g)
    ideal = ideal.scale(t)
    inv = config.coerce_scalar(1 / t)
    slot0 = [inv * x for x in slot0]
    return SteinitzForm(ideal, tuple([tuple(slot0)] + tail))


def _pseudo_basis(config, gens):
    """Echelon pseudo-basis of the generators: independent vectors whose
    ideal-weighted sum is the same module."""
    work = [(ideal, list(v)) for ideal, v in gens]
    basis = []
    dim = len(work[0][1])
    for row in range(dim):
        idx = [k for k, (_, v) in enumerate(work) if v[row]]
        if not idx:
            continue
        p_ideal, p_vec = work[idx[0]]
        for k in idx[1:]:
            o_ideal, o_vec = work[k]
            (p_ideal, p_vec), work[k] = _eliminate_pair(
                config, p_ideal, p_vec, o_ideal, o_vec, row
            )
        basis.append((p_ideal, p_vec))
        del work[idx[0]]
        work = [(ideal, v) for ideal, v in work if any(v)]
    return basis


def _eliminate_pair(config, a_ideal, a_vec, b_ideal, b_vec, row):
    """Combine two pseudo-generators so the first keeps a unit pivot at
    ``row`` and the second gets a zero there; the module is unchanged."""
    a1, a2 = a_vec[row], b_vec[row]
    lhs = a_ideal.mul_element(a1)
    rhs = b_ideal.mul_element(a2)
    pivot_ideal = lhs + rhs
    pivot_inv = pivot_ideal.inverse()
    x, y = _split_one(config, lhs * pivot_inv, rhs * pivot_inv)
    alpha = x / a1
    beta = y / a2
    new_pivot = [alpha * u + beta * w for u, w in zip(a_vec, b_vec)]
    new_other = [a2 * u - a1 * w for u, w in zip(a_vec, b_vec)]
    assert new_pivot[row] == config.one()
    other_ideal = a_ideal * b_ideal * pivot_inv
    return (pivot_ideal, new_pivot), (other_ideal, new_other)


def _merge_pair(config, a_ideal, p_vec, b_ideal, q_vec):
    """Rewrite  a·p (+) b·q  as  A·p' (+) (ab)·q'  (same module)."""
    unit = FractionalIdeal.unit(config)
    if a_ideal == unit:
        return list(p_vec), (b_ideal, list(q_vec))
    if b_ideal == unit:
        return list(q_vec), (a_ideal, list(p_vec))
    u = a_ideal.z_basis()[0]
    cofactor = a_ideal.inverse().mul_element(u)
    b_inv = b_ideal.inverse()
    for v in _small_elements(b_ideal):
        candidate = b_inv.mul_element(v)
        if (candidate + cofactor) == unit:
            break
    else:  # pragma: no cover - the search always terminates
        raise RuntimeError("no coprime element found")
    x, y = _split_one(config, cofactor, candidate)
    a_star = x / u
    b_star = y / v
    new_unit = [u * pp + v * qq for pp, qq in zip(p_vec, q_vec)]
    new_prod = [a_star * qq - b_star * pp for pp, qq in zip(p_vec, q_vec)]
    return new_unit, (a_ideal * b_ideal, new_prod)


def _small_elements(ideal, limit: int = 32):
    e1, e2 = ideal.z_basis()
    for radius in range(1, limit):
        for s in range(-radius, radius + 1):
            for t in range(-radius, radius + 1):
                if max(abs(s), abs(t)) != radius:
                    continue
                e = s * e1 + t * e2
                if e:
                    yield e


def _split_one(config, x_ideal, y_ideal):
    """For integral coprime ideals, write 1 = x + y with x, y in them."""
    ex = x_ideal.z_basis()
    ey = y_ideal.z_basis()
    coords = [config.to_omega_coords(e) for e in list(ex) + list(ey)]
    int_rows, den = clear_denominators([[u, v] for u, v in coords])
    coeffs = solve_row_combination(int_rows, [den, 0])
    if coeffs is None:  # pragma: no cover - ideals are coprime by construction
        raise RuntimeError("ideals do not sum to the whole ring")
    x = config.zero()
    for coeff, e in zip(coeffs[: len(ex)], ex):
        x = x + coeff * e
    return x, config.one() - x
