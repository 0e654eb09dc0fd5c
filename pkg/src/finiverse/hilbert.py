"""Inner-product spaces of tuples over finite fields.

A state space of dimension d over GF(p^k) holds exactly p**(k*d)
vectors.  Conjugation negates every coefficient of the adjoined root
(for the two-square extension this sends x + i*y to x - i*y) and the
sesquilinear form is sum(conj(u_n) * v_n).  Unlike the complex case the
form is not definite: nonzero isotropic vectors with <v, v> = 0 can
exist and are reported rather than forbidden.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import (
    CapacityOverflowError,
    DimMismatchError,
    InvalidInputError,
    NotPrimeError,
    SizeLimitError,
    SpecMismatchError,
)
from .fields import ENUMERATION_CAP, FieldElement, FieldSpec, is_prime

__all__ = [
    "FiniteHilbertSpace",
    "FiniteVector",
    "hilbert_cardinality",
    "conjugate",
    "inner_product",
    "norm_squared",
    "is_isotropic",
    "enumerate_vectors",
]

_CAPACITY_BITS = 4_000_000


def hilbert_cardinality(p: int, k: int, dim: int) -> int:
    """Exact number of state vectors: p**(k*dim)."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if not (isinstance(k, int) and k >= 1):
        raise InvalidInputError(f"extension degree must be positive, got {k}")
    if not (isinstance(dim, int) and dim >= 1):
        raise InvalidInputError(f"dimension must be positive, got {dim}")
    if k * dim * p.bit_length() > _CAPACITY_BITS:
        raise CapacityOverflowError(f"{p}**{k * dim} would exceed {_CAPACITY_BITS} bits")
    return p ** (k * dim)


def conjugate(a: FieldElement) -> FieldElement:
    """Field conjugation: negate every coefficient of the adjoined root.

    Constants are fixed; in the two-square extension conj(x + i*y) is
    x - i*y.  Applying it twice is the identity.
    """
    p = a.spec.p
    coeffs = (a.coeffs[0],) + tuple((-c) % p for c in a.coeffs[1:])
    return FieldElement(a.spec, coeffs)


class FiniteVector:
    """Tuple of field elements supporting +, -, and scalar multiply."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[FieldElement]):
        coords = tuple(coords)
        if not coords:
            raise InvalidInputError("a vector needs at least one coordinate")
        spec = coords[0].spec
        if any(c.spec != spec for c in coords[1:]):
            raise SpecMismatchError("all coordinates must share one field")
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteVector is immutable")

    @property
    def spec(self) -> FieldSpec:
        return self.coords[0].spec

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check(self, other: "FiniteVector") -> "FiniteVector":
        if not isinstance(other, FiniteVector):
            raise SpecMismatchError(f"cannot combine vector with {type(other).__name__}")
        if other.spec != self.spec:
            raise SpecMismatchError("vectors live over different fields")
        if other.dim != self.dim:
            raise DimMismatchError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FiniteVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = self._check(other)
        return FiniteVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, t: FieldElement) -> "FiniteVector":
        return FiniteVector(tuple(t * c for c in self.coords))

    def __eq__(self, other):
        if not isinstance(other, FiniteVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"FiniteVector{self}"


@dataclass(frozen=True)
class FiniteHilbertSpace:
    """Dimension-d coordinate space over GF(p^k) with the conjugate form."""

    spec: FieldSpec
    dim: int

    def __post_init__(self):
        if not (isinstance(self.dim, int) and self.dim >= 1):
            raise InvalidInputError(f"dimension must be positive, got {self.dim}")

    @property
    def cardinality(self) -> int:
        return hilbert_cardinality(self.spec.p, self.spec.k, self.dim)

    def vector(self, values: Sequence) -> FiniteVector:
        if len(values) != self.dim:
            raise DimMismatchError(f"expected {self.dim} coordinates, got {len(values)}")
        return FiniteVector(tuple(self.spec.element(v) for v in values))

    def vectors(self) -> list[FiniteVector]:
        return enumerate_vectors(self)


def inner_product(u: FiniteVector, v: FiniteVector) -> FieldElement:
    """Sesquilinear form sum(conj(u_n) * v_n), conjugate in the first slot."""
    if not isinstance(u, FiniteVector) or not isinstance(v, FiniteVector):
        raise InvalidInputError("inner_product expects two vectors")
    u._check(v)
    total = u.spec.zero
    for a, b in zip(u.coords, v.coords):
        total = total + conjugate(a) * b
    return total


def norm_squared(v: FiniteVector) -> FieldElement:
    """<v, v>; may be zero for nonzero v (isotropic vectors exist)."""
    return inner_product(v, v)


def is_isotropic(v: FiniteVector) -> bool:
    """True for a nonzero vector whose norm-square vanishes."""
    return any(not c.is_zero for c in v.coords) and norm_squared(v).is_zero


def enumerate_vectors(space: FiniteHilbertSpace) -> list[FiniteVector]:
    """All vectors in coordinate-enumeration order (first coordinate
    varies slowest); capped at ENUMERATION_CAP vectors."""
    if space.cardinality > ENUMERATION_CAP:
        raise SizeLimitError(
            f"{space.cardinality} vectors exceed the enumeration cap {ENUMERATION_CAP}"
        )
    elems = space.spec.elements()
    return [FiniteVector(c) for c in product(elems, repeat=space.dim)]
