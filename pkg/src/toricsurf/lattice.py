"""Exact rank-2 lattice primitives.

Integer vectors in the plane, primitivization, 2x2 determinants, and the
orientation-preserving unimodular change of basis that moves a primitive
vector onto (1, 0). All arithmetic is over Python integers, so there is
no overflow and no rounding anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotPrimitiveError, ZeroVectorError


class LatticeVector(NamedTuple):
    """An integer vector (a, b) in the plane.

    Subclasses tuple, so ``LatticeVector(1, 2) == (1, 2)`` and instances
    unpack like ordinary pairs.
    """

    a: int
    b: int

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(-self.a, -self.b)

    def is_primitive(self) -> bool:
        return math.gcd(self.a, self.b) == 1


def as_vector(v) -> LatticeVector:
    """Coerce a pair of integers to a LatticeVector.

    Rejects floats and bools: exactness is part of the contract.
    """
    a, b = v
    for x in (a, b):
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"lattice coordinates must be plain integers, got {x!r}")
    return LatticeVector(a, b)


def primitivize(v) -> tuple[LatticeVector, int]:
    """Split a nonzero integer vector as k * v0 with v0 primitive, k >= 1.

    Returns:
        (v0, k) where v = k * v0 and gcd(|v0.a|, |v0.b|) = 1.

    Raises:
        ZeroVectorError: if v == (0, 0).
    """
    v = as_vector(v)
    if v.a == 0 and v.b == 0:
        raise ZeroVectorError("cannot primitivize the zero vector")
    k = math.gcd(v.a, v.b)
    return LatticeVector(v.a // k, v.b // k), k


def det2(u, v) -> int:
    """Determinant of the 2x2 matrix with columns u and v: u.a*v.b - v.a*u.b.

    Positive exactly when v lies counterclockwise of u by less than a half
    turn; its absolute value is the index of the sublattice spanned by u, v.
    """
    u = as_vector(u)
    v = as_vector(v)
    return u.a * v.b - v.a * u.b


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, x, y) with g = gcd(a, b) = a*x + b*y, g >= 0.

    ext_gcd(0, 0) returns (0, 0, 0).
    """
    if a == 0 and b == 0:
        return 0, 0, 0
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


@dataclass(frozen=True)
class UnimodularMap:
    """An integer 2x2 matrix of determinant +1 acting on lattice vectors.

    Orientation-preserving only: a determinant of -1 would reverse the
    counterclockwise ray order that every fan formula depends on.
    """

    m11: int
    m12: int
    m21: int
    m22: int

    def __post_init__(self):
        if self.det != 1:
            raise ValueError(f"map {self} has determinant {self.det}, need +1")

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    @classmethod
    def identity(cls) -> "UnimodularMap":
        return cls(1, 0, 0, 1)

    def apply(self, v) -> LatticeVector:
        v = as_vector(v)
        return LatticeVector(self.m11 * v.a + self.m12 * v.b,
                             self.m21 * v.a + self.m22 * v.b)

    def inverse(self) -> "UnimodularMap":
        return UnimodularMap(self.m22, -self.m12, -self.m21, self.m11)

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """Matrix product self * other (apply other first)."""
        return UnimodularMap(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.m11, self.m12), (self.m21, self.m22)


def unimodular_to_e1(v) -> UnimodularMap:
    """Orientation-preserving basis change sending a primitive vector to (1, 0).

    For v = (a, b), solves x*a + y*b = 1 and returns the map with rows
    (x, y) and (-b, a). The Bezout pair is pinned to the canonical
    representative: |x| minimal, ties broken toward x >= 0; when b = 0
    the remaining freedom in y is resolved the same way (y = 0).

    Raises:
        NotPrimitiveError: if gcd(|a|, |b|) != 1.
    """
    v = as_vector(v)
    g, x, y = ext_gcd(v.a, v.b)
    if g != 1:
        raise NotPrimitiveError(f"{tuple(v)} is not primitive (gcd {g})")
    if v.b != 0:
        # Solutions are (x + t*b, y - t*a); pick t minimizing |x|, ties to x >= 0.
        t0 = -x // v.b
        best = None
        for t in (t0 - 1, t0, t0 + 1):
            cand = x + t * v.b
            key = (abs(cand), 0 if cand >= 0 else 1)
            if best is None or key < best[0]:
                best = (key, t)
        t = best[1]
        x, y = x + t * v.b, y - t * v.a
    else:
        # a = +-1 and x = 1/a is forced; y is free, pin it to 0.
        y = 0
    return UnimodularMap(x, y, -v.b, v.a)


def ccw_compare(u, v) -> int:
    """Compare two nonzero vectors by angle in [0, 2*pi), exactly.

    Returns -1, 0, or +1 as angle(u) <, ==, > angle(v). Angle 0 is the
    direction of (1, 0). Equal angles occur only for parallel same-sign
    vectors. No floating point is involved: the half-plane containing a
    vector is read off its coordinate signs, and within a half-plane the
    sign of det2 orders the angles.
    """
    u = as_vector(u)
    v = as_vector(v)
    hu = 0 if (u.b > 0 or (u.b == 0 and u.a > 0)) else 1
    hv = 0 if (v.b > 0 or (v.b == 0 and v.a > 0)) else 1
    if hu != hv:
        return -1 if hu < hv else 1
    d = det2(u, v)
    if d > 0:
        return -1
    if d < 0:
        return 1
    return 0
