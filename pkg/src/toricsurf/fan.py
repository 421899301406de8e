"""Complete fans in the plane and lattice polygons.

A complete 2D fan is stored as its counterclockwise list of primitive ray
generators. Positions are 1-based and cyclic: a fan with k rays has rays
1..k, ray k+1 means ray 1, and the 2-dimensional cone number i is spanned
by rays i and i+1. Validation is strict and happens at construction, so a
Fan value is always a complete fan.

Also here: normal fans of convex lattice polygons, cone multiplicities,
wall relations among three consecutive rays, normalization moving a chosen
ray to (1, 0), and a seeded random generator for property tests.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    DegeneratePolygonError,
    DuplicateRayError,
    FanError,
    GenerationFailedError,
    NotCompleteError,
    NotCounterclockwiseError,
    NotPrimitiveError,
    TooFewRaysError,
)
from .lattice import LatticeVector, UnimodularMap, as_vector, ccw_compare, det2, primitivize, unimodular_to_e1

_MAX_GENERATION_ATTEMPTS = 10_000


@dataclass(frozen=True)
class Fan:
    """A complete 2-dimensional fan, given by its ordered primitive rays.

    Invariants enforced at construction:
      * at least 3 rays, all primitive, pairwise distinct;
      * det2(ray i, ray i+1) > 0 for every i cyclically;
      * the rays wind exactly once around the origin.

    Raises TooFewRaysError, NotPrimitiveError, DuplicateRayError,
    NotCounterclockwiseError, or NotCompleteError accordingly. Error
    indices are 1-based ray positions.
    """

    rays: tuple[LatticeVector, ...]

    def __post_init__(self):
        rays = tuple(as_vector(r) for r in self.rays)
        object.__setattr__(self, "rays", rays)
        k = len(rays)
        if k < 3:
            raise TooFewRaysError(f"a complete fan needs at least 3 rays, got {k}")
        for i, r in enumerate(rays, start=1):
            if r == (0, 0):
                raise NotPrimitiveError(f"ray {i} is the zero vector", index=i)
            if not r.is_primitive():
                raise NotPrimitiveError(f"ray {i} = {tuple(r)} is not primitive", index=i)
        seen: dict[LatticeVector, int] = {}
        for i, r in enumerate(rays, start=1):
            if r in seen:
                raise DuplicateRayError(
                    f"rays {seen[r]} and {i} are both {tuple(r)}", first=seen[r], second=i)
            seen[r] = i
        for i in range(k):
            d = det2(rays[i], rays[(i + 1) % k])
            if d <= 0:
                raise NotCounterclockwiseError(
                    f"det of rays {i + 1} and {(i + 1) % k + 1} is {d}, not positive",
                    index=i + 1)
        # With all consecutive determinants positive the angular step is
        # always in (0, pi), so the winding number equals the number of
        # positions where the angle wraps past (1, 0).
        wraps = sum(1 for i in range(k) if ccw_compare(rays[i], rays[(i + 1) % k]) > 0)
        if wraps != 1:
            raise NotCompleteError(
                f"rays wind {wraps} times around the origin, expected exactly once")

    @property
    def ray_count(self) -> int:
        return len(self.rays)

    @property
    def basis_size(self) -> int:
        """Rank n of the degree-2 part: two fewer than the ray count."""
        return len(self.rays) - 2

    def ray(self, i: int) -> LatticeVector:
        """Ray at 1-based position i (no wrapping)."""
        if not 1 <= i <= len(self.rays):
            raise IndexError(f"ray index {i} out of range 1..{len(self.rays)}")
        return self.rays[i - 1]

    def ray_cyclic(self, i: int) -> LatticeVector:
        """Ray at position i taken modulo the ray count (any integer i)."""
        return self.rays[(i - 1) % len(self.rays)]

    def is_normalized(self) -> bool:
        """True when the second-to-last ray is exactly (1, 0)."""
        return self.rays[-2] == (1, 0)

    def __iter__(self) -> Iterator[LatticeVector]:
        return iter(self.rays)

    def __len__(self) -> int:
        return len(self.rays)


def validate_fan(raw_rays: Sequence) -> Fan:
    """Check a raw list of integer pairs and return it as a Fan.

    This is just the Fan constructor with sequence coercion; it exists so
    callers holding plain lists do not need to build LatticeVectors first.
    """
    return Fan(tuple(as_vector(r) for r in raw_rays))


@dataclass(frozen=True)
class Polygon:
    """A convex lattice polygon, vertices listed counterclockwise.

    Construction checks that there are at least 3 vertices, coordinates
    are integers, and the boundary turns strictly left at every vertex.
    A zero cross product (collinear consecutive edges, or a repeated
    vertex) or a right turn raises DegeneratePolygonError.
    """

    vertices: tuple[tuple[int, int], ...]

    def __post_init__(self):
        verts = tuple((int(x), int(y)) for x, y in
                      (as_vector(v) for v in self.vertices))
        object.__setattr__(self, "vertices", verts)
        k = len(verts)
        if k < 3:
            raise DegeneratePolygonError(f"a polygon needs at least 3 vertices, got {k}")
        for i in range(k):
            if verts[i] == verts[(i + 1) % k]:
                raise DegeneratePolygonError(
                    f"vertices {i + 1} and {(i + 1) % k + 1} coincide")
        for i in range(k):
            p, q, r = verts[i], verts[(i + 1) % k], verts[(i + 2) % k]
            e1 = (q[0] - p[0], q[1] - p[1])
            e2 = (r[0] - q[0], r[1] - q[1])
            cross = e1[0] * e2[1] - e2[0] * e1[1]
            if cross <= 0:
                raise DegeneratePolygonError(
                    f"boundary does not turn strictly left at vertex {(i + 1) % k + 1} "
                    f"(cross product {cross})")

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)


def normal_fan(p: Polygon) -> Fan:
    """Fan of primitive outward normals of a polygon's edges.

    Each counterclockwise edge direction (dx, dy) contributes the
    primitive vector along (dy, -dx); the output order follows the edge
    order, so the result is counterclockwise as well. Translating the
    polygon does not change the result.
    """
    verts = p.vertices
    k = len(verts)
    rays = []
    for i in range(k):
        x0, y0 = verts[i]
        x1, y1 = verts[(i + 1) % k]
        dx, dy = x1 - x0, y1 - y0
        rays.append(primitivize((dy, -dx))[0])
    return Fan(tuple(rays))


def multiplicity(f: Fan, i: int) -> int:
    """Index of the sublattice spanned by rays i and i+1 (cone number i).

    Always positive for a valid fan; equals 1 exactly when the cone is
    smooth (its generators form a lattice basis).
    """
    k = f.ray_count
    if not 1 <= i <= k:
        raise IndexError(f"cone index {i} out of range 1..{k}")
    return det2(f.rays[i - 1], f.rays[i % k])


class WallRelation(NamedTuple):
    """Integer dependence among three consecutive rays.

    c_prev * ray(i-1) + c_mid * ray(i) + c_next * ray(i+1) = (0, 0),
    reduced to coprime coefficients with c_prev > 0. From the fan
    invariants c_next > 0 as well, so c_prev * c_next > 0.
    """

    c_prev: int
    c_mid: int
    c_next: int


def wall_relation(f: Fan, i: int) -> WallRelation:
    """The normalized wall relation centered on ray i.

    The unreduced coefficients come from the rank-2 Cramer identity

        det2(v, w) * u - det2(u, w) * v + det2(u, v) * w = 0

    applied to u, v, w = rays i-1, i, i+1, then divided by the gcd.
    """
    k = f.ray_count
    if not 1 <= i <= k:
        raise IndexError(f"ray index {i} out of range 1..{k}")
    prev_ray = f.rays[(i - 2) % k]
    mid_ray = f.rays[i - 1]
    next_ray = f.rays[i % k]
    c_prev = det2(mid_ray, next_ray)
    c_mid = -det2(prev_ray, next_ray)
    c_next = det2(prev_ray, mid_ray)
    g = math.gcd(c_prev, c_mid, c_next)
    return WallRelation(c_prev // g, c_mid // g, c_next // g)


def normalize(f: Fan, pivot: int | None = None) -> tuple[Fan, UnimodularMap, int]:
    """Relabel and change basis so a chosen ray becomes (1, 0).

    The pivot ray is moved to the second-to-last position by a cyclic
    shift (never a reversal, which would flip orientation), and the
    orientation-preserving basis change sending it to (1, 0) is applied
    to every ray. The counterclockwise invariant then forces the last
    ray's second coordinate to be positive.

    Args:
        f: a valid fan.
        pivot: 1-based position of the ray to send to (1, 0); defaults
            to the position the convention expects, ray_count - 1, so a
            fan already in normal form is returned unchanged.

    Returns:
        (normalized fan, map applied to the rays, cyclic shift amount s)
        where output ray at position p is the map applied to the input
        ray at position p + s (cyclically).
    """
    k = f.ray_count
    if pivot is None:
        pivot = k - 1
    if not 1 <= pivot <= k:
        raise IndexError(f"pivot index {pivot} out of range 1..{k}")
    shift = (pivot - (k - 1)) % k
    rotated = f.rays[shift:] + f.rays[:shift]
    basis_map = unimodular_to_e1(rotated[k - 2])
    moved = tuple(basis_map.apply(r) for r in rotated)
    return Fan(moved), basis_map, shift


def is_smooth_cone(f: Fan, i: int) -> bool:
    """True when cone i has multiplicity 1."""
    return multiplicity(f, i) == 1


def has_smooth_vertex(f: Fan) -> bool:
    """True when at least one 2-dimensional cone of the fan is smooth."""
    return any(is_smooth_cone(f, i) for i in range(1, f.ray_count + 1))


@lru_cache(maxsize=None)
def _primitive_direction_count(bound: int) -> int:
    """Number of primitive integer vectors with both coordinates in [-bound, bound]."""
    return sum(1 for a in range(-bound, bound + 1) for b in range(-bound, bound + 1)
               if math.gcd(a, b) == 1)


def random_complete_fan(ray_count: int, coord_bound: int, seed: int) -> Fan:
    """Draw a random complete fan, deterministically in the seed.

    Samples distinct primitive directions with coordinates in
    [-coord_bound, coord_bound], sorts them counterclockwise, rejects
    configurations that are not complete (all directions in a half
    plane), and normalizes so the ray at position ray_count - 1 is
    exactly (1, 0). Rejection retries are capped, so the function always
    terminates.

    Raises:
        ValueError: ray_count < 3 or coord_bound < 1.
        GenerationFailedError: the bound admits fewer than ray_count
            primitive directions, or the retry cap was exhausted.
    """
    if ray_count < 3:
        raise ValueError(f"ray_count must be at least 3, got {ray_count}")
    if coord_bound < 1:
        raise ValueError(f"coord_bound must be at least 1, got {coord_bound}")
    if coord_bound <= 64 and _primitive_direction_count(coord_bound) < ray_count:
        raise GenerationFailedError(
            f"only {_primitive_direction_count(coord_bound)} primitive directions have "
            f"coordinates in [-{coord_bound}, {coord_bound}], fewer than {ray_count}")
    rng = random.Random(seed)
    draw_budget = 8 * ray_count + 64
    for _ in range(_MAX_GENERATION_ATTEMPTS):
        directions: set[LatticeVector] = set()
        draws = 0
        while len(directions) < ray_count and draws < draw_budget:
            draws += 1
            a = rng.randint(-coord_bound, coord_bound)
            b = rng.randint(-coord_bound, coord_bound)
            if a == 0 and b == 0:
                continue
            directions.add(primitivize((a, b))[0])
        if len(directions) < ray_count:
            continue
        ordered = sorted(directions, key=cmp_to_key(ccw_compare))
        try:
            fan = Fan(tuple(ordered))
        except FanError:
            continue
        normalized, _, _ = normalize(fan, ray_count - 1)
        return normalized
    raise GenerationFailedError(
        f"no complete fan with {ray_count} rays and bound {coord_bound} found in "
        f"{_MAX_GENERATION_ATTEMPTS} attempts (seed {seed})")
