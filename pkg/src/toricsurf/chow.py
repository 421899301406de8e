"""Rational Chow ring data of a toric surface.

Everything in degree 2 is a rational multiple of the class of a single
torus-fixed point, written [V] below; all values returned here are the
coefficients relative to that common class. The divisor classes of the
first n rays (ray count minus two) form a basis of the degree-1 part,
and the intersection product matrix is taken over that basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotNormalizedError, ShapeError
from .fan import Fan, multiplicity, wall_relation
from .matrix import RationalMatrix

# Coefficient vector of a degree-1 class over x_1 .. x_{k} (k = ray count).
LinearForm = tuple[Fraction, ...]


@dataclass(frozen=True)
class ChowPresentation:
    """Generators-and-relations data of the rational Chow ring.

    One variable x_i per ray. The relations are two integer linear forms
    (the rows of ray first and second coordinates) and the squarefree
    monomials x_i * x_j over pairs of rays that span no common cone.
    """

    linear_forms: tuple[tuple[int, ...], tuple[int, ...]]
    nonadjacent_pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class IntersectionTable:
    """All pairwise intersection numbers of a fan's divisor classes.

    full is the symmetric table over every ray pair; basis_matrix is its
    upper-left block over the basis rays 1..n, the intersection product
    matrix.
    """

    full: RationalMatrix
    basis_matrix: RationalMatrix


def presentation(f: Fan) -> ChowPresentation:
    """Read off the Chow presentation of a fan.

    The pair (i, j), i < j, is listed exactly when rays i and j are not
    cyclically adjacent, so their product vanishes in the ring.
    """
    k = f.ray_count
    a_row = tuple(r.a for r in f.rays)
    b_row = tuple(r.b for r in f.rays)
    pairs = tuple((i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)
                  if (j - i) % k not in (1, k - 1))
    return ChowPresentation((a_row, b_row), pairs)


def intersection_number(f: Fan, i: int, j: int) -> Fraction:
    """Coefficient m with [divisor i] * [divisor j] = m * [V].

    Indices range over all rays, 1..ray_count. Cyclically adjacent rays
    span a cone and meet in 1 over its multiplicity; nonadjacent rays
    meet in 0; the self-intersection comes from the wall relation at i,
    whose middle coefficient spreads over either neighboring cone:

        m_ii = c_mid / (c_prev * mult(cone i-1)) = c_mid / (c_next * mult(cone i))

    The two denominators agree exactly (both equal the product of the
    neighboring multiplicities divided by the relation's gcd).
    """
    k = f.ray_count
    for idx in (i, j):
        if not 1 <= idx <= k:
            raise IndexError(f"ray index {idx} out of range 1..{k}")
    step = (j - i) % k
    if step == 0:
        rel = wall_relation(f, i)
        prev_cone = (i - 2) % k + 1
        return Fraction(rel.c_mid, rel.c_prev * multiplicity(f, prev_cone))
    if step == 1:
        return Fraction(1, multiplicity(f, i))
    if step == k - 1:
        return Fraction(1, multiplicity(f, j))
    return Fraction(0)


def intersection_matrix(f: Fan) -> RationalMatrix:
    """Intersection product matrix over the basis divisors 1..n.

    Symmetric, and tridiagonal because basis rays meet only their
    cyclic neighbors (the two dropped rays separate ray 1 from ray n).
    """
    n = f.basis_size
    return RationalMatrix([[intersection_number(f, i, j) for j in range(1, n + 1)]
                           for i in range(1, n + 1)])


def intersection_table(f: Fan) -> IntersectionTable:
    """Full intersection table together with its basis block."""
    k = f.ray_count
    n = f.basis_size
    full = RationalMatrix([[intersection_number(f, i, j) for j in range(1, k + 1)]
                           for i in range(1, k + 1)])
    basis = RationalMatrix([row[:n] for row in full.rows[:n]])
    return IntersectionTable(full, basis)


def express_dropped_divisors(f: Fan) -> tuple[LinearForm, LinearForm]:
    """Write the two dropped divisor classes over the basis divisors.

    Requires the fan in normal form (second-to-last ray (1, 0)). Setting
    both linear relations to zero and solving for the last two variables
    gives, with (a+, b+) the last ray,

        x_{n+1} = sum_j (a+ * b_j - a_j * b+) / b+ * x_j
        x_{n+2} = sum_j (-b_j / b+) * x_j

    over j = 1..n. Solvability is guaranteed because b+ > 0.

    Returns:
        Two coefficient vectors of length ray_count (entries at the two
        dropped positions are zero), for x_{n+1} and x_{n+2} in turn.
    """
    if not f.is_normalized():
        raise NotNormalizedError(
            f"second-to-last ray is {tuple(f.rays[-2])}, expected (1, 0); "
            "normalize the fan first")
    n = f.basis_size
    a_plus, b_plus = f.rays[-1]
    zero = Fraction(0)
    second_to_last = tuple(Fraction(a_plus * r.b - r.a * b_plus, b_plus)
                           for r in f.rays[:n]) + (zero, zero)
    last = tuple(Fraction(-r.b, b_plus) for r in f.rays[:n]) + (zero, zero)
    return second_to_last, last


def reduce_quadratic(f: Fan, q: RationalMatrix | Sequence[Sequence]) -> Fraction:
    """Reduce a degree-2 class sum q_ij x_i x_j to its coefficient of [V].

    q is a square coefficient array over all ray pairs (1-based (i, j)
    maps to entry (i-1, j-1)). The sum runs over every entry, so a
    coefficient split between (i, j) and (j, i) and the same total
    placed on one side give the same value.
    """
    if not isinstance(q, RationalMatrix):
        q = RationalMatrix(q)
    k = f.ray_count
    if q.shape != (k, k):
        raise ShapeError(f"coefficient array is {q.shape}, fan needs ({k}, {k})")
    total = Fraction(0)
    for i in range(k):
        for j in range(k):
            c = q.rows[i][j]
            if c:
                total += c * intersection_number(f, i + 1, j + 1)
    return total
