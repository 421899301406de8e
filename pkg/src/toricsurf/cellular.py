"""Cellular cup product matrix and basis-change data.

The toric surface of a complete fan carries a cell structure with one
2-cell per basis ray and one 4-cell; the cup products of the dual
degree-2 classes are u_i * u_j = c_ij * v with v the top class. The
closed form for c_ij below needs the fan in normal form: second-to-last
ray exactly (1, 0), which forces the last ray (a+, b+) to have b+ > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotNormalizedError, SmoothVertexRequiredError, UnsupportedOrientationError
from .fan import Fan
from .lattice import primitivize
from .matrix import RationalMatrix


def _require_normalized(f: Fan) -> None:
    if not f.is_normalized():
        raise NotNormalizedError(
            f"second-to-last ray is {tuple(f.rays[-2])}, expected (1, 0); "
            "normalize the fan first")


def cup_matrix(f: Fan) -> RationalMatrix:
    """Cellular cup product matrix of a normalized fan.

    For basis indices i <= j, with (a+, b+) the last ray:

        c_ij = b_j * (a_i * b+ - a+ * b_i) / b+

    and the matrix is completed by symmetry. Entries are exact rationals;
    they are all integers when the last ray is (0, 1), but not in general.
    """
    _require_normalized(f)
    n = f.basis_size
    a_plus, b_plus = f.rays[-1]
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        a_i, b_i = f.rays[i]
        lead = a_i * b_plus - a_plus * b_i
        for j in range(i, n):
            value = Fraction(f.rays[j].b * lead, b_plus)
            rows[i][j] = value
            rows[j][i] = value
    return RationalMatrix(rows)


def cup_matrix_smooth(f: Fan) -> RationalMatrix:
    """Cup matrix by the short formula c_ij = a_i * b_j, valid when the
    last two rays are (1, 0) and (0, 1).

    Agrees entrywise with cup_matrix on its domain and is integral there.

    Raises:
        NotNormalizedError: second-to-last ray is not (1, 0).
        SmoothVertexRequiredError: last ray is not (0, 1).
    """
    _require_normalized(f)
    if f.rays[-1] != (0, 1):
        raise SmoothVertexRequiredError(
            f"last ray is {tuple(f.rays[-1])}, expected (0, 1); the short formula "
            "needs the cone of the two dropped rays to be smooth")
    n = f.basis_size
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            value = Fraction(f.rays[i].a * f.rays[j].b)
            rows[i][j] = value
            rows[j][i] = value
    return RationalMatrix(rows)


def rescale_gcd(f: Fan, i: int) -> int:
    """Primitivization scale of basis ray i under the smoothing rescale.

    Equals gcd(|a_i * b+|, |a+ * b_i|) for the last ray (a+, b+). When
    a+ > 0 this is always positive; when a+ = 0 it degenerates to |a_i|
    and vanishes for a vertical ray, which has no meaningful scale.

    Raises:
        IndexError: i outside 1..basis_size.
        ValueError: both products vanish (a+ = 0 and a_i = 0).
    """
    _require_normalized(f)
    n = f.basis_size
    if not 1 <= i <= n:
        raise IndexError(f"basis ray index {i} out of range 1..{n}")
    a_plus, b_plus = f.rays[-1]
    a_i, b_i = f.rays[i - 1]
    g = math.gcd(a_i * b_plus, a_plus * b_i)
    if g == 0:
        raise ValueError(
            f"rescale gcd of ray {i} is undefined: ray {i} and the last ray "
            "are both vertical")
    return g


def smoothing_rescale(f: Fan) -> Fan:
    """Rescale a normalized fan so its last two rays become (1, 0), (0, 1).

    Applies the linear map (x, y) -> (b+ * x - a+ * y, a+ * y) and
    primitivizes every image ray. The map has determinant a+ * b+ > 0,
    so ray order and completeness survive. A fan whose last ray already
    is (0, 1) (that is, a+ = 0) is returned unchanged.

    Raises:
        NotNormalizedError: second-to-last ray is not (1, 0).
        UnsupportedOrientationError: a+ < 0, where the map would send
            the last ray to (0, -1) and reverse orientation.
    """
    _require_normalized(f)
    a_plus, b_plus = f.rays[-1]
    if a_plus == 0:
        return f
    if a_plus < 0:
        raise UnsupportedOrientationError(
            f"last ray {tuple(f.rays[-1])} has negative first coordinate; the "
            "rescale is only defined for a positive one")
    image = tuple(primitivize((b_plus * r.a - a_plus * r.b, a_plus * r.b))[0]
                  for r in f.rays)
    return Fan(image)


def cellular_divisor_coefficients(f: Fan, i: int) -> tuple[Fraction, ...]:
    """Coefficient vector of the image of cellular class i over the divisor
    variables x_1 .. x_{ray_count}.

    Entry j is the cup matrix entry c_ij for j <= basis_size and zero at
    the two dropped positions.
    """
    n = f.basis_size
    if not 1 <= i <= n:
        raise IndexError(f"basis index {i} out of range 1..{n}")
    row = cup_matrix(f).rows[i - 1]
    return row + (Fraction(0), Fraction(0))


@dataclass(frozen=True)
class BasisChange:
    """Mutually inverse coordinate changes between the two degree-2 bases.

    cellular_in_pd: row i gives cellular class i over the Poincare duals
    of the basis divisors; this matrix is the cup matrix itself.
    pd_in_cellular: the exact inverse, giving the dual classes over the
    cellular basis; it coincides with the intersection product matrix.
    """

    cellular_in_pd: RationalMatrix
    pd_in_cellular: RationalMatrix


def basis_change(f: Fan) -> BasisChange:
    """Both basis-change matrices of a normalized fan.

    The inverse always exists: the cup matrix of a valid fan is
    nonsingular (its inverse is the intersection product matrix).
    """
    cup = cup_matrix(f)
    return BasisChange(cellular_in_pd=cup, pd_in_cellular=cup.inverse())
