"""The cellular cup product matrix and its closed-form shortcuts.

The surface has a cell structure with one 2-cell per basis ray, and the
cup product of the dual basis classes is given directly by the ray
coordinates, no ring arithmetic needed. When the fan ends in the
standard pair (1,0),(0,1) the formula specializes to plain integer
products, and a shear-and-rescale endomorphism reduces many fans to
that case. The same matrix is also the change of basis between the
cellular classes and the Poincare duals of the divisor classes.
"""

from toricsurf import (
    basis_change,
    cup_matrix,
    cup_matrix_smooth,
    intersection_matrix,
    matrix_table,
    rays_table,
    rescale_gcd,
    smoothing_rescale,
    validate_fan,
)

RAYS = [(-2, 1), (-2, -1), (1, -2), (1, 0), (0, 1)]
HALF = [(-1, 0), (0, -1), (1, 0), (1, 2)]


def main() -> None:
    fan = validate_fan(RAYS)
    print("Cellular cup product matrix of the five-ray fan:")
    print(matrix_table(cup_matrix(fan)))
    print()

    print("Its last ray is (0, 1), so the smooth-vertex specialization")
    print("applies and gives the same integer matrix:")
    print(matrix_table(cup_matrix_smooth(fan)))
    print()

    half = validate_fan(HALF)
    print("Cup entries need not be integers. For the fan")
    print(rays_table(half.rays))
    print("the matrix is:")
    print(matrix_table(cup_matrix(half)))
    print()

    print("Its last ray (1, 2) tilts into the right half-plane, so the")
    print("rescale route applies: shear the lattice, then primitivize.")
    rescaled = smoothing_rescale(half)
    print("rescaled fan:")
    print(rays_table(rescaled.rays))
    scales = [rescale_gcd(half, i) for i in range(1, half.basis_size + 1)]
    print(f"primitivization scales: {scales}")
    print()

    change = basis_change(fan)
    print("basis_change() returns the two translation matrices between")
    print("the cellular basis and the Poincare dual divisor basis; one")
    print("is the cup matrix, the other its inverse, which equals the")
    print("intersection matrix:")
    print(matrix_table(change.pd_in_cellular))
    assert change.pd_in_cellular == intersection_matrix(fan)
    print("(equal to the intersection product matrix, as it must be)")


if __name__ == "__main__":
    main()
