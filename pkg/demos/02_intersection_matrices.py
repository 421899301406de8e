"""The intersection product matrix and the Chow ring presentation.

Every ray carries an invariant divisor class. Products of two classes
land in degree 2, which is spanned by the point class, so each product
is a single rational number. Dropping the last two rays leaves a basis;
the matrix of pairwise products over that basis is the intersection
product matrix. This demo computes it, shows the ring presentation that
explains it, and reduces arbitrary quadratic expressions.
"""

from toricsurf import (
    express_dropped_divisors,
    intersection_matrix,
    intersection_number,
    intersection_table,
    linear_form_str,
    matrix_table,
    presentation,
    reduce_quadratic,
    validate_fan,
)

RAYS = [(-2, 1), (-2, -1), (1, -2), (1, 0), (0, 1)]


def main() -> None:
    fan = validate_fan(RAYS)
    print("Intersection product matrix over divisors 1..3:")
    print(matrix_table(intersection_matrix(fan)))
    print()

    print("Individual numbers follow three rules: adjacent rays meet in")
    print("1/mult of their common cone, nonadjacent rays do not meet, and")
    print("self-intersections come from the wall relation at the ray.")
    print(f"  D2.D3 = {intersection_number(fan, 2, 3)}"
          f"  (cone 2 has multiplicity 2)")
    print(f"  D1.D3 = {intersection_number(fan, 1, 3)}  (not adjacent)")
    print(f"  D2.D2 = {intersection_number(fan, 2, 2)}")
    print()

    print("The full 5x5 table includes the two dropped rays:")
    print(matrix_table(intersection_table(fan).full))
    print()

    pres = presentation(fan)
    print("Ring presentation. Linear relations:")
    for form in pres.linear_forms:
        print(f"  {linear_form_str(form)} = 0")
    print(f"vanishing products: "
          + "  ".join(f"x{i}*x{j}" for i, j in pres.nonadjacent_pairs))
    print()

    dropped = express_dropped_divisors(fan)
    print("The dropped divisors in the retained basis:")
    for label, coeffs in zip(("x4", "x5"), dropped):
        print(f"  {label} = {linear_form_str(coeffs[:fan.basis_size])}")
    print()

    print("reduce_quadratic evaluates any quadratic expression in all")
    print("five classes. The product x4*x5 of the two dropped divisors:")
    q = [[0] * 5 for _ in range(5)]
    q[3][4] = 1
    print(f"  x4*x5 = {reduce_quadratic(fan, q)} (times the point class)")


if __name__ == "__main__":
    main()
