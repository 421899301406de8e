"""Building blocks: complete fans, their validation, and polygon input.

A complete fan is described by its rays: primitive integer vectors
listed counterclockwise, winding exactly once around the origin.
Indices are 1-based and cyclic. This demo builds fans directly and via
the normal fan of a lattice polygon, shows what validation rejects, and
moves a fan into the normal form the cup product formula expects.
"""

from toricsurf import (
    Polygon,
    ToricSurfError,
    multiplicity,
    normal_fan,
    normalize,
    rays_table,
    validate_fan,
    wall_relation,
)

RAYS = [(-2, 1), (-2, -1), (1, -2), (1, 0), (0, 1)]


def main() -> None:
    fan = validate_fan(RAYS)
    print("A five-ray complete fan:")
    print(rays_table(fan.rays))
    print(f"rays: {fan.ray_count}, basis size: {fan.basis_size}")
    print()

    print("Each pair of consecutive rays spans a cone; its multiplicity")
    print("is the determinant of the two generators (1 means smooth):")
    for i in range(1, fan.ray_count + 1):
        print(f"  cone {i}: mult = {multiplicity(fan, i)}")
    print()

    print("Three consecutive rays always satisfy one integer relation")
    print("c_prev * ray[i-1] + c_mid * ray[i] + c_next * ray[i+1] = 0:")
    for i in range(1, fan.ray_count + 1):
        rel = wall_relation(fan, i)
        print(f"  around ray {i}: {tuple(rel)}")
    print()

    print("Validation is strict. Some inputs that are rejected:")
    for label, rays in [
        ("non-primitive ray", [(2, 0), (0, 1), (-1, -1)]),
        ("clockwise order", [(0, 1), (1, 0), (-1, -1)]),
        ("winds twice around", [(1, 0), (-1, 1), (1, -3), (1, 3), (-1, -1)]),
    ]:
        try:
            validate_fan(rays)
        except ToricSurfError as exc:
            print(f"  {label}: {type(exc).__name__}: {exc}")
    print()

    square = Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))
    fan_sq = normal_fan(square)
    print("The normal fan of the unit square (outward edge normals):")
    print(rays_table(fan_sq.rays))
    print()

    normalized, basis_map, shift = normalize(fan_sq)
    print("normalize() relabels cyclically and applies a determinant-1")
    print("integer basis change so the second-to-last ray is (1, 0):")
    print(rays_table(normalized.rays))
    print(f"basis map rows: {basis_map.rows()}, label shift: {shift}")
    print("(this is the fan of the product of two projective lines)")


if __name__ == "__main__":
    main()
