import random

import pytest

from toricsurf import (
    DegeneratePolygonError,
    DuplicateRayError,
    Fan,
    GenerationFailedError,
    NotCompleteError,
    NotCounterclockwiseError,
    NotPrimitiveError,
    Polygon,
    TooFewRaysError,
    UnimodularMap,
    det2,
    has_smooth_vertex,
    is_smooth_cone,
    multiplicity,
    normal_fan,
    normalize,
    random_complete_fan,
    validate_fan,
    wall_relation,
)
from conftest import MIXED_RAYS


def random_unimodular(rng: random.Random) -> UnimodularMap:
    """Product of a few random shears: always determinant +1."""
    m = UnimodularMap.identity()
    for _ in range(rng.randint(1, 4)):
        k = rng.randint(-5, 5)
        if rng.random() < 0.5:
            m = m.compose(UnimodularMap(1, k, 0, 1))
        else:
            m = m.compose(UnimodularMap(1, 0, k, 1))
    return m


def mapped_fan(fan: Fan, m: UnimodularMap) -> Fan:
    return Fan(tuple(m.apply(r) for r in fan.rays))


class TestValidation:
    def test_mixed_fan_is_valid(self, mixed_fan):
        assert mixed_fan.ray_count == 5
        assert mixed_fan.basis_size == 3
        assert mixed_fan.ray(1) == (-2, 1)
        assert mixed_fan.ray(5) == (0, 1)
        assert mixed_fan.is_normalized()

    def test_p2_valid_in_any_cyclic_labeling(self):
        base = [(1, 0), (0, 1), (-1, -1)]
        for s in range(3):
            validate_fan(base[s:] + base[:s])

    def test_too_few_rays(self):
        with pytest.raises(TooFewRaysError):
            validate_fan([(1, 0), (-1, 0)])

    def test_not_primitive_with_index(self):
        with pytest.raises(NotPrimitiveError) as exc:
            validate_fan([(1, 0), (2, 0), (0, 1)])
        assert exc.value.index == 2

    def test_zero_ray_rejected(self):
        with pytest.raises(NotPrimitiveError):
            validate_fan([(1, 0), (0, 0), (0, 1)])

    def test_duplicate_ray_with_positions(self):
        with pytest.raises(DuplicateRayError) as exc:
            validate_fan([(1, 0), (0, 1), (1, 0)])
        assert (exc.value.first, exc.value.second) == (1, 3)

    def test_clockwise_pair_rejected(self):
        with pytest.raises(NotCounterclockwiseError) as exc:
            validate_fan([(1, 0), (1, 1), (1, 2)])
        assert exc.value.index == 3

    def test_opposite_consecutive_rays_rejected(self):
        # Zero determinant counts as not counterclockwise, not as complete.
        with pytest.raises(NotCounterclockwiseError):
            validate_fan([(1, 0), (-1, 0), (0, -1)])

    def test_double_winding_rejected(self):
        # Every consecutive determinant is positive here, yet the rays
        # wind twice around the origin.
        rays = [(1, 0), (-1, 1), (1, -3), (1, 3), (-1, -1)]
        for i in range(5):
            assert det2(rays[i], rays[(i + 1) % 5]) > 0
        with pytest.raises(NotCompleteError):
            validate_fan(rays)

    def test_ray_accessor_bounds(self, mixed_fan):
        with pytest.raises(IndexError):
            mixed_fan.ray(0)
        with pytest.raises(IndexError):
            mixed_fan.ray(6)
        assert mixed_fan.ray_cyclic(6) == mixed_fan.ray(1)
        assert mixed_fan.ray_cyclic(0) == mixed_fan.ray(5)


class TestMultiplicity:
    def test_mixed_fan_values(self, mixed_fan):
        assert [multiplicity(mixed_fan, i) for i in range(1, 6)] == [4, 5, 2, 1, 2]

    def test_index_out_of_range(self, mixed_fan):
        with pytest.raises(IndexError):
            multiplicity(mixed_fan, 0)
        with pytest.raises(IndexError):
            multiplicity(mixed_fan, 6)

    def test_always_positive_on_random_fans(self):
        for seed in range(10):
            f = random_complete_fan(3 + seed, 9, seed)
            for i in range(1, f.ray_count + 1):
                assert multiplicity(f, i) > 0


class TestWallRelation:
    def test_mixed_fan_values(self, mixed_fan):
        assert tuple(wall_relation(mixed_fan, 1)) == (2, -1, 1)
        assert tuple(wall_relation(mixed_fan, 2)) == (5, -3, 4)
        assert tuple(wall_relation(mixed_fan, 3)) == (2, -1, 5)

    def test_opposite_rays_give_zero_middle(self, p1xp1_fan):
        assert tuple(wall_relation(p1xp1_fan, 1)) == (1, 0, 1)

    def test_index_out_of_range(self, mixed_fan):
        with pytest.raises(IndexError):
            wall_relation(mixed_fan, 6)

    def test_defining_identity_and_normalization(self):
        import math
        for seed in range(12):
            f = random_complete_fan(3 + seed % 8, 10, 100 + seed)
            k = f.ray_count
            for i in range(1, k + 1):
                rel = wall_relation(f, i)
                prev, mid, nxt = f.ray_cyclic(i - 1), f.ray(i), f.ray_cyclic(i + 1)
                x = rel.c_prev * prev.a + rel.c_mid * mid.a + rel.c_next * nxt.a
                y = rel.c_prev * prev.b + rel.c_mid * mid.b + rel.c_next * nxt.b
                assert (x, y) == (0, 0)
                assert rel.c_prev > 0 and rel.c_next > 0
                assert math.gcd(rel.c_prev, rel.c_mid, rel.c_next) == 1


class TestNormalize:
    def test_mixed_fan_already_normal(self, mixed_fan):
        fan, m, shift = normalize(mixed_fan, 4)
        assert fan == mixed_fan
        assert m == UnimodularMap.identity()
        assert shift == 0

    def test_default_pivot_is_second_to_last(self, mixed_fan):
        assert normalize(mixed_fan) == normalize(mixed_fan, 4)

    def test_p2_relabeling_example(self):
        fan, m, shift = normalize(validate_fan([(0, -1), (1, 1), (-1, 0)]), 3)
        assert [tuple(r) for r in fan.rays] == [(-1, -1), (1, 0), (0, 1)]
        assert m.rows() == ((-1, 0), (0, -1))
        assert shift == 1

    def test_pivot_out_of_range(self, mixed_fan):
        with pytest.raises(IndexError):
            normalize(mixed_fan, 0)
        with pytest.raises(IndexError):
            normalize(mixed_fan, 6)

    def test_postconditions_for_every_pivot(self, mixed_fan):
        for pivot in range(1, 6):
            fan, m, shift = normalize(mixed_fan, pivot)
            assert fan.rays[-2] == (1, 0)
            assert fan.rays[-1].b > 0
            assert m.det == 1
            # Output ray at position p is the map applied to the input
            # ray at position p + shift.
            for p in range(1, 6):
                assert fan.ray(p) == m.apply(mixed_fan.ray_cyclic(p + shift))

    def test_multiplicities_shift_with_relabeling(self, mixed_fan):
        fan, _, shift = normalize(mixed_fan, 2)
        k = mixed_fan.ray_count
        for i in range(1, k + 1):
            original_cone = (i - 1 + shift) % k + 1
            assert multiplicity(fan, i) == multiplicity(mixed_fan, original_cone)


class TestNormalFan:
    def test_unit_square(self):
        fan = normal_fan(Polygon(((0, 0), (1, 0), (1, 1), (0, 1))))
        assert [tuple(r) for r in fan.rays] == [(0, -1), (1, 0), (0, 1), (-1, 0)]

    def test_standard_triangle(self):
        fan = normal_fan(Polygon(((0, 0), (1, 0), (0, 1))))
        assert [tuple(r) for r in fan.rays] == [(0, -1), (1, 1), (-1, 0)]

    def test_translation_invariance(self):
        square = Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))
        moved = Polygon(((5, 7), (6, 7), (6, 8), (5, 8)))
        assert normal_fan(square) == normal_fan(moved)

    def test_long_edges_are_primitivized(self):
        fan = normal_fan(Polygon(((0, 0), (4, 0), (4, 6), (0, 6))))
        assert [tuple(r) for r in fan.rays] == [(0, -1), (1, 0), (0, 1), (-1, 0)]

    def test_collinear_vertices_rejected(self):
        with pytest.raises(DegeneratePolygonError):
            Polygon(((0, 0), (1, 0), (2, 0), (0, 1)))

    def test_clockwise_rejected(self):
        with pytest.raises(DegeneratePolygonError):
            Polygon(((0, 0), (0, 1), (1, 1), (1, 0)))

    def test_repeated_vertex_rejected(self):
        with pytest.raises(DegeneratePolygonError):
            Polygon(((0, 0), (0, 0), (1, 0), (0, 1)))

    def test_too_few_vertices(self):
        with pytest.raises(DegeneratePolygonError):
            Polygon(((0, 0), (1, 0)))


class TestSmoothness:
    def test_mixed_fan_has_one_smooth_cone(self, mixed_fan):
        assert has_smooth_vertex(mixed_fan)
        assert [is_smooth_cone(mixed_fan, i) for i in range(1, 6)] == [
            False, False, False, True, False]

    def test_fan_without_smooth_cone(self):
        f = validate_fan([(1, 2), (-1, 0), (1, -2)])
        assert [multiplicity(f, i) for i in range(1, 4)] == [2, 2, 4]
        assert not has_smooth_vertex(f)

    def test_p2_all_smooth(self, p2_fan):
        assert all(is_smooth_cone(p2_fan, i) for i in range(1, 4))


class TestRandomFan:
    def test_reproducible(self):
        a = random_complete_fan(7, 15, 99)
        b = random_complete_fan(7, 15, 99)
        assert a == b

    def test_different_seeds_differ(self):
        assert random_complete_fan(7, 15, 1) != random_complete_fan(7, 15, 2)

    def test_postconditions(self):
        for ray_count in range(3, 13):
            f = random_complete_fan(ray_count, 10, ray_count * 31)
            assert f.ray_count == ray_count
            assert f.ray(ray_count - 1) == (1, 0)
            assert normalize(f)[0] == f

    def test_small_bound_works(self):
        f = random_complete_fan(3, 1, 5)
        assert f.ray_count == 3

    def test_bound_with_too_few_directions(self):
        # Only 8 primitive directions fit in a unit box.
        with pytest.raises(GenerationFailedError):
            random_complete_fan(9, 1, 0)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            random_complete_fan(2, 5, 0)
        with pytest.raises(ValueError):
            random_complete_fan(3, 0, 0)


class TestUnimodularInvariance:
    def test_multiplicities_and_walls_preserved(self):
        rng = random.Random(7)
        for seed in range(10):
            f = random_complete_fan(3 + seed, 10, 500 + seed)
            g = mapped_fan(f, random_unimodular(rng))
            k = f.ray_count
            for i in range(1, k + 1):
                assert multiplicity(g, i) == multiplicity(f, i)
                assert wall_relation(g, i) == wall_relation(f, i)

    def test_mapped_mixed_fan_still_valid(self, mixed_fan):
        rng = random.Random(3)
        for _ in range(20):
            mapped_fan(mixed_fan, random_unimodular(rng))


def test_validate_fan_equals_constructor():
    assert validate_fan(MIXED_RAYS) == Fan(MIXED_RAYS)
