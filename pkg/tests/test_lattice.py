import math

import pytest
from hypothesis import given, strategies as st

from toricsurf import (
    LatticeVector,
    NotPrimitiveError,
    UnimodularMap,
    ZeroVectorError,
    ccw_compare,
    det2,
    ext_gcd,
    primitivize,
    unimodular_to_e1,
)

coords = st.integers(min_value=-10**6, max_value=10**6)
vectors = st.tuples(coords, coords).filter(lambda v: v != (0, 0))
primitive_vectors = vectors.map(lambda v: primitivize(v)[0])


class TestPrimitivize:
    def test_gcd_extraction(self):
        assert primitivize((4, -6)) == ((2, -3), 2)

    def test_already_primitive(self):
        assert primitivize((1, 0)) == ((1, 0), 1)

    def test_axis_case(self):
        assert primitivize((0, -5)) == ((0, -1), 5)

    def test_zero_vector_rejected(self):
        with pytest.raises(ZeroVectorError):
            primitivize((0, 0))

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            primitivize((1.0, 2))

    @given(vectors)
    def test_reconstruction_and_idempotence(self, v):
        v0, k = primitivize(v)
        assert k >= 1
        assert (k * v0.a, k * v0.b) == v
        assert math.gcd(v0.a, v0.b) == 1
        assert primitivize(v0) == (v0, 1)


class TestDet2:
    def test_example_multiplicity(self):
        assert det2((-2, 1), (-2, -1)) == 4

    def test_standard_basis(self):
        assert det2((1, 0), (0, 1)) == 1

    def test_parallel_vectors(self):
        assert det2((1, 2), (2, 4)) == 0

    @given(vectors, vectors)
    def test_antisymmetry(self, u, v):
        assert det2(u, v) == -det2(v, u)

    @given(vectors, vectors, st.integers(min_value=-50, max_value=50))
    def test_linearity_in_first_argument(self, u, v, c):
        scaled = (c * u[0], c * u[1])
        assert det2(scaled, v) == c * det2(u, v)


class TestExtGcd:
    @given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
    def test_bezout(self, a, b):
        g, x, y = ext_gcd(a, b)
        assert g == math.gcd(a, b)
        assert a * x + b * y == g

    def test_zero_pair(self):
        assert ext_gcd(0, 0) == (0, 0, 0)


class TestUnimodularMap:
    def test_identity(self):
        ident = UnimodularMap.identity()
        assert ident.apply((3, -7)) == (3, -7)

    def test_determinant_must_be_plus_one(self):
        with pytest.raises(ValueError):
            UnimodularMap(1, 0, 0, -1)
        with pytest.raises(ValueError):
            UnimodularMap(2, 0, 0, 1)

    def test_inverse_composes_to_identity(self):
        m = UnimodularMap(2, 1, 3, 2)
        assert m.compose(m.inverse()) == UnimodularMap.identity()
        assert m.inverse().compose(m) == UnimodularMap.identity()

    def test_compose_applies_right_map_first(self):
        shear = UnimodularMap(1, 1, 0, 1)
        rot = UnimodularMap(0, 1, -1, 0)
        v = (2, 5)
        assert rot.compose(shear).apply(v) == rot.apply(shear.apply(v))


class TestUnimodularToE1:
    def test_already_normalized(self):
        assert unimodular_to_e1((1, 0)) == UnimodularMap.identity()

    def test_quarter_rotation(self):
        assert unimodular_to_e1((0, 1)) == UnimodularMap(0, 1, -1, 0)

    def test_negative_axis(self):
        assert unimodular_to_e1((-1, 0)) == UnimodularMap(-1, 0, 0, -1)

    def test_non_primitive_rejected(self):
        with pytest.raises(NotPrimitiveError):
            unimodular_to_e1((2, 4))

    @given(primitive_vectors)
    def test_maps_input_to_e1_with_det_one(self, v):
        m = unimodular_to_e1(v)
        assert m.apply(v) == (1, 0)
        assert m.det == 1

    @given(primitive_vectors)
    def test_first_row_is_minimal_bezout_pair(self, v):
        m = unimodular_to_e1(v)
        x = m.m11
        if v[1] != 0:
            # Solutions differ by multiples of v.b, so the canonical |x|
            # is at most |v.b| / 2, with ties broken toward x >= 0.
            assert abs(x) <= abs(v[1]) // 2
            if 2 * abs(x) == abs(v[1]):
                assert x >= 0
        else:
            assert m.m12 == 0


class TestCcwCompare:
    def test_equal_vectors(self):
        assert ccw_compare((3, 4), (3, 4)) == 0

    def test_orders_by_angle_from_positive_x_axis(self):
        ordered = [(1, 0), (2, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]
        for i in range(len(ordered)):
            for j in range(len(ordered)):
                expected = (i > j) - (i < j)
                assert ccw_compare(ordered[i], ordered[j]) == expected

    def test_scaling_does_not_change_angle(self):
        assert ccw_compare((1, 2), (2, 4)) == 0
        assert ccw_compare((1, 2), (-2, -4)) == -1

    @given(vectors, vectors, vectors)
    def test_transitive_on_samples(self, u, v, w):
        if ccw_compare(u, v) < 0 and ccw_compare(v, w) < 0:
            assert ccw_compare(u, w) < 0


def test_lattice_vector_is_plain_tuple():
    v = LatticeVector(2, -3)
    assert v == (2, -3)
    a, b = v
    assert (a, b) == (2, -3)
    assert -v == (-2, 3)
