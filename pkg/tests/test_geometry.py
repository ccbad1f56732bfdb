from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.geometry import (
    ColoredConfiguration,
    TverbergWitness,
    common_point_feasible,
    determinant,
    format_point,
    format_rational,
    general_position_check,
    parse_rational,
    random_configuration,
    scale_configuration,
    verify_witness,
)


CROSSING = [[(0, 0), (2, 2)], [(0, 2), (2, 0)]]


@pytest.mark.parametrize('value,expected', [
    ('3/4', Fraction(3, 4)),
    ('-2', Fraction(-2)),
    (' 6/8 ', Fraction(3, 4)),
    (5, Fraction(5)),
    (Fraction(1, 3), Fraction(1, 3)),
])
def test_parse_rational(value, expected):
    assert parse_rational(value) == expected


@pytest.mark.parametrize('value', [0.5, '0.5', '1e3', '1/0', '', 'abc', True, None])
def test_parse_rational_rejects_inexact_input(value):
    with pytest.raises(ValueError):
        parse_rational(value)


def test_format_rational():
    assert format_rational(2) == '2/1'
    assert format_rational(Fraction(-6, 4)) == '-3/2'
    assert format_point((Fraction(1, 2), 3)) == ['1/2', '3/1']


def test_determinant():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[1, 2], [2, 4]]) == 0
    assert determinant([[Fraction(1, 2), 0, 0], [0, 3, 0], [0, 0, 4]]) == 6
    with pytest.raises(ValueError):
        determinant([[1, 2, 3], [4, 5, 6]])


def test_crossing_segments():
    witness = common_point_feasible(CROSSING)
    assert witness is not None
    assert witness.common_point == (1, 1)
    assert witness.coefficients == ({0: Fraction(1, 2), 1: Fraction(1, 2)}, {2: Fraction(1, 2), 3: Fraction(1, 2)})
    assert verify_witness(CROSSING, witness)
    assert witness.to_dict()['common_point'] == ['1/1', '1/1']


def test_custom_labels_appear_in_witness():
    witness = common_point_feasible(CROSSING, labels=[[0, 3], [1, 4]])
    assert set(witness.coefficients[0]) == {0, 3}
    assert set(witness.coefficients[1]) == {1, 4}
    assert verify_witness(CROSSING, witness, labels=[[0, 3], [1, 4]])


def test_tampered_witnesses_are_rejected():
    half = Fraction(1, 2)
    negated = TverbergWitness(coefficients=({0: -half, 1: -half}, {2: half, 3: half}), common_point=(1, 1))
    assert not verify_witness(CROSSING, negated)
    not_convex = TverbergWitness(coefficients=({0: half, 1: Fraction(1, 4)}, {2: half, 3: half}),
                                 common_point=(1, 1))
    assert not verify_witness(CROSSING, not_convex)
    wrong_point = TverbergWitness(coefficients=({0: half, 1: half}, {2: half, 3: half}), common_point=(1, 2))
    assert not verify_witness(CROSSING, wrong_point)
    floats = TverbergWitness(coefficients=({0: 0.5, 1: 0.5}, {2: half, 3: half}), common_point=(1, 1))
    assert not verify_witness(CROSSING, floats)
    unknown = TverbergWitness(coefficients=({7: Fraction(1)}, {2: half, 3: half}), common_point=(1, 1))
    assert not verify_witness(CROSSING, unknown)


def test_separated_triangles():
    left = [(0, 0), (1, 0), (0, 1)]
    right = [(3, 3), (4, 3), (3, 4)]
    assert common_point_feasible([left, right]) is None


def test_point_inside_triangle():
    witness = common_point_feasible([[(2, 1)], [(0, 0), (4, 0), (2, 3)]])
    assert witness is not None
    assert witness.common_point == (2, 1)


def test_three_faces_sharing_a_vertex_region():
    faces = [[(0, 0), (2, 0), (0, 2)], [(1, 1)], [(0, 0), (2, 2)]]
    witness = common_point_feasible(faces)
    assert witness.common_point == (1, 1)


def test_single_face_is_always_feasible():
    witness = common_point_feasible([[(3, 4), (5, 6)]])
    assert witness is not None
    assert verify_witness([[(3, 4), (5, 6)]], witness)


def test_feasibility_input_validation():
    with pytest.raises(ValueError):
        common_point_feasible([])
    with pytest.raises(ValueError):
        common_point_feasible([[(0, 0)], []])
    with pytest.raises(ValueError):
        common_point_feasible([[(0, 0)], [(1, 1, 1)]])


def test_general_position():
    square = ColoredConfiguration.uncolored([(0, 0), (1, 0), (0, 1), (1, 1)], d=2)
    assert general_position_check(square)
    collinear = ColoredConfiguration.uncolored([(0, 0), (1, 1), (2, 2)], d=2)
    assert not general_position_check(collinear)
    repeated = ColoredConfiguration.uncolored([(0,), (1,), (1,)], d=1)
    assert not general_position_check(repeated)


@pytest.mark.parametrize('kwargs', [
    dict(d=2, points=((0, 0), (1, 1)), color_classes=((0, 1), (1,))),
    dict(d=2, points=((0, 0), (1, 1)), color_classes=((0,),)),
    dict(d=2, points=((0, 0),), color_classes=((0, 1),)),
    dict(d=2, points=((0, 0, 0),), color_classes=((0,),)),
    dict(d=0, points=((),), color_classes=((0,),)),
    dict(d=1, points=((0,), (1,)), color_classes=((0, 1.5),)),
    dict(d=1, points=((0,), (1,)), color_classes=((0, 1.0),)),
    dict(d=1, points=((0,), (1,)), color_classes=((0, '1'),)),
    dict(d=1, points=((0,), (1,)), color_classes=((0, True),)),
])
def test_configuration_validation(kwargs):
    with pytest.raises(ValueError):
        ColoredConfiguration(**kwargs)


def test_configuration_normalizes_classes():
    config = ColoredConfiguration(d=1, points=((0,), (1,), (2,)), color_classes=((2, 0), (), (1,)))
    assert config.color_classes == ((0, 2), (), (1,))
    assert config.cards == (2, 0, 1)
    assert config.color_of(2) == 0
    assert config.to_dict() == {'dimension': 1, 'points': [['0/1'], ['1/1'], ['2/1']], 'colors': [[0, 2], [], [1]]}


def test_random_configuration_is_deterministic():
    a = random_configuration(2, (3, 2, 2), seed=17)
    b = random_configuration(2, (3, 2, 2), seed=17)
    c = random_configuration(2, (3, 2, 2), seed=18)
    assert a == b
    assert a.digest() == b.digest()
    assert a.digest() != c.digest()


def test_random_configuration_shape_and_bounds():
    config = random_configuration(3, (2, 0, 3), seed=5, coordinate_bound=10, max_denominator=7)
    assert config.cards == (2, 0, 3)
    assert config.color_classes == ((0, 1), (), (2, 3, 4))
    for p in config.points:
        for x in p:
            assert 0 <= x <= 10
            assert 1 <= x.denominator <= 7
    assert general_position_check(config)


@pytest.mark.parametrize('kwargs', [
    dict(d=0, cards=(1,), seed=1),
    dict(d=2, cards=(), seed=1),
    dict(d=2, cards=(1, -1), seed=1),
    dict(d=2, cards=(1,), seed=-1),
])
def test_random_configuration_rejects_bad_arguments(kwargs):
    with pytest.raises(ValueError):
        random_configuration(**kwargs)


def test_scale_configuration():
    config = random_configuration(2, (2, 2), seed=3)
    scaled = scale_configuration(config, '3/2')
    assert scaled.points[0] == tuple(Fraction(3, 2) * x for x in config.points[0])
    with pytest.raises(ValueError):
        scale_configuration(config, 0)


@given(seed=st.integers(0, 10_000), factor=st.fractions(min_value=Fraction(1, 10), max_value=10))
@settings(max_examples=60, deadline=None)
def test_feasibility_is_scale_invariant(seed, factor):
    assume(factor > 0)
    config = random_configuration(2, (2, 2), seed=seed)
    scaled = scale_configuration(config, factor)
    before = common_point_feasible([config.points[:2], config.points[2:]])
    after = common_point_feasible([scaled.points[:2], scaled.points[2:]])
    assert (before is None) == (after is None)


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(a, b, p):
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _segments_meet(p1, p2, q1, q2):
    d1, d2 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    d3, d4 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        return True
    return ((d1 == 0 and _on_segment(q1, q2, p1)) or (d2 == 0 and _on_segment(q1, q2, p2))
            or (d3 == 0 and _on_segment(p1, p2, q1)) or (d4 == 0 and _on_segment(p1, p2, q2)))


def _in_triangle(p, a, b, c):
    s = [_orient(a, b, p), _orient(b, c, p), _orient(c, a, p)]
    return all(x >= 0 for x in s) or all(x <= 0 for x in s)


small_points = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


@given(p1=small_points, p2=small_points, q1=small_points, q2=small_points)
@settings(max_examples=300, deadline=None)
def test_segment_intersection_matches_orientation_oracle(p1, p2, q1, q2):
    witness = common_point_feasible([[p1, p2], [q1, q2]])
    assert (witness is not None) == _segments_meet(p1, p2, q1, q2)


@given(p=small_points, a=small_points, b=small_points, c=small_points)
@settings(max_examples=300, deadline=None)
def test_point_in_triangle_matches_orientation_oracle(p, a, b, c):
    assume(_orient(a, b, c) != 0)
    witness = common_point_feasible([[p], [a, b, c]])
    assert (witness is not None) == _in_triangle(p, a, b, c)


def test_numpy_integer_indices_are_accepted():
    config = ColoredConfiguration(d=1, points=((0,), (1,)), color_classes=(tuple(np.arange(2)),))
    assert config.color_classes == ((0, 1),)
    assert all(type(i) is int for i in config.color_classes[0])
