from itertools import product

import pytest

from backend.atlas import (
    PointClass,
    Region,
    atlas_bounds,
    classify_point,
    enumerate_atlas,
    region_max_norm,
)
from backend.errors import DomainError, InvalidIdealError, OutOfRangeError
from backend.field import RingElement, conjugate, make_field, multiply, norm
from backend.ideals import IdealSpec, conjugate_ideal, contains, find_ideal
from backend.sieve import sieve_norms_odd
from backend.verify import verify_points


def points_of(atlas, point_class):
    return {(zeta.x, zeta.y) for zeta, label in atlas if label == point_class}


def test_region_points_are_row_major():
    points = list(Region(0, 1, -1, 0).points())
    assert [(p.x, p.y) for p in points] == [(0, -1), (1, -1), (0, 0), (1, 0)]
    assert RingElement(1, 0) in Region(0, 1, -1, 0)
    assert RingElement(2, 0) not in Region(0, 1, -1, 0)


def test_empty_regions_are_rejected():
    with pytest.raises(DomainError):
        Region(1, 0, 0, 0)
    with pytest.raises(DomainError):
        Region.box(-1)


@pytest.mark.parametrize(
    "r, size, expected",
    [(-1, 10, 200), (2, 10, 200), (-1, 0, 0), (-3, 2, 12), (5, 3, 11), (79, 1, 79)],
)
def test_region_max_norm(r, size, expected):
    assert region_max_norm(make_field(r), Region.box(size)) == expected


@pytest.mark.parametrize("r", [-1, -3, -5, -23, 2, 5, 13, 79])
def test_region_max_norm_is_exact(r):
    f = make_field(r)
    for region in (Region.box(6), Region(-3, 7, -5, 2), Region(2, 9, 1, 4)):
        brute = max(norm(f, zeta) for zeta in region.points())
        assert region_max_norm(f, region) == brute


def test_classify_point_examples(gauss):
    norm_set = sieve_norms_odd(gauss, 100)
    assert classify_point(gauss, norm_set, RingElement(1, 1)) == PointClass.PRIME
    assert classify_point(gauss, norm_set, RingElement(3, 0)) == PointClass.PRIME
    assert classify_point(gauss, norm_set, RingElement(5, 0)) == PointClass.OTHER
    assert classify_point(gauss, norm_set, RingElement(0, 1)) == PointClass.UNIT
    assert classify_point(gauss, norm_set, RingElement(3, 4)) == PointClass.OTHER
    assert classify_point(gauss, norm_set, RingElement(0, 0)) == PointClass.OTHER


def test_classify_point_checks_the_bound(gauss):
    norm_set = sieve_norms_odd(gauss, 10)
    with pytest.raises(OutOfRangeError):
        classify_point(gauss, norm_set, RingElement(3, 3))


def test_gaussian_box_two(gauss):
    region = Region.box(2)
    atlas = enumerate_atlas(gauss, region, sieve_norms_odd(gauss, region_max_norm(gauss, region)))
    assert len(atlas) == 25
    assert points_of(atlas, PointClass.UNIT) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    norm_two = set(product((1, -1), repeat=2))
    norm_five = {(2 * a, b) for a, b in norm_two} | {(a, 2 * b) for a, b in norm_two}
    assert points_of(atlas, PointClass.PRIME) == norm_two | norm_five
    assert (0, 0) in points_of(atlas, PointClass.OTHER)


def test_ideal_points_for_minus_five(minus_five):
    region = Region.box(1)
    ideal = IdealSpec(2, 1)
    atlas = enumerate_atlas(minus_five, region, sieve_norms_odd(minus_five, region_max_norm(minus_five, region)), ideal)
    # [2, 1 + τ] is its own conjugate, so all four points of norm 6 are drawn as I
    assert points_of(atlas, PointClass.IDEAL_I) == {(1, 1), (-1, -1), (1, -1), (-1, 1)}
    assert not points_of(atlas, PointClass.IDEAL_CONJ_I)
    assert points_of(atlas, PointClass.UNIT) == {(1, 0), (-1, 0)}


def test_enumerate_atlas_rejects_invalid_ideal(minus_five):
    with pytest.raises(InvalidIdealError):
        enumerate_atlas(minus_five, Region.box(1), sieve_norms_odd(minus_five, 10), IdealSpec(3, 0))


def test_prime_points_have_prime_norms():
    for r in (-1, -3, -5, 2, 5, 79):
        f = make_field(r)
        region = Region.box(8)
        norm_set = sieve_norms_odd(f, region_max_norm(f, region))
        for zeta, label in enumerate_atlas(f, region, norm_set):
            value = norm(f, zeta)
            assert (label == PointClass.PRIME) == (value in norm_set and value > 1)


def test_atlas_bounds(gauss):
    region = Region(-2, 3, 0, 1)
    atlas = enumerate_atlas(gauss, region, sieve_norms_odd(gauss, region_max_norm(gauss, region)))
    assert atlas_bounds(atlas) == region
    assert atlas_bounds([]) is None


@pytest.mark.slow
@pytest.mark.parametrize("r", [-1, -3])
def test_points_match_irreducibility_oracle(r):
    assert verify_points(make_field(r), 40) == []


SWAPPED = {PointClass.IDEAL_I: PointClass.IDEAL_CONJ_I, PointClass.IDEAL_CONJ_I: PointClass.IDEAL_I}


def atlas_with_ideal(r, size):
    f = make_field(r)
    region = Region.box(size)
    ideal = find_ideal(f)
    atlas = enumerate_atlas(f, region, sieve_norms_odd(f, region_max_norm(f, region)), ideal)
    return f, ideal, dict(atlas)


@pytest.mark.parametrize("r", [-5, -6, -10, -13, -14, -15, -23, -26, 10, 15, 26, 79, 229])
def test_conjugation_swaps_ideal_classes(r):
    f, ideal, labels = atlas_with_ideal(r, 8)
    conj_ideal = conjugate_ideal(f, ideal)
    assert conj_ideal != ideal
    for zeta, label in labels.items():
        partner = conjugate(f, zeta)
        if partner not in labels:
            continue
        if contains(f, ideal, zeta) and contains(f, conj_ideal, zeta):
            # in both I and its conjugate: labelled I on both sides
            assert labels[partner] == label, (zeta, partner)
        else:
            assert labels[partner] == SWAPPED.get(label, label), (zeta, partner)
    if f.is_complex:
        assert PointClass.IDEAL_CONJ_I in labels.values()


def units_in(f, labels):
    return [zeta for zeta, label in labels.items() if label == PointClass.UNIT]


@pytest.mark.parametrize("r", [-1, -2, -3, -7, -11, -5, -23, 2, 3, 5, 6, 7, 13, 10, 79])
def test_associates_share_a_class(r):
    f, _, labels = atlas_with_ideal(r, 10)
    units = units_in(f, labels)
    assert units
    for zeta, label in labels.items():
        for unit in units:
            associate = multiply(f, unit, zeta)
            if associate in labels:
                assert labels[associate] == label, (zeta, unit, associate)
