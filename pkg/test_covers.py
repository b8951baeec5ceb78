"""
Z/2 cocycles, double covers, covering maps and free involutions
"""
from collections import Counter

import pytest

from bordlab.collars import classify_nerve, separating_collar
from bordlab.covers import (
    Cocycle2, cocycle_classes, cohomology_dimension, cover_from_cocycle, enumerate_double_covers,
    face_permutation, find_free_involution, is_free_involution, projection, sheet_swap, verify_cover,
)
from bordlab.complex import Complex
from bordlab.errors import ValidationError
from bordlab.isomorphism import isomorphic


def test_v23_has_one_double_cover(v23):
    assert cohomology_dimension(v23) == 1
    assert len(cocycle_classes(v23)) == 1
    covers = enumerate_double_covers(v23)
    assert len(covers) == 1


def test_double_cover_of_v23_is_xprime(v23, xprime):
    cover = enumerate_double_covers(v23)[0].cover
    assert len(cover.faces) == 16
    assert cover.vertex_count == 2
    assert isomorphic(cover, xprime) is not None


def test_cocycles_vanish_on_faces(v23):
    for z in cocycle_classes(v23):
        assert z.is_cocycle(v23)
        assert z.support()


def test_projection_is_a_covering_map(v23):
    found = enumerate_double_covers(v23)[0]
    verdict = verify_cover(found.cover, v23, found.edge_map)
    assert verdict.passed, verdict.problems


def test_xprime_covers_v23_by_dropping_the_tens_digit(v23, xprime):
    edge_map = {e: e % 10 for e in xprime.edges}
    assert verify_cover(xprime, v23, edge_map).passed


def test_broken_map_fails(v23, xprime):
    edge_map = {e: e % 10 for e in xprime.edges}
    edge_map[11] = 2
    verdict = verify_cover(xprime, v23, edge_map)
    assert not verdict.passed
    assert verdict.problems


def test_partial_map_rejected(v23, xprime):
    with pytest.raises(ValidationError):
        verify_cover(xprime, v23, {1: 1})


def test_sheet_swap_is_free_involution(v23):
    cover = enumerate_double_covers(v23)[0].cover
    assert is_free_involution(cover, sheet_swap(v23))
    assert not is_free_involution(cover, {e: e for e in cover.edges})


def test_xprime_has_a_deck_transformation(xprime):
    assert find_free_involution(xprime) is not None


def test_xpp_is_not_a_double_cover(xpp):
    assert find_free_involution(xpp) is None


def test_covers_of_v23_have_allowed_collars(v23):
    for found in enumerate_double_covers(v23):
        c = found.cover
        assert classify_nerve(separating_collar(c, 0, 1)) in {'S', 'cubic', 'theta', 'octagonal'}


def test_non_cocycle_rejected(v23):
    with pytest.raises(ValidationError):
        cover_from_cocycle(v23, Cocycle2({3: 1}))


def test_projection_labels(v23):
    mapping = projection(v23)
    assert Counter(mapping.values()) == Counter({e: 2 for e in v23.edges})


def test_duplicate_faces_can_be_swapped():
    doubled = Complex([[1, 2, 1, 2], [1, 2, 1, 2]])
    swap = {1: 2, 2: 1}
    assert face_permutation(doubled, swap) == [1, 0]
    assert is_free_involution(doubled, swap)


def test_single_face_fixed_by_the_swap():
    single = Complex([[1, 2, 1, 2]])
    assert face_permutation(single, {1: 2, 2: 1}) == [0]
    assert not is_free_involution(single, {1: 2, 2: 1})


def test_face_permutation_between_classes():
    c = Complex([[1, 2, 3], [4, 5, 6]])
    assert face_permutation(c, {1: 4, 2: 5, 3: 6, 4: 1, 5: 2, 6: 3}) == [1, 0]
