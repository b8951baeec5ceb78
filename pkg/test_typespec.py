"""
Type membership, strict types and the girth curvature check
"""
import pytest

from bordlab.complex import Complex
from bordlab.errors import ValidationError
from bordlab.typespec import (
    TypeSpec, affiliated_names, builtin_type, check_type, curvature_check, interior_vertices,
    link_summary,
)


def test_v23_is_rank74(v23):
    verdict = check_type(v23, builtin_type('rank74'))
    assert verdict.passed
    assert verdict.vertices[0].match == 'moebius_kantor'
    assert verdict.vertices[0].girth == 6


def test_xprime_is_rank74(xprime):
    assert check_type(xprime, builtin_type('rank74')).passed


def test_xpp_fails_rank74_with_girth_diagnostics(xpp):
    verdict = check_type(xpp, builtin_type('rank74'))
    assert not verdict.passed
    assert [d.girth for d in verdict.vertices] == [5, 5]
    assert all(d.match is None for d in verdict.vertices)


def test_xpp_is_its_own_fake_type(xpp):
    assert check_type(xpp, builtin_type('fake74')).passed


def test_w158_strict_type(w158):
    assert check_type(w158, builtin_type('rank158'), strict=True).passed
    assert not check_type(w158, builtin_type('rank74')).passed
    assert affiliated_names(w158) == ['heawood', 'moebius_kantor']


def test_strict_reports_missing_links(v23):
    verdict = check_type(v23, builtin_type('rank158'), strict=True)
    assert not verdict.passed
    assert verdict.missing == ['heawood']
    assert check_type(v23, builtin_type('rank158')).passed


@pytest.mark.parametrize("name, passed", [('v23', True), ('xprime', True), ('w158', True), ('xpp', False)])
def test_curvature(corpus, name, passed):
    verdict = curvature_check(corpus[name])
    assert verdict.passed is passed
    if not passed:
        assert verdict.failures == [0, 1]


def test_boundary_vertices_are_not_checked():
    c = Complex([[1, 2, 3]])
    assert interior_vertices(c) == []
    verdict = check_type(c, builtin_type('rank74'))
    assert verdict.passed
    assert not any(d.interior for d in verdict.vertices)


def test_non_triangles_rejected():
    with pytest.raises(ValidationError):
        check_type(Complex([[1, 2, 3, 4]]), builtin_type('rank74'))


def test_unknown_type_and_empty_type():
    with pytest.raises(ValidationError):
        builtin_type('rank99')
    with pytest.raises(ValidationError):
        TypeSpec('nothing', ())


def test_link_summary(w158):
    names = {link_summary(w158, v).name for v in range(w158.vertex_count)}
    assert names == {'heawood', 'moebius_kantor'}
