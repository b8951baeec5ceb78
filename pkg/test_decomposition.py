"""
Corner classes, model geometries, the weight equation, presentations and base graphs
"""
import pytest

from bordlab.collars import separating_collar
from bordlab.complex import Complex
from bordlab.decomposition import (
    base_graph, corner_classes, fundamental_group, is_crossing, is_mildly_transitive,
    is_two_thirds_transitive, model_geometry, model_group, weight_equation_check,
)
from bordlab.errors import ValidationError


def test_one_vertex_faces_have_one_corner_class(v23):
    for f in range(len(v23.faces)):
        assert corner_classes(v23, f) == [[0, 1, 2]]
        assert not is_crossing(v23, f)


def test_collar_faces_cross(xprime):
    col = separating_collar(xprime, 0, 1)
    for f in col.faces:
        assert len(corner_classes(xprime, f)) == 2


def test_corner_classes_rejects_unknown_face(v23):
    with pytest.raises(ValidationError):
        corner_classes(v23, 8)


def test_weight_equation_on_xprime(xprime):
    eq = weight_equation_check(xprime)
    assert eq.passed
    assert eq.face_sum == 18
    assert eq.segment_sum == 18
    assert len(eq.crossing_faces) == 6


@pytest.mark.parametrize("name", ['v23', 'xprime', 'xpp', 'w158'])
def test_weight_equation_on_corpus(corpus, name):
    assert weight_equation_check(corpus[name]).passed


def test_model_geometry_of_one_vertex_complex(v23):
    geometry = model_geometry(v23, 0)
    assert geometry.loops == list(range(1, 9))
    assert geometry.half_edges == []
    assert geometry.core_faces == list(range(8))
    assert geometry.segments == []


def test_model_geometry_of_xprime(xprime):
    for v in range(2):
        geometry = model_geometry(xprime, v)
        assert geometry.center == v
        assert geometry.loops
        assert geometry.half_edges
        assert sum(s.weight for s in geometry.segments) == 9


def test_model_group_of_v23(v23):
    p = model_group(v23, 0)
    assert p.generators == list(range(1, 9))
    assert p.relators == [list(w) for w in v23.words]


def test_fundamental_group_presentation(v23, xprime):
    p = fundamental_group(v23)
    assert p.generators == list(range(1, 9))
    assert len(p.relators) == 8
    q = fundamental_group(xprime)
    assert len(q.generators) == len(xprime.edges) - 1
    assert len(q.relators) == 16


def test_fundamental_group_needs_connected_complex():
    with pytest.raises(ValidationError):
        fundamental_group(Complex([[1, 1, 2], [3, 3, 4]]))


def test_transitivity(v23, xprime):
    assert is_two_thirds_transitive(v23).passed
    assert is_two_thirds_transitive(xprime).passed
    assert is_mildly_transitive(xprime).passed
    assert not is_two_thirds_transitive(Complex([[1, 2, 3]])).passed


def test_base_graph(v23, xprime):
    assert base_graph(v23).number_of_edges() == 0
    g = base_graph(xprime)
    assert g.number_of_nodes() == 2
    assert list(g.edges()) == [(0, 1)]
