"""
Separating collars, nerve classification, predicates and the cubic multigraph lemma
"""
import pytest

from bordlab.catalog import identify_graph, nerve
from bordlab.complex import Complex
from bordlab.collars import (
    boundary_minus, boundary_plus, classify_nerve, collar_from_nerve, collar_predicates,
    dual_collar, h_collar_certificate, realize_nerve, separating_collar, st_lemma_enumerate,
)
from bordlab.errors import ValidationError


def test_xprime_collar_is_S(xprime):
    col = separating_collar(xprime, 0, 1)
    assert classify_nerve(col) == 'S'
    assert len(col.faces) == 6
    assert col.nerve.number_of_nodes() == 4
    assert col.nerve.number_of_edges() == 6
    assert sorted(col.colors) == ['x'] * 3 + ['y'] * 3


def test_xpp_collar_is_T(xpp):
    assert classify_nerve(separating_collar(xpp, 0, 1)) == 'T'


def test_w158_collar(w158):
    col = separating_collar(w158, 0, 1)
    assert len(col.faces) == 9
    assert col.nerve.number_of_nodes() == 6
    assert col.nerve.number_of_edges() == 9
    assert not collar_predicates(col).boundary_injective
    assert h_collar_certificate(col) is None


def test_dual_collar_swaps_colors(xprime):
    col = separating_collar(xprime, 0, 1)
    flipped = dual_collar(col)
    assert (flipped.x, flipped.y) == (1, 0)
    assert classify_nerve(flipped) == 'S'
    assert [c for c in flipped.colors] == ['y' if c == 'x' else 'x' for c in col.colors]


def test_span_vertices_must_be_distinct_and_adjacent(xprime):
    with pytest.raises(ValidationError):
        separating_collar(xprime, 0, 0)
    with pytest.raises(ValidationError):
        separating_collar(Complex([[1, 1, 2], [3, 3, 4]]), 0, 1)
    with pytest.raises(ValidationError):
        separating_collar(xprime, 0, 5)


def test_collar_without_faces_is_empty():
    c = Complex([[1, 2, 3]])
    col = separating_collar(c, c.vertex_of((1, 0)), c.vertex_of((1, 1)))
    assert col.is_empty
    assert classify_nerve(col) is None


@pytest.mark.parametrize("name", ['S', 'T', 'cubic', 'theta', 'theta_prime', 'octagonal'])
def test_realized_nerves_classify_back(name):
    col = collar_from_nerve(nerve(name))
    assert classify_nerve(col) == name


@pytest.mark.parametrize("name", ['S', 'T'])
def test_realized_four_vertex_nerves_have_two_vertices(name):
    assert realize_nerve(nerve(name)).vertex_count == 2


def test_S_collar_predicates_and_certificate():
    col = collar_from_nerve(nerve('S'))
    flags = collar_predicates(col)
    assert flags.thick and flags.treeable and flags.spans_two and flags.boundary_injective
    certificate = h_collar_certificate(col)
    assert certificate is not None
    assert set(certificate.minus.values()) == {0}
    assert set(certificate.plus.values()) == {0}


def test_S_boundaries_are_bouquets():
    col = collar_from_nerve(nerve('S'))
    for boundary in (boundary_minus(col), boundary_plus(col)):
        assert boundary.number_of_nodes() == 1
        assert boundary.number_of_edges() == 3


def test_octagonal_nerve_is_not_treeable():
    assert not collar_predicates(collar_from_nerve(nerve('octagonal'))).treeable


def test_cubic_multigraphs_on_four_vertices():
    graphs = st_lemma_enumerate()
    assert sorted(identify_graph(g) for g in graphs) == ['nerve_S', 'nerve_T']


def test_cubic_multigraphs_below_four_vertices():
    assert st_lemma_enumerate(3) == []
    assert st_lemma_enumerate(3, raw=True) == []
    assert st_lemma_enumerate(2) == []
    assert len(st_lemma_enumerate(2, raw=True)) == 1
