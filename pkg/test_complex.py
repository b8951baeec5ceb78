"""
Face-word complexes: vertices, links, counts, isomorphism and canonical form
"""
from collections import Counter

import pytest

from bordlab.complex import Complex, FaceWord, HEAD, PointedComplex, SignedEdge, TAIL, canonical_word, disjoint_union
from bordlab.errors import ValidationError
from bordlab.isomorphism import (
    canonical_form, canonical_key, canonical_pointed, complex_automorphisms, isomorphic,
)


def test_v23_has_one_vertex_with_full_link(v23):
    assert v23.vertex_count == 1
    link = v23.link(0)
    assert link.number_of_nodes() == 16
    assert link.number_of_edges() == 24


def test_xprime_has_two_vertices(xprime):
    assert xprime.vertex_count == 2
    assert xprime.vertex_of((1, TAIL)) != xprime.vertex_of((1, HEAD))


@pytest.mark.parametrize("name, chi", [('v23', 1), ('xprime', 2), ('xpp', 2), ('w158', 2)])
def test_euler_characteristic(corpus, name, chi):
    assert corpus[name].euler_characteristic() == chi


@pytest.mark.parametrize("name", ['v23', 'xprime', 'xpp', 'w158'])
def test_counting_identities(corpus, name):
    c = corpus[name]
    assert sum(len(w) for w in c.words) == sum(c.occurrence_count.values())
    for v in range(c.vertex_count):
        link = c.link(v)
        for node, data in link.nodes(data=True):
            assert link.degree(node) == c.occurrence_count[data['end'][0]]


def test_corpus_complexes_are_closed(corpus):
    for c in corpus.values():
        assert c.boundary_edges == ()
        assert min(c.occurrence_count.values()) >= 2


def test_face_word_validation():
    with pytest.raises(ValidationError):
        FaceWord(())
    with pytest.raises(ValidationError):
        Complex([[1, 0, 2]])
    with pytest.raises(ValidationError):
        SignedEdge(0)
    with pytest.raises(ValidationError):
        SignedEdge.from_int(0)


def test_signed_edge_round_trip():
    e = SignedEdge.from_int(-7)
    assert (e.label, e.sign) == (7, -1)
    assert e.inverse().to_int() == 7
    assert str(e) == "-7"


def test_canonical_word_is_rotation_and_reversal_invariant():
    word = (3, -1, 2)
    variants = [(-1, 2, 3), (2, 3, -1), (-2, 1, -3), (1, -3, -2)]
    assert all(canonical_word(v) == canonical_word(word) for v in variants)


def test_unknown_vertex_rejected(v23):
    with pytest.raises(ValidationError):
        v23.link(1)
    with pytest.raises(ValidationError):
        PointedComplex(v23, 3)


def test_disjoint_union_shifts_labels(v23):
    both = disjoint_union(v23, v23)
    assert len(both.faces) == 16
    assert both.edges == tuple(range(1, 17))
    assert both.vertex_count == 2


def test_relabeled_complex_is_isomorphic(xprime):
    shuffled = xprime.relabel({e: -(e + 100) if e % 2 else e + 200 for e in xprime.edges})
    iso = isomorphic(xprime, shuffled)
    assert iso is not None
    assert Counter(xprime.relabel(iso.mapping).words) == Counter(shuffled.words)


def test_pointed_isomorphism_respects_basepoints(xprime):
    assert isomorphic(xprime, xprime, pointed=(0, 0)) is not None


def test_v23_and_xprime_not_isomorphic(v23, xprime):
    assert isomorphic(v23, xprime) is None


@pytest.mark.parametrize("name, order", [('v23', 2), ('xprime', 4), ('xpp', 2)])
def test_automorphism_counts(corpus, name, order):
    assert len(complex_automorphisms(corpus[name])) == order


@pytest.mark.parametrize("name", ['v23', 'xprime', 'xpp', 'w158'])
def test_canonical_form_idempotent_and_invariant(corpus, name):
    c = corpus[name]
    form = canonical_form(c)
    assert canonical_form(form) == form
    relabeled = c.relabel({e: -(len(c.edges) + 1 - i) for i, e in enumerate(c.edges)})
    assert canonical_form(relabeled) == form
    assert canonical_key(relabeled) == canonical_key(c)


def test_canonical_pointed_keeps_isomorphism_type(xprime):
    pc = canonical_pointed(PointedComplex(xprime, 1))
    assert isomorphic(xprime, pc.complex, pointed=(1, pc.basepoint)) is not None


def test_canonical_keys_separate_distinct_complexes(xprime, xpp):
    assert canonical_key(xprime) != canonical_key(xpp)
