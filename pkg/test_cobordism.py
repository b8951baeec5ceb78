"""
Cobordisms: edge flips, splits, gluing, identities and duality
"""
from collections import Counter

import pytest

from bordlab.cobordism import (
    LEFT, RIGHT, chart_matching, compose, dual, flip_surgery, from_document, identity_cobordism,
    isomorphic_cobordisms, reference_closure, rho, split_along_collar,
)
from bordlab.classifier import st_blocks
from bordlab.collars import separating_collar
from bordlab.complex import Complex, SignedEdge, apply_letter, image_end
from bordlab.corpus import FAKE_FLIP, FAKE_UNFLIP
from bordlab.errors import CompositionError, ValidationError
from bordlab.isomorphism import isomorphic
from bordlab.parsers import get_parser
from bordlab.reports import format_cobordism, format_complex
from bordlab.typespec import affiliated_names


@pytest.fixture(scope="module")
def xprime_split(xprime):
    return split_along_collar(xprime, separating_collar(xprime, 0, 1))


def test_fake_flip_gives_xpp(xprime, xpp):
    assert isomorphic(flip_surgery(xprime, FAKE_FLIP), xpp) is not None


def test_fake_unflip_gives_xprime(xprime, xpp):
    assert isomorphic(flip_surgery(xpp, FAKE_UNFLIP), xprime) is not None


def test_flip_accepts_plain_integers(xprime):
    flipped = flip_surgery(xprime, [(face, pos, entry.to_int()) for face, pos, entry in FAKE_FLIP])
    assert flipped == flip_surgery(xprime, FAKE_FLIP)


def test_flip_rejects_bad_positions(xprime):
    with pytest.raises(ValidationError):
        flip_surgery(xprime, [(16, 0, SignedEdge(1))])
    with pytest.raises(ValidationError):
        flip_surgery(xprime, [(0, 3, SignedEdge(1))])


def test_reference_closure_and_role_swap():
    k, minus, plus = reference_closure()
    assert len(k.faces) == 6
    assert k.vertex_of(minus) != k.vertex_of(plus)
    swap = rho()
    assert all(apply_letter(swap, image) == e for e, image in swap.items())
    assert k.vertex_of(image_end(minus, swap[minus[0]])) == k.vertex_of(plus)


def test_xprime_split_shapes(xprime_split):
    minus, plus = xprime_split.minus, xprime_split.plus
    assert len(minus.body.faces) == 11
    assert len(plus.body.faces) == 11
    assert minus.left is None and plus.right is None
    assert minus.right.chart is not None and plus.left.chart is not None


def test_xprime_split_round_trip(xprime, xprime_split):
    minus, plus = xprime_split.minus, xprime_split.plus
    matching = chart_matching(minus, plus)
    assert all(matching[e] == e for e in matching)
    glued = compose(minus, plus, matching=matching)
    assert Counter(glued.body.words) == Counter(xprime.words)
    assert glued.left is None and glued.right is None


def test_right_unit_law(xprime_split):
    minus = xprime_split.minus
    unit = identity_cobordism(minus, RIGHT)
    glued = compose(minus, unit, matching=chart_matching(minus, unit))
    assert Counter(glued.body.words) == Counter(minus.body.words)
    assert sorted(glued.right.faces) == sorted(minus.right.faces)


def test_left_unit_law(xprime_split):
    plus = xprime_split.plus
    unit = identity_cobordism(plus, LEFT)
    glued = compose(unit, plus, matching=chart_matching(unit, plus))
    assert isomorphic(glued.body, plus.body) is not None
    assert len(glued.left.faces) == len(plus.left.faces)


def test_identity_cobordism_shares_all_faces(xprime_split):
    unit = identity_cobordism(xprime_split.minus, RIGHT)
    assert set(unit.tags) == {'LR'}
    assert len(unit.body.faces) == 6
    unit.validate()


def test_dual_is_an_involution(xprime_split):
    minus = xprime_split.minus
    once = dual(minus)
    assert once.right is None
    assert once.left.faces == minus.right.faces
    twice = dual(once)
    assert twice.right.faces == minus.right.faces
    assert twice.right.chart == minus.right.chart


def test_document_round_trip(xprime_split):
    minus = xprime_split.minus
    doc = get_parser('cobordism').parse(format_cobordism(minus))
    again = from_document(doc)
    assert again.body == minus.body
    assert again.right.faces == minus.right.faces
    assert again.right.chart == minus.right.chart
    assert isomorphic_cobordisms(again, minus) is not None


def test_w158_split_separates_the_two_link_types(w158):
    split = split_along_collar(w158, separating_collar(w158, 0, 1))
    names = [affiliated_names(split.minus.body), affiliated_names(split.plus.body)]
    assert all(len(n) == 1 for n in names)
    assert sorted(names[0] + names[1]) == ['heawood', 'moebius_kantor']
    assert split.minus.right.chart is None


def test_empty_collar_does_not_split():
    c = Complex([[1, 2, 3]])
    col = separating_collar(c, c.vertex_of((1, 0)), c.vertex_of((1, 1)))
    with pytest.raises(CompositionError):
        split_along_collar(c, col)


def test_S_and_T_collars_do_not_glue(xprime_split, xpp):
    fake = split_along_collar(xpp, separating_collar(xpp, 0, 1))
    with pytest.raises(CompositionError):
        compose(xprime_split.minus, fake.plus)


def test_charts_required_for_chart_matching(xprime_split, xpp):
    fake = split_along_collar(xpp, separating_collar(xpp, 0, 1))
    with pytest.raises(CompositionError):
        chart_matching(xprime_split.minus, fake.plus)


def test_matching_must_be_a_bijection(xprime_split):
    with pytest.raises(CompositionError):
        compose(xprime_split.minus, xprime_split.plus, matching={1: 1})


def test_fillings_cannot_glue_on_missing_side(xprime_split):
    with pytest.raises(CompositionError):
        compose(xprime_split.plus, xprime_split.minus)


@pytest.mark.parametrize("text", [
    "faces = [[1,2,3]]\nleft.faces = [0]\nleft.boundary = [1]",
    "faces = [[1,2,3]]\nleft.faces = [0]\nleft.boundary = [1,2,3]\nright.faces = [0]\nright.boundary = [1]",
    "faces = [[1,2,3]]\nleft.faces = [4]\nleft.boundary = [1,2,3]",
])
def test_invalid_documents(text):
    with pytest.raises(ValidationError):
        from_document(get_parser('cobordism').parse(text))


@pytest.fixture(scope="module")
def pieces(xprime_split):
    found = dict(st_blocks())
    found['minus'] = xprime_split.minus
    found['plus'] = xprime_split.plus
    return found


def test_default_gluing_follows_charts(pieces):
    x, y = pieces['3/2'], pieces['2']
    assert compose(x, y).body == compose(x, y, matching=chart_matching(x, y)).body


@pytest.mark.parametrize("names", [
    ('3/2', '2', '3/2'),
    ('2', '3/2', '2'),
    ('3/2', '3/2', '2'),
    ('2', '2', '2'),
    ('minus', '3/2', '2'),
    ('2', '3/2', 'plus'),
    ('minus', '2', 'plus'),
])
def test_composition_is_associative(pieces, names):
    x, y, z = (pieces[name] for name in names)
    left_first = compose(compose(x, y), z)
    right_first = compose(x, compose(y, z))
    assert isomorphic_cobordisms(left_first, right_first) is not None


def test_reports_carry_no_padding(xprime, xprime_split):
    text = format_complex(xprime)
    assert text.splitlines()[1].startswith('[')
    assert get_parser('complex').parse(text) == xprime
    document = format_cobordism(xprime_split.minus)
    assert not any(line.startswith(' ') for line in document.splitlines())
