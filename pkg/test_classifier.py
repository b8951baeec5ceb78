"""
Tests for the rank 7/4 cobordism classifier
"""
import random

import networkx as nx
import pytest

from bordlab.catalog import moebius_kantor
from bordlab.classifier import (
    EXPECTED_EDGES, EXPECTED_FACES, EXPECTED_VERTICES, ROOT_PLUS_EDGE, SEGMENT5, classify_st,
    complement_vertices, enumerate_roots, is_root, non_backtracking_walks, normalize_root,
    partner_roots, raw_partner_roots, root_complement_shape, root_orbits, st_blocks,
)
from bordlab.cobordism import LEFT, RIGHT, check_chart, is_self_dual
from bordlab.isomorphism import canonical_key


@pytest.fixture(scope="module")
def mk():
    return moebius_kantor()


@pytest.fixture(scope="module")
def orbits(mk):
    return root_orbits(mk)


# =============================================================================
# ROOTS AND ORBITS
# =============================================================================

def test_root_count_matches_walk_count(mk):
    roots = enumerate_roots(mk)
    assert non_backtracking_walks(mk) == 16 * 3 * 2 * 2
    assert len(roots) == 96
    assert len(set(roots)) == len(roots)
    assert all(is_root(mk, r) for r in roots)


def test_normalize_root_picks_one_direction():
    assert normalize_root((5, 3, 2, 1)) == (1, 2, 3, 5)
    assert normalize_root((1, 2, 3, 5)) == (1, 2, 3, 5)


def test_is_root_rejects_non_paths(mk):
    a = sorted(mk.nodes())[0]
    b = sorted(mk.neighbors(a))[0]
    assert not is_root(mk, (a, b, a, b))
    assert not is_root(mk, (a, b))


def test_two_root_orbits(orbits):
    assert len(orbits) == 2
    assert sum(len(o.members) for o in orbits) == 96
    assert sorted(o.shape for o in orbits) == sorted([ROOT_PLUS_EDGE, SEGMENT5])
    assert sorted(o.rank for o in orbits) == ['2', '3/2']


def test_complement_shapes(mk, orbits):
    for orbit in orbits:
        shape = root_complement_shape(mk, orbit.representative)
        assert shape.shape == orbit.shape
        assert len(shape.vertices) == 6
        assert set(shape.vertices) == set(complement_vertices(mk, orbit.representative))


def test_partner_counts(mk, orbits):
    raw = {o.rank: len(raw_partner_roots(mk, o.representative)) for o in orbits}
    assert raw == {'3/2': 1, '2': 3}
    assert {o.rank: len(partner_roots(mk, o.representative)) for o in orbits} == {'3/2': 1, '2': 1}


# =============================================================================
# PIPELINE
# =============================================================================

def test_report_passes(st_report):
    failed = [c.name for c in st_report.checkpoints if not c.passed]
    assert failed == []
    assert st_report.passed


def test_two_self_dual_classes(st_report):
    assert len(st_report.classes) == 2
    assert sorted(c.rank for c in st_report.classes) == ['2', '3/2']
    for cls in st_report.classes:
        assert cls.self_dual
        assert cls.collar_types == ('S', 'S')
        body = cls.representative.body
        assert (len(body.faces), len(body.edges), body.vertex_count) == (
            EXPECTED_FACES, EXPECTED_EDGES, EXPECTED_VERTICES)


def test_first_class_duality(st_report):
    first = st_report.classes[0]
    assert first.duality_involutions == 1
    assert first.link_permutation_fixed_points == 0


def test_report_to_dict(st_report):
    data = st_report.to_dict()
    assert data['passed'] is True
    assert len(data['orbits']) == 2
    assert {c['rank'] for c in data['classes']} == {'3/2', '2'}


def test_blocks_carry_valid_charts():
    blocks = st_blocks()
    assert set(blocks) == {'3/2', '2'}
    for block in blocks.values():
        assert block.left.chart is not None
        assert block.right.chart is not None
        check_chart(block, LEFT)
        check_chart(block, RIGHT)
        assert is_self_dual(block)


def _class_keys(report):
    return {canonical_key(c.representative.body, tags=c.representative.tags) for c in report.classes}


def test_relabeled_link_gives_the_same_classes(mk, st_report):
    nodes = sorted(mk.nodes())
    shuffled = list(nodes)
    random.Random(2024).shuffle(shuffled)
    relabeled = nx.relabel_nodes(mk, dict(zip(nodes, shuffled)))
    report = classify_st(relabeled)
    assert report.passed
    assert len(report.classes) == 2
    assert _class_keys(report) == _class_keys(st_report)
