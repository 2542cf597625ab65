"""Face counts Q(s, t, s', t') and their two independent oracles."""

import pytest

from simplotope.counting import (
    ENUM_DIM_LIMIT,
    QQuery,
    q_by_enumeration,
    q_by_generating_function,
    q_count,
)


def test_examples():
    assert q_count(QQuery(0, 2, 2, 0)) == 9       # square faces of two triangles
    assert q_count(QQuery(3, 0, 2, 0)) == 6       # 2-faces of the 3-cube
    assert q_count(QQuery(1, 1, 1, 1)) == 1       # the whole prism
    assert q_count(QQuery(1, 1, 2, 0)) == 3       # the prism's squares
    assert q_count(QQuery(2, 0, 1, 0)) == 4       # edges of a square
    assert q_count(QQuery(0, 1, 1, 0)) == 3       # edges of a triangle


def test_cube_column_closed_form():
    for s in range(0, 7):
        for sp in range(0, s + 1):
            from math import comb
            assert q_count(QQuery(s, 0, sp, 0)) == 2 ** (s - sp) * comb(s, sp)


def test_vertex_count():
    for s in range(0, 4):
        for t in range(0, 4):
            assert q_count(QQuery(s, t, 0, 0)) == 2 ** s * 3 ** t


def test_out_of_range_vanishes():
    assert q_count(QQuery(1, 1, 5, 0)) == 0
    assert q_count(QQuery(1, 1, 0, 2)) == 0
    assert q_count(QQuery(2, 0, 1, 1)) == 0
    with pytest.raises(ValueError):
        QQuery(-1, 0, 0, 0)


def test_triple_agreement():
    for s in range(0, 5):
        for t in range(0, 5):
            for sp in range(0, s + t + 2):
                for tp in range(0, t + 2):
                    q = QQuery(s, t, sp, tp)
                    closed = q_count(q)
                    assert q_by_generating_function(q) == closed
                    if s + 2 * t <= ENUM_DIM_LIMIT:
                        assert q_by_enumeration(q) == closed


def test_enumeration_guard():
    with pytest.raises(ValueError):
        q_by_enumeration(QQuery(9, 0, 1, 0))


def test_total_face_count():
    # summing Q over all shapes counts every face: 3^s * 7^t of them
    for s in range(0, 3):
        for t in range(0, 3):
            if s + t == 0:
                continue
            total = sum(q_count(QQuery(s, t, sp, tp))
                        for sp in range(0, s + t + 1) for tp in range(0, t + 1))
            assert total == 3 ** s * 7 ** t
