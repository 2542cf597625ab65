"""The triangle-cross-square case study."""

import itertools
from fractions import Fraction

import pytest

from simplotope.core import VertexSimplex, corner_simplex
from simplotope.trisquare import (
    MINIMAL_10,
    SYMBOLS,
    TRI_SQUARE,
    center_in_facet,
    code_pivot,
    construction_stages,
    decode,
    encode,
    enumerate_class2,
    factor_permutations,
    minimal_triangulation_10,
    symbol_of,
    vertex_code,
)
from simplotope.verifier import facet_inventory, interiors_overlap, verify


def canon(word):
    return "".join(sorted(word, key=SYMBOLS.index))


def test_vertex_code_anchors():
    code = vertex_code()
    pivot = code_pivot()
    assert code["1"].reduced(pivot) == (0, 0, 0, 0)
    assert code["2"].reduced(pivot) == (0, 0, 0, 1)
    assert code["3"].reduced(pivot) == (0, 0, 1, 0)
    assert code["4"].reduced(pivot) == (0, 1, 0, 0)
    assert code["*"].reduced(pivot) == (1, 1, 1, 0)
    # numeric order: reduced coordinates strictly increase along the symbols
    ordered = [code[s].reduced(pivot) for s in SYMBOLS]
    assert ordered == sorted(ordered)


def test_exactly_24_class_two_simplices():
    fat = enumerate_class2()
    assert len(fat) == 24
    assert all(x.cls == 2 for x in fat)


def test_class_two_single_orbit():
    fat = enumerate_class2()
    maps = factor_permutations()
    assert len(maps) == 24
    orbit = {frozenset(m[v] for v in fat[0].vertices) for m in maps}
    assert orbit == {x.vertex_set for x in fat}


def test_every_fat_simplex_has_class2_cube_facet():
    from simplotope.core import face_class, minimal_face
    for x in enumerate_class2():
        found = False
        for sub in itertools.combinations(x.vertices, 4):
            fid = minimal_face(sub)
            if fid.dim == 3 and fid.signature().tp == 0 and face_class(sub) == 2:
                found = True
        assert found


def test_center_coefficients():
    x = decode("15803")
    assert x.cls == 2
    assert center_in_facet(x) == (0, Fraction(1, 6), Fraction(1, 6), Fraction(1, 3), Fraction(1, 3))
    expected = sorted([Fraction(0), Fraction(1, 6), Fraction(1, 6), Fraction(1, 3), Fraction(1, 3)])
    for y in enumerate_class2():
        assert sorted(center_in_facet(y)) == expected


def test_center_guard_for_class_one():
    with pytest.raises(ValueError):
        center_in_facet(corner_simplex(TRI_SQUARE, code_pivot()))


def test_minimal_triangulation_checks_out():
    cand = minimal_triangulation_10()
    report = verify(cand)
    assert report.certified
    assert report.total_class == 12
    assert sorted(report.classes) == [1] * 8 + [2, 2]
    fat_words = {MINIMAL_10[i] for i, c in enumerate(report.classes) if c == 2}
    assert fat_words == {"1850*", "1358*"}


def test_fat_pair_common_facet():
    s1850, s1358 = decode("1850*"), decode("1358*")
    names = symbol_of()
    common = {names[v] for v in s1850.vertex_set & s1358.vertex_set}
    assert common == set("158*")


def test_adjacency_structure():
    report = verify(minimal_triangulation_10())
    # the first eight form a cycle, the fat pair is a chord, and the two
    # corner simplices hang off the fat ones
    cycle = {(i, i + 1) for i in range(7)} | {(0, 7)}
    chord = {(0, 4)}
    pendants = {(0, 8), (4, 9)}
    assert set(report.adjacency) == cycle | chord | pendants


def test_boundary_tiling():
    # the exterior facets of the ten simplices tile every simplotope facet:
    # classes sum to the facet class and no two overlap inside one facet
    cand = minimal_triangulation_10()
    exterior, interior = facet_inventory(cand)
    assert all(n == 2 for n in interior.values())
    from simplotope.core import face_class
    for i, c in enumerate(TRI_SQUARE.factors):
        for j in range(c + 1):
            entries = exterior.get((i, j), [])
            total = sum(face_class(facet) for _, facet in entries)
            facet_class = 3 if c == 1 else 6
            assert total == facet_class, (i, j, total)
            for (_, fa), (_, fb) in itertools.combinations(entries, 2):
                assert not interiors_overlap(VertexSimplex(TRI_SQUARE, fa),
                                             VertexSimplex(TRI_SQUARE, fb))


def test_construction_replay():
    t12, t11, t10 = construction_stages()
    assert (len(t12.simplices), len(t11.simplices), len(t10.simplices)) == (12, 11, 10)
    # stage zero is the standard triangulation with spine 1-*
    for x in t12.simplices:
        word = encode(x)
        assert "1" in word and "*" in word
    assert {encode(x) for x in t10.simplices} == {canon(w) for w in MINIMAL_10}
    for cand in (t12, t11, t10):
        assert verify(cand).certified


def test_bundled_file_matches():
    from simplotope.tfiles import load_candidate
    from simplotope.trisquare import bundled_triangulation_path

    cand = load_candidate(bundled_triangulation_path())
    want = {x.vertex_set for x in minimal_triangulation_10().simplices}
    assert {x.vertex_set for x in cand.simplices} == want
