"""The triangle-cross-square case: minimal cover and triangulation size 10.

The product of two segments and a triangle has twelve vertices; ordering
them numerically by their reduced coordinates (reduction with respect to the
vertex that becomes the origin) and labeling them 1..9, 0, #, * gives the
coding used throughout this module.  The linear program gives a lower bound
of 9; the refinement to 10 combines four finite checks (largest class is 2
with an exterior facet forced, every class-2 simplex holds the center
interior to a facet, no three class-2 simplices are pairwise
interior-disjoint, and a pair of opposite prism facets needs six distinct
class-1 simplices), and the bound is met by an explicit ten-simplex
triangulation obtained from the standard twelve by two cone replacements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    SimplotopeSpec,
    VertexPoint,
    VertexSimplex,
    has_exterior_facet,
    minimal_face,
)
from .exact import solve_rational
from .lptable import solve_cell
from .standard import standard_triangulation
from .verifier import TriangulationCandidate, interiors_overlap, verify

SYMBOLS = "1234567890#*"

TRI_SQUARE = SimplotopeSpec.seg_tri(2, 1)

# the minimal triangulation, by vertex symbols; 1850* and 1358* are the
# fat simplices of class 2
MINIMAL_10 = ("1850*", "1450*", "1456*", "1356*", "1358*",
              "1398*", "1798*", "1708*", "#850*", "13582")

# reduced coordinates of the center: (1/2; 1/2; 1/3, 1/3)
CENTER_REDUCED = (Fraction(1, 2), Fraction(1, 2), Fraction(1, 3), Fraction(1, 3))


def code_pivot() -> VertexPoint:
    """The reduction pivot: the vertex whose reduced coordinates vanish."""
    return VertexPoint(TRI_SQUARE, (0, 0, 0))


def vertex_code() -> dict[str, VertexPoint]:
    """Symbol -> vertex, in numeric order of reduced coordinates."""
    pivot = code_pivot()
    ordered = sorted(TRI_SQUARE.vertices(), key=lambda v: v.reduced(pivot))
    return dict(zip(SYMBOLS, ordered))


def symbol_of() -> dict[VertexPoint, str]:
    return {v: s for s, v in vertex_code().items()}


def decode(word: str) -> VertexSimplex:
    code = vertex_code()
    return VertexSimplex(TRI_SQUARE, [code[ch] for ch in word])


def encode(x: VertexSimplex) -> str:
    names = symbol_of()
    return "".join(sorted((names[v] for v in x.vertices), key=SYMBOLS.index))


def enumerate_class2() -> list[VertexSimplex]:
    """All class-2 vertex simplices, by exhaustive search over C(12,5) subsets."""
    out = []
    for sub in itertools.combinations(TRI_SQUARE.vertices(), TRI_SQUARE.dim + 1):
        x = VertexSimplex(TRI_SQUARE, sub)
        if x.cls == 2:
            out.append(x)
    return out


def factor_permutations() -> list[dict[VertexPoint, VertexPoint]]:
    """The 2! x 2! x 3! coordinate permutations within factors, as vertex maps."""
    maps = []
    for p0 in itertools.permutations(range(2)):
        for p1 in itertools.permutations(range(2)):
            for p2 in itertools.permutations(range(3)):
                perm = (p0, p1, p2)
                maps.append({v: VertexPoint(TRI_SQUARE, tuple(perm[i][v.idx[i]] for i in range(3)))
                             for v in TRI_SQUARE.vertices()})
    return maps


def center_in_facet(x: VertexSimplex) -> tuple[Fraction, ...]:
    """Barycentric coefficients of the center in a class-2 simplex.

    Solves the exact convex-combination system; exactly one coefficient is
    zero and the rest are positive, so the center is interior to a facet.
    """
    if x.cls != 2:
        raise ValueError("the center-in-facet property is about class-2 simplices")
    pivot = code_pivot()
    rows = [v.reduced(pivot) for v in x.vertices]
    n = len(rows)
    system = [[1] * n] + [[rows[i][k] for i in range(n)] for k in range(TRI_SQUARE.dim)]
    rhs = [Fraction(1)] + list(CENTER_REDUCED)
    coeffs = solve_rational(system, rhs)
    if coeffs is None:
        raise ValueError("degenerate convex-combination system")
    zeros = sum(1 for a in coeffs if a == 0)
    if zeros != 1 or any(a < 0 for a in coeffs):
        raise ValueError(f"center not interior to a facet: coefficients {coeffs}")
    return tuple(coeffs)


def minimal_triangulation_10() -> TriangulationCandidate:
    """The minimal ten-simplex triangulation, decoded from its symbols."""
    return TriangulationCandidate(TRI_SQUARE, tuple(decode(w) for w in MINIMAL_10))


def bundled_triangulation_path():
    """Path of the shipped JSON copy of the ten-simplex triangulation."""
    from importlib import resources

    return resources.files("simplotope").joinpath("data/tri_square_minimal.json")


# --- the 12 -> 11 -> 10 construction ---------------------------------------
#
# Stage one removes the six standard simplices that triangulate the cone,
# with apex *, over the cube spanned by {1,2,4,5,7,8,0,#} (the standard
# triangulation of that cube around its diagonal) and replaces them with the
# cone over the cube's five-simplex triangulation (central tetrahedron 1058
# plus four corners).  Stage two removes the five simplices coning, from
# vertex 1, the cube {2,3,5,6,8,9,#,*} with its corner at # cut off, and
# replaces them with the cone over a four-tetrahedron triangulation of that
# cut cube.  Both replacements keep all facets on the cone boundaries
# unchanged, so each stage stays a triangulation.

CONE_CUBE_APEX = "*"
CONE_CUBE = "1245780#"
CUBE_FIVE = ("1058", "2158", "7108", "4105", "#058")
CONE_CUT_APEX = "1"
CONE_CUT = "235689*"
CUT_FOUR = ("356*", "358*", "398*", "3582")


def standard_12() -> TriangulationCandidate:
    """The standard triangulation, oriented so each simplex contains 1 and *."""
    # the triangle factor's vertex chain runs 1-block, 2-block, *-block
    orientation = [(0, 1), (0, 1), (0, 2, 1)]
    sims = standard_triangulation(TRI_SQUARE, orientation)
    return TriangulationCandidate(TRI_SQUARE, tuple(sims))


def _replace(cand: TriangulationCandidate, region: str, apex: str,
             new_bases: tuple[str, ...]) -> tuple[TriangulationCandidate, int]:
    """Swap the subcomplex inside cone(apex, region) for cones over new_bases."""
    allowed = set(region) | {apex}
    keep = []
    removed = 0
    for x in cand.simplices:
        if set(encode(x)) <= allowed:
            removed += 1
        else:
            keep.append(x)
    added = tuple(decode(base + apex) for base in new_bases)
    return TriangulationCandidate(cand.spec, tuple(keep) + added), removed


def construction_stages() -> tuple[TriangulationCandidate, TriangulationCandidate, TriangulationCandidate]:
    """The 12-, 11- and 10-simplex stages of the cone-replacement construction."""
    t12 = standard_12()
    t11, removed = _replace(t12, CONE_CUBE, CONE_CUBE_APEX, CUBE_FIVE)
    if removed != 6:
        raise RuntimeError(f"expected 6 simplices in the cube cone, found {removed}")
    t10, removed = _replace(t11, CONE_CUT, CONE_CUT_APEX, CUT_FOUR)
    if removed != 5:
        raise RuntimeError(f"expected 5 simplices in the cut-cube cone, found {removed}")
    return t12, t11, t10


# --- the lower-bound argument ------------------------------------------------

@dataclass(frozen=True)
class Ingredient:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class CaseReport:
    ingredients: tuple[Ingredient, ...]
    lower_bound: int
    achieved_by: int

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.ingredients)


def _all_simplices() -> list[VertexSimplex]:
    return [VertexSimplex(TRI_SQUARE, sub)
            for sub in itertools.combinations(TRI_SQUARE.vertices(), TRI_SQUARE.dim + 1)]


def overlap_matrix(simplices: list[VertexSimplex]) -> list[list[bool]]:
    n = len(simplices)
    m = [[False] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = True
        for j in range(i + 1, n):
            m[i][j] = m[j][i] = interiors_overlap(simplices[i], simplices[j])
    return m


def _exterior_facet_positions(x: VertexSimplex) -> set[tuple[int, int]]:
    """Zero coordinates of simplotope facets containing an exterior facet of x."""
    spots = set()
    for sub in itertools.combinations(x.vertices, len(x.vertices) - 1):
        spots.update(minimal_face(sub).zeros)
    return spots


def lower_bound_10_argument(verbose: bool = False) -> CaseReport:
    """Machine-check every ingredient of the size-10 lower bound."""
    ingredients = []

    cell = solve_cell(2, 1)
    ingredients.append(Ingredient(
        "lp-bound-9", cell.lower_bound == 9,
        f"linear program gives {cell.lp_value}, bound {cell.lower_bound}"))

    nondeg = [x for x in _all_simplices() if x.cls > 0]
    facet_ok = all(has_exterior_facet(x) for x in nondeg)
    max_class = max(x.cls for x in nondeg)
    ingredients.append(Ingredient(
        "exterior-facet-and-class-2", facet_ok and max_class == 2,
        f"{len(nondeg)} nondegenerate simplices, all with exterior facets; max class {max_class}"))

    fat = [x for x in nondeg if x.cls == 2]
    count_ok = len(fat) == 24
    expected = sorted([Fraction(0), Fraction(1, 6), Fraction(1, 6), Fraction(1, 3), Fraction(1, 3)])
    centers_ok = all(sorted(center_in_facet(x)) == expected for x in fat)
    ingredients.append(Ingredient(
        "center-in-facet", count_ok and centers_ok,
        f"{len(fat)} class-2 simplices, center coefficients {{0, 1/6, 1/6, 1/3, 1/3}}"))

    m = overlap_matrix(fat)
    bad_triples = 0
    for i, j, k in itertools.combinations(range(len(fat)), 3):
        if not (m[i][j] or m[i][k] or m[j][k]):
            bad_triples += 1
    ingredients.append(Ingredient(
        "no-three-disjoint-fat", bad_triples == 0,
        f"{bad_triples} of {len(fat) * (len(fat) - 1) * (len(fat) - 2) // 6} triples pairwise disjoint"))

    parallel_violations = 0
    for x in nondeg:
        spots = _exterior_facet_positions(x)
        for i, c in enumerate(TRI_SQUARE.factors):
            if c == 1 and (i, 0) in spots and (i, 1) in spots:
                parallel_violations += 1
    # each prism facet has class 3 and holds only class-1 tetrahedra, so a
    # pair of opposite prisms forces 2 * 3 distinct class-1 cover members
    from .fbounds import v_max

    prism_class = SimplotopeSpec.seg_tri(1, 1).polytope_class
    per_pair = 2 * -(-prism_class // v_max(1, 1).value)
    ingredients.append(Ingredient(
        "opposite-prisms-need-six", parallel_violations == 0 and per_pair == 6,
        "no simplex has exterior facets in opposite prism facets; "
        f"each pair of opposite prisms needs {per_pair} distinct class-1 simplices"))

    report10 = verify(minimal_triangulation_10())
    ingredients.append(Ingredient(
        "ten-simplices-suffice", report10.certified and sorted(report10.classes) == [1] * 8 + [2, 2],
        f"explicit triangulation certified: {report10.certified}, classes {sorted(report10.classes)}"))

    # A cover of size 9 would need at least three class-2 simplices (two give
    # total class at most 2*2 + 7 = 11 < 12) and at least six class-1 ones,
    # so exactly 3 + 6 with total class 12: an interior-disjoint partition
    # with three pairwise-disjoint class-2 simplices, which is impossible.
    ok = all(i.ok for i in ingredients)
    report = CaseReport(tuple(ingredients), 10 if ok else 9, len(MINIMAL_10))
    if verbose:
        for ing in report.ingredients:
            print(f"  [{'ok' if ing.ok else 'FAIL'}] {ing.name}: {ing.detail}")
    return report
