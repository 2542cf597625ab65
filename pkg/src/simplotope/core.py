"""Products of simplices: coordinates, vertices, faces, and vertex simplices.

A point of the product Delta^{c_1} x ... x Delta^{c_n} is stored in standard
coordinates as one barycentric block per factor (block i has c_i + 1 entries
summing to 1).  Vertices are the 0/1 points, encoded compactly by the index
of the 1 in each block.  Reduced coordinates drop one entry per block, the
one where a chosen pivot vertex is 1; nothing is lost because each block sums
to 1.

The class of a full-dimensional vertex simplex is the absolute determinant of
its reduced coordinate matrix augmented with a column of ones (an integer:
the simplex volume times d!).  Faces are identified by their set of
always-zero coordinates, which makes face membership, parallelism and
tri-positioning plain set computations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .exact import det


@dataclass(frozen=True)
class SimplotopeSpec:
    """Factor dimensions (c_1, ..., c_n) of a product of simplices."""

    factors: tuple[int, ...]

    def __post_init__(self):
        if len(self.factors) == 0:
            raise ValueError("a simplotope needs at least one factor")
        if any(c < 1 for c in self.factors):
            raise ValueError("factor dimensions must be positive")

    @staticmethod
    def of(*factors: int) -> "SimplotopeSpec":
        return SimplotopeSpec(tuple(factors))

    @staticmethod
    def seg_tri(s: int, t: int) -> "SimplotopeSpec":
        """The product of s segments followed by t triangles."""
        if s < 0 or t < 0 or s + t == 0:
            raise ValueError("need s, t >= 0 with at least one factor")
        return SimplotopeSpec((1,) * s + (2,) * t)

    @property
    def dim(self) -> int:
        return sum(self.factors)

    @property
    def n_vertices(self) -> int:
        return math.prod(c + 1 for c in self.factors)

    @property
    def seg_tri_counts(self) -> tuple[int, int]:
        """(s, t) for products of segments and triangles only."""
        if any(c > 2 for c in self.factors):
            raise ValueError("segment/triangle counts need all factors in {1, 2}")
        s = sum(1 for c in self.factors if c == 1)
        return s, len(self.factors) - s

    @property
    def polytope_class(self) -> int:
        """dim! times the volume: the multinomial (sum c_i)! / prod c_i!."""
        v = math.factorial(self.dim)
        for c in self.factors:
            v //= math.factorial(c)
        return v

    def vertex(self, idx: Sequence[int]) -> "VertexPoint":
        return VertexPoint(self, tuple(idx))

    def vertices(self) -> list["VertexPoint"]:
        """All vertices, in lexicographic order of their per-factor indices."""
        ranges = [range(c + 1) for c in self.factors]
        return [VertexPoint(self, idx) for idx in itertools.product(*ranges)]

    def coordinates(self) -> list[tuple[int, int]]:
        """All (factor, position) coordinate labels in standard order."""
        return [(i, j) for i, c in enumerate(self.factors) for j in range(c + 1)]


@dataclass(frozen=True)
class VertexPoint:
    """A simplotope vertex: per factor, the position of its single 1."""

    spec: SimplotopeSpec
    idx: tuple[int, ...]

    def __post_init__(self):
        if len(self.idx) != len(self.spec.factors):
            raise ValueError("vertex index count does not match factor count")
        for j, c in zip(self.idx, self.spec.factors):
            if not 0 <= j <= c:
                raise ValueError("vertex index out of range for its factor")

    def standard(self) -> tuple[int, ...]:
        out = []
        for j, c in zip(self.idx, self.spec.factors):
            block = [0] * (c + 1)
            block[j] = 1
            out.extend(block)
        return tuple(out)

    def reduced(self, pivot: "VertexPoint") -> tuple[int, ...]:
        """Drop, in each factor, the coordinate where the pivot is 1."""
        if pivot.spec != self.spec:
            raise ValueError("pivot comes from a different simplotope")
        out = []
        for i, c in enumerate(self.spec.factors):
            p = pivot.idx[i]
            v = self.idx[i]
            for j in range(c + 1):
                if j != p:
                    out.append(1 if v == j else 0)
        return tuple(out)

    def neighbors(self) -> list["VertexPoint"]:
        """Vertices joined to this one by an edge: differ in exactly one factor."""
        out = []
        for i, c in enumerate(self.spec.factors):
            for j in range(c + 1):
                if j != self.idx[i]:
                    out.append(VertexPoint(self.spec, self.idx[:i] + (j,) + self.idx[i + 1:]))
        return out


@dataclass(frozen=True)
class ReducedPoint:
    """A point in reduced coordinates, remembering the reduction pivot."""

    spec: SimplotopeSpec
    coords: tuple[Fraction, ...]
    pivot: VertexPoint

    def to_standard(self) -> tuple[Fraction, ...]:
        """Restore the dropped coordinate of each factor as 1 - (block sum)."""
        out: list[Fraction] = []
        pos = 0
        for i, c in enumerate(self.spec.factors):
            kept = self.coords[pos:pos + c]
            pos += c
            p = self.pivot.idx[i]
            restored = 1 - sum(kept, Fraction(0))
            block = list(kept[:p]) + [restored] + list(kept[p:])
            out.extend(Fraction(x) for x in block)
        return tuple(out)


def reduce_point(spec: SimplotopeSpec, coords: Sequence, pivot: VertexPoint) -> ReducedPoint:
    """Reduce a standard-coordinate point with respect to a pivot vertex."""
    if pivot.spec != spec:
        raise ValueError("pivot comes from a different simplotope")
    flat = [Fraction(x) for x in coords]
    if len(flat) != spec.dim + len(spec.factors):
        raise ValueError("coordinate length does not match the simplotope")
    out = []
    pos = 0
    for i, c in enumerate(spec.factors):
        block = flat[pos:pos + c + 1]
        pos += c + 1
        p = pivot.idx[i]
        out.extend(block[:p] + block[p + 1:])
    return ReducedPoint(spec, tuple(out), pivot)


@dataclass(frozen=True)
class FaceSignature:
    """Face shape for segment/triangle products: s' segments, t' triangles.

    q of the s' segment factors come from segment factors of the ambient
    product; the other s' - q are edges of triangle factors.
    """

    sp: int
    tp: int
    q: int

    @property
    def dim(self) -> int:
        return self.sp + 2 * self.tp


@dataclass(frozen=True)
class FaceId:
    """A face, identified by the coordinate positions it fixes at zero."""

    spec: SimplotopeSpec
    zeros: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.zeros:
            c = self.spec.factors[i]
            if not 0 <= j <= c:
                raise ValueError("zero position out of range")
        for i, c in enumerate(self.spec.factors):
            if self._zero_count(i) > c:
                raise ValueError("a face cannot fix a whole factor block at zero")

    def _zero_count(self, factor: int) -> int:
        return sum(1 for i, _ in self.zeros if i == factor)

    @property
    def dim(self) -> int:
        return self.spec.dim - len(self.zeros)

    def free_coords(self) -> frozenset[tuple[int, int]]:
        """Coordinates that vary over the face (fixed-at-1 ones are excluded)."""
        free = set()
        for i, c in enumerate(self.spec.factors):
            nonzero = [(i, j) for j in range(c + 1) if (i, j) not in self.zeros]
            if len(nonzero) >= 2:
                free.update(nonzero)
        return frozenset(free)

    def signature(self) -> FaceSignature:
        sp = tp = q = 0
        for i, c in enumerate(self.spec.factors):
            z = self._zero_count(i)
            nfree = c + 1 - z
            if nfree == 1:
                continue
            if c == 1:
                sp += 1
                q += 1
            elif c == 2 and z == 1:
                sp += 1
            elif c == 2 and z == 0:
                tp += 1
            else:
                raise ValueError("face signatures are only defined for segment/triangle products")
        return FaceSignature(sp, tp, q)

    def contains_vertex(self, v: VertexPoint) -> bool:
        return all(v.idx[i] != j for i, j in self.zeros)

    def vertices(self) -> list[VertexPoint]:
        return [v for v in self.spec.vertices() if self.contains_vertex(v)]

    def local_spec(self) -> SimplotopeSpec:
        """The face as a simplotope in its own right (pinned factors dropped)."""
        fs = []
        for i, c in enumerate(self.spec.factors):
            nfree = c + 1 - self._zero_count(i)
            if nfree >= 2:
                fs.append(nfree - 1)
        if not fs:
            raise ValueError("a vertex has no simplotope structure")
        return SimplotopeSpec(tuple(fs))

    def localize(self, v: VertexPoint) -> VertexPoint:
        """Express a vertex of this face in the face's own spec."""
        if not self.contains_vertex(v):
            raise ValueError("vertex is not on the face")
        idx = []
        for i, c in enumerate(self.spec.factors):
            kept = [j for j in range(c + 1) if (i, j) not in self.zeros]
            if len(kept) >= 2:
                idx.append(kept.index(v.idx[i]))
        return VertexPoint(self.local_spec(), tuple(idx))


def minimal_face(points: Sequence[VertexPoint]) -> FaceId:
    """The smallest face containing all points: their common zero coordinates."""
    if not points:
        raise ValueError("minimal_face needs at least one point")
    spec = points[0].spec
    if any(p.spec != spec for p in points):
        raise ValueError("points come from different simplotopes")
    zeros = set()
    for i, c in enumerate(spec.factors):
        used = {p.idx[i] for p in points}
        zeros.update((i, j) for j in range(c + 1) if j not in used)
    return FaceId(spec, frozenset(zeros))


def minimal_face_of_coords(spec: SimplotopeSpec, points: Sequence[Sequence]) -> FaceId:
    """minimal_face for arbitrary points given in standard coordinates."""
    if not points:
        raise ValueError("minimal_face needs at least one point")
    labels = spec.coordinates()
    if any(len(p) != len(labels) for p in points):
        raise ValueError("coordinate length does not match the simplotope")
    zeros = frozenset(labels[k] for k in range(len(labels))
                      if all(Fraction(p[k]) == 0 for p in points))
    return FaceId(spec, zeros)


class VertexSimplex:
    """An ordered set of distinct simplotope vertices spanning a simplex."""

    def __init__(self, spec: SimplotopeSpec, vertices: Iterable[VertexPoint]):
        vs = tuple(vertices)
        if any(v.spec != spec for v in vs):
            raise ValueError("vertices come from a different simplotope")
        if len(set(vs)) != len(vs):
            raise ValueError("vertices must be distinct")
        if not 1 <= len(vs) <= spec.dim + 1:
            raise ValueError("a simplex has between 1 and dim+1 vertices")
        self.spec = spec
        self.vertices = vs

    def __eq__(self, other):
        return isinstance(other, VertexSimplex) and self.vertex_set == other.vertex_set

    def __hash__(self):
        return hash(self.vertex_set)

    def __repr__(self):
        return f"VertexSimplex({[v.idx for v in self.vertices]})"

    @cached_property
    def vertex_set(self) -> frozenset[VertexPoint]:
        return frozenset(self.vertices)

    @cached_property
    def cls(self) -> int:
        """Normalized volume; only full-dimensional simplices carry a class."""
        return class_of(self, self.vertices[0])

    @property
    def is_degenerate(self) -> bool:
        return self.cls == 0


def class_of(x: VertexSimplex, pivot: VertexPoint) -> int:
    """|det [1 | reduced matrix]| of a full-dimensional vertex simplex.

    The value does not depend on the pivot used for the reduction.
    """
    d = x.spec.dim
    if len(x.vertices) != d + 1:
        raise ValueError(f"need {d + 1} vertices for a full-dimensional simplex")
    rows = [(1,) + v.reduced(pivot) for v in x.vertices]
    return abs(det(rows))


def face_class(points: Sequence[VertexPoint]) -> int:
    """Class of a vertex simplex inside its minimal face.

    The points must span that face's dimension (one more point than the
    face dimension); this is the class that Proposition-style divisibility
    statements about exterior faces refer to.
    """
    fid = minimal_face(points)
    if fid.dim == 0:
        if len(points) != 1:
            raise ValueError("several points cannot span a vertex")
        return 1
    local = fid.local_spec()
    if len(points) != local.dim + 1:
        raise ValueError("points do not span their minimal face")
    xs = VertexSimplex(local, [fid.localize(p) for p in points])
    return xs.cls


def exterior_faces(x: VertexSimplex, sig: tuple[int, int]) -> list[tuple[tuple[VertexPoint, ...], FaceId]]:
    """All exterior faces of x with the given (s', t') signature.

    An exterior j-face is a set of j+1 vertices of x lying in a common j-face
    of the simplotope; here j = s' + 2t' and the face must be a product of s'
    segments and t' triangles.
    """
    if x.cls == 0:
        raise ValueError("exterior faces are only defined for nondegenerate simplices")
    sp, tp = sig
    k = sp + 2 * tp
    if k + 1 > len(x.vertices):
        return []
    out = []
    for subset in itertools.combinations(x.vertices, k + 1):
        fid = minimal_face(subset)
        if fid.dim != k:
            continue
        fsig = fid.signature()
        if (fsig.sp, fsig.tp) == (sp, tp):
            out.append((subset, fid))
    return out


def has_exterior_facet(x: VertexSimplex) -> bool:
    """True when some d of the d+1 vertices lie in a facet of the simplotope."""
    if x.cls == 0:
        raise ValueError("exterior facets are only defined for nondegenerate simplices")
    for subset in itertools.combinations(x.vertices, len(x.vertices) - 1):
        if len(minimal_face(subset).zeros) >= 1:
            return True
    return False


def is_parallel(f1: FaceId, f2: FaceId) -> bool:
    """Faces are parallel when they have exactly the same free coordinates."""
    if f1.spec != f2.spec:
        raise ValueError("faces come from different simplotopes")
    return f1.free_coords() == f2.free_coords()


def is_tri_positioned(f1: FaceId, f2: FaceId, f3: FaceId) -> bool:
    """Same zero coordinates except in one triangle factor, where the three
    faces each fix a different single coordinate at zero."""
    faces = (f1, f2, f3)
    spec = f1.spec
    if any(f.spec != spec for f in faces):
        raise ValueError("faces come from different simplotopes")
    for i, c in enumerate(spec.factors):
        if c != 2:
            continue
        inside = [frozenset(j for fi, j in f.zeros if fi == i) for f in faces]
        outside = [frozenset(z for z in f.zeros if z[0] != i) for f in faces]
        if outside[0] == outside[1] == outside[2] \
                and all(len(z) == 1 for z in inside) \
                and len(set(inside)) == 3:
            return True
    return False


def corner_simplex(spec: SimplotopeSpec, v: VertexPoint) -> VertexSimplex:
    """The simplex on v and all vertices one edge away from v (class 1)."""
    if v.spec != spec:
        raise ValueError("vertex comes from a different simplotope")
    return VertexSimplex(spec, [v] + v.neighbors())


def _exterior_subset_check(face: Sequence[VertexPoint], x: VertexSimplex, name: str) -> tuple[VertexPoint, ...]:
    vs = tuple(face)
    if not set(vs) <= x.vertex_set:
        raise ValueError(f"{name} is not a vertex subset of the simplex")
    if minimal_face(vs).dim != len(vs) - 1:
        raise ValueError(f"{name} is not an exterior face of the simplex")
    return vs


def footprint(tau: Sequence[VertexPoint], sigma: Sequence[VertexPoint],
              x: VertexSimplex) -> tuple[VertexPoint, ...]:
    """The intersection of two exterior faces of x, as a vertex subset."""
    t = _exterior_subset_check(tau, x, "tau")
    s = set(_exterior_subset_check(sigma, x, "sigma"))
    return tuple(v for v in t if v in s)


def shadow(tau: Sequence[VertexPoint], sigma: Sequence[VertexPoint],
           x: VertexSimplex) -> tuple[VertexPoint, ...]:
    """Image of tau under the projection that collapses sigma to a point.

    In reduced coordinates with respect to a vertex of sigma, the projection
    zeroes the free coordinates of sigma and keeps its zero coordinates, so
    vertices map to vertices.  Distinct images are returned in tau's order;
    the projection is one-to-one on vertices of x outside sigma.
    """
    if x.cls == 0:
        raise ValueError("shadows are only defined for nondegenerate simplices")
    t = _exterior_subset_check(tau, x, "tau")
    s = _exterior_subset_check(sigma, x, "sigma")
    pivot = s[0]
    sigma_face = minimal_face(s)
    spec = x.spec
    out: list[VertexPoint] = []
    seen = set()
    for u in t:
        idx = []
        for i in range(len(spec.factors)):
            j = u.idx[i]
            # Coordinates free on sigma project to 0; the block's 1 then
            # lands on the pivot's coordinate for that factor.
            if j != pivot.idx[i] and (i, j) not in sigma_face.zeros:
                idx.append(pivot.idx[i])
            else:
                idx.append(j)
        pv = VertexPoint(spec, tuple(idx))
        if pv not in seen:
            seen.add(pv)
            out.append(pv)
    return tuple(out)
