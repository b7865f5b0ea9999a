"""Newton polyhedra conv(A) + R_+^n with exact combinatorics.

A polyhedron is built from a finite exponent set: its vertices are the
inclusion-minimal generators, and its compact facets are enumerated by a
brute-force scan of n-subsets of vertices validated as supporting
hyperplanes with strictly positive normal. Facet normals are stored in
primitive integer form so that outputs are reproducible; coplanar
candidates merge into a single facet. Covolume (the volume of the
positive orthant minus the polyhedron) is the sum of the cone volumes
over the compact facets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .errors import InvalidInputError, NotPrimaryError
from .geometry import cone_point_member, dot, hyperplane_normal, polytope_volume, scale_primitive
from .linprog import INFEASIBLE, minimize
from .rationals import exponent_vector, vector


@dataclass(frozen=True)
class Facet:
    """A compact facet: primitive strictly positive inner normal ``normal``,
    support value ``support`` = min over the polyhedron of <normal, .>, and
    the indices of the incident vertices."""

    normal: tuple[int, ...]
    support: Fraction
    vertex_indices: tuple[int, ...]


class NewtonPolyhedron:
    """conv(generators) + positive orthant. Treat instances as immutable."""

    def __init__(self, generators):
        gens = sorted({exponent_vector(g) for g in generators})
        if not gens:
            raise InvalidInputError("at least one generator is required")
        dims = {len(g) for g in gens}
        if len(dims) != 1:
            raise InvalidInputError("generators mix dimensions")
        self.dimension = dims.pop()
        self.generators = tuple(gens)
        self.vertices = self._minimal_vertices()
        self.compact_facets = self._enumerate_facets()

    def _minimal_vertices(self):
        # Dominated generators are trivially redundant; prune them before
        # the LP-based reduction.
        cands = [
            p
            for p in self.generators
            if not any(
                q != p and all(qc <= pc for qc, pc in zip(q, p)) for q in self.generators
            )
        ]
        keep = list(cands)
        for p in cands:
            if len(keep) == 1:
                break
            others = [q for q in keep if q != p]
            if cone_point_member(p, others):
                keep.remove(p)
        return tuple(sorted(keep))

    def _enumerate_facets(self):
        n = self.dimension
        verts = self.vertices
        if len(verts) < n:
            return ()
        found = {}
        for idx in combinations(range(len(verts)), n):
            pts = [verts[i] for i in idx]
            w = hyperplane_normal(pts)
            if not any(w):
                continue
            if all(c < 0 for c in w):
                w = tuple(-c for c in w)
            if any(c <= 0 for c in w):
                continue
            h = dot(w, pts[0])
            vals = [dot(w, v) for v in verts]
            if min(vals) < h:
                continue
            key = scale_primitive(w, h)
            if key not in found:
                found[key] = tuple(i for i, v in enumerate(vals) if v == h)
        facets = [Facet(w, h, inc) for (w, h), inc in found.items()]
        facets.sort(key=lambda f: (f.normal, f.support))
        return tuple(facets)

    def facet_points(self, facet: Facet):
        return tuple(self.vertices[i] for i in facet.vertex_indices)

    @cached_property
    def axis_intercepts(self):
        """Per axis k, the least c with c*e_k in the polyhedron (exact LP);
        math.inf when the polyhedron misses the axis."""
        n = self.dimension
        verts = self.vertices
        l = len(verts)
        zero, one = Fraction(0), Fraction(1)
        out = []
        for k in range(n):
            rows = []
            for i in range(n):
                row = [v[i] for v in verts]
                row.append(-one if i == k else zero)
                row.extend(one if j == i else zero for j in range(n))
                rows.append(row)
            rows.append([one] * l + [zero] * (n + 1))
            rhs = [zero] * n + [one]
            cost = [zero] * l + [one] + [zero] * n
            res = minimize(cost, rows, rhs)
            out.append(math.inf if res.status == INFEASIBLE else res.objective)
        return tuple(out)

    @cached_property
    def _facet_cone_volumes(self):
        origin = (Fraction(0),) * self.dimension
        return tuple(
            polytope_volume([origin, *self.facet_points(f)]) for f in self.compact_facets
        )

    def covolume(self) -> Fraction:
        """Volume of R_+^n minus the polyhedron, summed facet cone by cone."""
        if any(m == math.inf for m in self.axis_intercepts):
            raise NotPrimaryError("covolume is infinite: some axis is never reached")
        return sum(self._facet_cone_volumes, Fraction(0))

    def support_min(self, direction) -> Fraction:
        """min over generators of <g, direction> for direction >= 0."""
        w = vector(direction, self.dimension)
        if any(c < 0 for c in w):
            raise InvalidInputError("direction must be componentwise nonnegative")
        return min(dot(g, w) for g in self.generators)

    def minkowski_sum(self, other: "NewtonPolyhedron") -> "NewtonPolyhedron":
        if self.dimension != other.dimension:
            raise InvalidInputError("Minkowski sum needs equal dimensions")
        sums = [
            tuple(a + b for a, b in zip(p, q))
            for p in self.vertices
            for q in other.vertices
        ]
        return NewtonPolyhedron(sums)

    def contains(self, point) -> bool:
        return cone_point_member(point, self.vertices)

    def __eq__(self, other):
        if not isinstance(other, NewtonPolyhedron):
            return NotImplemented
        return self.dimension == other.dimension and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.dimension, self.vertices))

    def __repr__(self):
        verts = ", ".join(str(tuple(map(str, v))) for v in self.vertices)
        return f"NewtonPolyhedron(dim={self.dimension}, vertices=[{verts}])"
