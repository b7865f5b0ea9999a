"""Homogeneous plurisubharmonic models and their singularity invariants.

A function f(t) = max_j <b_j, t> on the closed negative orthant, with
nonnegative rational exponent vectors b_j, is the logarithmic model of
the singularity of max_j log|z^(b_j)| at the origin. Everything this
module computes is exact and read off the Newton polyhedron of the
exponent set:

* the residual Monge-Ampere mass (n! times the covolume),
* the atomic measure on the extreme points of the level set {f = -1},
  one atom per compact facet (vertex -normal/support, mass n! times the
  facet cone volume), whose total mass equals the residual mass,
* directional numbers min_j <b_j, a> and their weighted aggregates,
* relative types, flatness, the extremal simplicial direction, and the
  Lojasiewicz exponent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import InvalidInputError, NotPrimaryError
from .geometry import dot
from .newton import NewtonPolyhedron
from .rationals import exponent_vector, vector

NEG_INFINITY = float("-inf")


class HomogeneousPsh:
    """Maximum of linear forms with nonnegative rational exponents.

    Instances are immutable value objects; every derived quantity is
    cached on first use.
    """

    def __init__(self, generators):
        gens = sorted({exponent_vector(g) for g in generators})
        if not gens:
            raise InvalidInputError("at least one exponent vector is required")
        dims = {len(g) for g in gens}
        if len(dims) != 1:
            raise InvalidInputError("generators mix dimensions")
        self.dimension = dims.pop()
        self.generators = tuple(gens)

    @cached_property
    def polyhedron(self) -> NewtonPolyhedron:
        return NewtonPolyhedron(self.generators)

    def evaluate(self, t):
        """max_j <b_j, t> for t in the closed negative orthant.

        Coordinates may be -inf; a term with a positive exponent on an
        infinite coordinate evaluates to -inf, a zero exponent ignores it.
        Returns a Fraction, or -inf when every term is -inf.
        """
        coords = []
        for c in t:
            if isinstance(c, float):
                if c == NEG_INFINITY:
                    coords.append(None)
                    continue
                raise InvalidInputError(f"finite coordinates must be rational, got {c!r}")
            q = Fraction(c)
            if q > 0:
                raise InvalidInputError("evaluation point must be componentwise <= 0")
            coords.append(q)
        if len(coords) != self.dimension:
            raise InvalidInputError(
                f"expected a point of dimension {self.dimension}, got {len(coords)}"
            )
        best = None
        for g in self.generators:
            val = Fraction(0)
            dead = False
            for gc, tc in zip(g, coords):
                if tc is None:
                    if gc > 0:
                        dead = True
                        break
                else:
                    val += gc * tc
            if not dead and (best is None or val > best):
                best = val
        return NEG_INFINITY if best is None else best

    def directional_lelong(self, direction) -> Fraction:
        """min_j <b_j, a> for a strictly positive direction a."""
        a = vector(direction, self.dimension)
        if any(c <= 0 for c in a):
            raise InvalidInputError("direction must be componentwise positive")
        return min(dot(g, a) for g in self.generators)

    def __repr__(self):
        gens = ", ".join(str(tuple(map(str, g))) for g in self.generators)
        return f"{type(self).__name__}([{gens}])"


@dataclass(frozen=True)
class LelongAtom:
    """One extreme point of the level set {f = -1} with its mass."""

    vertex: tuple[Fraction, ...]
    mass: Fraction


@dataclass(frozen=True)
class LelongMeasure:
    atoms: tuple[LelongAtom, ...]

    @property
    def total_mass(self) -> Fraction:
        return sum((a.mass for a in self.atoms), Fraction(0))


class MonomialWeight(HomogeneousPsh):
    """A homogeneous model with a positive pure power on every axis.

    The pure powers force the pole set of the underlying function down to
    the origin alone, all axis intercepts finite, and the residual mass
    positive. Construction raises NotPrimaryError otherwise.
    """

    def __init__(self, generators):
        super().__init__(generators)
        n = self.dimension
        if (Fraction(0),) * n in self.generators:
            raise NotPrimaryError("a zero exponent vector forces zero residual mass")
        for k in range(n):
            if not any(
                g[k] > 0 and all(g[i] == 0 for i in range(n) if i != k)
                for g in self.generators
            ):
                raise NotPrimaryError(f"no pure power on axis {k}")

    @cached_property
    def _residual_mass(self) -> Fraction:
        return math.factorial(self.dimension) * self.polyhedron.covolume()

    def residual_mass(self) -> Fraction:
        """Total mass of the measure; n! times the covolume. Positive."""
        return self._residual_mass

    @cached_property
    def _measure(self) -> LelongMeasure:
        nfact = math.factorial(self.dimension)
        poly = self.polyhedron
        atoms = []
        for facet, vol in zip(poly.compact_facets, poly._facet_cone_volumes):
            t = tuple(Fraction(-c) / facet.support for c in facet.normal)
            atoms.append(LelongAtom(t, nfact * vol))
        return LelongMeasure(tuple(atoms))

    def lelong_measure(self) -> LelongMeasure:
        """One atom per compact facet with normal w and support h: the
        extreme point -w/h of {f = -1} weighted by n! times the volume of
        the cone over the facet."""
        return self._measure

    def extremal_direction(self) -> "DirectionalWeight":
        """The barycenter a of the normalized measure, a_k being the
        normalized aggregate of the k-th axis probe; the simplicial
        weight it defines is the extremal upper-envelope singularity."""
        tau = self.residual_mass()
        atoms = self.lelong_measure().atoms
        a = tuple(
            sum((atom.mass * -atom.vertex[k] for atom in atoms), Fraction(0)) / tau
            for k in range(self.dimension)
        )
        return DirectionalWeight(a)

    def is_flat(self) -> bool:
        """True iff the polyhedron has a single compact facet, i.e. the
        model is simplicial and its normalized aggregates equal types."""
        return len(self.lelong_measure().atoms) == 1

    def flatness_witness(self) -> HomogeneousPsh | None:
        """A single-generator probe with strictly larger normalized
        aggregate than relative type, or None when the weight is flat.

        The probes scanned are the axis exponents e_k and the vertex
        exponents of the polyhedron rescaled to normalized aggregate 1;
        for a non-simplicial weight some axis probe always separates.
        """
        if self.is_flat():
            return None
        n = self.dimension
        probes = []
        for k in range(n):
            probes.append(tuple(Fraction(int(i == k)) for i in range(n)))
        for v in self.polyhedron.vertices:
            nt = generalized_lelong(HomogeneousPsh([v]), self, normalized=True)
            if nt > 0:
                probes.append(tuple(c / nt for c in v))
        for exponent in probes:
            probe = HomogeneousPsh([exponent])
            if generalized_lelong(probe, self, normalized=True) > relative_type(probe, self):
                return probe
        return None

    def lojasiewicz_exponent(self) -> Fraction:
        """Largest axis intercept of the polyhedron; finite by validity."""
        return max(self.polyhedron.axis_intercepts)


class DirectionalWeight(MonomialWeight):
    """Simplicial weight with generators e_k / a_k for a positive a.

    Its polyhedron has the single compact facet through the points
    e_k / a_k, the measure is one atom at -a with mass 1/(a_1...a_n),
    and the weight is flat.
    """

    def __init__(self, direction):
        d = vector(direction)
        if any(c <= 0 for c in d):
            raise InvalidInputError("direction must be componentwise positive")
        self.direction = d
        n = len(d)
        gens = [
            tuple(1 / d[k] if i == k else Fraction(0) for i in range(n)) for k in range(n)
        ]
        super().__init__(gens)


def _check_pair(u: HomogeneousPsh, phi: MonomialWeight):
    if not isinstance(phi, MonomialWeight):
        raise NotPrimaryError("the second argument must be a MonomialWeight")
    if u.dimension != phi.dimension:
        raise InvalidInputError(
            f"dimension mismatch: {u.dimension} versus {phi.dimension}"
        )


def generalized_lelong(u: HomogeneousPsh, phi: MonomialWeight, normalized: bool = False):
    """Aggregate of u's directional numbers against phi's measure.

    Sum over atoms (t, mass) of mass * min_j <b_j, -t>; with
    ``normalized`` the result is divided by phi's residual mass.
    """
    _check_pair(u, phi)
    total = Fraction(0)
    for atom in phi.lelong_measure().atoms:
        total += atom.mass * u.directional_lelong(tuple(-c for c in atom.vertex))
    if normalized:
        return total / phi.residual_mass()
    return total


def relative_type(u: HomogeneousPsh, phi: MonomialWeight) -> Fraction:
    """min over atoms t of min_j <b_j, -t>.

    The minimum over the whole level set {f_phi = -1} is attained at its
    extreme points because the objective is nondecreasing along the
    recession cone; the numeric oracle cross-checks this reduction.
    """
    _check_pair(u, phi)
    return min(
        u.directional_lelong(tuple(-c for c in atom.vertex))
        for atom in phi.lelong_measure().atoms
    )
