"""Monomial ideals: Samuel and mixed multiplicities, containment reports.

A monomial ideal is a finite set of integer exponent vectors; an ideal
containing a pure power of every variable has finite colength and its
multiplicity theory is carried entirely by the weight max_j log|z^(g_j)|.
Mixed multiplicities are computed through the measure aggregation path
(one code path, verified independently by the Minkowski polarization
oracle).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import InvalidInputError, NotPrimaryError
from .weights import HomogeneousPsh, MonomialWeight, generalized_lelong
from .rationals import exponent_vector


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise AssertionError(f"{what} must be an integer, got {value}")
    return int(value)


class MonomialIdeal:
    """Finite set of integer exponent vectors, deduplicated and sorted."""

    def __init__(self, generators):
        vecs = sorted({exponent_vector(g) for g in generators})
        if not vecs:
            raise InvalidInputError("at least one generator is required")
        dims = {len(v) for v in vecs}
        if len(dims) != 1:
            raise InvalidInputError("generators mix dimensions")
        for v in vecs:
            if any(c.denominator != 1 for c in v):
                raise InvalidInputError(f"ideal exponents must be integers, got {v}")
        self.dimension = dims.pop()
        self.generators = tuple(tuple(int(c) for c in v) for v in vecs)

    @cached_property
    def psh(self) -> HomogeneousPsh:
        return HomogeneousPsh(self.generators)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.generators)!r})"


class PrimaryMonomialIdeal(MonomialIdeal):
    """A monomial ideal with a pure power of every variable (and no unit)."""

    def __init__(self, generators):
        super().__init__(generators)
        n = self.dimension
        if (0,) * n in self.generators:
            raise NotPrimaryError("the ideal contains a unit")
        for k in range(n):
            if not any(
                g[k] >= 1 and all(g[i] == 0 for i in range(n) if i != k)
                for g in self.generators
            ):
                raise NotPrimaryError(f"no pure power of variable {k}")

    @cached_property
    def weight(self) -> MonomialWeight:
        return MonomialWeight(self.generators)


def samuel_multiplicity(ideal: PrimaryMonomialIdeal) -> int:
    """Residual mass of the associated weight; a positive integer."""
    if not isinstance(ideal, PrimaryMonomialIdeal):
        raise NotPrimaryError("Samuel multiplicity needs a primary ideal")
    e = _as_int(ideal.weight.residual_mass(), "Samuel multiplicity")
    if e <= 0:
        raise AssertionError("Samuel multiplicity must be positive")
    return e


def mixed_multiplicity(j: MonomialIdeal, i: PrimaryMonomialIdeal) -> int:
    """Multiplicity of j against n-1 copies of i, via the measure of i."""
    if not isinstance(i, PrimaryMonomialIdeal):
        raise NotPrimaryError("mixed multiplicity needs a primary second ideal")
    if j.dimension != i.dimension:
        raise InvalidInputError("ideals have different dimensions")
    return _as_int(generalized_lelong(j.psh, i.weight), "mixed multiplicity")


def minimal_multiplicity(j: MonomialIdeal) -> int:
    """Least total degree of a generator; equals the mixed multiplicity
    against the maximal ideal."""
    return min(sum(g) for g in j.generators)


def axis_multiplicities(i: PrimaryMonomialIdeal) -> tuple[int, ...]:
    """Mixed multiplicity of each coordinate ideal (z_k) against i."""
    n = i.dimension
    out = []
    for k in range(n):
        probe = MonomialIdeal([tuple(int(idx == k) for idx in range(n))])
        out.append(mixed_multiplicity(probe, i))
    return tuple(out)


def containment_exponents(i: PrimaryMonomialIdeal, p: int) -> tuple[int, ...]:
    """Per axis, the least integer q with p/q at most the axis multiplicity."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 1:
        raise InvalidInputError("p must be a positive integer")
    return tuple(-(-p // e) for e in axis_multiplicities(i))


@dataclass(frozen=True)
class GeneratorContainment:
    exponent: tuple[int, ...]
    axis_bound: bool
    closure_member: bool
    literal_member: bool


@dataclass(frozen=True)
class ContainmentReport:
    """Per-generator containment facts for (j, i, p).

    ``hypothesis`` records whether the mixed multiplicity of j against i
    reaches p. When it does, ``axis_bound`` holds for every generator
    (sum_k beta_k e_k >= p follows from linearity of the aggregate in a
    principal probe). ``closure_member`` tests beta against the hull of
    the integer points p_k e_k and ``literal_member`` tests a literal
    single-power domination; neither is implied by the hypothesis, the
    report only states them.
    """

    p: int
    mixed_multiplicity: int
    hypothesis: bool
    axis_multiplicities: tuple[int, ...]
    exponents: tuple[int, ...]
    generators: tuple[GeneratorContainment, ...]

    @property
    def all_axis_bound(self) -> bool:
        return all(g.axis_bound for g in self.generators)

    @property
    def all_closure(self) -> bool:
        return all(g.closure_member for g in self.generators)

    @property
    def all_literal(self) -> bool:
        return all(g.literal_member for g in self.generators)


def closure_containment_check(
    j: MonomialIdeal, i: PrimaryMonomialIdeal, p: int
) -> ContainmentReport:
    """Assemble the containment report for (j, i, p)."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 1:
        raise InvalidInputError("p must be a positive integer")
    if j.dimension != i.dimension:
        raise InvalidInputError("ideals have different dimensions")
    e = mixed_multiplicity(j, i)
    e_axes = axis_multiplicities(i)
    p_k = tuple(-(-p // ek) for ek in e_axes)
    rows = []
    for beta in j.generators:
        axis_bound = sum(b * ek for b, ek in zip(beta, e_axes)) >= p
        closure = sum(Fraction(b, q) for b, q in zip(beta, p_k)) >= 1
        literal = any(b >= q for b, q in zip(beta, p_k))
        rows.append(GeneratorContainment(beta, axis_bound, closure, literal))
    return ContainmentReport(
        p=p,
        mixed_multiplicity=e,
        hypothesis=e >= p,
        axis_multiplicities=e_axes,
        exponents=p_k,
        generators=tuple(rows),
    )
