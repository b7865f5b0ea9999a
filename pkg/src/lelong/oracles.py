"""Independent verification paths for the exact kernel.

Each oracle recomputes a kernel quantity by different means: an exact
2-D staircase sum for covolumes, seeded Monte Carlo volume estimates,
Minkowski-sum polarization for mixed multiplicities, direct liminf
sampling for directional numbers and relative types, and a sampled
quasi-triangle inequality for directional weights. Floating-point
oracles report values and tolerances; they never feed back into exact
results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import InvalidInputError, NotPrimaryError
from .geometry import cone_point_member
from .ideals import PrimaryMonomialIdeal
from .newton import NewtonPolyhedron
from .rationals import exponent_vector, vector
from .weights import HomogeneousPsh, MonomialWeight


def covolume_staircase_2d(generators) -> Fraction:
    """Exact 2-D covolume as a trapezoid sum under the staircase.

    Independent of the facet machinery: keeps the Pareto-minimal points,
    takes their lower hull by a monotone chain, and integrates the
    resulting piecewise-linear boundary between the two axis intercepts.
    """
    pts = sorted({exponent_vector(g) for g in generators})
    if any(len(p) != 2 for p in pts):
        raise InvalidInputError("the staircase oracle is for dimension 2")
    for k in range(2):
        if not any(p[k] > 0 and p[1 - k] == 0 for p in pts):
            raise NotPrimaryError(f"no pure power on axis {k}")
    minimal = [
        p
        for p in pts
        if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in pts)
    ]
    minimal.sort()
    hull: list[tuple[Fraction, Fraction]] = []
    for p in minimal:
        while len(hull) >= 2:
            a, b = hull[-2], hull[-1]
            cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    area = Fraction(0)
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        area += (x1 - x0) * (y0 + y1) / 2
    return area


@dataclass(frozen=True)
class McEstimate:
    """Seeded Monte Carlo estimate with its standard error."""

    value: float
    standard_error: float
    samples: int
    seed: int


def covolume_monte_carlo(poly: NewtonPolyhedron, samples: int, seed: int) -> McEstimate:
    """Estimate the covolume by uniform sampling in the intercept box.

    Membership of each (exactly rationalized) sample is decided by
    cone_point_member, so the indicator itself is exact; only the
    estimate is statistical. Deterministic per (seed, samples) thanks to
    the counter-based Philox generator.
    """
    if samples < 1000:
        raise InvalidInputError("need at least 1000 samples")
    box = poly.axis_intercepts
    if any(m == math.inf for m in box):
        raise NotPrimaryError("covolume is infinite: some axis is never reached")
    rng = np.random.Generator(np.random.Philox(seed))
    u = rng.random((samples, poly.dimension))
    outside = 0
    verts = poly.vertices
    for row in u:
        x = tuple(Fraction(float(c)) * m for c, m in zip(row, box))
        if not cone_point_member(x, verts):
            outside += 1
    box_volume = float(math.prod(box))
    p = outside / samples
    std = math.sqrt(p * (1 - p) * samples / (samples - 1))
    return McEstimate(
        value=box_volume * p,
        standard_error=box_volume * std / math.sqrt(samples),
        samples=samples,
        seed=seed,
    )


def _poly_coeffs(values):
    """Coefficients of the polynomial interpolating values at 0, 1, ..., n."""
    n = len(values) - 1
    rows = [
        [Fraction(t) ** j for j in range(n + 1)] + [Fraction(values[t])]
        for t in range(n + 1)
    ]
    for col in range(n + 1):
        piv = next(r for r in range(col, n + 1) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        rows[col] = [v / rows[col][col] for v in rows[col]]
        for r in range(n + 1):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [rows[i][-1] for i in range(n + 1)]


def mixed_multiplicity_polarization(
    j: PrimaryMonomialIdeal, i: PrimaryMonomialIdeal
) -> Fraction:
    """Mixed multiplicity via dilated Minkowski sums.

    Evaluates T(t) = n! covol(Gamma_i + t Gamma_j) at t = 0..n, fits the
    degree-n polynomial exactly, and returns the linear coefficient over
    n. Entirely disjoint from the measure aggregation path.
    """
    if not isinstance(j, PrimaryMonomialIdeal) or not isinstance(i, PrimaryMonomialIdeal):
        raise NotPrimaryError("polarization needs two primary ideals")
    if j.dimension != i.dimension:
        raise InvalidInputError("ideals have different dimensions")
    n = i.dimension
    vi = NewtonPolyhedron(i.generators).vertices
    vj = NewtonPolyhedron(j.generators).vertices
    values = []
    for t in range(n + 1):
        sums = [
            tuple(a + t * b for a, b in zip(p, q)) for p in vi for q in vj
        ]
        values.append(math.factorial(n) * NewtonPolyhedron(sums).covolume())
    coeffs = _poly_coeffs(values)
    return coeffs[1] / n


def directional_lelong_numeric(u: HomogeneousPsh, direction, r: float = -1000.0) -> float:
    """f_u(r a) / r in floating point; exact for homogeneous data."""
    if r > -100:
        raise InvalidInputError("need r <= -100")
    a = [float(c) for c in vector(direction, u.dimension)]
    if any(c <= 0 for c in a):
        raise InvalidInputError("direction must be componentwise positive")
    best = max(sum(float(g) * r * c for g, c in zip(gen, a)) for gen in u.generators)
    return best / r


def relative_type_numeric(u: HomogeneousPsh, phi: MonomialWeight, grid_depth: int = 32) -> float:
    """Sampled minimum of f_u / f_phi over the level set {f_phi = -1}.

    Directions run over a nested simplex grid plus a family pushed
    toward the recession cone, so the estimate converges to the type
    from above as grid_depth grows.
    """
    if grid_depth < 10:
        raise InvalidInputError("need grid_depth >= 10")
    n = u.dimension
    if phi.dimension != n:
        raise InvalidInputError("dimension mismatch")
    gens_u = [[float(c) for c in g] for g in u.generators]
    gens_phi = [[float(c) for c in g] for g in phi.generators]

    def f(gens, t):
        return max(sum(g[k] * t[k] for k in range(n)) for g in gens)

    directions = []
    for combo in combinations(range(1, grid_depth), n - 1):
        parts = []
        prev = 0
        for c in combo:
            parts.append(c - prev)
            prev = c
        parts.append(grid_depth - prev)
        directions.append([-p / grid_depth for p in parts])
    push = 1e-8
    for mask in range(1, 2**n - 1):
        d = [-1.0 if mask & (1 << k) else -push for k in range(n)]
        directions.append(d)
    best = math.inf
    for d in directions:
        fphi = f(gens_phi, d)
        if fphi >= 0:
            continue
        t = [c / -fphi for c in d]
        best = min(best, -f(gens_u, t))
    return best


@dataclass(frozen=True)
class QuasiTriangleReport:
    max_violation: float
    passed: bool
    samples: int
    seed: int
    constant: float


def quasi_triangle_check(
    direction, samples: int = 10000, seed: int = 0, constant: float | None = None
) -> QuasiTriangleReport:
    """Sampled check of phi(y - x) <= K + max(phi(x), phi(y)).

    phi is the directional weight max_k log|z_k| / a_k on the unit
    polydisk and the default constant is K = log(2) / min(a). Points are
    complex, so near-antipodal coordinate pairs (the tight case) occur.
    """
    a = vector(direction)
    if any(c <= 0 for c in a):
        raise InvalidInputError("direction must be componentwise positive")
    af = np.array([float(c) for c in a])
    n = len(a)
    k_const = math.log(2.0) / float(min(a)) if constant is None else float(constant)
    rng = np.random.Generator(np.random.Philox(seed))

    def draw():
        radius = rng.random((samples, n))
        angle = rng.random((samples, n)) * (2.0 * math.pi)
        return radius * np.exp(1j * angle)

    x = draw()
    y = draw()

    def phi(z):
        with np.errstate(divide="ignore"):
            return np.max(np.log(np.abs(z)) / af, axis=1)

    violation = phi(y - x) - k_const - np.maximum(phi(x), phi(y))
    worst = float(np.max(violation))
    return QuasiTriangleReport(
        max_violation=worst,
        passed=worst <= 1e-12,
        samples=samples,
        seed=seed,
        constant=k_const,
    )
