"""Eigenvalue localization, energy bounds, and energy-based classification.

For odd orders the alpha matrix of a unit-sum Cayley graph splits exactly into
a symmetric left-circulant part plus a diagonal whose entries take only two
values, so every eigenvalue is trapped in a unit-width interval around a
sorted circulant eigenvalue.  Degree statistics give computable lower and
upper bounds on the alpha energy, and comparing the energy against the
complete graph's classifies a graph as borderenergetic or hyperenergetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .closedform import (
    alpha_energy_from_values,
    build_alpha_matrix,
    complete_energy,
    energy_report,
)
from .graphs import FAMILY_UACG, GraphSpec, build_graph
from .linalg import left_circulant_eigenvalues, symmetric_eigenvalues
from .numtheory import euler_phi

__all__ = [
    "BOUND_SLACK",
    "BoundReport",
    "ClassificationReport",
    "IndexBound",
    "ObservedBound",
    "VERDICT_BORDER",
    "VERDICT_HYPER",
    "VERDICT_NEITHER",
    "bound_report",
    "classify",
    "complement_energy_bounds",
    "eigenvalue_intervals",
    "find_borderenergetic_alphas",
    "odd_complement_eigen_bounds",
    "odd_uacg_eigen_bounds",
    "uacg_energy_bounds",
]

VERDICT_BORDER = "borderenergetic"
VERDICT_HYPER = "hyperenergetic"
VERDICT_NEITHER = "neither"

ENERGY_BOUND_NAMES = ("frobenius", "edge_count", "zagreb", "max_degree")

# Slack used when testing whether an observed value satisfies its interval.
BOUND_SLACK = 1e-8


@dataclass(frozen=True)
class IndexBound:
    """Closed interval guaranteed to contain the k-th largest eigenvalue.

    index is the rank k, counted from 1 for the largest eigenvalue.
    """

    index: int
    lower: float
    upper: float


@dataclass(frozen=True)
class ObservedBound:
    """An IndexBound together with the numerically observed eigenvalue."""

    index: int
    lower: float
    upper: float
    observed: float
    satisfied: bool


def _check_alpha_closed(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def _check_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"the circulant-plus-diagonal split needs odd n >= 3, got {n}")


def _coprime_symbol(n: int, weight: float, complement: bool) -> np.ndarray:
    if complement:
        gen = (weight if math.gcd(j, n) != 1 else 0.0 for j in range(n))
    else:
        gen = (weight if math.gcd(j, n) == 1 else 0.0 for j in range(n))
    return np.fromiter(gen, dtype=float, count=n)


def odd_uacg_eigen_bounds(n: int, alpha: float) -> tuple[IndexBound, ...]:
    """Unit-width interval for each alpha-matrix eigenvalue, odd unit-sum graph.

    The alpha matrix equals (1-alpha) times the symmetric left circulant with
    coprime-indicator symbol plus a diagonal whose entries are alpha*phi(n) on
    non-units and alpha*phi(n) - 1 on units; eigenvalue inequalities for
    matrix sums then pin the k-th sorted eigenvalue between the k-th sorted
    circulant eigenvalue plus those two diagonal extremes.
    """
    _check_odd(n)
    alpha = _check_alpha_closed(alpha)
    phi = euler_phi(n)
    beta = left_circulant_eigenvalues(_coprime_symbol(n, 1.0 - alpha, False))
    hi = alpha * phi
    return tuple(
        IndexBound(index=k + 1, lower=float(beta[k] + hi - 1.0), upper=float(beta[k] + hi))
        for k in range(n)
    )


def odd_complement_eigen_bounds(n: int, alpha: float) -> tuple[IndexBound, ...]:
    """Same localization for the complement of the odd unit-sum graph.

    Here the circulant symbol marks the non-coprime residues (including 0)
    and the diagonal entries are alpha*(n - phi(n)) on units and one less on
    non-units.
    """
    _check_odd(n)
    alpha = _check_alpha_closed(alpha)
    phi = euler_phi(n)
    beta = left_circulant_eigenvalues(_coprime_symbol(n, 1.0 - alpha, True))
    hi = alpha * (n - phi)
    return tuple(
        IndexBound(index=k + 1, lower=float(beta[k] + hi - 1.0), upper=float(beta[k] + hi))
        for k in range(n)
    )


def eigenvalue_intervals(spec: GraphSpec, alpha: float) -> tuple[IndexBound, ...]:
    """Dispatch the interval localization; only odd unit-sum specs have one."""
    if spec.family != FAMILY_UACG:
        raise ValueError(
            f"eigenvalue intervals are defined for the unit-sum family, not {spec.family!r}"
        )
    if spec.complement:
        return odd_complement_eigen_bounds(spec.n, alpha)
    return odd_uacg_eigen_bounds(spec.n, alpha)


# ---------------------------------------------------------------------------
# Energy bounds from degree statistics.


def _degree_params(n: int, complement: bool) -> tuple[int, int, int]:
    """(edge count, sum of squared degrees, max degree) for odd unit-sum specs."""
    phi = euler_phi(n)
    counts = {phi - 1: phi, phi: n - phi}
    if complement:
        counts = {n - 1 - d: c for d, c in counts.items()}
    m = sum(d * c for d, c in counts.items()) // 2
    zeta = sum(d * d * c for d, c in counts.items())
    return m, zeta, max(counts)


def _energy_bounds(
    n: int, m: int, zeta: int, max_degree: int, alpha: float
) -> tuple[dict[str, float], float]:
    """Four lower bounds and one upper bound on the alpha energy.

    zeta is the sum of squared degrees; the squared Frobenius mass of the
    alpha matrix is alpha^2*zeta + (1-alpha)^2*2m and its trace is 2*alpha*m.
    """
    alpha = float(alpha)
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"energy bounds need alpha in [0, 1), got {alpha}")
    mass = alpha * alpha * zeta + (1.0 - alpha) * (1.0 - alpha) * 2.0 * m
    mean_shift = 2.0 * alpha * m / n
    star = alpha * alpha * (max_degree + 1.0) ** 2 + 4.0 * max_degree * (1.0 - 2.0 * alpha)
    lowers = {
        # sqrt of twice the centered second moment sum (lambda_i - mean)^2
        "frobenius": math.sqrt(2.0 * max(0.0, mass - n * mean_shift * mean_shift)),
        "edge_count": 4.0 * (1.0 - alpha) * m / n,
        "zagreb": 2.0 * math.sqrt(zeta / n) - 2.0 * mean_shift,
        "max_degree": alpha * (max_degree + 1.0)
        + math.sqrt(max(0.0, star))
        - 2.0 * mean_shift,
    }
    upper = math.sqrt(max(0.0, n * mass - 4.0 * alpha * alpha * m * m))
    return lowers, upper


def uacg_energy_bounds(n: int, alpha: float) -> tuple[dict[str, float], float]:
    """(lower bounds by name, upper bound) on the odd unit-sum graph's alpha energy."""
    _check_odd(n)
    return _energy_bounds(n, *_degree_params(n, False), alpha)


def complement_energy_bounds(n: int, alpha: float) -> tuple[dict[str, float], float]:
    """(lower bounds by name, upper bound) on the odd complement's alpha energy."""
    _check_odd(n)
    return _energy_bounds(n, *_degree_params(n, True), alpha)


@dataclass(frozen=True)
class BoundReport:
    """Interval localization plus energy bounds, with observed values.

    per_index pairs every rank interval with the numerically observed
    eigenvalue and whether it satisfies the interval within BOUND_SLACK.
    Energy fields are None at alpha = 1 where the energy is undefined.
    """

    spec: GraphSpec
    alpha: float
    per_index: tuple[ObservedBound, ...]
    energy_lowers: dict[str, float] | None
    energy_upper: float | None
    energy_observed: float | None


def bound_report(spec: GraphSpec, alpha: float) -> BoundReport:
    """Evaluate all bounds for an odd unit-sum spec against numeric truth."""
    if spec.family != FAMILY_UACG:
        raise ValueError(f"bounds are defined for the unit-sum family, not {spec.family!r}")
    _check_odd(spec.n)
    alpha = _check_alpha_closed(alpha)
    intervals = eigenvalue_intervals(spec, alpha)
    g = build_graph(spec)
    observed = symmetric_eigenvalues(build_alpha_matrix(g, alpha))
    per_index = tuple(
        ObservedBound(
            index=b.index,
            lower=b.lower,
            upper=b.upper,
            observed=float(observed[b.index - 1]),
            satisfied=b.lower - BOUND_SLACK <= observed[b.index - 1] <= b.upper + BOUND_SLACK,
        )
        for b in intervals
    )
    if alpha < 1.0:
        lowers, upper = _energy_bounds(spec.n, *_degree_params(spec.n, spec.complement), alpha)
        energy = alpha_energy_from_values(observed, g.n, g.m, alpha)
    else:
        lowers, upper, energy = None, None, None
    return BoundReport(
        spec=spec,
        alpha=alpha,
        per_index=per_index,
        energy_lowers=lowers,
        energy_upper=upper,
        energy_observed=energy,
    )


# ---------------------------------------------------------------------------
# Classification against the complete graph's energy.


@dataclass(frozen=True)
class ClassificationReport:
    """Verdict of comparing a graph's alpha energy with the complete graph's.

    meets_hyper_inequality records the non-strict comparison
    energy >= complete_energy - tolerance, which borderenergetic cases also
    satisfy.
    """

    spec: GraphSpec
    alpha: float
    energy: float
    complete_energy: float
    verdict: str  # borderenergetic | hyperenergetic | neither
    tolerance: float
    meets_hyper_inequality: bool


def classify(spec: GraphSpec, alpha: float, tol: float = 1e-6) -> ClassificationReport:
    """Compare the graph's alpha energy against 2*(1-alpha)*(n-1).

    Equality within tol is borderenergetic; exceeding by more than tol is
    hyperenergetic; anything else is neither.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    energy = energy_report(spec, alpha).energy
    reference = complete_energy(spec.n, alpha)
    diff = energy - reference
    if abs(diff) <= tol:
        verdict = VERDICT_BORDER
    elif diff > tol:
        verdict = VERDICT_HYPER
    else:
        verdict = VERDICT_NEITHER
    return ClassificationReport(
        spec=spec,
        alpha=float(alpha),
        energy=energy,
        complete_energy=reference,
        verdict=verdict,
        tolerance=tol,
        meets_hyper_inequality=energy >= reference - tol,
    )


# ---------------------------------------------------------------------------
# Roots of energy(alpha) = 2*(1-alpha)*(n-1).

_ROOT_GRID_STEP = 0.001
_ROOT_DEDUPE = 1e-6


def find_borderenergetic_alphas(spec: GraphSpec, tol: float = 1e-12) -> list[float]:
    """All alpha in [0, 1) where the graph's energy equals the complete graph's.

    Scans a 0.001-step grid (plus a point just under 1), keeps grid points
    where the gap already vanishes to machine scale, and bisects every strict
    sign change down to an interval of width tol.  Family members whose energy
    matches the complete graph identically (the complete family itself, or
    orders where the graph is complete) return an empty list rather than a
    continuum.  Roots narrower than the grid step cannot be bracketed and are
    out of scope.  Results are deduplicated and ascending.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    n = spec.n
    touch = 1e-12 * max(1.0, 2.0 * (n - 1.0))

    def gap(a: float) -> float:
        return energy_report(spec, a).energy - complete_energy(n, a)

    grid = [i * _ROOT_GRID_STEP for i in range(1000)]
    grid.append(1.0 - 1e-9)
    vals = [gap(a) for a in grid]

    if all(abs(v) <= touch for v in vals):
        return []

    roots = [a for a, v in zip(grid, vals) if abs(v) <= touch]
    for i in range(len(grid) - 1):
        v0, v1 = vals[i], vals[i + 1]
        if abs(v0) <= touch or abs(v1) <= touch:
            continue
        if (v0 > 0.0) == (v1 > 0.0):
            continue
        lo, hi, lo_val = grid[i], grid[i + 1], v0
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            mid_val = gap(mid)
            if abs(mid_val) <= touch:
                lo = hi = mid
                break
            if (mid_val > 0.0) == (lo_val > 0.0):
                lo, lo_val = mid, mid_val
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))

    roots.sort()
    deduped: list[float] = []
    for r in roots:
        if not deduped or r - deduped[-1] > _ROOT_DEDUPE:
            deduped.append(r)
    return deduped
