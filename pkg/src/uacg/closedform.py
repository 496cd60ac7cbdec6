"""Closed-form spectra and energies, and the alpha-matrix machinery.

For a graph G with adjacency A and degree matrix D, the alpha matrix is
A_alpha = alpha*D + (1-alpha)*A and the alpha energy is
sum_i |lambda_i(A_alpha) - 2*alpha*m/n| for 0 <= alpha < 1.  Unit-sum Cayley
graphs admit exact spectra on prime-power orders and on even orders (where
they coincide with unitary Cayley graphs and the Ramanujan sums give the
adjacency eigenvalues); everything else falls back to the dense eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import (
    FAMILY_COMPLETE,
    FAMILY_UACG,
    FAMILY_UNITARY_CAYLEY,
    Graph,
    GraphSpec,
    build_graph,
    edge_count,
)
from .linalg import DEFAULT_GROUP_TOL, Spectrum, group_spectrum, symmetric_eigenvalues
from .numtheory import (
    euler_phi,
    factorize,
    is_prime,
    largest_squarefree_divisor,
    prime_power,
    ramanujan_sum,
)

__all__ = [
    "ALPHA_GRID",
    "ClosedFormUnavailable",
    "EnergyReport",
    "alpha_energy_from_values",
    "build_alpha_matrix",
    "complement_even_spectrum",
    "complement_prime_power_energy",
    "complement_prime_power_spectrum",
    "complement_unitary_cayley_adjacency_energy",
    "complement_unitary_cayley_spectrum",
    "complete_energy",
    "complete_spectrum",
    "energy_report",
    "has_closed_spectrum",
    "numeric_spectrum",
    "regular_alpha_energy",
    "spectrum_for",
    "uacg_even_spectrum",
    "uacg_prime_power_energy",
    "uacg_prime_power_spectrum",
    "unitary_cayley_adjacency_energy",
    "unitary_cayley_spectrum",
]

# The eleven-point alpha grid used by the bundled energy table and the
# closed-vs-numeric cross checks.
ALPHA_GRID = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.9999)

# Exactly-equal closed-form families are collapsed at this tolerance before
# distinct values are reported.
_CLOSED_GROUP_TOL = 1e-9

METHOD_CLOSED = "closed-form"
METHOD_NUMERIC = "numeric"
METHOD_REGULAR = "regular-shortcut"


class ClosedFormUnavailable(RuntimeError):
    """No exact spectrum or energy formula covers the requested graph."""


def _check_alpha(alpha: float, *, allow_one: bool) -> float:
    alpha = float(alpha)
    hi_ok = alpha <= 1.0 if allow_one else alpha < 1.0
    if not (0.0 <= alpha and hi_ok):
        bound = "[0, 1]" if allow_one else "[0, 1)"
        raise ValueError(f"alpha must lie in {bound}, got {alpha}")
    return alpha


def _check_odd_prime_power(p: int, m: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")


def _spectrum_from_families(families: list[tuple[float, int]], n: int) -> Spectrum:
    values = np.concatenate(
        [np.full(mult, val, dtype=float) for val, mult in families if mult > 0]
    )
    assert values.size == n
    return group_spectrum(np.sort(values)[::-1], _CLOSED_GROUP_TOL)


def build_alpha_matrix(g: Graph, alpha: float) -> np.ndarray:
    """Dense A_alpha = alpha*D + (1-alpha)*A, exactly symmetric by construction."""
    alpha = _check_alpha(alpha, allow_one=True)
    out = (1.0 - alpha) * g.adjacency.astype(float)
    out[np.diag_indices(g.n)] = alpha * g.degrees.astype(float)
    return out


def alpha_energy_from_values(
    values: np.ndarray, n: int, m: int, alpha: float
) -> float:
    """Energy sum |lambda_i - 2*alpha*m/n| from a full eigenvalue list."""
    alpha = _check_alpha(alpha, allow_one=False)
    vals = np.asarray(values, dtype=float).ravel()
    if vals.size != n:
        raise ValueError(f"expected {n} eigenvalues, got {vals.size}")
    shift = 2.0 * alpha * m / n
    return float(np.abs(vals - shift).sum())


def regular_alpha_energy(adjacency_energy: float, alpha: float) -> float:
    """For regular graphs the alpha energy is (1-alpha) times the adjacency energy."""
    alpha = _check_alpha(alpha, allow_one=False)
    return (1.0 - alpha) * float(adjacency_energy)


# ---------------------------------------------------------------------------
# Prime-power orders n = p**m, p an odd prime.


def _radical_pair(p: int, m: int, alpha: float) -> tuple[float, float]:
    """The two simple eigenvalues (x -+ y)/2 shared by spectrum and energy."""
    n = p**m
    q = p ** (m - 1)
    x = (1.0 + alpha) * n - 2.0 * q - 1.0
    disc = (1.0 - n + alpha * n) ** 2 + (1.0 - alpha) * 4.0 * q
    # The discriminant is a square plus a nonnegative term on [0, 1].
    assert disc >= 0.0
    y = math.sqrt(disc)
    return (x - y) / 2.0, (x + y) / 2.0


def uacg_prime_power_spectrum(p: int, m: int, alpha: float) -> Spectrum:
    """Exact alpha-matrix spectrum of the unit-sum Cayley graph on p**m vertices.

    Six eigenvalue families; two of them are the simple roots (x -+ y)/2 of
    the quadratic coming from the non-regular part of the graph.
    """
    _check_odd_prime_power(p, m)
    alpha = _check_alpha(alpha, allow_one=True)
    n = p**m
    q = p ** (m - 1)
    low_root, high_root = _radical_pair(p, m, alpha)
    families = [
        (q * (p * alpha - 1.0) - 1.0, (p - 3) // 2),
        (low_root, 1),
        (q * (p - 1.0) * alpha - 1.0, (p - 1) * (q - 1)),
        (alpha * (n - q), q - 1),
        (q * ((p - 2.0) * alpha + 1.0) - 1.0, (p - 1) // 2),
        (high_root, 1),
    ]
    return _spectrum_from_families(families, n)


def uacg_prime_power_energy(p: int, m: int, alpha: float) -> float:
    """Exact alpha energy of the unit-sum Cayley graph on p**m vertices."""
    _check_odd_prime_power(p, m)
    alpha = _check_alpha(alpha, allow_one=False)
    n = p**m
    q = p ** (m - 1)
    low_root, high_root = _radical_pair(p, m, alpha)
    shift = alpha * (n - 1.0) * (p - 1.0) / p
    lead = (3.0 * n - 5.0 * q - p - 1.0) / 2.0
    poly = alpha / (2.0 * p) * (-3.0 * p * n + 9.0 * n - 4.0 * q + p * p - 2.0 * p + 1.0)
    mid = (p - 1.0) / (2.0 * p) * abs((n - p) * (1.0 - alpha) - alpha)
    return lead + poly + mid + abs(low_root - shift) + abs(high_root - shift)


def complement_prime_power_spectrum(p: int, m: int, alpha: float) -> Spectrum:
    """Exact alpha-matrix spectrum of the complement on p**m vertices.

    Five families from the complement's block structure.  The two families of
    multiplicity (p-1)/2 are alpha*q -+ (1-alpha)*q with q = p**(m-1): the
    lower one is alpha-dependent and collapses to -q only at alpha = 0.
    """
    _check_odd_prime_power(p, m)
    alpha = _check_alpha(alpha, allow_one=True)
    n = p**m
    q = p ** (m - 1)
    families = [
        ((2.0 * alpha - 1.0) * q, (p - 1) // 2),
        (alpha * q - 1.0, q - 1),
        (alpha * q, (p - 1) * (q - 1)),
        (q - 1.0, 1),
        (float(q), (p - 1) // 2),
    ]
    return _spectrum_from_families(families, n)


def complement_prime_power_energy(p: int, m: int, alpha: float) -> float:
    """Tabulated alpha-energy formula for the complement on p**m vertices.

    Piecewise linear in alpha with the branch point at (n - p)/(n - 1); the
    two branches agree there.  This is the formula the bundled reference
    tables are generated from; see the energy notes in the README.
    """
    _check_odd_prime_power(p, m)
    alpha = _check_alpha(alpha, allow_one=False)
    n = p**m
    q = p ** (m - 1)
    threshold = (n - p) / (n - 1.0)
    if alpha <= threshold:
        return (p * n + n - 2.0 * p + alpha * (3.0 - p - 2.0 * q)) / p
    return (p * n - n + alpha * (1.0 - p - 2.0 * q + 2.0 * n)) / p


# ---------------------------------------------------------------------------
# Regular cases: even-order unit-sum graphs and unitary Cayley graphs.


def _ramanujan_values(n: int) -> list[int]:
    return [ramanujan_sum(k, n) for k in range(n)]


def unitary_cayley_spectrum(n: int, alpha: float) -> Spectrum:
    """Alpha-matrix spectrum of the unitary Cayley graph: alpha*phi + (1-alpha)*c(k, n)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    alpha = _check_alpha(alpha, allow_one=True)
    phi = euler_phi(n)
    vals = sorted((alpha * phi + (1.0 - alpha) * c for c in _ramanujan_values(n)), reverse=True)
    return group_spectrum(np.asarray(vals), _CLOSED_GROUP_TOL)


def uacg_even_spectrum(n: int, alpha: float) -> Spectrum:
    """Alpha-matrix spectrum of the unit-sum Cayley graph for even n.

    Even-order unit-sum and unitary Cayley graphs are isomorphic, so the
    Ramanujan sums give the adjacency eigenvalues directly.
    """
    if n % 2 != 0:
        raise ValueError(f"this closed form needs even n, got {n}")
    return unitary_cayley_spectrum(n, alpha)


def complement_unitary_cayley_spectrum(n: int, alpha: float) -> Spectrum:
    """Alpha-matrix spectrum of the complement of the unitary Cayley graph.

    The graph is (n - 1 - phi)-regular; that value is the simple top
    eigenvalue, and the remaining n - 1 values are
    alpha*(n - phi) - (1 - alpha)*c(k, n) - 1 for k = 1..n-1 (the k = 0
    Ramanujan value belongs to the excluded top eigenvector).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    alpha = _check_alpha(alpha, allow_one=True)
    phi = euler_phi(n)
    ram = _ramanujan_values(n)
    vals = [n - 1.0 - phi]
    vals.extend(alpha * (n - phi) - (1.0 - alpha) * c - 1.0 for c in ram[1:])
    vals.sort(reverse=True)
    return group_spectrum(np.asarray(vals), _CLOSED_GROUP_TOL)


def complement_even_spectrum(n: int, alpha: float) -> Spectrum:
    """Alpha-matrix spectrum of the complement of the unit-sum graph, even n."""
    if n % 2 != 0:
        raise ValueError(f"this closed form needs even n, got {n}")
    return complement_unitary_cayley_spectrum(n, alpha)


def unitary_cayley_adjacency_energy(n: int) -> int:
    """Adjacency energy of the unitary Cayley graph: 2**k * phi(n), k = distinct primes."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return 2 ** factorize(n).num_distinct_primes * euler_phi(n)


def complement_unitary_cayley_adjacency_energy(n: int) -> int:
    """Adjacency energy of the complement of the unitary Cayley graph.

    2*(n-1) + (2**k - 2)*phi(n) - r + prod(2 - p) where r is the largest
    squarefree divisor of n and the product runs over the distinct primes.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    fac = factorize(n)
    prod_two_minus = 1
    for p in fac.primes:
        prod_two_minus *= 2 - p
    return (
        2 * (n - 1)
        + (2**fac.num_distinct_primes - 2) * euler_phi(n)
        - largest_squarefree_divisor(n)
        + prod_two_minus
    )


def complete_spectrum(n: int, alpha: float) -> Spectrum:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    alpha = _check_alpha(alpha, allow_one=True)
    families = [(float(n - 1), 1), (alpha * n - 1.0, n - 1)]
    return _spectrum_from_families(families, n)


def complete_energy(n: int, alpha: float) -> float:
    """Alpha energy of the complete graph: 2*(1 - alpha)*(n - 1)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    alpha = _check_alpha(alpha, allow_one=False)
    return 2.0 * (1.0 - alpha) * (n - 1.0)


# ---------------------------------------------------------------------------
# Dispatch over GraphSpec.


def has_closed_spectrum(spec: GraphSpec) -> bool:
    """True when an exact spectrum formula covers the requested graph.

    Complete and unitary Cayley families always have one (they are regular
    with known eigenvalues); the unit-sum family needs an even order or an
    odd prime-power order.
    """
    if spec.family in (FAMILY_COMPLETE, FAMILY_UNITARY_CAYLEY):
        return True
    return spec.n % 2 == 0 or prime_power(spec.n) is not None


def _closed_spectrum(spec: GraphSpec, alpha: float) -> Spectrum:
    n = spec.n
    if spec.family == FAMILY_COMPLETE:
        if spec.complement:
            return Spectrum(pairs=((0.0, n),), n=n)  # edgeless
        return complete_spectrum(n, alpha)
    if spec.family == FAMILY_UNITARY_CAYLEY:
        if spec.complement:
            return complement_unitary_cayley_spectrum(n, alpha)
        return unitary_cayley_spectrum(n, alpha)
    # unit-sum family
    if n % 2 == 0:
        return complement_even_spectrum(n, alpha) if spec.complement else uacg_even_spectrum(n, alpha)
    pp = prime_power(n)
    if pp is None:
        raise ClosedFormUnavailable(
            f"no exact spectrum for {spec.label()} with n={n} (odd, not a prime power)"
        )
    p, m = pp
    if spec.complement:
        return complement_prime_power_spectrum(p, m, alpha)
    return uacg_prime_power_spectrum(p, m, alpha)


def numeric_spectrum(
    spec: GraphSpec, alpha: float, group_tol: float = DEFAULT_GROUP_TOL
) -> Spectrum:
    """Dense-eigensolver spectrum of A_alpha for any spec."""
    g = build_graph(spec)
    vals = symmetric_eigenvalues(build_alpha_matrix(g, alpha))
    return group_spectrum(vals, group_tol)


def spectrum_for(
    spec: GraphSpec,
    alpha: float,
    method: str = "auto",
    group_tol: float = DEFAULT_GROUP_TOL,
) -> tuple[Spectrum, str]:
    """Spectrum of A_alpha plus the method actually used ("closed" or "numeric").

    method "auto" prefers the exact formulas and falls back to the dense
    eigensolver; "closed" raises ClosedFormUnavailable when no formula applies.
    """
    alpha = _check_alpha(alpha, allow_one=True)
    if method not in ("auto", "closed", "numeric"):
        raise ValueError(f"unknown method {method!r}")
    if method == "numeric":
        return numeric_spectrum(spec, alpha, group_tol), "numeric"
    if method == "closed" or has_closed_spectrum(spec):
        return _closed_spectrum(spec, alpha), "closed"
    return numeric_spectrum(spec, alpha, group_tol), "numeric"


@dataclass(frozen=True)
class EnergyReport:
    """An alpha-energy value plus everything needed to audit it."""

    spec: GraphSpec
    alpha: float
    n: int
    m: int
    shift: float  # 2*alpha*m/n, the mean eigenvalue of A_alpha
    energy: float
    method: str  # closed-form | numeric | regular-shortcut


def energy_report(spec: GraphSpec, alpha: float) -> EnergyReport:
    """Alpha energy of the graph a spec describes, by the best available route.

    Regular families use the (1-alpha)-scaling shortcut on their known
    adjacency energies; odd prime-power unit-sum graphs and complements use
    their exact formulas; everything else is numeric.
    """
    alpha = _check_alpha(alpha, allow_one=False)
    n = spec.n
    m = edge_count(spec)
    shift = 2.0 * alpha * m / n

    if spec.family == FAMILY_COMPLETE:
        energy = 0.0 if spec.complement else complete_energy(n, alpha)
        method = METHOD_REGULAR
    elif spec.family == FAMILY_UNITARY_CAYLEY:
        eps0 = (
            complement_unitary_cayley_adjacency_energy(n)
            if spec.complement
            else unitary_cayley_adjacency_energy(n)
        )
        energy = regular_alpha_energy(eps0, alpha)
        method = METHOD_REGULAR
    elif n % 2 == 0:
        # even unit-sum graphs coincide with unitary Cayley graphs
        eps0 = (
            complement_unitary_cayley_adjacency_energy(n)
            if spec.complement
            else unitary_cayley_adjacency_energy(n)
        )
        energy = regular_alpha_energy(eps0, alpha)
        method = METHOD_REGULAR
    else:
        pp = prime_power(n)
        if pp is not None:
            p, mm = pp
            if spec.complement:
                energy = complement_prime_power_energy(p, mm, alpha)
            else:
                energy = uacg_prime_power_energy(p, mm, alpha)
            method = METHOD_CLOSED
        else:
            g = build_graph(spec)
            vals = symmetric_eigenvalues(build_alpha_matrix(g, alpha))
            energy = alpha_energy_from_values(vals, n, g.m, alpha)
            method = METHOD_NUMERIC

    return EnergyReport(
        spec=spec, alpha=alpha, n=n, m=m, shift=shift, energy=float(energy), method=method
    )
