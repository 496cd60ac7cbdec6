"""Spectra, energies and borderenergetic classification for unit-sum Cayley
graph families.

The core objects are graphs on Z_n whose adjacency is decided by coprimality
of a vertex sum or difference with n, their convex alpha-matrix combinations
alpha*D + (1-alpha)*A, the exact spectra available on prime-power and even
orders, and the alpha values at which a family member's energy meets the
complete graph's.
"""

from .analysis import (
    BoundReport,
    ClassificationReport,
    IndexBound,
    ObservedBound,
    bound_report,
    classify,
    complement_energy_bounds,
    eigenvalue_intervals,
    find_borderenergetic_alphas,
    odd_complement_eigen_bounds,
    odd_uacg_eigen_bounds,
    uacg_energy_bounds,
)
from .closedform import (
    ALPHA_GRID,
    ClosedFormUnavailable,
    EnergyReport,
    alpha_energy_from_values,
    build_alpha_matrix,
    complement_even_spectrum,
    complement_prime_power_energy,
    complement_prime_power_spectrum,
    complement_unitary_cayley_adjacency_energy,
    complement_unitary_cayley_spectrum,
    complete_energy,
    complete_spectrum,
    energy_report,
    has_closed_spectrum,
    numeric_spectrum,
    regular_alpha_energy,
    spectrum_for,
    uacg_even_spectrum,
    uacg_prime_power_energy,
    uacg_prime_power_spectrum,
    unitary_cayley_adjacency_energy,
    unitary_cayley_spectrum,
)
from .graphs import (
    Graph,
    GraphSpec,
    adjacency_frobenius_sq,
    build_graph,
    build_uacg,
    build_unitary_cayley,
    complement,
    complete,
    edge_count,
    edge_list,
    edges,
    parse_spec_label,
    zagreb_index,
)
from .linalg import (
    Spectrum,
    group_spectrum,
    left_circulant_eigenvalues,
    right_circulant_eigenvalues,
    symmetric_eigenvalues,
)
from .numtheory import (
    euler_phi,
    factorize,
    gcd,
    is_prime,
    largest_squarefree_divisor,
    mobius,
    prime_power,
    ramanujan_sum,
)
from .verification import CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "ALPHA_GRID",
    "BoundReport",
    "CheckResult",
    "ClassificationReport",
    "ClosedFormUnavailable",
    "EnergyReport",
    "Graph",
    "GraphSpec",
    "IndexBound",
    "ObservedBound",
    "Spectrum",
    "__version__",
    "adjacency_frobenius_sq",
    "alpha_energy_from_values",
    "bound_report",
    "build_alpha_matrix",
    "build_graph",
    "build_uacg",
    "build_unitary_cayley",
    "classify",
    "complement",
    "complement_energy_bounds",
    "complement_even_spectrum",
    "complement_prime_power_energy",
    "complement_prime_power_spectrum",
    "complement_unitary_cayley_adjacency_energy",
    "complement_unitary_cayley_spectrum",
    "complete",
    "complete_energy",
    "complete_spectrum",
    "edge_count",
    "edge_list",
    "edges",
    "eigenvalue_intervals",
    "energy_report",
    "euler_phi",
    "factorize",
    "find_borderenergetic_alphas",
    "gcd",
    "group_spectrum",
    "has_closed_spectrum",
    "is_prime",
    "largest_squarefree_divisor",
    "left_circulant_eigenvalues",
    "mobius",
    "numeric_spectrum",
    "odd_complement_eigen_bounds",
    "odd_uacg_eigen_bounds",
    "parse_spec_label",
    "prime_power",
    "ramanujan_sum",
    "regular_alpha_energy",
    "right_circulant_eigenvalues",
    "run_suite",
    "spectrum_for",
    "symmetric_eigenvalues",
    "uacg_energy_bounds",
    "uacg_even_spectrum",
    "uacg_prime_power_energy",
    "uacg_prime_power_spectrum",
    "unitary_cayley_adjacency_energy",
    "unitary_cayley_spectrum",
    "zagreb_index",
]
