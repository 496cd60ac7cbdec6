"""The graph families under study.

Vertices are the residues 0..n-1.  In the unit-sum Cayley graph ("uacg")
distinct i and j are adjacent iff gcd(i + j, n) == 1; in the unitary Cayley
graph they are adjacent iff i - j is a unit mod n.  Complete graphs and
complements round out the zoo.  Adjacency matrices are dense 0/1 integer
arrays, symmetric with zero diagonal, and immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .numtheory import euler_phi

__all__ = [
    "FAMILIES",
    "FAMILY_COMPLETE",
    "FAMILY_UACG",
    "FAMILY_UNITARY_CAYLEY",
    "Graph",
    "GraphSpec",
    "adjacency_frobenius_sq",
    "build_graph",
    "build_uacg",
    "build_unitary_cayley",
    "complement",
    "complete",
    "edge_count",
    "edge_list",
    "edges",
    "parse_spec_label",
    "zagreb_index",
]

FAMILY_UACG = "uacg"
FAMILY_UNITARY_CAYLEY = "unitary-cayley"
FAMILY_COMPLETE = "complete"
FAMILIES = (FAMILY_UACG, FAMILY_UNITARY_CAYLEY, FAMILY_COMPLETE)


@dataclass(frozen=True)
class GraphSpec:
    """Which graph to build: a base family on n vertices, optionally complemented.

    The complement flag nests at most one level by construction; complementing
    twice returns to the base family.
    """

    family: str
    n: int
    complement: bool = False

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 2:
            raise ValueError(f"graphs need n >= 2, got n={self.n}")

    def label(self) -> str:
        return ("complement-" if self.complement else "") + self.family


def parse_spec_label(label: str, n: int) -> GraphSpec:
    """Inverse of GraphSpec.label for the names accepted on the command line."""
    comp = label.startswith("complement-")
    family = label.removeprefix("complement-")
    if family not in FAMILIES:
        raise ValueError(f"unknown family label {label!r}")
    if comp and family == FAMILY_COMPLETE:
        raise ValueError("complement of the complete graph is out of scope (edgeless)")
    return GraphSpec(family, n, comp)


@dataclass(frozen=True, eq=False)
class Graph:
    """A concrete graph: its spec, 0/1 adjacency, degree sequence and edge count."""

    spec: GraphSpec
    adjacency: np.ndarray
    degrees: np.ndarray
    m: int

    @property
    def n(self) -> int:
        return self.spec.n


def _finish(spec: GraphSpec, adjacency: np.ndarray) -> Graph:
    adjacency = np.ascontiguousarray(adjacency, dtype=np.int64)
    if not np.array_equal(adjacency, adjacency.T):
        raise ValueError("adjacency must be symmetric")
    if np.any(np.diag(adjacency) != 0):
        raise ValueError("adjacency must have a zero diagonal")
    degrees = adjacency.sum(axis=1)
    m = int(adjacency.sum()) // 2
    adjacency.setflags(write=False)
    degrees.setflags(write=False)
    return Graph(spec=spec, adjacency=adjacency, degrees=degrees, m=m)


def _coprime_mask(n: int, length: int) -> np.ndarray:
    return np.fromiter((math.gcd(k, n) == 1 for k in range(length)), dtype=bool, count=length)


def build_uacg(n: int) -> Graph:
    """Unit-sum Cayley graph: i ~ j iff i != j and gcd(i + j, n) == 1."""
    spec = GraphSpec(FAMILY_UACG, n)
    idx = np.arange(n)
    mask = _coprime_mask(n, 2 * n - 1)
    adjacency = mask[np.add.outer(idx, idx)].astype(np.int64)
    np.fill_diagonal(adjacency, 0)
    return _finish(spec, adjacency)


def build_unitary_cayley(n: int) -> Graph:
    """Unitary Cayley graph: i ~ j iff gcd(i - j mod n, n) == 1."""
    spec = GraphSpec(FAMILY_UNITARY_CAYLEY, n)
    idx = np.arange(n)
    mask = _coprime_mask(n, n)
    diff = np.mod(np.subtract.outer(idx, idx), n)
    adjacency = mask[diff].astype(np.int64)
    # gcd(0, n) == n != 1 for n >= 2, so the diagonal is already zero.
    return _finish(spec, adjacency)


def complete(n: int) -> Graph:
    spec = GraphSpec(FAMILY_COMPLETE, n)
    adjacency = np.ones((n, n), dtype=np.int64)
    np.fill_diagonal(adjacency, 0)
    return _finish(spec, adjacency)


def complement(g: Graph) -> Graph:
    """Complement on the same vertex set; complement(complement(g)) == g."""
    adjacency = 1 - g.adjacency
    np.fill_diagonal(adjacency, 0)
    spec = replace(g.spec, complement=not g.spec.complement)
    return _finish(spec, adjacency)


_BUILDERS = {
    FAMILY_UACG: build_uacg,
    FAMILY_UNITARY_CAYLEY: build_unitary_cayley,
    FAMILY_COMPLETE: complete,
}


def build_graph(spec: GraphSpec) -> Graph:
    g = _BUILDERS[spec.family](spec.n)
    return complement(g) if spec.complement else g


def edge_count(spec: GraphSpec) -> int:
    """Edge count of the graph a spec describes, without building it."""
    n = spec.n
    if spec.family == FAMILY_COMPLETE:
        base = n * (n - 1) // 2
    elif spec.family == FAMILY_UNITARY_CAYLEY:
        base = n * euler_phi(n) // 2
    else:  # unit-sum Cayley: phi(n)-regular for even n, near-regular for odd n
        phi = euler_phi(n)
        base = n * phi // 2 if n % 2 == 0 else (n - 1) * phi // 2
    if spec.complement:
        return n * (n - 1) // 2 - base
    return base


def zagreb_index(g: Graph) -> int:
    """Sum of squared vertex degrees, straight from the degree sequence."""
    return int(np.sum(g.degrees.astype(object) ** 2))


def adjacency_frobenius_sq(g: Graph) -> int:
    """Squared Frobenius norm of the adjacency matrix; equals 2 * m."""
    return int(np.count_nonzero(g.adjacency))


def edges(g: Graph) -> list[tuple[int, int]]:
    """Edge list as (i, j) with i < j, sorted lexicographically."""
    ii, jj = np.nonzero(np.triu(g.adjacency))
    return list(zip(ii.tolist(), jj.tolist()))


def edge_list(g: Graph) -> str:
    """Plain-text edge list, one 'i j' pair per line, for external cross-checks."""
    return "".join(f"{i} {j}\n" for i, j in edges(g))
