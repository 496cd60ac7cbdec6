"""Tests for eigenvalue intervals, energy bounds, classification and
the borderenergetic root finder.

Observed eigenvalues and energies used as oracles come from the dense
eigensolver route (independently validated in test_linalg).  Root
anchors (3/8 for order 9, 25/57 for the order-25 complement) were
derived by hand from the linear crossing of the two energy expressions
and frozen before the finder existed.
"""

import math

import numpy as np
import pytest

from uacg.analysis import (
    BOUND_SLACK,
    ENERGY_BOUND_NAMES,
    VERDICT_BORDER,
    VERDICT_HYPER,
    VERDICT_NEITHER,
    bound_report,
    classify,
    complement_energy_bounds,
    eigenvalue_intervals,
    find_borderenergetic_alphas,
    odd_complement_eigen_bounds,
    odd_uacg_eigen_bounds,
    uacg_energy_bounds,
)
from uacg.closedform import (
    alpha_energy_from_values,
    build_alpha_matrix,
    complete_energy,
    energy_report,
)
from uacg.graphs import (
    FAMILY_COMPLETE,
    FAMILY_UACG,
    FAMILY_UNITARY_CAYLEY,
    GraphSpec,
    build_graph,
)
from uacg.linalg import symmetric_eigenvalues


def observed_values(spec: GraphSpec, alpha: float) -> np.ndarray:
    return symmetric_eigenvalues(build_alpha_matrix(build_graph(spec), alpha))


class TestEigenvalueIntervals:
    def test_order_9_adjacency_extremes(self):
        bounds = odd_uacg_eigen_bounds(9, 0.0)
        assert bounds[0].index == 1 and bounds[-1].index == 9
        assert (bounds[0].lower, bounds[0].upper) == (5.0, 6.0)
        assert (bounds[-1].lower, bounds[-1].upper) == (-4.0, -3.0)
        vals = observed_values(GraphSpec(FAMILY_UACG, 9), 0.0)
        assert bounds[0].lower <= vals[0] <= bounds[0].upper
        assert bounds[-1].lower <= vals[-1] <= bounds[-1].upper

    def test_unit_interval_width(self):
        for n in (9, 15, 45):
            for alpha in (0.0, 0.5, 1.0):
                for b in odd_uacg_eigen_bounds(n, alpha):
                    assert b.upper - b.lower == pytest.approx(1.0, abs=1e-12)

    def test_alpha_one_pins_degrees(self):
        # At full degree weighting every interval is [phi-1, phi].
        from uacg.numtheory import euler_phi

        for n in (9, 15, 25):
            phi = euler_phi(n)
            for b in odd_uacg_eigen_bounds(n, 1.0):
                assert b.lower == pytest.approx(phi - 1.0, abs=1e-12)
                assert b.upper == pytest.approx(phi, abs=1e-12)

    def test_complement_order_9(self):
        bounds = odd_complement_eigen_bounds(9, 0.0)
        assert (bounds[0].lower, bounds[0].upper) == (2.0, 3.0)
        assert (bounds[-1].lower, bounds[-1].upper) == (-4.0, -3.0)
        vals = observed_values(GraphSpec(FAMILY_UACG, 9, complement=True), 0.0)
        # The top observed value sits exactly on the upper endpoint.
        assert vals[0] == pytest.approx(3.0, abs=1e-9)
        assert vals[-1] == pytest.approx(-3.0, abs=1e-9)

    def test_containment_order_15(self):
        for comp in (False, True):
            spec = GraphSpec(FAMILY_UACG, 15, complement=comp)
            bounds = eigenvalue_intervals(spec, 0.5)
            vals = observed_values(spec, 0.5)
            assert len(bounds) == 15
            for b, v in zip(bounds, vals):
                assert b.lower - BOUND_SLACK <= v <= b.upper + BOUND_SLACK

    def test_indices_run_from_one(self):
        bounds = odd_uacg_eigen_bounds(9, 0.3)
        assert [b.index for b in bounds] == list(range(1, 10))

    def test_rejects_even_order(self):
        with pytest.raises(ValueError):
            odd_uacg_eigen_bounds(10, 0.0)
        with pytest.raises(ValueError):
            odd_complement_eigen_bounds(10, 0.0)

    def test_rejects_non_uacg_family(self):
        with pytest.raises(ValueError):
            eigenvalue_intervals(GraphSpec(FAMILY_UNITARY_CAYLEY, 9), 0.0)
        with pytest.raises(ValueError):
            eigenvalue_intervals(GraphSpec(FAMILY_COMPLETE, 9), 0.0)

    def test_rejects_out_of_range_alpha(self):
        with pytest.raises(ValueError):
            odd_uacg_eigen_bounds(9, -0.2)


class TestEnergyBounds:
    def test_order_9_examples(self):
        lowers, upper = uacg_energy_bounds(9, 0.0)
        assert set(lowers) == set(ENERGY_BOUND_NAMES)
        assert lowers["edge_count"] == pytest.approx(32.0 / 3.0, abs=1e-9)
        assert lowers["frobenius"] == pytest.approx(math.sqrt(96.0), abs=1e-9)
        assert upper == pytest.approx(math.sqrt(432.0), abs=1e-9)

    def test_complement_order_9_examples(self):
        lowers, upper = complement_energy_bounds(9, 0.0)
        assert lowers["edge_count"] == pytest.approx(16.0 / 3.0, abs=1e-9)
        assert upper == pytest.approx(math.sqrt(216.0), abs=1e-9)

    def test_complement_order_25_sandwich(self):
        lowers, upper = complement_energy_bounds(25, 0.0)
        spec = GraphSpec(FAMILY_UACG, 25, complement=True)
        g = build_graph(spec)
        energy = alpha_energy_from_values(observed_values(spec, 0.0), 25, g.m, 0.0)
        assert energy == pytest.approx(28.0, abs=1e-6)
        assert lowers["edge_count"] == pytest.approx(9.6, abs=1e-9)
        for name, lo in lowers.items():
            assert lo <= energy + BOUND_SLACK, name
        assert energy <= upper + BOUND_SLACK

    def test_sandwich_holds_across_orders(self):
        # The bounds hold for the spectral energy of the built matrix,
        # so the observed side must come from the dense route.
        for n in range(3, 62, 2):
            for comp in (False, True):
                fn = complement_energy_bounds if comp else uacg_energy_bounds
                spec = GraphSpec(FAMILY_UACG, n, complement=comp)
                g = build_graph(spec)
                for alpha in (0.0, 0.25, 0.5, 0.75):
                    lowers, upper = fn(n, alpha)
                    vals = observed_values(spec, alpha)
                    energy = alpha_energy_from_values(vals, n, g.m, alpha)
                    for name, lo in lowers.items():
                        assert lo <= energy + BOUND_SLACK, (n, comp, alpha, name)
                    assert energy <= upper + BOUND_SLACK, (n, comp, alpha)

    def test_rejects_even_order(self):
        with pytest.raises(ValueError):
            uacg_energy_bounds(10, 0.0)
        with pytest.raises(ValueError):
            complement_energy_bounds(10, 0.0)

    def test_rejects_alpha_one(self):
        with pytest.raises(ValueError):
            uacg_energy_bounds(9, 1.0)


class TestBoundReport:
    def test_structure_and_satisfaction(self):
        rep = bound_report(GraphSpec(FAMILY_UACG, 9), 0.5)
        assert len(rep.per_index) == 9
        assert all(b.satisfied for b in rep.per_index)
        assert all(b.lower - BOUND_SLACK <= b.observed <= b.upper + BOUND_SLACK
                   for b in rep.per_index)
        assert set(rep.energy_lowers) == set(ENERGY_BOUND_NAMES)
        assert rep.energy_observed is not None
        assert rep.energy_observed <= rep.energy_upper + BOUND_SLACK

    def test_alpha_one_has_no_energy_section(self):
        rep = bound_report(GraphSpec(FAMILY_UACG, 9), 1.0)
        assert rep.energy_lowers is None
        assert rep.energy_upper is None
        assert rep.energy_observed is None
        assert len(rep.per_index) == 9

    def test_complement_report(self):
        rep = bound_report(GraphSpec(FAMILY_UACG, 15, complement=True), 0.25)
        assert all(b.satisfied for b in rep.per_index)


class TestClassify:
    def test_border_point_order_9(self):
        rep = classify(GraphSpec(FAMILY_UACG, 9), 0.375)
        assert rep.verdict == VERDICT_BORDER
        assert rep.energy == pytest.approx(rep.complete_energy, abs=1e-6)
        assert rep.complete_energy == pytest.approx(complete_energy(9, 0.375), abs=1e-12)
        assert rep.meets_hyper_inequality

    def test_hyperenergetic_order_25(self):
        rep = classify(GraphSpec(FAMILY_UACG, 25), 0.0)
        assert rep.verdict == VERDICT_HYPER
        assert rep.energy > rep.complete_energy
        assert rep.meets_hyper_inequality

    def test_neither_order_9_adjacency(self):
        rep = classify(GraphSpec(FAMILY_UACG, 9), 0.0)
        assert rep.verdict == VERDICT_NEITHER
        assert not rep.meets_hyper_inequality
        assert rep.energy == pytest.approx(14.7178, abs=1e-3)
        assert rep.complete_energy == pytest.approx(16.0, abs=1e-12)

    def test_tolerance_recorded(self):
        rep = classify(GraphSpec(FAMILY_UACG, 9), 0.0, tol=1e-3)
        assert rep.tolerance == 1e-3

    def test_rejects_bad_tolerance(self):
        with pytest.raises(ValueError):
            classify(GraphSpec(FAMILY_UACG, 9), 0.0, tol=0.0)

    def test_complete_graph_is_always_borderenergetic(self):
        rep = classify(GraphSpec(FAMILY_COMPLETE, 9), 0.4)
        assert rep.verdict == VERDICT_BORDER


class TestRootFinder:
    def test_order_9_single_root(self):
        roots = find_borderenergetic_alphas(GraphSpec(FAMILY_UACG, 9))
        assert len(roots) == 1
        assert roots[0] == pytest.approx(0.375, abs=1e-9)

    def test_order_25_complement_root(self):
        roots = find_borderenergetic_alphas(GraphSpec(FAMILY_UACG, 25, complement=True))
        assert len(roots) == 1
        assert roots[0] == pytest.approx(25.0 / 57.0, abs=1e-9)

    def test_even_order_has_no_root(self):
        assert find_borderenergetic_alphas(GraphSpec(FAMILY_UACG, 4)) == []

    def test_complete_graph_identically_zero_gap(self):
        assert find_borderenergetic_alphas(GraphSpec(FAMILY_COMPLETE, 7)) == []

    def test_order_two(self):
        assert find_borderenergetic_alphas(GraphSpec(FAMILY_UACG, 2)) == []

    def test_roots_classify_as_borderenergetic(self):
        for spec in (
            GraphSpec(FAMILY_UACG, 9),
            GraphSpec(FAMILY_UACG, 27),
            GraphSpec(FAMILY_UACG, 5),
            GraphSpec(FAMILY_UACG, 9, complement=True),
            GraphSpec(FAMILY_UACG, 25, complement=True),
        ):
            roots = find_borderenergetic_alphas(spec)
            assert roots == sorted(roots)
            for a in roots:
                rep = classify(spec, a, tol=1e-6)
                assert rep.verdict == VERDICT_BORDER
                assert abs(rep.energy - rep.complete_energy) <= 1e-8

    def test_rejects_bad_tolerance(self):
        with pytest.raises(ValueError):
            find_borderenergetic_alphas(GraphSpec(FAMILY_UACG, 9), tol=0.0)
