import math
from itertools import product

import numpy as np
import pytest
from hypothesis import given

from skewspec import (
    NotRegularError,
    NotSymmetricError,
    OrientedGraph,
    Spectrum,
    adjacency_spectrum,
    complete_bipartite,
    cycle,
    elementary_orientation,
    from_arcs,
    graph_energy,
    is_gram_scalar,
    path,
    skew_adjacency,
    skew_energy,
    skew_gram,
    skew_spectrum,
    spectra_equal,
    spectrum_energy,
    symmetric_eigenvalues,
)
from oracles import all_orientations, direct_skew_spectrum
from strategies import oriented_graphs


class TestSymmetricEigenvalues:
    def test_p2(self):
        sp = symmetric_eigenvalues(np.array([[0, 1], [1, 0]]))
        assert sp.values == pytest.approx((1.0, -1.0))

    def test_c4_adjacency(self):
        sp = adjacency_spectrum(cycle(4))
        assert sp.values == pytest.approx((2.0, 0.0, 0.0, -2.0), abs=1e-12)

    def test_zero_matrix(self):
        sp = symmetric_eigenvalues(np.zeros((3, 3), dtype=np.int64))
        assert sp.values == (0.0, 0.0, 0.0)

    def test_rejects_asymmetric(self):
        with pytest.raises(NotSymmetricError):
            symmetric_eigenvalues(np.array([[0, 1], [-1, 0]]))
        with pytest.raises(NotSymmetricError):
            symmetric_eigenvalues(np.zeros((2, 3)))

    def test_descending_enforced_by_spectrum_type(self):
        with pytest.raises(ValueError):
            Spectrum((0.0, 1.0))


class TestSkewSpectrum:
    def test_p2(self):
        assert skew_spectrum(from_arcs(2, [(0, 1)])).values == (1.0, -1.0)

    def test_c4_odd_orientation(self):
        og = from_arcs(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        r2 = math.sqrt(2)
        assert skew_spectrum(og).values == pytest.approx((r2, r2, -r2, -r2))

    def test_star_any_orientation_matches_i_times_adjacency(self):
        k13 = complete_bipartite(1, 3)
        target = adjacency_spectrum(k13)
        assert target.values == pytest.approx(
            (math.sqrt(3), 0.0, 0.0, -math.sqrt(3)), abs=1e-12
        )
        for og in all_orientations(k13):
            assert spectra_equal(skew_spectrum(og), target, 1e-8)

    @given(oriented_graphs())
    def test_exact_antisymmetry(self, og):
        vals = skew_spectrum(og).values
        n = len(vals)
        for i in range(n):
            assert vals[i] + vals[n - 1 - i] == 0.0

    @given(oriented_graphs())
    def test_trace_identity(self, og):
        total = sum(v * v for v in skew_spectrum(og).values)
        assert total == pytest.approx(2 * og.graph.m, rel=1e-8, abs=1e-8)

    @given(oriented_graphs())
    def test_matches_direct_eigensolve(self, og):
        mine = skew_spectrum(og).values
        ref = direct_skew_spectrum(og)
        assert all(abs(a - b) < 1e-9 for a, b in zip(mine, ref))

    @given(oriented_graphs(max_n=6))
    def test_gram_diagonal_is_degree_sequence(self, og):
        gram = skew_gram(og)
        assert tuple(gram.diagonal().tolist()) == og.graph.degrees()
        s = skew_adjacency(og)
        assert np.array_equal(gram, s @ s.T)


class TestSpectraEqual:
    def test_elementary_c4_matches_adjacency(self):
        og = elementary_orientation(cycle(4))
        assert spectra_equal(skew_spectrum(og), adjacency_spectrum(cycle(4)), 1e-8)

    def test_length_mismatch(self):
        assert not spectra_equal(Spectrum((1.0, -1.0)), Spectrum((1.0, 0.0, -1.0)))

    def test_c6_three_clockwise_arcs_matches_adjacency(self):
        # 3 agreeing arcs out of 6 gives odd agreement count, which is the
        # uniform parity for a 6-cycle, so the spectra agree; 2 agreeing
        # arcs must not.
        def with_clockwise(k):
            arcs = [
                ((i, (i + 1) % 6) if i < k else ((i + 1) % 6, i)) for i in range(6)
            ]
            return from_arcs(6, arcs)

        adj = adjacency_spectrum(cycle(6))
        assert spectra_equal(skew_spectrum(with_clockwise(3)), adj, 1e-8)
        assert not spectra_equal(skew_spectrum(with_clockwise(2)), adj, 1e-8)

    def test_tolerance_scales_with_magnitude(self):
        a = Spectrum((100.0 + 5e-7, -100.0 - 5e-7))
        b = Spectrum((100.0, -100.0))
        assert spectra_equal(a, b, 1e-8)
        assert not spectra_equal(a, b, 1e-10)


class TestEnergy:
    def test_p2_energy(self):
        rep = skew_energy(from_arcs(2, [(0, 1)]))
        assert rep.energy == pytest.approx(2.0)
        assert rep.degree == 1 and rep.is_maximum and rep.exact_certificate

    def test_c4_odd_is_maximum(self):
        og = from_arcs(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        rep = skew_energy(og)
        assert rep.energy == pytest.approx(4 * math.sqrt(2))
        assert rep.degree == 2
        assert rep.bound == pytest.approx(4 * math.sqrt(2))
        assert rep.is_maximum and rep.exact_certificate

    def test_elementary_k44_not_maximum(self):
        rep = skew_energy(elementary_orientation(complete_bipartite(4, 4)))
        assert not rep.is_maximum and not rep.exact_certificate
        assert rep.energy == pytest.approx(8.0)
        assert rep.bound == pytest.approx(16.0)

    def test_non_regular_reports_no_bound(self):
        rep = skew_energy(from_arcs(3, [(0, 1), (1, 2)]))
        assert rep.degree is None and rep.bound is None
        assert not rep.is_maximum and not rep.exact_certificate

    def test_graph_energy(self):
        assert graph_energy(path(2)) == pytest.approx(2.0)
        assert graph_energy(cycle(4)) == pytest.approx(4.0)
        assert graph_energy(complete_bipartite(4, 4)) == pytest.approx(8.0)

    @given(oriented_graphs(max_n=7))
    def test_maximum_iff_all_magnitudes_sqrt_k(self, og):
        rep = skew_energy(og)
        k = og.graph.regular_degree()
        if rep.is_maximum:
            assert k is not None
            assert all(
                abs(abs(v) - math.sqrt(k)) < 1e-8 for v in skew_spectrum(og).values
            )
        elif k is not None and og.n:
            vals = skew_spectrum(og).values
            assert any(abs(abs(v) - math.sqrt(k)) > 1e-8 for v in vals) or k == 0


class TestGramScalar:
    def test_explicit_k(self):
        og = from_arcs(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert is_gram_scalar(og, 2)
        assert not is_gram_scalar(og, 3)

    def test_requires_regular_when_k_omitted(self):
        with pytest.raises(NotRegularError):
            is_gram_scalar(from_arcs(3, [(0, 1), (1, 2)]))

    def test_all_c4_orientations_split(self):
        hits = sum(is_gram_scalar(og, 2) for og in all_orientations(cycle(4)))
        # 8 of the 16 orientations of a 4-cycle sit on the energy bound
        assert hits == 8

    def test_spectrum_energy_helper(self):
        assert spectrum_energy(Spectrum((2.0, 0.0, -2.0))) == 4.0
