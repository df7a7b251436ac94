import numpy as np
import pytest

from skewspec import (
    NotRegularError,
    build_graph,
    complete,
    complete_bipartite,
    cycle,
    find_max_energy_orientation,
    is_gram_scalar,
    path,
    seed_orientation,
    skew_gram,
)


class TestSearchFinds:
    def test_k44(self):
        res = find_max_energy_orientation(complete_bipartite(4, 4))
        assert res.found and res.exhausted is False
        assert res.states <= 2**15
        assert np.array_equal(
            skew_gram(res.orientation), 4 * np.eye(8, dtype=np.int64)
        )

    def test_k4(self):
        res = find_max_energy_orientation(complete(4))
        assert res.found
        assert np.array_equal(
            skew_gram(res.orientation), 3 * np.eye(4, dtype=np.int64)
        )

    def test_c4_is_oddly_oriented(self):
        res = find_max_energy_orientation(cycle(4))
        assert res.found
        assert is_gram_scalar(res.orientation, 2)

    def test_p2(self):
        res = find_max_energy_orientation(path(2))
        assert res.found and res.orientation.direction == (0,)

    def test_first_direction_bit_pinned(self):
        for g in (complete_bipartite(4, 4), complete(4), cycle(4)):
            res = find_max_energy_orientation(g)
            assert res.orientation.direction[0] == 0

    def test_reproduces_frozen_seeds(self):
        # the stored family seeds are exactly what the search derives
        for base, g in [
            ("k44", complete_bipartite(4, 4)),
            ("k4", complete(4)),
            ("c4", cycle(4)),
            ("p2", path(2)),
        ]:
            res = find_max_energy_orientation(g)
            assert res.orientation == seed_orientation(base)

    def test_deterministic_across_runs(self):
        a = find_max_energy_orientation(complete_bipartite(4, 4))
        b = find_max_energy_orientation(complete_bipartite(4, 4))
        assert a == b

    def test_edgeless(self):
        res = find_max_energy_orientation(build_graph(3, []))
        assert res.found and res.orientation.direction == ()


class TestSearchExhausts:
    def test_c6_and_c8_not_found(self):
        for n in (6, 8):
            res = find_max_energy_orientation(cycle(n))
            assert not res.found
            assert res.exhausted

    def test_nonregular_rejected(self):
        with pytest.raises(NotRegularError):
            find_max_energy_orientation(path(3))

    def test_budget_stops_early(self):
        res = find_max_energy_orientation(complete_bipartite(4, 4), budget=5)
        assert not res.found
        assert not res.exhausted
        assert res.states == 5
