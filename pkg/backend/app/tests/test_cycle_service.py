import itertools

import pytest

from app.models.cycle_models import DeBruijnCycle
from app.models.digraph_models import DigraphParams
from app.services.cycle_service import cycle_service
from app.tests.golden import PREFER_ONE_16
from app.utils.errors import BudgetExceededError, CycleValidationError, DomainError


class TestCycleValidation:
    """
    Test cases for validating and aligning cycles
    """

    def setup_method(self):
        self.p8 = DigraphParams(N=8, d=2)

    def test_validate_aligned_cycle(self):
        cycle = cycle_service.validate(self.p8, [0, 1, 3, 7, 6, 5, 2, 4])
        assert cycle.vertices == (0, 1, 3, 7, 6, 5, 2, 4)

    def test_validate_rotates_to_zero(self):
        cycle = cycle_service.validate(DigraphParams(N=6, d=3), [3, 4, 0, 2, 1, 5])
        assert cycle.vertices == (0, 2, 1, 5, 3, 4)

    def test_broken_edge_reports_position(self):
        with pytest.raises(CycleValidationError) as info:
            cycle_service.validate(self.p8, [0, 1, 3, 7, 6, 5, 4, 2])
        assert info.value.position == 7
        assert "5 -> 4" in str(info.value)

    def test_missing_zero(self):
        with pytest.raises(CycleValidationError):
            cycle_service.validate(self.p8, [1, 3, 7, 6, 5, 2, 4, 1])

    def test_duplicated_vertex(self):
        with pytest.raises(CycleValidationError):
            cycle_service.validate(self.p8, [0, 1, 3, 7, 6, 5, 2, 2])

    def test_wrong_length(self):
        with pytest.raises(CycleValidationError):
            cycle_service.validate(self.p8, [0, 1, 3, 2])

    def test_model_rejects_unaligned(self):
        with pytest.raises(ValueError):
            DeBruijnCycle(params=self.p8, vertices=(1, 3, 7, 6, 5, 2, 4, 0))

    def test_align(self):
        assert cycle_service.align([3, 7, 6, 4, 0, 1, 2, 5]) == (0, 1, 2, 5, 3, 7, 6, 4)
        assert cycle_service.align([0, 1, 3, 2]) == (0, 1, 3, 2)

    def test_align_repeated_zero(self):
        with pytest.raises(CycleValidationError):
            cycle_service.align([0, 1, 0, 2])


class TestDistance:
    """
    Test cases for the prefix distance D(u, v)
    """

    def test_worked_example(self):
        p = DigraphParams(N=10, d=3)
        u = cycle_service.validate(p, [0, 2, 7, 1, 5, 6, 9, 8, 4, 3])
        v = cycle_service.validate(p, [0, 2, 7, 1, 4, 3, 9, 8, 5, 6])
        assert cycle_service.distance(u, v) == 6
        assert cycle_service.distance(u, u) == 0

    def test_parameter_mismatch(self):
        u = cycle_service.validate(DigraphParams(N=4, d=2), [0, 1, 3, 2])
        v = cycle_service.validate(DigraphParams(N=8, d=2), [0, 1, 3, 7, 6, 5, 2, 4])
        with pytest.raises(DomainError):
            cycle_service.distance(u, v)

    @pytest.mark.parametrize("n,d", [(16, 2), (9, 3)])
    def test_metric_axioms(self, n, d):
        cycles = cycle_service.all_cycles(DigraphParams(N=n, d=d))
        for u, v in itertools.product(cycles, repeat=2):
            duv = cycle_service.distance(u, v)
            assert (duv == 0) == (u == v)
            assert duv == cycle_service.distance(v, u)
            assert duv != 1
        for u, v, w in itertools.product(cycles, repeat=3):
            duw = cycle_service.distance(u, w)
            duv = cycle_service.distance(u, v)
            dvw = cycle_service.distance(v, w)
            assert duw <= duv + dvw
            assert duw <= max(duv, dvw)


class TestEnumeration:
    """
    Test cases for enumerating and counting cycles
    """

    @pytest.mark.parametrize("d,k,expected", [(2, 3, 2), (2, 4, 16), (3, 2, 24)])
    def test_count_matches_formula(self, d, k, expected):
        params = DigraphParams(N=d ** k, d=d)
        assert cycle_service.count_cycles(params) == expected
        assert int(cycle_service.count_formula(d, k)) == expected

    @pytest.mark.slow
    def test_count_2_5_matches_formula(self):
        assert cycle_service.count_cycles(DigraphParams(N=32, d=2)) == 2048

    def test_canonical_order_8_2(self):
        cycles = cycle_service.all_cycles(DigraphParams(N=8, d=2))
        assert [c.vertices for c in cycles] == [
            (0, 1, 2, 5, 3, 7, 6, 4),
            (0, 1, 3, 7, 6, 5, 2, 4),
        ]

    def test_single_cycle_4_2(self):
        cycles = cycle_service.all_cycles(DigraphParams(N=4, d=2))
        assert [c.vertices for c in cycles] == [(0, 1, 3, 2)]

    @pytest.mark.parametrize("n", [3, 5, 7, 9])
    def test_odd_n_binary_has_no_cycle(self, n):
        assert cycle_service.count_cycles(DigraphParams(N=n, d=2)) == 0

    @pytest.mark.parametrize("n,d", [(16, 2), (9, 3), (12, 4), (12, 3)])
    def test_enumerated_cycles_are_distinct_and_valid(self, n, d):
        params = DigraphParams(N=n, d=d)
        cycles = cycle_service.all_cycles(params)
        assert len({c.vertices for c in cycles}) == len(cycles)
        for cycle in cycles:
            assert cycle_service.validate(params, list(cycle.vertices)) == cycle

    def test_visitor_sees_every_cycle(self):
        seen = []
        emitted = list(cycle_service.enumerate_cycles(DigraphParams(N=16, d=2), visitor=seen.append))
        assert seen == emitted

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceededError):
            cycle_service.all_cycles(DigraphParams(N=16, d=2), budget=5)
        with pytest.raises(BudgetExceededError):
            cycle_service.count_cycles(DigraphParams(N=16, d=2), budget=15)

    def test_parallel_enumeration_is_deterministic(self):
        params = DigraphParams(N=16, d=2)
        sequential = list(cycle_service.iter_cycles(params))
        assert list(cycle_service.iter_cycles(params, threads=2)) == sequential
        assert list(cycle_service.iter_cycles(params, threads=2, partition_depth=6)) == sequential


class TestCounting:
    """
    Test cases for the closed-form counts
    """

    def test_count_formula(self):
        assert int(cycle_service.count_formula(2, 5)) == 2048
        assert int(cycle_service.count_formula(2, 4)) == 16

    def test_count_formula_is_exact(self):
        # (2!)^(2^5) / 2^6 = 2^26
        assert int(cycle_service.count_formula(2, 6)) == 2 ** 26
        assert int(cycle_service.count_formula(3, 3)) == 6 ** 9 // 27

    def test_count_formula_rejects_bad_input(self):
        with pytest.raises(DomainError):
            cycle_service.count_formula(1, 3)
        with pytest.raises(DomainError):
            cycle_service.count_formula(2, 0)

    def test_count_formula_size_cap(self):
        with pytest.raises(BudgetExceededError):
            cycle_service.count_formula(2, 40)
        with pytest.raises(BudgetExceededError):
            cycle_service.count_formula(2, 10 ** 30)
        with pytest.raises(BudgetExceededError):
            cycle_service.count_formula(10 ** 6, 1)
        # 2^(2^13 - 14) has under 4000 digits
        assert cycle_service.count_formula(2, 14).value == 2 ** (2 ** 13 - 14)

    def test_chang_count_size_cap(self):
        with pytest.raises(BudgetExceededError):
            cycle_service.chang_count(100_000)

    @pytest.mark.parametrize("k,expected", [(2, 0), (4, 7), (5, 35)])
    def test_chang_count(self, k, expected):
        assert int(cycle_service.chang_count(k)) == expected

    def test_is_de_bruijn_power(self):
        assert cycle_service.is_de_bruijn_power(DigraphParams(N=32, d=2)) == 5
        assert cycle_service.is_de_bruijn_power(DigraphParams(N=9, d=3)) == 2
        assert cycle_service.is_de_bruijn_power(DigraphParams(N=12, d=3)) is None
        assert cycle_service.is_de_bruijn_power(DigraphParams(N=3, d=3)) == 1


class TestGreedyGenerate:
    """
    Test cases for the greedy generator
    """

    def test_prefer_largest_16(self):
        cycle = cycle_service.greedy_generate(DigraphParams(N=16, d=2), "largest")
        assert cycle.vertices == PREFER_ONE_16

    def test_prefer_smallest_is_valid(self):
        params = DigraphParams(N=16, d=2)
        cycle = cycle_service.greedy_generate(params, "smallest")
        assert cycle.vertices[0] == 0
        assert cycle_service.validate(params, list(cycle.vertices)) == cycle

    def test_not_found(self):
        assert cycle_service.greedy_generate(DigraphParams(N=5, d=2), "largest") is None

    def test_bad_preference(self):
        with pytest.raises(DomainError):
            cycle_service.greedy_generate(DigraphParams(N=8, d=2), "middle")

    @pytest.mark.parametrize("n,d", [(8, 2), (9, 3), (12, 4), (12, 3), (32, 2)])
    def test_greedy_output_validates(self, n, d):
        params = DigraphParams(N=n, d=d)
        for preference in ("largest", "smallest"):
            cycle = cycle_service.greedy_generate(params, preference)
            assert cycle_service.validate(params, list(cycle.vertices)) == cycle
