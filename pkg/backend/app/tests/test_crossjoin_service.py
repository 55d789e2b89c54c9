import itertools

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from app.models.crossjoin_models import CrossJoinGraph, CrossJoinMove
from app.models.digraph_models import DigraphParams
from app.services.crossjoin_service import crossjoin_service
from app.services.cycle_service import cycle_service
from app.tests.golden import NEIGHBOR_HISTOGRAM_32_2
from app.utils.errors import (
    BudgetExceededError,
    DomainError,
    InvalidMoveError,
    UnsupportedOperationError,
)

P8 = DigraphParams(N=8, d=2)
P6_3 = DigraphParams(N=6, d=3)
U8 = (0, 1, 3, 7, 6, 5, 2, 4)
U6_3 = (0, 2, 1, 5, 3, 4)

# d | N, 2 <= d <= 4, N <= 16, with at least one cycle
SMALL_GRID = [(4, 2), (6, 2), (8, 2), (10, 2), (12, 2), (14, 2), (16, 2),
              (3, 3), (6, 3), (9, 3), (12, 3), (4, 4), (8, 4)]


def cycle(params, vertices):
    return cycle_service.validate(params, list(vertices))


class TestCrossJoinMove:
    """
    Test cases for the move model
    """

    def test_shape_rules(self):
        CrossJoinMove(cross=(2, 6), join=(5, 7))
        CrossJoinMove(cross=(2, 6), join=(6, 1))
        with pytest.raises(ValueError):
            CrossJoinMove(cross=(6, 2), join=(5, 7))
        with pytest.raises(ValueError):
            CrossJoinMove(cross=(2, 6), join=(7, 5))
        with pytest.raises(ValueError):
            CrossJoinMove(cross=(2, 6), join=(6, 2))

    def test_from_scan(self):
        move = CrossJoinMove.from_scan(7, 13, 15, 10)
        assert move.cross == (7, 13)
        assert move.join == (10, 15)

    def test_notation(self):
        move = CrossJoinMove.parse("cross=2,6;join=5,7")
        assert move.positions == (2, 6, 5, 7)
        assert move.to_notation() == "cross=2,6;join=5,7"
        with pytest.raises(ValueError):
            CrossJoinMove.parse("cross=2;join=5,7")


class TestCrossJoinService:
    """
    Test cases for split, apply and neighbor enumeration
    """

    def test_split_8_2(self):
        outer, inner = crossjoin_service.split(cycle(P8, U8), 2, 6)
        assert outer == (0, 1, 2, 4)
        assert inner == (3, 7, 6, 5)

    def test_split_6_3(self):
        outer, inner = crossjoin_service.split(cycle(P6_3, U6_3), 2, 6)
        assert outer == (0, 2)
        assert inner == (1, 5, 3, 4)

    def test_split_rejects_non_conjugate(self):
        with pytest.raises(InvalidMoveError):
            crossjoin_service.split(cycle(P8, U8), 1, 2)

    def test_apply_8_2(self):
        result = crossjoin_service.apply_move(cycle(P8, U8), CrossJoinMove(cross=(2, 6), join=(5, 7)))
        assert result.vertices == (0, 1, 2, 5, 3, 7, 6, 4)

    def test_apply_6_3_shared_vertex(self):
        result = crossjoin_service.apply_move(cycle(P6_3, U6_3), CrossJoinMove(cross=(2, 6), join=(6, 1)))
        assert result.vertices == (0, 1, 5, 3, 4, 2)

    def test_move_from_vertices(self):
        move = crossjoin_service.move_from_vertices(cycle(P8, U8), (1, 5), (6, 2))
        assert move == CrossJoinMove(cross=(2, 6), join=(5, 7))

    def test_move_from_vertices_must_span(self):
        with pytest.raises(InvalidMoveError):
            crossjoin_service.move_from_vertices(cycle(P8, U8), (1, 5), (0, 4))

    def test_apply_rejects_non_conjugate_join(self):
        with pytest.raises(InvalidMoveError):
            crossjoin_service.apply_move(cycle(P8, U8), CrossJoinMove(cross=(2, 6), join=(4, 7)))

    def test_apply_rejects_out_of_range(self):
        with pytest.raises(InvalidMoveError):
            crossjoin_service.apply_move(cycle(P8, U8), CrossJoinMove(cross=(2, 6), join=(5, 9)))

    def test_requires_divisibility(self):
        u = cycle(DigraphParams(N=10, d=3), [0, 2, 7, 1, 5, 6, 9, 8, 4, 3])
        with pytest.raises(UnsupportedOperationError):
            crossjoin_service.enumerate_moves(u)
        with pytest.raises(UnsupportedOperationError):
            crossjoin_service.neighbor_histogram(DigraphParams(N=10, d=4))

    def test_enumerate_moves(self):
        assert crossjoin_service.enumerate_moves(cycle(DigraphParams(N=4, d=2), [0, 1, 3, 2])) == []
        moves = crossjoin_service.enumerate_moves(cycle(P8, U8))
        assert CrossJoinMove(cross=(2, 6), join=(5, 7)) in moves
        assert [m.positions for m in moves] == sorted(m.positions for m in moves)

    def test_neighbors_8_2(self):
        found = crossjoin_service.neighbors(cycle(P8, U8))
        assert {c.vertices for c in found} == {(0, 1, 2, 5, 3, 7, 6, 4)}

    def test_neighbor_counts_16_2(self):
        for u in cycle_service.all_cycles(DigraphParams(N=16, d=2)):
            assert len(crossjoin_service.neighbors(u)) in (7, 10)

    def test_inverse_move(self):
        u = cycle(P8, U8)
        move = CrossJoinMove(cross=(2, 6), join=(5, 7))
        back = crossjoin_service.inverse_move(u, move)
        assert crossjoin_service.apply_move(crossjoin_service.apply_move(u, move), back) == u


class TestCrossJoinProperties:
    """
    Structural properties over small parameter grids
    """

    @pytest.mark.parametrize("n,d", SMALL_GRID)
    def test_split_partitions_into_cycles(self, n, d):
        params = DigraphParams(N=n, d=d)
        for u in cycle_service.all_cycles(params):
            for move in crossjoin_service.enumerate_moves(u):
                outer, inner = crossjoin_service.split(u, *move.cross)
                assert set(outer).isdisjoint(inner)
                assert set(outer) | set(inner) == set(range(n))
                for part in (outer, inner):
                    for s, t in zip(part, part[1:] + part[:1]):
                        assert (t - d * s) % n < d

    @pytest.mark.parametrize("n,d", SMALL_GRID)
    def test_moves_are_valid_and_change_the_cycle(self, n, d):
        params = DigraphParams(N=n, d=d)
        for u in cycle_service.all_cycles(params):
            for move in crossjoin_service.enumerate_moves(u):
                result = crossjoin_service.apply_move(u, move)
                assert result != u
                assert cycle(params, result.vertices) == result

    def test_binary_moves_use_four_positions(self):
        for n in (8, 16):
            for u in cycle_service.all_cycles(DigraphParams(N=n, d=2)):
                for move in crossjoin_service.enumerate_moves(u):
                    assert len(set(move.positions)) == 4

    def test_involution_16_2(self):
        for u in cycle_service.all_cycles(DigraphParams(N=16, d=2)):
            for move in crossjoin_service.enumerate_moves(u):
                w = crossjoin_service.apply_move(u, move)
                assert crossjoin_service.apply_move(w, crossjoin_service.inverse_move(u, move)) == u

    @pytest.mark.parametrize("n,d", [(8, 2), (16, 2), (9, 3)])
    def test_some_neighbor_is_closer(self, n, d):
        cycles = cycle_service.all_cycles(DigraphParams(N=n, d=d))
        neighbors = {u: crossjoin_service.neighbors(u) for u in cycles}
        for u, v in itertools.permutations(cycles, 2):
            here = cycle_service.distance(u, v)
            assert any(cycle_service.distance(w, v) < here for w in neighbors[u])

    @hypothesis_settings(max_examples=30, deadline=None)
    @given(st.sampled_from([(8, 2), (12, 2), (6, 3), (12, 4)]), st.data())
    def test_adjacency_symmetric(self, grid, data):
        n, d = grid
        cycles = cycle_service.all_cycles(DigraphParams(N=n, d=d))
        u = data.draw(st.sampled_from(cycles))
        for w in crossjoin_service.neighbors(u):
            assert crossjoin_service.are_adjacent(w, u)


class TestCrossJoinGraph:
    """
    Test cases for the cross-join graph, its census and connectivity
    """

    def test_histogram_16_2(self):
        assert crossjoin_service.neighbor_histogram(DigraphParams(N=16, d=2)) == {7: 8, 10: 8}

    def test_histogram_counts_moves(self):
        params = DigraphParams(N=16, d=2)
        by_moves = crossjoin_service.neighbor_histogram(params, count="moves")
        assert sum(by_moves.values()) == 16
        assert min(by_moves) >= 7

    def test_histogram_rejects_unknown_count(self):
        with pytest.raises(DomainError):
            crossjoin_service.neighbor_histogram(DigraphParams(N=16, d=2), count="edges")

    @pytest.mark.slow
    def test_histogram_32_2(self):
        histogram = crossjoin_service.neighbor_histogram(DigraphParams(N=32, d=2), threads=2)
        assert histogram == {n: f for n, f in NEIGHBOR_HISTOGRAM_32_2.items() if f}
        assert sum(histogram.values()) == 2048

    def test_graph_16_2(self):
        graph = crossjoin_service.build_crossjoin_graph(DigraphParams(N=16, d=2))
        assert len(graph.nodes) == 16
        assert sorted(graph.degrees()) == [7] * 8 + [10] * 8
        assert graph.edge_count == (7 * 8 + 10 * 8) // 2

    def test_graph_8_2(self):
        graph = crossjoin_service.build_crossjoin_graph(P8)
        assert len(graph.nodes) == 2
        assert graph.adjacency == [[1], [0]]

    def test_graph_budget(self):
        with pytest.raises(BudgetExceededError):
            crossjoin_service.build_crossjoin_graph(DigraphParams(N=16, d=2), budget=10)

    @pytest.mark.parametrize("n,d", [(4, 2), (6, 2), (8, 2), (10, 2), (12, 2), (16, 2), (6, 3), (9, 3), (12, 3)])
    def test_connected(self, n, d):
        graph = crossjoin_service.build_crossjoin_graph(DigraphParams(N=n, d=d))
        assert crossjoin_service.is_connected(graph) == (True, 1)

    @pytest.mark.slow
    def test_connected_32_2(self):
        graph = crossjoin_service.build_crossjoin_graph(DigraphParams(N=32, d=2), threads=2)
        assert crossjoin_service.is_connected(graph) == (True, 1)

    def test_empty_graph_is_connected_by_convention(self):
        graph = CrossJoinGraph(params=DigraphParams(N=5, d=5), nodes=[], adjacency=[])
        assert crossjoin_service.is_connected(graph) == (True, 0)

    def test_parallel_graph_matches_sequential(self):
        params = DigraphParams(N=16, d=2)
        assert (crossjoin_service.build_crossjoin_graph(params, threads=2).adjacency
                == crossjoin_service.build_crossjoin_graph(params).adjacency)


class TestCrossJoinPath:
    """
    Test cases for the distance-decreasing cross-join walk
    """

    def test_identity(self):
        u = cycle(P8, U8)
        assert crossjoin_service.crossjoin_path(u, u) == []

    def test_single_step_8_2(self):
        u = cycle(P8, U8)
        v = cycle(P8, [0, 1, 2, 5, 3, 7, 6, 4])
        steps = crossjoin_service.crossjoin_path(u, v)
        assert len(steps) == 1
        assert steps[0][1] == v

    def test_parameter_mismatch(self):
        u = cycle(P8, U8)
        v = cycle(DigraphParams(N=4, d=2), [0, 1, 3, 2])
        with pytest.raises(DomainError):
            crossjoin_service.crossjoin_path(u, v)

    @pytest.mark.parametrize("n,d", [(8, 2), (16, 2), (9, 3), (6, 3)])
    def test_every_pair(self, n, d):
        cycles = cycle_service.all_cycles(DigraphParams(N=n, d=d))
        for u, v in itertools.permutations(cycles, 2):
            steps = crossjoin_service.crossjoin_path(u, v)
            assert 1 <= len(steps) <= n
            assert steps[-1][1] == v
            previous, distance = u, cycle_service.distance(u, v)
            for move, w in steps:
                assert crossjoin_service.apply_move(previous, move) == w
                assert cycle_service.distance(w, v) < distance
                previous, distance = w, cycle_service.distance(w, v)
