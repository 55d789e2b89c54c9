from collections import Counter, defaultdict
from typing import Dict, List, Optional, Sequence, Set, Tuple
import logging

import networkx as nx

from app.config.settings import settings
from app.models.crossjoin_models import CrossJoinGraph, CrossJoinMove
from app.models.cycle_models import DeBruijnCycle
from app.models.digraph_models import DigraphParams
from app.services.cycle_service import common_prefix_length, cycle_service
from app.utils.errors import (
    DomainError,
    InvalidMoveError,
    InvariantViolationError,
    UnsupportedOperationError,
)
from app.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

Walk = Tuple[int, ...]
RawMove = Tuple[int, int, int, int]


def conjugate_position_pairs(seq: Sequence[int], m: int) -> List[Tuple[int, int]]:
    """All 1-based position pairs (a, b), a < b, whose vertices agree mod m, sorted."""
    classes: Dict[int, List[int]] = defaultdict(list)
    for position, x in enumerate(seq, start=1):
        classes[x % m].append(position)
    pairs = [
        (members[s], members[t])
        for members in classes.values()
        for s in range(len(members))
        for t in range(s + 1, len(members))
    ]
    pairs.sort()
    return pairs


def raw_moves(seq: Sequence[int], m: int) -> List[RawMove]:
    """Every valid (a, b, p_in, p_out) on seq, sorted ascending."""
    pairs = conjugate_position_pairs(seq, m)
    moves: List[RawMove] = []
    for a, b in pairs:
        for p, q in pairs:
            p_inside = a < p <= b
            q_inside = a < q <= b
            if p_inside == q_inside:
                continue
            p_in, p_out = (p, q) if p_inside else (q, p)
            if (p_in, p_out) == (b, a):
                continue
            moves.append((a, b, p_in, p_out))
    moves.sort()
    return moves


def apply_raw(seq: Sequence[int], a: int, b: int, p_in: int, p_out: int) -> Optional[Walk]:
    """
    Apply a cross-join given by 1-based positions; None if the result is not
    a single cycle through every vertex.

    Conjugacy of both pairs is the caller's responsibility.
    """
    if p_out > b:
        # x_1..x_a, x_{b+1}..x_{p_out}, x_{p_in+1}..x_b, x_{a+1}..x_{p_in}, x_{p_out+1}..x_N
        return (tuple(seq[:a]) + tuple(seq[b:p_out]) + tuple(seq[p_in:b])
                + tuple(seq[a:p_in]) + tuple(seq[p_out:]))

    n = len(seq)
    succ = [0] * n
    for t in range(n):
        succ[seq[t]] = seq[(t + 1) % n]
    xa, xb = seq[a - 1], seq[b - 1]
    succ[xa], succ[xb] = succ[xb], succ[xa]
    xi, xo = seq[p_in - 1], seq[p_out - 1]
    succ[xi], succ[xo] = succ[xo], succ[xi]

    walk = [seq[0]]
    x = succ[seq[0]]
    while x != seq[0] and len(walk) < n:
        walk.append(x)
        x = succ[x]
    if len(walk) != n or x != seq[0]:
        return None
    return tuple(walk)


def neighbor_walks(seq: Sequence[int], m: int) -> Set[Walk]:
    found: Set[Walk] = set()
    for a, b, p_in, p_out in raw_moves(seq, m):
        result = apply_raw(seq, a, b, p_in, p_out)
        if result is None:
            raise InvariantViolationError(
                f"move cross={a},{b};join={p_in},{p_out} did not produce a single cycle"
            )
        found.add(result)
    return found


def _neighbor_count(job: Tuple[Walk, int, str]) -> int:
    seq, m, count = job
    if count == "moves":
        return len(raw_moves(seq, m))
    return len(neighbor_walks(seq, m))


def _neighbor_list(job: Tuple[Walk, int]) -> List[Walk]:
    seq, m = job
    return sorted(neighbor_walks(seq, m))


class CrossJoinService:
    """
    Cross-join operations on de Bruijn cycles and the cross-join graph C(N, d)
    """

    def _require_divisible(self, params: DigraphParams) -> None:
        if not params.divides:
            raise UnsupportedOperationError(
                f"cross-join operations need d | N; {params.d} does not divide {params.N}"
            )

    def _check_positions(self, u: DeBruijnCycle, *positions: int) -> None:
        for position in positions:
            if not 1 <= position <= u.N:
                raise InvalidMoveError(f"position {position} is outside [1, {u.N}]")

    def _check_conjugate(self, u: DeBruijnCycle, p: int, q: int, role: str) -> None:
        x, y = u.at(p), u.at(q)
        if (x - y) % u.params.modulus != 0:
            raise InvalidMoveError(
                f"{role} pair at positions ({p}, {q}) holds vertices {x} and {y}, which are not conjugate"
            )

    def split(self, u: DeBruijnCycle, a: int, b: int) -> Tuple[Walk, Walk]:
        """
        Swap the successors of the conjugate vertices at positions a < b

        Args:
            u: Source cycle
            a: First position (1-based)
            b: Second position, greater than a

        Returns:
            (outer, inner): outer holds positions 1..a then b+1..N, inner holds
            positions a+1..b; each is a cycle of G_B(N, d)
        """
        self._require_divisible(u.params)
        self._check_positions(u, a, b)
        if not a < b:
            raise InvalidMoveError(f"split needs a < b, got ({a}, {b})")
        self._check_conjugate(u, a, b, "cross")
        seq = u.vertices
        return tuple(seq[:a]) + tuple(seq[b:]), tuple(seq[a:b])

    def apply_move(self, u: DeBruijnCycle, move: CrossJoinMove) -> DeBruijnCycle:
        """
        Apply a cross-join move: swap at the cross pair, then at the join pair

        Raises:
            UnsupportedOperationError: If d does not divide N
            InvalidMoveError: If a pair is out of range or not conjugate
        """
        self._require_divisible(u.params)
        a, b, p_in, p_out = move.positions
        self._check_positions(u, a, b, p_in, p_out)
        self._check_conjugate(u, a, b, "cross")
        self._check_conjugate(u, p_in, p_out, "join")
        result = apply_raw(u.vertices, a, b, p_in, p_out)
        if result is None:
            raise InvalidMoveError(f"{move.to_notation()} does not rejoin the split cycles")
        return DeBruijnCycle.trusted(u.params, result)

    def inverse_move(self, u: DeBruijnCycle, move: CrossJoinMove) -> CrossJoinMove:
        """
        The move on apply_move(u, move) that restores u

        The join vertices become the cross pair and the cross vertices the
        join pair.
        """
        w = self.apply_move(u, move)
        a, b, p_in, p_out = move.positions
        a2, b2 = sorted((w.position_of(u.at(p_in)), w.position_of(u.at(p_out))))
        back = [w.position_of(u.at(a)), w.position_of(u.at(b))]
        inside = [p for p in back if a2 < p <= b2]
        outside = [p for p in back if not a2 < p <= b2]
        if len(inside) != 1:
            raise InvariantViolationError(f"no inverse for {move.to_notation()}")
        return CrossJoinMove(cross=(a2, b2), join=(inside[0], outside[0]))

    def move_from_vertices(self, u: DeBruijnCycle, cross_vertices: Tuple[int, int],
                           join_vertices: Tuple[int, int]) -> CrossJoinMove:
        """
        Translate vertex-valued cross and join pairs into positions on u

        Raises:
            InvalidMoveError: If the join pair does not straddle the split
        """
        for x in (*cross_vertices, *join_vertices):
            if x not in u.vertices:
                raise InvalidMoveError(f"vertex {x} is not in {u.params.label()}")
        a, b = sorted(u.position_of(x) for x in cross_vertices)
        join_positions = [u.position_of(x) for x in join_vertices]
        inside = [p for p in join_positions if a < p <= b]
        outside = [p for p in join_positions if not a < p <= b]
        if len(inside) != 1:
            raise InvalidMoveError(
                f"join vertices {join_vertices} do not span the two cycles split off by {cross_vertices}"
            )
        try:
            return CrossJoinMove(cross=(a, b), join=(inside[0], outside[0]))
        except ValueError as e:
            raise InvalidMoveError(str(e))

    def enumerate_moves(self, u: DeBruijnCycle) -> List[CrossJoinMove]:
        """
        All valid cross-join moves on u, ordered by (a, b, p_in, p_out)
        """
        self._require_divisible(u.params)
        return [
            CrossJoinMove(cross=(a, b), join=(p_in, p_out))
            for a, b, p_in, p_out in raw_moves(u.vertices, u.params.modulus)
        ]

    def neighbors(self, u: DeBruijnCycle) -> Set[DeBruijnCycle]:
        """
        Distinct cycles one cross-join away from u
        """
        self._require_divisible(u.params)
        walks = neighbor_walks(u.vertices, u.params.modulus)
        if u.vertices in walks:
            raise InvariantViolationError(f"cycle {u.to_text()} is its own cross-join neighbor")
        return {DeBruijnCycle.trusted(u.params, walk) for walk in walks}

    def are_adjacent(self, u: DeBruijnCycle, v: DeBruijnCycle) -> bool:
        self._require_divisible(u.params)
        return v.vertices in neighbor_walks(u.vertices, u.params.modulus)

    def neighbor_histogram(self, params: DigraphParams, count: str = "cycles",
                           budget: Optional[int] = None, threads: int = 1) -> Dict[int, int]:
        """
        How many cycles have each number of cross-join neighbors

        Args:
            params: Digraph parameters
            count: "cycles" counts distinct neighbor cycles, "moves" counts valid moves
            budget: Maximum number of cycles to enumerate
            threads: Worker processes

        Returns:
            Map from neighbor count n to frequency f, sorted by n
        """
        self._require_divisible(params)
        if count not in ("cycles", "moves"):
            raise DomainError(f"count must be 'cycles' or 'moves', got '{count}'")
        limit = settings.enumeration_budget if budget is None else budget
        cycles = [c.vertices for c in cycle_service.enumerate_cycles(params, budget=limit, threads=threads)]
        jobs = [(seq, params.modulus, count) for seq in cycles]
        histogram = Counter(ordered_map(_neighbor_count, jobs, threads, chunksize=64))
        total = sum(histogram.values())
        if total != len(cycles):
            raise InvariantViolationError(f"histogram covers {total} of {len(cycles)} cycles")
        logger.info(f"Neighbor census of {params.label()}: {len(cycles)} cycles, {len(histogram)} distinct counts")
        return dict(sorted(histogram.items()))

    def build_crossjoin_graph(self, params: DigraphParams, budget: Optional[int] = None,
                              threads: int = 1) -> CrossJoinGraph:
        """
        Build C(N, d) with nodes in canonical enumeration order

        Raises:
            BudgetExceededError: If there are more cycles than the budget
            InvariantViolationError: If adjacency is asymmetric or has self-loops
        """
        self._require_divisible(params)
        limit = settings.enumeration_budget if budget is None else budget
        nodes = cycle_service.all_cycles(params, budget=limit, threads=threads)
        index = {cycle.vertices: k for k, cycle in enumerate(nodes)}
        jobs = [(cycle.vertices, params.modulus) for cycle in nodes]

        adjacency: List[List[int]] = []
        for k, walks in enumerate(ordered_map(_neighbor_list, jobs, threads, chunksize=64)):
            try:
                row = sorted(index[walk] for walk in walks)
            except KeyError as e:
                raise InvariantViolationError(f"neighbor {e} of node {k} is not an enumerated cycle")
            if k in row:
                raise InvariantViolationError(f"node {k} is adjacent to itself")
            adjacency.append(row)

        for k, row in enumerate(adjacency):
            for t in row:
                if k not in adjacency[t]:
                    raise InvariantViolationError(f"adjacency is not symmetric between {k} and {t}")

        graph = CrossJoinGraph(params=params, nodes=nodes, adjacency=adjacency)
        logger.info(f"Built C({params.N},{params.d}): {len(nodes)} nodes, {graph.edge_count} edges")
        return graph

    def is_connected(self, graph: CrossJoinGraph) -> Tuple[bool, int]:
        """
        Connectivity of a cross-join graph

        Returns:
            (connected, number of components); an empty graph is reported as
            (True, 0)
        """
        if not graph.nodes:
            logger.warning(f"C({graph.params.N},{graph.params.d}) has no nodes; reporting connected by convention")
            return True, 0
        components = nx.number_connected_components(graph.to_networkx())
        return components == 1, components

    def crossjoin_path(self, u: DeBruijnCycle, v: DeBruijnCycle) -> List[Tuple[CrossJoinMove, DeBruijnCycle]]:
        """
        A walk of cross-joins from u to v along which D(., v) strictly decreases

        Each step splits the current cycle at the end of its common prefix with
        v and joins the split-off cycle back through a vertex lying beyond the
        (now longer) common prefix. Should that search come up empty, the
        neighbor strictly closer to v that is lexicographically smallest is
        taken instead.

        Returns:
            List of (move, resulting cycle) pairs; empty when u == v

        Raises:
            DomainError: If u and v belong to different digraphs
            InvariantViolationError: If no step decreases the distance
        """
        if u.params != v.params:
            raise DomainError(f"cannot connect cycles of {u.params.label()} and {v.params.label()}")
        self._require_divisible(u.params)
        params = u.params
        m = params.modulus
        max_steps = settings.crossjoin_path_max_steps or params.N
        target = v.vertices
        current = u.vertices
        steps: List[Tuple[CrossJoinMove, DeBruijnCycle]] = []

        while current != target:
            if len(steps) >= max_steps:
                raise InvariantViolationError(f"cross-join path exceeded {max_steps} steps")
            before = params.N - common_prefix_length(current, target)
            step = self._prefix_extending_step(current, target, m)
            if step is None:
                logger.debug(f"Direct join search failed at distance {before}; scanning all neighbors")
                step = self._closest_neighbor_step(current, target, m)
            if step is None:
                raise InvariantViolationError(f"no neighbor of {current} is closer to {target}")
            raw, result = step
            after = params.N - common_prefix_length(result, target)
            if after >= before:
                raise InvariantViolationError(f"distance did not decrease ({before} -> {after})")
            move = CrossJoinMove(cross=raw[:2], join=raw[2:])
            steps.append((move, DeBruijnCycle.trusted(params, result)))
            current = result

        logger.info(f"Cross-join path of {len(steps)} steps in {params.label()}")
        return steps

    def _prefix_extending_step(self, current: Walk, target: Walk, m: int) -> Optional[Tuple[RawMove, Walk]]:
        prefix = common_prefix_length(current, target)
        # x_{L0} and the predecessor of v's next vertex share that successor
        a = prefix
        b = current.index(target[prefix])
        outer_positions = list(range(1, a + 1)) + list(range(b + 1, len(current) + 1))
        split_cycle = [current[p - 1] for p in outer_positions]
        extended = common_prefix_length(split_cycle, target)
        for p_out in outer_positions[extended:]:
            for p_in in range(a + 1, b + 1):
                if (current[p_in - 1] - current[p_out - 1]) % m != 0:
                    continue
                result = apply_raw(current, a, b, p_in, p_out)
                if result is not None and common_prefix_length(result, target) > prefix:
                    return (a, b, p_in, p_out), result
        return None

    def _closest_neighbor_step(self, current: Walk, target: Walk, m: int) -> Optional[Tuple[RawMove, Walk]]:
        prefix = common_prefix_length(current, target)
        best: Optional[Tuple[RawMove, Walk]] = None
        for raw in raw_moves(current, m):
            result = apply_raw(current, *raw)
            if result is None or common_prefix_length(result, target) <= prefix:
                continue
            if best is None or result < best[1]:
                best = (raw, result)
        return best


# Create a singleton instance
crossjoin_service = CrossJoinService()
