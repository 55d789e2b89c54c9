from typing import List, Optional, Sequence, Tuple
import logging

from app.config.settings import settings
from app.models.crossjoin_models import CrossJoinMove
from app.models.cycle_models import DeBruijnCycle
from app.models.digraph_models import DigraphParams
from app.models.hamilton_models import HamiltonPathResult, JoinRule
from app.services.crossjoin_service import apply_raw, crossjoin_service, neighbor_walks
from app.services.cycle_service import cycle_service
from app.utils.errors import (
    BudgetExceededError,
    DomainError,
    InvalidMoveError,
    InvariantViolationError,
    UnsupportedOperationError,
)
from app.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def _conjugate(seq: Sequence[int], m: int, p: int, q: int) -> bool:
    return (seq[p - 1] - seq[q - 1]) % m == 0


def largest_i(seq: Sequence[int], m: int, start: Pair) -> Optional[Pair]:
    """
    Lexicographically largest conjugate position pair (i, i') <= start

    i' is decremented toward i + 1; then i is decremented and i' restarts at
    N - 1, position N being useless as i' since some j > i' must follow.
    """
    n = len(seq)
    i1, i2 = start
    while i1 > 0:
        while i2 > i1:
            if _conjugate(seq, m, i1, i2):
                return i1, i2
            i2 -= 1
        i1 -= 1
        i2 = n - 1
    return None


def largest_j(seq: Sequence[int], m: int, i_pair: Pair, start: Pair) -> Optional[Pair]:
    """
    Lexicographically largest (j, j') <= start with i' < j <= N,
    i + 1 <= j' <= i' and x_j, x_j' conjugate
    """
    i, i_prime = i_pair
    j1, j2 = start
    while j1 > i_prime:
        while j2 > i:
            if _conjugate(seq, m, j1, j2):
                return j1, j2
            j2 -= 1
        j1 -= 1
        j2 = i_prime
    return None


def smallest_j(seq: Sequence[int], m: int, i_pair: Pair, start: Pair) -> Optional[Pair]:
    """
    Lexicographically smallest (j, j') >= start, under the same constraints
    as largest_j
    """
    n = len(seq)
    i, i_prime = i_pair
    j1, j2 = start
    while j1 <= n:
        while j2 <= i_prime:
            if _conjugate(seq, m, j1, j2):
                return j1, j2
            j2 += 1
        j1 += 1
        j2 = i + 1
    return None


def _next_i(n: int, i_pair: Pair) -> Pair:
    i, i_prime = i_pair
    if i_prime > i + 1:
        return i, i_prime - 1
    return i - 1, n - 1


class HamiltonService:
    """
    Algorithm H: a Hamiltonian path through the cross-join graph C(N, d)

    From the current cycle the conjugate pairs (i, i') are scanned from the
    lexicographically largest down; for each, the join pairs (j, j') with
    i < j' <= i' < j are scanned in the order of the join rule. The first
    cross-join not yet emitted becomes the next cycle and the scan restarts.
    The run halts when a full scan finds nothing new.
    """

    def _first_j(self, rule: JoinRule, seq: Sequence[int], m: int, i_pair: Pair) -> Optional[Pair]:
        n = len(seq)
        i, i_prime = i_pair
        if rule == "largest":
            return largest_j(seq, m, i_pair, (n, i_prime))
        return smallest_j(seq, m, i_pair, (i_prime + 1, i + 1))

    def _next_j(self, rule: JoinRule, seq: Sequence[int], m: int, i_pair: Pair, j_pair: Pair) -> Optional[Pair]:
        i, i_prime = i_pair
        j, j_prime = j_pair
        if rule == "largest":
            start = (j, j_prime - 1) if j_prime > i + 1 else (j - 1, i_prime)
            return largest_j(seq, m, i_pair, start)
        start = (j, j_prime + 1) if j_prime < i_prime else (j + 1, i + 1)
        return smallest_j(seq, m, i_pair, start)

    def run_algorithm_h(self, seed: DeBruijnCycle, join_rule: JoinRule = "largest") -> HamiltonPathResult:
        """
        Run Algorithm H from a seed cycle

        Args:
            seed: First cycle of the path
            join_rule: "largest" tries the lexicographically largest (j, j')
                first, "smallest" the smallest

        Returns:
            The emitted cycles with the move between each consecutive pair

        Raises:
            UnsupportedOperationError: If d does not divide N
        """
        params = seed.params
        if not params.divides:
            raise UnsupportedOperationError(
                f"Algorithm H needs d | N; {params.d} does not divide {params.N}"
            )
        if join_rule not in ("largest", "smallest"):
            raise DomainError(f"join rule must be 'largest' or 'smallest', got '{join_rule}'")

        n, m = params.N, params.modulus
        seq = seed.vertices
        emitted: List[Tuple[int, ...]] = [seq]
        moves: List[CrossJoinMove] = []
        visited = {seq}
        exhausted = False

        while True:
            found = None
            had_candidate = False
            i_pair = largest_i(seq, m, (n - 2, n - 1))
            while i_pair is not None and found is None:
                j_pair = self._first_j(join_rule, seq, m, i_pair)
                while j_pair is not None:
                    had_candidate = True
                    i, i_prime = i_pair
                    j, j_prime = j_pair
                    candidate = apply_raw(seq, i, i_prime, j_prime, j)
                    if candidate not in visited:
                        found = (CrossJoinMove.from_scan(i, i_prime, j, j_prime), candidate)
                        break
                    j_pair = self._next_j(join_rule, seq, m, i_pair, j_pair)
                if found is None:
                    i_pair = largest_i(seq, m, _next_i(n, i_pair))
            if found is None:
                exhausted = not had_candidate
                break
            move, seq = found
            moves.append(move)
            emitted.append(seq)
            visited.add(seq)
            logger.debug(f"u_{len(emitted)} via {move.to_notation()}")

        cycles = [DeBruijnCycle.trusted(params, walk) for walk in emitted]
        closed = len(emitted) > 1 and emitted[0] in neighbor_walks(emitted[-1], m)
        logger.info(
            f"Algorithm H ({join_rule}) on {params.label()}: {len(cycles)} cycles, closed={closed}"
        )
        return HamiltonPathResult(
            params=params,
            join_rule=join_rule,
            cycles=cycles,
            moves=moves,
            closed=closed,
            exhausted=exhausted,
        )

    def check_result(self, result: HamiltonPathResult) -> None:
        """
        Check that the emitted cycles are distinct and that each recorded move
        turns a cycle into the next

        Raises:
            InvariantViolationError: On a repeated cycle or a move mismatch
        """
        walks = [cycle.vertices for cycle in result.cycles]
        if len(set(walks)) != len(walks):
            raise InvariantViolationError("Algorithm H emitted a cycle twice")
        if len(result.moves) != max(len(walks) - 1, 0):
            raise InvariantViolationError(
                f"{len(result.moves)} moves recorded for {len(walks)} cycles"
            )
        for k, move in enumerate(result.moves):
            try:
                produced = crossjoin_service.apply_move(result.cycles[k], move)
            except InvalidMoveError as e:
                raise InvariantViolationError(f"move {k + 1} does not apply: {e.detail}")
            if produced.vertices != walks[k + 1]:
                raise InvariantViolationError(
                    f"move {k + 1} ({move.to_notation()}) does not produce the next cycle"
                )

    def is_hamiltonian_path(self, result: HamiltonPathResult, params: DigraphParams,
                            budget: Optional[int] = None) -> bool:
        """
        Whether the result visits every cycle of G_B(N, d) exactly once with
        consecutive cycles cross-join adjacent
        """
        if result.params != params or not params.divides:
            return False
        limit = settings.enumeration_budget if budget is None else budget
        walks = [cycle.vertices for cycle in result.cycles]
        everything = set()
        for walk in cycle_service.iter_cycles(params):
            everything.add(walk)
            if len(everything) > limit:
                raise BudgetExceededError(limit)
        if len(walks) != len(everything) or set(walks) != everything:
            return False
        m = params.modulus
        return all(walks[k + 1] in neighbor_walks(walks[k], m) for k in range(len(walks) - 1))

    def find_cycle_seeds(self, params: DigraphParams, join_rule: JoinRule = "largest",
                         budget: Optional[int] = None, threads: int = 1,
                         first_only: bool = False) -> List[DeBruijnCycle]:
        """
        Seeds, in canonical order, whose Algorithm H path is a Hamiltonian cycle

        Args:
            params: Digraph parameters
            join_rule: Join rule used for every run
            budget: Maximum number of cycles
            threads: Worker processes running independent seeds
            first_only: Stop at the first successful seed

        Returns:
            The cycle-initiating seeds
        """
        if not params.divides:
            raise UnsupportedOperationError(
                f"Algorithm H needs d | N; {params.d} does not divide {params.N}"
            )
        seeds = cycle_service.all_cycles(params, budget=budget)
        jobs = [(seed, join_rule, len(seeds)) for seed in seeds]
        found: List[DeBruijnCycle] = []
        for seed, closes in zip(seeds, ordered_map(_seed_closes, jobs, threads)):
            if closes:
                found.append(seed)
                if first_only:
                    break
        logger.info(f"{len(found)} cycle-initiating seeds found in {params.label()} ({join_rule})")
        return found

    def find_cycle_seed(self, params: DigraphParams, join_rule: JoinRule = "largest",
                        budget: Optional[int] = None, threads: int = 1) -> Optional[DeBruijnCycle]:
        """
        The canonically first seed whose Algorithm H path closes into a
        Hamiltonian cycle, or None
        """
        seeds = self.find_cycle_seeds(params, join_rule, budget=budget, threads=threads, first_only=True)
        return seeds[0] if seeds else None


def _seed_closes(job: Tuple[DeBruijnCycle, JoinRule, int]) -> bool:
    seed, join_rule, total = job
    result = hamilton_service.run_algorithm_h(seed, join_rule)
    return result.closed and len(result.cycles) == total


# Create a singleton instance
hamilton_service = HamiltonService()
