from math import factorial, lgamma, log, log10
from typing import Callable, Iterator, List, Optional, Sequence, Tuple
import logging

from app.config.settings import settings
from app.models.cycle_models import CycleCount, DeBruijnCycle
from app.models.digraph_models import DigraphParams
from app.utils.errors import BudgetExceededError, DomainError
from app.utils.parallel import ordered_map
from app.utils.validators import align_vertices, check_cycle_vertices, edge_holds

logger = logging.getLogger(__name__)

Walk = Tuple[int, ...]


def _walks(n: int, d: int, prefix: Sequence[int], length: int, close: bool,
           prefer_largest: bool = False) -> Iterator[Walk]:
    """
    Depth-first search over simple paths extending a prefix

    Successors are tried in ascending residue order (descending when
    prefer_largest), so the yield order is canonical.

    Args:
        n: Number of vertices
        d: Out-degree
        prefix: Simple path to extend
        length: Length of the emitted paths
        close: Only emit paths whose last vertex has an edge back to prefix[0]
        prefer_largest: Try larger residues first

    Yields:
        Paths of the requested length, as tuples
    """
    residues = range(d - 1, -1, -1) if prefer_largest else range(d)
    path = list(prefix)
    visited = [False] * n
    for x in path:
        visited[x] = True

    def emit_ok() -> bool:
        return not close or edge_holds(n, d, path[-1], path[0])

    if len(path) >= length:
        if emit_ok():
            yield tuple(path)
        return

    def candidates(x: int) -> Iterator[int]:
        base = d * x
        return ((base + r) % n for r in residues)

    stack = [candidates(path[-1])]
    while stack:
        advanced = False
        for y in stack[-1]:
            if visited[y]:
                continue
            path.append(y)
            if len(path) == length:
                if emit_ok():
                    yield tuple(path)
                path.pop()
                continue
            visited[y] = True
            stack.append(candidates(y))
            advanced = True
            break
        if not advanced:
            stack.pop()
            if len(path) > len(prefix):
                visited[path.pop()] = False


def _cycles_under_prefix(job: Tuple[int, int, Walk]) -> List[Walk]:
    n, d, prefix = job
    return list(_walks(n, d, prefix, n, close=True))


def _check_count_size(log10_value: float) -> None:
    """Refuse a closed-form count whose decimal form exceeds the configured digits."""
    cap = settings.count_max_digits
    if log10_value + 1 > cap:
        raise BudgetExceededError(cap, "digits")


class CycleService:
    """
    Validation, alignment, generation, enumeration and counting of de Bruijn
    cycles
    """

    def align(self, raw: Sequence[int]) -> Walk:
        """
        Rotate a cyclic sequence so that it starts at vertex 0

        Raises:
            CycleValidationError: If 0 is absent or repeated
        """
        return align_vertices(list(raw))

    def validate(self, params: DigraphParams, raw: Sequence[int]) -> DeBruijnCycle:
        """
        Align a raw vertex sequence and check that it is a de Bruijn cycle

        Args:
            params: Digraph parameters
            raw: Cyclic vertex sequence, any rotation

        Returns:
            The aligned cycle

        Raises:
            CycleValidationError: On a missing/duplicated vertex, an absent 0,
                or a broken edge (reported with its position)
        """
        aligned = self.align(raw)
        check_cycle_vertices(params.N, params.d, aligned)
        return DeBruijnCycle.trusted(params, aligned)

    def distance(self, u: DeBruijnCycle, v: DeBruijnCycle) -> int:
        """
        D(u, v) = N - L, where L is the length of the longest common prefix

        Raises:
            DomainError: If the cycles belong to different digraphs
        """
        if u.params != v.params:
            raise DomainError(
                f"cannot compare cycles of {u.params.label()} and {v.params.label()}"
            )
        return u.N - common_prefix_length(u.vertices, v.vertices)

    def iter_cycles(self, params: DigraphParams, threads: int = 1,
                    partition_depth: Optional[int] = None) -> Iterator[Walk]:
        """
        Stream every de Bruijn cycle as an aligned vertex tuple, in canonical order

        With threads > 1 the search tree is cut at a fixed depth and the
        subtrees are searched in worker processes; results are merged in
        prefix order, so the stream is identical to the sequential one.
        """
        n, d = params.N, params.d
        if threads <= 1:
            yield from _walks(n, d, (0,), n, close=True)
            return

        depth = min(partition_depth or settings.partition_depth, n)
        prefixes = list(_walks(n, d, (0,), depth, close=(depth == n)))
        logger.debug(f"Partitioned {params.label()} into {len(prefixes)} subtrees at depth {depth}")
        jobs = [(n, d, prefix) for prefix in prefixes]
        for chunk in ordered_map(_cycles_under_prefix, jobs, threads):
            yield from chunk

    def enumerate_cycles(self, params: DigraphParams,
                         visitor: Optional[Callable[[DeBruijnCycle], None]] = None,
                         budget: Optional[int] = None,
                         threads: int = 1) -> Iterator[DeBruijnCycle]:
        """
        Stream all de Bruijn cycles of G_B(N, d)

        Backtracking search from vertex 0, extending by unvisited successors in
        ascending residue order; every Hamiltonian cycle is emitted exactly once.

        Args:
            params: Digraph parameters
            visitor: Optional callback invoked on each cycle as it is emitted
            budget: Maximum number of cycles before BudgetExceededError
            threads: Worker processes for the search

        Yields:
            Aligned cycles in canonical order
        """
        count = 0
        for vertices in self.iter_cycles(params, threads=threads):
            count += 1
            if budget is not None and count > budget:
                raise BudgetExceededError(budget)
            cycle = DeBruijnCycle.trusted(params, vertices)
            if visitor is not None:
                visitor(cycle)
            yield cycle
        logger.info(f"Enumerated {count} de Bruijn cycles of {params.label()}")

    def all_cycles(self, params: DigraphParams, budget: Optional[int] = None,
                   threads: int = 1) -> List[DeBruijnCycle]:
        limit = settings.enumeration_budget if budget is None else budget
        return list(self.enumerate_cycles(params, budget=limit, threads=threads))

    def count_cycles(self, params: DigraphParams, budget: Optional[int] = None,
                     threads: int = 1) -> int:
        count = 0
        for _ in self.iter_cycles(params, threads=threads):
            count += 1
            if budget is not None and count > budget:
                raise BudgetExceededError(budget)
        return count

    def count_formula(self, d: int, k: int) -> CycleCount:
        """
        Number of d-ary de Bruijn cycles of order k, (d!)^(d^(k-1)) / d^k

        Args:
            d: Alphabet size, at least 2
            k: Order, at least 1

        Returns:
            Exact count

        Raises:
            DomainError: If d < 2 or k < 1
            BudgetExceededError: If the count has more digits than settings.count_max_digits
        """
        if d < 2 or k < 1:
            raise DomainError(f"count formula needs d >= 2 and k >= 1, got d={d}, k={k}")
        if log10(d) > 300 or k - 1 > 18 / log10(d):
            raise BudgetExceededError(settings.count_max_digits, "digits")
        exponent = d ** (k - 1)
        _check_count_size(exponent * lgamma(d + 1) / log(10) - k * log10(d))
        return CycleCount(value=factorial(d) ** exponent // d ** k)

    def chang_count(self, k: int) -> CycleCount:
        """
        Cross-join pairs of a maximal-period binary LFSR of order k,
        (2^(k-1) - 1)(2^(k-1) - 2) / 6
        """
        if k < 2:
            raise DomainError(f"Chang count needs k >= 2, got k={k}")
        if k > 10 ** 9:
            raise BudgetExceededError(settings.count_max_digits, "digits")
        _check_count_size(2 * (k - 1) * log10(2))
        half = 2 ** (k - 1)
        return CycleCount(value=(half - 1) * (half - 2) // 6)

    def is_de_bruijn_power(self, params: DigraphParams) -> Optional[int]:
        """Return k when N = d^k, else None."""
        k, power = 1, params.d
        while power < params.N:
            power *= params.d
            k += 1
        return k if power == params.N else None

    def greedy_generate(self, params: DigraphParams, preference: str = "largest") -> Optional[DeBruijnCycle]:
        """
        First cycle found by a backtracking search preferring one residue end

        With preference="largest" and N = 2^k this is the prefer-one sequence.

        Args:
            params: Digraph parameters
            preference: "largest" or "smallest" residue first

        Returns:
            The cycle, or None when G_B(N, d) has no Hamiltonian cycle
        """
        if preference not in ("largest", "smallest"):
            raise DomainError(f"preference must be 'largest' or 'smallest', got '{preference}'")
        walks = _walks(params.N, params.d, (0,), params.N, close=True,
                       prefer_largest=(preference == "largest"))
        first = next(walks, None)
        if first is None:
            logger.info(f"No Hamiltonian cycle exists in {params.label()}")
            return None
        return DeBruijnCycle.trusted(params, first)


def common_prefix_length(u: Sequence[int], v: Sequence[int]) -> int:
    length = 0
    for x, y in zip(u, v):
        if x != y:
            break
        length += 1
    return length


# Create a singleton instance
cycle_service = CycleService()
