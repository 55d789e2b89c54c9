from typing import List, Set
import logging

from app.models.digraph_models import DigraphParams, EdgeTable
from app.utils.errors import DomainError, UnsupportedOperationError
from app.utils.validators import check_vertex

logger = logging.getLogger(__name__)


class GraphService:
    """
    Successor, predecessor, conjugacy and companionship queries on G_B(N, d)
    """

    def successors(self, params: DigraphParams, x: int) -> List[int]:
        """
        Successors of a vertex in residue order

        Args:
            params: Digraph parameters
            x: Source vertex

        Returns:
            [d*x + r mod N for r = 0..d-1]
        """
        check_vertex(params.N, x)
        base = params.d * x
        return [(base + r) % params.N for r in range(params.d)]

    def predecessors(self, params: DigraphParams, y: int) -> Set[int]:
        """
        Predecessors of a vertex

        Uses the closed form {floor(y/d) + t*N/d} when d divides N and solves
        d*x = y - r (mod N) over all residues otherwise.

        Args:
            params: Digraph parameters
            y: Target vertex

        Returns:
            Set of exactly d vertices
        """
        check_vertex(params.N, y)
        if params.divides:
            m = params.modulus
            return {y // params.d + t * m for t in range(params.d)}
        return self._solve_predecessors(params, y)

    def brute_force_predecessors(self, params: DigraphParams, y: int) -> Set[int]:
        check_vertex(params.N, y)
        return {x for x in range(params.N) if y in self.successors(params, x)}

    def _solve_predecessors(self, params: DigraphParams, y: int) -> Set[int]:
        n, d = params.N, params.d
        found: Set[int] = set()
        for r in range(d):
            target = (y - r) % n
            found.update(x for x in range(n) if (d * x) % n == target)
        return found

    def is_edge(self, params: DigraphParams, x: int, y: int) -> bool:
        check_vertex(params.N, x)
        check_vertex(params.N, y)
        return y in self.successors(params, x)

    def are_conjugate(self, params: DigraphParams, x1: int, x2: int) -> bool:
        """
        Whether two distinct vertices share at least two successors

        Args:
            params: Digraph parameters
            x1: First vertex
            x2: Second vertex

        Returns:
            True if x1 and x2 are conjugate

        Raises:
            DomainError: If x1 == x2
        """
        check_vertex(params.N, x1)
        check_vertex(params.N, x2)
        if x1 == x2:
            raise DomainError(f"vertex {x1} is not its own conjugate")
        if params.divides:
            return (x1 - x2) % params.modulus == 0
        shared = set(self.successors(params, x1)) & set(self.successors(params, x2))
        return len(shared) >= 2

    def are_companion(self, params: DigraphParams, y1: int, y2: int) -> bool:
        """
        Whether two distinct vertices share at least two predecessors

        Raises:
            DomainError: If y1 == y2
        """
        check_vertex(params.N, y1)
        check_vertex(params.N, y2)
        if y1 == y2:
            raise DomainError(f"vertex {y1} is not its own companion")
        shared = self.predecessors(params, y1) & self.predecessors(params, y2)
        return len(shared) >= 2

    def edge_table(self, params: DigraphParams) -> EdgeTable:
        rows = [self.successors(params, x) for x in range(params.N)]
        return EdgeTable(params=params, rows=rows)

    def conjugate_classes(self, params: DigraphParams) -> List[List[int]]:
        """
        Partition V into conjugacy classes {v : v = c mod N/d}

        Raises:
            UnsupportedOperationError: If d does not divide N, since conjugacy
                is not transitive then
        """
        if not params.divides:
            raise UnsupportedOperationError(
                f"conjugacy is not an equivalence relation on {params.label()}: "
                f"{params.d} does not divide {params.N}"
            )
        m = params.modulus
        return [[c + t * m for t in range(params.d)] for c in range(m)]


# Create a singleton instance
graph_service = GraphService()
