from typing import List, Sequence, Tuple
import logging

from app.utils.errors import CycleValidationError, DomainError, VertexRangeError

logger = logging.getLogger(__name__)


def check_vertex(n: int, x: int) -> int:
    """
    Validate that a vertex lies in [0, n-1]

    Args:
        n: Number of vertices
        x: Vertex to check

    Returns:
        The vertex, unchanged

    Raises:
        VertexRangeError: If the vertex is out of range
    """
    if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
        raise VertexRangeError(x, n)
    return x


def edge_holds(n: int, d: int, x: int, y: int) -> bool:
    """True iff y = d*x + r mod n for some residue r in [0, d-1]."""
    return (y - d * x) % n < d


def align_vertices(raw: Sequence[int]) -> Tuple[int, ...]:
    """
    Rotate a cyclic vertex sequence so that it starts at 0

    Args:
        raw: Cyclic sequence of vertices

    Returns:
        The rotation beginning with 0

    Raises:
        CycleValidationError: If 0 is absent or repeated
    """
    zeros = [t for t, x in enumerate(raw) if x == 0]
    if not zeros:
        raise CycleValidationError("vertex 0 is absent from the sequence")
    if len(zeros) > 1:
        raise CycleValidationError(
            f"vertex 0 occurs {len(zeros)} times", position=zeros[1] + 1
        )
    start = zeros[0]
    return tuple(raw[start:]) + tuple(raw[:start])


def check_cycle_vertices(n: int, d: int, vertices: Sequence[int]) -> None:
    """
    Check the de Bruijn cycle invariants of an aligned vertex sequence

    Args:
        n: Number of vertices
        d: Out-degree
        vertices: Aligned vertex sequence x_1..x_N

    Raises:
        CycleValidationError: On a wrong length, a missing/duplicated vertex,
            a misalignment, or a broken edge (with its 1-based position)
    """
    if len(vertices) != n:
        raise CycleValidationError(f"expected {n} vertices, got {len(vertices)}")
    seen = [False] * n
    for t, x in enumerate(vertices, start=1):
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
            raise CycleValidationError(f"vertex {x} at position {t} is out of range [0, {n - 1}]", position=t)
        if seen[x]:
            raise CycleValidationError(f"vertex {x} is duplicated at position {t}", position=t)
        seen[x] = True
    if vertices[0] != 0:
        raise CycleValidationError("cycle is not aligned: first vertex must be 0", position=1)
    for t in range(n):
        x, y = vertices[t], vertices[(t + 1) % n]
        if not edge_holds(n, d, x, y):
            target = (t + 1) % n + 1
            raise CycleValidationError(
                f"broken edge at position {target}: {x} -> {y} is not an edge", position=target
            )


def parse_int_list(text: str) -> List[int]:
    """
    Parse a comma-separated list of integers

    Args:
        text: Text such as "0,1,3,7"

    Returns:
        List of integers

    Raises:
        DomainError: If any entry is not an integer
    """
    items = [item.strip() for item in text.replace(" ", "").split(",") if item.strip()]
    try:
        return [int(item) for item in items]
    except ValueError:
        raise DomainError(f"expected a comma-separated list of integers, got '{text}'")


def parse_pair(text: str) -> Tuple[int, int]:
    values = parse_int_list(text)
    if len(values) != 2:
        raise DomainError(f"expected exactly two integers, got '{text}'")
    return values[0], values[1]
