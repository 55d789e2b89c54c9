from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import List, Tuple
import re

import networkx as nx

from app.models.cycle_models import DeBruijnCycle
from app.models.digraph_models import DigraphParams

_NOTATION = re.compile(r"^\s*cross=(\d+),(\d+);join=(\d+),(\d+)\s*$")


class CrossJoinMove(BaseModel):
    """
    One cross-join operation on a specific aligned cycle, by 1-based position

    The cross pair (a, b) is swapped first, splitting the cycle into an outer
    part (positions 1..a, b+1..N) and an inner part (a+1..b); the join pair
    (p_in, p_out) then joins them, p_in lying in the inner part.
    """
    model_config = ConfigDict(frozen=True)

    cross: Tuple[int, int] = Field(..., description="Cross pair positions (a, b), a < b")
    join: Tuple[int, int] = Field(..., description="Join pair positions (p_in, p_out)")

    @model_validator(mode="after")
    def check_shape(self) -> "CrossJoinMove":
        a, b = self.cross
        p_in, p_out = self.join
        if not 1 <= a < b:
            raise ValueError(f"cross pair must satisfy 1 <= a < b, got ({a}, {b})")
        if not a + 1 <= p_in <= b:
            raise ValueError(f"join position p_in={p_in} must lie in [{a + 1}, {b}]")
        if p_out < 1 or a + 1 <= p_out <= b:
            raise ValueError(f"join position p_out={p_out} must lie outside [{a + 1}, {b}]")
        if (p_in, p_out) == (b, a):
            raise ValueError("cross and join pairs must differ")
        return self

    @classmethod
    def from_scan(cls, i: int, i_prime: int, j: int, j_prime: int) -> "CrossJoinMove":
        """Build the move for scan positions i < j' <= i' < j."""
        return cls(cross=(i, i_prime), join=(j_prime, j))

    @classmethod
    def parse(cls, text: str) -> "CrossJoinMove":
        match = _NOTATION.match(text)
        if not match:
            raise ValueError(f"expected 'cross=a,b;join=p_in,p_out', got '{text}'")
        a, b, p_in, p_out = (int(g) for g in match.groups())
        return cls(cross=(a, b), join=(p_in, p_out))

    @property
    def positions(self) -> Tuple[int, int, int, int]:
        return (*self.cross, *self.join)

    def to_notation(self) -> str:
        a, b = self.cross
        p_in, p_out = self.join
        return f"cross={a},{b};join={p_in},{p_out}"


class CrossJoinGraph(BaseModel):
    """
    The cross-join graph C(N, d): all de Bruijn cycles, adjacent when one
    cross-join apart
    """
    params: DigraphParams = Field(..., description="Digraph parameters")
    nodes: List[DeBruijnCycle] = Field(..., description="All cycles in canonical enumeration order")
    adjacency: List[List[int]] = Field(..., description="Sorted neighbor indices per node")

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def degrees(self) -> List[int]:
        return [len(row) for row in self.adjacency]

    def edges(self) -> List[Tuple[int, int]]:
        return [(s, t) for s, row in enumerate(self.adjacency) for t in row if s < t]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for index, cycle in enumerate(self.nodes):
            graph.add_node(index, cycle=cycle.to_text())
        graph.add_edges_from(self.edges())
        return graph
