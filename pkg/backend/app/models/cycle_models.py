from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import Sequence, Tuple

from app.models.digraph_models import DigraphParams
from app.utils.validators import check_cycle_vertices


class DeBruijnCycle(BaseModel):
    """
    An aligned Hamiltonian cycle x_1=0, x_2, ..., x_N of G_B(N, d)

    Equality and hashing use the aligned vertex sequence, so cycles can key
    sets and dictionaries directly.
    """
    model_config = ConfigDict(frozen=True)

    params: DigraphParams = Field(..., description="Digraph the cycle lives in")
    vertices: Tuple[int, ...] = Field(..., description="Aligned vertex sequence starting at 0")

    @model_validator(mode="after")
    def check_invariants(self) -> "DeBruijnCycle":
        check_cycle_vertices(self.params.N, self.params.d, self.vertices)
        return self

    @classmethod
    def trusted(cls, params: DigraphParams, vertices: Sequence[int]) -> "DeBruijnCycle":
        """Build a cycle already known to be valid, skipping the invariant checks."""
        return cls.model_construct(params=params, vertices=tuple(vertices))

    @property
    def N(self) -> int:
        return self.params.N

    def __len__(self) -> int:
        return len(self.vertices)

    def position_of(self, vertex: int) -> int:
        """1-based position of a vertex on the cycle."""
        return self.vertices.index(vertex) + 1

    def at(self, position: int) -> int:
        """Vertex at a 1-based position."""
        return self.vertices[position - 1]

    def to_text(self) -> str:
        return ",".join(str(x) for x in self.vertices)


class CycleCount(BaseModel):
    """
    Exact, arbitrary-precision count of de Bruijn cycles
    """
    value: int = Field(..., ge=0, description="Exact count")

    def __int__(self) -> int:
        return self.value
