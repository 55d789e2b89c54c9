from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import List


class DigraphParams(BaseModel):
    """
    The pair (N, d) defining the generalized de Bruijn digraph G_B(N, d)
    """
    model_config = ConfigDict(frozen=True)

    N: int = Field(..., description="Number of vertices")
    d: int = Field(..., description="Out-degree, equal to the alphabet size when N = d^k")

    @model_validator(mode="after")
    def check_bounds(self) -> "DigraphParams":
        if self.d < 2:
            raise ValueError(f"d must be at least 2, got d={self.d}")
        if self.N < self.d:
            raise ValueError(f"N must be at least d, got N={self.N}, d={self.d}")
        return self

    @property
    def divides(self) -> bool:
        """Whether d divides N; derived on every access."""
        return self.N % self.d == 0

    @property
    def modulus(self) -> int:
        """N/d, the conjugacy modulus when d divides N."""
        return self.N // self.d

    def label(self) -> str:
        return f"G_B({self.N},{self.d})"


class EdgeTable(BaseModel):
    """
    All N adjacency rows of G_B(N, d), row x listing successors in residue order
    """
    params: DigraphParams = Field(..., description="Digraph parameters")
    rows: List[List[int]] = Field(..., description="Successor lists indexed by vertex")
