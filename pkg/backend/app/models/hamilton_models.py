from pydantic import BaseModel, Field
from typing import List, Literal, Optional, Tuple

from app.models.crossjoin_models import CrossJoinMove
from app.models.cycle_models import DeBruijnCycle
from app.models.digraph_models import DigraphParams

JoinRule = Literal["largest", "smallest"]


class HamiltonPathResult(BaseModel):
    """
    Output of Algorithm H: the cycles u_1..u_K in emission order
    """
    params: DigraphParams = Field(..., description="Digraph parameters")
    join_rule: JoinRule = Field("largest", description="Which (j, j') each (i, i') tries first")
    cycles: List[DeBruijnCycle] = Field(..., description="Emitted cycles, seed first")
    moves: List[CrossJoinMove] = Field(
        default_factory=list,
        description="moves[k] turns cycles[k] into cycles[k + 1]",
    )
    closed: bool = Field(False, description="Whether the last cycle is adjacent to the first")
    exhausted: bool = Field(
        False,
        description="Whether the run halted on a cycle with no cross-join candidate at all",
    )

    def __len__(self) -> int:
        return len(self.cycles)

    def incoming_moves(self) -> List[Optional[CrossJoinMove]]:
        return [None] + list(self.moves)

    def annotated_rows(self) -> List[Tuple[DeBruijnCycle, Optional[CrossJoinMove]]]:
        """Each cycle with the move leaving it (None for the last)."""
        outgoing: List[Optional[CrossJoinMove]] = list(self.moves) + [None]
        return list(zip(self.cycles, outgoing))
