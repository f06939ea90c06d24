"""Potential analysis for the length-5 disjoint rule.

The potential of a cross is the number of further lines that can still cover
it: 4 minus the number of placed lines through it.  Under the 5D rule every
move adds one cross worth 4 and covers five crosses each by a new line, so
the board total drops by exactly 1 per move from its initial 144.  Bounding
the total from below at (or near) the end of the game bounds the score from
above; ``potential_bound`` evaluates that argument and ``PUBLISHED_BOUNDS``
lists the four parameter triples with published consequences (141, 138, 137,
136).

The per-trace monitors (``check_terminal_lemma``, ``check_pre_move_floor``)
test the argument's ingredient facts on concrete games.  They are gated to
5D: the same formula evaluates on 5T boards, but none of the invariants are
claimed there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import Board
from .geometry import Point


@dataclass(frozen=True)
class PotentialReport:
    """Per-cross and total potential of one board snapshot.

    ``recent`` holds the potentials of the history's placed crosses in move
    order, so ``last_k_sum(3)`` is the quantity the terminal lemma bounds.
    """

    per_cross: dict[Point, int]
    total: int
    recent: tuple[int, ...]

    def last_k_sum(self, k: int) -> int:
        if k < 0 or k > len(self.recent):
            raise ValueError(f"k={k} out of range for a {len(self.recent)}-move history")
        return sum(self.recent[len(self.recent) - k :])


@dataclass(frozen=True)
class BoundDerivation:
    """One potential-argument instantiation: bound = p0 - terminal_floor + lookback."""

    initial_potential: int
    terminal_floor: int
    lookback: int

    @property
    def bound(self) -> int:
        return self.initial_potential - self.terminal_floor + self.lookback


def potential_report(board: Board) -> PotentialReport:
    """Potentials of every cross plus the history crosses' values.

    Rule-agnostic computation; the 144 - N total identity holds only for 5D.
    """
    per_cross = {c: 4 - board.cover_count.get(c, 0) for c in board.crosses}
    recent = tuple(per_cross[m.cross] for m in board.moves)
    return PotentialReport(per_cross, sum(per_cross.values()), recent)


def potential_bound(p0: int, terminal_floor: int, lookback: int) -> int:
    """Score bound from: total potential is p0 - N, and it is at least
    ``terminal_floor`` already ``lookback`` moves before the game ends."""
    if p0 < 0 or terminal_floor < 0 or lookback < 0:
        raise ValueError("potential_bound arguments must be nonnegative")
    return p0 - terminal_floor + lookback


#: The four published potential-argument instantiations for 5D, strongest last.
PUBLISHED_BOUNDS: tuple[BoundDerivation, ...] = (
    BoundDerivation(144, 4, 1),
    BoundDerivation(144, 6, 0),
    BoundDerivation(144, 7, 0),
    BoundDerivation(144, 9, 1),
)


def check_terminal_lemma(board: Board) -> tuple[bool, tuple[int, int, int]]:
    """On a finished 5D game, the last three placed crosses keep total
    potential at least 7.

    Returns the check plus the three potentials (in move order) as witness.
    A False result on an engine-generated game indicates an engine bug; the
    only way to see False is a board built with legality checks bypassed.
    """
    _require_5d(board)
    if board.has_legal_moves():
        raise ValueError("terminal lemma applies to finished games only")
    if len(board.moves) < 3:
        raise ValueError("terminal lemma needs a history of at least 3 moves")
    report = potential_report(board)
    witness = tuple(report.recent[-3:])
    return (sum(witness) >= 7, witness)  # type: ignore[return-value]


def check_pre_move_floor(board: Board) -> bool:
    """Any 5D board that still has a legal move has total potential >= 4.

    Vacuously true on finished games.
    """
    _require_5d(board)
    if not board.has_legal_moves():
        return True
    return potential_report(board).total >= 4


def _require_5d(board: Board) -> None:
    if board.variant.alpha != 5 or board.variant.touching_allowed:
        raise ValueError(f"potential monitors are defined for 5D, not {board.variant.name}")
