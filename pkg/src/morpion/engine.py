"""Move legality, move generation, apply/undo, and replay.

A move places one cross on an empty point and draws a line of ``alpha``
consecutive lattice points through it; the other ``alpha - 1`` points must
already bear crosses.  Same-direction lines must be disjoint under the D rule
and may share at most one point under the T rule.

The board keeps an incremental index of legal moves.  A segment is a legal
line exactly when it covers one empty point and conflicts with no placed
same-direction line, so applying a move can only

* invalidate segments whose empty point was just filled,
* invalidate segments now conflicting with the drawn line (same direction,
  same lattice line, nearby offset), and
* validate segments covering the new cross that previously had two empty
  points.

All three groups are local to the move, which keeps apply/undo cheap enough
for playout-heavy search.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .geometry import (
    DIRECTIONS,
    OVERLAPPING,
    TOUCHING,
    Direction,
    Point,
    Segment,
    Variant,
    initial_crosses,
    point_at,
    segment_relation,
    segment_through,
)


class IllegalMoveError(ValueError):
    """Raised when an illegal move is applied or replayed.

    ``reason`` names the first violated legality clause; ``index`` is the
    1-based move number when raised during replay.
    """

    def __init__(self, reason: str, move: "Move", index: int | None = None):
        self.reason = reason
        self.move = move
        self.index = index
        where = f"move {index}: " if index is not None else ""
        super().__init__(f"{where}illegal move {move}: {reason}")


class Move(NamedTuple):
    """Cross placement plus the line drawn through it.

    The line is ``(direction, anchor)`` with the variant's length implied.
    Field order gives the canonical sort: (cross, direction, anchor).
    """

    cross: Point
    direction: Direction
    anchor: Point

    def segment(self, alpha: int) -> Segment:
        return Segment(self.direction, self.anchor, alpha)


@dataclass
class GameRecord:
    """A full game: variant, move sequence, free-form annotations."""

    variant: Variant
    moves: list[Move] = field(default_factory=list)
    metadata: dict[str, str] = field(default_factory=dict)


class Board:
    """Mutable game state with an incrementally maintained legal-move index.

    Single-writer: never mutate one board from two threads.  ``copy`` is the
    supported way to fan out.
    """

    __slots__ = (
        "variant",
        "initial",
        "crosses",
        "moves",
        "lines",
        "cover_count",
        "_line_offsets",
        "_legal",
        "_trail",
    )

    def __init__(self, variant: Variant, crosses: Iterable[Point] | None = None):
        self.variant = variant
        if crosses is None:
            self.initial = initial_crosses(variant.alpha)
        else:
            self.initial = frozenset(crosses)
        self.crosses: set[Point] = set(self.initial)
        self.moves: list[Move] = []
        self.lines: list[Segment] = []
        # lines covering each point; absent means zero
        self.cover_count: dict[Point, int] = {}
        # (direction, line_key) -> sorted anchor offsets of placed lines
        self._line_offsets: dict[tuple[Direction, int], list[int]] = {}
        # legal segment -> its unique empty point
        self._legal: dict[Segment, Point] = {}
        self._trail: list[tuple] = []
        self._rebuild_legal()

    @classmethod
    def with_lines(
        cls,
        variant: Variant,
        crosses: Iterable[Point],
        segments: Iterable[Segment],
    ) -> "Board":
        """Synthetic board with pre-placed lines and no move history.

        Used for analysis of positions that are not claimed to be reachable.
        Each segment must cover only crosses and respect the variant's
        same-direction rule against the segments before it.
        """
        board = cls(variant, crosses)
        for seg in segments:
            if seg.length != variant.alpha:
                raise ValueError(f"segment length {seg.length} != alpha {variant.alpha}")
            for p in seg.points():
                if p not in board.crosses:
                    raise ValueError(f"segment {seg} covers empty point {p}")
            if board._conflicts(seg.direction, seg.key, seg.offset):
                raise ValueError(f"segment {seg} conflicts with an earlier same-direction line")
            board._register_line(seg)
            board.lines.append(seg)
        board._rebuild_legal()
        return board

    @classmethod
    def force(
        cls,
        variant: Variant,
        moves: Iterable[Move],
        crosses: Iterable[Point] = (),
    ) -> "Board":
        """Build a board by playing ``moves`` with every legality check bypassed.

        For constructing rule-violating positions to exercise the analysis
        monitors; nothing reachable through :meth:`apply` needs this.  The
        resulting board has history but no undo trail.
        """
        board = cls(variant, crosses)
        alpha = variant.alpha
        for move in moves:
            board.crosses.add(move.cross)
        for move in moves:
            seg = move.segment(alpha)
            board._register_line(seg)
            board.lines.append(seg)
            board.moves.append(move)
        board._rebuild_legal()
        return board

    # -- queries ---------------------------------------------------------

    @property
    def score(self) -> int:
        return len(self.moves)

    def legal_moves(self) -> list[Move]:
        """All legal moves, canonically sorted by (cross, direction, anchor)."""
        moves = [
            Move(empty, seg.direction, seg.anchor) for seg, empty in self._legal.items()
        ]
        moves.sort()
        return moves

    @property
    def legal_count(self) -> int:
        return len(self._legal)

    def has_legal_moves(self) -> bool:
        return bool(self._legal)

    def is_legal(self, move: Move) -> tuple[bool, str | None]:
        """Legality plus the first violated clause (None when legal)."""
        reason = self.legality_failure(move)
        return (reason is None, reason)

    def legality_failure(self, move: Move) -> str | None:
        seg = move.segment(self.variant.alpha)
        if self._legal.get(seg) == move.cross:
            return None
        if move.cross in self.crosses:
            return f"(a): point {move.cross[0]},{move.cross[1]} already bears a cross"
        pts = seg.points()
        if move.cross not in pts:
            return "(b): line does not cover the placed cross"
        for p in pts:
            if p != move.cross and p not in self.crosses:
                return f"(c): point {p[0]},{p[1]} empty"
        if self._conflicts(seg.direction, seg.key, seg.offset):
            kind = "touches" if not self.variant.touching_allowed else "overlaps"
            return f"(d): line {kind} an existing same-direction line"
        return None

    def potential(self, point: Point) -> int:
        """Lines that could still cover the cross at ``point``: 4 minus cover count."""
        return 4 - self.cover_count.get(point, 0)

    def state_key(self) -> tuple[frozenset, frozenset]:
        """Hashable identity of the position (move order forgotten)."""
        return (
            frozenset(m.cross for m in self.moves),
            frozenset((m.direction, m.anchor) for m in self.moves),
        )

    # -- mutation --------------------------------------------------------

    def apply(self, move: Move) -> "Board":
        alpha = self.variant.alpha
        seg = move.segment(alpha)
        if self._legal.get(seg) != move.cross:
            reason = self.legality_failure(move)
            raise IllegalMoveError(reason or "not currently legal", move)

        removed: list[tuple[Segment, Point]] = []
        added: list[Segment] = []

        self.crosses.add(move.cross)

        # segments whose single empty point was just filled
        for d in DIRECTIONS:
            for shift in range(alpha):
                cand = segment_through(d, move.cross, shift, alpha)
                if self._legal.get(cand) == move.cross:
                    del self._legal[cand]
                    removed.append((cand, move.cross))

        # segments conflicting with the drawn line
        window = alpha - 2 if self.variant.touching_allowed else alpha - 1
        d, key, off = seg.direction, seg.key, seg.offset
        for o in range(off - window, off + window + 1):
            cand = Segment(d, point_at(d, key, o), alpha)
            empty = self._legal.pop(cand, None)
            if empty is not None:
                removed.append((cand, empty))

        self._register_line(seg)
        self.lines.append(seg)
        self.moves.append(move)

        # segments covering the new cross that may have become legal
        crosses = self.crosses
        for d in DIRECTIONS:
            for shift in range(alpha):
                cand = segment_through(d, move.cross, shift, alpha)
                empty = None
                for p in cand.points():
                    if p not in crosses:
                        if empty is not None:
                            empty = None
                            break
                        empty = p
                else:
                    if empty is not None and not self._conflicts(d, cand.key, cand.offset):
                        self._legal[cand] = empty
                        added.append(cand)

        self._trail.append((move, seg, removed, added))
        return self

    def undo(self) -> "Board":
        if not self._trail:
            raise IndexError("undo on a board with no moves")
        move, seg, removed, added = self._trail.pop()
        for cand in added:
            del self._legal[cand]
        self._unregister_line(seg)
        self.lines.pop()
        self.moves.pop()
        self.crosses.discard(move.cross)
        for cand, empty in removed:
            self._legal[cand] = empty
        return self

    def copy(self) -> "Board":
        clone = object.__new__(Board)
        clone.variant = self.variant
        clone.initial = self.initial
        clone.crosses = set(self.crosses)
        clone.moves = list(self.moves)
        clone.lines = list(self.lines)
        clone.cover_count = dict(self.cover_count)
        clone._line_offsets = {k: list(v) for k, v in self._line_offsets.items()}
        clone._legal = dict(self._legal)
        clone._trail = list(self._trail)
        return clone

    # -- internals -------------------------------------------------------

    def _conflicts(self, direction: Direction, key: int, offset: int) -> bool:
        offs = self._line_offsets.get((direction, key))
        if not offs:
            return False
        window = self.variant.alpha - 2 if self.variant.touching_allowed else self.variant.alpha - 1
        i = bisect.bisect_left(offs, offset)
        if i < len(offs) and offs[i] - offset <= window:
            return True
        if i > 0 and offset - offs[i - 1] <= window:
            return True
        return False

    def _register_line(self, seg: Segment) -> None:
        offs = self._line_offsets.setdefault((seg.direction, seg.key), [])
        bisect.insort(offs, seg.offset)
        cover = self.cover_count
        for p in seg.points():
            cover[p] = cover.get(p, 0) + 1

    def _unregister_line(self, seg: Segment) -> None:
        key = (seg.direction, seg.key)
        offs = self._line_offsets[key]
        offs.remove(seg.offset)
        if not offs:
            del self._line_offsets[key]
        cover = self.cover_count
        for p in seg.points():
            n = cover[p] - 1
            if n:
                cover[p] = n
            else:
                del cover[p]

    def _rebuild_legal(self) -> None:
        alpha = self.variant.alpha
        self._legal.clear()
        seen: set[Segment] = set()
        for cross in self.crosses:
            for d in DIRECTIONS:
                for shift in range(alpha):
                    cand = segment_through(d, cross, shift, alpha)
                    if cand in seen:
                        continue
                    seen.add(cand)
                    empty = None
                    ok = True
                    for p in cand.points():
                        if p not in self.crosses:
                            if empty is not None:
                                ok = False
                                break
                            empty = p
                    if ok and empty is not None and not self._conflicts(d, cand.key, cand.offset):
                        self._legal[cand] = empty

    def check_invariants(self) -> None:
        """Full consistency audit; raises AssertionError on any mismatch.

        O(board size); meant for tests, not search loops.
        """
        alpha = self.variant.alpha
        assert self.crosses == set(self.initial) | {m.cross for m in self.moves}, (
            "crosses must be the initial set plus one per move"
        )
        assert len(self.lines) >= len(self.moves), "one line per move"
        if self.moves:
            played = self.lines[-len(self.moves) :]
            assert played == [m.segment(alpha) for m in self.moves], (
                "line list out of step with move history"
            )
        cover: dict[Point, int] = {}
        for seg in self.lines:
            assert seg.length == alpha, f"line {seg} has wrong length"
            for p in seg.points():
                assert p in self.crosses, f"line {seg} covers empty point {p}"
                cover[p] = cover.get(p, 0) + 1
        assert cover == self.cover_count, "cover counts out of sync"
        limit = 1 if self.variant.touching_allowed else 0
        for i, a in enumerate(self.lines):
            for b in self.lines[i + 1 :]:
                rel = segment_relation(a, b)
                assert rel != OVERLAPPING, f"lines {a} and {b} overlap"
                if limit == 0:
                    assert rel != TOUCHING, f"lines {a} and {b} touch under the D rule"
        stored = dict(self._legal)
        self._rebuild_legal()
        fresh = dict(self._legal)
        self._legal = stored
        assert stored == fresh, "incremental legal index diverged from rebuild"


def initial_board(variant: Variant) -> Board:
    return Board(variant)


def replay(record: GameRecord, board: Board | None = None) -> Board:
    """Apply the record's moves from the initial board for its variant.

    Raises :class:`IllegalMoveError` carrying the 1-based index of the first
    illegal move; no partial board escapes on failure.
    """
    if board is None:
        board = Board(record.variant)
    for i, move in enumerate(record.moves, start=1):
        try:
            board.apply(move)
        except IllegalMoveError as exc:
            raise IllegalMoveError(exc.reason, move, index=i) from None
    return board
