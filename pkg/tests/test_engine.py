"""Board mechanics against a definition-only oracle.

The oracle below re-derives the legal move set from nothing but the rules:
scan every empty point in a generous window, every direction, every shift
of the new cross along its line, and test the two conditions (all other
covered points bear crosses; the line conflicts with no same-direction
line).  The engine's incremental index must match it exactly, at the start
and throughout play.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from morpion.engine import Board, GameRecord, IllegalMoveError, Move, initial_board, replay
from morpion.geometry import (
    DIRECTIONS,
    FIVE_D,
    FIVE_T,
    OVERLAPPING,
    SIX_D,
    TOUCHING,
    Direction,
    Segment,
    Variant,
    initial_crosses,
    segment_relation,
    segment_through,
)

# frozen oracle value: legal first moves on the standard 36-cross board,
# 12 in each axis direction plus 2 on each diagonal
INITIAL_LEGAL_5D = 28


def oracle_moves(board):
    """Legal moves straight from the definition; O(window^2 * 4 * alpha)."""
    alpha = board.variant.alpha
    touching = board.variant.touching_allowed
    xs = [p[0] for p in board.crosses]
    ys = [p[1] for p in board.crosses]
    found = set()
    for x in range(min(xs) - alpha, max(xs) + alpha + 1):
        for y in range(min(ys) - alpha, max(ys) + alpha + 1):
            if (x, y) in board.crosses:
                continue
            for d in DIRECTIONS:
                for shift in range(alpha):
                    seg = segment_through(d, (x, y), shift, alpha)
                    if any(
                        p != (x, y) and p not in board.crosses for p in seg.points()
                    ):
                        continue
                    bad = False
                    for other in board.lines:
                        rel = segment_relation(seg, other)
                        if rel == OVERLAPPING or (rel == TOUCHING and not touching):
                            bad = True
                            break
                    if not bad:
                        found.add(Move((x, y), d, seg.anchor))
    return found


@pytest.mark.parametrize("variant", [FIVE_D, FIVE_T])
def test_initial_legal_moves_match_oracle(variant):
    board = Board(variant)
    moves = set(board.legal_moves())
    assert moves == oracle_moves(board)
    assert len(moves) == INITIAL_LEGAL_5D


def test_initial_legal_moves_by_direction():
    counts = {d: 0 for d in DIRECTIONS}
    for m in Board(FIVE_D).legal_moves():
        counts[m.direction] += 1
    assert counts == {Direction.E: 12, Direction.N: 12, Direction.NE: 2, Direction.SE: 2}


@pytest.mark.parametrize("variant", [FIVE_D, FIVE_T, SIX_D])
def test_legal_index_tracks_oracle_through_play(variant):
    rng = random.Random(11)
    board = Board(variant)
    for _ in range(14):
        moves = board.legal_moves()
        assert set(moves) == oracle_moves(board)
        if not moves:
            break
        board.apply(rng.choice(moves))
    board.check_invariants()


def test_first_move_example_legal():
    """Placing (2,0) and drawing east through (2..6,0) is a legal opener."""
    board = Board(FIVE_D)
    move = Move((2, 0), Direction.E, (2, 0))
    ok, reason = board.is_legal(move)
    assert ok and reason is None
    board.apply(move)
    assert (2, 0) in board.crosses
    assert board.score == 1


def test_illegal_move_reason_names_first_empty_point():
    board = Board(FIVE_D)
    move = Move((1, 0), Direction.E, (1, 0))  # would need (2,0) which is empty
    ok, reason = board.is_legal(move)
    assert not ok
    assert reason == "(c): point 2,0 empty"
    with pytest.raises(IllegalMoveError) as err:
        board.apply(move)
    assert "(c): point 2,0 empty" in str(err.value)


def test_illegal_reasons_cover_all_clauses():
    board = Board(FIVE_D)
    # (a) cross already present
    ok, reason = board.is_legal(Move((0, 3), Direction.N, (0, 3)))
    assert not ok and reason.startswith("(a)")
    # (b) line missing the new cross
    ok, reason = board.is_legal(Move((2, 0), Direction.E, (3, 0)))
    assert not ok and reason.startswith("(b)")
    # (d) conflict with an existing line
    board.apply(Move((2, 0), Direction.E, (2, 0)))
    ok, reason = board.is_legal(Move((7, 0), Direction.E, (3, 0)))
    assert not ok and reason.startswith("(d)")


def test_touching_rule_splits_5d_from_5t():
    """Two east lines sharing exactly one point: legal in 5T, not in 5D."""
    m1 = Move((4, 3), Direction.E, (0, 3))
    m2 = Move((5, 3), Direction.E, (4, 3))
    for variant, allowed in ((FIVE_T, True), (FIVE_D, False)):
        board = Board(variant)
        board.apply(m1)
        ok, reason = board.is_legal(m2)
        assert ok is allowed
        if not allowed:
            assert reason.startswith("(d)")
        else:
            board.apply(m2)
            assert board.score == 2


def test_apply_undo_roundtrip_restores_everything():
    rng = random.Random(3)
    board = Board(FIVE_D)
    baseline = (
        set(board.crosses),
        list(board.lines),
        board.state_key(),
        set(board.legal_moves()),
    )
    depth = 0
    while depth < 30:
        moves = board.legal_moves()
        if not moves:
            break
        board.apply(rng.choice(moves))
        depth += 1
    board.check_invariants()
    for _ in range(depth):
        board.undo()
    assert (
        set(board.crosses),
        list(board.lines),
        board.state_key(),
        set(board.legal_moves()),
    ) == baseline
    board.check_invariants()


def test_undo_on_fresh_board_fails():
    with pytest.raises(IndexError):
        Board(FIVE_D).undo()


def test_state_key_merges_transposed_orders():
    board = Board(FIVE_D)
    a = Move((2, 0), Direction.E, (2, 0))
    b = Move((0, 2), Direction.N, (0, 2))
    board.apply(a)
    board.apply(b)
    key_ab = board.state_key()
    other = Board(FIVE_D)
    other.apply(b)
    other.apply(a)
    assert other.state_key() == key_ab
    other.undo()
    assert other.state_key() != key_ab


def test_copy_is_independent():
    board = Board(FIVE_D)
    board.apply(board.legal_moves()[0])
    clone = board.copy()
    clone.apply(clone.legal_moves()[0])
    assert clone.score == 2 and board.score == 1
    board.check_invariants()
    clone.check_invariants()


def test_replay_roundtrip_and_error_index():
    rng = random.Random(5)
    board = Board(FIVE_D)
    while board.has_legal_moves():
        board.apply(rng.choice(board.legal_moves()))
    record = GameRecord(FIVE_D, list(board.moves))
    replayed = replay(record)
    assert replayed.state_key() == board.state_key()

    bad = GameRecord(FIVE_D, list(board.moves[:4]) + [board.moves[2]])
    with pytest.raises(IllegalMoveError) as err:
        replay(bad)
    assert err.value.index == 5


def test_with_lines_rejects_conflicts_and_uncovered_points():
    seg = Segment(Direction.E, (2, 0), 5)
    crosses = set(initial_crosses(5)) | {(2, 0)}
    board = Board.with_lines(FIVE_D, crosses, [seg])
    assert seg in board.lines
    # covers (1,0), which is empty
    with pytest.raises(ValueError):
        Board.with_lines(FIVE_D, crosses, [Segment(Direction.E, (1, 0), 5)])
    # overlaps seg on (2..6, 0)
    with pytest.raises(ValueError):
        Board.with_lines(
            FIVE_D, crosses | {(7, 0)}, [seg, Segment(Direction.E, (3, 0), 5)]
        )


def test_canonical_move_order_is_cross_then_direction_then_anchor():
    moves = Board(FIVE_D).legal_moves()
    assert moves == sorted(moves)
    assert moves[0].cross <= moves[-1].cross


@given(st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=25, deadline=None)
def test_random_play_keeps_invariants(seed):
    rng = random.Random(seed)
    board = Board(FIVE_T if seed % 2 else FIVE_D)
    for _ in range(rng.randrange(0, 40)):
        moves = board.legal_moves()
        if not moves:
            break
        board.apply(rng.choice(moves))
        if rng.random() < 0.25 and board.moves:
            board.undo()
    board.check_invariants()
    assert len(board.crosses) == 36 + board.score
    assert len(board.lines) == board.score


@given(st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=10, deadline=None)
def test_terminal_boards_have_no_oracle_moves(seed):
    rng = random.Random(seed)
    board = Board(FIVE_D)
    while board.has_legal_moves():
        board.apply(rng.choice(board.legal_moves()))
    assert oracle_moves(board) == set()


def test_initial_board_helper_matches_constructor():
    assert initial_board(FIVE_D).state_key() == Board(FIVE_D).state_key()
    assert len(initial_board(SIX_D).crosses) == 48


def test_six_variant_initial_moves_match_oracle():
    board = Board(SIX_D)
    assert set(board.legal_moves()) == oracle_moves(board)
    assert board.legal_count == 24
