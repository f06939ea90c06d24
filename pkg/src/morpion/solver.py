"""Search harnesses: exhaustive solving, random playouts, beam search, NMCS.

Everything here is deterministic given its seed: randomness comes from a
named 64-bit generator (PCG64), and parallel playout sweeps give worker i
the stream ``PCG64(seed).jumped(i)`` so results do not depend on worker
count.  Budgets are expressed in nodes (moves applied); wall-clock budgets
are honored but a run that stops on time rather than nodes is not guaranteed
to be reproducible.

Every record leaving this module passes a bound guard: it must replay
legally with N lines and N+36 crosses, and a 5D record longer than the
proven maxima (121 by line counting, 136 by potential) fails hard since
that can only mean an engine bug.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .engine import Board, GameRecord, Move, replay
from .geometry import DIRECTIONS, Variant, initial_crosses
from .potential import potential_report

FIVE_D_LINE_BOUND = 121
FIVE_D_POTENTIAL_BOUND = 136
DEFAULT_NODE_BUDGET = 10**8

STRATEGIES = ("random", "greedy", "beam", "nmcs", "exhaustive")


@dataclass
class SearchConfig:
    seed: int = 0
    strategy: str = "random"
    beam_width: int = 64
    nmcs_level: int = 1
    time_budget: float | None = None  # seconds
    node_budget: int = DEFAULT_NODE_BUDGET
    stop_score: int | None = None
    playouts: int = 1  # for strategy "random": sweep size
    workers: int = 1


@dataclass
class SearchResult:
    best_record: GameRecord
    best_score: int
    nodes_expanded: int
    wall_time: float
    stopped_reason: str = "complete"  # | "node-budget" | "time-budget" | "stop-score"
    exact: bool = False

    @property
    def complete(self) -> bool:
        return self.stopped_reason == "complete"


class _Stop(Exception):
    def __init__(self, reason: str):
        self.reason = reason


def rng_stream(seed: int, stream: int = 0) -> np.random.Generator:
    """Substream ``stream`` of the seeded generator; stream 0 is the root."""
    bits = np.random.PCG64(seed)
    if stream:
        bits = bits.jumped(stream)
    return np.random.Generator(bits)


_initial_cache: dict[Variant, Board] = {}


def _fresh_board(variant: Variant) -> Board:
    proto = _initial_cache.get(variant)
    if proto is None:
        proto = _initial_cache[variant] = Board(variant)
    return proto.copy()


def check_record_bounds(record: GameRecord, board: Board | None = None) -> Board:
    """The guard every solver output passes; returns the replayed board.

    When ``board`` is given it is trusted as the record's final position and
    the replay is skipped (used on hot paths; returned results always get
    the full replay).
    """
    n = len(record.moves)
    if record.variant.alpha == 5 and not record.variant.touching_allowed:
        if n > FIVE_D_LINE_BOUND or n > FIVE_D_POTENTIAL_BOUND:
            raise AssertionError(
                f"engine bug: produced a {n}-move 5D game, above the proven maximum"
            )
    if board is None:
        board = replay(record)
    if len(board.lines) != n or len(board.crosses) != len(board.initial) + n:
        raise AssertionError("engine bug: line/cross counts disagree with the move count")
    return board


def record_from_board(board: Board, **metadata: str) -> GameRecord:
    record = GameRecord(board.variant, list(board.moves), dict(metadata))
    check_record_bounds(record, board)
    return record


# -- random playouts -------------------------------------------------------


def _playout(board: Board, rng: np.random.Generator) -> Board:
    """Play uniformly random legal moves in place until none remain."""
    while True:
        moves = board.legal_moves()
        if not moves:
            return board
        board.apply(moves[int(rng.integers(0, len(moves)))])


def random_playout(variant: Variant, seed: int) -> GameRecord:
    """One uniformly random game, reproducible from the seed."""
    board = _playout(_fresh_board(variant), rng_stream(seed))
    record = record_from_board(board, strategy="random", seed=str(seed))
    check_record_bounds(record)
    return record


def _sweep_chunk(
    variant: Variant, seed: int, lo: int, hi: int
) -> tuple[int, int, list[Move], int]:
    best_score, best_stream, best_moves, total = -1, -1, [], 0
    for stream in range(lo, hi):
        board = _playout(_fresh_board(variant), rng_stream(seed, stream))
        check_record_bounds(GameRecord(variant, board.moves), board)
        total += board.score
        if board.score > best_score:
            best_score, best_stream, best_moves = board.score, stream, list(board.moves)
    return best_score, best_stream, best_moves, total


def playout_sweep(
    variant: Variant, seed: int, playouts: int, workers: int = 1
) -> SearchResult:
    """Best of ``playouts`` random games on substreams 0..playouts-1.

    Playout i always runs on stream i, so the result is a pure function of
    (variant, seed, playouts) no matter how many workers share the sweep.
    Ties go to the lowest stream index.
    """
    if playouts < 1:
        raise ValueError("playouts must be >= 1")
    t0 = time.perf_counter()
    chunks: list[tuple[int, int, list[Move], int]]
    if workers > 1 and playouts > 1:
        from concurrent.futures import ProcessPoolExecutor

        step = -(-playouts // workers)
        spans = [(lo, min(lo + step, playouts)) for lo in range(0, playouts, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(
                pool.map(
                    _sweep_chunk,
                    *zip(*[(variant, seed, lo, hi) for lo, hi in spans]),
                )
            )
    else:
        chunks = [_sweep_chunk(variant, seed, 0, playouts)]
    best_score, best_stream, best_moves, _ = max(chunks, key=lambda c: (c[0], -c[1]))
    record = GameRecord(
        variant,
        best_moves,
        {"strategy": "random", "seed": str(seed), "stream": str(best_stream)},
    )
    check_record_bounds(record)
    nodes = sum(c[3] for c in chunks)
    return SearchResult(record, best_score, nodes, time.perf_counter() - t0)


# -- beam search ------------------------------------------------------------


def potential_total(board: Board) -> float:
    return float(potential_report(board).total)


def beam_search(
    variant: Variant,
    width: int,
    seed: int,
    heuristic: Callable[[Board], float] | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> SearchResult:
    """Level-synchronous beam keyed by a board heuristic.

    The default heuristic is the board's total potential.  With length-5
    lines that total is the same for every board at a given depth (each move
    adds a 4-potential cross and spends 5), so ranking falls through to the
    seeded jitter tie-break and the beam explores a reproducible random
    sample of width lines.  A custom heuristic changes that.

    Duplicate positions within a level (same crosses and lines via a
    different move order) are merged before selection.
    """
    if width < 1:
        raise ValueError("beam width must be >= 1")
    t0 = time.perf_counter()
    rng = rng_stream(seed)
    default_h = heuristic is None
    beam = [_fresh_board(variant)]
    best_board = beam[0]
    best_score = 0
    nodes = 0
    reason = "complete"
    while True:
        candidates: list[tuple[float, float, int, Move]] = []
        seen: set[tuple[frozenset, frozenset]] = set()
        alive = False
        for bi, board in enumerate(beam):
            moves = board.legal_moves()
            if not moves:
                if board.score > best_score:
                    best_score, best_board = board.score, board
                continue
            alive = True
            crosses_fs, lines_fs = board.state_key()
            for m in moves:
                key = (crosses_fs | {m.cross}, lines_fs | {(m.direction, m.anchor)})
                if key in seen:
                    continue
                seen.add(key)
                jitter = float(rng.random())
                if default_h:
                    h = 0.0  # constant per level; jitter decides
                else:
                    child = board.copy().apply(m)
                    h = float(heuristic(child))
                candidates.append((h, jitter, bi, m))
        if not alive or not candidates:
            break
        candidates.sort(key=lambda c: (-c[0], c[1]))
        nodes += len(candidates)
        if nodes > node_budget:
            reason = "node-budget"
            break
        next_beam = []
        for h, jitter, bi, m in candidates[:width]:
            next_beam.append(beam[bi].copy().apply(m))
        beam = next_beam
        tail = max(beam, key=lambda b: b.score)
        if tail.score > best_score:
            best_score, best_board = tail.score, tail
    record = record_from_board(
        best_board, strategy="beam", seed=str(seed), width=str(width)
    )
    check_record_bounds(record)
    return SearchResult(record, best_score, nodes, time.perf_counter() - t0, reason)


def greedy(variant: Variant, seed: int) -> SearchResult:
    """Width-1 beam: one jittered greedy line."""
    result = beam_search(variant, 1, seed)
    result.best_record.metadata["strategy"] = "greedy"
    return result


# -- nested Monte-Carlo search ----------------------------------------------


class _Nmcs:
    def __init__(
        self,
        variant: Variant,
        seed: int,
        node_budget: int,
        time_budget: float | None,
        stop_score: int | None,
    ):
        self.variant = variant
        self.rng = rng_stream(seed)
        self.node_budget = node_budget
        self.deadline = None if time_budget is None else time.perf_counter() + time_budget
        self.stop_score = stop_score
        self.nodes = 0
        self.best_score = -1
        self.best_moves: list[Move] = []

    def _tick(self, steps: int) -> None:
        self.nodes += steps
        if self.nodes > self.node_budget:
            raise _Stop("node-budget")
        if self.deadline is not None and time.perf_counter() > self.deadline:
            raise _Stop("time-budget")

    def _record_if_best(self, board: Board) -> None:
        if board.score > self.best_score:
            self.best_score = board.score
            self.best_moves = list(board.moves)
            check_record_bounds(GameRecord(self.variant, self.best_moves), board)
            if self.stop_score is not None and self.best_score >= self.stop_score:
                raise _Stop("stop-score")

    def playout_suffix(self, board: Board) -> tuple[int, list[Move]]:
        """Random finish from the position; board itself is untouched."""
        copy = board.copy()
        depth = len(copy.moves)
        _playout(copy, self.rng)
        self._tick(copy.score - depth)
        self._record_if_best(copy)
        return copy.score, copy.moves[depth:]

    def nested(self, board: Board, level: int) -> None:
        """Memorized nested search; advances ``board`` to a terminal position."""
        best_score = -1
        suffix: list[Move] = []
        while True:
            moves = board.legal_moves()
            if not moves:
                self._record_if_best(board)
                return
            for m in moves:
                self._tick(1)
                board.apply(m)
                if level <= 1:
                    s, cont = self.playout_suffix(board)
                else:
                    depth = len(board.moves)
                    probe = board.copy()
                    self.nested(probe, level - 1)
                    s, cont = probe.score, probe.moves[depth:]
                board.undo()
                if s > best_score:
                    best_score = s
                    suffix = [m] + cont
            if not suffix:
                # every continuation was worse than an already-banked line
                self.playout_suffix(board)
                return
            board.apply(suffix.pop(0))


def nmcs(
    variant: Variant,
    level: int,
    seed: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget: float | None = None,
    stop_score: int | None = None,
) -> SearchResult:
    """Nested Monte-Carlo search with memorization.

    Level 0 is a bare playout.  At level L, each legal move is evaluated by
    a level L-1 search and the best line found so far is followed one move,
    re-searching after every step.  The global best game is kept across the
    whole run, so the result dominates every playout the search performed.
    """
    if level < 0:
        raise ValueError("level must be >= 0")
    t0 = time.perf_counter()
    state = _Nmcs(variant, seed, node_budget, time_budget, stop_score)
    reason = "complete"
    board = _fresh_board(variant)
    try:
        if level == 0:
            state.playout_suffix(board)
        else:
            state.nested(board, level)
    except _Stop as stop:
        reason = stop.reason
    record = GameRecord(
        variant,
        state.best_moves,
        {"strategy": "nmcs", "seed": str(seed), "level": str(level)},
    )
    check_record_bounds(record)
    return SearchResult(
        record, state.best_score, state.nodes, time.perf_counter() - t0, reason
    )


# -- exhaustive search ------------------------------------------------------

# The eight lattice symmetries as (a, b, c, d): (x, y) -> (ax+by, cx+dy).
_SYMMETRIES = (
    (1, 0, 0, 1), (0, -1, 1, 0), (-1, 0, 0, -1), (0, 1, -1, 0),
    (0, 1, 1, 0), (-1, 0, 0, 1), (1, 0, 0, -1), (0, -1, -1, 0),
)


def _state_key_fn(board: Board) -> Callable[[Board], tuple]:
    """Build the transposition key for states reached from ``board``.

    States reached by different move orders collapse to one key, and so do
    states related by any lattice symmetry that maps the initial crosses
    onto themselves (all eight for the standard cross shape; only the
    identity for an arbitrary synthetic board, which degrades to plain
    transposition merging).  Coordinates are doubled and re-centred on the
    initial bounding box so the symmetry centre stays integral.
    """
    init = board.initial
    cx = min(x for x, _ in init) + max(x for x, _ in init)
    cy = min(y for _, y in init) + max(y for _, y in init)
    doubled = {(2 * x - cx, 2 * y - cy) for x, y in init}
    group = [
        m
        for m in _SYMMETRIES
        if {(m[0] * u + m[1] * v, m[2] * u + m[3] * v) for u, v in doubled} == doubled
    ]
    if len(group) == 1:
        return Board.state_key

    by_step: dict[tuple[int, int], object] = {}
    for d in DIRECTIONS:
        sx, sy = d.step
        by_step[sx, sy] = d
        by_step[-sx, -sy] = d
    dir_maps = []
    for a, b, c, d in group:
        img = {}
        for direction in DIRECTIONS:
            sx, sy = direction.step
            ix, iy = a * sx + b * sy, c * sx + d * sy
            if ix < 0 or (ix == 0 and iy < 0):
                ix, iy = -ix, -iy
            img[direction] = by_step[ix, iy]
        dir_maps.append(img)

    span = board.variant.alpha - 1
    idx = range(len(group))
    pcache: dict = {}
    lcache: dict = {}

    def point_images(p):
        out = pcache.get(p)
        if out is None:
            u, v = 2 * p[0] - cx, 2 * p[1] - cy
            out = tuple((a * u + b * v, c * u + d * v) for a, b, c, d in group)
            pcache[p] = out
        return out

    def line_images(direction, anchor):
        k = (direction, anchor)
        out = lcache.get(k)
        if out is None:
            head = point_images(anchor)
            sx, sy = direction.step
            tail = point_images((anchor[0] + span * sx, anchor[1] + span * sy))
            out = tuple((dir_maps[i][direction], min(head[i], tail[i])) for i in idx)
            lcache[k] = out
        return out

    def key(b: Board) -> tuple:
        crosses = [point_images(m.cross) for m in b.moves]
        lines = [line_images(m.direction, m.anchor) for m in b.moves]
        return min(
            (
                tuple(sorted(c[i] for c in crosses)),
                tuple(sorted(ln[i] for ln in lines)),
            )
            for i in idx
        )

    return key


def exhaustive_solve(
    variant: Variant,
    node_budget: int = DEFAULT_NODE_BUDGET,
    board: Board | None = None,
    use_transpositions: bool = True,
) -> SearchResult:
    """Exact maximum score by depth-first search with undo.

    Transpositions (same crosses and lines reached by a different move
    order, or states related by a symmetry of the initial crosses) are
    merged; the table stores the exact number of further moves available
    from each position, and the best line is reconstructed from the filled
    table afterwards.  Exceeding the node budget returns the best game
    found so far flagged non-exact.

    Sized for length-6 variants and synthetic positions; a 5D/5T run will
    hit any realistic budget.
    """
    t0 = time.perf_counter()
    if board is None:
        board = Board(variant)
    else:
        board = board.copy()
    keyfn = _state_key_fn(board) if use_transpositions else None
    table: dict[tuple, int] = {}
    nodes = 0
    budget_hit = False
    best_seen = 0
    best_moves: list[Move] = []
    root_depth = board.score

    def dfs() -> int:
        nonlocal nodes, budget_hit, best_seen, best_moves
        key = keyfn(board) if keyfn is not None else None
        if key is not None:
            hit = table.get(key)
            if hit is not None:
                return hit
        if board.score - root_depth > best_seen:
            best_seen = board.score - root_depth
            best_moves = board.moves[root_depth:]
        value = 0
        # Child order cannot change the value, so take the move index as-is
        # and skip the canonical sort.
        for seg, empty in list(board._legal.items()):
            nodes += 1
            if nodes > node_budget:
                budget_hit = True
                break
            board.apply(Move(empty, seg.direction, seg.anchor))
            child = 1 + dfs()
            if child > value:
                value = child
            board.undo()
        if key is not None and not budget_hit:
            table[key] = value
        return value

    value = dfs()

    if not budget_hit and keyfn is not None:
        # replay the optimum from the filled table, preferring the first
        # move in canonical order at every step
        walk = board
        line: list[Move] = []
        while True:
            target = table.get(keyfn(walk), 0)
            if target == 0:
                break
            for m in walk.legal_moves():
                walk.apply(m)
                if table.get(keyfn(walk), -1) == target - 1:
                    line.append(m)
                    break
                walk.undo()
            else:
                raise AssertionError("transposition table lost the optimal line")
        best_moves = line
        best_seen = value
    record = GameRecord(
        variant,
        best_moves,
        {"strategy": "exhaustive", "exact": str(not budget_hit).lower()},
    )
    if root_depth == 0 and board.initial == initial_crosses(variant.alpha):
        check_record_bounds(record)
    return SearchResult(
        record,
        best_seen,
        nodes,
        time.perf_counter() - t0,
        "node-budget" if budget_hit else "complete",
        exact=not budget_hit,
    )


# -- dispatch ---------------------------------------------------------------


def solve(variant: Variant, config: SearchConfig) -> SearchResult:
    """Run the configured strategy; the CLI's single entry point."""
    if config.strategy == "random":
        if config.playouts == 1:
            t0 = time.perf_counter()
            record = random_playout(variant, config.seed)
            return SearchResult(
                record, len(record.moves), len(record.moves), time.perf_counter() - t0
            )
        return playout_sweep(variant, config.seed, config.playouts, config.workers)
    if config.strategy == "greedy":
        return greedy(variant, config.seed)
    if config.strategy == "beam":
        return beam_search(
            variant, config.beam_width, config.seed, node_budget=config.node_budget
        )
    if config.strategy == "nmcs":
        return nmcs(
            variant,
            config.nmcs_level,
            config.seed,
            node_budget=config.node_budget,
            time_budget=config.time_budget,
            stop_score=config.stop_score,
        )
    if config.strategy == "exhaustive":
        return exhaustive_solve(variant, node_budget=config.node_budget)
    raise ValueError(f"unknown strategy {config.strategy!r} (expected one of {STRATEGIES})")
