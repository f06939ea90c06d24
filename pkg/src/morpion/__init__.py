"""Morpion Solitaire engine, upper-bound analysis, and search harnesses.

The package splits into five layers: lattice geometry and variant rules
(:mod:`.geometry`), the playable board with legal-move index and replay
(:mod:`.engine`), the potential-based bound argument (:mod:`.potential`),
the line-counting bound argument with packing constructions
(:mod:`.linecover`), search strategies (:mod:`.solver`), and the file and
rendering plumbing that ties them to the ``morpion`` CLI (:mod:`.recordio`,
:mod:`.cli`).
"""

from .engine import Board, GameRecord, IllegalMoveError, Move, initial_board, replay
from .geometry import (
    DIRECTIONS,
    FIVE_D,
    FIVE_T,
    SIX_D,
    SIX_T,
    SUPPORTED_ALPHAS,
    ConfigurationError,
    Direction,
    Point,
    Segment,
    Variant,
    initial_crosses,
    line_key,
    line_offset,
    segment_relation,
    segment_through,
)
from .linecover import (
    ALL_RULES,
    CoverBound,
    ExactSearchBudgetError,
    Layout,
    LayoutError,
    PackResult,
    claim_a_lower,
    combined_lower,
    coverage,
    grid_packing,
    infeasibility_scan,
    lemma_counting_replay,
    lemma_min_cover_bound,
    min_cover_exact,
    octagon_points,
    pack_runs,
    packing_search,
    random_layout,
    scan_table,
    verify_layout,
)
from .potential import (
    PUBLISHED_BOUNDS,
    BoundDerivation,
    PotentialReport,
    check_pre_move_floor,
    check_terminal_lemma,
    potential_bound,
    potential_report,
)
from .recordio import (
    RecordParseError,
    RenderSpec,
    emit_layout,
    emit_record,
    parse_layout,
    parse_record,
    render,
)
from .solver import (
    FIVE_D_LINE_BOUND,
    FIVE_D_POTENTIAL_BOUND,
    SearchConfig,
    SearchResult,
    beam_search,
    check_record_bounds,
    exhaustive_solve,
    greedy,
    nmcs,
    playout_sweep,
    random_playout,
    rng_stream,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_RULES",
    "Board",
    "BoundDerivation",
    "ConfigurationError",
    "CoverBound",
    "DIRECTIONS",
    "Direction",
    "ExactSearchBudgetError",
    "FIVE_D",
    "FIVE_D_LINE_BOUND",
    "FIVE_D_POTENTIAL_BOUND",
    "FIVE_T",
    "GameRecord",
    "IllegalMoveError",
    "Layout",
    "LayoutError",
    "Move",
    "PUBLISHED_BOUNDS",
    "PackResult",
    "Point",
    "PotentialReport",
    "RecordParseError",
    "RenderSpec",
    "SIX_D",
    "SIX_T",
    "SUPPORTED_ALPHAS",
    "SearchConfig",
    "SearchResult",
    "Segment",
    "Variant",
    "beam_search",
    "check_pre_move_floor",
    "check_record_bounds",
    "check_terminal_lemma",
    "claim_a_lower",
    "combined_lower",
    "coverage",
    "emit_layout",
    "emit_record",
    "exhaustive_solve",
    "greedy",
    "grid_packing",
    "infeasibility_scan",
    "initial_board",
    "initial_crosses",
    "lemma_counting_replay",
    "lemma_min_cover_bound",
    "line_key",
    "line_offset",
    "min_cover_exact",
    "nmcs",
    "octagon_points",
    "pack_runs",
    "packing_search",
    "parse_layout",
    "parse_record",
    "playout_sweep",
    "potential_bound",
    "potential_report",
    "random_layout",
    "random_playout",
    "render",
    "replay",
    "rng_stream",
    "scan_table",
    "segment_relation",
    "segment_through",
    "solve",
    "verify_layout",
]
