"""
Counting lines instead of potential: the 132 / 125 / 121 bounds
===============================================================

After N moves a 5D board holds exactly N lines and N+36 crosses.  Strip
the move order away and only a bag of lines remains; if every valid bag
of N lines must cover more than N+36 points, no game reaches move N.
c'(N) below is a certified lower bound on that minimum coverage.
"""

from morpion import (
    ALL_RULES,
    DIRECTIONS,
    Direction,
    Layout,
    Segment,
    claim_a_lower,
    combined_lower,
    coverage,
    infeasibility_scan,
    lemma_counting_replay,
    lemma_min_cover_bound,
    min_cover_exact,
    scan_table,
)
from morpion.linecover import RULE_A, RULE_B, RULE_REMARK

# rule A alone: N lines need at least ceil(N/4) * 5 points
print("claim A for N=122:", claim_a_lower(122))

# rule B adds +4 whenever ceil(N/4) lands on a 5k+1 line count in two
# directions; the remark rule adds +5 when it lands on 5k+2 or 5k+3
bound = combined_lower(122, frozenset({RULE_A, RULE_B}))
print(f"combined for N=122: {bound.bound} via rule {bound.rule}")
print("budget N+36 for N=122:", 122 + 36)

# scanning N upward, the first infeasible N caps the score at N-1
for rules, label in [
    (frozenset({RULE_A}), "A alone"),
    (frozenset({RULE_A, RULE_REMARK}), "A + remark"),
    (frozenset({RULE_A, RULE_B}), "A + B"),
    (ALL_RULES, "all rules"),
]:
    print(f"  {label:<10} -> score <= {infeasibility_scan(rules, 200)}")

# the same scan as a table, one row per N; rows are
# (N, rule, lower bound, N+36, feasible)
rows = scan_table(ALL_RULES, 125)
n, rule, lower, budget, feasible = next(r for r in rows if not r[4])
print(f"first infeasible N: {n} (rule {rule} needs {lower} > {budget})")

# rule B rests on a minimum-coverage fact: one line in each of two
# directions covers at least 9 points.  Brute force confirms it for
# every direction pair, matching the closed-form bound.
for d1 in DIRECTIONS:
    for d2 in DIRECTIONS:
        if d1 < d2:
            assert min_cover_exact({d1: 1, d2: 1}, window=6) == 9
print("min cover for 1+1 lines:", lemma_min_cover_bound(0))
print("min cover for 6+6 lines:", lemma_min_cover_bound(1))

# the counting argument behind that bound replays on any layout holding
# 5k+1 lines in each of two directions.  Build a 6+6 one by hand: six
# horizontal rows and six far-away diagonals, everything disjoint.
segments = [Segment(Direction.E, (0, y), 5) for y in range(6)]
segments += [Segment(Direction.NE, (20 + i, 0), 5) for i in range(6)]
layout = Layout.from_segments(segments)
floor = lemma_counting_replay(layout, Direction.E, Direction.NE)
print(f"6+6 layout: coverage {coverage(layout)} >= floor {floor}")
