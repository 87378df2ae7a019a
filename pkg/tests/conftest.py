"""Shared fixtures: the two worked examples and small helpers."""

from sigraph.intervals import IntervalRealization

# 9-interval family whose queries and algorithm outputs are known by hand.
FIG1_INTERVALS = (
    (1, 6),
    (2, 5),
    (3, 9),
    (4, 8),
    (7, 12),
    (10, 18),
    (11, 15),
    (13, 17),
    (14, 16),
)
FIG1_S = "000011011001001111"
FIG1_D = [1, 2, 3, 4, 3, 2, 3, 2, 1, 2, 3, 2, 3, 4, 3, 2, 1, 0]

# 7-arc circular family; arc 4 and arc 7 wrap past the anchor point.
# Pairs are (start, end) clockwise positions, already in label order.
FIG2_ARCS = (
    (1, 3),
    (4, 7),
    (5, 8),
    (6, 2),
    (9, 14),
    (11, 12),
    (13, 10),
)
FIG2_ADJACENCY = {
    1: {4, 7},
    2: {3, 4, 7},
    3: {2, 4, 7},
    4: {1, 2, 3, 5, 6, 7},
    5: {4, 6, 7},
    6: {4, 5},
    7: {1, 2, 3, 4, 5},
}


def fig1_realization() -> IntervalRealization:
    return IntervalRealization(FIG1_INTERVALS)
