"""Frozen Aronhold invariant tables (generated by scripts/derive_aronhold.py).

Each entry is (numerator, denominator, monomial indices); indices refer to
the coefficient order of TernaryCubic.
"""

S_SCALE = (-1, 24)
T_SCALE = (-1, 6)

S_TERMS = (
    (1, 6, (0, 1, 2, 9)),
    (-1, 9, (0, 1, 7, 8)),
    (-1, 9, (0, 2, 5, 6)),
    (1, 27, (0, 5, 8, 8)),
    (1, 27, (0, 6, 6, 7)),
    (-1, 54, (0, 6, 8, 9)),
    (-1, 9, (1, 2, 3, 4)),
    (1, 27, (1, 3, 7, 7)),
    (1, 27, (1, 4, 4, 8)),
    (-1, 54, (1, 4, 7, 9)),
    (1, 27, (2, 3, 3, 6)),
    (-1, 54, (2, 3, 5, 9)),
    (1, 27, (2, 4, 5, 5)),
    (-1, 81, (3, 3, 8, 8)),
    (1, 81, (3, 4, 6, 8)),
    (1, 81, (3, 5, 7, 8)),
    (-1, 54, (3, 6, 7, 9)),
    (1, 162, (3, 8, 9, 9)),
    (-1, 81, (4, 4, 6, 6)),
    (1, 81, (4, 5, 6, 7)),
    (-1, 54, (4, 5, 8, 9)),
    (1, 162, (4, 6, 9, 9)),
    (-1, 81, (5, 5, 7, 7)),
    (1, 162, (5, 7, 9, 9)),
    (-1, 1296, (9, 9, 9, 9)),
)

T_TERMS = (
    (1, 1, (0, 0, 1, 1, 2, 2)),
    (-2, 3, (0, 0, 1, 2, 6, 8)),
    (4, 27, (0, 0, 1, 8, 8, 8)),
    (4, 27, (0, 0, 2, 6, 6, 6)),
    (-1, 27, (0, 0, 6, 6, 8, 8)),
    (-2, 3, (0, 1, 1, 2, 4, 7)),
    (4, 27, (0, 1, 1, 7, 7, 7)),
    (-2, 3, (0, 1, 2, 2, 3, 5)),
    (2, 9, (0, 1, 2, 3, 6, 7)),
    (2, 9, (0, 1, 2, 3, 8, 9)),
    (2, 9, (0, 1, 2, 4, 5, 8)),
    (2, 9, (0, 1, 2, 4, 6, 9)),
    (2, 9, (0, 1, 2, 5, 7, 9)),
    (-5, 54, (0, 1, 2, 9, 9, 9)),
    (-4, 27, (0, 1, 3, 7, 8, 8)),
    (2, 9, (0, 1, 4, 6, 7, 8)),
    (-4, 27, (0, 1, 4, 8, 8, 9)),
    (-4, 27, (0, 1, 5, 7, 7, 8)),
    (-4, 27, (0, 1, 6, 7, 7, 9)),
    (1, 9, (0, 1, 7, 8, 9, 9)),
    (4, 27, (0, 2, 2, 5, 5, 5)),
    (2, 9, (0, 2, 3, 5, 6, 8)),
    (-4, 27, (0, 2, 3, 6, 6, 9)),
    (-4, 27, (0, 2, 4, 5, 6, 6)),
    (-4, 27, (0, 2, 5, 5, 6, 7)),
    (-4, 27, (0, 2, 5, 5, 8, 9)),
    (1, 9, (0, 2, 5, 6, 9, 9)),
    (-4, 81, (0, 3, 5, 8, 8, 8)),
    (2, 81, (0, 3, 6, 6, 7, 8)),
    (2, 81, (0, 3, 6, 8, 8, 9)),
    (2, 81, (0, 4, 5, 6, 8, 8)),
    (-4, 81, (0, 4, 6, 6, 6, 7)),
    (2, 81, (0, 4, 6, 6, 8, 9)),
    (8, 81, (0, 5, 5, 7, 8, 8)),
    (8, 81, (0, 5, 6, 6, 7, 7)),
    (-10, 81, (0, 5, 6, 7, 8, 9)),
    (1, 81, (0, 5, 8, 8, 9, 9)),
    (1, 81, (0, 6, 6, 7, 9, 9)),
    (-1, 162, (0, 6, 8, 9, 9, 9)),
    (4, 27, (1, 1, 2, 4, 4, 4)),
    (-1, 27, (1, 1, 4, 4, 7, 7)),
    (4, 27, (1, 2, 2, 3, 3, 3)),
    (-4, 27, (1, 2, 3, 3, 4, 8)),
    (-4, 27, (1, 2, 3, 3, 7, 9)),
    (-4, 27, (1, 2, 3, 4, 4, 6)),
    (2, 9, (1, 2, 3, 4, 5, 7)),
    (1, 9, (1, 2, 3, 4, 9, 9)),
    (-4, 27, (1, 2, 4, 4, 5, 9)),
    (8, 81, (1, 3, 3, 7, 7, 8)),
    (8, 81, (1, 3, 4, 4, 8, 8)),
    (2, 81, (1, 3, 4, 6, 7, 7)),
    (-10, 81, (1, 3, 4, 7, 8, 9)),
    (-4, 81, (1, 3, 5, 7, 7, 7)),
    (1, 81, (1, 3, 7, 7, 9, 9)),
    (-4, 81, (1, 4, 4, 4, 6, 8)),
    (2, 81, (1, 4, 4, 5, 7, 8)),
    (2, 81, (1, 4, 4, 6, 7, 9)),
    (1, 81, (1, 4, 4, 8, 9, 9)),
    (2, 81, (1, 4, 5, 7, 7, 9)),
    (-1, 162, (1, 4, 7, 9, 9, 9)),
    (-1, 27, (2, 2, 3, 3, 5, 5)),
    (-4, 81, (2, 3, 3, 3, 6, 8)),
    (8, 81, (2, 3, 3, 4, 6, 6)),
    (2, 81, (2, 3, 3, 5, 6, 7)),
    (2, 81, (2, 3, 3, 5, 8, 9)),
    (1, 81, (2, 3, 3, 6, 9, 9)),
    (2, 81, (2, 3, 4, 5, 5, 8)),
    (-10, 81, (2, 3, 4, 5, 6, 9)),
    (2, 81, (2, 3, 5, 5, 7, 9)),
    (-1, 162, (2, 3, 5, 9, 9, 9)),
    (8, 81, (2, 4, 4, 5, 5, 6)),
    (-4, 81, (2, 4, 5, 5, 5, 7)),
    (1, 81, (2, 4, 5, 5, 9, 9)),
    (8, 729, (3, 3, 3, 8, 8, 8)),
    (-4, 243, (3, 3, 4, 6, 8, 8)),
    (-4, 243, (3, 3, 5, 7, 8, 8)),
    (-1, 27, (3, 3, 6, 6, 7, 7)),
    (2, 81, (3, 3, 6, 7, 8, 9)),
    (-2, 243, (3, 3, 8, 8, 9, 9)),
    (-4, 243, (3, 4, 4, 6, 6, 8)),
    (-2, 243, (3, 4, 5, 6, 7, 8)),
    (2, 81, (3, 4, 5, 8, 8, 9)),
    (2, 81, (3, 4, 6, 6, 7, 9)),
    (-1, 243, (3, 4, 6, 8, 9, 9)),
    (-4, 243, (3, 5, 5, 7, 7, 8)),
    (2, 81, (3, 5, 6, 7, 7, 9)),
    (-1, 243, (3, 5, 7, 8, 9, 9)),
    (-1, 162, (3, 6, 7, 9, 9, 9)),
    (1, 486, (3, 8, 9, 9, 9, 9)),
    (8, 729, (4, 4, 4, 6, 6, 6)),
    (-1, 27, (4, 4, 5, 5, 8, 8)),
    (-4, 243, (4, 4, 5, 6, 6, 7)),
    (2, 81, (4, 4, 5, 6, 8, 9)),
    (-2, 243, (4, 4, 6, 6, 9, 9)),
    (-4, 243, (4, 5, 5, 6, 7, 7)),
    (2, 81, (4, 5, 5, 7, 8, 9)),
    (-1, 243, (4, 5, 6, 7, 9, 9)),
    (-1, 162, (4, 5, 8, 9, 9, 9)),
    (1, 486, (4, 6, 9, 9, 9, 9)),
    (8, 729, (5, 5, 5, 7, 7, 7)),
    (-2, 243, (5, 5, 7, 7, 9, 9)),
    (1, 486, (5, 7, 9, 9, 9, 9)),
    (-1, 5832, (9, 9, 9, 9, 9, 9)),
)
