"""Golden census rows (published reference table).

Each entry: (covering_chi, l, orientable, chi_orbifold, h, branch_indices,
epi, epi_plus).  For covering characteristics 1 and 0 the reference lists
only the first few periods; for -1 and -2 the listing is complete over the
non-orientable-or-bordered quotients.  Closed orientable quotients are not
listed in the reference at all.
"""

ROWS_CHI_1 = [
    (1, 1, "-", 1, 0, (), 1, 0),
    (1, 2, "+", 1, 1, (2,), 1, 0),
    (1, 3, "-", 1, 0, (3,), 2, 0),
    (1, 4, "+", 1, 1, (4,), 2, 0),
    (1, 5, "-", 1, 0, (5,), 4, 0),
    (1, 6, "+", 1, 1, (6,), 2, 0),
    (1, 7, "-", 1, 0, (7,), 6, 0),
    (1, 8, "+", 1, 1, (8,), 4, 0),
    (1, 9, "-", 1, 0, (9,), 6, 0),
    (1, 10, "+", 1, 1, (10,), 4, 0),
    (1, 11, "-", 1, 0, (11,), 10, 0),
    (1, 12, "+", 1, 1, (12,), 4, 0),
]

ROWS_CHI_0 = [
    (0, 1, "-", 0, 0, (), 1, 0),
    (0, 2, "+", 1, 1, (2, 2), 1, 0),
    (0, 2, "-", 1, 0, (2, 2), 2, 0),
    (0, 2, "+", 0, 2, (), 2, 1),
    (0, 2, "-", 0, 0, (), 3, 1),
    (0, 2, "-", 0, 1, (), 2, 1),
    (0, 3, "-", 0, 0, (), 2, 0),
    (0, 4, "+", 0, 2, (), 2, 0),
    (0, 4, "-", 0, 0, (), 4, 4),
    (0, 4, "-", 0, 1, (), 2, 0),
    (0, 5, "-", 0, 0, (), 4, 0),
    (0, 6, "+", 0, 2, (), 4, 2),
]

ROWS_CHI_MINUS_1 = [
    (-1, 1, "-", -1, 0, (), 1, 0),
    (-1, 2, "+", 1, 1, (2, 2, 2), 1, 0),
    (-1, 2, "+", 0, 2, (2,), 2, 0),
    (-1, 2, "-", 0, 1, (2,), 2, 0),
    (-1, 3, "-", 1, 0, (3, 3), 4, 0),
    (-1, 4, "+", 1, 1, (2, 4), 2, 0),
    (-1, 6, "+", 1, 1, (2, 3), 2, 0),
]

ROWS_CHI_MINUS_2 = [
    (-2, 1, "-", -2, 0, (), 1, 0),
    (-2, 2, "+", 1, 1, (2, 2, 2, 2), 1, 0),
    (-2, 2, "-", 1, 0, (2, 2, 2, 2), 2, 0),
    (-2, 2, "+", 0, 2, (2, 2), 2, 0),
    (-2, 2, "-", 0, 0, (2, 2), 4, 0),
    (-2, 2, "-", 0, 1, (2, 2), 2, 0),
    (-2, 2, "+", -1, 1, (), 4, 1),
    (-2, 2, "+", -1, 3, (), 4, 1),
    (-2, 2, "-", -1, 0, (), 7, 1),
    (-2, 2, "-", -1, 1, (), 4, 1),
    (-2, 2, "-", -1, 2, (), 4, 1),
    (-2, 3, "-", 0, 0, (3,), 6, 0),
    (-2, 4, "-", 1, 0, (2, 2, 2), 2, 2),
    (-2, 4, "+", 1, 1, (4, 4), 4, 0),
    (-2, 4, "-", 1, 0, (4, 4), 8, 0),
    (-2, 4, "+", 0, 2, (2,), 2, 0),
    (-2, 4, "-", 0, 0, (2,), 8, 0),
    (-2, 4, "-", 0, 1, (2,), 2, 0),
    (-2, 6, "+", 1, 1, (2, 6), 2, 0),
    (-2, 6, "-", 1, 0, (2, 6), 4, 0),
    (-2, 6, "+", 1, 1, (3, 3), 4, 4),
    (-2, 6, "-", 1, 0, (3, 3), 4, 4),
    (-2, 8, "-", 1, 0, (2, 4), 4, 4),
    (-2, 12, "-", 1, 0, (2, 3), 4, 4),
]
