"""
Published reference data reproduced by the test suite.
"""

# Frequency f of binary de Bruijn cycles of order 5 having n cross-join neighbors
NEIGHBOR_HISTOGRAM_32_2 = {
    31: 88, 32: 152, 33: 240, 34: 272, 35: 216, 36: 136, 37: 208, 38: 16,
    39: 176, 40: 64, 41: 48, 42: 16, 43: 40, 44: 0, 45: 112, 46: 0,
    47: 136, 48: 48, 49: 32, 50: 0, 51: 16, 52: 0, 53: 0, 54: 0,
    55: 0, 56: 0, 57: 0, 58: 0, 59: 0, 60: 8, 61: 0, 62: 16, 63: 0, 64: 8,
}

# Edge tables of G_B(N, 4): selected rows
EDGE_ROWS_D4 = {
    (10, 2): [8, 9, 0, 1],
    (10, 9): [6, 7, 8, 9],
    (11, 8): [10, 0, 1, 2],
    (12, 11): [8, 9, 10, 11],
}

EDGE_TABLE_12_4 = [
    [0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11], [0, 1, 2, 3],
    [4, 5, 6, 7], [8, 9, 10, 11], [0, 1, 2, 3], [4, 5, 6, 7],
    [8, 9, 10, 11], [0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11],
]

PREFER_ONE_16 = (0, 1, 3, 7, 15, 14, 13, 11, 6, 12, 9, 2, 5, 10, 4, 8)

# Algorithm H path from PREFER_ONE_16, largest join rule, rows 1) to 16)
HAMILTON_PATH_16_LARGEST = [
    (0, 1, 3, 7, 15, 14, 13, 11, 6, 12, 9, 2, 5, 10, 4, 8),
    (0, 1, 3, 7, 15, 14, 13, 10, 4, 9, 2, 5, 11, 6, 12, 8),
    (0, 1, 3, 7, 15, 14, 13, 10, 5, 11, 6, 12, 9, 2, 4, 8),
    (0, 1, 3, 7, 15, 14, 12, 9, 2, 5, 11, 6, 13, 10, 4, 8),
    (0, 1, 3, 6, 13, 10, 4, 9, 2, 5, 11, 7, 15, 14, 12, 8),
    (0, 1, 3, 6, 13, 10, 5, 11, 7, 15, 14, 12, 9, 2, 4, 8),
    (0, 1, 3, 6, 13, 11, 7, 15, 14, 12, 9, 2, 5, 10, 4, 8),
    (0, 1, 3, 6, 12, 9, 2, 5, 11, 7, 15, 14, 13, 10, 4, 8),
    (0, 1, 2, 5, 11, 7, 15, 14, 13, 10, 4, 9, 3, 6, 12, 8),
    (0, 1, 2, 5, 11, 7, 15, 14, 12, 9, 3, 6, 13, 10, 4, 8),
    (0, 1, 2, 5, 11, 6, 13, 10, 4, 9, 3, 7, 15, 14, 12, 8),
    (0, 1, 2, 5, 11, 6, 12, 9, 3, 7, 15, 14, 13, 10, 4, 8),
    (0, 1, 2, 5, 10, 4, 9, 3, 7, 15, 14, 13, 11, 6, 12, 8),
    (0, 1, 2, 5, 10, 4, 9, 3, 6, 13, 11, 7, 15, 14, 12, 8),
    (0, 1, 2, 4, 9, 3, 6, 13, 10, 5, 11, 7, 15, 14, 12, 8),
    (0, 1, 2, 4, 9, 3, 7, 15, 14, 13, 10, 5, 11, 6, 12, 8),
]

# Same seed, smallest join rule, as 1-based labels into HAMILTON_PATH_16_LARGEST
HAMILTON_PATH_16_SMALLEST_LABELS = [1, 3, 2, 4, 8, 7, 6, 5, 15, 16, 13, 14, 11, 12, 10, 9]

# Labels (into HAMILTON_PATH_16_LARGEST) of seeds whose path closes into a cycle
CYCLE_SEED_LABELS_16 = {2, 3, 5, 6, 9, 10, 11, 12}

CYCLE_SEED_32 = (
    0, 1, 3, 7, 15, 31, 30, 28, 24, 17, 2, 5, 10, 21, 11, 23,
    14, 29, 26, 20, 9, 19, 6, 13, 27, 22, 12, 25, 18, 4, 8, 16,
)
