"""Published table values, transcribed as coefficient lists (lowest degree first)."""

# JS(n, k) for 1 <= k <= n <= 6
JS_TABLE = {
    (1, 1): [1],
    (2, 1): [1, 1], (2, 2): [1],
    (3, 1): [1, 2, 1], (3, 2): [5, 3], (3, 3): [1],
    (4, 1): [1, 3, 3, 1], (4, 2): [21, 24, 7], (4, 3): [14, 6], (4, 4): [1],
    (5, 1): [1, 4, 6, 4, 1], (5, 2): [85, 141, 79, 15], (5, 3): [147, 120, 25],
    (5, 4): [30, 10], (5, 5): [1],
    (6, 1): [1, 5, 10, 10, 5, 1], (6, 2): [341, 738, 604, 222, 31],
    (6, 3): [1408, 1662, 664, 90], (6, 4): [627, 400, 65], (6, 5): [55, 15], (6, 6): [1],
}

# js(n, k) for 1 <= k <= n <= 5
js_TABLE = {
    (1, 1): [1],
    (2, 1): [-1, -1], (2, 2): [1],
    (3, 1): [4, 6, 2], (3, 2): [-5, -3], (3, 3): [1],
    (4, 1): [-36, -66, -36, -6], (4, 2): [49, 48, 11], (4, 3): [-14, -6], (4, 4): [1],
    (5, 1): [576, 1200, 840, 240, 24], (5, 2): [-820, -1030, -404, -50],
    (5, 3): [273, 200, 35], (5, 4): [-30, -10], (5, 5): [1],
}

# coefficients of JS(n, k) in powers of (z+1), 1 <= k <= n <= 5
D_TABLE = {
    (1, 1): [1],
    (2, 1): [0, 1], (2, 2): [1],
    (3, 1): [0, 0, 1], (3, 2): [2, 3], (3, 3): [1],
    (4, 1): [0, 0, 0, 1], (4, 2): [4, 10, 7], (4, 3): [8, 6], (4, 4): [1],
    (5, 1): [0, 0, 0, 0, 1], (5, 2): [8, 28, 34, 15], (5, 3): [52, 70, 25],
    (5, 4): [20, 10], (5, 5): [1],
}

# V(n, k) and |v(n, k)| for 0 <= k <= n <= 5, listed by row n
V_TABLE = [
    [1],
    [1, 1],
    [1, 10, 1],
    [1, 91, 35, 1],
    [1, 820, 966, 84, 1],
    [1, 7381, 24970, 5082, 165, 1],
]
ABS_v_TABLE = [
    [1],
    [1, 1],
    [9, 10, 1],
    [225, 259, 35, 1],
    [11025, 12916, 1974, 84, 1],
    [893025, 1057221, 172810, 8778, 165, 1],
]

# worked example of the signed-partition / triple / quasi-permutation correspondence
EXAMPLE_SIGNED = ([-4, 6, 7, -8, -10],
                  [[1, -1, 3, 4, -5, -7], [2, -2, -3, 5, -6, 8], [9, -9, 10]])
EXAMPLE_TRIPLE = (
    ((1, 3, 7), (2, 5, 6), (4,), (8,), (9,), (10,)),
    ((1, 5, 7), (2, 3, 6), (4,), (8,), (9,), (10,)),
    ((1, 4), (2, 8), (3,), (5,), (6,), (7,), (9, 10)),
)
EXAMPLE_Q1 = {(1, 3), (2, 5), (3, 7), (4, 1), (5, 6), (8, 2), (10, 9)}
EXAMPLE_Q2 = {(1, 5), (2, 3), (3, 6), (4, 1), (5, 7), (8, 2), (10, 9)}
