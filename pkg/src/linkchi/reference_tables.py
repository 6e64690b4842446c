"""Reference grids of Euler characteristics for two strands, odd dimensions.

Published values, indexed by genus (0..3): ``TABLES[g][t]`` is the row of
chi values for complexity t (1..23) over hair counts s2 = 0..23 of the
second strand, the first strand carrying s1 = t - s2 + 1 - g hairs.

The printed source of the genus-3 grid breaks its own palindromic
symmetry in row t=21: it lists -378 at s2=3 but -318 at the mirror cell
s2=16 (s1 = 19 - s2 there, so the two must agree).  Two independent
evaluation routes both compute -318 for the pair, so the -378 looks like
a typo.  The verification suite treats the cells below as
reconciliation cells: a computed value differing from the printed one is
reported as a candidate misprint (with its mirror) instead of failing,
while palindromy of the computed row stays a hard assertion.
"""

from __future__ import annotations

__all__ = ["TABLES", "T_MAX", "S2_MAX", "RECONCILIATION_CELLS"]

T_MAX = 23
S2_MAX = 23

# (genus, t, s2) cells under suspicion in row t=21 of the genus-3 grid:
# the palindromy-breaking pair (s2=3 vs s2=16) and the neighbor s2=17
RECONCILIATION_CELLS = ((3, 21, 3), (3, 21, 16), (3, 21, 17))

TABLES: dict[int, dict[int, list[int]]] = {
    0: {
        1: [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        2: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        3: [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        4: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        5: [0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        6: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        7: [0, 0, 1, 1, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        8: [0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        9: [0, 0, 1, 1, 3, 3, 3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        10: [0, 0, 0, 1, 2, 3, 3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        11: [0, 0, 1, 2, 5, 6, 9, 6, 5, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        12: [0, 0, 0, 1, 3, 7, 9, 9, 7, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        13: [0, 0, 1, 2, 7, 11, 19, 19, 19, 11, 7, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        14: [0, 0, 0, 2, 5, 13, 22, 28, 28, 22, 13, 5, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        15: [0, 0, 1, 2, 9, 18, 36, 47, 58, 47, 36, 18, 9, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        16: [0, 0, 0, 2, 7, 21, 42, 68, 85, 85, 68, 42, 21, 7, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        17: [0, 0, 1, 3, 12, 28, 66, 104, 150, 160, 150, 104, 66, 28, 12, 3, 1, 0, 0, 0, 0, 0, 0, 0],
        18: [0, 0, 0, 2, 9, 32, 74, 142, 214, 262, 262, 214, 142, 74, 32, 9, 2, 0, 0, 0, 0, 0, 0, 0],
        19: [0, 0, 1, 3, 15, 41, 108, 204, 342, 442, 499, 442, 342, 204, 108, 41, 15, 3, 1, 0, 0, 0, 0, 0],
        20: [0, 0, 0, 3, 12, 46, 124, 271, 474, 691, 827, 827, 691, 474, 271, 124, 46, 12, 3, 0, 0, 0, 0, 0],
        21: [0, 0, 1, 3, 18, 57, 168, 368, 707, 1075, 1419, 1527, 1419, 1075, 707, 368, 168, 57, 18, 3, 1, 0, 0, 0],
        22: [0, 0, 0, 3, 15, 64, 192, 477, 954, 1600, 2240, 2651, 2651, 2240, 1600, 954, 477, 192, 64, 15, 3, 0, 0, 0],
        23: [0, 0, 1, 4, 22, 77, 254, 627, 1353, 2371, 3586, 4522, 4940, 4522, 3586, 2371, 1353, 627, 254, 77, 22, 4, 1, 0],
    },
    1: {
        1: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        2: [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        3: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        4: [1, 1, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        5: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        6: [1, 1, 3, 3, 3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        7: [0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        8: [1, 1, 4, 5, 8, 5, 4, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        9: [0, 0, 0, 3, 4, 4, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        10: [1, 1, 5, 8, 16, 16, 16, 8, 5, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        11: [0, 0, 0, 5, 10, 16, 16, 10, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        12: [1, 1, 6, 12, 29, 38, 50, 38, 29, 12, 6, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        13: [0, 0, 0, 8, 20, 42, 56, 56, 42, 20, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        14: [1, 1, 7, 16, 47, 79, 126, 133, 126, 79, 47, 16, 7, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        15: [0, 0, 0, 12, 35, 90, 150, 197, 197, 150, 90, 35, 12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        16: [1, 1, 8, 21, 72, 147, 280, 375, 440, 375, 280, 147, 72, 21, 8, 1, 1, 0, 0, 0, 0, 0, 0, 0],
        17: [0, 0, 0, 16, 56, 168, 336, 544, 680, 680, 544, 336, 168, 56, 16, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        18: [1, 1, 9, 27, 104, 252, 561, 912, 1282, 1387, 1282, 912, 561, 252, 104, 27, 9, 1, 1, 0, 0, 0, 0, 0],
        19: [0, 0, 0, 21, 84, 288, 672, 1284, 1926, 2368, 2368, 1926, 1284, 672, 288, 84, 21, 0, 0, 0, 0, 0, 0, 0],
        20: [1, 1, 10, 33, 145, 406, 1032, 1980, 3260, 4262, 4752, 4262, 3260, 1980, 1032, 406, 145, 33, 10, 1, 1, 0, 0, 0],
        21: [0, 0, 0, 27, 120, 462, 1233, 2709, 4740, 6895, 8272, 8272, 6895, 4740, 2709, 1233, 462, 120, 27, 0, 0, 0, 0, 0],
        22: [1, 1, 11, 40, 195, 621, 1782, 3936, 7440, 11410, 14938, 16159, 14938, 11410, 7440, 3936, 1782, 621, 195, 40, 11, 1, 1, 0],
        23: [0, 0, 0, 33, 165, 704, 2112, 5247, 10494, 17600, 24640, 29162, 29162, 24640, 17600, 10494, 5247, 2112, 704, 165, 33, 0, 0, 0],
    },
    2: {
        1: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        2: [-1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        3: [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        4: [-1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        5: [1, 1, 3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        6: [-1, -1, -2, -2, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        7: [2, 2, 6, 5, 6, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        8: [-2, -2, -4, -4, -4, -4, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        9: [2, 3, 10, 11, 18, 11, 10, 3, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        10: [-2, -2, -6, -3, -4, -4, -3, -6, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        11: [2, 3, 15, 19, 39, 36, 39, 19, 15, 3, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        12: [-2, -2, -8, -1, 1, 10, 10, 1, -1, -8, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        13: [3, 4, 21, 34, 80, 96, 130, 96, 80, 34, 21, 4, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        14: [-3, -3, -11, 1, 12, 56, 76, 76, 56, 12, 1, -11, -3, -3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        15: [3, 5, 28, 52, 146, 220, 353, 358, 353, 220, 146, 52, 28, 5, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        16: [-3, -3, -14, 10, 42, 168, 293, 405, 405, 293, 168, 42, 10, -14, -3, -3, 0, 0, 0, 0, 0, 0, 0, 0],
        17: [3, 5, 36, 73, 241, 448, 846, 1090, 1300, 1090, 846, 448, 241, 73, 36, 5, 3, 0, 0, 0, 0, 0, 0, 0],
        18: [-3, -3, -17, 21, 95, 393, 814, 1386, 1742, 1742, 1386, 814, 393, 95, 21, -17, -3, -3, 0, 0, 0, 0, 0, 0],
        19: [4, 6, 45, 105, 384, 840, 1851, 2904, 4098, 4370, 4098, 2904, 1851, 840, 384, 105, 45, 6, 4, 0, 0, 0, 0, 0],
        20: [-4, -4, -21, 33, 174, 792, 1899, 3795, 5742, 7114, 7114, 5742, 3795, 1899, 792, 174, 33, -21, -4, -4, 0, 0, 0, 0],
        21: [4, 7, 55, 141, 582, 1473, 3702, 6885, 11322, 14630, 16390, 14630, 11322, 6885, 3702, 1473, 582, 141, 55, 7, 4, 0, 0, 0],
        22: [-4, -4, -25, 56, 300, 1452, 3975, 9060, 15960, 23432, 28154, 28154, 23432, 15960, 9060, 3975, 1452, 300, 56, -25, -4, -4, 0, 0],
        23: [4, 7, 66, 181, 841, 2442, 6912, 14865, 28050, 42595, 55839, 60172, 55839, 42595, 28050, 14865, 6912, 2442, 841, 181, 66, 7, 4, 0],
    },
    3: {
        1: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        2: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        3: [-1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        4: [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        5: [-1, -2, -2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        6: [2, 2, 5, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        7: [-3, -4, -7, -7, -4, -3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        8: [4, 5, 12, 11, 12, 5, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        9: [-5, -7, -16, -19, -19, -16, -7, -5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        10: [6, 8, 24, 24, 37, 24, 24, 8, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        11: [-6, -10, -30, -35, -50, -50, -35, -30, -10, -6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        12: [7, 11, 41, 45, 82, 70, 82, 45, 41, 11, 7, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        13: [-9, -14, -50, -65, -110, -120, -120, -110, -65, -50, -14, -9, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        14: [11, 16, 65, 82, 167, 160, 226, 160, 167, 82, 65, 16, 11, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        15: [-12, -19, -77, -107, -212, -245, -306, -306, -245, -212, -107, -77, -19, -12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        16: [13, 21, 96, 126, 295, 315, 498, 420, 498, 315, 295, 126, 96, 21, 13, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        17: [-14, -24, -112, -156, -364, -448, -648, -700, -700, -648, -448, -364, -156, -112, -24, -14, 0, 0, 0, 0, 0, 0, 0, 0],
        18: [16, 26, 136, 184, 486, 560, 984, 928, 1244, 928, 984, 560, 486, 184, 136, 26, 16, 0, 0, 0, 0, 0, 0, 0],
        19: [-18, -30, -156, -228, -588, -756, -1260, -1428, -1680, -1680, -1428, -1260, -756, -588, -228, -156, -30, -18, 0, 0, 0, 0, 0, 0],
        20: [20, 33, 185, 267, 758, 924, 1805, 1848, 2718, 2320, 2718, 1848, 1805, 924, 758, 267, 185, 33, 20, 0, 0, 0, 0, 0],
        21: [-22, -37, -210, -378, -903, -1200, -2247, -2667, -3570, -3790, -3790, -3570, -2667, -2247, -1200, -903, -318, -210, -37, -22, 0, 0, 0, 0],
        22: [24, 40, 245, 360, 1130, 1440, 3060, 3360, 5410, 5040, 6510, 5040, 5410, 3360, 3060, 1440, 1130, 360, 245, 40, 24, 0, 0, 0],
        23: [-25, -44, -275, -418, -1320, -1815, -3729, -4620, -6930, -7682, -8778, -8778, -7682, -6930, -4620, -3729, -1815, -1320, -418, -275, -44, -25, 0, 0],
    },
}
