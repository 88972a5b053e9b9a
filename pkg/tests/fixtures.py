"""Frozen reference data for the three worked examples.

Every matrix and vector below is transcribed from the published tables for
the octahedron, cube, and mutetrahedron covers.  Tests compare freshly
computed objects against these literals; known misprints in the source
tables are kept verbatim here and flagged where the tests document them.

Vector coordinates follow the curve bases used throughout:

  octahedron     (s1, s4, s7, s10, z1, z2, z3, z6)
  cube           (s1, s2, s3, s5, s8, s9, z1, z2, z3, z4, z5, z8,
                  e1, e2, e3, e4, e6, e8)
  mutetrahedron  (s1, s3, s4, s6, s8, z1, z3, z4, z6, z8)

where s* are the horizontal/diagonal curves, z* the second family, and e*
the slope-one family on the cube.  Matrices act on column vectors.
"""

from fractions import Fraction as F

# ---------------------------------------------------------------------------
# octahedron cover
# ---------------------------------------------------------------------------

OCT_CURVES = ["s1", "s4", "s7", "s10", "z1", "z2", "z3", "z6"]

_OCT_J = [
    [1, 1, 1, 0],
    [1, 0, 1, 1],
    [1, 1, 0, 1],
    [0, 1, 1, 1],
]

OCT_OMEGA = (
    [[0] * 4 + row for row in _OCT_J]
    + [[-x for x in row] + [0] * 4 for row in _OCT_J]
)

# automorphism generators as printed
OCT_PI1 = "(1,3,2)(4,10,9)(5,11,7)(6,12,8)"
OCT_PI2 = "(1,6,11)(2,4,12)(3,5,10)(7,8,9)"

OCT_RHO1 = [
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
]

OCT_RHO2 = [
    [0, 0, 0, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
]

# restrictions of the generators to the span of {s1-s10, s4-s10, s7-s10}
OCT_RHO1_Z1 = [[1, 0, 0], [0, 0, 1], [-1, -1, -1]]
OCT_RHO2_Z1 = [[-1, -1, -1], [1, 0, 0], [0, 0, 1]]

# full-homology action of the affine elements with derivative words
# T^3 and S^-1 T, written as columns over the curve basis.
# T^3: s_i -> s_i, z1 -> s1+s4+s7+z1, z2 -> s1+s7+s10+z2,
#      z3 -> s1+s4+s10+z3, z6 -> s4+s7+s10+z6.
OCT_AT3_FULL = [
    [1, 0, 0, 0, 1, 1, 1, 0],
    [0, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 0, 1],
    [0, 0, 0, 1, 0, 1, 1, 1],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
]

# S^-1 T: s1 -> s7-z3, s4 -> s10-z1, s7 -> s4-z2, s10 -> s1-z6,
#         z1 -> s1, z2 -> s10, z3 -> s4, z6 -> s7.
OCT_AST_FULL = [
    [0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 0, 0, 1],
    [0, 1, 0, 0, 0, 1, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0],
]

# zero-holonomy restrictions as printed, ordered basis
# {S1, S4, S7, Z2, Z3, Z6} with S_i = s_i - s10 and Z_j = z1 - z_j.
OCT_AT3_ZERO = [
    [1, 0, 0, 0, 0, 1],
    [0, 1, 0, 1, 0, 0],
    [0, 0, 1, 0, 1, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
]

# The printed table for the second generator disagrees with its own
# full-homology column equations in exactly three entries -- [0][4] and
# [1][4] should be 1 and -1 (the z1 - z3 column) and [5][1] should be -1
# (the s4 - s10 column).  As printed the matrix is singular, so it cannot
# be the action of any affine element; tests document the misprint.
OCT_AST_ZERO = [
    [-1, -1, -1, 1, 0, 1],
    [0, 0, 1, 0, 0, 0],
    [1, 0, 0, 0, 0, -1],
    [0, 0, 1, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [-1, 0, -1, 0, 0, 0],
]

# ---------------------------------------------------------------------------
# mutetrahedron cover
# ---------------------------------------------------------------------------

MUT_CURVES = ["s1", "s3", "s4", "s6", "s8", "z1", "z3", "z4", "z6", "z8"]

_MUT_J = [
    [-1, 0, -1, -1, 0],
    [-1, -1, 0, -1, 0],
    [-1, -1, -1, 0, 0],
    [0, -1, -1, -1, -1],
    [0, 0, 0, -1, -1],
]

MUT_OMEGA = (
    [[0] * 5 + row for row in _MUT_J]
    + [[-_MUT_J[j][i] for j in range(5)] + [0] * 5 for i in range(5)]
)

MUT_PI1 = ("(1,4)(2,5)(3,6)(7,10)(8,11)(9,12)(13,16)(14,17)(15,18)"
           "(19,22)(20,23)(21,24)")
MUT_PI2 = ("(1,8)(2,9)(3,10)(4,11)(5,12)(6,7)(13,24)(14,19)(15,20)"
           "(16,21)(17,22)(18,23)")
MUT_PI3 = ("(1,18)(2,13)(3,14)(4,15)(5,16)(6,17)(7,22)(8,23)(9,24)"
           "(10,19)(11,20)(12,21)")


def _blockdiag(a, b):
    n, m = len(a), len(b)
    out = [row + [0] * m for row in a]
    out += [[0] * n + row for row in b]
    return out


MUT_RHO1 = _blockdiag(
    [[0, 0, 1, 0, 1],
     [0, 0, 0, 1, 0],
     [1, 0, 0, 0, -1],
     [0, 1, 0, 0, 0],
     [0, 0, 0, 0, 1]],
    [[0, 0, 1, 0, -1],
     [0, 0, 0, 1, 0],
     [1, 0, 0, 0, 1],
     [0, 1, 0, 0, 0],
     [0, 0, 0, 0, 1]],
)

MUT_RHO2 = _blockdiag(
    [[0, 0, 1, 0, 1],
     [0, 1, 0, 0, 0],
     [0, 0, -1, 0, 0],
     [0, 0, 0, 1, 0],
     [1, 0, 1, 0, 0]],
    [[0, 0, -1, 0, 1],
     [0, 0, 0, 1, 0],
     [0, 0, 1, 0, 0],
     [0, 1, 0, 0, 0],
     [1, 0, 1, 0, 0]],
)

# As printed, the second block repeats the first verbatim; the tests show
# that no order-two map commuting with the other two generators can have
# this pair of blocks, and compare against the corrected block below.
MUT_RHO3_BLOCK = [
    [1, 1, 0, 1, 0],
    [0, 0, 0, -1, 0],
    [-1, 0, 0, 0, 1],
    [0, -1, 0, 0, 0],
    [1, 1, 1, 1, 0],
]

MUT_RHO3 = _blockdiag(MUT_RHO3_BLOCK, MUT_RHO3_BLOCK)

MUT_RHO3_ZETA_FIXED = [
    [0, 0, -1, 0, 1],
    [0, 0, 0, -1, 0],
    [0, 1, 1, 1, 0],
    [0, -1, 0, 0, 0],
    [1, 1, 1, 1, 0],
]

# zero-holonomy actions as printed, ordered basis
# {S1, S3, S4, S6, Z1, Z3, Z4, Z6} with S_i = s_i - s8, Z_i = z_i - z8.
MUT_AST_ZERO = [
    [0, 0, 0, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, -1, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1, 0, 1, 0],
    [0, 0, -1, 0, 1, 0, 1, 1],
    [0, 1, 0, 0, 0, 0, -1, 0],
    [1, 0, 1, 0, -1, -1, -1, -1],
    [0, 0, 0, 1, 0, 1, 1, 1],
]

MUT_ATST_ZERO = [
    [1, 0, 1, 0, -1, 0, -1, 0],
    [0, 1, 0, 0, 0, -1, -1, -1],
    [0, 0, -1, 0, 1, -1, 1, 2],
    [0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, -1, -1],
    [0, 0, 0, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, -1, 0, -1, 0],
]

# full-homology action of the element with derivative word T S T^-1,
# columns over (s1, s3, s4, s6, s8, z1, z3, z4, z6, z8).
MUT_ATST_FULL = [
    [1, 0, 1, 0, 0, -2, -1, -2, -1, -1],
    [0, 1, 0, 0, 0, F(1, 2), F(-1, 2), F(-1, 2), F(-1, 2), F(1, 2)],
    [0, 0, -1, 0, 0, F(1, 2), F(-3, 2), F(1, 2), F(3, 2), F(-1, 2)],
    [0, 0, 0, 1, 0, F(-1, 2), F(-1, 2), F(1, 2), F(-1, 2), F(-1, 2)],
    [0, 0, 1, 0, 1, F(-3, 2), F(1, 2), F(-3, 2), F(-5, 2), F(-3, 2)],
    [0, 0, 0, 0, 0, F(1, 2), F(1, 2), F(-1, 2), F(-1, 2), F(1, 2)],
    [0, 0, 0, 0, 0, F(1, 2), F(1, 2), F(1, 2), F(1, 2), F(-1, 2)],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, F(-1, 2), F(1, 2), F(-1, 2), F(1, 2), F(1, 2)],
    [0, 0, 0, 0, 0, F(1, 2), F(-1, 2), F(1, 2), F(1, 2), F(1, 2)],
]

# simultaneous eigenspaces of (rho(pi1), rho(pi2), rho(pi3)) with the
# printed spanning vectors, in curve coordinates.
MUT_EIGENSPACES = [
    ((-1, -1, 1), [[-1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
                   [0, 0, 0, 0, 0, 0, -1, 0, 1, 0]]),
    ((-1, 1, 1), [[0, -1, 0, 1, 0, 0, 0, 0, 0, 0],
                  [0, 0, 0, 0, 0, -1, 0, 1, 0, 0]]),
    ((1, -1, -1), [[0, 0, -1, 0, 1, 0, 0, 0, 0, 0],
                   [0, 0, 0, 0, 0, -1, 0, 0, 0, 1]]),
    ((1, 1, -1), [[-1, 1, 0, 1, -1, 0, 0, 0, 0, 0],
                  [0, 0, 0, 0, 0, 0, 1, -1, 1, -1]]),
    ((1, 1, 1), [[-1, 0, 0, 0, -1, 0, 0, 0, 0, 0],
                 [0, 0, 0, 0, 0, 0, 0, -1, 0, -1]]),
]

# ---------------------------------------------------------------------------
# cube cover
# ---------------------------------------------------------------------------

CUBE_CURVES = ["s1", "s2", "s3", "s5", "s8", "s9",
               "z1", "z2", "z3", "z4", "z5", "z8",
               "e1", "e2", "e3", "e4", "e6", "e8"]


def _cvec(pairs):
    out = [0] * 18
    for name, value in pairs:
        out[CUBE_CURVES.index(name)] = value
    return out


CUBE_PI1 = ("(1,13)(2,14)(3,15)(4,16)(5,11)(6,12)(7,9)(8,10)"
            "(17,23)(18,24)(19,21)(20,22)")
CUBE_PI2 = ("(1,14)(2,15)(3,16)(4,13)(5,7)(6,8)(9,22)(10,23)(11,24)"
            "(12,21)(17,19)(18,20)")
CUBE_PI3 = ("(1,23,5)(2,24,6)(3,21,7)(4,22,8)(9,19,15)(10,20,16)"
            "(11,17,13)(12,18,14)")

# intersection-form blocks as printed; the printed assembly is
#   [[0, -A, -B], [A^T, 0, -C], [B^T, C^T, 0]].
CUBE_OMEGA_A = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0],
]

CUBE_OMEGA_B = [
    [1, 0, 0, 1, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 1],
    [0, 1, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 1],
]

CUBE_OMEGA_C = [
    [-1, 0, 0, -1, -1, 0],
    [-1, -1, 0, 0, -1, 0],
    [0, -1, -1, 0, -1, 0],
    [0, 0, -1, -1, -1, 0],
    [0, 0, -1, -1, 0, -1],
    [0, -1, -1, 0, 0, -1],
]

# Veech-group generators as printed (2x2 parts)
CUBE_G1 = [[1, 2], [0, 1]]
CUBE_G2 = [[5, -2], [3, -1]]
CUBE_G3 = [[3, -2], [5, -3]]

# decomposition data: printed spanning vectors in curve coordinates
CUBE_E1 = _cvec([("s1", 2), ("s3", -2), ("z1", 1), ("z2", -1), ("z3", -1),
                 ("z4", -1), ("z8", -2), ("e2", 2), ("e3", 2), ("e6", 1),
                 ("e8", 1)])
CUBE_E2 = _cvec([("e1", -1), ("e2", -1), ("e3", -1), ("e4", -1),
                 ("e6", -1), ("e8", -1)])

CUBE_V1 = _cvec([("s1", 8), ("s2", -2), ("s3", -10), ("s5", -4), ("s8", -4),
                 ("z1", 7), ("z2", -3), ("z3", -2), ("z4", -2), ("z5", 1),
                 ("z8", -9), ("e2", 3), ("e3", 8), ("e4", -7), ("e6", -1),
                 ("e8", 3)])
CUBE_R3V1 = _cvec([("s1", -2), ("s2", -2), ("s5", 2), ("s8", 2),
                   ("z1", -1), ("z2", -1), ("z5", 1), ("z8", 1),
                   ("e1", -2), ("e3", -4), ("e6", 4), ("e8", 2)])
CUBE_V2 = _cvec([("e1", 1), ("e2", -1), ("e3", 1), ("e4", -1)])
CUBE_R3V2 = _cvec([("e1", -1), ("e3", -1), ("e6", 1), ("e8", 1)])

CUBE_L_RHO1 = [[-1, 1], [0, 1]]
CUBE_L_RHO2 = [[1, 0], [0, 1]]
CUBE_L_RHO3 = [[0, -1], [1, -1]]

CUBE_H1_BASIS = [
    _cvec([("e1", 1), ("e2", -1), ("e3", -1), ("e4", 1), ("e6", -1),
           ("e8", 1)]),
    _cvec([("e1", 1), ("e2", 1), ("e3", -1), ("e4", -1), ("e6", 1),
           ("e8", -1)]),
    _cvec([("e1", -1), ("e2", 1), ("e3", 1), ("e4", -1), ("e6", -1),
           ("e8", 1)]),
]

CUBE_H2_BASIS = [
    _cvec([("s1", 1), ("s3", -1)]),
    _cvec([("s1", 1), ("s3", -1), ("z1", 1), ("z2", -1), ("z5", 1),
           ("z8", -1), ("e2", 1), ("e4", -1)]),
    _cvec([("s1", 4), ("s3", -4), ("z1", 3), ("z2", -1), ("z5", 1),
           ("z8", -3), ("e1", -1), ("e2", 2), ("e3", 1), ("e4", -2),
           ("e6", -1), ("e8", 1)]),
]

CUBE_H1_RHO1 = [[-1, 1, 0], [0, 1, 0], [0, 1, -1]]
CUBE_H1_RHO2 = [[0, 1, -1], [1, 0, -1], [0, 0, -1]]
CUBE_H1_RHO3 = [[1, 0, -1], [0, 0, -1], [0, 1, -1]]

CUBE_H2_RHO1 = [[-1, 0, 0], [0, 1, 0], [0, 0, -1]]
CUBE_H2_RHO2 = [[0, 1, 0], [1, 0, 0], [0, 0, -1]]
CUBE_H2_RHO3 = [[F(1, 2), F(-1, 2), 2],
                [F(1, 2), F(-1, 2), -2],
                [F(1, 4), F(1, 4), 0]]

# printed conjugator between the H-restrictions
CUBE_KH_PRINTED = [[1, 0, -1], [1, 2, 1], [2, 0, 2]]

CUBE_P1_BASIS = [
    _cvec([("s1", 1), ("s2", -1), ("s5", -1), ("s8", 1)]),
    _cvec([("s1", -1), ("s2", 1), ("s5", -1), ("s8", 1), ("z1", -1),
           ("z2", 1), ("z5", -1), ("z8", 1), ("e2", -1), ("e4", 1)]),
    _cvec([("s1", 12), ("s2", -4), ("s3", -12), ("s5", -2), ("s8", -2),
           ("s9", -4), ("z1", 9), ("z2", -5), ("z3", -2), ("z4", -2),
           ("z5", 3), ("z8", -11), ("e1", -3), ("e2", 8), ("e3", 5),
           ("e4", -6), ("e6", -1), ("e8", 3)]),
]

CUBE_P2_BASIS = [
    _cvec([("z1", -1), ("z2", 1), ("z3", -1), ("z4", 1)]),
    _cvec([("s1", 2), ("s3", -2), ("z1", 2), ("z3", -1), ("z4", -1),
           ("z5", 1), ("z8", -1), ("e1", -1), ("e2", 1), ("e3", 1),
           ("e4", -1)]),
    _cvec([("z3", -1), ("z4", 1), ("z5", -1), ("z8", 1)]),
]

CUBE_P1_RHO1 = [[0, -1, 2], [0, 1, 0], [F(1, 2), F(1, 2), 0]]
CUBE_P1_RHO2 = [[0, 1, 0], [1, 0, 0], [0, 0, -1]]
CUBE_P1_RHO3 = [[0, -1, 2], [0, 1, 0], [F(-1, 2), F(1, 2), -1]]

CUBE_P2_RHO1 = [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
CUBE_P2_RHO2 = [[-1, 0, 0], [0, -1, 0], [0, 0, 1]]
CUBE_P2_RHO3 = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]

# printed conjugator between the P-restrictions
CUBE_KP_PRINTED = [[1, 1, 2], [0, 2, 0], [-1, 1, 2]]

# full 18x18 automorphism actions and 16x16 zero-holonomy affine
# actions for the cube, exactly as printed

CUBE_RHO1 = [
    [0, 0, 1, -2, 4, -1, 0, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 2, -5, 1, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, F(-3, 2), 3, F(-1, 2), 0, -2, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, F(1, 2), -2, F(-1, 2), 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, F(-1, 2), 1, F(1, 2), 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, F(3, 2), -4, F(1, 2), 1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, F(1, 2), -1, F(1, 2), 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, -1, 3, 0, 0, -1, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, F(-1, 2), 2, F(-1, 2), 0, -1, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, -2, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, F(1, 2), 0, F(1, 2), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, F(-1, 2), 1, F(-1, 2), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
]

CUBE_RHO2 = [
    [0, 1, -1, -1, -1, 4, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, -5, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, F(-1, 2), F(-3, 2), 3, -2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, F(-1, 2), F(1, 2), -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, F(1, 2), F(-1, 2), 1, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, F(1, 2), F(3, 2), -4, 2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, F(1, 2), F(1, 2), -1, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, -1, 3, -1, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, F(-1, 2), F(-1, 2), 2, -1, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 1, 0, 1, -2, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, F(1, 2), F(1, 2), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, F(-1, 2), F(-1, 2), 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
]

CUBE_RHO3 = [
    [0, 4, -2, 1, -1, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -5, 2, 0, 1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, F(7, 2), F(-3, 2), 0, -1, 0, -2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, F(-3, 2), F(1, 2), 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, F(1, 2), F(-1, 2), 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, F(-9, 2), F(3, 2), 0, 1, 0, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, F(-3, 2), F(1, 2), 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 3, -1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, F(5, 2), F(-1, 2), 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, -2, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, F(-1, 2), F(1, 2), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, F(3, 2), F(-1, 2), 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
]

CUBE_ALPHA_G1 = [
    [1, 0, 0, 0, 0, 0, -1, -7, -8, -1, F(-1, 3), F(-19, 3), F(-13, 3), F(-19, 3), F(-16, 3), F(-4, 3)],
    [0, 1, 0, 0, 0, 0, 1, 1, 2, 1, F(4, 3), F(7, 3), F(4, 3), F(7, 3), F(1, 3), F(1, 3)],
    [0, 0, 1, 0, 0, 0, 0, 8, 8, 0, F(1, 3), F(22, 3), F(13, 3), F(22, 3), F(13, 3), F(1, 3)],
    [0, 0, 0, 1, 0, 0, 1, 2, 1, 1, F(1, 3), F(7, 3), F(1, 3), F(7, 3), F(4, 3), F(4, 3)],
    [0, 0, 0, 0, 1, 0, -1, 0, 1, -1, -1, 1, -1, 1, 0, 0],
    [0, 0, 0, 0, 0, -1, -1, F(-11, 2), F(-15, 2), -1, F(-5, 3), F(-31, 6), F(-11, 3), F(-43, 6), F(-31, 6), F(-7, 6)],
    [0, 0, 0, 0, 0, 0, 0, F(3, 2), F(7, 2), 1, 0, F(3, 2), 2, F(7, 2), F(1, 2), F(1, 2)],
    [0, 0, 0, 0, 0, 0, 0, 2, 1, 0, F(1, 3), F(4, 3), F(1, 3), F(4, 3), F(1, 3), F(1, 3)],
    [0, 0, 0, 0, 0, 0, 0, 1, 2, 0, F(1, 3), F(4, 3), F(1, 3), F(4, 3), F(1, 3), F(1, 3)],
    [0, 0, 0, 0, 0, 0, 1, F(-1, 2), F(-5, 2), 0, F(1, 3), F(-1, 6), F(-5, 3), F(-13, 6), F(-1, 6), F(-1, 6)],
    [0, 0, 0, 0, 0, 1, 1, F(5, 2), F(5, 2), 0, 2, F(5, 2), 1, F(5, 2), F(5, 2), F(1, 2)],
    [0, 0, 0, 0, 0, -1, 0, -4, -6, -1, -1, -3, -3, -6, -3, -1],
    [0, 0, 0, 0, 0, -1, -1, F(-7, 2), F(-7, 2), 0, F(-4, 3), F(-23, 6), F(-1, 3), F(-23, 6), F(-17, 6), F(-5, 6)],
    [0, 0, 0, 0, 0, 1, 0, 3, 5, 1, F(2, 3), F(8, 3), F(8, 3), F(17, 3), F(8, 3), F(2, 3)],
    [0, 0, 0, 0, 0, 1, 1, F(3, 2), F(3, 2), 0, F(2, 3), F(7, 6), F(2, 3), F(7, 6), F(19, 6), F(1, 6)],
    [0, 0, 0, 0, 0, -1, -1, F(-5, 2), F(-5, 2), 0, -1, F(-5, 2), -1, F(-5, 2), F(-5, 2), F(1, 2)],
]

CUBE_ALPHA_G2 = [
    [0, -2, -1, -5, 1, 0, 8, 7, 1, 6, F(13, 3), F(1, 3), F(13, 3), F(1, 3), F(4, 3), F(4, 3)],
    [-1, 0, -1, 1, 0, 0, -2, -1, -1, -2, F(-7, 3), F(-4, 3), F(-7, 3), F(-4, 3), F(-1, 3), F(-1, 3)],
    [0, 1, 1, 6, -1, 0, -8, -8, 0, -6, F(-16, 3), F(-1, 3), F(-16, 3), F(-1, 3), F(-1, 3), F(-1, 3)],
    [0, 0, 0, 1, 0, 0, -1, -2, -1, -1, F(-7, 3), F(-1, 3), F(-7, 3), F(-1, 3), F(-4, 3), F(-4, 3)],
    [1, 1, 1, 2, 1, 0, -1, 0, 1, -1, 1, 3, 1, 3, 2, 2],
    [0, -2, 0, F(-9, 2), 1, 1, F(15, 2), F(11, 2), 1, F(11, 2), F(25, 6), F(2, 3), F(25, 6), F(2, 3), F(7, 6), F(7, 6)],
    [-1, 1, -1, F(3, 2), 0, 0, F(-7, 2), F(-3, 2), 0, F(-5, 2), F(-5, 2), -1, F(-5, 2), -1, F(-1, 2), F(-1, 2)],
    [0, -1, 0, 1, -1, 0, -1, -2, 0, -1, F(-7, 3), F(-4, 3), F(-7, 3), F(-4, 3), F(-4, 3), F(-4, 3)],
    [0, 1, 0, 2, 0, 0, -2, -1, 0, -2, F(-1, 3), F(2, 3), F(-1, 3), F(2, 3), F(2, 3), F(2, 3)],
    [0, -1, 0, F(-3, 2), 0, 0, F(5, 2), F(1, 2), -1, F(3, 2), F(1, 6), F(-1, 3), F(1, 6), F(-1, 3), F(-5, 6), F(-5, 6)],
    [1, 0, 0, F(5, 2), -1, -1, F(-5, 2), F(-5, 2), -1, F(-5, 2), F(-3, 2), -1, F(-3, 2), 0, F(-1, 2), F(-1, 2)],
    [0, -1, 1, -3, 1, 1, 6, 4, 0, 4, 4, 2, 5, 2, 2, 2],
    [-1, 0, 0, F(-7, 2), 1, 1, F(7, 2), F(7, 2), 1, F(7, 2), F(17, 6), F(1, 3), F(17, 6), F(-2, 3), F(5, 6), F(5, 6)],
    [0, 1, -1, 2, -1, -1, -5, -3, 0, -3, F(-11, 3), F(-5, 3), F(-14, 3), F(-5, 3), F(-5, 3), F(-5, 3)],
    [1, 1, 1, F(1, 2), 0, -1, F(-3, 2), F(-3, 2), -1, F(-1, 2), F(5, 6), F(4, 3), F(5, 6), F(4, 3), F(5, 6), F(-1, 6)],
    [-1, -1, -1, F(-3, 2), 0, 1, F(5, 2), F(5, 2), 1, F(3, 2), F(1, 2), -1, F(1, 2), -1, F(-3, 2), F(-1, 2)],
]

CUBE_ALPHA_G3 = [
    [-1, 5, -1, 1, 1, 0, -4, 1, -7, -6, 0, 1, 0, 1, -3, -3],
    [0, -1, 0, 1, 0, 0, 0, -1, 1, 0, -1, 0, -1, 0, 1, 1],
    [1, -6, 1, -1, 0, 0, 6, 0, 8, 8, F(1, 3), F(1, 3), F(1, 3), F(1, 3), F(16, 3), F(16, 3)],
    [-1, -2, -1, -1, -1, 0, 1, -1, 0, 1, -2, -3, -2, -3, -1, -1],
    [0, -1, 0, 0, 0, 0, 1, 1, 2, 1, F(4, 3), F(1, 3), F(4, 3), F(1, 3), F(7, 3), F(7, 3)],
    [-1, F(9, 2), F(-1, 2), 0, 1, 0, F(-7, 2), 0, F(-13, 2), F(-9, 2), F(1, 6), F(2, 3), F(1, 6), F(2, 3), F(-17, 6), F(-17, 6)],
    [0, F(-3, 2), F(1, 2), 1, 0, 1, F(3, 2), 0, F(7, 2), F(3, 2), F(1, 2), 1, F(1, 2), 1, F(5, 2), F(5, 2)],
    [0, -2, 0, -1, 0, 0, 2, 0, 1, 2, F(-2, 3), F(-2, 3), F(-2, 3), F(-2, 3), F(1, 3), F(1, 3)],
    [1, -1, 1, 1, 0, 0, 1, 0, 2, 1, F(4, 3), F(4, 3), F(4, 3), F(4, 3), F(7, 3), F(7, 3)],
    [-1, F(1, 2), F(-3, 2), -1, -1, -1, F(-3, 2), -1, F(-7, 2), F(-3, 2), F(-5, 2), -3, F(-5, 2), -3, F(-7, 2), F(-7, 2)],
    [0, F(-5, 2), F(-1, 2), -1, -1, 0, F(3, 2), 0, F(5, 2), F(5, 2), F(-1, 2), -2, F(-1, 2), -1, F(1, 2), F(1, 2)],
    [0, 4, 0, 0, 0, 0, -3, 0, -5, -4, F(1, 3), F(1, 3), F(1, 3), F(1, 3), F(-8, 3), F(-11, 3)],
    [-1, F(5, 2), F(-1, 2), 0, 0, 0, F(-5, 2), 0, F(-7, 2), F(-7, 2), F(-1, 2), 0, F(-1, 2), -1, F(-5, 2), F(-5, 2)],
    [1, -2, 1, 0, 0, 0, 2, 0, 4, 3, F(2, 3), F(2, 3), F(2, 3), F(2, 3), F(5, 3), F(8, 3)],
    [0, F(-1, 2), F(-1, 2), 0, 0, 0, F(1, 2), 0, F(1, 2), F(1, 2), F(1, 6), F(-1, 3), F(-5, 6), F(-1, 3), F(1, 6), F(1, 6)],
    [0, F(3, 2), F(1, 2), 1, 1, 0, F(-3, 2), 0, F(-3, 2), F(-3, 2), F(-1, 6), F(4, 3), F(5, 6), F(4, 3), F(-1, 6), F(-1, 6)],
]

