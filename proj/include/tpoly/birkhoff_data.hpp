#ifndef TPOLY_BIRKHOFF_DATA_HPP
#define TPOLY_BIRKHOFF_DATA_HPP

// Embedded data for the 7-dimensional face of the fourth Birkhoff
// polytope cut out by x_{1,1} = x_{4,4} = 0: its 14 vertices, the
// homogenized vector configuration, a Gale transform, the 32 maximal
// simplices of the distinguished triangulation, and the per-facet
// classification ledger it is verified against.

namespace tpoly::b4_data {

inline constexpr int kVertexMatrices[14][4][4] = {
    {{0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {1, 0, 0, 0}},  // X_a
    {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}},  // X_b
    {{0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}},  // X_c
    {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},  // X_d
    {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 0, 0}},  // X_e
    {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}},  // X_f
    {{0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}},  // X_g
    {{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}},  // X_h
    {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}},  // X_i
    {{0, 0, 0, 1}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}},  // X_j
    {{0, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}},  // X_k
    {{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}},  // X_l
    {{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}},  // X_m
    {{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}},  // X_n
};

inline constexpr int kHomogenizedConfig[17][14] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1},
    {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0},
    {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1},
    {0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1},
    {0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

inline constexpr int kGale[6][14] = {
    {0, 0, 1, -1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, -1, 0, 0, -1, 1, 0, 0, 0, 0},
    {0, 1, -1, 0, 1, 0, -1, 0, -1, 0, 1, 0, 0, 0},
    {-1, 1, 0, 0, 1, 0, -1, 0, -1, 0, 0, 1, 0, 0},
    {0, 1, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0},
    {-1, 1, 1, -1, 1, -1, 0, 0, -1, 0, 0, 0, 0, 1},
};

// Vertex labels a..n as indices 0..13, eight per simplex.
inline constexpr int kSimplices[32][8] = {
    {0, 1, 2, 3, 4, 5, 6, 8},  // sigma_1: abcdefgi
    {0, 1, 3, 4, 5, 6, 7, 8},  // sigma_2: abdefghi
    {0, 2, 3, 4, 5, 6, 8, 10},  // sigma_3: acdefgik
    {0, 3, 4, 5, 6, 7, 8, 10},  // sigma_4: adefghik
    {0, 4, 5, 6, 7, 8, 10, 11},  // sigma_5: aefghikl
    {0, 3, 4, 6, 7, 8, 10, 11},  // sigma_6: adeghikl
    {0, 5, 6, 7, 8, 9, 10, 11},  // sigma_7: afghijkl
    {0, 2, 3, 4, 5, 8, 10, 12},  // sigma_8: acdefikm
    {0, 3, 4, 5, 7, 8, 10, 12},  // sigma_9: adefhikm
    {0, 2, 3, 5, 8, 9, 10, 12},  // sigma_10: acdfijkm
    {0, 3, 5, 7, 8, 9, 10, 12},  // sigma_11: adfhijkm
    {0, 4, 5, 7, 8, 10, 11, 12},  // sigma_12: aefhiklm
    {3, 4, 6, 7, 8, 10, 11, 12},  // sigma_13: deghiklm
    {0, 3, 4, 7, 8, 10, 11, 12},  // sigma_14: adehiklm
    {0, 2, 3, 5, 9, 10, 12, 13},  // sigma_15: acdfjkmn
    {0, 3, 5, 7, 9, 10, 12, 13},  // sigma_16: adfhjkmn
    {0, 4, 5, 7, 8, 11, 12, 13},  // sigma_17: aefhilmn
    {0, 5, 7, 8, 10, 11, 12, 13},  // sigma_18: afhiklmn
    {0, 3, 7, 8, 10, 11, 12, 13},  // sigma_19: adhiklmn
    {0, 5, 7, 8, 9, 10, 12, 13},  // sigma_20: afhijkmn
    {0, 3, 7, 8, 9, 10, 12, 13},  // sigma_21: adhijkmn
    {0, 5, 7, 8, 9, 10, 11, 13},  // sigma_22: afhijkln
    {0, 1, 2, 3, 5, 8, 9, 10},  // sigma_23: abcdfijk
    {0, 1, 2, 3, 5, 6, 8, 10},  // sigma_24: abcdfgik
    {0, 1, 5, 6, 7, 8, 9, 10},  // sigma_25: abfghijk
    {0, 1, 6, 7, 8, 9, 10, 11},  // sigma_26: abghijkl
    {0, 1, 3, 5, 7, 8, 9, 10},  // sigma_27: abdfhijk
    {0, 1, 3, 5, 6, 7, 8, 10},  // sigma_28: abdfghik
    {0, 1, 3, 6, 7, 8, 10, 11},  // sigma_29: abdghikl
    {0, 1, 7, 8, 9, 10, 11, 13},  // sigma_30: abhijkln
    {0, 1, 3, 7, 8, 10, 11, 13},  // sigma_31: abdhikln
    {0, 1, 3, 7, 8, 9, 10, 13},  // sigma_32: abdhijkn
};

// Facet ledger: for simplex s (0-based) and dropped slot d, the
// facet omitting the d-th vertex of kSimplices[s] is either shared
// with another simplex (kind 1, value = 0-based simplex) or lies on
// the boundary hyperplane x_{i,j} = 0 (kind 0, value = 4*(i-1)+(j-1)).
inline constexpr int kFacetKind[32][8] = {
    {0, 1, 1, 0, 1, 0, 0, 0},
    {0, 1, 0, 1, 0, 0, 1, 0},
    {0, 1, 0, 1, 0, 1, 0, 1},
    {0, 1, 1, 1, 1, 1, 0, 1},
    {0, 1, 1, 1, 0, 0, 0, 1},
    {1, 1, 1, 1, 0, 0, 0, 1},
    {0, 1, 1, 0, 0, 1, 0, 1},
    {0, 1, 0, 1, 0, 0, 0, 1},
    {0, 1, 1, 1, 1, 0, 0, 1},
    {0, 1, 0, 0, 1, 1, 0, 1},
    {0, 1, 1, 1, 1, 1, 0, 1},
    {0, 1, 1, 0, 0, 1, 1, 1},
    {0, 0, 1, 0, 0, 0, 0, 1},
    {1, 1, 1, 0, 0, 0, 1, 1},
    {0, 1, 0, 0, 0, 0, 0, 1},
    {0, 1, 1, 1, 0, 0, 0, 1},
    {0, 1, 0, 0, 0, 0, 0, 1},
    {0, 1, 0, 0, 1, 1, 1, 1},
    {0, 1, 0, 0, 0, 1, 1, 1},
    {0, 1, 0, 1, 1, 0, 1, 1},
    {0, 1, 0, 1, 1, 0, 1, 1},
    {0, 1, 0, 0, 1, 0, 1, 1},
    {0, 1, 1, 0, 0, 0, 1, 0},
    {0, 1, 1, 0, 0, 1, 0, 1},
    {0, 1, 1, 1, 0, 0, 1, 0},
    {0, 1, 1, 0, 0, 1, 0, 1},
    {0, 1, 1, 1, 1, 0, 1, 0},
    {0, 1, 1, 1, 1, 1, 0, 1},
    {0, 1, 1, 1, 0, 0, 0, 1},
    {0, 1, 0, 0, 1, 0, 1, 1},
    {0, 1, 1, 0, 0, 0, 1, 1},
    {0, 1, 1, 0, 0, 1, 0, 1},
};

inline constexpr int kFacetValue[32][8] = {
    {10, 2, 1, 4, 23, 13, 5, 3},
    {10, 3, 14, 27, 8, 5, 0, 3},
    {10, 3, 4, 23, 13, 7, 6, 0},
    {10, 4, 27, 5, 8, 2, 6, 1},
    {1, 6, 5, 11, 4, 6, 14, 3},
    {12, 4, 28, 13, 13, 6, 8, 3},
    {1, 25, 21, 4, 9, 4, 14, 24},
    {10, 8, 11, 9, 13, 6, 5, 2},
    {10, 11, 10, 13, 7, 6, 5, 3},
    {10, 10, 11, 2, 14, 7, 5, 22},
    {10, 19, 20, 9, 15, 8, 5, 26},
    {1, 17, 13, 11, 6, 16, 8, 4},
    {1, 7, 13, 13, 6, 8, 10, 5},
    {12, 11, 18, 13, 6, 8, 8, 5},
    {12, 15, 11, 2, 6, 5, 9, 9},
    {12, 19, 20, 14, 6, 5, 9, 10},
    {1, 17, 8, 11, 6, 5, 14, 11},
    {1, 18, 11, 6, 16, 19, 21, 11},
    {7, 17, 2, 6, 8, 20, 30, 13},
    {1, 20, 11, 15, 17, 5, 21, 10},
    {7, 19, 2, 15, 18, 5, 31, 10},
    {1, 29, 11, 9, 17, 14, 19, 6},
    {10, 9, 26, 4, 2, 9, 23, 5},
    {10, 2, 27, 4, 13, 22, 9, 0},
    {10, 6, 25, 26, 4, 9, 27, 14},
    {7, 6, 29, 4, 9, 28, 14, 24},
    {10, 10, 24, 31, 22, 9, 27, 5},
    {10, 3, 24, 28, 26, 23, 9, 1},
    {7, 5, 25, 30, 13, 9, 8, 27},
    {7, 21, 2, 9, 30, 14, 31, 25},
    {7, 18, 29, 2, 9, 8, 31, 28},
    {7, 20, 29, 2, 9, 30, 5, 26},
};

}  // namespace tpoly::b4_data

#endif
