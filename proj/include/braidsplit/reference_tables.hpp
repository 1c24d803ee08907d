#pragma once

#include <string_view>
#include <vector>

namespace braidsplit::reference {

// Published reference values used by the `tables` verification suite.

/// dim H^k(P_n, Q) for n = 1..9, k = 0..8.
inline const std::vector<std::vector<long>> betti = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 3, 2, 0, 0, 0, 0, 0, 0},
    {1, 6, 11, 6, 0, 0, 0, 0, 0},
    {1, 10, 35, 50, 24, 0, 0, 0, 0},
    {1, 15, 85, 225, 274, 120, 0, 0, 0},
    {1, 21, 175, 735, 1624, 1764, 720, 0, 0},
    {1, 28, 322, 1960, 6769, 13132, 13068, 5040, 0},
    {1, 36, 546, 4536, 22449, 67284, 118124, 109584, 40320},
};

/// dim A_n^k for n = 1..9, k = 0..7.
inline const std::vector<std::vector<long>> a_dims = {
    {1, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0},
    {1, 2, 0, 0, 0, 0, 0, 0},
    {1, 5, 6, 0, 0, 0, 0, 0},
    {1, 9, 26, 24, 0, 0, 0, 0},
    {1, 14, 71, 154, 120, 0, 0, 0},
    {1, 20, 155, 580, 1044, 720, 0, 0},
    {1, 27, 295, 1665, 5104, 8028, 5040, 0},
    {1, 35, 511, 4025, 18424, 48860, 69264, 40320},
};

/// One row of a splitting-measure table: partition, |C|, z, measure text.
struct MeasureRow {
    std::string_view partition;
    long class_size;
    long centralizer;
    std::string_view measure;
};

inline const std::vector<MeasureRow> measures_n4 = {
    {"1,1,1,1", 1, 24, "1/24(1 - 5/z + 6/z^2)"},
    {"2,1,1", 6, 4, "1/4(1 - 1/z)"},
    {"2,2", 3, 8, "1/8(1 - 1/z - 2/z^2)"},
    {"3,1", 8, 3, "1/3(1 + 1/z)"},
    {"4", 6, 4, "1/4(1 + 1/z)"},
};

inline const std::vector<MeasureRow> measures_n5 = {
    {"1,1,1,1,1", 1, 120, "1/120(1 - 9/z + 26/z^2 - 24/z^3)"},
    {"2,1,1,1", 10, 12, "1/12(1 - 3/z + 2/z^2)"},
    {"2,2,1", 15, 8, "1/8(1 - 1/z - 2/z^2)"},
    {"3,1,1", 20, 6, "1/6(1 - 1/z^2)"},
    {"3,2", 20, 6, "1/6(1 - 1/z^2)"},
    {"4,1", 30, 4, "1/4(1 + 1/z)"},
    {"5", 24, 5, "1/5(1 + 1/z + 1/z^2 + 1/z^3)"},
};

/// Decomposition rows: n and the rendered decomposition.
struct DecompositionRow {
    int n;
    std::string_view decomposition;
};

inline const std::vector<DecompositionRow> h1_decompositions = {
    {2, "[2]"},
    {3, "[3] ⊕ [2,1]"},
    {4, "[4] ⊕ [3,1] ⊕ [2,2]"},
    {5, "[5] ⊕ [4,1] ⊕ [3,2]"},
};

inline const std::vector<DecompositionRow> a1_decompositions = {
    {2, "0"},
    {3, "[2,1]"},
    {4, "[3,1] ⊕ [2,2]"},
    {5, "[4,1] ⊕ [3,2]"},
};

inline const std::vector<DecompositionRow> a2_decompositions = {
    {3, "0"},
    {4, "[3,1] ⊕ [2,1,1]"},
    {5, "[4,1] ⊕ [3,2] ⊕ 2[3,1,1] ⊕ [2,2,1]"},
    {6, "[5,1] ⊕ [4,2] ⊕ 2[4,1,1] ⊕ [3,3] ⊕ 2[3,2,1]"},
    {7, "[6,1] ⊕ [5,2] ⊕ 2[5,1,1] ⊕ [4,3] ⊕ 2[4,2,1] ⊕ [3,3,1]"},
    {8, "[7,1] ⊕ [6,2] ⊕ 2[6,1,1] ⊕ [5,3] ⊕ 2[5,2,1] ⊕ [4,3,1]"},
};

/// Stable tails (mu minus its first row) with multiplicities.
struct StableTerm {
    std::vector<int> tail;
    int multiplicity;
};

inline const std::vector<StableTerm> a1_stable_pattern = {{{1}, 1}, {{2}, 1}};

inline const std::vector<StableTerm> a2_stable_pattern = {
    {{1}, 1}, {{2}, 1}, {{1, 1}, 2}, {{3}, 1}, {{2, 1}, 2}, {{3, 1}, 1},
};

}  // namespace braidsplit::reference
