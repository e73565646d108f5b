#pragma once

// Printed values used as ground truth: the running example and its images,
// the two small sets listed in full, and the count tables.

#include <cstdint>
#include <vector>

namespace fixtures {

using Rows = std::vector<std::vector<int>>;

inline const Rows kMStar = {{1, 0, 0, 0}, {0, 0, 1, 0}, {-1, 1, 0, 0}, {1, 0, -1, 1}};
inline const Rows kTStar = {{1}, {1, 3}, {0, 2, 3}, {0, 1, 2, 4}};
inline const Rows kCStar = {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {2, 1, 1, 0, 0}, {2, 2, 1, 0, 0}, {3, 2, 1, 1, 0}};
inline const Rows kHStar = {{0, 1, 2, 3, 4}, {1, 2, 3, 4, 3}, {2, 3, 2, 3, 2}, {3, 4, 3, 2, 3}, {4, 3, 4, 3, 2}};
// Same height function with h(2,2) raised by 2: the other half of the
// single-square example.
inline const Rows kHStarRaised = {{0, 1, 2, 3, 4}, {1, 2, 3, 4, 3}, {2, 3, 4, 3, 2}, {3, 4, 3, 2, 3}, {4, 3, 4, 3, 2}};

inline const std::vector<Rows> kPasm22 = {
    {{0, 0}, {0, 0}}, {{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}, {{0, 0}, {1, 0}},
    {{0, 0}, {0, 1}}, {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, {{1, 0}, {-1, 1}},
};

inline const std::vector<Rows> kPasm23 = {
    {{0, 0, 0}, {0, 0, 0}},  {{1, 0, 0}, {0, 0, 0}},  {{0, 1, 0}, {0, 0, 0}},   {{0, 0, 1}, {0, 0, 0}},
    {{0, 0, 0}, {1, 0, 0}},  {{0, 0, 0}, {0, 1, 0}},  {{0, 0, 0}, {0, 0, 1}},   {{1, 0, 0}, {0, 1, 0}},
    {{1, 0, 0}, {0, 0, 1}},  {{0, 1, 0}, {1, 0, 0}},  {{0, 1, 0}, {0, 0, 1}},   {{0, 0, 1}, {1, 0, 0}},
    {{0, 0, 1}, {0, 1, 0}},  {{1, 0, 0}, {-1, 1, 0}}, {{1, 0, 0}, {-1, 0, 1}},  {{0, 1, 0}, {0, -1, 1}},
    {{0, 1, 0}, {1, -1, 1}},
};

// pasm_table[m-1][n-1]
inline const std::vector<std::vector<std::uint64_t>> kPasmTable = {
    {2, 3, 4, 5, 6, 7},
    {3, 8, 17, 31, 51, 78},
    {4, 17, 62, 184, 462, 1022},
    {5, 31, 184, 924, 3809, 13197},
    {6, 51, 462, 3809, 26394, 150777},
    {7, 78, 1022, 13197, 150777, 1442764},
};

// nt_table[n-1][t]
inline const std::vector<std::vector<std::uint64_t>> kSumTable = {
    {1, 1},
    {1, 5, 2},
    {1, 19, 35, 7},
    {1, 69, 425, 387, 42},
    {1, 251, 4845, 13861, 7007, 429},
    {1, 923, 55897, 458263, 709242, 210912, 7436},
};

inline const std::vector<std::uint64_t> kAsmCounts = {1, 2, 7, 42, 429, 7436};

// Rowmotion on J(P(3,5)): size -> number of orbits.
inline const std::vector<std::pair<std::size_t, std::size_t>> kRowOrbits35 = {
    {2, 2}, {8, 27}, {9, 2}, {14, 1}, {18, 1}, {36, 1}, {46, 1}, {52, 1}, {58, 1},
};
inline constexpr std::uint64_t kRowOrder35 = 4370184;

}  // namespace fixtures
