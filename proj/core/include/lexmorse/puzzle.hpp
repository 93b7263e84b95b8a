#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lexmorse {

// n_1..n_k with refinements b_i (ascending parts), an alternative split c of
// n_k, and blocks B_1..B_k redistributing the parts of b_1..b_{k-1} and c.
struct PuzzleSolution {
    std::vector<int> n;
    std::vector<std::vector<int>> b;  // b[k-1] = {b_k1, b_k2}
    std::pair<int, int> c;
    std::vector<std::vector<int>> blocks;  // ascending within each block
};

struct PuzzleOptions {
    int max_total = 0;
    int max_parts = 0;
    // Parts larger than one must be distinct among all b, and among the
    // b_i (i < k) together with c.
    bool distinct = false;
};

struct PuzzleReport {
    std::vector<PuzzleSolution> solutions;
    std::uint64_t candidates = 0;  // (n, b, c) tuples whose redistribution was searched
};

// Condition 2: b_k1 < b_k2, c_k1 < c_k2, equal sums, and b_k1 > c_k1.
bool puzzle_split_condition(std::pair<int, int> b, std::pair<int, int> c);

// Exhaustive search over k = 3..max_parts with sum n_i <= max_total. Blocks
// i < k are enumerated as a multiset, so each solution is reported once up to
// permuting those indices. Output order is deterministic.
PuzzleReport puzzle_search(const PuzzleOptions& opts);

}  // namespace lexmorse
