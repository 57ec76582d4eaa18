#pragma once

// Brute-force reference implementations used only by the tests. These
// re-derive the statistics from their definitions, independently of the
// library code paths they are checked against.

#include <algorithm>
#include <vector>

#include "arcstat/partition.hpp"

namespace testoracle {

inline long long bell(int n) {
    // Aitken's array
    std::vector<std::vector<long long>> t{{1}};
    for (int row = 1; row <= n; ++row) {
        std::vector<long long> r{t.back().back()};
        for (long long v : t.back()) r.push_back(r.back() + v);
        t.push_back(std::move(r));
    }
    return t[n][0];
}

inline long long stirling2(int n, int k) {
    if (n == 0 || k == 0) return n == k ? 1 : 0;
    std::vector<std::vector<long long>> s(n + 1, std::vector<long long>(n + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return k <= n ? s[n][k] : 0;
}

// Literal reading of the pairwise-block definition: ordered pairs (b,c)
// from two different blocks with no element of either block strictly
// between them, summed over unordered block pairs.
inline int intertwining_by_definition(const arcstat::SetPartition& p) {
    const auto& blocks = p.blocks();
    int total = 0;
    for (std::size_t x = 0; x < blocks.size(); ++x)
        for (std::size_t y = x + 1; y < blocks.size(); ++y)
            for (int b : blocks[x])
                for (int c : blocks[y]) {
                    bool blocked = false;
                    for (int m = std::min(b, c) + 1; m < std::max(b, c) && !blocked; ++m)
                        blocked = std::binary_search(blocks[x].begin(), blocks[x].end(), m) ||
                                  std::binary_search(blocks[y].begin(), blocks[y].end(), m);
                    if (!blocked) ++total;
                }
    return total;
}

// Extended arc diagram built directly from the drawing rule, and its
// crossing count by the i<k<j<l predicate over all pairs.
inline std::vector<std::pair<int, int>> generalized_arcs_by_drawing(const arcstat::SetPartition& p) {
    std::vector<std::pair<int, int>> arcs;
    for (const auto& block : p.blocks()) {
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            arcs.emplace_back(block[i], block[i + 1]);
        arcs.emplace_back(-block.front(), block.front());
        arcs.emplace_back(block.back(), 3 * p.n() - block.back());
    }
    return arcs;
}

inline int crossings_of(const std::vector<std::pair<int, int>>& arcs) {
    int total = 0;
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (std::size_t b = a + 1; b < arcs.size(); ++b) {
            auto [i, j] = arcs[a];
            auto [k, l] = arcs[b];
            if ((i < k && k < j && j < l) || (k < i && i < l && l < j)) ++total;
        }
    return total;
}

// Depth index straight from its defining formula, with the arc count as
// the upper summation limit.
inline int depth_index_by_definition(const arcstat::SetPartition& p) {
    std::vector<std::pair<int, int>> arcs;
    for (const auto& block : p.blocks())
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            arcs.emplace_back(block[i], block[i + 1]);
    int n = p.n();
    int total = 0;
    for (int i = 1; i <= static_cast<int>(arcs.size()); ++i) total += n - i;
    for (int v = 1; v <= n; ++v)
        for (auto [i, j] : arcs)
            if (i < v && v < j) --total;
    for (auto [u, w] : arcs)
        for (auto [i, j] : arcs)
            if (i < u && w < j) ++total;
    return total;
}

}  // namespace testoracle
