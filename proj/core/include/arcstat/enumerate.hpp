#pragma once

#include <optional>
#include <vector>

#include "arcstat/partition.hpp"

namespace arcstat {

/// Streams the set partitions of {1..n}, or just those with k blocks, in
/// lexicographic order of their restricted growth strings. Instances are
/// independent; disjoint prefix ranges may be consumed concurrently.
class PartitionEnumerator {
public:
    /// k = 0 streams all of the partitions; otherwise exactly k blocks.
    explicit PartitionEnumerator(int n, int k = 0);

    /// Word for the next partition, or nullopt when exhausted.
    std::optional<RestrictedGrowthString> next_word();

    /// Decoded form of next_word().
    std::optional<SetPartition> next();

private:
    bool advance();

    int n_, k_;
    bool fresh_, done_;
    std::vector<int> word_;
    std::vector<int> prefix_max_;  // prefix_max_[i] = max(word_[0..i])
};

/// Calls fn(const SetPartition&) for every partition of {1..n} in RGS order.
template <typename F>
void for_each_partition(int n, F&& fn) {
    PartitionEnumerator e(n);
    while (auto p = e.next()) fn(*p);
}

/// Same, restricted to partitions with exactly k blocks.
template <typename F>
void for_each_partition(int n, int k, F&& fn) {
    PartitionEnumerator e(n, k);
    while (auto p = e.next()) fn(*p);
}

}  // namespace arcstat
