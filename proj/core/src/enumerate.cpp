#include "arcstat/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcstat {

PartitionEnumerator::PartitionEnumerator(int n, int k)
    : n_(n), k_(k), fresh_(true), done_(false), word_(n, 0), prefix_max_(n, 0) {
    if (n < 1) throw std::invalid_argument("PartitionEnumerator: n must be positive");
    if (k < 0 || k > n) throw std::invalid_argument("PartitionEnumerator: k out of range");
    if (k_ > 0) {
        // lexicographically smallest word with k blocks: zeros, then a
        // forced tail 1,2,...,k-1
        for (int d = 1; d < k_; ++d) word_[n_ - k_ + d] = d;
        for (int i = 1; i < n_; ++i) prefix_max_[i] = std::max(prefix_max_[i - 1], word_[i]);
    }
}

bool PartitionEnumerator::advance() {
    for (int i = n_ - 1; i >= 1; --i) {
        int m = prefix_max_[i - 1];
        int cap = std::min(m + 1, k_ > 0 ? k_ - 1 : m + 1);
        for (int v = word_[i] + 1; v <= cap; ++v) {
            int blocks = std::max(m, v) + 1;
            int rest = n_ - 1 - i;
            if (k_ > 0 && (blocks > k_ || blocks + rest < k_)) continue;
            word_[i] = v;
            int deficit = k_ > 0 ? k_ - blocks : 0;
            // smallest completion: zeros, then the forced block openers
            for (int j = i + 1; j < n_; ++j) word_[j] = 0;
            for (int d = 1; d <= deficit; ++d) word_[n_ - deficit + d - 1] = std::max(m, v) + d;
            for (int j = i; j < n_; ++j) prefix_max_[j] = std::max(prefix_max_[j - 1], word_[j]);
            return true;
        }
    }
    return false;
}

std::optional<RestrictedGrowthString> PartitionEnumerator::next_word() {
    if (done_) return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        return RestrictedGrowthString(word_);
    }
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return RestrictedGrowthString(word_);
}

std::optional<SetPartition> PartitionEnumerator::next() {
    auto w = next_word();
    if (!w) return std::nullopt;
    return rgs_decode(*w);
}

}  // namespace arcstat
