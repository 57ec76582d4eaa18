#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcstat/partition.hpp"
#include "arcstat/polynomial.hpp"

namespace arcstat {

/// The Bruhat-Chevalley-Renner order on the set partitions of {1..n}:
/// A <= B exactly when the rank-control matrix of A is componentwise
/// below that of B. Elements are indexed in lexicographic RGS order;
/// rank is the depth index.
class Poset {
public:
    int n() const { return n_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<SetPartition>& elements() const { return elements_; }
    const std::vector<int>& ranks() const { return ranks_; }

    /// Cover relations (lower, upper), lexicographically sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    bool leq(int a, int b) const;
    bool less(int a, int b) const;

private:
    friend Poset build_poset(int n);

    bool bit(const std::vector<std::uint64_t>& bits, int i) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<SetPartition> elements_;
    std::vector<int> ranks_;
    std::vector<std::pair<int, int>> covers_;
    // strict relations as bitsets, one row of `words_` words per element
    std::vector<std::uint64_t> above_, below_;
};

/// Builds the order by all-pairs componentwise comparison of rank-control
/// matrices, with covers from the transitive reduction. Throws when n
/// exceeds the supported limit (8: the all-pairs comparison is quadratic
/// in the Bell number).
Poset build_poset(int n);

struct GradednessReport {
    bool graded = false;
    int minimum = -1;             // element index, -1 when not unique
    int maximum = -1;
    std::vector<std::string> violations;
};

/// Verifies the unique minimum (all singletons, rank 0), the unique
/// maximum (one block, rank C(n,2)), and that every cover raises the
/// rank by exactly one.
GradednessReport check_graded(const Poset& p);

/// Coefficient of q^d counts the elements of depth index d.
IntPolynomial rank_polynomial(const Poset& p);

enum class PosetFormat { dot, json };

/// DOT digraph of the cover relations with nodes labeled by compact
/// partition text and rank, or a JSON document with elements, ranks and
/// covers. Both are deterministic (RGS order).
std::string export_poset(const Poset& p, PosetFormat format);

}  // namespace arcstat
