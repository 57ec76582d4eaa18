#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcstat {

/// A set partition of {1,...,n} in canonical form: blocks ordered by their
/// minima, elements within a block strictly increasing. The constructor
/// canonicalizes and validates (disjoint nonempty blocks covering {1..n}).
class SetPartition {
public:
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    static SetPartition singletons(int n);
    static SetPartition one_block(int n);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    /// 0-based index of the block containing v (blocks ordered by minima).
    int block_index_of(int v) const;

    bool operator==(const SetPartition&) const = default;

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

/// Arcs join consecutive elements of each block; a vertex is the left
/// endpoint of at most one arc and the right endpoint of at most one arc.
class ArcDiagram {
public:
    ArcDiagram(int n, std::vector<std::pair<int, int>> arcs);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    /// The element joined to v from the left, or 0 when v opens its block.
    /// Throws std::out_of_range for v outside 1..n.
    int partner(int v) const;

    /// The element joined to v from the right, or 0 when v closes its block.
    int successor(int v) const;

    bool is_opener(int v) const { return partner(v) == 0; }
    bool is_closer(int v) const { return successor(v) == 0; }

    bool operator==(const ArcDiagram&) const = default;

private:
    int n_;
    std::vector<std::pair<int, int>> arcs_;  // sorted
    std::vector<int> prev_, next_;           // 1-based, 0 = none
};

/// An arc of the extended diagram. Proper arcs keep their vertex
/// coordinates; the half-arc attached to an opener o is (-o, o) and the
/// half-arc attached to a closer c is (c, 3n-c). This keeps half-arcs on
/// the same side mutually non-crossing under the i<k<j<l predicate, and a
/// left half-arc crosses exactly the generalized arcs spanning its vertex.
struct GeneralizedArc {
    int left;
    int right;
    auto operator<=>(const GeneralizedArc&) const = default;
};

/// i<k<j<l in either order of the two arcs.
bool arcs_cross(const GeneralizedArc& a, const GeneralizedArc& b);

ArcDiagram to_arc_diagram(const SetPartition& p);
SetPartition from_arc_diagram(const ArcDiagram& d);

/// Proper arcs plus one half-arc per opener and per closer, sorted by
/// (left, right).
std::vector<GeneralizedArc> extended_arcs(const ArcDiagram& d);

/// Word w_1..w_n with w_1 = 0 and w_{i+1} <= 1 + max(w_1..w_i); w_i is the
/// 0-based index of the block containing i.
class RestrictedGrowthString {
public:
    explicit RestrictedGrowthString(std::vector<int> word);

    const std::vector<int>& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }

    bool operator==(const RestrictedGrowthString&) const = default;

private:
    std::vector<int> word_;
};

RestrictedGrowthString rgs_encode(const SetPartition& p);
SetPartition rgs_decode(const RestrictedGrowthString& w);

/// "[0,1,2,0]" text form.
std::string format_rgs(const RestrictedGrowthString& w);
RestrictedGrowthString parse_rgs(std::string_view text);

enum class PartitionFormat { comma, compact };

/// Accepts the comma grammar `block ('|' block)*` with comma-separated
/// integers per block, and the compact digit form for n <= 9 (every
/// character of a block is one element). Throws std::invalid_argument
/// with a reason on malformed text, duplicates, gaps, or nonpositive
/// elements.
SetPartition parse_partition(std::string_view text);

/// Compact style requires n <= 9 (single-digit elements only).
std::string format_partition(const SetPartition& p, PartitionFormat style);

/// Compact for n <= 9, comma form otherwise.
std::string format_partition(const SetPartition& p);

}  // namespace arcstat
