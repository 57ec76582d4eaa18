#pragma once

#include <string>
#include <vector>

#include "arcstat/partition.hpp"

namespace arcstat {

enum class IntertwiningMethod {
    extended_arcs,  // count crossing pairs of generalized arcs
    block_pairs,    // sum the pairwise-block intertwining numbers
};

/// Total number of crossings in the extended arc diagram (FindStat
/// St000490). Both methods agree; extended_arcs is the default.
int intertwining(const ArcDiagram& d, IntertwiningMethod method = IntertwiningMethod::extended_arcs);

/// Entry v-1 counts the crossings of the generalized arc ending in v with
/// generalized arcs whose smaller endpoint lies strictly between
/// partner(v) and v. Sums to intertwining(d).
std::vector<int> partial_intertwining(const ArcDiagram& d);

/// The depth index (FindStat St001094): with k arcs,
///   sum_{i=1..k} (n-i)  -  sum_v depth(v)  +  sum_arcs depth(arc).
int depth_index(const ArcDiagram& d);

/// Entry v-1 is partner(v) plus the number of arcs strictly inside
/// (partner(v), v). Sums to depth_index(d).
std::vector<int> partial_depth_index(const ArcDiagram& d);

struct ClassicalStats {
    int dimension_exponent;  // sum of vertex depths = sum(max B - min B + 1) - n
    int nestings;            // sum of arc depths
    int crossings;           // crossing pairs of proper arcs
};

ClassicalStats classical_stats(const ArcDiagram& d);

/// dualmaj(A) = sum (i-1)*|A_i| over blocks ordered by minima.
int dual_major_index(const SetPartition& p);

/// Parviainen's bijection: groups the elements by equal partial
/// intertwining number. Preserves the block count and carries the
/// intertwining number to the dual major index.
SetPartition parviainen_phi(const SetPartition& p);

/// The crossing index: with k arcs and chains beta_1..beta_{n-k},
///   sum_{i=1..k} (n-i) - sum_j depth(beta_j) - sum_m cross(alpha_m),
/// where depth(beta) counts arcs spanning all of beta and cross(alpha)
/// counts foreign chains with a vertex strictly inside alpha and another
/// outside. Always equals depth_index.
int crossing_index(const ArcDiagram& d);

/// Every per-partition statistic in one record.
struct StatReport {
    int n = 0;
    int intertwining = 0;
    int depth_index = 0;
    int dual_major = 0;
    int dimension_exponent = 0;
    int nestings = 0;
    int crossings = 0;
    int crossing_index = 0;
    std::vector<int> partial_intertwining;  // entry v-1 belongs to vertex v
    std::vector<int> partial_depth;
};

StatReport stat_report(const SetPartition& p);

/// Flat JSON object with the StatReport field names; the sequences are
/// arrays whose first entry belongs to vertex 1.
std::string to_json(const StatReport& r);

}  // namespace arcstat
