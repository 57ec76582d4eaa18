#include "arcstat/statistics.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace arcstat {

namespace {

int intertwining_extended(const ArcDiagram& d) {
    auto arcs = extended_arcs(d);
    int total = 0;
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (std::size_t b = a + 1; b < arcs.size(); ++b)
            if (arcs_cross(arcs[a], arcs[b])) ++total;
    return total;
}

// Pairs (b,c) in B x C with no element of B u C strictly between them;
// these are exactly the adjacencies of the merged sequence whose two
// members come from different blocks.
int block_pair_intertwining(const std::vector<int>& B, const std::vector<int>& C) {
    std::vector<std::pair<int, char>> merged;
    merged.reserve(B.size() + C.size());
    for (int v : B) merged.push_back({v, 0});
    for (int v : C) merged.push_back({v, 1});
    std::sort(merged.begin(), merged.end());
    int total = 0;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i)
        if (merged[i].second != merged[i + 1].second) ++total;
    return total;
}

int intertwining_blocks(const ArcDiagram& d) {
    const auto blocks = from_arc_diagram(d).blocks();
    int total = 0;
    for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = a + 1; b < blocks.size(); ++b)
            total += block_pair_intertwining(blocks[a], blocks[b]);
    return total;
}

int vertex_depth(const ArcDiagram& d, int v) {
    int depth = 0;
    for (auto [i, j] : d.arcs())
        if (i < v && v < j) ++depth;
    return depth;
}

int arc_depth(const ArcDiagram& d, int u, int v) {
    int depth = 0;
    for (auto [i, j] : d.arcs())
        if (i < u && v < j) ++depth;
    return depth;
}

}  // namespace

int intertwining(const ArcDiagram& d, IntertwiningMethod method) {
    return method == IntertwiningMethod::extended_arcs ? intertwining_extended(d)
                                                       : intertwining_blocks(d);
}

std::vector<int> partial_intertwining(const ArcDiagram& d) {
    auto arcs = extended_arcs(d);
    std::vector<int> out(d.n(), 0);
    for (int v = 1; v <= d.n(); ++v) {
        int u = d.partner(v);
        GeneralizedArc ending{u == 0 ? -v : u, v};
        int count = 0;
        for (const auto& g : arcs)
            if (g.left > u && g.left < v && arcs_cross(ending, g)) ++count;
        out[v - 1] = count;
    }
    return out;
}

int depth_index(const ArcDiagram& d) {
    int k = d.arc_count();
    int total = 0;
    for (int i = 1; i <= k; ++i) total += d.n() - i;
    for (int v = 1; v <= d.n(); ++v) total -= vertex_depth(d, v);
    for (auto [u, v] : d.arcs()) total += arc_depth(d, u, v);
    return total;
}

std::vector<int> partial_depth_index(const ArcDiagram& d) {
    std::vector<int> out(d.n(), 0);
    for (int v = 1; v <= d.n(); ++v) {
        int u = d.partner(v);
        int inside = 0;
        for (auto [i, j] : d.arcs())
            if (u < i && j < v) ++inside;
        out[v - 1] = u + inside;
    }
    return out;
}

ClassicalStats classical_stats(const ArcDiagram& d) {
    ClassicalStats s{0, 0, 0};
    for (int v = 1; v <= d.n(); ++v) s.dimension_exponent += vertex_depth(d, v);
    for (auto [u, v] : d.arcs()) s.nestings += arc_depth(d, u, v);
    const auto& arcs = d.arcs();
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (std::size_t b = a + 1; b < arcs.size(); ++b)
            if (arcs_cross({arcs[a].first, arcs[a].second}, {arcs[b].first, arcs[b].second}))
                ++s.crossings;
    return s;
}

int dual_major_index(const SetPartition& p) {
    int total = 0;
    for (std::size_t i = 0; i < p.blocks().size(); ++i)
        total += static_cast<int>(i) * static_cast<int>(p.blocks()[i].size());
    return total;
}

SetPartition parviainen_phi(const SetPartition& p) {
    auto partials = partial_intertwining(to_arc_diagram(p));
    std::map<int, std::vector<int>> groups;
    for (int v = 1; v <= p.n(); ++v) groups[partials[v - 1]].push_back(v);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(groups.size());
    for (auto& [value, members] : groups) blocks.push_back(std::move(members));
    return SetPartition(p.n(), std::move(blocks));
}

int crossing_index(const ArcDiagram& d) {
    const auto chains = from_arc_diagram(d).blocks();
    int k = d.arc_count();
    int total = 0;
    for (int i = 1; i <= k; ++i) total += d.n() - i;
    for (const auto& chain : chains) total -= arc_depth(d, chain.front(), chain.back());
    for (auto [u, v] : d.arcs()) {
        for (const auto& chain : chains) {
            if (std::binary_search(chain.begin(), chain.end(), u)) continue;  // own chain
            bool inside = false, outside = false;
            for (int x : chain) {
                if (u < x && x < v)
                    inside = true;
                else
                    outside = true;
            }
            if (inside && outside) --total;
        }
    }
    return total;
}

StatReport stat_report(const SetPartition& p) {
    ArcDiagram d = to_arc_diagram(p);
    StatReport r;
    r.n = p.n();
    r.intertwining = intertwining(d);
    r.depth_index = depth_index(d);
    r.dual_major = dual_major_index(p);
    ClassicalStats cs = classical_stats(d);
    r.dimension_exponent = cs.dimension_exponent;
    r.nestings = cs.nestings;
    r.crossings = cs.crossings;
    r.crossing_index = crossing_index(d);
    r.partial_intertwining = partial_intertwining(d);
    r.partial_depth = partial_depth_index(d);
    return r;
}

std::string to_json(const StatReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["intertwining"] = r.intertwining;
    j["depth_index"] = r.depth_index;
    j["dual_major"] = r.dual_major;
    j["dimension_exponent"] = r.dimension_exponent;
    j["nestings"] = r.nestings;
    j["crossings"] = r.crossings;
    j["crossing_index"] = r.crossing_index;
    j["partial_intertwining"] = r.partial_intertwining;
    j["partial_depth"] = r.partial_depth;
    return j.dump();
}

}  // namespace arcstat
