#include "arcstat/poset.hpp"

#include <stdexcept>

#include "json.hpp"

#include "arcstat/enumerate.hpp"
#include "arcstat/matrix.hpp"
#include "arcstat/statistics.hpp"

namespace arcstat {

namespace {

constexpr int kMaxPosetN = 8;

bool intersects(const std::uint64_t* a, const std::uint64_t* b, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w] & b[w]) return true;
    return false;
}

}  // namespace

bool Poset::bit(const std::vector<std::uint64_t>& bits, int i) const {
    return (bits[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1u;
}

bool Poset::less(int a, int b) const {
    if (a < 0 || b < 0 || a >= size() || b >= size())
        throw std::out_of_range("Poset: element index out of range");
    return (above_[static_cast<std::size_t>(a) * words_ + b / 64] >> (b % 64)) & 1u;
}

bool Poset::leq(int a, int b) const { return a == b || less(a, b); }

Poset build_poset(int n) {
    if (n < 1) throw std::invalid_argument("build_poset: n must be positive");
    if (n > kMaxPosetN) throw std::invalid_argument("build_poset: n exceeds the supported limit 8");

    Poset p;
    p.n_ = n;
    for_each_partition(n, [&](const SetPartition& a) { p.elements_.push_back(a); });

    const int count = p.size();
    p.words_ = (count + 63) / 64;

    std::vector<RankControlMatrix> grids;
    grids.reserve(count);
    p.ranks_.reserve(count);
    for (const auto& a : p.elements_) {
        ArcDiagram d = to_arc_diagram(a);
        grids.push_back(rank_control(adjacency_matrix(d)));
        p.ranks_.push_back(depth_index(d));
    }

    p.above_.assign(static_cast<std::size_t>(count) * p.words_, 0);
    p.below_.assign(static_cast<std::size_t>(count) * p.words_, 0);
    auto set_bit = [&](std::vector<std::uint64_t>& bits, int row, int i) {
        bits[static_cast<std::size_t>(row) * p.words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    };
    for (int a = 0; a < count; ++a)
        for (int b = a + 1; b < count; ++b) {
            // one pass decides both directions; distinct partitions have
            // distinct grids, so strictness is automatic
            bool ab = true, ba = true;
            for (int k = 1; (ab || ba) && k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    int va = grids[a].at(k, l), vb = grids[b].at(k, l);
                    if (va > vb) ab = false;
                    if (vb > va) ba = false;
                }
            if (ab) {
                set_bit(p.above_, a, b);
                set_bit(p.below_, b, a);
            } else if (ba) {
                set_bit(p.above_, b, a);
                set_bit(p.below_, a, b);
            }
        }

    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) {
            if (a == b || !p.less(a, b)) continue;
            const std::uint64_t* above_a = p.above_.data() + static_cast<std::size_t>(a) * p.words_;
            const std::uint64_t* below_b = p.below_.data() + static_cast<std::size_t>(b) * p.words_;
            if (!intersects(above_a, below_b, p.words_)) p.covers_.emplace_back(a, b);
        }
    return p;
}

GradednessReport check_graded(const Poset& p) {
    GradednessReport report;
    int minima = 0, maxima = 0;
    for (int a = 0; a < p.size(); ++a) {
        bool has_lower = false, has_upper = false;
        for (int b = 0; b < p.size() && !(has_lower && has_upper); ++b) {
            if (b == a) continue;
            if (p.less(b, a)) has_lower = true;
            if (p.less(a, b)) has_upper = true;
        }
        if (!has_lower) {
            ++minima;
            report.minimum = a;
        }
        if (!has_upper) {
            ++maxima;
            report.maximum = a;
        }
    }
    if (minima != 1) {
        report.violations.push_back("minimum not unique");
        report.minimum = -1;
    }
    if (maxima != 1) {
        report.violations.push_back("maximum not unique");
        report.maximum = -1;
    }
    if (report.minimum >= 0) {
        const SetPartition& bottom = p.elements()[report.minimum];
        if (bottom != SetPartition::singletons(p.n()) || p.ranks()[report.minimum] != 0)
            report.violations.push_back("minimum is not the all-singletons partition at rank 0");
    }
    if (report.maximum >= 0) {
        const SetPartition& top = p.elements()[report.maximum];
        int full = p.n() * (p.n() - 1) / 2;
        if (top != SetPartition::one_block(p.n()) || p.ranks()[report.maximum] != full)
            report.violations.push_back("maximum is not the one-block partition at rank C(n,2)");
    }
    for (auto [a, b] : p.covers())
        if (p.ranks()[b] - p.ranks()[a] != 1)
            report.violations.push_back("cover " + format_partition(p.elements()[a]) + " -> " +
                                        format_partition(p.elements()[b]) +
                                        " changes rank by " +
                                        std::to_string(p.ranks()[b] - p.ranks()[a]));
    report.graded = report.violations.empty();
    return report;
}

IntPolynomial rank_polynomial(const Poset& p) {
    std::vector<BigInt> coeffs;
    for (int r : p.ranks()) {
        if (static_cast<int>(coeffs.size()) <= r) coeffs.resize(r + 1, 0);
        coeffs[r] += 1;
    }
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

std::string export_poset(const Poset& p, PosetFormat format) {
    if (format == PosetFormat::dot) {
        std::string out = "digraph bcr_order {\n  rankdir=BT;\n";
        for (int a = 0; a < p.size(); ++a)
            out += "  n" + std::to_string(a) + " [label=\"" + format_partition(p.elements()[a]) +
                   " (" + std::to_string(p.ranks()[a]) + ")\"];\n";
        for (auto [a, b] : p.covers())
            out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
        out += "}\n";
        return out;
    }
    nlohmann::json j;
    j["n"] = p.n();
    auto& elements = j["elements"] = nlohmann::json::array();
    for (const auto& e : p.elements()) elements.push_back(format_partition(e));
    j["ranks"] = p.ranks();
    auto& covers = j["covers"] = nlohmann::json::array();
    for (auto [a, b] : p.covers()) covers.push_back({a, b});
    return j.dump();
}

}  // namespace arcstat
