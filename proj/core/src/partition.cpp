#include "arcstat/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace arcstat {

namespace {

[[noreturn]] void parse_fail(const std::string& why) {
    throw std::invalid_argument("parse_partition: " + why);
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::optional<long long> parse_int(std::string_view tok) {
    tok = trimmed(tok);
    if (tok.empty()) return std::nullopt;
    bool negative = false;
    std::size_t i = 0;
    if (tok[0] == '-' || tok[0] == '+') {
        negative = tok[0] == '-';
        i = 1;
        if (tok.size() == 1) return std::nullopt;
    }
    long long value = 0;
    for (; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return std::nullopt;
        value = value * 10 + (tok[i] - '0');
        if (value > 1'000'000) return std::nullopt;  // far beyond any usable n
    }
    return negative ? -value : value;
}

// Validates that the element lists form a partition of {1..max}; returns
// the reason they do not, or builds the SetPartition.
SetPartition build_partition(std::vector<std::vector<int>> blocks) {
    int max_elem = 0;
    for (const auto& b : blocks)
        for (int v : b) max_elem = std::max(max_elem, v);
    return SetPartition(max_elem, std::move(blocks));
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n_ <= 0) throw std::invalid_argument("SetPartition: n must be positive");
    std::vector<char> seen(n_ + 1, 0);
    int count = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v <= 0) throw std::invalid_argument("SetPartition: zero or negative element");
            if (v > n_) throw std::invalid_argument("SetPartition: element exceeds n");
            if (seen[v]) throw std::invalid_argument("SetPartition: duplicate element");
            seen[v] = 1;
            ++count;
        }
    }
    if (count != n_) throw std::invalid_argument("SetPartition: union is not {1..n}");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::singletons(int n) {
    std::vector<std::vector<int>> blocks(n);
    for (int v = 1; v <= n; ++v) blocks[v - 1] = {v};
    return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::one_block(int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    return SetPartition(n, {std::move(all)});
}

int SetPartition::block_index_of(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("block_index_of: element out of range");
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), v))
            return static_cast<int>(i);
    throw std::logic_error("block_index_of: element not found");
}

ArcDiagram::ArcDiagram(int n, std::vector<std::pair<int, int>> arcs)
    : n_(n), arcs_(std::move(arcs)), prev_(n + 1, 0), next_(n + 1, 0) {
    if (n_ <= 0) throw std::invalid_argument("ArcDiagram: n must be positive");
    std::sort(arcs_.begin(), arcs_.end());
    for (auto [i, j] : arcs_) {
        if (i < 1 || j > n_ || i >= j)
            throw std::invalid_argument("ArcDiagram: arc endpoints must satisfy 1 <= i < j <= n");
        if (next_[i] != 0)
            throw std::invalid_argument("ArcDiagram: vertex used twice as left endpoint");
        if (prev_[j] != 0)
            throw std::invalid_argument("ArcDiagram: vertex used twice as right endpoint");
        next_[i] = j;
        prev_[j] = i;
    }
}

int ArcDiagram::partner(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("partner: vertex out of range");
    return prev_[v];
}

int ArcDiagram::successor(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("successor: vertex out of range");
    return next_[v];
}

bool arcs_cross(const GeneralizedArc& a, const GeneralizedArc& b) {
    return (a.left < b.left && b.left < a.right && a.right < b.right) ||
           (b.left < a.left && a.left < b.right && b.right < a.right);
}

ArcDiagram to_arc_diagram(const SetPartition& p) {
    std::vector<std::pair<int, int>> arcs;
    for (const auto& block : p.blocks())
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            arcs.emplace_back(block[i], block[i + 1]);
    return ArcDiagram(p.n(), std::move(arcs));
}

SetPartition from_arc_diagram(const ArcDiagram& d) {
    std::vector<std::vector<int>> blocks;
    for (int v = 1; v <= d.n(); ++v) {
        if (d.partner(v) != 0) continue;  // chains start at openers
        std::vector<int> block;
        for (int w = v; w != 0; w = d.successor(w)) block.push_back(w);
        blocks.push_back(std::move(block));
    }
    return SetPartition(d.n(), std::move(blocks));
}

std::vector<GeneralizedArc> extended_arcs(const ArcDiagram& d) {
    std::vector<GeneralizedArc> out;
    out.reserve(d.arc_count() + 2 * d.n());
    for (auto [i, j] : d.arcs()) out.push_back({i, j});
    for (int v = 1; v <= d.n(); ++v) {
        if (d.is_opener(v)) out.push_back({-v, v});
        if (d.is_closer(v)) out.push_back({v, 3 * d.n() - v});
    }
    std::sort(out.begin(), out.end());
    return out;
}

RestrictedGrowthString::RestrictedGrowthString(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty()) throw std::invalid_argument("RestrictedGrowthString: empty word");
    if (word_[0] != 0) throw std::invalid_argument("RestrictedGrowthString: word must start with 0");
    int max = 0;
    for (std::size_t i = 1; i < word_.size(); ++i) {
        if (word_[i] < 0 || word_[i] > max + 1)
            throw std::invalid_argument("RestrictedGrowthString: growth condition violated");
        max = std::max(max, word_[i]);
    }
}

RestrictedGrowthString rgs_encode(const SetPartition& p) {
    std::vector<int> word(p.n());
    for (std::size_t b = 0; b < p.blocks().size(); ++b)
        for (int v : p.blocks()[b]) word[v - 1] = static_cast<int>(b);
    return RestrictedGrowthString(std::move(word));
}

SetPartition rgs_decode(const RestrictedGrowthString& w) {
    int k = *std::max_element(w.word().begin(), w.word().end()) + 1;
    std::vector<std::vector<int>> blocks(k);
    for (int i = 0; i < w.size(); ++i) blocks[w.word()[i]].push_back(i + 1);
    return SetPartition(w.size(), std::move(blocks));
}

std::string format_rgs(const RestrictedGrowthString& w) {
    std::string out = "[";
    for (int i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.word()[i]);
    }
    return out + "]";
}

RestrictedGrowthString parse_rgs(std::string_view text) {
    text = trimmed(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("parse_rgs: expected bracketed word");
    text.remove_prefix(1);
    text.remove_suffix(1);
    std::vector<int> word;
    for (std::string_view tok : split(text, ',')) {
        auto v = parse_int(tok);
        if (!v) throw std::invalid_argument("parse_rgs: bad integer");
        word.push_back(static_cast<int>(*v));
    }
    return RestrictedGrowthString(std::move(word));
}

SetPartition parse_partition(std::string_view text) {
    text = trimmed(text);
    if (text.empty()) parse_fail("empty input");
    std::vector<std::string_view> tokens = split(text, '|');
    for (auto& t : tokens) {
        t = trimmed(t);
        if (t.empty()) parse_fail("empty block");
    }

    bool has_comma = text.find(',') != std::string_view::npos;

    // Compact form first: every block a run of digit elements. Only
    // attempted when it can possibly be valid (at most 9 digits total);
    // this keeps texts like "1|2|...|9|10" on the integer reading.
    if (!has_comma) {
        std::size_t digit_count = 0;
        bool all_digits = true;
        bool multi = false;
        for (auto t : tokens) {
            if (t.size() > 1) multi = true;
            digit_count += t.size();
            for (char ch : t)
                if (!std::isdigit(static_cast<unsigned char>(ch))) all_digits = false;
        }
        if (all_digits && multi && digit_count <= 9) {
            std::vector<std::vector<int>> blocks;
            for (auto t : tokens) {
                std::vector<int> block;
                for (char ch : t) {
                    if (ch == '0') parse_fail("zero or negative element");
                    block.push_back(ch - '0');
                }
                blocks.push_back(std::move(block));
            }
            try {
                return build_partition(std::move(blocks));
            } catch (const std::invalid_argument& e) {
                parse_fail(std::string("compact form: ") + e.what());
            }
        }
    }

    std::vector<std::vector<int>> blocks;
    for (auto t : tokens) {
        std::vector<int> block;
        for (std::string_view tok : split(t, ',')) {
            auto v = parse_int(tok);
            if (!v) parse_fail("malformed element '" + std::string(trimmed(tok)) + "'");
            if (*v <= 0) parse_fail("zero or negative element");
            block.push_back(static_cast<int>(*v));
        }
        blocks.push_back(std::move(block));
    }
    try {
        return build_partition(std::move(blocks));
    } catch (const std::invalid_argument& e) {
        parse_fail(e.what());
    }
}

std::string format_partition(const SetPartition& p, PartitionFormat style) {
    if (style == PartitionFormat::compact && p.n() > 9)
        throw std::invalid_argument("format_partition: compact style requires n <= 9");
    std::string out;
    for (std::size_t b = 0; b < p.blocks().size(); ++b) {
        if (b) out += "|";
        const auto& block = p.blocks()[b];
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (style == PartitionFormat::comma && i) out += ",";
            out += std::to_string(block[i]);
        }
    }
    return out;
}

std::string format_partition(const SetPartition& p) {
    return format_partition(p, p.n() <= 9 ? PartitionFormat::compact : PartitionFormat::comma);
}

}  // namespace arcstat
