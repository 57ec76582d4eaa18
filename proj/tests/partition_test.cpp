#include "doctest.h"

#include <set>

#include "arcstat/enumerate.hpp"
#include "arcstat/partition.hpp"
#include "oracles.hpp"

using namespace arcstat;

TEST_SUITE("partition parsing and formatting") {

TEST_CASE("comma grammar") {
    SetPartition p = parse_partition("1,8|2,5,6,9|3,7|4");
    CHECK(p.n() == 9);
    REQUIRE(p.block_count() == 4);
    CHECK(p.blocks()[0] == std::vector<int>{1, 8});
    CHECK(p.blocks()[1] == std::vector<int>{2, 5, 6, 9});
    CHECK(p.blocks()[2] == std::vector<int>{3, 7});
    CHECK(p.blocks()[3] == std::vector<int>{4});
}

TEST_CASE("smallest partition") {
    SetPartition p = parse_partition("1");
    CHECK(p.n() == 1);
    CHECK(p.block_count() == 1);
    CHECK(format_partition(p, PartitionFormat::comma) == "1");
}

TEST_CASE("compact digit form") {
    SetPartition p = parse_partition("137|2|45");
    CHECK(p.n() == 7);
    REQUIRE(p.block_count() == 3);
    CHECK(p.blocks()[0] == std::vector<int>{1, 3, 7});
    CHECK(p.blocks()[1] == std::vector<int>{2});
    CHECK(p.blocks()[2] == std::vector<int>{4, 5});
    // compact re-serializes through the comma grammar to the same partition
    CHECK(parse_partition(format_partition(p, PartitionFormat::comma)) == p);
}

TEST_CASE("blocks are canonicalized by minima") {
    CHECK(parse_partition("2|1") == parse_partition("1|2"));
    CHECK(parse_partition("4,2|3,1") == parse_partition("1,3|2,4"));
}

TEST_CASE("multi-digit singletons stay on the integer reading") {
    SetPartition p = parse_partition("1|2|3|4|5|6|7|8|9|10");
    CHECK(p.n() == 10);
    CHECK(p.block_count() == 10);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_partition(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1||2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1,a|2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1,1|2"), std::invalid_argument);   // duplicate
    CHECK_THROWS_AS(parse_partition("1,2|4"), std::invalid_argument);   // gap
    CHECK_THROWS_AS(parse_partition("0,1"), std::invalid_argument);     // zero element
    CHECK_THROWS_AS(parse_partition("-1,1"), std::invalid_argument);    // negative
    CHECK_THROWS_AS(parse_partition("120|3"), std::invalid_argument);   // 0 digit in compact
}

TEST_CASE("format styles") {
    SetPartition fig(9, {{1, 8}, {2, 5, 6, 9}, {3, 7}, {4}});
    CHECK(format_partition(fig, PartitionFormat::compact) == "18|2569|37|4");
    CHECK(format_partition(fig, PartitionFormat::comma) == "1,8|2,5,6,9|3,7|4");

    std::vector<std::vector<int>> blocks{{1, 10}};
    for (int v = 2; v <= 9; ++v) blocks.push_back({v});
    SetPartition wide(10, std::move(blocks));
    CHECK(format_partition(wide, PartitionFormat::comma) == "1,10|2|3|4|5|6|7|8|9");
    CHECK_THROWS_AS(format_partition(wide, PartitionFormat::compact), std::invalid_argument);
    CHECK(parse_partition(format_partition(wide, PartitionFormat::comma)) == wide);
}

TEST_CASE("parse after format is the identity, exhaustively") {
    for (int n = 1; n <= 7; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            CHECK(parse_partition(format_partition(p, PartitionFormat::comma)) == p);
            CHECK(parse_partition(format_partition(p, PartitionFormat::compact)) == p);
        });
}

}  // TEST_SUITE

TEST_SUITE("arc diagrams") {

TEST_CASE("figure arcs") {
    ArcDiagram d = to_arc_diagram(parse_partition("18|2569|37|4"));
    std::vector<std::pair<int, int>> expected{{1, 8}, {2, 5}, {3, 7}, {5, 6}, {6, 9}};
    CHECK(d.arcs() == expected);
}

TEST_CASE("no arcs for singletons, one chain for a single block") {
    CHECK(to_arc_diagram(SetPartition::singletons(3)).arcs().empty());
    ArcDiagram chain = to_arc_diagram(SetPartition::one_block(5));
    std::vector<std::pair<int, int>> expected{{1, 2}, {2, 3}, {3, 4}, {4, 5}};
    CHECK(chain.arcs() == expected);
}

TEST_CASE("from_arc_diagram") {
    CHECK(from_arc_diagram(ArcDiagram(4, {{1, 2}, {2, 3}})) == parse_partition("123|4"));
    CHECK(from_arc_diagram(ArcDiagram(5, {})) == SetPartition::singletons(5));
    CHECK(from_arc_diagram(ArcDiagram(9, {{1, 8}, {2, 5}, {5, 6}, {6, 9}, {3, 7}})) ==
          parse_partition("18|2569|37|4"));
}

TEST_CASE("partial matching is enforced") {
    CHECK_THROWS_AS(ArcDiagram(3, {{1, 2}, {1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(ArcDiagram(3, {{1, 3}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(ArcDiagram(3, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(ArcDiagram(3, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("conversions invert each other, arc count matches block count") {
    for (int n = 1; n <= 9; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            ArcDiagram d = to_arc_diagram(p);
            CHECK(from_arc_diagram(d) == p);
            CHECK(n - d.arc_count() == p.block_count());
        });
}

TEST_CASE("partner") {
    ArcDiagram fig = to_arc_diagram(parse_partition("18|2569|37|4"));
    CHECK(fig.partner(9) == 6);
    CHECK(fig.partner(4) == 0);
    CHECK(to_arc_diagram(SetPartition::one_block(3)).partner(3) == 2);
    CHECK_THROWS_AS(fig.partner(0), std::out_of_range);
    CHECK_THROWS_AS(fig.partner(10), std::out_of_range);
}

}  // TEST_SUITE

TEST_SUITE("extended arcs") {

TEST_CASE("two singletons") {
    auto arcs = extended_arcs(to_arc_diagram(SetPartition::singletons(2)));
    std::vector<GeneralizedArc> expected{{-2, 2}, {-1, 1}, {1, 5}, {2, 4}};
    CHECK(arcs == expected);
    int crossings = 0;
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (std::size_t b = a + 1; b < arcs.size(); ++b)
            if (arcs_cross(arcs[a], arcs[b])) ++crossings;
    CHECK(crossings == 1);
}

TEST_CASE("one block never crosses") {
    for (int n = 1; n <= 6; ++n) {
        auto p = SetPartition::one_block(n);
        CHECK(testoracle::crossings_of(testoracle::generalized_arcs_by_drawing(p)) == 0);
        auto arcs = extended_arcs(to_arc_diagram(p));
        CHECK(arcs.size() == static_cast<std::size_t>(n - 1 + 2));
    }
}

TEST_CASE("figure example has 15 crossings") {
    auto arcs = extended_arcs(to_arc_diagram(parse_partition("18|2569|37|4")));
    int crossings = 0;
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (std::size_t b = a + 1; b < arcs.size(); ++b)
            if (arcs_cross(arcs[a], arcs[b])) ++crossings;
    CHECK(crossings == 15);
}

TEST_CASE("same-side half-arcs never cross") {
    for (int n = 1; n <= 9; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            auto arcs = extended_arcs(to_arc_diagram(p));
            for (std::size_t a = 0; a < arcs.size(); ++a)
                for (std::size_t b = a + 1; b < arcs.size(); ++b) {
                    bool both_left = arcs[a].left < 0 && arcs[b].left < 0;
                    bool both_right = arcs[a].right > n && arcs[b].right > n;
                    if (both_left || both_right) CHECK(!arcs_cross(arcs[a], arcs[b]));
                }
        });
}

}  // TEST_SUITE

TEST_SUITE("restricted growth strings") {

TEST_CASE("codec examples") {
    CHECK(rgs_encode(parse_partition("18|2569|37|4")) ==
          RestrictedGrowthString({0, 1, 2, 3, 1, 1, 2, 0, 1}));
    CHECK(rgs_encode(SetPartition::singletons(4)) == RestrictedGrowthString({0, 1, 2, 3}));
    CHECK(rgs_encode(SetPartition::one_block(4)) == RestrictedGrowthString({0, 0, 0, 0}));
    CHECK(rgs_decode(RestrictedGrowthString({0, 1, 2, 3, 1, 1, 2, 0, 1})) ==
          parse_partition("18|2569|37|4"));
}

TEST_CASE("growth violations are rejected") {
    CHECK_THROWS_AS(RestrictedGrowthString({1}), std::invalid_argument);
    CHECK_THROWS_AS(RestrictedGrowthString({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(RestrictedGrowthString({0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(RestrictedGrowthString({}), std::invalid_argument);
}

TEST_CASE("text form") {
    RestrictedGrowthString w({0, 1, 2, 3, 1, 1, 2, 0, 1});
    CHECK(format_rgs(w) == "[0,1,2,3,1,1,2,0,1]");
    CHECK(parse_rgs("[0,1,2,3,1,1,2,0,1]") == w);
    CHECK_THROWS_AS(parse_rgs("0,1"), std::invalid_argument);
}

TEST_CASE("codec inverts itself, exhaustively") {
    for (int n = 1; n <= 9; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            CHECK(rgs_decode(rgs_encode(p)) == p);
        });
}

}  // TEST_SUITE

TEST_SUITE("enumeration") {

TEST_CASE("counts match Bell and Stirling numbers") {
    for (int n = 1; n <= 9; ++n) {
        long long total = 0;
        for_each_partition(n, [&](const SetPartition&) { ++total; });
        CHECK(total == testoracle::bell(n));
        long long by_blocks = 0;
        for (int k = 1; k <= n; ++k) {
            long long count = 0;
            for_each_partition(n, k, [&](const SetPartition& p) {
                CHECK(p.block_count() == k);
                ++count;
            });
            CHECK(count == testoracle::stirling2(n, k));
            by_blocks += count;
        }
        CHECK(by_blocks == total);
    }
}

TEST_CASE("n=1 yields exactly the one partition") {
    PartitionEnumerator e(1);
    auto p = e.next();
    REQUIRE(p.has_value());
    CHECK(format_partition(*p, PartitionFormat::comma) == "1");
    CHECK(!e.next().has_value());
}

TEST_CASE("words come in strictly increasing lexicographic order") {
    PartitionEnumerator e(6);
    std::vector<int> last;
    while (auto w = e.next_word()) {
        if (!last.empty()) CHECK(last < w->word());
        last = w->word();
    }
}

TEST_CASE("every partition appears exactly once") {
    std::set<std::string> seen;
    for_each_partition(6, [&](const SetPartition& p) {
        CHECK(seen.insert(format_partition(p)).second);
    });
    CHECK(seen.size() == static_cast<std::size_t>(testoracle::bell(6)));
}

TEST_CASE("k out of range") {
    CHECK_THROWS_AS(PartitionEnumerator(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(PartitionEnumerator(0), std::invalid_argument);
}

}  // TEST_SUITE
