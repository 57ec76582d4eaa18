#include "arcstat/verify.hpp"

#include <algorithm>
#include <chrono>

#include "arcstat/enumerate.hpp"
#include "arcstat/matrix.hpp"
#include "arcstat/partition.hpp"
#include "arcstat/poset.hpp"
#include "arcstat/qstirling.hpp"
#include "arcstat/statistics.hpp"

namespace arcstat {

namespace {

using Clock = std::chrono::steady_clock;

// Runs body(n, fail) for n = 1..max_n, timing the whole sweep. body
// reports a counterexample through fail(partition-text) and may stop
// early by returning false.
template <typename Body>
VerificationOutcome sweep(const std::string& name, int max_n, Body&& body) {
    VerificationOutcome out;
    out.check = name;
    out.min_n = 1;
    out.max_n = max_n;
    out.passed = true;
    auto started = Clock::now();
    for (int n = 1; n <= max_n && out.passed; ++n) {
        body(n, [&](const std::string& text) {
            out.passed = false;
            out.counterexample = text;
        });
    }
    out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    return out;
}

std::string text(const SetPartition& p) { return format_partition(p, PartitionFormat::comma); }

VerificationOutcome check_t_plus_i(const CheckOptions& opt) {
    return sweep("t-plus-i", opt.max_n, [](int n, auto fail) {
        for_each_partition(n, [&](const SetPartition& p) {
            ArcDiagram d = to_arc_diagram(p);
            if (depth_index(d) + intertwining(d) != n * (n - 1) / 2) fail(text(p));
        });
    });
}

VerificationOutcome check_partial_sums(const CheckOptions& opt) {
    return sweep("partial-sums", opt.max_n, [](int n, auto fail) {
        for_each_partition(n, [&](const SetPartition& p) {
            ArcDiagram d = to_arc_diagram(p);
            auto iv = partial_intertwining(d);
            auto tv = partial_depth_index(d);
            int isum = 0, tsum = 0;
            for (int v = 1; v <= n; ++v) {
                isum += iv[v - 1];
                tsum += tv[v - 1];
                if (iv[v - 1] + tv[v - 1] != v - 1) fail(text(p));
            }
            if (isum != intertwining(d) || tsum != depth_index(d)) fail(text(p));
        });
    });
}

VerificationOutcome check_intertwining_methods(const CheckOptions& opt) {
    return sweep("intertwining-methods", opt.max_n, [](int n, auto fail) {
        (void)n;
        for_each_partition(n, [&](const SetPartition& p) {
            ArcDiagram d = to_arc_diagram(p);
            if (intertwining(d, IntertwiningMethod::extended_arcs) !=
                intertwining(d, IntertwiningMethod::block_pairs))
                fail(text(p));
        });
    });
}

VerificationOutcome check_dimension_exponent(const CheckOptions& opt) {
    return sweep("dimension-exponent", opt.max_n, [](int n, auto fail) {
        for_each_partition(n, [&](const SetPartition& p) {
            int from_blocks = 0;
            for (const auto& b : p.blocks()) from_blocks += b.back() - b.front() + 1;
            from_blocks -= n;
            if (classical_stats(to_arc_diagram(p)).dimension_exponent != from_blocks)
                fail(text(p));
        });
    });
}

VerificationOutcome check_nest_cross_equidistribution(const CheckOptions& opt) {
    return sweep("nest-cross-equidist", opt.max_n, [](int n, auto fail) {
        std::vector<int> nestings, crossings;
        for_each_partition(n, [&](const SetPartition& p) {
            ClassicalStats s = classical_stats(to_arc_diagram(p));
            nestings.push_back(s.nestings);
            crossings.push_back(s.crossings);
        });
        std::sort(nestings.begin(), nestings.end());
        std::sort(crossings.begin(), crossings.end());
        if (nestings != crossings) fail("multiset mismatch over Pi_" + std::to_string(n));
    });
}

VerificationOutcome check_rank_control(const CheckOptions& opt) {
    return sweep("rank-control", opt.max_n, [](int n, auto fail) {
        for_each_partition(n, [&](const SetPartition& p) {
            ArcDiagram d = to_arc_diagram(p);
            RankControlMatrix r = rank_control(adjacency_matrix(d));
            if (d_statistic(r) != depth_index(d) || e_statistic(r) != intertwining(d) ||
                d_statistic(r) + e_statistic(r) != n * (n - 1) / 2)
                fail(text(p));
        });
    });
}

VerificationOutcome check_rank_oracle(const CheckOptions& opt) {
    return sweep("rank-oracle", opt.max_n, [](int n, auto fail) {
        (void)n;
        for_each_partition(n, [&](const SetPartition& p) {
            ZeroOneMatrix m = adjacency_matrix(to_arc_diagram(p));
            if (!(rank_control(m) == rank_control_oracle(IntMatrix(m)))) fail(text(p));
        });
    });
}

VerificationOutcome check_orbit_invariance(const CheckOptions& opt) {
    VerificationOutcome out;
    out.check = "orbit-invariance";
    out.min_n = opt.max_n;
    out.max_n = opt.max_n;
    out.passed = true;
    auto started = Clock::now();
    std::uint64_t trial_seed = opt.seed;
    for_each_partition(opt.max_n, [&](const SetPartition& p) {
        if (!out.passed) return;
        ZeroOneMatrix m = adjacency_matrix(to_arc_diagram(p));
        for (int trial = 0; trial < opt.trials; ++trial) {
            if (!orbit_invariance_trial(m, opt.prime, trial_seed++)) {
                out.passed = false;
                out.counterexample = text(p);
                return;
            }
        }
    });
    out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    return out;
}

VerificationOutcome check_phi_bijection(const CheckOptions& opt) {
    return sweep("phi-bijection", opt.max_n, [](int n, auto fail) {
        std::vector<std::vector<std::string>> images(n + 1);
        std::vector<int> counts(n + 1, 0);
        for_each_partition(n, [&](const SetPartition& p) {
            SetPartition image = parviainen_phi(p);
            if (image.block_count() != p.block_count() ||
                dual_major_index(image) != intertwining(to_arc_diagram(p))) {
                fail(text(p));
                return;
            }
            images[p.block_count()].push_back(format_partition(image, PartitionFormat::comma));
            ++counts[p.block_count()];
        });
        for (int k = 1; k <= n; ++k) {
            auto& v = images[k];
            std::sort(v.begin(), v.end());
            if (std::unique(v.begin(), v.end()) != v.end() ||
                static_cast<int>(v.size()) != counts[k])
                fail("phi not injective on Pi_{" + std::to_string(n) + "," + std::to_string(k) + "}");
        }
    });
}

VerificationOutcome check_q_stirling(const CheckOptions& opt) {
    VerificationOutcome out;
    out.check = "q-stirling";
    out.max_n = opt.max_n;
    out.passed = true;
    auto started = Clock::now();
    QStirlingTable table(opt.max_n);
    for (int n = 1; n <= opt.max_n && out.passed; ++n) {
        IntPolynomial total;
        for (int k = 1; k <= n; ++k) {
            if (!(q_stirling_enum(n, k) == table.at(n, k))) {
                out.passed = false;
                out.counterexample = "S_q(" + std::to_string(n) + "," + std::to_string(k) + ")";
                break;
            }
            total += table.at(n, k);
        }
        if (out.passed && !(total == generating_polynomial(n, PartitionStatistic::intertwining))) {
            out.passed = false;
            out.counterexample = "sum_k S_q(" + std::to_string(n) + ",k) != Y_" + std::to_string(n);
        }
        if (out.passed && !(total == generating_polynomial(n, PartitionStatistic::dual_major))) {
            out.passed = false;
            out.counterexample = "sum_k S_q(" + std::to_string(n) + ",k) != B_" + std::to_string(n);
        }
    }
    out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    return out;
}

VerificationOutcome check_bell_minus_one(const CheckOptions& opt) {
    VerificationOutcome out;
    out.check = "bell-minus-one";
    out.min_n = 0;
    out.max_n = opt.max_n;
    out.passed = true;
    auto started = Clock::now();
    for (int n = 0; n <= opt.max_n && out.passed; ++n) {
        if (bell_at_minus_one(n) != bell_at_minus_one_expected(n)) {
            out.passed = false;
            out.counterexample = "n=" + std::to_string(n);
        }
    }
    for (int n = 1; n <= std::min(opt.max_n, 10) && out.passed; ++n) {
        BigInt direct = generating_polynomial(n, PartitionStatistic::depth_index).evaluate(-1);
        if (direct != bell_at_minus_one(n)) {
            out.passed = false;
            out.counterexample = "X_" + std::to_string(n) + "(-1)";
        }
    }
    out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    return out;
}

VerificationOutcome check_h_identity_sweep(const CheckOptions& opt) {
    VerificationOutcome out;
    out.check = "h-identity";
    out.min_n = 0;
    out.max_n = opt.max_n;
    out.passed = true;
    auto started = Clock::now();
    for (int n = 0; n <= opt.max_n && out.passed; ++n) {
        if (!check_h_identity(n)) {
            out.passed = false;
            out.counterexample = "n=" + std::to_string(n);
        }
    }
    out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    return out;
}

VerificationOutcome check_borel_points(const CheckOptions& opt) {
    return sweep("borel-point-count", opt.max_n, [](int n, auto fail) {
        if (!check_borel_point_count(n)) fail("n=" + std::to_string(n));
    });
}

VerificationOutcome check_poset(const CheckOptions& opt) {
    return sweep("poset", opt.max_n, [](int n, auto fail) {
        Poset p = build_poset(n);
        GradednessReport report = check_graded(p);
        if (!report.graded) {
            fail(report.violations.front());
            return;
        }
        std::vector<char> seen(n * (n - 1) / 2 + 1, 0);
        for (int r : p.ranks()) seen[r] = 1;
        if (std::count(seen.begin(), seen.end(), 1) != static_cast<int>(seen.size())) {
            fail("rank gap in Pi_" + std::to_string(n));
            return;
        }
        if (!(rank_polynomial(p) == generating_polynomial(n, PartitionStatistic::depth_index)))
            fail("rank polynomial mismatch at n=" + std::to_string(n));
    });
}

VerificationOutcome check_crossing_index(const CheckOptions& opt) {
    return sweep("crossing-index", opt.max_n, [](int n, auto fail) {
        (void)n;
        for_each_partition(n, [&](const SetPartition& p) {
            ArcDiagram d = to_arc_diagram(p);
            if (crossing_index(d) != depth_index(d)) fail(text(p));
        });
    });
}

VerificationOutcome check_roundtrips(const CheckOptions& opt) {
    return sweep("roundtrip", opt.max_n, [](int n, auto fail) {
        for_each_partition(n, [&](const SetPartition& p) {
            ArcDiagram d = to_arc_diagram(p);
            if (from_arc_diagram(d) != p) fail(text(p));
            if (rgs_decode(rgs_encode(p)) != p) fail(text(p));
            if (parse_partition(format_partition(p, PartitionFormat::comma)) != p) fail(text(p));
            if (n - d.arc_count() != p.block_count()) fail(text(p));
        });
    });
}

std::vector<CheckSpec> make_registry() {
    // caps keep the exhaustive sweeps inside desk-scale budgets
    return {
        {"t-plus-i", "depth index + intertwining = C(n,2)", 9, 12, check_t_plus_i},
        {"partial-sums", "partial statistics sum and pair up correctly", 9, 12, check_partial_sums},
        {"intertwining-methods", "extended-arc and block-pair counts agree", 9, 12,
         check_intertwining_methods},
        {"dimension-exponent", "vertex-depth sum equals the block-span formula", 9, 12,
         check_dimension_exponent},
        {"nest-cross-equidist", "nestings and crossings are equidistributed", 8, 11,
         check_nest_cross_equidistribution},
        {"rank-control", "depth index = D and intertwining = E", 8, 10, check_rank_control},
        {"rank-oracle", "counting formula matches exact Gaussian ranks", 7, 9, check_rank_oracle},
        {"orbit-invariance", "rank control is constant on doubled Borel orbits", 6, 7,
         check_orbit_invariance},
        {"phi-bijection", "phi is a dualmaj-carrying bijection on each Pi_{n,k}", 9, 11,
         check_phi_bijection},
        {"q-stirling", "enumerated and recurrence q-Stirling polynomials agree", 9, 11,
         check_q_stirling},
        {"bell-minus-one", "q=-1 Bell values follow the period-12 pattern", 60, 10000,
         check_bell_minus_one},
        {"h-identity", "sum_k S_q(n,k)(1-q)^(n-k) = 1", 40, 400, check_h_identity_sweep},
        {"borel-point-count", "q^C(n,2) point-count identity", 9, 11, check_borel_points},
        {"poset", "graded order with correct extremes and rank polynomial", 6, 8, check_poset},
        {"crossing-index", "crossing index equals depth index", 8, 11, check_crossing_index},
        {"roundtrip", "conversions and text forms invert each other", 9, 12, check_roundtrips},
    };
}

}  // namespace

const std::vector<CheckSpec>& verification_checks() {
    static const std::vector<CheckSpec> registry = make_registry();
    return registry;
}

const CheckSpec* find_check(const std::string& name) {
    for (const auto& spec : verification_checks())
        if (spec.name == name) return &spec;
    return nullptr;
}

}  // namespace arcstat
