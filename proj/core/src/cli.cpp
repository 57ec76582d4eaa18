#include "arcstat/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "arcstat/enumerate.hpp"
#include "arcstat/matrix.hpp"
#include "arcstat/partition.hpp"
#include "arcstat/poset.hpp"
#include "arcstat/qstirling.hpp"
#include "arcstat/statistics.hpp"
#include "arcstat/verify.hpp"

namespace arcstat::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxEnumerateN = 12;

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char ch : value) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

nlohmann::json stat_fields(const StatReport& r) {
    return nlohmann::json::parse(to_json(r));
}

int cmd_enumerate(int n, int blocks, const std::string& format, bool with_stats,
                  std::ostream& out, std::ostream& err) {
    if (n < 1 || n > kMaxEnumerateN) {
        err << "enumerate: --n must be in 1.." << kMaxEnumerateN << "\n";
        return kExitUsage;
    }
    if (blocks < 0 || blocks > n) {
        err << "enumerate: --blocks out of range\n";
        return kExitUsage;
    }
    if (format == "lines" && with_stats) {
        err << "enumerate: --with-stats requires --format json or csv\n";
        return kExitUsage;
    }

    PartitionEnumerator e(n, blocks);
    if (format == "lines") {
        while (auto p = e.next()) out << format_partition(*p) << "\n";
        return kExitOk;
    }
    if (format == "csv") {
        out << "rgs,partition,blocks,arcs,i,t,dualmaj,dimexp,nestings,crossings\n";
        while (auto p = e.next()) {
            ArcDiagram d = to_arc_diagram(*p);
            ClassicalStats cs = classical_stats(d);
            out << csv_field(format_rgs(rgs_encode(*p))) << ","
                << csv_field(format_partition(*p)) << "," << p->block_count() << ","
                << d.arc_count() << "," << intertwining(d) << "," << depth_index(d) << ","
                << dual_major_index(*p) << "," << cs.dimension_exponent << "," << cs.nestings
                << "," << cs.crossings << "\n";
        }
        return kExitOk;
    }
    if (format == "json") {
        nlohmann::json list = nlohmann::json::array();
        while (auto p = e.next()) {
            nlohmann::json item;
            item["rgs"] = rgs_encode(*p).word();
            item["partition"] = format_partition(*p);
            item["blocks"] = p->block_count();
            item["arcs"] = to_arc_diagram(*p).arc_count();
            if (with_stats) item.update(stat_fields(stat_report(*p)));
            list.push_back(std::move(item));
        }
        out << list.dump() << "\n";
        return kExitOk;
    }
    err << "enumerate: unknown --format '" << format << "'\n";
    return kExitUsage;
}

int cmd_stats(const std::string& partition, const std::string& format, std::ostream& out,
              std::ostream& err) {
    SetPartition p = parse_partition(partition);
    StatReport r = stat_report(p);
    if (format == "json") {
        out << to_json(r) << "\n";
        return kExitOk;
    }
    if (format == "text") {
        out << "partition            " << format_partition(p, PartitionFormat::comma) << "\n"
            << "n                    " << r.n << "\n"
            << "intertwining         " << r.intertwining << "\n"
            << "depth_index          " << r.depth_index << "\n"
            << "dual_major           " << r.dual_major << "\n"
            << "dimension_exponent   " << r.dimension_exponent << "\n"
            << "nestings             " << r.nestings << "\n"
            << "crossings            " << r.crossings << "\n"
            << "crossing_index       " << r.crossing_index << "\n";
        out << "partial_intertwining";
        for (int v : r.partial_intertwining) out << " " << v;
        out << "\npartial_depth       ";
        for (int v : r.partial_depth) out << " " << v;
        out << "\n";
        return kExitOk;
    }
    err << "stats: unknown --format '" << format << "'\n";
    return kExitUsage;
}

int cmd_phi(const std::string& partition, const std::string& format, std::ostream& out,
            std::ostream& err) {
    SetPartition p = parse_partition(partition);
    SetPartition image = parviainen_phi(p);
    if (format == "text") {
        out << format_partition(image) << "\n";
        return kExitOk;
    }
    if (format == "json") {
        nlohmann::json j;
        j["input"] = format_partition(p);
        j["image"] = format_partition(image);
        j["intertwining"] = intertwining(to_arc_diagram(p));
        j["image_dual_major"] = dual_major_index(image);
        out << j.dump() << "\n";
        return kExitOk;
    }
    err << "phi: unknown --format '" << format << "'\n";
    return kExitUsage;
}

int cmd_matrix(const std::string& partition, const std::string& format, std::ostream& out,
               std::ostream& err) {
    SetPartition p = parse_partition(partition);
    ArcDiagram d = to_arc_diagram(p);
    ZeroOneMatrix m = adjacency_matrix(d);
    RankControlMatrix r = rank_control(m);
    if (format == "json") {
        nlohmann::json j;
        j["n"] = p.n();
        j["adjacency"] = nlohmann::json::parse(matrix_to_json(m));
        j["rank_control"] = nlohmann::json::parse(matrix_to_json(r));
        j["d"] = d_statistic(r);
        j["e"] = e_statistic(r);
        out << j.dump() << "\n";
        return kExitOk;
    }
    if (format == "text") {
        out << "M(A):\n";
        for (int i = 1; i <= m.n(); ++i) {
            out << " ";
            for (int j = 1; j <= m.n(); ++j) out << " " << m.at(i, j);
            out << "\n";
        }
        out << "R(M(A)):\n";
        for (int k = 1; k <= r.n(); ++k) {
            out << " ";
            for (int l = 1; l <= r.n(); ++l) out << " " << r.at(k, l);
            out << "\n";
        }
        out << "D = " << d_statistic(r) << "\nE = " << e_statistic(r) << "\n";
        return kExitOk;
    }
    err << "matrix: unknown --format '" << format << "'\n";
    return kExitUsage;
}

int cmd_poset(int n, const std::string& format, std::ostream& out, std::ostream& err) {
    if (format != "dot" && format != "json") {
        err << "poset: unknown --format '" << format << "'\n";
        return kExitUsage;
    }
    Poset p = build_poset(n);
    out << export_poset(p, format == "dot" ? PosetFormat::dot : PosetFormat::json);
    if (format == "json") out << "\n";
    return kExitOk;
}

void print_polynomial(const IntPolynomial& p, const std::string& format, std::ostream& out) {
    out << (format == "json" ? p.to_json() : p.to_string()) << "\n";
}

int cmd_verify(const std::string& check_name, bool all, int max_n, std::uint64_t seed, int prime,
               int trials, std::ostream& out, std::ostream& err) {
    std::vector<const CheckSpec*> selected;
    if (all) {
        for (const auto& spec : verification_checks()) selected.push_back(&spec);
    } else if (!check_name.empty()) {
        const CheckSpec* spec = find_check(check_name);
        if (!spec) {
            err << "verify: unknown check '" << check_name << "' (see --list)\n";
            return kExitUsage;
        }
        selected.push_back(spec);
    } else {
        err << "verify: pass --check NAME or --all\n";
        return kExitUsage;
    }

    bool all_passed = true;
    for (const CheckSpec* spec : selected) {
        CheckOptions opt;
        opt.max_n = std::min(max_n > 0 ? max_n : spec->default_max_n, spec->cap);
        opt.seed = seed;
        opt.prime = prime;
        opt.trials = trials;
        VerificationOutcome outcome = spec->run(opt);
        out << (outcome.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(22)
            << outcome.check << std::right << "n<=" << outcome.max_n << "  " << std::fixed
            << std::setprecision(1) << outcome.elapsed_ms << " ms";
        if (!outcome.passed && outcome.counterexample)
            out << "  counterexample: " << *outcome.counterexample;
        out << "\n";
        all_passed = all_passed && outcome.passed;
    }
    return all_passed ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"set partition statistics, rank-control orders and q-polynomials"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "stream the partitions of {1..n}");
    int enum_n = 0, enum_blocks = 0;
    std::string enum_format = "lines";
    bool with_stats = false;
    enumerate->add_option("--n", enum_n, "ground-set size")->required();
    enumerate->add_option("--blocks", enum_blocks, "restrict to this block count");
    enumerate->add_option("--format", enum_format, "json|csv|lines (default lines)");
    enumerate->add_flag("--with-stats", with_stats, "include the statistics (json)");

    // stats
    auto* stats = app.add_subcommand("stats", "statistics of one partition");
    std::string stats_partition, stats_format = "json";
    stats->add_option("--partition", stats_partition, "partition text")->required();
    stats->add_option("--format", stats_format, "json|text (default json)");

    // phi
    auto* phi = app.add_subcommand("phi", "Parviainen bijection image");
    std::string phi_partition, phi_format = "text";
    phi->add_option("--partition", phi_partition, "partition text")->required();
    phi->add_option("--format", phi_format, "text|json (default text)");

    // matrix
    auto* matrix = app.add_subcommand("matrix", "adjacency and rank-control matrices, D and E");
    std::string matrix_partition, matrix_format = "json";
    matrix->add_option("--partition", matrix_partition, "partition text")->required();
    matrix->add_option("--format", matrix_format, "json|text (default json)");

    // poset
    auto* poset = app.add_subcommand("poset", "Bruhat-Chevalley-Renner order on the partitions");
    int poset_n = 0;
    std::string poset_format = "dot";
    poset->add_option("--n", poset_n, "ground-set size")->required();
    poset->add_option("--format", poset_format, "dot|json (default dot)");

    // poly
    auto* poly = app.add_subcommand("poly", "exact generating polynomials");
    poly->require_subcommand(1);
    int poly_n = 0, poly_k = 0;
    std::string poly_format = "text";
    std::string eval_at;
    bool check_identity = false;
    auto* stirling = poly->add_subcommand("stirling", "q-Stirling number S_q(n,k)");
    stirling->add_option("--n", poly_n, "")->required();
    stirling->add_option("--k", poly_k, "")->required();
    stirling->add_option("--format", poly_format, "text|json");
    auto* bell = poly->add_subcommand("bell", "q-Bell polynomial B_n(q)");
    bell->add_option("--n", poly_n, "")->required();
    bell->add_option("--eval", eval_at, "evaluate at this integer");
    bell->add_option("--format", poly_format, "text|json");
    auto* hpoly = poly->add_subcommand("h", "H_n(q,t) = sum_k S_q(n,k) t^k");
    hpoly->add_option("--n", poly_n, "")->required();
    hpoly->add_flag("--check-identity", check_identity,
                    "also verify sum_k S_q(n,k)(1-q)^(n-k) = 1");
    hpoly->add_option("--format", poly_format, "text|json");
    auto* xn = poly->add_subcommand("xn", "X_n(q), depth index generating polynomial");
    xn->add_option("--n", poly_n, "")->required();
    xn->add_option("--format", poly_format, "text|json");
    auto* yn = poly->add_subcommand("yn", "Y_n(q), intertwining generating polynomial");
    yn->add_option("--n", poly_n, "")->required();
    yn->add_option("--format", poly_format, "text|json");

    // verify
    auto* verify = app.add_subcommand("verify", "run the theorem checks");
    std::string check_name;
    bool check_all = false, list_checks = false;
    int max_n = 0, prime = 101, trials = 100;
    std::uint64_t seed = 1;
    verify->add_option("--check", check_name, "check name");
    verify->add_flag("--all", check_all, "run every check");
    verify->add_flag("--list", list_checks, "list the check names");
    verify->add_option("--max-n", max_n, "cap the sweeps at this n");
    verify->add_option("--seed", seed, "seed for the randomized checks");
    verify->add_option("--prime", prime, "field characteristic for the randomized checks");
    verify->add_option("--trials", trials, "trials per partition for the randomized checks");

    std::vector<const char*> argv;
    argv.push_back("arcstat");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(enum_n, enum_blocks, enum_format, with_stats, out, err);
        if (stats->parsed()) return cmd_stats(stats_partition, stats_format, out, err);
        if (phi->parsed()) return cmd_phi(phi_partition, phi_format, out, err);
        if (matrix->parsed()) return cmd_matrix(matrix_partition, matrix_format, out, err);
        if (poset->parsed()) return cmd_poset(poset_n, poset_format, out, err);
        if (poly->parsed()) {
            if (poly_format != "text" && poly_format != "json") {
                err << "poly: unknown --format '" << poly_format << "'\n";
                return kExitUsage;
            }
            if (stirling->parsed()) {
                print_polynomial(q_stirling(poly_n, poly_k), poly_format, out);
                return kExitOk;
            }
            if (bell->parsed()) {
                IntPolynomial b = generating_polynomial(poly_n, PartitionStatistic::dual_major);
                if (!eval_at.empty()) {
                    out << b.evaluate(BigInt(eval_at)) << "\n";
                    return kExitOk;
                }
                print_polynomial(b, poly_format, out);
                return kExitOk;
            }
            if (hpoly->parsed()) {
                BivariatePolynomial h = h_polynomial(poly_n);
                out << (poly_format == "json" ? h.to_json() : h.to_string()) << "\n";
                if (check_identity) {
                    bool ok = check_h_identity(poly_n);
                    out << "identity: " << (ok ? "PASS" : "FAIL") << "\n";
                    return ok ? kExitOk : kExitVerificationFailure;
                }
                return kExitOk;
            }
            if (xn->parsed()) {
                print_polynomial(generating_polynomial(poly_n, PartitionStatistic::depth_index),
                                 poly_format, out);
                return kExitOk;
            }
            if (yn->parsed()) {
                print_polynomial(generating_polynomial(poly_n, PartitionStatistic::intertwining),
                                 poly_format, out);
                return kExitOk;
            }
        }
        if (verify->parsed()) {
            if (list_checks) {
                for (const auto& spec : verification_checks())
                    out << spec.name << "  (n<=" << spec.default_max_n << ")  " << spec.summary
                        << "\n";
                return kExitOk;
            }
            return cmd_verify(check_name, check_all, max_n, seed, prime, trials, out, err);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace arcstat::cli
