// lrc: construct cyclic locally repairable codes with availability, certify
// their parameters, and reproduce the reference parameter table.
//
// Exit codes: 0 success, 1 reference-table mismatch, 2 usage or parameter error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrc/bounds.hpp"
#include "lrc/construction.hpp"
#include "lrc/distance.hpp"
#include "lrc/locality.hpp"
#include "lrc/report.hpp"
#include "lrc/search.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct CodeFlags {
    std::vector<int> n;
    std::vector<int> rho;
    std::vector<int> b;
    int l = 0;
    std::vector<int> dg;
    std::optional<std::uint32_t> q;

    void add(CLI::App* app, bool with_dg = true) {
        app->add_option("--n", n, "local lengths n_1,...,n_t (pairwise coprime)")->delimiter(',')->required();
        app->add_option("--rho", rho, "local distances rho_1,...,rho_t")->delimiter(',')->required();
        app->add_option("--b", b, "offsets b_1,...,b_t (default all 1)")->delimiter(',');
        app->add_option("--l", l, "global shift l");
        if (with_dg) app->add_option("--dg", dg, "global exponents D_g")->delimiter(',');
        app->add_option("--q", q, "field order (default: smallest q with n | q-1)");
    }

    lrc::ConstructionParams params() const {
        lrc::ConstructionParams p;
        p.lengths = n;
        p.rhos = rho;
        p.offsets = b;
        p.shift = l;
        p.global = dg;
        p.field_order = q;
        p.validate();
        return p;
    }
};

struct Output {
    std::string format = "text";
    std::string out;

    void add(CLI::App* app, std::vector<std::string> formats = {"text", "json"}) {
        app->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
        app->add_option("--out", out, "write output to this file instead of stdout");
    }

    void emit(const std::string& text) const {
        if (out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot open " + out + " for writing");
        f << text;
    }
};

std::string braces(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run_construct(const CodeFlags& flags, const Output& out, const lrc::ReportOptions& options) {
    const auto report = lrc::make_report(flags.params(), options);
    for (int e : report.overlap)
        std::cerr << "warning: global exponent " << e << " already lies in a local defining set\n";
    out.emit(out.format == "json" ? dump(json(report)) : lrc::render_text(report));
    return kExitOk;
}

int run_table1(const Output& out, int row) {
    auto rows = lrc::table1_rows();
    if (row != 0) {
        if (row < 1 || row > static_cast<int>(rows.size()))
            throw lrc::ParamError("--row must lie in [1, " + std::to_string(rows.size()) + "]");
        rows = {rows[static_cast<std::size_t>(row - 1)]};
    }
    std::ostringstream os;
    bool all_match = true;
    for (const auto& r : rows) all_match = all_match && r.matches();

    if (out.format == "csv") {
        os << "n,n1,n2,dg,ht,k,bound\n";
        for (const auto& r : rows) {
            std::string dg;
            for (std::size_t i = 0; i < r.printed.dg.size(); ++i) dg += (i ? " " : "") + std::to_string(r.printed.dg[i]);
            os << r.printed.n << ',' << r.printed.n1 << ',' << r.printed.n2 << ',' << dg << ',' << r.ht << ',' << r.k
               << ',' << r.bound << '\n';
        }
    } else if (out.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.printed.n},
                           {"n1", r.printed.n1},
                           {"n2", r.printed.n2},
                           {"dg", r.printed.dg},
                           {"ht", r.ht},
                           {"k", r.k},
                           {"bound", r.bound},
                           {"q", r.field_order},
                           {"expected", {{"ht", r.printed.ht}, {"k", r.printed.k}, {"bound", r.printed.bound}}},
                           {"match", r.matches()}});
        os << dump(json{{"schema", lrc::kReportSchema}, {"rows", arr}, {"all_match", all_match}});
    } else {
        os << "  n  n1  n2  D_g                   d>=   k  bound    q  check\n";
        for (const auto& r : rows) {
            char line[160];
            std::snprintf(line, sizeof line, "%3d  %2d  %2d  %-20s  %3d  %3d  %5d  %3u  %s\n", r.printed.n, r.printed.n1,
                          r.printed.n2, braces(r.printed.dg).c_str(), r.ht, r.k, r.bound, r.field_order,
                          r.matches() ? "ok" : "MISMATCH");
            os << line;
            if (!r.matches())
                os << "     expected d>=" << r.printed.ht << " k=" << r.printed.k << " bound=" << r.printed.bound << '\n';
        }
        std::size_t matched = 0;
        for (const auto& r : rows) matched += r.matches() ? 1 : 0;
        os << matched << "/" << rows.size() << " rows match\n";
    }
    out.emit(os.str());
    return all_match ? kExitOk : kExitMismatch;
}

int run_search(const CodeFlags& flags, const Output& out, int size, bool overlap, std::uint64_t cap) {
    auto params = flags.params();
    lrc::SearchOptions opts;
    opts.allow_overlap = overlap;
    opts.max_candidates = cap;
    const auto res = lrc::optimize_dg(params, size, opts);
    if (out.format == "json") {
        out.emit(dump(json{{"schema", lrc::kReportSchema},
                           {"dg", res.global.exponents()},
                           {"ht", res.ht},
                           {"k", res.dimension},
                           {"candidates", res.candidates},
                           {"evaluated", res.evaluated}}));
    } else {
        std::ostringstream os;
        os << "D_g = " << braces(res.global.exponents()) << ", HT " << res.ht << ", k = " << res.dimension << "  ("
           << res.candidates << " subsets, " << res.evaluated << " evaluated)\n";
        out.emit(os.str());
    }
    return kExitOk;
}

int run_distance(const CodeFlags& flags, const Output& out, std::uint64_t budget, std::uint64_t trials,
                 std::uint64_t seed) {
    const auto params = flags.params();
    const auto code = lrc::build_code(params);
    auto res = lrc::message_space_size(code.field()->order(), code.dimension()) <= budget
                   ? lrc::min_distance_exact(code, budget)
                   : lrc::min_distance_bracket(code, trials, seed);
    const auto bounds = lrc::compute_bounds(params, code);
    if (out.format == "json") {
        out.emit(dump(json{{"schema", lrc::kReportSchema},
                           {"n", code.length()},
                           {"k", code.dimension()},
                           {"distance", res},
                           {"bch", bounds.bch.bound},
                           {"ht", bounds.ht.bound},
                           {"singleton_like", bounds.singleton_like_min ? json(*bounds.singleton_like_min) : json(nullptr)}}));
    } else {
        std::ostringstream os;
        os << "[" << code.length() << ", " << code.dimension() << "] code over GF(" << code.field()->order() << "): ";
        if (res.exact)
            os << "d = " << res.lower;
        else
            os << res.lower << " <= d <= " << res.upper;
        os << " (" << lrc::to_string(res.method) << ", " << res.evaluations << " weights)\n";
        os << "BCH d >= " << bounds.bch.bound << ", HT d >= " << bounds.ht.bound;
        if (bounds.singleton_like_min) os << ", Singleton-like d <= " << *bounds.singleton_like_min;
        os << '\n';
        out.emit(os.str());
    }
    return kExitOk;
}

int run_verify(const CodeFlags& flags, const Output& out, const std::string& method) {
    const auto params = flags.params();
    const auto code = lrc::build_code(params);
    const auto rep = lrc::verify_availability(code, params, lrc::parse_local_method(method));
    if (out.format == "json") {
        out.emit(dump(json{{"schema", lrc::kReportSchema}, {"availability", rep}}));
    } else {
        std::ostringstream os;
        os << "strong orthogonality: " << (rep.strongly_orthogonal ? "yes" : "NO") << '\n';
        for (const auto& g : rep.groups)
            os << "A_{" << g.partition + 1 << "," << g.index << "} " << braces(g.positions) << "  d_local "
               << (g.local.exact ? "= " : ">= ") << g.local.distance << "  need " << g.rho
               << (g.pass ? "  ok" : "  FAIL") << '\n';
        os << (rep.passed() ? "availability verified" : "availability FAILED") << " (r_i = " << braces(rep.localities)
           << ")\n";
        out.emit(os.str());
    }
    return rep.passed() ? kExitOk : kExitMismatch;
}

int run_repair_demo(const CodeFlags& flags, const Output& out, const std::vector<int>& erase, std::uint64_t seed) {
    const auto params = flags.params();
    const auto code = lrc::build_code(params);
    const lrc::LocalRepairer repairer(code, params);
    if (code.is_zero_code()) throw lrc::ParamError("the code has dimension 0; nothing to repair");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> symbol(0, code.field()->order() - 1);
    std::vector<lrc::gf::Elem> message(static_cast<std::size_t>(code.dimension()));
    for (auto& m : message) m = lrc::gf::Elem{symbol(rng)};
    const auto codeword = code.encode(message);

    lrc::ErasedWord word(codeword.begin(), codeword.end());
    for (int x : erase) {
        if (x < 0 || x >= code.length()) throw lrc::ParamError("erased position " + std::to_string(x) + " out of range");
        word[static_cast<std::size_t>(x)].reset();
    }

    json attempts = json::array();
    std::vector<std::vector<lrc::gf::Elem>> results;
    std::vector<std::string> via;
    for (std::size_t i = 0; i < params.t(); ++i) {
        std::vector<int> groups;
        for (std::size_t j = 0; j < repairer.partitions().partitions[i].size(); ++j)
            for (int x : erase)
                for (int pos : repairer.partitions().partitions[i][j])
                    if (pos == x && std::find(groups.begin(), groups.end(), static_cast<int>(j)) == groups.end())
                        groups.push_back(static_cast<int>(j));
        json entry{{"partition", i + 1}};
        std::vector<std::vector<int>> group_sets;
        for (int j : groups) group_sets.push_back(repairer.partitions().partitions[i][static_cast<std::size_t>(j)]);
        entry["groups"] = group_sets;
        try {
            auto fixed = repairer.repair(word, i);
            entry["ok"] = true;
            entry["matches_original"] = fixed == codeword;
            results.push_back(std::move(fixed));
            std::string names;
            for (std::size_t g = 0; g < group_sets.size(); ++g) names += (g ? ", " : "") + braces(group_sets[g]);
            via.push_back(names.empty() ? "(no erasures)" : names);
        } catch (const lrc::RepairError& e) {
            entry["ok"] = false;
            entry["error"] = e.what();
        }
        attempts.push_back(entry);
    }
    bool agree = !results.empty();
    for (const auto& r : results) agree = agree && r == results.front() && r == codeword;

    if (out.format == "json") {
        std::vector<std::uint32_t> cw;
        for (auto c : codeword) cw.push_back(c.value);
        out.emit(dump(json{{"schema", lrc::kReportSchema},
                           {"codeword", cw},
                           {"erased", erase},
                           {"attempts", attempts},
                           {"agree", agree}}));
    } else {
        std::ostringstream os;
        os << "erased positions " << braces(erase) << " of a random codeword (seed " << seed << ")\n";
        for (const auto& a : attempts)
            if (!a.at("ok").get<bool>())
                os << "partition " << a.at("partition").get<int>() << ": " << a.at("error").get<std::string>() << '\n';
        if (!via.empty()) {
            os << "repaired via groups ";
            for (std::size_t i = 0; i < via.size(); ++i) os << (i ? " and " : "") << via[i];
            os << "; results " << (agree ? "agree" : "DISAGREE") << '\n';
        }
        out.emit(os.str());
    }
    return agree ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic locally repairable codes with availability"};
    app.require_subcommand(1);

    CodeFlags construct_flags;
    Output construct_out;
    lrc::ReportOptions report_opts;
    std::string construct_method = "auto";
    auto* construct = app.add_subcommand("construct", "build a code and report bounds, availability and distance");
    construct_flags.add(construct);
    construct_out.add(construct);
    construct->add_flag("--exact", report_opts.exact_distance, "enumerate the distance when q^k fits the budget");
    construct->add_option("--budget", report_opts.budget, "codeword budget for exact distance");
    construct->add_option("--trials", report_opts.trials, "random messages for the distance bracket");
    construct->add_option("--seed", report_opts.seed, "seed for the distance bracket");
    construct->add_option("--method", construct_method, "local distance method")
        ->check(CLI::IsMember({"auto", "enumerate", "parity-rank"}));

    Output table_out;
    int table_row = 0;
    auto* table1 = app.add_subcommand("table1", "recompute the reference parameter table (golden check)");
    table_out.add(table1, {"text", "csv", "json"});
    table1->add_option("--row", table_row, "only this row (1-based)");

    CodeFlags search_flags;
    Output search_out;
    int search_size = 0;
    bool search_overlap = false;
    std::uint64_t search_cap = lrc::SearchOptions{}.max_candidates;
    auto* search = app.add_subcommand("search-dg", "choose D_g maximizing the Hartmann-Tzeng bound");
    search_flags.add(search, false);
    search_out.add(search);
    search->add_option("--size", search_size, "number of global exponents")->required();
    search->add_flag("--allow-overlap", search_overlap, "also consider exponents of the local sets");
    search->add_option("--cap", search_cap, "maximum number of subsets to enumerate");

    CodeFlags dist_flags;
    Output dist_out;
    std::uint64_t dist_budget = lrc::kDefaultDistanceBudget;
    std::uint64_t dist_trials = lrc::kDefaultBracketTrials;
    std::uint64_t dist_seed = 1;
    auto* distance = app.add_subcommand("distance", "exact or bracketed minimum distance");
    dist_flags.add(distance);
    dist_out.add(distance);
    distance->add_option("--budget", dist_budget, "enumerate exactly when q^k is at most this");
    distance->add_option("--trials", dist_trials, "random messages when bracketing");
    distance->add_option("--seed", dist_seed, "seed when bracketing");

    CodeFlags verify_flags;
    Output verify_out;
    std::string verify_method = "auto";
    auto* verify = app.add_subcommand("verify", "check strong orthogonality and every local distance");
    verify_flags.add(verify);
    verify_out.add(verify);
    verify->add_option("--method", verify_method, "local distance method")
        ->check(CLI::IsMember({"auto", "enumerate", "parity-rank"}));

    CodeFlags repair_flags;
    Output repair_out;
    std::vector<int> repair_erase;
    std::uint64_t repair_seed = 1;
    auto* repair_demo = app.add_subcommand("repair-demo", "erase symbols of a random codeword and repair them locally");
    repair_flags.add(repair_demo);
    repair_out.add(repair_demo);
    repair_demo->add_option("--erase", repair_erase, "positions to erase")->delimiter(',')->required();
    repair_demo->add_option("--seed", repair_seed, "seed for the random codeword");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*construct) {
            report_opts.local_method = lrc::parse_local_method(construct_method);
            return run_construct(construct_flags, construct_out, report_opts);
        }
        if (*table1) return run_table1(table_out, table_row);
        if (*search) return run_search(search_flags, search_out, search_size, search_overlap, search_cap);
        if (*distance) return run_distance(dist_flags, dist_out, dist_budget, dist_trials, dist_seed);
        if (*verify) return run_verify(verify_flags, verify_out, verify_method);
        if (*repair_demo) return run_repair_demo(repair_flags, repair_out, repair_erase, repair_seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
