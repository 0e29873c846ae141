#include "erstab/cliques.hpp"
#include "erstab/constructions.hpp"
#include "erstab/covering.hpp"
#include "erstab/errors.hpp"
#include "erstab/graph6.hpp"
#include "erstab/partition.hpp"
#include "erstab/report.hpp"
#include "erstab/search.hpp"
#include "erstab/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace erstab;

namespace {

enum Exit { kOk = 0, kLawFailed = 1, kUsage = 2, kBudget = 3, kInfeasible = 4 };

struct Config {
    int n = 0, r = 2, s = 2, t = 1, a = 0, k = 3, m = 0;
    int min_tau = 0, cover_order = 3;
    int min_n = 1, max_n = 7, s_max = 6;
    bool exact = false, describe = false, timing = false, csv = false;
    std::uint64_t budget = 0;
    int threads = 1;
    std::size_t witness_cap = 32;
    std::string in, out;
};

std::vector<Graph> read_input(const Config& c) {
    if (c.in.empty() || c.in == "-") return read_graph6_stream(std::cin);
    std::ifstream f(c.in);
    if (!f) throw std::invalid_argument("cannot open " + c.in);
    return read_graph6_stream(f);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write " + path);
    f << text;
}

// JSON to PREFIX.json when --out is given, stdout otherwise.
void emit(const Config& c, const Json& j) {
    if (c.out.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_file(c.out + ".json", j.dump(2) + "\n");
}

int construct(const Config& c, const std::string& kind) {
    ConstructionSummary summary;
    const ConstructionParams p{c.n, 2, c.s, c.t, c.a};
    if (kind == "g1") summary = summarize_g1(p);
    else if (kind == "g2") summary = summarize_g2(p);
    else if (kind == "g3") summary = summarize_g3(c.n, c.r);
    else if (kind == "g4") summary = summarize_g4(c.n, c.r, c.t);
    else summary = summarize_h(c.n, c.r, c.s, c.t);
    const auto g6 = graph6_encode(summary.graph);
    if (!c.out.empty()) {
        write_file(c.out + ".g6", g6 + "\n");
        write_file(c.out + ".json", construction_json(summary).dump(2) + "\n");
    } else if (c.describe) {
        std::cout << construction_json(summary).dump(2) << '\n';
    } else {
        std::cout << g6 << '\n';
    }
    return kOk;
}

// One compact JSON object per input graph, in input order.
int per_graph(const Config& c, const std::function<Json(const Graph&)>& analyse) {
    std::string text;
    for (const Graph& g : read_input(c)) {
        Json j = {{"graph6", graph6_encode(g)}, {"n", g.order()}, {"edges", g.edge_count()}};
        j.update(analyse(g));
        text += j.dump() + "\n";
    }
    if (c.out.empty())
        std::cout << text;
    else
        write_file(c.out + ".json", text);
    return kOk;
}

SearchOptions search_options(const Config& c) {
    SearchOptions o;
    if (c.budget) o.budget = c.budget;
    o.threads = c.threads;
    o.witness_cap = c.witness_cap;
    return o;
}

int classical(const Config& c, ClassicalLaw law) {
    const auto rows = verify_classical(c.min_n, c.max_n, law, c.t, search_options(c));
    const auto j = classical_json(law, c.t, rows);
    emit(c, j);
    return j["pass"].get<bool>() ? kOk : kLawFailed;
}

int gap_table(const Config& c) {
    const int lo = c.n ? c.n : c.min_n, hi = c.n ? c.n : c.max_n;
    const auto rows = conjecture_gap_report(lo, hi, c.s_max);
    if (!c.csv) {
        emit(c, gap_report_json(rows));
        return kOk;
    }
    auto cell = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
    std::string text = "n,s,t,conjectured,g1_a,g1,g2_a,g2,theorem_bound,gap\n";
    for (const auto& row : rows) {
        text += std::to_string(row.n) + "," + std::to_string(row.s) + "," + std::to_string(row.t) + "," +
                std::to_string(row.conjectured) + "," + (row.g1 ? std::to_string(row.g1->a) : "") + "," +
                (row.g1 ? std::to_string(row.g1->count) : "") + "," + (row.g2 ? std::to_string(row.g2->a) : "") +
                "," + (row.g2 ? std::to_string(row.g2->count) : "") + "," + cell(row.bound) + "," +
                cell(row.bound_gap) + "\n";
    }
    if (c.out.empty())
        std::cout << text;
    else
        write_file(c.out + ".csv", text);
    return kOk;
}

Json comparison_json(const char* suite, const OracleComparison& cmp, bool timing) {
    Json j;
    j["schema"] = std::string("erstab.verify/") + kSchemaVersion;
    j["suite"] = suite;
    j["oracle"] = search_report_json(cmp.report, timing);
    j["bound"] = cmp.bound;
    Json cons = Json::array();
    for (const auto& [name, count] : cmp.constructions) cons.push_back({{"construction", name}, {"count", count}});
    j["constructions"] = cons;
    if (cmp.report.min_count) j["gap"] = cmp.bound - static_cast<std::int64_t>(*cmp.report.min_count);
    j["pass"] = cmp.oracle_within_bound;
    return j;
}

int sweep_report(const Config& c, const char* suite, const std::vector<SweepOutcome>& parts) {
    Json j;
    j["schema"] = std::string("erstab.verify/") + kSchemaVersion;
    j["suite"] = suite;
    std::uint64_t checked = 0;
    Json failures = Json::array();
    for (const auto& part : parts) {
        checked += part.checked;
        for (const auto& f : part.failures) failures.push_back(f);
    }
    j["checked"] = checked;
    j["failures"] = failures;
    j["pass"] = failures.empty();
    emit(c, j);
    return failures.empty() ? kOk : kLawFailed;
}

int supersat(const Config& c) {
    Json j;
    j["schema"] = std::string("erstab.verify/") + kSchemaVersion;
    j["suite"] = "supersat";
    Json rows = Json::array();
    bool pass = true;
    for (int n = c.min_n; n <= c.max_n; ++n) {
        const auto s = check_supersaturation(n);
        pass = pass && s.failures.empty();
        rows.push_back({{"n", n}, {"graphs", s.graphs}, {"pairs", s.pairs}, {"min_slack", s.min_slack},
                        {"failures", s.failures}});
    }
    j["rows"] = rows;
    j["pass"] = pass;
    emit(c, j);
    return pass ? kOk : kLawFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clique counts of graphs just above the Turan threshold with a covering constraint"};
    app.require_subcommand(1);
    Config c;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--out", c.out, "Output prefix (PREFIX.g6 / PREFIX.json); stdout when omitted");
    };
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--in", c.in, "graph6 input file, one graph per line; stdin when omitted");
        add_io(cmd);
    };
    auto add_budget = [&](CLI::App* cmd, const char* what) {
        cmd->add_option("--budget", c.budget, what)->envname("ERSTAB_BUDGET");
    };

    auto* construct_cmd = app.add_subcommand("construct", "Build a construction and print its graph6");
    construct_cmd->require_subcommand(1);
    std::string kind;
    for (const char* name : {"g1", "g2", "g3", "g4", "h"}) {
        auto* sub = construct_cmd->add_subcommand(name);
        sub->add_option("--n", c.n)->required();
        const std::string k = name;
        if (k == "g1" || k == "g2") {
            sub->add_option("--s", c.s)->required();
            sub->add_option("--t", c.t)->required();
            sub->add_option("--a", c.a);
        } else {
            sub->add_option("--r", c.r);
            if (k != "g3") sub->add_option("--t", c.t)->required();
            if (k == "h") sub->add_option("--s", c.s)->required();
        }
        sub->add_flag("--describe", c.describe, "Print the JSON descriptor instead of graph6");
        add_io(sub);
        sub->callback([&kind, k] { kind = k; });
    }

    auto* count_cmd = app.add_subcommand("count", "Count K_k copies");
    count_cmd->add_option("--k", c.k);
    add_input(count_cmd);

    auto* cover_cmd = app.add_subcommand("cover", "Exact K_k covering number with witness");
    cover_cmd->add_option("--k", c.k);
    add_input(cover_cmd);

    auto* partition_cmd = app.add_subcommand("partition", "Distance from r-partite and the supersaturation bound");
    partition_cmd->add_option("--r", c.r);
    partition_cmd->add_flag("--exact", c.exact, "Exact search instead of local search");
    add_budget(partition_cmd, "Cap on r^n/r! colourings in exact mode");
    add_input(partition_cmd);

    auto* search_cmd = app.add_subcommand("search", "Exhaustive minimum clique count");
    search_cmd->add_option("--n", c.n)->required();
    search_cmd->add_option("--m", c.m)->required();
    search_cmd->add_option("--k", c.k);
    search_cmd->add_option("--cover-order", c.cover_order);
    search_cmd->add_option("--min-tau", c.min_tau);
    search_cmd->add_option("--threads", c.threads)->check(CLI::PositiveNumber);
    search_cmd->add_option("--witness-cap", c.witness_cap);
    search_cmd->add_flag("--timing", c.timing, "Include schedule-dependent timing fields");
    add_budget(search_cmd, "Cap on edge subsets swept");
    add_io(search_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->require_subcommand(1);
    std::string suite;
    for (const char* name : {"mantel", "rademacher", "lovasz-simonovits", "conjecture-gap", "two-class", "multipartite",
                             "supersat", "constructions"}) {
        auto* sub = verify_cmd->add_subcommand(name);
        const std::string s = name;
        if (s == "two-class" || s == "multipartite") {
            sub->add_option("--n", c.n)->required();
            if (s == "two-class") {
                sub->add_option("--s", c.s);
                sub->add_option("--t", c.t);
            } else {
                sub->add_option("--r", c.r);
            }
            sub->add_option("--threads", c.threads)->check(CLI::PositiveNumber);
            sub->add_flag("--timing", c.timing);
            add_budget(sub, "Cap on edge subsets swept");
        } else if (s == "conjecture-gap") {
            sub->add_option("--n", c.n, "Single order (overrides --min-n/--max-n)");
            sub->add_option("--min-n", c.min_n);
            sub->add_option("--max-n", c.max_n);
            sub->add_option("--s-max", c.s_max);
            sub->add_flag("--csv", c.csv);
        } else {
            sub->add_option("--min-n", c.min_n);
            sub->add_option("--max-n", c.max_n);
            if (s == "lovasz-simonovits") sub->add_option("--t", c.t);
            if (s == "constructions") sub->add_option("--s-max", c.s_max);
            if (s != "supersat" && s != "constructions") {
                sub->add_option("--threads", c.threads)->check(CLI::PositiveNumber);
                add_budget(sub, "Cap on edge subsets swept per order");
            }
        }
        add_io(sub);
        sub->callback([&suite, s] { suite = s; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (construct_cmd->parsed()) return construct(c, kind);
        if (count_cmd->parsed())
            return per_graph(c, [&](const Graph& g) { return Json{{"k", c.k}, {"count", count_cliques(g, c.k)}}; });
        if (cover_cmd->parsed())
            return per_graph(c, [&](const Graph& g) {
                const auto cover = clique_cover_number(g, c.k);
                return Json{{"k", c.k}, {"size", cover.size}, {"witness", vertex_set_json(cover.witness)}};
            });
        if (partition_cmd->parsed())
            return per_graph(c, [&](const Graph& g) {
                PartitionOptions o;
                o.exact = c.exact;
                if (c.budget) o.budget = c.budget;
                const auto best = min_class_edges(g, c.r, o);
                const auto cls = classify_edges(g, best.witness);
                return Json{{"r", c.r},
                            {"distance", best.count},
                            {"exact", best.exact},
                            {"labels", best.witness.labels},
                            {"class_sizes", best.witness.class_sizes()},
                            {"missing_cross_edges", cls.missing_cross_edges.size()},
                            {"supersat_bound", supersat_lower_bound(g.order(), c.r, g.edge_count(), best.count)},
                            {"cliques", count_cliques(g, c.r + 1)}};
            });
        if (search_cmd->parsed()) {
            const auto report = min_cliques_exhaustive({c.n, c.m, c.k, c.cover_order, c.min_tau}, search_options(c));
            emit(c, search_report_json(report, c.timing));
            if (!c.out.empty()) {
                std::string lines;
                for (const auto& w : report.witnesses) lines += w + "\n";
                write_file(c.out + ".g6", lines);
            }
            return kOk;
        }
        if (suite == "mantel") return classical(c, ClassicalLaw::Mantel);
        if (suite == "rademacher") return classical(c, ClassicalLaw::Rademacher);
        if (suite == "lovasz-simonovits") return classical(c, ClassicalLaw::LovaszSimonovits);
        if (suite == "conjecture-gap") return gap_table(c);
        if (suite == "two-class") {
            const auto cmp = compare_two_class_bound(c.n, c.s, c.t, search_options(c));
            emit(c, comparison_json("two-class", cmp, c.timing));
            return cmp.oracle_within_bound ? kOk : kLawFailed;
        }
        if (suite == "multipartite") {
            const auto cmp = compare_g3_bound(c.n, c.r, search_options(c));
            emit(c, comparison_json("multipartite", cmp, c.timing));
            return cmp.oracle_within_bound ? kOk : kLawFailed;
        }
        if (suite == "supersat") return supersat(c);
        if (suite == "constructions") {
            std::vector<SweepOutcome> parts{check_two_class_formulas(std::max(c.min_n, 8), c.max_n, c.s_max, 16)};
            for (int r = 2; r <= 5; ++r) parts.push_back(check_g3(r, 2 * r + 2, c.max_n, 14));
            return sweep_report(c, "constructions", parts);
        }
    } catch (const Graph6Error& e) {
        std::cerr << "erstab: parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "erstab: budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const Infeasible& e) {
        std::cerr << "erstab: infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "erstab: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "erstab: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
