#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mostar/bounds.hpp"
#include "mostar/constructions.hpp"
#include "mostar/graph.hpp"
#include "mostar/indices.hpp"
#include "mostar/lp.hpp"
#include "mostar/search.hpp"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitViolation = 2;

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fmt_rational(const mostar::Rational& r) {
    return r.str();  // "num/den", or plain integer when the denominator is 1
}

struct Output {
    bool as_json = false;
    bool timestamp = false;
    std::string command;
    std::vector<std::string> columns;
    std::vector<json> rows;
    json extra = json::object();

    void emit(std::ostream& os) const {
        if (as_json) {
            json doc;
            doc["schema"] = kSchemaVersion;
            doc["command"] = command;
            if (timestamp) doc["generated_at"] = now_iso8601();
            doc["rows"] = rows;
            for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
            os << doc.dump(2) << "\n";
            return;
        }
        if (timestamp) os << "# generated_at " << now_iso8601() << "\n";
        for (std::size_t c = 0; c < columns.size(); ++c)
            os << (c ? "," : "") << columns[c];
        os << "\n";
        for (const json& row : rows) {
            for (std::size_t c = 0; c < columns.size(); ++c) {
                if (c) os << ",";
                const json& cell = row.at(columns[c]);
                if (cell.is_null())
                    os << "";
                else if (cell.is_string())
                    os << cell.get<std::string>();
                else
                    os << cell.dump();
            }
            os << "\n";
        }
    }

    static std::string now_iso8601() {
        const auto now = std::chrono::system_clock::now();
        const std::time_t t = std::chrono::system_clock::to_time_t(now);
        char buf[32];
        std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
        return buf;
    }
};

// Input auto-detection: a first significant line starting with a digit is
// an edge list (one graph per stream); anything else is graph6, one graph
// per line.
std::vector<std::pair<std::string, mostar::Graph>> read_graphs(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        lines.push_back(line);
    }
    auto significant = [](const std::string& s) {
        const std::size_t pos = s.find_first_not_of(" \t");
        return pos != std::string::npos && s[pos] != '#';
    };
    std::vector<std::pair<std::string, mostar::Graph>> graphs;
    auto first = std::find_if(lines.begin(), lines.end(), significant);
    if (first == lines.end()) return graphs;

    const char lead = (*first)[first->find_first_not_of(" \t")];
    if (lead >= '0' && lead <= '9') {
        std::string joined;
        for (const auto& l : lines) joined += l + "\n";
        std::istringstream stream(joined);
        mostar::Graph g = mostar::parse_edge_list(stream);
        std::string id = g.order() <= 62 ? mostar::write_graph6(g) : "edgelist";
        graphs.emplace_back(std::move(id), std::move(g));
        return graphs;
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!significant(lines[i])) continue;
        try {
            mostar::Graph g = mostar::parse_graph6(lines[i]);
            graphs.emplace_back(lines[i], std::move(g));
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return graphs;
}

std::vector<std::pair<std::string, mostar::Graph>> read_graphs_from(const std::string& path) {
    if (path.empty() || path == "-") return read_graphs(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return read_graphs(in);
}

json report_row(const std::string& id, const mostar::Graph& g, bool as_json) {
    const mostar::IndexReport rep = mostar::full_report(g);
    const mostar::BoundReport bounds = mostar::bound_report(g);
    json row;
    row["graph_id"] = id;
    row["n"] = rep.n;
    row["m"] = rep.m;
    row["min_degree"] = rep.delta_min;
    row["max_degree"] = rep.delta_max;
    row["mo"] = rep.mo;
    row["mo_star"] = rep.mo_star;
    row["irr"] = rep.irr;
    // disconnected graphs: null in JSON, "inf" in CSV
    if (rep.diameter)
        row["diameter"] = *rep.diameter;
    else
        row["diameter"] = as_json ? json(nullptr) : json("inf");
    row["bound_trivial"] = fmt6(bounds.trivial);
    row["bound_global"] = fmt6(bounds.global);
    row["bound_maxdeg"] = fmt6(bounds.maxdeg);
    row["bound_degseq"] = bounds.degseq;
    const double p_delta =
        rep.delta_max >= 1
            ? mostar::maxdeg_unit_bound(static_cast<double>(rep.delta_max) / rep.n)
            : 0.0;
    row["lp_p_delta"] = fmt6(p_delta);
    return row;
}

int run_compute(const std::string& input, Output& out) {
    out.command = "compute";
    out.columns = {"graph_id", "n",   "m",       "min_degree",   "max_degree",
                   "mo",       "mo_star", "irr", "diameter",     "bound_trivial",
                   "bound_global", "bound_maxdeg", "bound_degseq", "lp_p_delta"};
    for (const auto& [id, g] : read_graphs_from(input))
        out.rows.push_back(report_row(id, g, out.as_json));
    return kExitOk;
}

int run_bounds(const std::string& input, Output& out) {
    out.command = "bounds";
    out.columns = {"graph_id",      "n",           "m",           "mo_star",
                   "bound_trivial", "slack_trivial", "bound_global", "slack_global",
                   "bound_maxdeg",  "slack_maxdeg",  "bound_degseq", "slack_degseq"};
    for (const auto& [id, g] : read_graphs_from(input)) {
        const mostar::BoundReport b = mostar::bound_report(g);
        json row;
        row["graph_id"] = id;
        row["n"] = g.order();
        row["m"] = g.edge_count();
        row["mo_star"] = b.mo_star_actual;
        row["bound_trivial"] = fmt6(b.trivial);
        row["slack_trivial"] = fmt6(b.slack_trivial);
        row["bound_global"] = fmt6(b.global);
        row["slack_global"] = fmt6(b.slack_global);
        row["bound_maxdeg"] = fmt6(b.maxdeg);
        row["slack_maxdeg"] = fmt6(b.slack_maxdeg);
        row["bound_degseq"] = b.degseq;
        row["slack_degseq"] = b.slack_degseq;
        out.rows.push_back(std::move(row));
    }
    return kExitOk;
}

int run_certify_lp(int n, int delta, bool exact_simplex, const std::string& export_path,
                   Output& out) {
    out.command = "certify-lp";
    out.columns = {"n",          "delta",      "p_delta", "identity_residual",
                   "dual_feasible", "violations", "opt_p",   "weak_duality"};

    const mostar::DualCertificate cert = mostar::lemma1_certificate(n, delta);
    const mostar::DualFeasibility feas = mostar::check_dual_feasible(cert, n, delta);
    const double identity =
        std::abs(2.0 * std::sqrt(cert.p) + static_cast<double>(n) / delta * cert.p - 1.0);

    json row;
    row["n"] = n;
    row["delta"] = delta;
    row["p_delta"] = fmt6(cert.p);
    row["identity_residual"] = fmt6(identity);
    row["dual_feasible"] = feas.feasible;
    row["violations"] = feas.violations.size();
    row["opt_p"] = nullptr;
    row["weak_duality"] = nullptr;

    const mostar::LpInstance lp = mostar::build_primal(n, delta);
    if (!export_path.empty()) {
        std::ofstream lp_out(export_path);
        if (!lp_out) throw std::runtime_error("cannot write LP file: " + export_path);
        lp_out << mostar::write_lp_format(lp);
    }
    if (exact_simplex) {
        const mostar::PrimalSolution opt = mostar::solve_exact(lp);
        row["opt_p"] = fmt_rational(opt.objective);
        row["weak_duality"] = mostar::check_weak_duality(opt, cert, n, delta);
    }
    out.rows.push_back(std::move(row));
    return kExitOk;
}

int run_construct(const std::string& family, std::int64_t n, std::optional<std::int64_t> k,
                  Output& out) {
    out.command = "construct";
    out.columns = {"family", "n", "k", "levels", "mo_closed_form", "mo_star_closed_form",
                   "graph6"};
    json row;
    row["family"] = family;
    row["n"] = n;
    if (family == "split") {
        const std::int64_t kk =
            k ? *k : static_cast<std::int64_t>(std::floor(static_cast<double>(n) / 3.0 + 0.5));
        mostar::SplitSpec spec{n, kk};
        row["k"] = kk;
        row["levels"] = nullptr;
        row["mo_closed_form"] = mostar::split_mostar_closed_form(spec).str();
        row["mo_star_closed_form"] = mostar::split_mostar_star_closed_form(spec).str();
        row["graph6"] = nullptr;
        if (n <= 62) row["graph6"] = mostar::write_graph6(mostar::split_graph(spec));
    } else if (family == "nested") {
        if (k) throw std::runtime_error("--k applies to the split family only");
        const mostar::NestedSpec spec = mostar::nested_spec(n);
        std::string levels;
        for (const auto& [ni, di] : spec.levels) {
            if (!levels.empty()) levels += "|";
            levels += std::to_string(ni) + ":" + std::to_string(di);
        }
        row["k"] = nullptr;
        row["levels"] = levels;
        row["mo_closed_form"] = nullptr;
        row["mo_star_closed_form"] = mostar::nested_mostar_star(spec).str();
        row["graph6"] = nullptr;
        if (n <= 62) row["graph6"] = mostar::write_graph6(mostar::nested_graph(spec));
    } else {
        throw std::runtime_error("unknown family: " + family);
    }
    out.rows.push_back(std::move(row));
    return kExitOk;
}

void scan_rows(const mostar::ScanResult& result, Output& out) {
    out.columns = {"n",          "graphs_scanned",      "max_mo", "max_mo_witness",
                   "max_mo_star", "max_mo_star_witness", "violations", "parse_failures"};
    for (const auto& os : result.orders) {
        json row;
        row["n"] = os.n;
        row["graphs_scanned"] = os.graphs_scanned;
        row["max_mo"] = os.max_mo;
        row["max_mo_witness"] = os.max_mo_witness;
        row["max_mo_star"] = os.max_mo_star;
        row["max_mo_star_witness"] = os.max_mo_star_witness;
        row["violations"] = result.violation_count;
        row["parse_failures"] = result.parse_failures.size();
        out.rows.push_back(std::move(row));
    }
    json violations = json::array();
    for (const auto& v : result.violations)
        violations.push_back({{"check", v.check}, {"witness", v.witness_graph6}, {"index", v.index}});
    out.extra["violations"] = violations;
    json failures = json::array();
    for (const auto& f : result.parse_failures)
        failures.push_back({{"line", f.line}, {"message", f.message}});
    out.extra["parse_failures"] = failures;

    for (const auto& v : result.violations)
        std::cerr << "violation: " << v.check << " witness=" << v.witness_graph6
                  << " index=" << v.index << "\n";
    for (const auto& f : result.parse_failures)
        std::cerr << "parse failure: line " << f.line << ": " << f.message << "\n";
}

int run_enumerate(int n, Output& out) {
    out.command = "enumerate";
    const mostar::ScanResult result = mostar::exhaustive_scan(n);
    scan_rows(result, out);
    return result.violation_count == 0 ? kExitOk : kExitViolation;
}

int run_scan(const std::string& path, Output& out) {
    out.command = "scan";
    const mostar::ScanResult result = mostar::corpus_scan_file(path);
    scan_rows(result, out);
    return result.violation_count == 0 ? kExitOk : kExitViolation;
}

int run_search(const mostar::LocalSearchConfig& config, Output& out) {
    out.command = "search";
    out.columns = {"n",       "restarts", "seed",        "max_plateau_steps",
                   "zero_degree_hint", "best_mo",  "witness",     "baseline_mo",
                   "ratio_vs_baseline", "evaluations"};
    const mostar::LocalSearchResult r = mostar::local_search_max_mo(config);
    json row;
    row["n"] = config.n;
    row["restarts"] = config.restarts;
    row["seed"] = config.seed;
    row["max_plateau_steps"] = config.max_plateau_steps;
    row["zero_degree_hint"] = config.prioritize_zero_degree_pairs;
    row["best_mo"] = r.best_mo;
    row["witness"] = r.witness_graph6;
    row["baseline_mo"] = r.split_baseline_mo;
    row["ratio_vs_baseline"] = fmt6(r.ratio_vs_split_baseline);
    row["evaluations"] = r.evaluations;
    out.rows.push_back(std::move(row));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mostar index toolkit: invariants, upper bounds, LP certificates,"
                 " extremal constructions, and exhaustive scans"};
    app.require_subcommand(1);

    Output out;
    app.add_flag("--json", out.as_json, "emit JSON instead of CSV");
    app.add_flag("--timestamp", out.timestamp, "add a generation timestamp to the output");

    std::string input = "-";
    auto* compute = app.add_subcommand("compute", "index report rows for graph6/edge-list input");
    compute->add_option("input", input, "input file (default: stdin)");
    auto* bounds = app.add_subcommand("bounds", "upper bounds and slack per input graph");
    bounds->add_option("input", input, "input file (default: stdin)");

    int lp_n = 0, lp_delta = 0;
    bool exact_simplex = false;
    std::string export_lp;
    auto* certify = app.add_subcommand("certify-lp", "dual certificate audit for (n, Delta)");
    certify->add_option("--n", lp_n, "order")->required();
    certify->add_option("--delta", lp_delta, "maximum degree")->required();
    certify->add_flag("--exact-simplex", exact_simplex, "solve OPT(P) with the exact simplex");
    certify->add_option("--export-lp", export_lp, "write the LP in CPLEX-LP text format");

    std::string family;
    std::int64_t cons_n = 0;
    std::int64_t cons_k = -1;
    auto* construct = app.add_subcommand("construct", "split / nested extremal families");
    construct->add_option("--family", family, "split|nested")->required();
    construct->add_option("--n", cons_n, "order")->required();
    construct->add_option("--k", cons_k, "clique size (split family; default round(n/3))");

    int enum_n = 0;
    auto* enumerate = app.add_subcommand("enumerate", "exhaustive invariant scan over all labeled graphs");
    enumerate->add_option("--n", enum_n, "order (1..7)")->required();

    std::string scan_path;
    auto* scan = app.add_subcommand("scan", "invariant scan over a graph6 corpus file");
    scan->add_option("--file", scan_path, "graph6 file")->required();

    mostar::LocalSearchConfig ls;
    auto* search = app.add_subcommand("search", "hill-climbing search for Mo-maximizing graphs");
    search->add_option("--n", ls.n, "order (4..60)")->required();
    search->add_option("--restarts", ls.restarts, "number of restarts")->required();
    search->add_option("--seed", ls.seed, "RNG seed (default 0)");
    search->add_option("--max-plateau", ls.max_plateau_steps, "plateau step budget");
    search->add_flag("--zero-degree-hint", ls.prioritize_zero_degree_pairs,
                     "prefer adding edges between zero-outdegree and zero-indegree vertices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        int code = kExitOk;
        if (*compute)
            code = run_compute(input, out);
        else if (*bounds)
            code = run_bounds(input, out);
        else if (*certify)
            code = run_certify_lp(lp_n, lp_delta, exact_simplex, export_lp, out);
        else if (*construct)
            code = run_construct(family, cons_n,
                                 cons_k >= 0 ? std::optional<std::int64_t>(cons_k) : std::nullopt,
                                 out);
        else if (*enumerate)
            code = run_enumerate(enum_n, out);
        else if (*scan)
            code = run_scan(scan_path, out);
        else if (*search)
            code = run_search(ls, out);
        out.emit(std::cout);
        return code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
