// tw — treewidth estimation toolkit command-line interface.

#include "tw/decomposition.hpp"
#include "tw/graph.hpp"
#include "tw/lower_bounds.hpp"
#include "tw/oracle.hpp"
#include "tw/partial.hpp"
#include "tw/regression.hpp"
#include "tw/report.hpp"
#include "tw/synthetic.hpp"
#include "tw/upper_bounds.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace tw;

namespace {

std::chrono::milliseconds parse_duration(const std::string& s) {
    size_t pos = 0;
    double value = std::stod(s, &pos);
    std::string unit = s.substr(pos);
    if (unit == "ms") return std::chrono::milliseconds((long long)value);
    if (unit.empty() || unit == "s") return std::chrono::milliseconds((long long)(value * 1e3));
    if (unit == "m") return std::chrono::milliseconds((long long)(value * 6e4));
    if (unit == "h") return std::chrono::milliseconds((long long)(value * 3.6e6));
    throw CLI::ValidationError("--budget", "unknown duration unit: " + unit);
}

TieBreak parse_tie(const std::string& s) {
    if (s == "id") return TieBreak::by_id();
    if (s.rfind("random:", 0) == 0) return TieBreak::random(std::stoull(s.substr(7)));
    throw CLI::ValidationError("--tie", "expected id or random:<seed>");
}

GreedyCriterion parse_criterion(const std::string& s) {
    if (s == "degree") return GreedyCriterion::Degree;
    if (s == "fillin") return GreedyCriterion::FillIn;
    if (s == "degfill") return GreedyCriterion::DegreeFillIn;
    throw CLI::ValidationError("--ub", "expected degree|fillin|degfill");
}

Graph load_graph(const std::string& path) {
    if (path.size() > 4 && path.rfind(".csv") == path.size() - 4) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        return gaifman(load_relational_csv(in)).graph;
    }
    return load_edge_list_file(path);
}

// Minimal CSV-with-header reader used by regress/report.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const {
        for (size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return (int)i;
        throw std::runtime_error("no column named '" + name + "'");
    }
};

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    CsvTable t;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
        if (header) {
            t.columns = std::move(fields);
            header = false;
        } else {
            t.rows.push_back(std::move(fields));
        }
    }
    return t;
}

int cmd_estimate(const std::vector<std::string>& inputs, const std::vector<std::string>& ubs,
                 const std::vector<std::string>& lbs, const std::string& budget,
                 const std::string& tie, const std::string& out_dir, const std::string& csv_path,
                 int jobs) {
    RunConfig config;
    config.inputs = inputs;
    if (!ubs.empty()) {
        config.upper_algorithms.clear();
        for (const auto& s : ubs) config.upper_algorithms.push_back(parse_criterion(s));
    }
    if (!lbs.empty()) {
        config.lower_algorithms.clear();
        for (const auto& s : lbs) config.lower_algorithms.push_back(LowerBoundSpec::parse(s));
    }
    if (!budget.empty()) config.budget = parse_duration(budget);
    config.tie = parse_tie(tie);
    config.out_dir = out_dir;
    config.jobs = jobs;

    auto reports = run_estimation(config);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        write_report_csv(csv, reports);
    } else {
        write_report_csv(std::cout, reports);
    }
    std::cerr << report_summary(reports);
    return exit_code(reports);
}

int cmd_sweep(const std::string& input, std::vector<int> w_values, const std::string& ub,
              const std::string& tie, const std::string& out_path) {
    Graph g = load_graph(input);
    if (w_values.empty())
        for (int w = 0; w <= 32; ++w) w_values.push_back(w);
    std::sort(w_values.begin(), w_values.end());
    auto rows = core_size_sweep(g, w_values, parse_criterion(ub), parse_tie(tie));
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        write_sweep_csv(out, rows);
    } else {
        write_sweep_csv(std::cout, rows);
    }
    return 0;
}

int cmd_generate(const std::string& model, int n, int m, double p, std::uint64_t seed,
                 const std::string& out_path) {
    Graph g;
    if (model == "er")
        g = synthetic::erdos_renyi(n, p, seed);
    else if (model == "pa")
        g = synthetic::preferential_attachment(n, m, seed);
    else if (model == "sw")
        g = synthetic::small_world(n, m, p, seed);
    else
        throw CLI::ValidationError("model", "expected er|pa|sw");

    std::ofstream file;
    std::ostream& out = out_path.empty() ? std::cout : (file.open(out_path), file);
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) out << v << '\t' << u << '\n';
    return 0;
}

int cmd_validate(const std::string& graph_path, const std::string& td_path) {
    Graph g = load_graph(graph_path);
    std::ifstream in(td_path);
    if (!in) throw std::runtime_error("cannot open " + td_path);
    TreeDecomposition td = read_pace(in);
    ValidationReport r = validate(g, td);
    std::cout << "vertices_covered: " << (r.vertices_covered ? "yes" : "no") << '\n'
              << "edges_covered: " << (r.edges_covered ? "yes" : "no") << '\n'
              << "connected_subtrees: " << (r.connected_subtrees ? "yes" : "no") << '\n'
              << "tree_shape: " << (r.tree_shape ? "yes" : "no") << '\n'
              << "width: " << width(td) << '\n';
    if (!r.ok()) {
        std::cout << "detail: " << r.detail << '\n';
        return 1;
    }
    return 0;
}

int cmd_exact(const std::string& graph_path, int max_n) {
    Graph g = load_graph(graph_path);
    std::cout << oracle::exact_treewidth(g, max_n) << '\n';
    return 0;
}

int cmd_regress(const std::string& csv_path, const std::string& xcol, const std::string& ycol,
                const std::vector<std::string>& where, const std::vector<std::string>& exclude) {
    CsvTable t = read_csv(csv_path);
    auto parse_clause = [&](const std::string& clause) {
        auto eq = clause.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--where/--exclude", "expected column=value");
        return std::pair{t.column(clause.substr(0, eq)), clause.substr(eq + 1)};
    };
    std::vector<std::pair<int, std::string>> keep, drop;
    for (const auto& c : where) keep.push_back(parse_clause(c));
    for (const auto& c : exclude) drop.push_back(parse_clause(c));

    int xi = t.column(xcol), yi = t.column(ycol);
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : t.rows) {
        bool selected = true;
        for (auto& [col, val] : keep) selected &= row[col] == val;
        for (auto& [col, val] : drop) selected &= row[col] != val;
        if (selected) pts.emplace_back(std::stod(row[xi]), std::stod(row[yi]));
    }
    PowerLawFit fit = fit_power_law(pts);
    std::cout << "points: " << pts.size() << '\n'
              << "alpha: " << std::exp(fit.log_alpha) << '\n'
              << "log_alpha: " << fit.log_alpha << '\n'
              << "beta: " << fit.beta << '\n'
              << "r_squared: " << fit.r_squared << '\n'
              << "p_value: " << fit.p_value << '\n';
    return 0;
}

int cmd_report(const std::string& csv_path) {
    CsvTable t = read_csv(csv_path);
    int ds = t.column("dataset"), nc = t.column("n"), mc = t.column("m");
    int algo = t.column("algorithm"), kind = t.column("kind"), val = t.column("value");
    int term = t.column("terminated_by"), part = t.column("partial");

    std::map<std::string, BoundReport> by_name;
    for (const auto& row : t.rows) {
        BoundReport& rep = by_name[row[ds]];
        rep.dataset = row[ds];
        if (row[algo] == "error") {
            rep.error = row[term];
            continue;
        }
        rep.n = std::stoi(row[nc]);
        rep.m = std::stoll(row[mc]);
        bool partial = row[part] == "1";
        rep.partial |= partial;
        int value = std::stoi(row[val]);
        if (row[kind] == "upper") {
            if (!rep.best_upper || value < *rep.best_upper) {
                rep.best_upper = value;
                rep.best_upper_algo = row[algo];
            }
        } else if (row[term] != "skipped_work_cap") {
            if (!rep.best_lower || value > *rep.best_lower) {
                rep.best_lower = value;
                rep.best_lower_algo = row[algo];
            }
        }
    }
    std::vector<BoundReport> reports;
    for (auto& [_, rep] : by_name) reports.push_back(std::move(rep));
    std::cout << report_summary(reports);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"treewidth estimation toolkit"};
    app.require_subcommand(1);

    // estimate
    std::vector<std::string> inputs, ubs, lbs, where, exclude;
    std::string budget, tie = "id", out_dir, csv_path;
    int jobs = 1;
    auto* estimate = app.add_subcommand("estimate", "run upper/lower bound estimators");
    estimate->add_option("inputs", inputs, "edge-list or relational .csv files")->required();
    estimate->add_option("--ub", ubs, "upper-bound criteria: degree|fillin|degfill");
    estimate->add_option("--lb", lbs, "lower bounds: mmd|mmd+|delta2d|lbn:<base>|lbn+:<base>");
    estimate->add_option("--budget", budget, "per-run budget, e.g. 500ms, 30s, 5m, 1h");
    estimate->add_option("--tie", tie, "tie-break: id or random:<seed>");
    estimate->add_option("--out", out_dir, "directory for decomposition + checkpoint files");
    estimate->add_option("--csv", csv_path, "write the report CSV here instead of stdout");
    estimate->add_option("--jobs", jobs, "parallel datasets");

    // sweep
    std::string sweep_input, sweep_ub = "degree", sweep_out;
    std::vector<int> w_values;
    auto* sweep = app.add_subcommand("sweep", "core-size sweep over peel widths");
    sweep->add_option("input", sweep_input)->required();
    sweep->add_option("--w", w_values, "peel widths (default 0..32)");
    sweep->add_option("--ub", sweep_ub, "peel criterion: degree|fillin|degfill");
    sweep->add_option("--tie", tie, "tie-break: id or random:<seed>");
    sweep->add_option("--out", sweep_out, "output CSV path (default stdout)");

    // generate
    std::string model, gen_out;
    int gen_n = 0, gen_m = 1;
    double gen_p = 0.0;
    std::uint64_t seed = 0;
    auto* generate = app.add_subcommand("generate", "write a synthetic graph edge list");
    generate->add_option("model", model, "er|pa|sw")->required();
    generate->add_option("-n", gen_n, "vertices")->required();
    generate->add_option("-m", gen_m, "edges per vertex (pa, sw)");
    generate->add_option("-p", gen_p, "edge probability (er) / rewire probability (sw)");
    generate->add_option("--seed", seed, "generator seed");
    generate->add_option("--out", gen_out, "output path (default stdout)");

    // validate
    std::string val_graph, val_td;
    auto* validate_cmd = app.add_subcommand("validate", "check a decomposition file");
    validate_cmd->add_option("graph", val_graph)->required();
    validate_cmd->add_option("decomposition", val_td)->required();

    // exact
    std::string exact_graph;
    int max_n = oracle::kDefaultMaxN;
    auto* exact = app.add_subcommand("exact", "exact treewidth of a small graph");
    exact->add_option("graph", exact_graph)->required();
    exact->add_option("--max-n", max_n, "refuse graphs larger than this");

    // regress
    std::string reg_csv, xcol = "nodes", ycol = "upper";
    auto* regress = app.add_subcommand("regress", "power-law fit over CSV columns");
    regress->add_option("csv", reg_csv)->required();
    regress->add_option("--x", xcol, "x column name");
    regress->add_option("--y", ycol, "y column name");
    regress->add_option("--where", where, "keep rows with column=value");
    regress->add_option("--exclude", exclude, "drop rows with column=value");

    // report
    std::string rep_csv;
    auto* report = app.add_subcommand("report", "summarize an estimate CSV");
    report->add_option("csv", rep_csv)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (estimate->parsed())
            return cmd_estimate(inputs, ubs, lbs, budget, tie, out_dir, csv_path, jobs);
        if (sweep->parsed()) return cmd_sweep(sweep_input, w_values, sweep_ub, tie, sweep_out);
        if (generate->parsed()) return cmd_generate(model, gen_n, gen_m, gen_p, seed, gen_out);
        if (validate_cmd->parsed()) return cmd_validate(val_graph, val_td);
        if (exact->parsed()) return cmd_exact(exact_graph, max_n);
        if (regress->parsed()) return cmd_regress(reg_csv, xcol, ycol, where, exclude);
        if (report->parsed()) return cmd_report(rep_csv);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
