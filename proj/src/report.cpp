#include "tw/report.hpp"

#include "tw/decomposition.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace tw {

LowerBoundSpec LowerBoundSpec::parse(const std::string& s) {
    LowerBoundSpec spec;
    if (s == "mmd") {
        spec.kind = Kind::MMD;
    } else if (s == "mmd+") {
        spec.kind = Kind::MMDPlus;
    } else if (s == "delta2d") {
        spec.kind = Kind::Delta2D;
    } else if (s.rfind("lbn+:", 0) == 0) {
        spec.kind = Kind::LBNPlus;
        spec.base = lbn_base_from_string(s.substr(5));
    } else if (s.rfind("lbn:", 0) == 0) {
        spec.kind = Kind::LBN;
        spec.base = lbn_base_from_string(s.substr(4));
    } else {
        throw std::invalid_argument("unknown lower-bound algorithm: " + s);
    }
    return spec;
}

std::string LowerBoundSpec::name() const {
    switch (kind) {
        case Kind::MMD: return "mmd";
        case Kind::Delta2D: return "delta2d";
        case Kind::MMDPlus: return "mmd+";
        case Kind::LBN: return std::string("lbn:") + to_string(base);
        case Kind::LBNPlus: return std::string("lbn+:") + to_string(base);
    }
    return "?";
}

namespace {

std::string dataset_name(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

Graph load_input(const std::string& path) {
    if (std::filesystem::path(path).extension() == ".csv") {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        return gaifman(load_relational_csv(in)).graph;
    }
    return load_edge_list_file(path);
}

}  // namespace

BoundReport estimate_graph(const std::string& name, const Graph& g, const RunConfig& config) {
    BoundReport rep;
    rep.dataset = name;
    rep.n = g.num_vertices();
    rep.m = g.num_edges();

    for (auto criterion : config.upper_algorithms) {
        UpperBoundOptions opt;
        opt.budget = config.budget;
        std::ofstream checkpoint;
        if (!config.out_dir.empty()) {
            std::filesystem::create_directories(config.out_dir);
            checkpoint.open(config.out_dir + "/" + name + "." + to_string(criterion) +
                            ".checkpoints.csv");
            checkpoint << "elapsed_ms,eliminated,width_so_far\n";
            opt.checkpoint_csv = &checkpoint;
        }
        auto ub = greedy_upper_bound(g, criterion, config.tie, opt);

        AlgoRow row;
        row.algorithm = to_string(criterion);
        row.kind = "upper";
        row.value = ub.width_ub;
        row.elapsed_ms = ub.elapsed.count();
        row.terminated_by = to_string(ub.terminated_by);
        row.partial = ub.terminated_by == Termination::Timeout;
        rep.partial |= row.partial;
        rep.rows.push_back(row);
        if (!rep.best_upper || ub.width_ub < *rep.best_upper) {
            rep.best_upper = ub.width_ub;
            rep.best_upper_algo = row.algorithm;
        }
        if (!config.out_dir.empty()) {
            std::ofstream td_out(config.out_dir + "/" + name + "." + to_string(criterion) + ".td");
            write_pace(td_out, ub.decomposition, g.num_vertices());
        }
    }

    for (const auto& spec : config.lower_algorithms) {
        LowerBoundOptions opt{config.budget};
        std::optional<LowerBoundResult> lb;
        switch (spec.kind) {
            case LowerBoundSpec::Kind::MMD: lb = mmd(g, opt); break;
            case LowerBoundSpec::Kind::MMDPlus: lb = mmd_plus(g, opt); break;
            case LowerBoundSpec::Kind::Delta2D:
                if (g.num_vertices() < 2) break;
                lb = delta2d(g, config.delta2d_work_cap, opt);
                if (!lb) {
                    AlgoRow row;
                    row.algorithm = spec.name();
                    row.kind = "lower";
                    row.value = 0;
                    row.terminated_by = "skipped_work_cap";
                    row.partial = true;
                    rep.rows.push_back(row);
                }
                break;
            case LowerBoundSpec::Kind::LBN: lb = lbn(g, spec.base, opt); break;
            case LowerBoundSpec::Kind::LBNPlus: lb = lbn_plus(g, spec.base, opt); break;
        }
        if (!lb) continue;
        AlgoRow row;
        row.algorithm = spec.name();
        row.kind = "lower";
        row.value = lb->value;
        row.elapsed_ms = lb->elapsed.count();
        row.terminated_by = to_string(lb->terminated_by);
        row.partial = lb->terminated_by == Termination::Timeout;
        rep.partial |= row.partial;
        rep.rows.push_back(row);
        if (!rep.best_lower || lb->value > *rep.best_lower) {
            rep.best_lower = lb->value;
            rep.best_lower_algo = row.algorithm;
        }
    }

    if (rep.best_lower && rep.best_upper && !rep.partial && *rep.best_lower > *rep.best_upper)
        rep.bound_violation = true;
    return rep;
}

std::vector<BoundReport> run_estimation(const RunConfig& config) {
    std::vector<BoundReport> reports(config.inputs.size());
    std::mutex mtx;
    size_t next = 0;
    auto worker = [&] {
        for (;;) {
            size_t i;
            {
                std::lock_guard lock(mtx);
                if (next >= config.inputs.size()) return;
                i = next++;
            }
            const auto& path = config.inputs[i];
            BoundReport rep;
            try {
                Graph g = load_input(path);
                rep = estimate_graph(dataset_name(path), g, config);
            } catch (const std::exception& e) {
                rep.dataset = dataset_name(path);
                rep.error = e.what();
            }
            reports[i] = std::move(rep);
        }
    };
    int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return reports;
}

void write_report_csv(std::ostream& out, const std::vector<BoundReport>& reports) {
    out << "dataset,n,m,algorithm,kind,value,elapsed_ms,terminated_by,partial\n";
    for (const auto& rep : reports) {
        if (!rep.error.empty()) {
            out << rep.dataset << ",,,error,,,,\"" << rep.error << "\",\n";
            continue;
        }
        for (const auto& row : rep.rows)
            out << rep.dataset << "," << rep.n << "," << rep.m << "," << row.algorithm << ","
                << row.kind << "," << row.value << "," << row.elapsed_ms << ","
                << row.terminated_by << "," << (row.partial ? 1 : 0) << "\n";
    }
}

std::string report_summary(const std::vector<BoundReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("report_summary: no reports");
    auto sorted = reports;
    std::sort(sorted.begin(), sorted.end(),
              [](const BoundReport& a, const BoundReport& b) { return a.dataset < b.dataset; });
    std::ostringstream out;
    out << std::left << std::setw(24) << "dataset" << std::right << std::setw(10) << "nodes"
        << std::setw(12) << "edges" << std::setw(8) << "lower" << std::setw(8) << "upper"
        << std::setw(12) << "rel_upper" << "  flags\n";
    for (const auto& rep : sorted) {
        if (!rep.error.empty()) {
            out << std::left << std::setw(24) << rep.dataset << "  ERROR: " << rep.error << "\n";
            continue;
        }
        out << std::left << std::setw(24) << rep.dataset << std::right << std::setw(10) << rep.n
            << std::setw(12) << rep.m;
        if (rep.best_lower)
            out << std::setw(8) << *rep.best_lower;
        else
            out << std::setw(8) << "-";
        if (rep.best_upper) {
            out << std::setw(8) << (std::to_string(*rep.best_upper) + (rep.partial ? "*" : ""));
            double rel = rep.n > 0 ? static_cast<double>(*rep.best_upper) / rep.n : 0.0;
            out << std::setw(12) << std::scientific << std::setprecision(2) << rel
                << std::defaultfloat;
        } else {
            out << std::setw(8) << "-" << std::setw(12) << "-";
        }
        out << "  " << (rep.bound_violation ? "BOUND-VIOLATION" : "") << "\n";
    }
    return out.str();
}

int exit_code(const std::vector<BoundReport>& reports) {
    bool any_ok = false, any_error = false, any_violation = false, all_partial = true;
    for (const auto& rep : reports) {
        if (!rep.error.empty()) {
            any_error = true;
            continue;
        }
        any_ok = true;
        if (!rep.partial) all_partial = false;
        if (rep.bound_violation) any_violation = true;
    }
    if (any_violation) return 3;
    if (!any_ok) return 2;
    if (all_partial) return 1;
    return 0;
}

std::vector<SummaryEntry> load_summary_table(std::istream& in) {
    std::vector<SummaryEntry> rows;
    std::string line;
    long lineno = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 7) throw ParseError("expected 7 fields", lineno);
        SummaryEntry e;
        e.type = fields[0];
        e.name = fields[1];
        e.nodes = std::stoll(fields[2]);
        e.edges = std::stoll(fields[3]);
        e.lower = std::stoi(fields[4]);
        e.upper = std::stoi(fields[5]);
        e.upper_partial = fields[6] == "1";
        rows.push_back(std::move(e));
    }
    return rows;
}

}  // namespace tw
