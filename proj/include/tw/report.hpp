#pragma once

#include "tw/graph.hpp"
#include "tw/lower_bounds.hpp"
#include "tw/upper_bounds.hpp"

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tw {

/// A lower-bound algorithm selection: a base estimator or an lbn/lbn+
/// wrapper around one.
struct LowerBoundSpec {
    enum class Kind { MMD, Delta2D, MMDPlus, LBN, LBNPlus };
    Kind kind = Kind::MMD;
    LbnBase base = LbnBase::MMD;  // for LBN / LBNPlus

    static LowerBoundSpec parse(const std::string& s);  // mmd|mmd+|delta2d|lbn:<base>|lbn+:<base>
    std::string name() const;
};

struct RunConfig {
    std::vector<std::string> inputs;  // edge-list paths (or .csv relational)
    std::vector<GreedyCriterion> upper_algorithms{GreedyCriterion::Degree};
    std::vector<LowerBoundSpec> lower_algorithms{LowerBoundSpec{},
                                                 {LowerBoundSpec::Kind::MMDPlus}};
    TieBreak tie = TieBreak::by_id();
    std::optional<std::chrono::milliseconds> budget;  // per algorithm run
    std::string out_dir;                              // decomposition + checkpoint files, when set
    std::optional<long long> delta2d_work_cap = 100'000'000'000ll;
    int jobs = 1;
};

struct AlgoRow {
    std::string algorithm;
    std::string kind;  // "lower" or "upper"
    int value = 0;
    long long elapsed_ms = 0;
    std::string terminated_by;
    bool partial = false;  // timed out / stopped before completion
};

struct BoundReport {
    std::string dataset;
    int n = 0;
    long long m = 0;
    std::optional<int> best_lower;
    std::string best_lower_algo;
    std::optional<int> best_upper;
    std::string best_upper_algo;
    std::vector<AlgoRow> rows;
    bool partial = false;
    bool bound_violation = false;  // best_lower > best_upper with both complete
    std::string error;             // unreadable input etc.
};

/// Runs the configured estimators on one already-loaded graph.
BoundReport estimate_graph(const std::string& name, const Graph& g, const RunConfig& config);

/// Loads every input and runs estimate_graph, in parallel when jobs > 1.
/// Unreadable inputs produce error rows instead of aborting the batch.
std::vector<BoundReport> run_estimation(const RunConfig& config);

/// CSV: dataset,n,m,algorithm,kind,value,elapsed_ms,terminated_by,partial
void write_report_csv(std::ostream& out, const std::vector<BoundReport>& reports);

/// Table-1-style summary with relative widths (bound / n).
std::string report_summary(const std::vector<BoundReport>& reports);

/// Exit code policy: 0 ok, 1 partial-only, 2 input errors, 3 internal
/// invariant violation.
int exit_code(const std::vector<BoundReport>& reports);

struct SummaryEntry {
    std::string type, name;
    long long nodes = 0, edges = 0;
    int lower = 0, upper = 0;
    bool upper_partial = false;
};

/// Bundled reference summary table (data/table1.csv).
std::vector<SummaryEntry> load_summary_table(std::istream& in);

}  // namespace tw
