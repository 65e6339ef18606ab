#pragma once

// Runs the online algorithm over an instance and collects the report fields
// shared by the CLI and the Python module.

#include <optional>
#include <string>
#include <vector>

#include "ohs/instance.hpp"
#include "ohs/offline_opt.hpp"

namespace ohs {

struct RunOptions {
    bool compute_opt = true;
    double time_limit_seconds = 10.0;
    bool check_invariants = true;
    bool keep_log = false;
    bool deterministic = false;  // report 0 ms
};

struct RunResult {
    Mode mode = Mode::rects;
    std::size_t n = 0;
    std::size_t m = 0;
    double rho = 1.0;
    std::vector<PointId> hitting_set;  // insertion order
    std::size_t alg_size = 0;
    std::optional<OptResult> opt;
    std::optional<double> ratio;  // set only with a proven optimum >= 1
    int tree_depth = 0;           // max over pieces in homothet mode
    std::vector<int> piece_depths;
    std::size_t max_points_per_round = 0;
    std::size_t per_point_max_unhit_rounds = 0;
    // Every piece satisfies max unhit rounds <= depth + 1.
    bool unhit_bound_ok = true;
    // Every object hit after its round; state invariants held after every round.
    bool invariants_ok = true;
    std::string invariant_failure;
    double wall_time_ms = 0.0;
    std::vector<std::string> round_log;  // JSON lines, when keep_log

    bool opt_proven() const { return opt && opt->proven; }
};

/// Throws InfeasibleInstance for an object containing no point.
RunResult run_instance(const Instance& inst, const RunOptions& options = {});

/// Largest aspect ratio over the objects (1 for homothets).
double instance_rho(const Instance& inst);

std::string csv_header();
std::string csv_row(const Instance& inst, const RunResult& r);

nlohmann::ordered_json report_json(const RunResult& r, const std::string& log_path = "");

/// Shortest round-trip decimal for a double.
std::string format_number(double v);

}  // namespace ohs
