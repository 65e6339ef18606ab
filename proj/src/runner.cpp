#include "ohs/runner.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <limits>

#include "ohs/homothet_hitter.hpp"
#include "ohs/online_hitter.hpp"

namespace ohs {

using json = nlohmann::ordered_json;

namespace {

void record_failure(RunResult& r, const std::string& what) {
    if (r.invariants_ok) r.invariant_failure = what;
    r.invariants_ok = false;
}

void run_rects(const Instance& inst, const RunOptions& options, RunResult& out) {
    auto tree = std::make_shared<const BBDTree>(BBDTree::build(inst.points));
    OnlineHitter hitter(tree);
    std::size_t last_size = 0;
    std::size_t last_active = 0;
    for (std::size_t i = 0; i < inst.rects.size(); ++i) {
        const RoundReport& rep = hitter.process(inst.rects[i]);
        if (options.check_invariants) {
            if (!hitter.hits(inst.rects[i])) record_failure(out, "object " + std::to_string(i) + " not hit");
            if (hitter.hitting_set().size() < last_size || hitter.active_count() < last_active) {
                record_failure(out, "state shrank in round " + std::to_string(i + 1));
            }
            const InvariantReport inv = hitter.check_invariants();
            if (!inv.ok()) {
                record_failure(out, "invariant broken in round " + std::to_string(i + 1) + " at node " +
                                        std::to_string(inv.counterexample));
            }
            last_size = hitter.hitting_set().size();
            last_active = hitter.active_count();
        }
        if (options.keep_log) {
            json line{{"round", rep.round},           {"object", i},
                      {"already_hit", rep.already_hit}, {"activated", rep.activated_nodes},
                      {"added", rep.added_points},     {"fallback", rep.fallback_point_used}};
            out.round_log.push_back(line.dump());
        }
    }
    out.hitting_set.assign(hitter.hitting_set().begin(), hitter.hitting_set().end());
    out.tree_depth = tree->depth();
    out.piece_depths = {tree->depth()};
    out.max_points_per_round = hitter.max_points_per_round();
    const auto counts = hitter.unhit_round_counts();
    out.per_point_max_unhit_rounds = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
    out.unhit_bound_ok = out.per_point_max_unhit_rounds <= static_cast<std::size_t>(tree->depth()) + 1;
}

void run_homothets(const Instance& inst, const RunOptions& options, RunResult& out) {
    HomothetHitter hitter(inst.points, *inst.polygon);
    std::size_t last_size = 0;
    for (std::size_t i = 0; i < inst.homothets.size(); ++i) {
        const HomothetRoundReport& rep = hitter.process(inst.homothets[i]);
        if (options.check_invariants) {
            if (!hitter.hits(inst.homothets[i])) record_failure(out, "object " + std::to_string(i) + " not hit");
            if (hitter.hitting_set().size() < last_size) record_failure(out, "hitting set shrank");
            for (std::size_t j = 0; j < hitter.pieces().size(); ++j) {
                if (!hitter.pieces()[j].hitter.check_invariants().ok()) {
                    record_failure(out, "piece " + std::to_string(j) + " invariant broken in round " +
                                            std::to_string(i + 1));
                }
            }
            last_size = hitter.hitting_set().size();
        }
        if (options.keep_log) {
            json line{{"round", rep.round},         {"object", i},
                      {"already_hit", rep.already_hit}, {"pieces", rep.fed_pieces},
                      {"added", rep.added_points},   {"fallback", rep.fallback_point_used}};
            out.round_log.push_back(line.dump());
        }
    }
    out.hitting_set.assign(hitter.hitting_set().begin(), hitter.hitting_set().end());
    out.piece_depths = hitter.piece_depths();
    out.tree_depth = *std::max_element(out.piece_depths.begin(), out.piece_depths.end());
    out.max_points_per_round = hitter.max_points_per_round();
    for (const auto& piece : hitter.pieces()) {
        const auto counts = piece.hitter.unhit_round_counts();
        const std::size_t worst = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
        out.per_point_max_unhit_rounds = std::max(out.per_point_max_unhit_rounds, worst);
        if (worst > static_cast<std::size_t>(piece.tree->depth()) + 1) out.unhit_bound_ok = false;
    }
}

}  // namespace

double instance_rho(const Instance& inst) {
    if (inst.mode == Mode::homothets) return 1.0;
    double rho = 1.0;
    for (const AxisRect& r : inst.rects) {
        rho = std::max(rho, r.degenerate() ? std::numeric_limits<double>::infinity() : aspect_ratio(r));
    }
    return rho;
}

RunResult run_instance(const Instance& inst, const RunOptions& options) {
    check_feasible(inst);
    RunResult out;
    out.mode = inst.mode;
    out.n = inst.points.size();
    out.m = inst.object_count();
    out.rho = instance_rho(inst);

    const auto start = std::chrono::steady_clock::now();
    if (inst.mode == Mode::rects) {
        run_rects(inst, options, out);
    } else {
        run_homothets(inst, options, out);
    }
    const auto stop = std::chrono::steady_clock::now();
    out.wall_time_ms = options.deterministic ? 0.0 : std::chrono::duration<double, std::milli>(stop - start).count();
    out.alg_size = out.hitting_set.size();

    if (options.compute_opt) {
        const HittingInstance hi = inst.mode == Mode::rects ? reduce(inst.rects, inst.points)
                                                            : reduce(inst.homothets, *inst.polygon, inst.points);
        out.opt = exact_min_hitting_set(hi, {options.time_limit_seconds});
        if (out.opt->proven && out.opt->size() > 0) out.ratio = competitive_ratio(out.alg_size, out.opt->size());
    }
    return out;
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_header() { return "seed,n,m,rho,depth,alg,opt,ratio,max_per_round,ms"; }

std::string csv_row(const Instance& inst, const RunResult& r) {
    const auto seed = inst.seed();
    std::string row = seed ? std::to_string(*seed) : std::string();
    row += "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," + format_number(r.rho) + "," +
           std::to_string(r.tree_depth) + "," + std::to_string(r.alg_size) + ",";
    if (!r.opt) {
        row += "NA,NA";
    } else if (!r.opt->proven) {
        row += "UNPROVEN,NA";
    } else {
        row += std::to_string(r.opt->size()) + ",";
        if (r.ratio) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", *r.ratio);
            row += buf;
        } else {
            row += "NA";
        }
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_time_ms);
    row += "," + std::to_string(r.max_points_per_round) + "," + ms;
    return row;
}

json report_json(const RunResult& r, const std::string& log_path) {
    json j;
    j["mode"] = to_string(r.mode);
    j["n"] = r.n;
    j["m"] = r.m;
    j["rho"] = r.rho;
    j["alg_size"] = r.alg_size;
    if (!r.opt) {
        j["opt_size"] = nullptr;
    } else if (r.opt->proven) {
        j["opt_size"] = r.opt->size();
    } else {
        j["opt_size"] = "unproven";
        j["opt_best_found"] = r.opt->size();
        j["opt_lower_bound"] = r.opt->lower_bound;
    }
    j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
    j["tree_depth"] = r.tree_depth;
    j["piece_depths"] = r.piece_depths;
    j["max_points_per_round"] = r.max_points_per_round;
    j["per_point_max_unhit_rounds"] = r.per_point_max_unhit_rounds;
    j["unhit_bound_ok"] = r.unhit_bound_ok;
    j["invariants_ok"] = r.invariants_ok;
    if (!r.invariants_ok) j["invariant_failure"] = r.invariant_failure;
    j["wall_time_ms"] = r.wall_time_ms;
    j["hitting_set"] = r.hitting_set;
    j["round_log"] = log_path.empty() ? json(nullptr) : json(log_path);
    return j;
}

}  // namespace ohs
