// ohs: command-line harness.
//
// Exit codes: 0 success, 1 internal or validation failure, 2 infeasible
// input, 3 parse error.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ohs/bbd_tree.hpp"
#include "ohs/generators.hpp"
#include "ohs/runner.hpp"
#include "ohs/tree_validate.hpp"

using namespace ohs;
using json = nlohmann::ordered_json;

namespace {

constexpr int kFailure = 1;
constexpr int kInfeasible = 2;
constexpr int kParse = 3;

struct CliError {
    int code;
    std::string message;
};

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{kFailure, "cannot write " + path};
    out << text;
}

Instance load(const std::string& path) {
    try {
        return load_instance(path);
    } catch (const ParseError& e) {
        throw CliError{kParse, path + ": " + e.what()};
    } catch (const std::runtime_error& e) {
        throw CliError{kParse, e.what()};
    }
}

RunResult run_checked(const Instance& inst, const RunOptions& opts) {
    try {
        return run_instance(inst, opts);
    } catch (const InfeasibleInstance& e) {
        throw CliError{kInfeasible, "infeasible object " + std::to_string(e.object_index())};
    }
}

void require_sound(const RunResult& r) {
    if (!r.invariants_ok) throw CliError{kFailure, "invariant violation: " + r.invariant_failure};
    if (!r.unhit_bound_ok) {
        throw CliError{kFailure, "per-point unhit rounds " + std::to_string(r.per_point_max_unhit_rounds) +
                                     " exceed depth + 1"};
    }
}

GenSpec spec_from_json(const json& j) {
    GenSpec spec;
    try {
        spec.kind = gen_kind_from_string(j.at("kind").get<std::string>());
        spec.seed = j.at("seed").get<std::uint64_t>();
        spec.n = j.at("n").get<std::size_t>();
        spec.m = j.at("m").get<std::size_t>();
        spec.rho = j.value("rho", 1.0);
        if (j.contains("polygon")) spec.polygon = polygon_from_json(j.at("polygon"));
    } catch (const json::exception& e) {
        throw CliError{kParse, std::string("suite entry: ") + e.what()};
    } catch (const std::invalid_argument& e) {
        throw CliError{kParse, std::string("suite entry: ") + e.what()};
    }
    return spec;
}

int bench(const std::string& suite_path, const std::string& out_path, int jobs, double time_limit, bool det) {
    json suite;
    {
        std::ifstream in(suite_path);
        if (!in) throw CliError{kParse, "cannot open " + suite_path};
        try {
            suite = json::parse(in);
        } catch (const json::parse_error& e) {
            throw CliError{kParse, suite_path + ": " + e.what()};
        }
    }
    if (!suite.is_object() || !suite.contains("runs") || !suite["runs"].is_array()) {
        throw CliError{kParse, suite_path + ": field 'runs': expected array"};
    }
    time_limit = suite.value("time_limit", time_limit);

    std::vector<Instance> instances;
    for (const json& entry : suite["runs"]) {
        if (entry.contains("instance")) {
            instances.push_back(load(entry["instance"].get<std::string>()));
        } else if (entry.contains("gen")) {
            instances.push_back(generate(spec_from_json(entry["gen"])));
        } else {
            throw CliError{kParse, suite_path + ": run entry needs 'instance' or 'gen'"};
        }
    }

    std::vector<std::string> rows(instances.size());
    std::vector<std::string> errors(instances.size());
    std::atomic<std::size_t> next{0};
    RunOptions opts;
    opts.time_limit_seconds = time_limit;
    opts.deterministic = det;
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            try {
                const RunResult r = run_instance(instances[i], opts);
                if (!r.invariants_ok || !r.unhit_bound_ok) errors[i] = "run " + std::to_string(i) + ": check failed";
                rows[i] = csv_row(instances[i], r);
            } catch (const std::exception& e) {
                errors[i] = "run " + std::to_string(i) + ": " + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::string text = csv_header() + "\n";
    int code = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!errors[i].empty()) {
            std::cerr << errors[i] << "\n";
            code = kFailure;
        }
        if (!rows[i].empty()) text += rows[i] + "\n";
    }
    write_text(out_path, text);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online hitting sets of rectangles and polygon homothets"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    std::string kind = "uniform-squares", polygon_path, gen_out;
    std::uint64_t seed = 0;
    std::size_t n = 0, m = 0;
    double rho = 1.0;
    gen->add_option("--kind", kind, "uniform-squares | one-point-nest | grid-khan | homothet-random");
    gen->add_option("--seed", seed)->required();
    gen->add_option("--n", n)->required();
    gen->add_option("--m", m)->required();
    gen->add_option("--rho", rho);
    gen->add_option("--polygon", polygon_path, "Polygon JSON (vertex list)");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    // run
    auto* run = app.add_subcommand("run", "Run the online algorithm");
    std::string run_in, run_out, run_log;
    double time_limit = 10.0;
    bool no_opt = false, deterministic = false;
    run->add_option("-i,--input", run_in)->required();
    run->add_option("-o,--output", run_out, "Report file (default stdout)");
    run->add_option("--log", run_log, "Per-round JSON lines");
    run->add_option("--time-limit", time_limit, "OPT time limit in seconds");
    run->add_flag("--no-opt", no_opt, "Skip the exact optimum");
    run->add_flag("--deterministic", deterministic, "Report zero wall time");

    // opt
    auto* opt = app.add_subcommand("opt", "Exact minimum hitting set");
    std::string opt_in;
    double opt_limit = 0.0;
    opt->add_option("-i,--input", opt_in)->required();
    opt->add_option("--time-limit", opt_limit, "Seconds (0: none)");

    // ratio
    auto* ratio = app.add_subcommand("ratio", "Run + OPT + ratio as one CSV row");
    std::string ratio_in;
    bool header = false, ratio_det = false;
    double ratio_limit = 10.0;
    ratio->add_option("-i,--input", ratio_in)->required();
    ratio->add_option("--time-limit", ratio_limit);
    ratio->add_flag("--header", header, "Print the CSV header first");
    ratio->add_flag("--deterministic", ratio_det, "Report zero wall time");

    // validate-tree
    auto* vt = app.add_subcommand("validate-tree", "Build and validate the BBD tree");
    std::string vt_in;
    bool dump = false;
    vt->add_option("-i,--input", vt_in)->required();
    vt->add_flag("--dump", dump, "Print the tree");

    // bench
    auto* bn = app.add_subcommand("bench", "Batch of ratio rows");
    std::string suite, bench_out;
    int jobs = 1;
    double bench_limit = 10.0;
    bool bench_det = false;
    bn->add_option("--suite", suite)->required();
    bn->add_option("-o,--output", bench_out);
    bn->add_option("-j,--jobs", jobs);
    bn->add_option("--time-limit", bench_limit);
    bn->add_flag("--deterministic", bench_det);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kParse;
    }

    try {
        if (*gen) {
            GenSpec spec;
            try {
                spec.kind = gen_kind_from_string(kind);
                spec.seed = seed;
                spec.n = n;
                spec.m = m;
                spec.rho = rho;
                if (!polygon_path.empty()) spec.polygon = load_polygon(polygon_path);
                write_text(gen_out, serialize(generate(spec)));
            } catch (const ParseError& e) {
                throw CliError{kParse, e.what()};
            } catch (const std::invalid_argument& e) {
                throw CliError{kFailure, e.what()};
            }
            return 0;
        }
        if (*run) {
            const Instance inst = load(run_in);
            RunOptions opts;
            opts.compute_opt = !no_opt;
            opts.time_limit_seconds = time_limit;
            opts.keep_log = !run_log.empty();
            opts.deterministic = deterministic;
            const RunResult r = run_checked(inst, opts);
            if (!run_log.empty()) {
                std::string text;
                for (const auto& line : r.round_log) text += line + "\n";
                write_text(run_log, text);
            }
            write_text(run_out, report_json(r, run_log).dump(1) + "\n");
            require_sound(r);
            return 0;
        }
        if (*opt) {
            const Instance inst = load(opt_in);
            HittingInstance hi;
            try {
                hi = inst.mode == Mode::rects ? reduce(inst.rects, inst.points)
                                              : reduce(inst.homothets, *inst.polygon, inst.points);
            } catch (const InfeasibleInstance& e) {
                throw CliError{kInfeasible, "infeasible object " + std::to_string(e.object_index())};
            }
            const OptResult res = exact_min_hitting_set(hi, {opt_limit});
            if (res.proven) {
                std::cout << "OPT = " << res.size() << "\n";
            } else {
                std::cout << "UNPROVEN (best found = " << res.size() << ", lower bound = " << res.lower_bound
                          << ")\n";
            }
            std::cout << "points:";
            for (PointId p : res.hitting_set) std::cout << " " << p;
            std::cout << "\nnodes: " << res.nodes << "\n";
            return 0;
        }
        if (*ratio) {
            const Instance inst = load(ratio_in);
            RunOptions opts;
            opts.time_limit_seconds = ratio_limit;
            opts.deterministic = ratio_det;
            const RunResult r = run_checked(inst, opts);
            if (header) std::cout << csv_header() << "\n";
            std::cout << csv_row(inst, r) << "\n";
            if (r.opt && r.opt->size() == 0) std::cerr << "warning: vacuous run (no objects)\n";
            require_sound(r);
            return 0;
        }
        if (*vt) {
            const Instance inst = load(vt_in);
            BBDTree tree = [&] {
                try {
                    return BBDTree::build(inst.points);
                } catch (const GeometryError& e) {
                    throw CliError{kFailure, e.what()};
                }
            }();
            const ValidationReport rep = validate(tree);
            if (dump) std::cout << tree.dump();
            std::cout << "n=" << tree.points().size() << " nodes=" << tree.node_count() << " depth=" << tree.depth()
                      << "\n"
                      << rep.to_string();
            return rep.ok() ? 0 : kFailure;
        }
        if (*bn) return bench(suite, bench_out, jobs, bench_limit, bench_det);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return 0;
}
