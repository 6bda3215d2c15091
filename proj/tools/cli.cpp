#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sensorplace/analysis.hpp"
#include "sensorplace/detection.hpp"
#include "sensorplace/majorization.hpp"
#include "sensorplace/montecarlo.hpp"
#include "sensorplace/partitions.hpp"

namespace sensorplace::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    int m = 0;
    int n = 0;
    double p_d = 0.0;
    double p_f = 0.0;
    std::string placement;
    double step = 0.02;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    std::string ties = "uniform";
    std::string out;
    std::string format = "csv";
    bool full_plane = false;
    int threads = 1;
    double budget = 2e9;
    int max_m = 5;
    int n1 = 0;
    int n2 = 0;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json placements_json(const std::vector<Placement>& set) {
    json arr = json::array();
    for (const auto& p : set) arr.push_back(p.label());
    return arr;
}

json report_json(const VerificationReport& r) {
    json cex = json::array();
    for (const auto& v : r.counterexamples)
        cex.push_back({{"p_f", v.p_f}, {"p_d", v.p_d}, {"magnitude", v.magnitude}, {"detail", v.detail}});
    return {{"schema_version", "1"},
            {"claim", r.claim},
            {"checked", r.checked},
            {"skipped", r.skipped},
            {"tolerance", r.tolerance},
            {"max_violation", r.max_violation},
            {"violations", r.violation_count},
            {"counterexamples", cex},
            {"notes", r.notes},
            {"pass", r.pass}};
}

// Writes to a temporary sibling and renames it into place.
void write_atomically(const std::string& path, const std::string& body) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << body;
        if (!f.flush()) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
    if (cfg.out.empty())
        out << body;
    else
        write_atomically(cfg.out, body);
}

SensorModel model_of(const RunConfig& cfg) {
    require(cfg.p_d >= 0 && cfg.p_d <= 1, "--pd must lie in [0,1]");
    require(cfg.p_f >= 0 && cfg.p_f <= 1, "--pf must lie in [0,1]");
    return SensorModel::make(cfg.p_d, cfg.p_f);
}

void require_fit(const RunConfig& cfg) {
    require(cfg.m >= 1, "--m must be at least 1");
    require(cfg.n >= cfg.m, "--n must be at least --m (m <= n)");
}

Placement placement_of(const RunConfig& cfg) {
    require(!cfg.placement.empty(), "--placement is required");
    Placement p = parse_placement(cfg.placement, cfg.n);
    require(p.m() == cfg.m, "--placement must sum to --m");
    return p;
}

int cmd_pe(const RunConfig& cfg, std::ostream& out) {
    require_fit(cfg);
    const auto result = error_probability(placement_of(cfg), model_of(cfg), cfg.n);
    json j{{"schema_version", "1"}, {"pe", result.value}, {"placement", result.placement.label()},
           {"m", cfg.m}, {"n", cfg.n}, {"p_d", cfg.p_d}, {"p_f", cfg.p_f}};
    emit(cfg, j.dump(2) + "\n", out);
    return kExitOk;
}

int cmd_optimal(const RunConfig& cfg, std::ostream& out) {
    require_fit(cfg);
    require(cfg.m <= kMaxSearchSensors, "--m must be at most 20 for exhaustive search");
    const auto opt = optimal_placements(cfg.m, cfg.n, model_of(cfg));
    json j{{"schema_version", "1"}, {"best", placements_json(opt.best)}, {"pe_min", opt.pe_min},
           {"margin", number_or_null(opt.margin)}, {"strict", opt.strict},
           {"m", cfg.m}, {"n", cfg.n}, {"p_d", cfg.p_d}, {"p_f", cfg.p_f}};
    emit(cfg, j.dump(2) + "\n", out);
    return kExitOk;
}

int cmd_partitions(const RunConfig& cfg, std::ostream& out) {
    require(cfg.m >= 1 && cfg.m <= kMaxPartitionTotal, "--m must lie in [1, 40]");
    std::ostringstream body;
    for (const auto& counts : enumerate_partitions(cfg.m).items) {
        for (std::size_t i = 0; i < counts.size(); ++i) body << (i ? "-" : "") << counts[i];
        body << '\n';
    }
    emit(cfg, body.str(), out);
    return kExitOk;
}

int cmd_majorize(const RunConfig& cfg, std::ostream& out) {
    require(cfg.m >= 1 && cfg.m <= kMaxPartitionTotal, "--m must lie in [1, 40]");
    const auto parts = enumerate_partitions(cfg.m).items;
    std::ostringstream body;
    body << "placement";
    for (const auto& p : parts) body << ',' << canonicalize_placement(p, cfg.m).label();
    body << '\n';
    for (const auto& x : parts) {
        body << canonicalize_placement(x, cfg.m).label();
        for (const auto& y : parts) body << ',' << verdict_code(compare(x, y));
        body << '\n';
    }
    emit(cfg, body.str(), out);
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    require_fit(cfg);
    require(cfg.m <= kMaxSearchSensors, "--m must be at most 20 for exhaustive search");
    require(cfg.format == "csv" || cfg.format == "json", "--format must be csv or json");
    SweepOptions opts;
    opts.region = cfg.full_plane ? PlaneRegion::Full : PlaneRegion::PdGePf;
    opts.threads = cfg.threads;
    opts.budget = cfg.budget;
    const auto map = sweep_plane(cfg.m, cfg.n, cfg.step, opts);
    if (cfg.format == "csv") {
        std::ostringstream body;
        write_region_csv(map, body);
        emit(cfg, body.str(), out);
    } else {
        json cells = json::array();
        for (const auto& c : map.cells)
            cells.push_back({{"p_f", c.node.p_f}, {"p_d", c.node.p_d},
                             {"best", placements_json(c.optimum.best)}, {"pe_min", c.optimum.pe_min},
                             {"margin", number_or_null(c.optimum.margin)}, {"strict", c.optimum.strict}});
        json j{{"schema_version", "1"}, {"m", map.m}, {"n", map.n}, {"step", map.step}, {"cells", cells}};
        emit(cfg, j.dump() + "\n", out);
    }
    return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    require_fit(cfg);
    require(cfg.trials >= 1, "--trials must be at least 1");
    require(cfg.ties == "uniform" || cfg.ties == "lowest", "--ties must be uniform or lowest");
    const auto placement = placement_of(cfg);
    const auto model = model_of(cfg);
    SimOptions opts;
    opts.ties = cfg.ties == "uniform" ? TieRule::UniformRandom : TieRule::LowestIndex;
    opts.threads = cfg.threads;
    const auto sim = simulate(placement, model, cfg.n, cfg.trials, cfg.seed, opts);
    const double exact = error_probability(placement, model, cfg.n).value;
    const double z = sim.std_err > 0 ? (sim.pe_hat - exact) / sim.std_err : 0.0;
    json j{{"schema_version", "1"}, {"trials", sim.trials}, {"errors", sim.errors},
           {"pe_hat", sim.pe_hat}, {"std_err", sim.std_err}, {"seed", sim.seed},
           {"ties", cfg.ties}, {"placement", placement.label()}, {"n", cfg.n},
           {"pe_exact", exact}, {"z_score", z}};
    emit(cfg, j.dump(2) + "\n", out);
    return kExitOk;
}

int cmd_verify(const std::string& claim, const RunConfig& cfg, std::ostream& out) {
    VerificationReport report;
    if (claim == "thm41") {
        require(cfg.max_m >= 2 && cfg.max_m <= 12, "--max-m must lie in [2, 12]");
        report = verify_thm41(cfg.max_m, cfg.step);
    } else if (claim == "thm42") {
        require(cfg.m >= 1 && cfg.m < cfg.n1 && cfg.n1 < cfg.n2, "thm42 needs m < n1 < n2");
        report = verify_thm42(cfg.m, cfg.n1, cfg.n2, cfg.step);
    } else if (claim == "cor41") {
        require(cfg.m >= 2 && cfg.m <= 5, "cor41 needs --m in [2, 5]");
        report = verify_cor41(cfg.m, cfg.step);
    } else if (claim == "prop51") {
        require(cfg.m >= 3 && cfg.m <= 5, "prop51 needs --m in [3, 5]");
        require(cfg.n >= cfg.m, "--n must be at least --m (m <= n)");
        report = verify_prop51(cfg.m, cfg.n, cfg.step);
        if (cfg.m == 4 && cfg.n == 4) {
            auto regions = verify_region_predicates_m4(cfg.step, cfg.threads);
            report.notes.insert(report.notes.end(), regions.notes.begin(), regions.notes.end());
            for (const auto& v : regions.counterexamples) report.record(v);
            report.finish();
        }
    } else if (claim == "counterexample") {
        report = verify_counterexample(cfg.threads);
    } else {
        require_fit(cfg);
        SweepOptions opts;
        opts.threads = cfg.threads;
        opts.budget = cfg.budget;
        report = check_conjecture_chain(sweep_plane(cfg.m, cfg.n, cfg.step, opts));
    }
    emit(cfg, report_json(report).dump(2) + "\n", out);
    return report.pass ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sensor placement toolkit for intruder detection"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_model = [&cfg](CLI::App* sub) {
        sub->add_option("--pd", cfg.p_d, "detection probability")->required();
        sub->add_option("--pf", cfg.p_f, "false-alarm probability")->required();
    };
    auto add_mn = [&cfg](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "number of sensors")->required();
        sub->add_option("--n", cfg.n, "number of points")->required();
    };
    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "write output to this file");
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 256));
    };

    auto* pe = app.add_subcommand("pe", "error probability of one placement");
    add_mn(pe);
    add_model(pe);
    pe->add_option("--placement", cfg.placement, "dash-joined counts, e.g. 2-1-1")->required();
    add_common(pe);

    auto* optimal = app.add_subcommand("optimal", "exhaustive optimal placement search");
    add_mn(optimal);
    add_model(optimal);
    add_common(optimal);

    auto* parts = app.add_subcommand("partitions", "list the partitions of m");
    parts->add_option("--m", cfg.m, "integer to partition")->required();
    add_common(parts);

    auto* major = app.add_subcommand("majorize", "majorization comparability matrix as CSV");
    major->add_option("--m", cfg.m, "integer to partition")->required();
    add_common(major);

    auto* sweep = app.add_subcommand("sweep", "optimal placements over the (p_f, p_d) plane");
    add_mn(sweep);
    sweep->add_option("--step", cfg.step, "grid step");
    sweep->add_flag("--full", cfg.full_plane, "include p_d < p_f");
    sweep->add_option("--format", cfg.format, "csv or json");
    sweep->add_option("--budget", cfg.budget, "maximum likelihood evaluations");
    add_common(sweep);

    auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of the error probability");
    add_mn(sim);
    add_model(sim);
    sim->add_option("--placement", cfg.placement, "dash-joined counts")->required();
    sim->add_option("--trials", cfg.trials, "number of trials");
    sim->add_option("--seed", cfg.seed, "random seed");
    sim->add_option("--ties", cfg.ties, "uniform or lowest");
    add_common(sim);

    auto* verify = app.add_subcommand("verify", "numerical checks of the structural results");
    verify->require_subcommand(1);
    std::string claim;
    for (const char* name : {"thm41", "thm42", "cor41", "prop51", "counterexample", "conjecture"}) {
        auto* v = verify->add_subcommand(name);
        v->callback([&claim, name] { claim = name; });
        v->add_option("--step", cfg.step, "grid step");
        add_common(v);
    }
    verify->get_subcommand("thm41")->add_option("--max-m", cfg.max_m, "largest M = N");
    verify->get_subcommand("thm42")->add_option("--m", cfg.m)->required();
    verify->get_subcommand("thm42")->add_option("--n1", cfg.n1)->required();
    verify->get_subcommand("thm42")->add_option("--n2", cfg.n2)->required();
    verify->get_subcommand("cor41")->add_option("--m", cfg.m)->required();
    add_mn(verify->get_subcommand("prop51"));
    add_mn(verify->get_subcommand("conjecture"));
    verify->get_subcommand("conjecture")->add_option("--budget", cfg.budget);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (pe->parsed()) return cmd_pe(cfg, out);
        if (optimal->parsed()) return cmd_optimal(cfg, out);
        if (parts->parsed()) return cmd_partitions(cfg, out);
        if (major->parsed()) return cmd_majorize(cfg, out);
        if (sweep->parsed()) return cmd_sweep(cfg, out);
        if (sim->parsed()) return cmd_simulate(cfg, out);
        return cmd_verify(claim, cfg, out);
    } catch (const BudgetExceeded& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}

}  // namespace sensorplace::cli
