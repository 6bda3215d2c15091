// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sensorplace/analysis.hpp"
#include "sensorplace/detection.hpp"
#include "sensorplace/montecarlo.hpp"
#include "sensorplace/partitions.hpp"

using namespace sensorplace;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
    void absorb(const VerificationReport& r) {
        if (r.pass) return;
        std::string why = r.claim + " failed with " + std::to_string(r.violation_count) + " violations";
        if (!r.counterexamples.empty()) why += " (first: " + r.counterexamples.front().detail + ")";
        fail(why);
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double time_limit_s;
    std::function<Outcome()> run;
};

Placement pl(std::vector<int> c, int n) { return canonicalize_placement(c, n); }

std::set<Placement> placement_set(const std::vector<std::vector<int>>& shapes, int n) {
    std::set<Placement> out;
    for (const auto& s : shapes) out.insert(pl(s, n));
    return out;
}

Outcome partition_facts() {
    Outcome o;
    const std::vector<std::vector<int>> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    o.expect(partition_count(4) == 5, "f(4) != 5");
    o.expect(enumerate_partitions(4).items == four, "partitions of 4 differ from the listed ones");
    const auto ref = oracle::partition_numbers(12);
    for (int m = 1; m <= 12; ++m) {
        o.expect(partition_count(m) == ref[m], "f(" + std::to_string(m) + ") disagrees with recurrence");
        o.expect(enumerate_partitions(m).size() == ref[m], "enumeration size wrong at m=" + std::to_string(m));
    }
    return o;
}

Outcome two_sensor_oracle() {
    Outcome o;
    const auto p11 = pl({1, 1}, 2);
    const auto p2 = pl({2}, 2);
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i)
        for (int k = 0; k <= 100; ++k) {
            const SensorModel model{i / 100.0, k / 100.0};
            for (const auto* p : {&p11, &p2}) {
                const double exact = error_probability(*p, model, 2).value;
                worst = std::max(worst, std::abs(exact - closed_form_pe2(*p, model)));
                // lower half reached through the flipped model as well
                worst = std::max(worst, std::abs(exact - closed_form_pe2(*p, flip_model(model))));
            }
        }
    o.expect(worst <= 1e-12, "max deviation " + std::to_string(worst));
    return o;
}

Outcome theorem41() {
    Outcome o;
    o.absorb(verify_thm41(5, 0.02));
    return o;
}

Outcome theorem42() {
    Outcome o;
    o.absorb(verify_thm42(3, 4, 6, 0.05));
    o.absorb(verify_thm42(4, 5, 7, 0.05));
    return o;
}

Outcome corollary41() {
    Outcome o;
    o.absorb(verify_cor41(3, 0.01));
    o.absorb(verify_cor41(4, 0.01));
    return o;
}

Outcome m4_regions() {
    Outcome o;
    o.absorb(verify_region_predicates_m4(0.005, 4));
    return o;
}

Outcome proposition51() {
    Outcome o;
    for (auto [m, n] : {std::pair{3, 3}, {3, 4}, {4, 4}, {4, 5}, {5, 6}}) o.absorb(verify_prop51(m, n, 0.01));
    return o;
}

Outcome counterexample() {
    Outcome o;
    o.absorb(verify_counterexample(4));
    return o;
}

Outcome monte_carlo() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> prob(0.05, 0.95);
    for (int i = 0; i < 20; ++i) {
        const int m = 1 + static_cast<int>(rng() % 6);
        const int n = m + static_cast<int>(rng() % 3);
        const auto parts = enumerate_partitions(m);
        const auto p = canonicalize_placement(parts.items[rng() % parts.size()], n);
        const SensorModel model{prob(rng), prob(rng)};
        const std::uint64_t seed = 1000 + i;
        SimOptions opts;
        opts.threads = 4;
        const auto sim = simulate(p, model, n, 1'000'000, seed, opts);
        const double exact = error_probability(p, model, n).value;
        o.expect(std::abs(sim.pe_hat - exact) <= 4 * sim.std_err,
                 "instance " + std::to_string(i) + " off by " + std::to_string((sim.pe_hat - exact) / sim.std_err) + " se");
        if (i < 2) {
            SimOptions serial;
            o.expect(simulate(p, model, n, 1'000'000, seed, serial) == sim,
                     "thread count changed the result of instance " + std::to_string(i));
        }
    }
    return o;
}

Outcome figure_sweeps() {
    Outcome o;
    struct Case {
        int m, n;
        std::vector<std::vector<int>> inventory;
    };
    const std::vector<Case> cases{
        {3, 3, {{3}, {2, 1}}},
        {3, 4, {{3}, {2, 1}, {1, 1, 1}}},
        {4, 4, {{4}, {3, 1}, {2, 2}, {2, 1, 1}}},
        {4, 5, {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}},
        {5, 6, {{5}, {4, 1}, {3, 2}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}}},
    };
    for (const auto& c : cases) {
        SweepOptions first, second;
        first.threads = 1;
        second.threads = 4;
        const auto a = sweep_plane(c.m, c.n, 0.005, first);
        const auto b = sweep_plane(c.m, c.n, 0.005, second);
        std::ostringstream ca, cb;
        write_region_csv(a, ca);
        write_region_csv(b, cb);
        const std::string tag = "(" + std::to_string(c.m) + "," + std::to_string(c.n) + ")";
        o.expect(ca.str() == cb.str(), tag + " CSV differs between runs");
        const auto strict = strict_optima(a);
        o.expect(std::set<Placement>(strict.begin(), strict.end()) == placement_set(c.inventory, c.n),
                 tag + " strict optima differ from the figure inventory");
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC01", "partition facts", 1, partition_facts},
        {"AC02", "M=N=2 closed-form oracle", 5, two_sensor_oracle},
        {"AC03", "uniform placement never strictly optimal (M=N<=5)", 120, theorem41},
        {"AC04", "N-invariance identity", 120, theorem42},
        {"AC05", "uniform joins the strict optima at N=M+1", 300, corollary41},
        {"AC06", "M=4 closed-form regions and thresholds", 180, m4_regions},
        {"AC07", "monotone optima on majorization scales (M<=5)", 600, proposition51},
        {"AC08", "(7,8) counterexample", 60, counterexample},
        {"AC09", "Monte Carlo agreement", 120, monte_carlo},
        {"AC10", "figure sweeps reproducible with exact inventories", 600, figure_sweeps},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.time_limit_s) out.fail("runtime " + std::to_string(secs) + " s over limit");
        std::printf("%s %s  %-52s %8.2f s%s%s\n", c.id, out.pass ? "PASS" : "FAIL", c.title, secs,
                    out.detail.empty() ? "" : "  ", out.detail.c_str());
        if (!out.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
