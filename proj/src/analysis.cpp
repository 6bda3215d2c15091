#include "sensorplace/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "sensorplace/partitions.hpp"

namespace sensorplace {

namespace {

std::vector<Placement> candidates_for(int m, int n) {
    const auto parts = enumerate_partitions(m);
    std::vector<Placement> out;
    out.reserve(parts.size());
    for (const auto& counts : parts.items) out.push_back(canonicalize_placement(counts, n));
    return out;
}

std::vector<double> evaluate_all(const std::vector<Placement>& candidates,
                                 const SensorModel& model) {
    std::vector<double> values;
    values.reserve(candidates.size());
    for (const auto& p : candidates) values.push_back(error_probability(PmfTable(p, model)));
    return values;
}

// Runs fn(i) for i in [0, count) over a fixed number of workers. Each index
// is handled by exactly one worker, so results written per index are
// deterministic.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    const std::size_t workers =
        std::clamp<std::size_t>(threads < 1 ? 1 : static_cast<std::size_t>(threads), 1,
                                std::max<std::size_t>(count, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
}

std::string set_label(const std::vector<Placement>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ", ";
        out += set[i].label();
    }
    return out + "}";
}

bool same_members(const std::vector<Placement>& a, const std::vector<Placement>& b) {
    std::set<Placement> sa(a.begin(), a.end());
    std::set<Placement> sb(b.begin(), b.end());
    return sa == sb;
}

Placement uniform_placement(int m, int n) {
    return canonicalize_placement(std::vector<int>(static_cast<std::size_t>(m), 1), n);
}

// Whether p is the unique optimum for some p_f in (0, p_d) on a fine scan.
bool strictly_optimal_on_row(const Placement& p, double p_d, double fine) {
    const auto candidates = candidates_for(p.m(), p.n());
    for (double p_f = fine; p_f < p_d - fine / 2; p_f += fine) {
        const auto opt = select_optimum(candidates, evaluate_all(candidates, SensorModel{p_d, p_f}));
        if (opt.strict && opt.best.front() == p) return true;
    }
    return false;
}

bool is_full_tie(const RegionCell& cell, std::size_t candidate_count) {
    return cell.optimum.best.size() == candidate_count;
}

}  // namespace

const RegionCell* RegionMap::find(int i_f, int i_d) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), std::pair{i_d, i_f},
                               [](const RegionCell& c, const std::pair<int, int>& key) {
                                   return std::pair{c.node.i_d, c.node.i_f} < key;
                               });
    if (it == cells.end() || it->node.i_d != i_d || it->node.i_f != i_f) return nullptr;
    return &*it;
}

BudgetExceeded::BudgetExceeded(double estimate)
    : std::runtime_error(fmt::format(
          "sweep refused: about {:.3g} likelihood evaluations exceeds the budget", estimate)),
      estimate_(estimate) {}

int grid_divisions(double step) {
    if (!(step >= 1e-3 && step <= 0.1)) throw std::invalid_argument("step must lie in [0.001, 0.1]");
    const double inv = 1.0 / step;
    const double rounded = std::round(inv);
    if (std::abs(inv - rounded) > 1e-6 * rounded)
        throw std::invalid_argument("step must divide 1 evenly");
    return static_cast<int>(rounded);
}

std::vector<GridNode> grid_nodes(double step, PlaneRegion region,
                                 const std::optional<GridWindow>& window) {
    const int div = grid_divisions(step);
    int f_lo = 1, f_hi = div - 1, d_lo = 1, d_hi = div - 1;
    if (window) {
        f_lo = std::max(f_lo, window->f_lo);
        f_hi = std::min(f_hi, window->f_hi);
        d_lo = std::max(d_lo, window->d_lo);
        d_hi = std::min(d_hi, window->d_hi);
    }
    std::vector<GridNode> nodes;
    for (int d = d_lo; d <= d_hi; ++d)
        for (int f = f_lo; f <= f_hi; ++f) {
            if (region == PlaneRegion::PdGePf && d < f) continue;
            nodes.push_back(GridNode{f, d, static_cast<double>(f) / div,
                                     static_cast<double>(d) / div});
        }
    return nodes;
}

double sweep_cost_estimate(int m, std::size_t nodes) {
    return static_cast<double>(nodes) * static_cast<double>(partition_count(m)) *
           std::ldexp(1.0, m) * (m + 1);
}

RegionMap sweep_plane(int m, int n, double step, const SweepOptions& options) {
    if (m < 1 || m > n) throw std::invalid_argument("sweep needs 1 <= m <= n");
    if (m > kMaxSearchSensors) throw std::invalid_argument("exhaustive search limited to m <= 20");

    RegionMap map;
    map.m = m;
    map.n = n;
    map.step = step;
    map.divisions = grid_divisions(step);
    map.region = options.region;

    const auto nodes = grid_nodes(step, options.region, options.window);
    const double cost = sweep_cost_estimate(m, nodes.size());
    if (cost > options.budget) throw BudgetExceeded(cost);

    const auto candidates = candidates_for(m, n);
    map.cells.resize(nodes.size());
    parallel_for(nodes.size(), options.threads, [&](std::size_t i) {
        const SensorModel model{nodes[i].p_d, nodes[i].p_f};
        map.cells[i] = RegionCell{nodes[i], select_optimum(candidates, evaluate_all(candidates, model))};
    });
    return map;
}

void write_region_csv(const RegionMap& map, std::ostream& out) {
    out << "p_f,p_d,best,tie_count,pe_min,margin\n";
    for (const auto& cell : map.cells) {
        const auto& opt = cell.optimum;
        fmt::print(out, "{},{},{},{},{},{}\n", cell.node.p_f, cell.node.p_d,
                   opt.best.front().label(), opt.best.size(), opt.pe_min,
                   std::isinf(opt.margin) ? std::string("inf") : fmt::format("{}", opt.margin));
    }
}

std::vector<Placement> strict_optima(const RegionMap& map) {
    std::vector<Placement> out;
    for (const auto& cell : map.cells) {
        if (!cell.optimum.strict) continue;
        const auto& p = cell.optimum.best.front();
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
}

// --- closed-form regions ----------------------------------------------------

RegionPredicate region_predicate_m4(double p_f, double p_d) {
    const double D = p_d;
    const double F = p_f;
    const double dmf = D - F;
    const double quartic_core = dmf * (-(D + F) * (D * D + F * F) + (D * D + D * F + F * F) + (1 - F * F * F));
    const double mid = 2 * (D * D - F * F) - dmf - (D * D * D - F * F * F) - D * F * F * dmf;
    const double pair_sq = (D * D - F * F) * (2 - D * D - 2 * F * F);
    const double spread = 2 * dmf + 2 * F * F * F * (1 - F) - D * F * F * (1 - F) -
                          D * F * F * (1 - D) - (D * D - F * F) - F * dmf;
    const double cubic_d = D * D * D * (1 - D);
    const double cubic_f = F * F * F * (1 - F);
    const double square_d = D * D * (1 - D);
    const double square_f = F * F * (1 - F);
    const double sum_sq = (D + F - 1) * (D + F - 1);
    const double cross = D * F * (1 - F);

    RegionPredicate out;
    out.fired[0] = quartic_core < 0;
    out.fired[1] = (quartic_core >= 0 && mid < 0 && cubic_d < cubic_f) ||
                   (sum_sq > cross && cubic_d >= cubic_f && square_d < square_f);
    out.fired[2] = (pair_sq >= 0 && mid >= 0 && spread <= 0 && cubic_d < cubic_f) ||
                   (2 * (1 - F) < D && sum_sq <= cross && cubic_d >= cubic_f);
    out.fired[3] = 2 * (1 - F) >= D;

    const auto count = std::count(out.fired.begin(), out.fired.end(), true);
    if (count == 1) {
        static const std::array<std::vector<int>, 4> shapes{
            std::vector<int>{4}, std::vector<int>{3, 1}, std::vector<int>{2, 2}, std::vector<int>{2, 1, 1}};
        const auto idx = static_cast<std::size_t>(std::find(out.fired.begin(), out.fired.end(), true) -
                                                  out.fired.begin());
        out.status = PredicateStatus::Unique;
        out.placement = canonicalize_placement(shapes[idx], 4);
    }
    return out;
}

bool near_predicate_boundary(double p_f, double p_d, double step) {
    const auto here = region_predicate_m4(p_f, p_d).fired;
    for (int df = -1; df <= 1; ++df)
        for (int dd = -1; dd <= 1; ++dd) {
            if (df == 0 && dd == 0) continue;
            if (region_predicate_m4(p_f + df * step, p_d + dd * step).fired != here) return true;
        }
    return false;
}

// --- reports ----------------------------------------------------------------

void VerificationReport::record(Violation v) {
    ++violation_count;
    max_violation = std::max(max_violation, v.magnitude);
    if (counterexamples.size() < kMaxRecordedViolations) counterexamples.push_back(std::move(v));
}

void VerificationReport::finish() {
    pass = violation_count == 0 && max_violation <= tolerance;
}

VerificationReport verify_thm41(int m_max, double step) {
    if (m_max < 2) throw std::invalid_argument("m_max must be at least 2");
    VerificationReport report;
    report.claim = "thm41";
    report.tolerance = 1e-12;

    const auto nodes = grid_nodes(step, PlaneRegion::PdGePf);
    for (int m = 2; m <= m_max; ++m) {
        const Placement uniform = uniform_placement(m, m);
        std::vector<int> pair_counts(static_cast<std::size_t>(m - 1), 1);
        pair_counts[0] = 2;
        const Placement paired = canonicalize_placement(pair_counts, m);
        double worst = std::numeric_limits<double>::infinity();

        for (const auto& node : nodes) {
            const SensorModel model{node.p_d, node.p_f};
            const double diff = error_probability(PmfTable(uniform, model)) -
                                error_probability(PmfTable(paired, model));
            ++report.checked;
            worst = std::min(worst, diff);
            if (diff < -report.tolerance) {
                report.record({node.p_f, node.p_d, -diff,
                               fmt::format("M={}: uniform beats {}", m, paired.label())});
                continue;
            }
            if (std::abs(diff) <= report.tolerance) {
                const bool diagonal = node.i_f == node.i_d;
                const bool on_curve =
                    m == 2 && std::abs(node.p_d * (1 - node.p_d) - node.p_f * (1 - node.p_f)) <= 1e-9;
                if (!diagonal && !on_curve)
                    report.record({node.p_f, node.p_d, 0.0,
                                   fmt::format("M={}: unexpected equality off the tie loci", m)});
            }
        }
        report.notes.push_back(fmt::format("M={}: min P_e(uniform) - P_e({}) = {:.3e}", m,
                                           paired.label(), worst));
    }
    report.finish();
    return report;
}

VerificationReport verify_thm42(int m, int n1, int n2, double step) {
    if (!(m < n1 && n1 < n2)) throw std::invalid_argument("thm42 needs m < n1 < n2");
    VerificationReport report;
    report.claim = "thm42";
    report.tolerance = 1e-10;

    const auto c1 = candidates_for(m, n1);
    const auto c2 = candidates_for(m, n2);
    for (const auto& node : grid_nodes(step, PlaneRegion::PdGePf)) {
        const SensorModel model{node.p_d, node.p_f};
        const auto v1 = evaluate_all(c1, model);
        const auto v2 = evaluate_all(c2, model);
        for (std::size_t a = 0; a < c1.size(); ++a)
            for (std::size_t b = a + 1; b < c1.size(); ++b) {
                const double gap = std::abs(n2 * (v2[a] - v2[b]) - n1 * (v1[a] - v1[b]));
                ++report.checked;
                if (gap > report.tolerance)
                    report.record({node.p_f, node.p_d, gap,
                                   fmt::format("pair {} vs {}", c1[a].label(), c1[b].label())});
            }
        const auto o1 = select_optimum(c1, v1);
        const auto o2 = select_optimum(c2, v2);
        if (!same_members(o1.best, o2.best))
            report.record({node.p_f, node.p_d, 0.0,
                           fmt::format("argmin {} at n={} vs {} at n={}", set_label(o1.best), n1,
                                       set_label(o2.best), n2)});
    }
    report.finish();
    return report;
}

VerificationReport verify_cor41(int m, double step) {
    if (m < 2) throw std::invalid_argument("cor41 needs m >= 2");
    VerificationReport report;
    report.claim = "cor41";

    SweepOptions opts;
    opts.budget = 1e12;
    const auto square = sweep_plane(m, m, step, opts);
    const auto wider = sweep_plane(m, m + 1, step, opts);
    report.checked = square.cells.size() + wider.cells.size();

    const auto s1 = strict_optima(square);
    const auto s2 = strict_optima(wider);
    const Placement uniform = uniform_placement(m, m + 1);
    report.notes.push_back(fmt::format("strict optima ({},{}): {}", m, m, set_label(s1)));
    report.notes.push_back(fmt::format("strict optima ({},{}): {}", m, m + 1, set_label(s2)));

    std::set<Placement> expected(s1.begin(), s1.end());
    if (expected.contains(uniform))
        report.record({0, 0, 0, fmt::format("uniform strictly optimal at ({},{})", m, m)});
    expected.insert(uniform);
    std::set<Placement> got(s2.begin(), s2.end());
    if (!got.contains(uniform))
        report.record({0, 0, 0, fmt::format("uniform never strictly optimal at ({},{})", m, m + 1)});
    if (got != expected)
        report.record({0, 0, 0,
                       fmt::format("strict optima at ({},{}) differ from ({},{}) plus uniform", m,
                                   m + 1, m, m)});
    report.finish();
    return report;
}

VerificationReport check_monotone_on_scale(const RegionMap& map, const PlacementScale& scale,
                                           ScanAxis axis) {
    VerificationReport report;
    report.claim = axis == ScanAxis::IncreasingPf ? "monotone_increasing_pf" : "monotone_increasing_pd";

    // Group by the fixed coordinate; order within a line by the scanned one.
    std::map<int, std::vector<const RegionCell*>> lines;
    for (const auto& cell : map.cells) {
        const int key = axis == ScanAxis::IncreasingPf ? cell.node.i_d : cell.node.i_f;
        lines[key].push_back(&cell);
    }
    for (auto& [key, line] : lines) {
        std::sort(line.begin(), line.end(), [axis](const RegionCell* a, const RegionCell* b) {
            return axis == ScanAxis::IncreasingPf ? a->node.i_f < b->node.i_f : a->node.i_d < b->node.i_d;
        });
        std::optional<std::size_t> last_level;
        const Placement* last = nullptr;
        for (const RegionCell* cell : line) {
            if (!cell->optimum.strict) {
                ++report.skipped;
                continue;
            }
            ++report.checked;
            const auto& p = cell->optimum.best.front();
            const auto level = scale.level_of(p);
            if (!level) {
                report.record({cell->node.p_f, cell->node.p_d, 0.0,
                               fmt::format("optimum {} is not on the scale", p.label())});
                continue;
            }
            if (last_level && *level < *last_level)
                report.record({cell->node.p_f, cell->node.p_d,
                               static_cast<double>(*last_level - *level),
                               fmt::format("{} -> {} moves down the scale", last->label(), p.label())});
            last_level = level;
            last = &p;
        }
    }
    report.finish();
    return report;
}

VerificationReport check_conjecture_chain(const RegionMap& map) {
    VerificationReport report;
    report.claim = "conjecture";
    report.checked = map.cells.size();

    auto chain = strict_optima(map);
    const auto check = is_chain(chain);
    if (!check.is_chain) {
        report.record({0, 0, 0,
                       fmt::format("strict optima {} and {} are incomparable",
                                   check.offending->first.label(), check.offending->second.label())});
        report.finish();
        return report;
    }

    auto comparable_with_chain = [&chain](const Placement& p) {
        return std::all_of(chain.begin(), chain.end(), [&p](const Placement& q) {
            return compare(p, q) != MajorizationVerdict::Incomparable;
        });
    };
    for (const auto& cell : map.cells) {
        if (cell.optimum.strict) continue;
        const auto& best = cell.optimum.best;
        const bool covered = std::any_of(best.begin(), best.end(), [&chain](const Placement& p) {
            return std::find(chain.begin(), chain.end(), p) != chain.end();
        });
        if (covered) continue;
        auto pick = std::find_if(best.begin(), best.end(), comparable_with_chain);
        if (pick == best.end()) {
            report.record({cell.node.p_f, cell.node.p_d, 0.0,
                           fmt::format("no member of tie set {} extends the chain", set_label(best))});
            continue;
        }
        chain.push_back(*pick);
    }
    if (report.violation_count == 0) {
        const auto scale = chain_sort(chain);
        report.notes.push_back(fmt::format("chain: {}", set_label(scale.members())));
    }
    report.finish();
    return report;
}

PlacementScale reference_scale(int m) {
    std::vector<std::vector<int>> shapes;
    switch (m) {
        case 3: shapes = {{3}, {2, 1}, {1, 1, 1}}; break;
        case 4: shapes = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}; break;
        case 5: shapes = {{5}, {4, 1}, {3, 2}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}}; break;
        default: throw std::invalid_argument("reference scales exist for m = 3, 4, 5");
    }
    std::vector<Placement> members;
    for (const auto& s : shapes) members.push_back(canonicalize_placement(s, m));
    return chain_sort(members);
}

VerificationReport verify_prop51(int m, int n, double step) {
    SweepOptions opts;
    opts.budget = 1e12;
    const auto map = sweep_plane(m, n, step, opts);
    const auto scale = reference_scale(m);
    const auto rows = check_monotone_on_scale(map, scale, ScanAxis::IncreasingPf);
    const auto cols = check_monotone_on_scale(map, scale, ScanAxis::IncreasingPd);

    VerificationReport report;
    report.claim = "prop51";
    report.checked = rows.checked + cols.checked;
    report.skipped = rows.skipped + cols.skipped;
    for (const VerificationReport* part : {&rows, &cols}) {
        report.notes.push_back(fmt::format("{}: {} violations over {} strict cells", part->claim,
                                           part->violation_count, part->checked));
        for (const auto& v : part->counterexamples) report.record(v);
        // Violations beyond the recorded cap still count.
        report.violation_count += part->violation_count - part->counterexamples.size();
    }
    report.finish();
    return report;
}

std::vector<std::pair<Placement, double>> first_rows_with_optimum(const RegionMap& map) {
    const std::size_t total = partition_count(map.m);
    std::vector<std::pair<Placement, double>> out;
    for (const auto& cell : map.cells) {
        if (is_full_tie(cell, total)) continue;
        for (const auto& p : cell.optimum.best) {
            auto it = std::find_if(out.begin(), out.end(), [&p](const auto& e) { return e.first == p; });
            if (it == out.end())
                out.emplace_back(p, cell.node.p_d);
            else
                it->second = std::min(it->second, cell.node.p_d);
        }
    }
    return out;
}

VerificationReport verify_region_predicates_m4(double step, int threads) {
    VerificationReport report;
    report.claim = "prop51_regions_m4";

    SweepOptions opts;
    opts.threads = threads;
    opts.budget = 1e12;
    const auto map = sweep_plane(4, 4, step, opts);

    std::size_t agree = 0, boundary_disagree = 0;
    for (const auto& cell : map.cells) {
        if (!cell.optimum.strict) {
            ++report.skipped;
            continue;
        }
        const auto pred = region_predicate_m4(cell.node.p_f, cell.node.p_d);
        if (pred.status != PredicateStatus::Unique) {
            ++report.skipped;
            continue;
        }
        ++report.checked;
        if (*pred.placement == cell.optimum.best.front()) {
            ++agree;
        } else if (near_predicate_boundary(cell.node.p_f, cell.node.p_d, step)) {
            ++boundary_disagree;
        } else {
            report.record({cell.node.p_f, cell.node.p_d, 0.0,
                           fmt::format("predicate says {}, brute force says {}",
                                       pred.placement->label(), cell.optimum.best.front().label())});
        }
    }
    report.notes.push_back(fmt::format("{} agreeing nodes, {} boundary-adjacent disagreements", agree,
                                       boundary_disagree));

    // Fixed-P_D thresholds at which a new placement first joins the sequence.
    const std::array<std::pair<std::vector<int>, double>, 3> thresholds{{
        {{2, 2}, 2.0 / 3.0},
        {{3, 1}, 373.0 / 539.0},
        {{4}, 947.0 / 1093.0},
    }};
    const auto first_rows = first_rows_with_optimum(map);
    for (const auto& [shape, threshold] : thresholds) {
        const Placement p = canonicalize_placement(shape, 4);
        auto it = std::find_if(first_rows.begin(), first_rows.end(),
                               [&p](const auto& e) { return e.first == p; });
        if (it == first_rows.end()) {
            report.record({0, threshold, 1.0, fmt::format("{} never optimal", p.label())});
            continue;
        }
        // The row before the first appearance lacks p, so the threshold should
        // sit in [first - step, first] up to one more step of slack.
        const double hi = it->second;
        const double lo = hi - step;
        const double gap = threshold < lo ? lo - threshold : (threshold > hi ? threshold - hi : 0.0);
        report.notes.push_back(fmt::format("{} first optimal at p_d = {}, bracket [{}, {}] (threshold {:.6f})",
                                           p.label(), hi, lo, hi, threshold));
        if (gap > step + 1e-12)
            report.record({0, hi, gap,
                           fmt::format("{} bracket lies {:.4f} away from threshold {:.6f}", p.label(),
                                       gap, threshold)});

        // Off-grid confirmation with a fine p_f scan just below and above.
        constexpr double kOffset = 1e-3;
        constexpr double kFine = 1e-5;
        const bool below = strictly_optimal_on_row(p, threshold - kOffset, kFine);
        const bool above = strictly_optimal_on_row(p, threshold + kOffset, kFine);
        report.notes.push_back(fmt::format("{} strictly optimal on row p_d = threshold -/+ {}: {}/{}",
                                           p.label(), kOffset, below, above));
        if (below || !above)
            report.record({0, threshold, kOffset,
                           fmt::format("{} does not switch in at {:.6f}", p.label(), threshold)});
    }
    report.finish();
    return report;
}

VerificationReport verify_counterexample(int threads) {
    VerificationReport report;
    report.claim = "counterexample";
    constexpr int m = 7, n = 8;

    const Placement high = canonicalize_placement({3, 2, 1, 1}, n);
    const Placement low = canonicalize_placement({2, 2, 2, 1}, n);
    struct Probe {
        double p_f, p_d;
        const Placement* expected;
    };
    const std::array<Probe, 3> probes{{{0.46, 0.6, &high}, {0.48, 0.6, &low}, {0.48, 0.5, &high}}};
    for (const auto& probe : probes) {
        const auto opt = optimal_placements(m, n, SensorModel{probe.p_d, probe.p_f});
        ++report.checked;
        report.notes.push_back(fmt::format("({}, {}): best {} margin {:.3e}", probe.p_f, probe.p_d,
                                           set_label(opt.best), opt.margin));
        if (!opt.strict || !(opt.best.front() == *probe.expected))
            report.record({probe.p_f, probe.p_d, 1.0,
                           fmt::format("expected {} strictly optimal, got {}",
                                       probe.expected->label(), set_label(opt.best))});
    }

    // Local window around the probes: p_f in [0.44, 0.50], p_d in [0.48, 0.62].
    SweepOptions opts;
    opts.threads = threads;
    opts.window = GridWindow{44, 50, 48, 62};
    const auto map = sweep_plane(m, n, 0.01, opts);
    const auto optima = strict_optima(map);
    const auto chain = is_chain(optima);
    if (!chain.is_chain) {
        report.record({0, 0, 1.0, "strict optima of the window are not a chain"});
        report.finish();
        return report;
    }
    const auto scale = chain_sort(optima);
    report.notes.push_back(fmt::format("window scale: {}", set_label(scale.members())));
    for (ScanAxis axis : {ScanAxis::IncreasingPf, ScanAxis::IncreasingPd}) {
        const auto scan = check_monotone_on_scale(map, scale, axis);
        report.notes.push_back(fmt::format("{}: {} violations", scan.claim, scan.violation_count));
        for (const auto& v : scan.counterexamples)
            report.notes.push_back(fmt::format("  at ({}, {}): {}", v.p_f, v.p_d, v.detail));
        if (scan.violation_count == 0)
            report.record({0, 0, 1.0, fmt::format("no monotonicity violation found on {}", scan.claim)});
    }
    report.finish();
    return report;
}

}  // namespace sensorplace
