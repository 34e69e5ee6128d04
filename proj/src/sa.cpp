#include "floodopt/sa.hpp"

#include <chrono>
#include <cmath>

namespace floodopt {

double acceptance_probability(double delta, double temperature) {
    if (!(temperature > 0.0) || !std::isfinite(temperature))
        throw ValidationError("temperature must be a positive finite number");
    if (delta <= 0.0) return 1.0;
    return std::exp(-delta / temperature);
}

namespace {

struct Proposal {
    int cell;
    BarangayGenome genome;  // candidate replacement for that cell
};

// One candidate move drawn from rng. BitFlip consumes one index draw,
// GeneResample two (cell-trait slot, then the replacement level).
Proposal propose(const CityDesign& current, SaMove move, Rng& rng) {
    Proposal p;
    if (move == SaMove::BitFlip) {
        const int bit = static_cast<int>(
            rng.uniform_index(static_cast<std::size_t>(design_bit_count(current.side()))));
        const BitLocation loc = locate_bit(bit, current.side());
        p.cell = loc.cell;
        p.genome = current.cell(loc.cell);
        p.genome.set_level(loc.trait, p.genome.level(loc.trait) ^ (loc.bit == 0 ? 2 : 1));
    } else {
        const int slot = static_cast<int>(
            rng.uniform_index(static_cast<std::size_t>(current.cell_count() * kNumTraits)));
        p.cell = slot / kNumTraits;
        const Trait t = static_cast<Trait>(slot % kNumTraits);
        p.genome = current.cell(p.cell);
        p.genome.set_level(t, static_cast<int>(rng.uniform_index(4)));
    }
    return p;
}

// T0 such that the mean uphill acceptance from the start is ~0.8: sample up
// to 200 uphill deltas against the initial design (at most 10000 attempts,
// state untouched) and take -mean/ln(0.8). Falls back to 1.0 if the start
// has no uphill neighbors at all.
double calibrate_initial_temperature(const CityDesign& start, const SiteGrid& grid,
                                     const ObjectiveConfig& config, SaMove move, Rng& rng,
                                     std::uint64_t& evaluations, std::uint64_t max_evaluations) {
    constexpr int kWanted = 200;
    constexpr int kMaxAttempts = 10000;
    double sum = 0.0;
    int found = 0;
    for (int attempt = 0;
         attempt < kMaxAttempts && found < kWanted && evaluations < max_evaluations; ++attempt) {
        const Proposal p = propose(start, move, rng);
        const double delta = cell_objective(p.genome, grid.factor(p.cell), config) -
                             cell_objective(start.cell(p.cell), grid.factor(p.cell), config);
        ++evaluations;
        if (delta > 0.0) {
            sum += delta;
            ++found;
        }
    }
    if (found == 0) return 1.0;
    return -(sum / found) / std::log(0.8);
}

}  // namespace

RunReport run_sa(const SiteGrid& grid, const ObjectiveConfig& config, const SaParams& params,
                 const SaObserver& observer) {
    params.validate();
    config.validate();
    const auto start_time = std::chrono::steady_clock::now();
    const int steps = params.steps(design_bit_count(grid.side()));

    Rng rng(params.seed);
    CityDesign current = random_design(rng, grid.side());

    std::vector<double> cell_values(current.cell_count());
    for (int i = 0; i < current.cell_count(); ++i)
        cell_values[i] = cell_objective(current.cell(i), grid.factor(i), config);
    double current_total = total_objective(current, grid, config);

    RunReport report;
    report.engine = "sa";
    report.seed = params.seed;
    report.params = params;
    report.evaluations = 1;
    report.best = current;
    double best_total = current_total;
    report.trace.push_back(best_total);
    report.trace_evaluations.push_back(report.evaluations);

    const double t0 = params.initial_temperature
                          ? *params.initial_temperature
                          : calibrate_initial_temperature(current, grid, config, params.move, rng,
                                                          report.evaluations,
                                                          params.max_evaluations);
    const double t_min = params.min_temperature.value_or(1e-3 * t0);

    bool budget_left = report.evaluations < params.max_evaluations;
    for (int level = 0; budget_left; ++level) {
        const double temperature = t0 * std::pow(params.cooling_ratio, level);
        if (temperature < t_min) break;

        SaLevelStats stats;
        stats.level = level;
        stats.temperature = temperature;
        for (int step = 0; step < steps; ++step) {
            const Proposal p = propose(current, params.move, rng);
            const double delta = cell_objective(p.genome, grid.factor(p.cell), config) -
                                 cell_values[p.cell];
            ++report.evaluations;
            ++stats.proposals;
            const double draw = rng.uniform01();
            if (metropolis_accept(delta, temperature, draw)) {
                ++stats.accepted;
                if (delta > 0.0) ++stats.accepted_uphill;
                current.cell(p.cell) = p.genome;
                cell_values[p.cell] += delta;
                current_total += delta;
                if (current_total < best_total) {
                    best_total = current_total;
                    report.best = current;
                }
            }
            if (report.evaluations >= params.max_evaluations) {
                budget_left = false;
                break;
            }
        }
        stats.current_objective = current_total;
        stats.best_objective = best_total;
        stats.evaluations = report.evaluations;
        if (observer) observer(stats);
        report.trace.push_back(best_total);
        report.trace_evaluations.push_back(report.evaluations);
    }

    report.best_objective = total_objective(report.best, grid, config);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return report;
}

}  // namespace floodopt
