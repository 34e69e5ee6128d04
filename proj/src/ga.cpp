#include "floodopt/ga.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace floodopt {

namespace {

std::vector<double> evaluate_population(const std::vector<CityDesign>& population,
                                        const SiteGrid& grid, const ObjectiveConfig& config) {
    std::vector<double> objectives;
    objectives.reserve(population.size());
    for (const CityDesign& design : population)
        objectives.push_back(total_objective(design, grid, config));
    return objectives;
}

// Indices sorted by (objective, index) so elite picks are deterministic
// under ties.
std::vector<std::size_t> ranked_indices(std::span<const double> objectives) {
    std::vector<std::size_t> order(objectives.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (objectives[a] != objectives[b]) return objectives[a] < objectives[b];
        return a < b;
    });
    return order;
}

std::vector<CityDesign> next_generation(const std::vector<CityDesign>& population,
                                        std::span<const double> objectives,
                                        const GaParams& params, double mutation_rate, Rng& rng) {
    const auto order = ranked_indices(objectives);
    std::vector<CityDesign> next;
    next.reserve(population.size());
    for (int e = 0; e < params.elitism_count; ++e) next.push_back(population[order[e]]);
    while (next.size() < population.size()) {
        const std::size_t ia = tournament_select(objectives, params.tournament_size, rng);
        const std::size_t ib = tournament_select(objectives, params.tournament_size, rng);
        auto [child_a, child_b] =
            crossover_uniform(population[ia], population[ib], params.crossover_rate, rng);
        next.push_back(mutate_bitflip(child_a, mutation_rate, rng));
        if (next.size() < population.size())
            next.push_back(mutate_bitflip(child_b, mutation_rate, rng));
    }
    return next;
}

}  // namespace

std::vector<CityDesign> step_generation(const std::vector<CityDesign>& population,
                                        const GaParams& params, const SiteGrid& grid,
                                        const ObjectiveConfig& config, Rng& rng) {
    params.validate();
    if (population.size() != static_cast<std::size_t>(params.population_size))
        throw ValidationError("population size does not match params.population_size");
    const auto objectives = evaluate_population(population, grid, config);
    return next_generation(population, objectives, params,
                           params.mutation_rate(design_bit_count(grid.side())), rng);
}

RunReport run_ga(const SiteGrid& grid, const ObjectiveConfig& config, const GaParams& params) {
    params.validate();
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const double mutation_rate = params.mutation_rate(design_bit_count(grid.side()));

    Rng rng(params.seed);
    std::vector<CityDesign> population;
    population.reserve(params.population_size);
    for (int i = 0; i < params.population_size; ++i)
        population.push_back(random_design(rng, grid.side()));

    RunReport report;
    report.engine = "ga";
    report.seed = params.seed;
    report.params = params;

    auto objectives = evaluate_population(population, grid, config);
    report.evaluations = population.size();

    std::size_t best_index =
        std::min_element(objectives.begin(), objectives.end()) - objectives.begin();
    report.best = population[best_index];
    double best_value = objectives[best_index];
    report.trace.push_back(best_value);
    report.trace_evaluations.push_back(report.evaluations);

    for (int gen = 0; gen < params.generations; ++gen) {
        population = next_generation(population, objectives, params, mutation_rate, rng);
        objectives = evaluate_population(population, grid, config);
        report.evaluations += population.size();

        best_index = std::min_element(objectives.begin(), objectives.end()) - objectives.begin();
        if (objectives[best_index] < best_value) {
            best_value = objectives[best_index];
            report.best = population[best_index];
        }
        report.trace.push_back(best_value);
        report.trace_evaluations.push_back(report.evaluations);
    }

    report.best_objective = total_objective(report.best, grid, config);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace floodopt
