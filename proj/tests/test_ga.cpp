#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "floodopt/ga.hpp"
#include "floodopt/oracle.hpp"
#include "helpers.hpp"

using namespace floodopt;
using floodopt::testing::ScriptedRng;

TEST_CASE("tournament keeps the lowest objective of the drawn pool") {
    const std::vector<double> objectives = {5.0, 3.0};
    ScriptedRng rng;
    rng.indices = {0, 1};  // forced to draw both
    CHECK(tournament_select(objectives, 2, rng) == 1);
}

TEST_CASE("tournament ties go to the first drawn") {
    const std::vector<double> objectives = {2.0, 2.0};
    ScriptedRng rng;
    rng.indices = {1, 0};
    CHECK(tournament_select(objectives, 2, rng) == 1);
}

TEST_CASE("tournament of one is a uniform pick") {
    const std::vector<double> objectives = {9.0, 1.0, 4.0};
    ScriptedRng rng;
    rng.indices = {0};
    CHECK(tournament_select(objectives, 1, rng) == 0);
}

TEST_CASE("tournament rejects bad inputs") {
    ScriptedRng rng;
    CHECK_THROWS_AS(tournament_select(std::vector<double>{}, 2, rng), ValidationError);
    const std::vector<double> objectives = {1.0};
    CHECK_THROWS_AS(tournament_select(objectives, 0, rng), ValidationError);
}

TEST_CASE("tournament-of-two selection frequency matches 7/16") {
    // best of n=4 with k=2 draws with replacement: p = (2n-1)/n^2 = 7/16
    const std::vector<double> objectives = {1.0, 2.0, 3.0, 4.0};
    Rng rng(42);
    int best_picked = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i)
        if (tournament_select(objectives, 2, rng) == 0) ++best_picked;
    CHECK(std::abs(best_picked / static_cast<double>(trials) - 7.0 / 16.0) < 0.02);
}

TEST_CASE("crossover of identical parents returns the parents") {
    Rng seeder(1);
    const CityDesign parent = random_design(seeder, 3);
    Rng rng(2);
    const auto [a, b] = crossover_uniform(parent, parent, 0.9, rng);
    CHECK(a == parent);
    CHECK(b == parent);
}

TEST_CASE("crossover copies parents when the rate draw misses") {
    Rng seeder(3);
    const CityDesign pa = random_design(seeder, 3);
    const CityDesign pb = random_design(seeder, 3);
    ScriptedRng rng;
    rng.uniforms = {0.95};  // >= rate 0.9: no crossover, no further draws
    const auto [a, b] = crossover_uniform(pa, pb, 0.9, rng);
    CHECK(a == pa);
    CHECK(b == pb);
    CHECK(rng.uniforms.empty());
}

TEST_CASE("an all-keep mask leaves child_a equal to parent_a") {
    Rng seeder(4);
    const CityDesign pa = random_design(seeder, 2);
    const CityDesign pb = random_design(seeder, 2);
    ScriptedRng rng;
    rng.uniforms.push_back(0.0);  // enter the crossover branch
    for (int i = 0; i < 2 * 2 * kNumTraits; ++i) rng.uniforms.push_back(0.9);  // never swap
    const auto [a, b] = crossover_uniform(pa, pb, 0.9, rng);
    CHECK(a == pa);
    CHECK(b == pb);
}

TEST_CASE("every child gene comes from one of the parents") {
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const CityDesign pa = random_design(rng, 3);
        const CityDesign pb = random_design(rng, 3);
        const auto [a, b] = crossover_uniform(pa, pb, 0.9, rng);
        for (int c = 0; c < pa.cell_count(); ++c) {
            for (Trait t : kTraits) {
                const int ga = a.cell(c).level(t), gb = b.cell(c).level(t);
                const int va = pa.cell(c).level(t), vb = pb.cell(c).level(t);
                CHECK((ga == va || ga == vb));
                CHECK((gb == va || gb == vb));
                CHECK(ga + gb == va + vb);  // swaps preserve the multiset
            }
        }
    }
}

TEST_CASE("crossover rejects mismatched dimensions") {
    Rng rng(6);
    CHECK_THROWS_AS(crossover_uniform(CityDesign(2), CityDesign(3), 0.9, rng), ValidationError);
}

TEST_CASE("mutation at rate 0 and rate 1") {
    Rng seeder(7);
    const CityDesign design = random_design(seeder, 3);
    Rng rng(8);
    CHECK(mutate_bitflip(design, 0.0, rng) == design);

    const CityDesign flipped = mutate_bitflip(design, 1.0, rng);
    for (int c = 0; c < design.cell_count(); ++c)
        for (Trait t : kTraits)
            CHECK(flipped.cell(c).level(t) == 3 - design.cell(c).level(t));

    CHECK_THROWS_AS(mutate_bitflip(design, -0.1, rng), ValidationError);
    CHECK_THROWS_AS(mutate_bitflip(design, 1.1, rng), ValidationError);
}

TEST_CASE("mutation flips one bit per design on average at 1/504") {
    Rng seeder(9);
    const CityDesign design = random_design(seeder, 6);
    const BitString base = encode_design(design);
    Rng rng(10);
    long flipped_bits = 0;
    const int repeats = 10000;
    for (int i = 0; i < repeats; ++i) {
        const BitString mutated = encode_design(mutate_bitflip(design, 1.0 / 504.0, rng));
        for (std::size_t b = 0; b < base.size(); ++b)
            if (mutated[b] != base[b]) ++flipped_bits;
    }
    const double mean = flipped_bits / static_cast<double>(repeats);
    CHECK(mean > 0.95);
    CHECK(mean < 1.05);
}

TEST_CASE("step_generation preserves size and the elite") {
    const SiteGrid grid = default_site_grid(3);
    const ObjectiveConfig config;
    GaParams params;
    params.population_size = 12;
    params.seed = 11;
    Rng rng(params.seed);

    std::vector<CityDesign> population;
    for (int i = 0; i < params.population_size; ++i)
        population.push_back(random_design(rng, 3));

    for (int step = 0; step < 100; ++step) {
        double best = total_objective(population[0], grid, config);
        for (const auto& d : population) best = std::min(best, total_objective(d, grid, config));

        population = step_generation(population, params, grid, config, rng);
        CHECK(population.size() == 12);

        double next_best = total_objective(population[0], grid, config);
        for (const auto& d : population)
            next_best = std::min(next_best, total_objective(d, grid, config));
        CHECK(next_best <= best);
    }
}

TEST_CASE("with crossover and mutation off, offspring are copies of parents") {
    const SiteGrid grid = default_site_grid(2);
    const ObjectiveConfig config;
    GaParams params;
    params.population_size = 8;
    params.crossover_rate = 0.0;
    params.mutation_rate_per_bit = 0.0;
    Rng rng(12);

    std::vector<CityDesign> population;
    for (int i = 0; i < params.population_size; ++i) population.push_back(random_design(rng, 2));

    const auto next = step_generation(population, params, grid, config, rng);
    for (const auto& child : next)
        CHECK(std::find(population.begin(), population.end(), child) != population.end());
}

TEST_CASE("step_generation rejects a population of the wrong size") {
    GaParams params;
    params.population_size = 4;
    Rng rng(13);
    std::vector<CityDesign> population(3, CityDesign(2));
    CHECK_THROWS_AS(
        step_generation(population, params, default_site_grid(2), ObjectiveConfig{}, rng),
        ValidationError);
}

TEST_CASE("invalid GA params fail before any evaluation") {
    const SiteGrid grid = default_site_grid(3);
    const ObjectiveConfig config;
    GaParams params;
    params.population_size = 1;
    CHECK_THROWS_AS(run_ga(grid, config, params), ValidationError);
    params = GaParams{};
    params.elitism_count = params.population_size;
    CHECK_THROWS_AS(run_ga(grid, config, params), ValidationError);
    params = GaParams{};
    params.crossover_rate = 1.5;
    CHECK_THROWS_AS(run_ga(grid, config, params), ValidationError);
    params = GaParams{};
    params.mutation_rate_per_bit = -0.25;
    CHECK_THROWS_AS(run_ga(grid, config, params), ValidationError);
    params = GaParams{};
    params.tournament_size = 0;
    CHECK_THROWS_AS(run_ga(grid, config, params), ValidationError);
}

TEST_CASE("runs are deterministic in the seed and account evaluations exactly") {
    const SiteGrid grid = default_site_grid(4);
    const ObjectiveConfig config;
    GaParams params;
    params.population_size = 20;
    params.generations = 40;
    params.seed = 321;

    const RunReport a = run_ga(grid, config, params);
    const RunReport b = run_ga(grid, config, params);
    CHECK(a.best == b.best);
    CHECK(a.best_objective == b.best_objective);
    CHECK(a.trace == b.trace);
    CHECK(a.evaluations == b.evaluations);

    CHECK(a.evaluations == 20u * (40u + 1u));
    CHECK(a.trace.size() == 41);
    CHECK(a.trace_evaluations.back() == a.evaluations);

    CHECK(a.best_objective == total_objective(a.best, grid, config));
    CHECK(std::is_sorted(a.trace.rbegin(), a.trace.rend()));  // nonincreasing
    CHECK(a.best_objective >= exact_optimum(grid, config).total);

    for (const BarangayGenome& genome : a.best.cells())
        for (Trait t : kTraits) {
            CHECK(genome.level(t) >= 0);
            CHECK(genome.level(t) <= 3);
        }
}

TEST_CASE("a short run improves on its initial population") {
    const SiteGrid grid = default_site_grid(3);
    const ObjectiveConfig config;
    GaParams params;
    params.population_size = 30;
    params.generations = 60;
    params.seed = 5;
    const RunReport report = run_ga(grid, config, params);
    CHECK(report.best_objective < report.trace.front());
}
