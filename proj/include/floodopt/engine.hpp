#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "floodopt/model.hpp"

namespace floodopt {

struct GaParams {
    int population_size = 100;
    int generations = 500;
    int tournament_size = 2;
    double crossover_rate = 0.9;
    // absent -> 1/L where L is the design's bit count (1/504 on a 6x6 grid)
    std::optional<double> mutation_rate_per_bit{};
    int elitism_count = 1;
    std::uint64_t seed = 0;

    double mutation_rate(int bit_count) const {
        return mutation_rate_per_bit.value_or(1.0 / bit_count);
    }
    void validate() const;

    bool operator==(const GaParams&) const = default;
};

enum class SaMove { BitFlip, GeneResample };

struct SaParams {
    // absent -> calibrated so the mean initial uphill acceptance is ~0.8
    std::optional<double> initial_temperature{};
    double cooling_ratio = 0.95;
    // absent -> 2*L proposals per level (1008 on a 6x6 grid)
    std::optional<int> steps_per_temperature{};
    // absent -> 1e-3 * initial temperature
    std::optional<double> min_temperature{};
    std::uint64_t max_evaluations = 2'000'000;
    SaMove move = SaMove::BitFlip;
    std::uint64_t seed = 0;

    int steps(int bit_count) const { return steps_per_temperature.value_or(2 * bit_count); }
    void validate() const;

    bool operator==(const SaParams&) const = default;
};

using EngineParams = std::variant<std::monostate, GaParams, SaParams>;

// What a single engine run reports. Wall time is the only field excluded
// from the deterministic serialization.
struct RunReport {
    std::string engine;
    std::uint64_t seed = 0;
    EngineParams params{};
    CityDesign best;
    double best_objective = 0;  // total_objective of `best`, recomputed at the end
    std::vector<double> trace;  // best-so-far; entry 0 is the initial state
    std::vector<std::uint64_t> trace_evaluations;  // evaluations consumed at each entry
    std::uint64_t evaluations = 0;
    double wall_seconds = 0;
};

}  // namespace floodopt
