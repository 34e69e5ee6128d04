#include "floodopt/engine.hpp"

#include <cmath>

#include "floodopt/error.hpp"

namespace floodopt {

void GaParams::validate() const {
    if (population_size < 2) throw ValidationError("ga.population_size must be >= 2");
    if (generations < 0) throw ValidationError("ga.generations must be >= 0");
    if (tournament_size < 1) throw ValidationError("ga.tournament_size must be >= 1");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0))
        throw ValidationError("ga.crossover_rate must be in [0,1]");
    if (mutation_rate_per_bit &&
        !(*mutation_rate_per_bit >= 0.0 && *mutation_rate_per_bit <= 1.0))
        throw ValidationError("ga.mutation_rate_per_bit must be in [0,1]");
    if (elitism_count < 0 || elitism_count >= population_size)
        throw ValidationError("ga.elitism_count must be in [0, population_size)");
}

void SaParams::validate() const {
    if (initial_temperature && !(*initial_temperature > 0.0 && std::isfinite(*initial_temperature)))
        throw ValidationError("sa.initial_temperature must be > 0");
    if (!(cooling_ratio > 0.0 && cooling_ratio < 1.0))
        throw ValidationError("sa.cooling_ratio must be in (0,1)");
    if (steps_per_temperature && *steps_per_temperature < 1)
        throw ValidationError("sa.steps_per_temperature must be >= 1");
    if (min_temperature && !(*min_temperature > 0.0 && std::isfinite(*min_temperature)))
        throw ValidationError("sa.min_temperature must be > 0");
    if (max_evaluations < 1) throw ValidationError("sa.max_evaluations must be >= 1");
}

}  // namespace floodopt
