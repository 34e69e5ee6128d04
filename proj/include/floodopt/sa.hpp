#pragma once

#include <functional>

#include "floodopt/engine.hpp"
#include "floodopt/model.hpp"
#include "floodopt/objective.hpp"
#include "floodopt/rng.hpp"

namespace floodopt {

// Flips one uniformly chosen bit of the design's encoding: the output is at
// Hamming distance exactly 1 from the input. Consumes one uniform_index draw.
template <UniformSource R>
CityDesign neighbor(const CityDesign& design, R& rng) {
    CityDesign out = design;
    flip_design_bit(out, static_cast<int>(
                             rng.uniform_index(static_cast<std::size_t>(
                                 design_bit_count(design.side())))));
    return out;
}

// 1 for downhill or flat moves, e^(-delta/T) for uphill ones.
double acceptance_probability(double delta, double temperature);

// The Metropolis decision with the uniform draw passed in, so it can be
// checked against the threshold exactly.
inline bool metropolis_accept(double delta, double temperature, double uniform_draw) {
    return uniform_draw < acceptance_probability(delta, temperature);
}

// Per temperature level bookkeeping, handed to the observer after the level
// finishes.
struct SaLevelStats {
    int level = 0;
    double temperature = 0;
    int proposals = 0;
    int accepted = 0;
    int accepted_uphill = 0;
    double current_objective = 0;
    double best_objective = 0;
    std::uint64_t evaluations = 0;
};

using SaObserver = std::function<void(const SaLevelStats&)>;

// Anneals from a seeded random design: steps(bit_count) proposals per level,
// T_k = T0 * alpha^k, until T drops below min_temperature or the evaluation
// cap is hit. Draw order per proposal: move index (bit flip) or cell-trait
// index plus new level (gene resample), then one uniform01 for acceptance.
RunReport run_sa(const SiteGrid& grid, const ObjectiveConfig& config, const SaParams& params,
                 const SaObserver& observer = {});

}  // namespace floodopt
