#pragma once

#include <span>
#include <utility>
#include <vector>

#include "floodopt/engine.hpp"
#include "floodopt/model.hpp"
#include "floodopt/objective.hpp"
#include "floodopt/rng.hpp"

namespace floodopt {

// Draws k population indices uniformly with replacement and returns the one
// with the lowest objective; ties go to the first drawn.
template <UniformSource R>
std::size_t tournament_select(std::span<const double> objectives, int k, R& rng) {
    if (objectives.empty()) throw ValidationError("tournament over an empty population");
    if (k < 1) throw ValidationError("tournament size must be >= 1");
    std::size_t winner = rng.uniform_index(objectives.size());
    for (int i = 1; i < k; ++i) {
        const std::size_t challenger = rng.uniform_index(objectives.size());
        if (objectives[challenger] < objectives[winner]) winner = challenger;
    }
    return winner;
}

// With probability (1 - rate) the children are plain copies; otherwise each
// gene position independently swaps between the children with probability
// one half.
template <UniformSource R>
std::pair<CityDesign, CityDesign> crossover_uniform(const CityDesign& parent_a,
                                                    const CityDesign& parent_b, double rate,
                                                    R& rng) {
    if (parent_a.side() != parent_b.side())
        throw ValidationError("crossover parents must have the same grid side");
    std::pair<CityDesign, CityDesign> children{parent_a, parent_b};
    if (rng.uniform01() >= rate) return children;
    for (int i = 0; i < parent_a.cell_count(); ++i) {
        for (Trait t : kTraits) {
            if (rng.uniform01() < 0.5) {
                const GeneValue a = children.first.cell(i).gene(t);
                children.first.cell(i).set_gene(t, children.second.cell(i).gene(t));
                children.second.cell(i).set_gene(t, a);
            }
        }
    }
    return children;
}

// Flips each bit of encode_design independently with probability
// per_bit_rate, then decodes back.
template <UniformSource R>
CityDesign mutate_bitflip(const CityDesign& design, double per_bit_rate, R& rng) {
    if (!(per_bit_rate >= 0.0 && per_bit_rate <= 1.0))
        throw ValidationError("per-bit mutation rate must be in [0,1]");
    BitString bits = encode_design(design);
    for (auto& bit : bits)
        if (rng.uniform01() < per_bit_rate) bit ^= 1;
    return decode_design(bits, design.side());
}

// One generational step: carries the elitism_count best over unchanged and
// fills the rest with select -> crossover -> mutate offspring.
std::vector<CityDesign> step_generation(const std::vector<CityDesign>& population,
                                        const GaParams& params, const SiteGrid& grid,
                                        const ObjectiveConfig& config, Rng& rng);

RunReport run_ga(const SiteGrid& grid, const ObjectiveConfig& config, const GaParams& params);

}  // namespace floodopt
