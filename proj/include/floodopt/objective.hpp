#pragma once

#include <array>
#include <vector>

#include "floodopt/model.hpp"

namespace floodopt {

// Raw penalty term for one trait: shape applied to the remediation gap
// u = 3 - gene. Strictly decreasing in the gene level for every shape.
double penalty_term(GeneValue gene, PenaltyShape shape);

// V = S * sum_t w_t * x_t. Zero iff all genes are zero (at positive weights).
double vulnerability(const BarangayGenome& genome, double site_factor,
                     const VulnerabilityWeights& weights);

// C = lambda * (sum_t shape_t(3 - x_t)) / S. lambda = 1 gives the unscaled
// penalty; the default 3.26 weighs it against vulnerability.
double penalty(const BarangayGenome& genome, double site_factor, const PenaltyShapes& shapes,
               double cost_scale);

// vulnerability + penalty under one config.
double cell_objective(const BarangayGenome& genome, double site_factor,
                      const ObjectiveConfig& config);

// Sum of cell objectives over the grid; separable by construction.
double total_objective(const CityDesign& city, const SiteGrid& grid,
                       const ObjectiveConfig& config);

// Risk = hazard * vulnerability * exposure.
double risk(double hazard, double vulnerability, double exposure);

// Per-cell, per-trait decomposition for reporting. Trait vulnerability terms
// sum to the cell's V; raw trait penalty terms times lambda/S give its C.
struct ObjectiveBreakdown {
    struct TraitTerms {
        double vulnerability_term;  // S * w_t * x_t
        double penalty_term;        // shape_t(3 - x_t), unscaled
    };
    struct Cell {
        int row;
        int col;
        double site_factor;
        double vulnerability;
        double penalty;
        double objective;
        double risk;  // hazard * V * exposure
        std::array<TraitTerms, kNumTraits> traits;
    };
    std::vector<Cell> cells;  // row-major
    double total_vulnerability = 0;
    double total_penalty = 0;
    double total_objective = 0;
    double total_risk = 0;
};

ObjectiveBreakdown breakdown(const CityDesign& city, const SiteGrid& grid,
                             const ObjectiveConfig& config);

}  // namespace floodopt
