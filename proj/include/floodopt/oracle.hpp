#pragma once

#include <utility>
#include <vector>

#include "floodopt/model.hpp"
#include "floodopt/objective.hpp"

namespace floodopt {

struct CellOptimum {
    BarangayGenome genome;
    double objective = 0;
};

// Exact global optimum, exploiting that the objective is a sum of
// independent per-cell terms: cells sharing a site factor share an optimum.
struct OracleResult {
    std::vector<std::pair<double, CellOptimum>> per_factor;  // sorted by factor
    CityDesign design;
    double total = 0;

    const CellOptimum& optimum_for(double factor) const;
};

// Argmin of cell_objective over all 4^7 = 16384 genomes. Ties break to the
// lexicographically smallest gene vector in A..G order.
CellOptimum best_genome_for_factor(double site_factor, const ObjectiveConfig& config);

// Same argmin via independent per-trait 1-D minimization; valid because both
// V and C are additive over traits. Kept as a cross-check of the full
// enumeration (and vice versa).
CellOptimum best_genome_per_trait(double site_factor, const ObjectiveConfig& config);

// Assembles per-factor optima cell by cell; the total is the true global
// minimum of total_objective.
OracleResult exact_optimum(const SiteGrid& grid, const ObjectiveConfig& config);

}  // namespace floodopt
