#include "floodopt/oracle.hpp"

#include <map>
#include <string>

namespace floodopt {

const CellOptimum& OracleResult::optimum_for(double factor) const {
    for (const auto& [f, opt] : per_factor)
        if (f == factor) return opt;
    throw ValidationError("no oracle optimum for site factor " + std::to_string(factor));
}

CellOptimum best_genome_for_factor(double site_factor, const ObjectiveConfig& config) {
    config.validate();
    constexpr int kGenomeCount = 16384;  // 4^7
    CellOptimum best;
    bool have = false;
    BarangayGenome genome;
    // Ascending base-4 code with trait A as the most significant digit is
    // exactly lexicographic A..G order, so keeping strict improvements only
    // implements the lex-smallest tie-break.
    for (int code = 0; code < kGenomeCount; ++code) {
        int rest = code;
        for (int t = kNumTraits - 1; t >= 0; --t) {
            genome.set_level(static_cast<Trait>(t), rest & 3);
            rest >>= 2;
        }
        const double value = cell_objective(genome, site_factor, config);
        if (!have || value < best.objective) {
            best = CellOptimum{genome, value};
            have = true;
        }
    }
    return best;
}

CellOptimum best_genome_per_trait(double site_factor, const ObjectiveConfig& config) {
    config.validate();
    BarangayGenome genome;
    for (Trait t : kTraits) {
        const int ti = static_cast<int>(t);
        int best_level = 0;
        double best_value = 0;
        for (int x = 0; x <= kGeneMax; ++x) {
            const double value =
                site_factor * config.weights.of(t) * x +
                config.cost_scale * (penalty_term(GeneValue(x), config.shapes[ti]) / site_factor);
            if (x == 0 || value < best_value) {
                best_level = x;
                best_value = value;
            }
        }
        genome.set_level(t, best_level);
    }
    return CellOptimum{genome, cell_objective(genome, site_factor, config)};
}

OracleResult exact_optimum(const SiteGrid& grid, const ObjectiveConfig& config) {
    std::map<double, CellOptimum> optima;
    for (double f : grid.factors())
        if (!optima.contains(f)) optima.emplace(f, best_genome_for_factor(f, config));

    OracleResult result;
    result.per_factor.assign(optima.begin(), optima.end());
    result.design = CityDesign(grid.side());
    for (int i = 0; i < result.design.cell_count(); ++i)
        result.design.cell(i) = optima.at(grid.factor(i)).genome;
    // Recomputing through total_objective keeps the total bit-comparable with
    // engine results, so no run can appear to beat the oracle by a rounding
    // artifact.
    result.total = total_objective(result.design, grid, config);
    return result;
}

}  // namespace floodopt
