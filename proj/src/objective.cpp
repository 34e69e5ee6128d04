#include "floodopt/objective.hpp"

#include <cmath>
#include <string>

namespace floodopt {

namespace {

void check_site_factor(double s) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw ValidationError("site factor must be a positive finite number");
}

void check_dimensions(const CityDesign& city, const SiteGrid& grid) {
    if (city.side() != grid.side())
        throw ValidationError("design side " + std::to_string(city.side()) +
                              " does not match grid side " + std::to_string(grid.side()));
}

}  // namespace

double penalty_term(GeneValue gene, PenaltyShape shape) {
    const double u = static_cast<double>(kGeneMax - gene.value());
    switch (shape) {
        case PenaltyShape::Linear: return u;
        case PenaltyShape::Quadratic: return u * u;
        case PenaltyShape::Exponential: return std::exp(u);
    }
    return 0.0;
}

double vulnerability(const BarangayGenome& genome, double site_factor,
                     const VulnerabilityWeights& weights) {
    check_site_factor(site_factor);
    double sum = 0.0;
    for (Trait t : kTraits) sum += weights.of(t) * genome.level(t);
    return site_factor * sum;
}

double penalty(const BarangayGenome& genome, double site_factor, const PenaltyShapes& shapes,
               double cost_scale) {
    check_site_factor(site_factor);
    if (!(cost_scale > 0.0) || !std::isfinite(cost_scale))
        throw ValidationError("cost_scale must be a positive finite number");
    double sum = 0.0;
    for (Trait t : kTraits) sum += penalty_term(genome.gene(t), shapes[static_cast<int>(t)]);
    return cost_scale * (sum / site_factor);
}

double cell_objective(const BarangayGenome& genome, double site_factor,
                      const ObjectiveConfig& config) {
    return vulnerability(genome, site_factor, config.weights) +
           penalty(genome, site_factor, config.shapes, config.cost_scale);
}

double total_objective(const CityDesign& city, const SiteGrid& grid,
                       const ObjectiveConfig& config) {
    check_dimensions(city, grid);
    double total = 0.0;
    for (int i = 0; i < city.cell_count(); ++i)
        total += cell_objective(city.cell(i), grid.factor(i), config);
    return total;
}

double risk(double hazard, double vulnerability, double exposure) {
    if (!(hazard >= 0.0) || !(vulnerability >= 0.0) || !(exposure >= 0.0))
        throw ValidationError("risk factors must be nonnegative");
    return hazard * vulnerability * exposure;
}

ObjectiveBreakdown breakdown(const CityDesign& city, const SiteGrid& grid,
                             const ObjectiveConfig& config) {
    check_dimensions(city, grid);
    config.validate();
    const int n = city.side();
    ObjectiveBreakdown out;
    out.cells.reserve(city.cell_count());
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const BarangayGenome& genome = city.cell(r, c);
            const double s = grid.factor(r, c);
            ObjectiveBreakdown::Cell cell{};
            cell.row = r;
            cell.col = c;
            cell.site_factor = s;
            for (Trait t : kTraits) {
                const int ti = static_cast<int>(t);
                cell.traits[ti].vulnerability_term = s * config.weights.of(t) * genome.level(t);
                cell.traits[ti].penalty_term = penalty_term(genome.gene(t), config.shapes[ti]);
            }
            cell.vulnerability = vulnerability(genome, s, config.weights);
            cell.penalty = penalty(genome, s, config.shapes, config.cost_scale);
            cell.objective = cell.vulnerability + cell.penalty;
            cell.risk = risk(config.hazard, cell.vulnerability, config.exposure);
            out.total_vulnerability += cell.vulnerability;
            out.total_penalty += cell.penalty;
            out.total_objective += cell.objective;
            out.total_risk += cell.risk;
            out.cells.push_back(cell);
        }
    }
    return out;
}

}  // namespace floodopt
