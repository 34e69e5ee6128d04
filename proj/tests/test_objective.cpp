#include <cmath>

#include <doctest.h>

#include "floodopt/objective.hpp"

using namespace floodopt;

namespace {

BarangayGenome uniform_genome(int level) {
    BarangayGenome g;
    for (Trait t : kTraits) g.set_level(t, level);
    return g;
}

ObjectiveConfig config_with_scale(double lambda) {
    ObjectiveConfig config;
    config.cost_scale = lambda;
    return config;
}

ObjectiveConfig random_config(Rng& rng) {
    ObjectiveConfig config;
    for (Trait t : kTraits) {
        config.weights.set(t, rng.uniform01() * 5.0);
        config.shapes[static_cast<int>(t)] = static_cast<PenaltyShape>(rng.uniform_index(3));
    }
    config.cost_scale = 0.1 + rng.uniform01() * 8.0;
    return config;
}

}  // namespace

TEST_CASE("vulnerability spot values") {
    const VulnerabilityWeights w;
    CHECK(vulnerability(uniform_genome(0), 1.0, w) == 0.0);
    CHECK(vulnerability(uniform_genome(3), 2.0, w) == 48.0);

    BarangayGenome poor;
    poor.set_level(Trait::Poverty, 3);
    CHECK(vulnerability(poor, 0.5, w) == 3.0);

    CHECK_THROWS_AS(vulnerability(poor, 0.0, w), ValidationError);
    CHECK_THROWS_AS(vulnerability(poor, -1.0, w), ValidationError);
}

TEST_CASE("penalty spot values") {
    const PenaltyShapes shapes = default_penalty_shapes();
    // all genes at 3: the three exponential terms contribute e^0 each
    CHECK(penalty(uniform_genome(3), 1.0, shapes, 1.0) == 3.0);
    CHECK(penalty(uniform_genome(0), 1.0, shapes, 1.0) ==
          doctest::Approx(3.0 * std::exp(3.0) + 18.0).epsilon(1e-9));
    CHECK(penalty(uniform_genome(0), 2.0, shapes, 3.26) ==
          doctest::Approx((3.0 * std::exp(3.0) + 18.0) * 3.26 / 2.0).epsilon(1e-9));

    CHECK_THROWS_AS(penalty(uniform_genome(0), 0.0, shapes, 1.0), ValidationError);
    CHECK_THROWS_AS(penalty(uniform_genome(0), 1.0, shapes, 0.0), ValidationError);
    CHECK_THROWS_AS(penalty(uniform_genome(0), 1.0, shapes, -3.0), ValidationError);
}

TEST_CASE("penalty scales linearly in the cost scale, bit for bit") {
    Rng rng(31);
    const PenaltyShapes shapes = default_penalty_shapes();
    for (int i = 0; i < 200; ++i) {
        BarangayGenome g;
        for (Trait t : kTraits) g.set_level(t, static_cast<int>(rng.uniform_index(4)));
        const double s = 0.25 + rng.uniform01() * 3.0;
        const double lambda = 0.1 + rng.uniform01() * 5.0;
        CHECK(penalty(g, s, shapes, lambda) == lambda * penalty(g, s, shapes, 1.0));
    }
}

TEST_CASE("cell objective is vulnerability plus penalty") {
    const ObjectiveConfig unit = config_with_scale(1.0);
    CHECK(cell_objective(uniform_genome(0), 1.0, unit) ==
          doctest::Approx(3.0 * std::exp(3.0) + 18.0).epsilon(1e-9));
    CHECK(cell_objective(uniform_genome(3), 1.0, unit) == 27.0);

    Rng rng(77);
    for (int i = 0; i < 200; ++i) {
        const ObjectiveConfig config = random_config(rng);
        BarangayGenome g;
        for (Trait t : kTraits) g.set_level(t, static_cast<int>(rng.uniform_index(4)));
        const double s = 0.25 + rng.uniform01() * 3.0;
        CHECK(cell_objective(g, s, config) ==
              vulnerability(g, s, config.weights) +
                  penalty(g, s, config.shapes, config.cost_scale));
    }
}

TEST_CASE("total objective sums the default grid cell by cell") {
    const ObjectiveConfig unit = config_with_scale(1.0);
    const SiteGrid grid = default_site_grid(6);
    const CityDesign zero(6);

    double expected = 0.0;
    for (int i = 0; i < grid.cell_count(); ++i)
        expected += (3.0 * std::exp(3.0) + 18.0) / grid.factor(i);
    CHECK(total_objective(zero, grid, unit) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("single-cell city reduces to cell_objective") {
    const ObjectiveConfig config;
    const SiteGrid grid = default_site_grid(1);
    CityDesign city(1);
    city.cell(0).set_level(Trait::Mortality, 2);
    CHECK(total_objective(city, grid, config) ==
          cell_objective(city.cell(0), grid.factor(0), config));
}

TEST_CASE("changing one cell moves the total by that cell's delta") {
    const ObjectiveConfig config;
    const SiteGrid grid = default_site_grid(6);
    Rng rng(3);
    const CityDesign base = random_design(rng, 6);
    CityDesign changed = base;
    changed.cell(2, 4) = uniform_genome(3);

    const double delta_total = total_objective(changed, grid, config) -
                               total_objective(base, grid, config);
    const double delta_cell = cell_objective(changed.cell(2, 4), grid.factor(2, 4), config) -
                              cell_objective(base.cell(2, 4), grid.factor(2, 4), config);
    CHECK(delta_total == doctest::Approx(delta_cell).epsilon(1e-9));
}

TEST_CASE("total objective rejects mismatched dimensions") {
    const ObjectiveConfig config;
    CHECK_THROWS_AS(total_objective(CityDesign(5), default_site_grid(6), config), ValidationError);
}

TEST_CASE("separability holds over 1000 random designs") {
    const ObjectiveConfig config;
    const SiteGrid grid = default_site_grid(6);
    Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        const CityDesign design = random_design(rng, 6);
        double by_cell = 0.0;
        for (int c = 0; c < design.cell_count(); ++c)
            by_cell += cell_objective(design.cell(c), grid.factor(c), config);
        CHECK(total_objective(design, grid, config) == doctest::Approx(by_cell).epsilon(1e-9));
    }
}

TEST_CASE("risk is the plain product") {
    CHECK(risk(1.0, 24.0, 1.0) == 24.0);
    CHECK(risk(0.0, 17.0, 5.0) == 0.0);
    CHECK(risk(2.0, 10.0, 0.5) == 10.0);
    CHECK_THROWS_AS(risk(-1.0, 1.0, 1.0), ValidationError);
    CHECK_THROWS_AS(risk(1.0, -1.0, 1.0), ValidationError);
    CHECK_THROWS_AS(risk(1.0, 1.0, -1.0), ValidationError);
}

TEST_CASE("raising a gene raises vulnerability and lowers penalty") {
    const VulnerabilityWeights w;
    const PenaltyShapes shapes = default_penalty_shapes();
    for (double s : {0.5, 1.0, 2.0}) {
        for (Trait t : kTraits) {
            for (int x = 0; x < 3; ++x) {
                BarangayGenome lo = uniform_genome(1);
                lo.set_level(t, x);
                BarangayGenome hi = lo;
                hi.set_level(t, x + 1);
                CHECK(vulnerability(hi, s, w) > vulnerability(lo, s, w));
                CHECK(penalty(hi, s, shapes, 3.26) < penalty(lo, s, shapes, 3.26));
            }
        }
    }
}

TEST_CASE("vulnerability is zero only for the all-zero genome") {
    const VulnerabilityWeights w;
    for (int code = 0; code < 16384; ++code) {
        BarangayGenome g;
        int rest = code;
        for (Trait t : kTraits) {
            g.set_level(t, rest & 3);
            rest >>= 2;
        }
        if (code == 0)
            CHECK(vulnerability(g, 1.5, w) == 0.0);
        else
            CHECK(vulnerability(g, 1.5, w) > 0.0);
    }
}

TEST_CASE("poverty counts double per increment, literacy single") {
    const VulnerabilityWeights w;
    for (double s : {0.5, 1.0, 2.0}) {
        BarangayGenome g = uniform_genome(1);
        BarangayGenome poorer = g;
        poorer.set_level(Trait::Poverty, 2);
        CHECK(vulnerability(poorer, s, w) - vulnerability(g, s, w) == 2.0 * s);
        BarangayGenome less_literate = g;
        less_literate.set_level(Trait::Literacy, 2);
        CHECK(vulnerability(less_literate, s, w) - vulnerability(g, s, w) == s);
    }
}

TEST_CASE("breakdown decomposes cells and traits consistently") {
    const ObjectiveConfig config;
    const SiteGrid grid = default_site_grid(6);

    const ObjectiveBreakdown zero = breakdown(CityDesign(6), grid, config);
    for (const auto& cell : zero.cells) {
        CHECK(cell.vulnerability == 0.0);
        for (const auto& terms : cell.traits) CHECK(terms.vulnerability_term == 0.0);
    }
    CHECK(zero.total_risk == 0.0);

    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        const CityDesign design = random_design(rng, 6);
        const ObjectiveBreakdown b = breakdown(design, grid, config);
        CHECK(b.total_objective ==
              doctest::Approx(total_objective(design, grid, config)).epsilon(1e-9));
        for (const auto& cell : b.cells) {
            double v = 0.0, p_raw = 0.0;
            for (const auto& terms : cell.traits) {
                v += terms.vulnerability_term;
                p_raw += terms.penalty_term;
            }
            CHECK(cell.vulnerability == doctest::Approx(v).epsilon(1e-9));
            CHECK(cell.penalty ==
                  doctest::Approx(config.cost_scale * p_raw / cell.site_factor).epsilon(1e-9));
            CHECK(cell.objective == cell.vulnerability + cell.penalty);
        }
    }
}

TEST_CASE("exponential penalty terms stay positive below level 3") {
    for (int x = 0; x < 3; ++x)
        CHECK(penalty_term(GeneValue(x), PenaltyShape::Exponential) > 0.0);
    CHECK(penalty_term(GeneValue(3), PenaltyShape::Exponential) == 1.0);
    CHECK(penalty_term(GeneValue(3), PenaltyShape::Linear) == 0.0);
    CHECK(penalty_term(GeneValue(1), PenaltyShape::Quadratic) == 4.0);
}

TEST_CASE("breakdown rejects mismatched dimensions") {
    CHECK_THROWS_AS(breakdown(CityDesign(2), default_site_grid(3), ObjectiveConfig{}),
                    ValidationError);
}
