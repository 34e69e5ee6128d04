#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "floodopt/config.hpp"
#include "floodopt/engine.hpp"
#include "floodopt/objective.hpp"
#include "floodopt/oracle.hpp"

namespace floodopt {

struct RenderOptions {
    std::optional<Trait> only_trait{};  // absent -> all seven traits
    bool legend = true;
};

// One n x n table per trait, genes printed as zero-padded 2-bit binary, with
// a legend of what each code means for that trait.
std::string render_trait_grids(const CityDesign& design, const RenderOptions& options = {});

// Inverse of render_trait_grids (all-trait form); used by tests and tooling
// to read a rendering back into a design.
CityDesign parse_trait_grids(const std::string& text);

// Site-factor classes for the default 2 / 1 / 0.5 geography; custom grids
// classify by the same thresholds.
enum class SiteClass { Floodplain, Slope, Highland };

inline SiteClass classify_site_factor(double factor) {
    if (factor >= 2.0) return SiteClass::Floodplain;
    if (factor >= 1.0) return SiteClass::Slope;
    return SiteClass::Highland;
}

std::string_view site_class_name(SiteClass c);
inline constexpr std::array<SiteClass, 3> kSiteClasses = {SiteClass::Floodplain, SiteClass::Slope,
                                                          SiteClass::Highland};

// Gene-level tallies per trait per site class, plus flags for every
// level-3 gene sitting on a floodplain cell.
struct FloodplainReport {
    struct Flag {
        int row;
        int col;
        Trait trait;
        bool operator==(const Flag&) const = default;
    };
    // counts[trait][site class][gene value]
    std::array<std::array<std::array<int, 4>, 3>, kNumTraits> counts{};
    std::vector<Flag> high_risk;  // row-major, traits A..G within a cell

    int trait_flag_count(Trait t) const;
};

FloodplainReport floodplain_report(const CityDesign& design, const SiteGrid& grid);

// Oracle once, then one GA and one SA run per seed under the config's
// parameters (the seed list overrides the configured seeds).
struct ComparisonReport {
    struct Row {
        std::uint64_t seed;
        double best_objective;
        double gap_percent;  // 100 * (best - oracle total) / oracle total
        std::uint64_t evaluations;
    };
    struct Stats {
        double median_gap_percent;
        double min_gap_percent;
        double max_gap_percent;
    };

    OracleResult oracle;
    std::vector<RunReport> ga_runs;  // sorted by seed
    std::vector<RunReport> sa_runs;
    std::vector<Row> ga_rows;
    std::vector<Row> sa_rows;
    Stats ga_stats{};
    Stats sa_stats{};
    int best_ga_index = 0;  // into ga_runs, lowest objective (earliest seed on ties)
    int best_sa_index = 0;
};

ComparisonReport compare_runs(const RunConfig& config, std::span<const std::uint64_t> seeds);

// Deterministic JSON serializations (wall time excluded; see *.meta.json).
std::string oracle_to_json(const OracleResult& result);
std::string run_report_to_json(const RunReport& report);
std::string comparison_to_json(const ComparisonReport& report);
std::string floodplain_to_json(const FloodplainReport& report);
std::string breakdown_to_json(const ObjectiveBreakdown& breakdown);

// "iteration,evaluations,best_objective" rows for plotting.
std::string trace_to_csv(const RunReport& report);

}  // namespace floodopt
