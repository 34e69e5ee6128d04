#include "floodopt/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "floodopt/ga.hpp"
#include "floodopt/sa.hpp"

namespace floodopt {

using nlohmann::json;

namespace {

// Code meanings per trait, highest level first, matching how the levels are
// scored: 3 is always the most vulnerable state.
constexpr std::array<std::array<std::string_view, 4>, kNumTraits> kLegends = {{
    {"not urbanized", "a little urbanized", "moderately urbanized", "highly urbanized"},
    {"under 25% illiterate", "25-50% illiterate", "50-75% illiterate", "over 75% illiterate"},
    {"low mortality rate", "below-average mortality rate", "average mortality rate",
     "high mortality rate"},
    {"under 25% poor households", "25-50% poor households", "50-75% poor households",
     "over 75% poor households"},
    {"75-100% radio/TV penetration", "50-75% radio/TV penetration", "25-50% radio/TV penetration",
     "under 25% radio/TV penetration"},
    {"measures with good compliance", "measures with average compliance",
     "measures with poor compliance", "no non-structural measures"},
    {"structures in good condition", "structures in average condition",
     "structures in poor condition", "no structural measures"},
}};

std::string gene_code(int level) {
    return {static_cast<char>('0' + ((level >> 1) & 1)), static_cast<char>('0' + (level & 1))};
}

void render_one_trait(std::ostringstream& out, const CityDesign& design, Trait t,
                      const RenderOptions& options) {
    out << trait_name(t) << " (" << trait_letter(t) << ")\n";
    if (options.legend) {
        for (int level = kGeneMax; level >= 0; --level)
            out << "  " << gene_code(level) << " = "
                << kLegends[static_cast<int>(t)][level] << "\n";
    }
    for (int r = 0; r < design.side(); ++r) {
        out << " ";
        for (int c = 0; c < design.side(); ++c) out << " " << gene_code(design.cell(r, c).level(t));
        out << "\n";
    }
    out << "\n";
}

bool is_gene_code(std::string_view token) {
    return token.size() == 2 && (token[0] == '0' || token[0] == '1') &&
           (token[1] == '0' || token[1] == '1');
}

}  // namespace

std::string render_trait_grids(const CityDesign& design, const RenderOptions& options) {
    std::ostringstream out;
    if (options.only_trait) {
        render_one_trait(out, design, *options.only_trait, options);
    } else {
        for (Trait t : kTraits) render_one_trait(out, design, t, options);
    }
    return out.str();
}

CityDesign parse_trait_grids(const std::string& text) {
    // Grid rows are exactly the lines made solely of 2-bit codes; legends and
    // headers never are. Rows arrive trait-major in A..G order.
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::vector<int> row;
        std::string token;
        bool all_codes = true;
        while (tokens >> token) {
            if (!is_gene_code(token)) {
                all_codes = false;
                break;
            }
            row.push_back((token[0] - '0') * 2 + (token[1] - '0'));
        }
        if (all_codes && !row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ValidationError("rendering contains no grid rows");
    const int n = static_cast<int>(rows[0].size());
    if (rows.size() != static_cast<std::size_t>(kNumTraits) * n)
        throw ValidationError("expected " + std::to_string(kNumTraits * n) + " grid rows of " +
                              std::to_string(n) + " codes, got " + std::to_string(rows.size()));
    CityDesign design(n);
    for (int t = 0; t < kNumTraits; ++t) {
        for (int r = 0; r < n; ++r) {
            const auto& row = rows[t * n + r];
            if (row.size() != static_cast<std::size_t>(n))
                throw ValidationError("ragged grid row in rendering");
            for (int c = 0; c < n; ++c)
                design.cell(r, c).set_level(static_cast<Trait>(t), row[c]);
        }
    }
    return design;
}

std::string_view site_class_name(SiteClass c) {
    switch (c) {
        case SiteClass::Floodplain: return "floodplain";
        case SiteClass::Slope: return "slope";
        case SiteClass::Highland: return "highland";
    }
    return "";
}

int FloodplainReport::trait_flag_count(Trait t) const {
    int count = 0;
    for (const Flag& flag : high_risk)
        if (flag.trait == t) ++count;
    return count;
}

FloodplainReport floodplain_report(const CityDesign& design, const SiteGrid& grid) {
    if (design.side() != grid.side())
        throw ValidationError("design side " + std::to_string(design.side()) +
                              " does not match grid side " + std::to_string(grid.side()));
    FloodplainReport report;
    const int n = design.side();
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const SiteClass sc = classify_site_factor(grid.factor(r, c));
            for (Trait t : kTraits) {
                const int level = design.cell(r, c).level(t);
                ++report.counts[static_cast<int>(t)][static_cast<int>(sc)][level];
                if (sc == SiteClass::Floodplain && level == kGeneMax)
                    report.high_risk.push_back({r, c, t});
            }
        }
    }
    return report;
}

namespace {

ComparisonReport::Row make_row(const RunReport& run, double oracle_total) {
    return {run.seed, run.best_objective,
            100.0 * (run.best_objective - oracle_total) / oracle_total, run.evaluations};
}

ComparisonReport::Stats make_stats(const std::vector<ComparisonReport::Row>& rows) {
    std::vector<double> gaps;
    gaps.reserve(rows.size());
    for (const auto& row : rows) gaps.push_back(row.gap_percent);
    std::sort(gaps.begin(), gaps.end());
    const std::size_t m = gaps.size();
    const double median = m % 2 == 1 ? gaps[m / 2] : 0.5 * (gaps[m / 2 - 1] + gaps[m / 2]);
    return {median, gaps.front(), gaps.back()};
}

int best_run_index(const std::vector<RunReport>& runs) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(runs.size()); ++i)
        if (runs[i].best_objective < runs[best].best_objective) best = i;
    return best;
}

}  // namespace

ComparisonReport compare_runs(const RunConfig& config, std::span<const std::uint64_t> seeds) {
    if (seeds.empty()) throw ValidationError("compare needs at least one seed");
    std::vector<std::uint64_t> ordered(seeds.begin(), seeds.end());
    std::sort(ordered.begin(), ordered.end());

    const SiteGrid grid = config.make_grid();
    ComparisonReport report;
    report.oracle = exact_optimum(grid, config.objective);
    for (std::uint64_t seed : ordered) {
        GaParams ga = config.ga;
        ga.seed = seed;
        report.ga_runs.push_back(run_ga(grid, config.objective, ga));
        report.ga_rows.push_back(make_row(report.ga_runs.back(), report.oracle.total));
        SaParams sa = config.sa;
        sa.seed = seed;
        report.sa_runs.push_back(run_sa(grid, config.objective, sa));
        report.sa_rows.push_back(make_row(report.sa_runs.back(), report.oracle.total));
    }
    report.ga_stats = make_stats(report.ga_rows);
    report.sa_stats = make_stats(report.sa_rows);
    report.best_ga_index = best_run_index(report.ga_runs);
    report.best_sa_index = best_run_index(report.sa_runs);
    return report;
}

namespace {

json genome_to_json(const BarangayGenome& genome) {
    json out = json::array();
    for (Trait t : kTraits) out.push_back(genome.level(t));
    return out;
}

json design_to_json_value(const CityDesign& design) {
    json rows = json::array();
    for (int r = 0; r < design.side(); ++r) {
        json row = json::array();
        for (int c = 0; c < design.side(); ++c) row.push_back(genome_to_json(design.cell(r, c)));
        rows.push_back(std::move(row));
    }
    return {{"n", design.side()}, {"cells", rows}};
}

json params_to_json(const EngineParams& params) {
    if (const auto* ga = std::get_if<GaParams>(&params)) {
        return {{"population_size", ga->population_size},
                {"generations", ga->generations},
                {"tournament_size", ga->tournament_size},
                {"crossover_rate", ga->crossover_rate},
                {"mutation_rate_per_bit",
                 ga->mutation_rate_per_bit ? json(*ga->mutation_rate_per_bit) : json()},
                {"elitism_count", ga->elitism_count},
                {"seed", ga->seed}};
    }
    if (const auto* sa = std::get_if<SaParams>(&params)) {
        return {{"initial_temperature",
                 sa->initial_temperature ? json(*sa->initial_temperature) : json()},
                {"cooling_ratio", sa->cooling_ratio},
                {"steps_per_temperature",
                 sa->steps_per_temperature ? json(*sa->steps_per_temperature) : json()},
                {"min_temperature", sa->min_temperature ? json(*sa->min_temperature) : json()},
                {"max_evaluations", sa->max_evaluations},
                {"move", sa->move == SaMove::BitFlip ? "bitflip" : "gene"},
                {"seed", sa->seed}};
    }
    return json();
}

json run_report_to_json_value(const RunReport& report) {
    return {{"engine", report.engine},
            {"seed", report.seed},
            {"params", params_to_json(report.params)},
            {"best_objective", report.best_objective},
            {"best_design", design_to_json_value(report.best)},
            {"trace", report.trace},
            {"trace_evaluations", report.trace_evaluations},
            {"evaluations", report.evaluations}};
}

json row_to_json(const ComparisonReport::Row& row) {
    return {{"seed", row.seed},
            {"best_objective", row.best_objective},
            {"gap_percent", row.gap_percent},
            {"evaluations", row.evaluations}};
}

json stats_to_json(const ComparisonReport::Stats& stats) {
    return {{"median_gap_percent", stats.median_gap_percent},
            {"min_gap_percent", stats.min_gap_percent},
            {"max_gap_percent", stats.max_gap_percent}};
}

json oracle_to_json_value(const OracleResult& result) {
    json per_factor = json::array();
    for (const auto& [factor, optimum] : result.per_factor)
        per_factor.push_back({{"factor", factor},
                              {"genome", genome_to_json(optimum.genome)},
                              {"cell_objective", optimum.objective}});
    return {{"engine", "oracle"},
            {"total", result.total},
            {"per_factor", per_factor},
            {"design", design_to_json_value(result.design)}};
}

}  // namespace

std::string oracle_to_json(const OracleResult& result) {
    return oracle_to_json_value(result).dump(2) + "\n";
}

std::string run_report_to_json(const RunReport& report) {
    return run_report_to_json_value(report).dump(2) + "\n";
}

std::string comparison_to_json(const ComparisonReport& report) {
    json ga_rows = json::array(), sa_rows = json::array();
    for (const auto& row : report.ga_rows) ga_rows.push_back(row_to_json(row));
    for (const auto& row : report.sa_rows) sa_rows.push_back(row_to_json(row));
    const json doc = {
        {"oracle_total", report.oracle.total},
        {"ga", {{"runs", ga_rows}, {"stats", stats_to_json(report.ga_stats)}}},
        {"sa", {{"runs", sa_rows}, {"stats", stats_to_json(report.sa_stats)}}},
        {"best_ga",
         {{"seed", report.ga_runs[report.best_ga_index].seed},
          {"best_objective", report.ga_runs[report.best_ga_index].best_objective},
          {"design", design_to_json_value(report.ga_runs[report.best_ga_index].best)}}},
        {"best_sa",
         {{"seed", report.sa_runs[report.best_sa_index].seed},
          {"best_objective", report.sa_runs[report.best_sa_index].best_objective},
          {"design", design_to_json_value(report.sa_runs[report.best_sa_index].best)}}},
    };
    return doc.dump(2) + "\n";
}

std::string floodplain_to_json(const FloodplainReport& report) {
    json traits;
    for (Trait t : kTraits) {
        json classes;
        for (SiteClass sc : kSiteClasses) {
            json counts = json::array();
            for (int level = 0; level <= kGeneMax; ++level)
                counts.push_back(report.counts[static_cast<int>(t)][static_cast<int>(sc)][level]);
            classes[std::string(site_class_name(sc))] = counts;
        }
        traits[std::string(trait_name(t))] = classes;
    }
    json flags = json::array();
    for (const auto& flag : report.high_risk)
        flags.push_back({{"row", flag.row},
                         {"col", flag.col},
                         {"trait", std::string(trait_name(flag.trait))}});
    const json doc = {{"counts", traits}, {"high_risk_on_floodplain", flags}};
    return doc.dump(2) + "\n";
}

std::string breakdown_to_json(const ObjectiveBreakdown& breakdown) {
    json cells = json::array();
    for (const auto& cell : breakdown.cells) {
        json traits;
        for (Trait t : kTraits) {
            const auto& terms = cell.traits[static_cast<int>(t)];
            traits[std::string(trait_name(t))] = {
                {"vulnerability_term", terms.vulnerability_term},
                {"penalty_term", terms.penalty_term}};
        }
        cells.push_back({{"row", cell.row},
                         {"col", cell.col},
                         {"site_factor", cell.site_factor},
                         {"vulnerability", cell.vulnerability},
                         {"penalty", cell.penalty},
                         {"objective", cell.objective},
                         {"risk", cell.risk},
                         {"traits", traits}});
    }
    const json doc = {{"cells", cells},
                      {"total_vulnerability", breakdown.total_vulnerability},
                      {"total_penalty", breakdown.total_penalty},
                      {"total_objective", breakdown.total_objective},
                      {"total_risk", breakdown.total_risk}};
    return doc.dump(2) + "\n";
}

std::string trace_to_csv(const RunReport& report) {
    std::ostringstream out;
    out << "iteration,evaluations,best_objective\n";
    out.precision(17);
    for (std::size_t i = 0; i < report.trace.size(); ++i)
        out << i << "," << report.trace_evaluations[i] << "," << report.trace[i] << "\n";
    return out.str();
}

}  // namespace floodopt
