#include "floodopt/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace floodopt {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ValidationError(path + ": " + what);
}

const json& expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    return j;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) fail(path + "." + key, "unknown field");
    }
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

std::uint64_t get_u64(const json& j, const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        fail(path, "expected a nonnegative integer");
    return j.get<std::uint64_t>();
}

void parse_grid(const json& j, RunConfig& config, const std::string& path) {
    expect_object(j, path);
    reject_unknown_keys(j, {"n", "factors"}, path);
    if (j.contains("n")) {
        config.n = get_int(j.at("n"), path + ".n");
        if (config.n < 1) fail(path + ".n", "grid side must be >= 1");
    }
    if (j.contains("factors") && !j.at("factors").is_null()) {
        const json& rows = j.at("factors");
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(config.n))
            fail(path + ".factors", "expected " + std::to_string(config.n) + " rows");
        std::vector<double> factors;
        factors.reserve(static_cast<std::size_t>(config.n) * config.n);
        for (int r = 0; r < config.n; ++r) {
            const json& row = rows.at(r);
            const std::string row_path = path + ".factors[" + std::to_string(r) + "]";
            if (!row.is_array() || row.size() != static_cast<std::size_t>(config.n))
                fail(row_path, "expected " + std::to_string(config.n) + " entries");
            for (int c = 0; c < config.n; ++c) {
                const std::string cell_path = row_path + "[" + std::to_string(c) + "]";
                const double f = get_number(row.at(c), cell_path);
                if (!(f > 0.0) || !std::isfinite(f)) fail(cell_path, "site factor must be > 0");
                factors.push_back(f);
            }
        }
        config.site_factors = std::move(factors);
    }
}

void parse_objective(const json& j, ObjectiveConfig& objective, const std::string& path) {
    expect_object(j, path);
    reject_unknown_keys(j, {"weights", "shapes", "cost_scale", "hazard", "exposure"}, path);
    if (j.contains("weights")) {
        const json& w = expect_object(j.at("weights"), path + ".weights");
        for (const auto& [name, value] : w.items()) {
            const std::string field = path + ".weights." + name;
            const auto trait = trait_from_name(name);
            if (!trait) fail(field, "unknown trait name");
            const double weight = get_number(value, field);
            if (!(weight >= 0.0) || !std::isfinite(weight))
                fail(field, "weight must be nonnegative");
            objective.weights.set(*trait, weight);
        }
    }
    if (j.contains("shapes")) {
        const json& s = expect_object(j.at("shapes"), path + ".shapes");
        for (const auto& [name, value] : s.items()) {
            const std::string field = path + ".shapes." + name;
            const auto trait = trait_from_name(name);
            if (!trait) fail(field, "unknown trait name");
            if (!value.is_string()) fail(field, "expected a shape name string");
            const auto shape = penalty_shape_from_name(value.get<std::string>());
            if (!shape) fail(field, "expected one of linear, quadratic, exponential");
            objective.shapes[static_cast<int>(*trait)] = *shape;
        }
    }
    if (j.contains("cost_scale")) {
        objective.cost_scale = get_number(j.at("cost_scale"), path + ".cost_scale");
        if (!(objective.cost_scale > 0.0)) fail(path + ".cost_scale", "must be > 0");
    }
    if (j.contains("hazard")) {
        objective.hazard = get_number(j.at("hazard"), path + ".hazard");
        if (!(objective.hazard >= 0.0)) fail(path + ".hazard", "must be >= 0");
    }
    if (j.contains("exposure")) {
        objective.exposure = get_number(j.at("exposure"), path + ".exposure");
        if (!(objective.exposure >= 0.0)) fail(path + ".exposure", "must be >= 0");
    }
}

void parse_ga(const json& j, GaParams& ga, const std::string& path) {
    expect_object(j, path);
    reject_unknown_keys(j,
                        {"population_size", "generations", "tournament_size", "crossover_rate",
                         "mutation_rate_per_bit", "elitism_count", "seed"},
                        path);
    if (j.contains("population_size"))
        ga.population_size = get_int(j.at("population_size"), path + ".population_size");
    if (j.contains("generations"))
        ga.generations = get_int(j.at("generations"), path + ".generations");
    if (j.contains("tournament_size"))
        ga.tournament_size = get_int(j.at("tournament_size"), path + ".tournament_size");
    if (j.contains("crossover_rate"))
        ga.crossover_rate = get_number(j.at("crossover_rate"), path + ".crossover_rate");
    if (j.contains("mutation_rate_per_bit") && !j.at("mutation_rate_per_bit").is_null())
        ga.mutation_rate_per_bit =
            get_number(j.at("mutation_rate_per_bit"), path + ".mutation_rate_per_bit");
    if (j.contains("elitism_count"))
        ga.elitism_count = get_int(j.at("elitism_count"), path + ".elitism_count");
    if (j.contains("seed")) ga.seed = get_u64(j.at("seed"), path + ".seed");
    try {
        ga.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void parse_sa(const json& j, SaParams& sa, const std::string& path) {
    expect_object(j, path);
    reject_unknown_keys(j,
                        {"initial_temperature", "cooling_ratio", "steps_per_temperature",
                         "min_temperature", "max_evaluations", "move", "seed"},
                        path);
    if (j.contains("initial_temperature") && !j.at("initial_temperature").is_null())
        sa.initial_temperature =
            get_number(j.at("initial_temperature"), path + ".initial_temperature");
    if (j.contains("cooling_ratio"))
        sa.cooling_ratio = get_number(j.at("cooling_ratio"), path + ".cooling_ratio");
    if (j.contains("steps_per_temperature") && !j.at("steps_per_temperature").is_null())
        sa.steps_per_temperature =
            get_int(j.at("steps_per_temperature"), path + ".steps_per_temperature");
    if (j.contains("min_temperature") && !j.at("min_temperature").is_null())
        sa.min_temperature = get_number(j.at("min_temperature"), path + ".min_temperature");
    if (j.contains("max_evaluations"))
        sa.max_evaluations = get_u64(j.at("max_evaluations"), path + ".max_evaluations");
    if (j.contains("move")) {
        const json& m = j.at("move");
        if (!m.is_string()) fail(path + ".move", "expected a string");
        const std::string name = m.get<std::string>();
        if (name == "bitflip")
            sa.move = SaMove::BitFlip;
        else if (name == "gene")
            sa.move = SaMove::GeneResample;
        else
            fail(path + ".move", "expected \"bitflip\" or \"gene\"");
    }
    if (j.contains("seed")) sa.seed = get_u64(j.at("seed"), path + ".seed");
    try {
        sa.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) fail(path, "expected a boolean");
    return j.get<bool>();
}

void parse_output(const json& j, OutputOptions& output, const std::string& path) {
    expect_object(j, path);
    reject_unknown_keys(j, {"render", "trace_csv", "breakdown"}, path);
    if (j.contains("render")) output.render = get_bool(j.at("render"), path + ".render");
    if (j.contains("trace_csv"))
        output.trace_csv = get_bool(j.at("trace_csv"), path + ".trace_csv");
    if (j.contains("breakdown"))
        output.breakdown = get_bool(j.at("breakdown"), path + ".breakdown");
}

}  // namespace

SiteGrid RunConfig::make_grid() const {
    if (site_factors) return SiteGrid(n, *site_factors);
    return default_site_grid(n);
}

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config: malformed JSON: ") + e.what());
    }
    expect_object(j, "config");
    reject_unknown_keys(j, {"grid", "objective", "ga", "sa", "output"}, "config");

    RunConfig config;
    if (j.contains("grid")) parse_grid(j.at("grid"), config, "config.grid");
    if (j.contains("objective")) parse_objective(j.at("objective"), config.objective, "config.objective");
    if (j.contains("ga")) parse_ga(j.at("ga"), config.ga, "config.ga");
    if (j.contains("sa")) parse_sa(j.at("sa"), config.sa, "config.sa");
    if (j.contains("output")) parse_output(j.at("output"), config.output, "config.output");
    config.objective.validate();
    return config;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string config_to_json(const RunConfig& config) {
    json grid;
    grid["n"] = config.n;
    if (config.site_factors) {
        json rows = json::array();
        for (int r = 0; r < config.n; ++r) {
            json row = json::array();
            for (int c = 0; c < config.n; ++c)
                row.push_back((*config.site_factors)[r * config.n + c]);
            rows.push_back(std::move(row));
        }
        grid["factors"] = std::move(rows);
    } else {
        grid["factors"] = nullptr;
    }

    json weights, shapes;
    for (Trait t : kTraits) {
        weights[std::string(trait_name(t))] = config.objective.weights.of(t);
        shapes[std::string(trait_name(t))] =
            std::string(penalty_shape_name(config.objective.shapes[static_cast<int>(t)]));
    }
    json objective = {{"weights", weights},
                      {"shapes", shapes},
                      {"cost_scale", config.objective.cost_scale},
                      {"hazard", config.objective.hazard},
                      {"exposure", config.objective.exposure}};

    json ga = {{"population_size", config.ga.population_size},
               {"generations", config.ga.generations},
               {"tournament_size", config.ga.tournament_size},
               {"crossover_rate", config.ga.crossover_rate},
               {"mutation_rate_per_bit",
                config.ga.mutation_rate_per_bit ? json(*config.ga.mutation_rate_per_bit) : json()},
               {"elitism_count", config.ga.elitism_count},
               {"seed", config.ga.seed}};

    json sa = {{"initial_temperature",
                config.sa.initial_temperature ? json(*config.sa.initial_temperature) : json()},
               {"cooling_ratio", config.sa.cooling_ratio},
               {"steps_per_temperature",
                config.sa.steps_per_temperature ? json(*config.sa.steps_per_temperature) : json()},
               {"min_temperature",
                config.sa.min_temperature ? json(*config.sa.min_temperature) : json()},
               {"max_evaluations", config.sa.max_evaluations},
               {"move", config.sa.move == SaMove::BitFlip ? "bitflip" : "gene"},
               {"seed", config.sa.seed}};

    const json output = {{"render", config.output.render},
                         {"trace_csv", config.output.trace_csv},
                         {"breakdown", config.output.breakdown}};

    const json doc = {
        {"grid", grid}, {"objective", objective}, {"ga", ga}, {"sa", sa}, {"output", output}};
    return doc.dump(2) + "\n";
}

std::string design_to_json(const CityDesign& design) {
    json rows = json::array();
    for (int r = 0; r < design.side(); ++r) {
        json row = json::array();
        for (int c = 0; c < design.side(); ++c) {
            json genes = json::array();
            for (Trait t : kTraits) genes.push_back(design.cell(r, c).level(t));
            row.push_back(std::move(genes));
        }
        rows.push_back(std::move(row));
    }
    const json doc = {{"n", design.side()}, {"cells", rows}};
    return doc.dump(2) + "\n";
}

CityDesign design_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("design: malformed JSON: ") + e.what());
    }
    expect_object(j, "design");
    reject_unknown_keys(j, {"n", "cells"}, "design");
    if (!j.contains("n") || !j.contains("cells")) fail("design", "needs fields n and cells");
    const int n = get_int(j.at("n"), "design.n");
    if (n < 1) fail("design.n", "grid side must be >= 1");
    const json& rows = j.at("cells");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
        fail("design.cells", "expected " + std::to_string(n) + " rows");
    CityDesign design(n);
    for (int r = 0; r < n; ++r) {
        const json& row = rows.at(r);
        const std::string row_path = "design.cells[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            fail(row_path, "expected " + std::to_string(n) + " cells");
        for (int c = 0; c < n; ++c) {
            const json& genes = row.at(c);
            const std::string cell_path = row_path + "[" + std::to_string(c) + "]";
            if (!genes.is_array() || genes.size() != kNumTraits)
                fail(cell_path, "expected 7 gene values");
            for (int t = 0; t < kNumTraits; ++t) {
                const std::string gene_path = cell_path + "[" + std::to_string(t) + "]";
                const int v = get_int(genes.at(t), gene_path);
                if (v < 0 || v > kGeneMax) fail(gene_path, "gene value out of range [0,3]");
                design.cell(r, c).set_level(static_cast<Trait>(t), v);
            }
        }
    }
    return design;
}

CityDesign load_design(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open design file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return design_from_json(buffer.str());
}

}  // namespace floodopt
