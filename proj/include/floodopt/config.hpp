#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "floodopt/engine.hpp"
#include "floodopt/model.hpp"

namespace floodopt {

// Default outputs for runs started from this config; CLI flags add to these.
struct OutputOptions {
    bool render = false;     // print the result's trait grids
    bool trace_csv = false;  // write <out>.trace.csv next to the report
    bool breakdown = false;  // write <out>.breakdown.json next to the report

    bool operator==(const OutputOptions&) const = default;
};

// One run configuration file. Omitted fields take the documented defaults:
// n = 6 with the anti-diagonal site grid, the standard weights and shapes,
// cost_scale 3.26, and the engine defaults from GaParams/SaParams.
struct RunConfig {
    int n = 6;
    std::optional<std::vector<double>> site_factors{};  // row-major override, n*n entries
    ObjectiveConfig objective{};
    GaParams ga{};
    SaParams sa{};
    OutputOptions output{};

    SiteGrid make_grid() const;

    bool operator==(const RunConfig&) const = default;
};

// Parses and validates a JSON config document. Every failure is a
// ValidationError whose message names the offending field path.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);

// Canonical full-form serialization; parse(config_to_json(c)) == c.
std::string config_to_json(const RunConfig& config);

// Design files: {"n": N, "cells": N x N array of 7-integer arrays in A..G
// order}. Gene values are bit-exact integers.
std::string design_to_json(const CityDesign& design);
CityDesign design_from_json(const std::string& json_text);
CityDesign load_design(const std::filesystem::path& path);

}  // namespace floodopt
