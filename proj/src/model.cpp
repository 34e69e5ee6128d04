#include "floodopt/model.hpp"

#include <cmath>
#include <string>

namespace floodopt {

namespace {

struct TraitInfo {
    Trait id;
    char letter;
    std::string_view name;
};

constexpr std::array<TraitInfo, kNumTraits> kTraitTable = {{
    {Trait::Urbanized, 'A', "Urbanized"},
    {Trait::Literacy, 'B', "Literacy"},
    {Trait::Mortality, 'C', "Mortality"},
    {Trait::Poverty, 'D', "Poverty"},
    {Trait::TvRadio, 'E', "TvRadio"},
    {Trait::NonStructural, 'F', "NonStructural"},
    {Trait::Structural, 'G', "Structural"},
}};

}  // namespace

std::string_view trait_name(Trait t) { return kTraitTable[static_cast<int>(t)].name; }

char trait_letter(Trait t) { return kTraitTable[static_cast<int>(t)].letter; }

std::optional<Trait> trait_from_name(std::string_view name) {
    for (const auto& info : kTraitTable)
        if (info.name == name) return info.id;
    return std::nullopt;
}

GeneValue::GeneValue(int v) : v_(static_cast<std::uint8_t>(v)) {
    if (v < 0 || v > kGeneMax)
        throw ValidationError("gene value out of range [0,3]: " + std::to_string(v));
}

BarangayGenome::BarangayGenome(std::span<const int> levels) {
    if (levels.size() != kNumTraits)
        throw ValidationError("genome needs exactly 7 gene values, got " +
                              std::to_string(levels.size()));
    for (int t = 0; t < kNumTraits; ++t) genes_[t] = GeneValue(levels[t]);
}

SiteGrid::SiteGrid(int n, std::vector<double> factors) : n_(n), factors_(std::move(factors)) {
    if (n < 1) throw ValidationError("grid side must be >= 1");
    if (factors_.size() != static_cast<std::size_t>(n) * n)
        throw ValidationError("site grid needs " + std::to_string(n * n) + " factors, got " +
                              std::to_string(factors_.size()));
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!(factors_[i] > 0.0) || !std::isfinite(factors_[i]))
            throw ValidationError("site factor at cell " + std::to_string(i) +
                                  " must be a positive finite number");
}

SiteGrid default_site_grid(int n) {
    if (n < 1) throw ValidationError("grid side must be >= 1");
    std::vector<double> factors(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const int d = std::abs(r + c - (n - 1));
            factors[r * n + c] = d == 0 ? 2.0 : (d == 1 ? 1.0 : 0.5);
        }
    }
    return SiteGrid(n, std::move(factors));
}

void VulnerabilityWeights::set(Trait t, double w) {
    if (!(w >= 0.0) || !std::isfinite(w))
        throw ValidationError(std::string("weight for ") + std::string(trait_name(t)) +
                              " must be a nonnegative finite number");
    w_[static_cast<int>(t)] = w;
}

std::string_view penalty_shape_name(PenaltyShape s) {
    switch (s) {
        case PenaltyShape::Linear: return "linear";
        case PenaltyShape::Quadratic: return "quadratic";
        case PenaltyShape::Exponential: return "exponential";
    }
    return "";
}

std::optional<PenaltyShape> penalty_shape_from_name(std::string_view name) {
    if (name == "linear") return PenaltyShape::Linear;
    if (name == "quadratic") return PenaltyShape::Quadratic;
    if (name == "exponential") return PenaltyShape::Exponential;
    return std::nullopt;
}

void ObjectiveConfig::validate() const {
    if (!(cost_scale > 0.0) || !std::isfinite(cost_scale))
        throw ValidationError("cost_scale must be a positive finite number");
    if (!(hazard >= 0.0) || !std::isfinite(hazard))
        throw ValidationError("hazard must be a nonnegative finite number");
    if (!(exposure >= 0.0) || !std::isfinite(exposure))
        throw ValidationError("exposure must be a nonnegative finite number");
}

CityDesign::CityDesign(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {
    if (n < 1) throw ValidationError("grid side must be >= 1");
}

CityDesign::CityDesign(int n, std::vector<BarangayGenome> cells)
    : n_(n), cells_(std::move(cells)) {
    if (n < 1) throw ValidationError("grid side must be >= 1");
    if (cells_.size() != static_cast<std::size_t>(n) * n)
        throw ValidationError("city needs " + std::to_string(n * n) + " cells, got " +
                              std::to_string(cells_.size()));
}

BitString encode_design(const CityDesign& city) {
    BitString bits;
    bits.reserve(design_bit_count(city.side()));
    for (const BarangayGenome& genome : city.cells()) {
        for (Trait t : kTraits) {
            const int v = genome.level(t);
            bits.push_back(static_cast<std::uint8_t>((v >> 1) & 1));
            bits.push_back(static_cast<std::uint8_t>(v & 1));
        }
    }
    return bits;
}

CityDesign decode_design(const BitString& bits, int n) {
    if (n < 1) throw ValidationError("grid side must be >= 1");
    const std::size_t expected = static_cast<std::size_t>(design_bit_count(n));
    if (bits.size() != expected)
        throw ValidationError("encoded design must be " + std::to_string(expected) +
                              " bits for n=" + std::to_string(n) + ", got " +
                              std::to_string(bits.size()));
    CityDesign city(n);
    std::size_t b = 0;
    for (int i = 0; i < city.cell_count(); ++i) {
        for (Trait t : kTraits) {
            const std::uint8_t hi = bits[b++];
            const std::uint8_t lo = bits[b++];
            if (hi > 1 || lo > 1) throw ValidationError("encoded design contains a non-bit value");
            city.cell(i).set_level(t, (hi << 1) | lo);
        }
    }
    return city;
}

BitLocation locate_bit(int bit_index, int n) {
    if (bit_index < 0 || bit_index >= design_bit_count(n))
        throw ValidationError("bit index out of range: " + std::to_string(bit_index));
    const int cell = bit_index / kBitsPerCell;
    const int within = bit_index % kBitsPerCell;
    return BitLocation{cell, static_cast<Trait>(within / kBitsPerGene), within % kBitsPerGene};
}

void flip_design_bit(CityDesign& city, int bit_index) {
    const BitLocation loc = locate_bit(bit_index, city.side());
    const int mask = loc.bit == 0 ? 2 : 1;
    BarangayGenome& genome = city.cell(loc.cell);
    genome.set_level(loc.trait, genome.level(loc.trait) ^ mask);
}

CityDesign random_design(std::uint64_t seed, int n) {
    Rng rng(seed);
    return random_design(rng, n);
}

}  // namespace floodopt
