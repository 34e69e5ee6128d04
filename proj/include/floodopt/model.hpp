#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "floodopt/error.hpp"
#include "floodopt/rng.hpp"

namespace floodopt {

inline constexpr int kNumTraits = 7;
inline constexpr int kGeneMax = 3;
inline constexpr int kBitsPerGene = 2;
inline constexpr int kBitsPerCell = kNumTraits * kBitsPerGene;

// The seven per-cell vulnerability traits, in the canonical A..G order used
// by every encoding and file format in this project.
enum class Trait : int {
    Urbanized = 0,      // A
    Literacy = 1,       // B
    Mortality = 2,      // C
    Poverty = 3,        // D
    TvRadio = 4,        // E
    NonStructural = 5,  // F
    Structural = 6,     // G
};

inline constexpr std::array<Trait, kNumTraits> kTraits = {
    Trait::Urbanized, Trait::Literacy,      Trait::Mortality, Trait::Poverty,
    Trait::TvRadio,   Trait::NonStructural, Trait::Structural,
};

std::string_view trait_name(Trait t);
char trait_letter(Trait t);  // 'A'..'G'
std::optional<Trait> trait_from_name(std::string_view name);

// A trait level in {0..3} ("00".."11"). Construction rejects anything else.
class GeneValue {
public:
    constexpr GeneValue() = default;
    explicit GeneValue(int v);

    constexpr int value() const { return v_; }
    auto operator<=>(const GeneValue&) const = default;

private:
    std::uint8_t v_ = 0;
};

// One grid cell's seven trait levels. Comparison is lexicographic in A..G
// order, which is also the oracle's tie-break order.
class BarangayGenome {
public:
    BarangayGenome() = default;  // all traits at level 0
    explicit BarangayGenome(std::span<const int> levels);  // 7 values, A..G

    GeneValue gene(Trait t) const { return genes_[static_cast<int>(t)]; }
    int level(Trait t) const { return genes_[static_cast<int>(t)].value(); }
    void set_gene(Trait t, GeneValue v) { genes_[static_cast<int>(t)] = v; }
    void set_level(Trait t, int v) { genes_[static_cast<int>(t)] = GeneValue(v); }

    auto operator<=>(const BarangayGenome&) const = default;

private:
    std::array<GeneValue, kNumTraits> genes_{};
};

// Per-cell site factors: positive vulnerability multipliers encoding the
// geography (river diagonal doubles vulnerability, high ground halves it).
class SiteGrid {
public:
    SiteGrid(int n, std::vector<double> factors);  // row-major, n*n entries

    int side() const { return n_; }
    int cell_count() const { return n_ * n_; }
    double factor(int row, int col) const { return factors_[row * n_ + col]; }
    double factor(int cell) const { return factors_[cell]; }
    std::span<const double> factors() const { return factors_; }

    bool operator==(const SiteGrid&) const = default;

private:
    int n_;
    std::vector<double> factors_;
};

// Default geography: cell (r, c) is scored by its distance
// d = |r + c - (n-1)| from the anti-diagonal river; d=0 -> 2.0 (floodplain),
// d=1 -> 1.0 (slope), anything farther -> 0.5 (highland).
SiteGrid default_site_grid(int n);

// Per-trait vulnerability weights, all nonnegative. Defaults to 1 everywhere
// except Poverty, which counts double.
class VulnerabilityWeights {
public:
    VulnerabilityWeights() = default;
    double of(Trait t) const { return w_[static_cast<int>(t)]; }
    void set(Trait t, double w);  // rejects negative or non-finite weights

    bool operator==(const VulnerabilityWeights&) const = default;

private:
    std::array<double, kNumTraits> w_ = {1, 1, 1, 2, 1, 1, 1};
};

// How expensive it is to push a trait's remediation gap u = 3 - gene:
// Linear -> u, Quadratic -> u^2, Exponential -> e^u.
enum class PenaltyShape { Linear, Quadratic, Exponential };

using PenaltyShapes = std::array<PenaltyShape, kNumTraits>;

// Exponential for the expensive interventions (urbanization, poverty
// alleviation, structural works), quadratic for health, linear otherwise.
constexpr PenaltyShapes default_penalty_shapes() {
    return {PenaltyShape::Exponential, PenaltyShape::Linear,      PenaltyShape::Quadratic,
            PenaltyShape::Exponential, PenaltyShape::Linear,      PenaltyShape::Linear,
            PenaltyShape::Exponential};
}

std::string_view penalty_shape_name(PenaltyShape s);
std::optional<PenaltyShape> penalty_shape_from_name(std::string_view name);

// Everything the objective needs besides the design and the site grid.
struct ObjectiveConfig {
    VulnerabilityWeights weights{};
    PenaltyShapes shapes = default_penalty_shapes();
    double cost_scale = 3.26;  // lambda, multiplies the penalty sum
    double hazard = 1.0;
    double exposure = 1.0;

    void validate() const;  // cost_scale > 0, hazard >= 0, exposure >= 0

    bool operator==(const ObjectiveConfig&) const = default;
};

// The optimization variable: an n x n arrangement of genomes, row-major.
class CityDesign {
public:
    CityDesign() = default;  // empty sentinel, side 0
    explicit CityDesign(int n);
    CityDesign(int n, std::vector<BarangayGenome> cells);

    int side() const { return n_; }
    int cell_count() const { return n_ * n_; }
    const BarangayGenome& cell(int row, int col) const { return cells_[row * n_ + col]; }
    BarangayGenome& cell(int row, int col) { return cells_[row * n_ + col]; }
    const BarangayGenome& cell(int idx) const { return cells_[idx]; }
    BarangayGenome& cell(int idx) { return cells_[idx]; }
    std::span<const BarangayGenome> cells() const { return cells_; }

    bool operator==(const CityDesign&) const = default;

private:
    int n_ = 0;
    std::vector<BarangayGenome> cells_;
};

using BitString = std::vector<std::uint8_t>;  // values 0/1

inline constexpr int design_bit_count(int n) { return n * n * kBitsPerCell; }

// Cells row-major, traits A..G, each gene as 2 bits most-significant-first.
BitString encode_design(const CityDesign& city);
CityDesign decode_design(const BitString& bits, int n);

// Where bit `bit_index` of the encoding lives.
struct BitLocation {
    int cell;
    Trait trait;
    int bit;  // 0 = MSB (worth 2), 1 = LSB (worth 1)
};
BitLocation locate_bit(int bit_index, int n);

// Flips one bit of the encoding in place, without a full encode/decode pass.
void flip_design_bit(CityDesign& city, int bit_index);

// Every gene drawn independently and uniformly from {0..3}; cells row-major,
// traits A..G, one uniform_index(4) draw per gene.
template <UniformSource R>
CityDesign random_design(R& rng, int n) {
    if (n < 1) throw ValidationError("grid side must be >= 1");
    CityDesign city(n);
    for (int i = 0; i < city.cell_count(); ++i)
        for (Trait t : kTraits)
            city.cell(i).set_level(t, static_cast<int>(rng.uniform_index(4)));
    return city;
}

CityDesign random_design(std::uint64_t seed, int n);

}  // namespace floodopt
