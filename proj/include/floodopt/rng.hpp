#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>

namespace floodopt {

// Anything that can hand out uniform draws. The search operators are
// templated on this so tests can inject scripted sources.
template <class R>
concept UniformSource = requires(R r, std::size_t n) {
    { r.uniform01() } -> std::convertible_to<double>;
    { r.uniform_index(n) } -> std::convertible_to<std::size_t>;
};

// The repository RNG: std::mt19937_64 (output pinned by the standard) with
// fixed mappings to floats and index ranges, so one seed gives one sequence.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // 53-bit draw in [0, 1)
    double uniform01() { return static_cast<double>(engine_() >> 11) * kInv53; }

    // draw in [0, n); modulo bias is ~n/2^64, irrelevant at the n used here
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(engine_() % static_cast<std::uint64_t>(n));
    }

private:
    static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
    std::mt19937_64 engine_;
};

static_assert(UniformSource<Rng>);

}  // namespace floodopt
