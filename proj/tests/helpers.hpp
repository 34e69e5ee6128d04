#pragma once

#include <deque>
#include <stdexcept>

#include "floodopt/rng.hpp"

namespace floodopt::testing {

// Scripted uniform source: forces operators down specific paths. Throws if a
// test consumes more draws than it scripted.
struct ScriptedRng {
    std::deque<std::size_t> indices;
    std::deque<double> uniforms;

    std::size_t uniform_index(std::size_t n) {
        if (indices.empty()) throw std::logic_error("ScriptedRng: index script exhausted");
        const std::size_t v = indices.front();
        indices.pop_front();
        if (v >= n) throw std::logic_error("ScriptedRng: scripted index out of range");
        return v;
    }

    double uniform01() {
        if (uniforms.empty()) throw std::logic_error("ScriptedRng: uniform script exhausted");
        const double v = uniforms.front();
        uniforms.pop_front();
        return v;
    }
};

static_assert(UniformSource<ScriptedRng>);

}  // namespace floodopt::testing
