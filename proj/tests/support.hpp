#pragma once

#include "polycore/intpoly.hpp"

#include <random>
#include <string>

namespace testing_support {

using polycore::IntPoly;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20260314);
    return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline long nonzero(long h) {
    long v = 0;
    while (v == 0) v = uniform(-h, h);
    return v;
}

// Degree exactly deg, |coefficients| <= h, nonzero leading and trailing
// coefficients.
inline IntPoly random_poly(std::size_t deg, long h) {
    std::vector<long long> c(deg + 1);
    for (auto& v : c) v = uniform(-h, h);
    c.front() = nonzero(h);
    c.back() = nonzero(h);
    return IntPoly::from_ascending(c);
}

inline std::string fixture_dir() { return FIXTURE_DIR; }

}  // namespace testing_support
