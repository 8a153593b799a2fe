#pragma once

#include "polycore/intpoly.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace search {

using polycore::IntPoly;

struct Height1Result {
    unsigned n = 0;
    // Lowest-degree monic p with coefficients in {-1, 0, 1}, p(0) != 0 and
    // (x+1)^n | p; empty when nothing exists up to the degree cap.
    std::optional<IntPoly> witness;
    std::size_t first_degree = 0;          // smallest degree tried (n)
    std::size_t exhausted_through = 0;     // every degree in [first_degree, this] had no witness
    bool exhausted_any = false;            // false when the witness sits at first_degree
    std::vector<std::uint64_t> nodes;      // search nodes per degree tried
};

// Depth-first search over coefficients, filling both ends towards the middle.
// The state is the vector of moments sum_k c_k (-1)^k t_k^j, j < n, with
// t_k = 2k - D; p is divisible by (x+1)^n exactly when all of them vanish.
// A branch is cut once some moment exceeds what the free positions can still
// cancel.  Degrees max_degree and below are the whole search space.
Height1Result height1_multiple_search(unsigned n, std::size_t max_degree);

}  // namespace search
