#pragma once

#include "polycore/intpoly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace search {

using polycore::IntPoly;

// Largest height among the factors of x^d - 1 in Z[x].  Every subset of
// {phi_n : n | d} is tried, so the cost is 2^(number of divisors).
struct Xd1Result {
    std::uint64_t d = 0;
    mpz_class height;
    std::vector<std::vector<std::uint64_t>> maximizers;  // phi indices, each ascending; sorted
    IntPoly factor;  // product for maximizers.front()
};

// Throws std::domain_error when d has more than `divisor_cap` divisors.
Xd1Result xd1_subset_search(std::uint64_t d, unsigned divisor_cap = 24, unsigned workers = 1);

IntPoly cyclotomic_product(const std::vector<std::uint64_t>& indices);

// Successive maxima of ht(phi_n) for n <= max_index, in increasing n.
struct HeightRecord {
    mpz_class height;
    std::uint64_t index = 0;
    friend bool operator==(const HeightRecord&, const HeightRecord&) = default;
};
std::vector<HeightRecord> cyclo_height_records(std::uint64_t max_index, unsigned workers = 1);

// ht(phi_n) without building the whole polynomial when machine integers
// suffice.
mpz_class cyclotomic_height(std::uint64_t n);

}  // namespace search
