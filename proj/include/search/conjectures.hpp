#pragma once

#include "polycore/intpoly.hpp"

#include <gmpxx.h>

#include <cstddef>

namespace search {

using polycore::IntPoly;

// ht(f^k) against C(k, floor(k/2)) ht(f).  Zero polynomials and monomials
// are rejected with std::domain_error, as is k = 0.
struct PowerCheck {
    mpz_class lhs;
    mpz_class rhs;
    bool holds = false;
    bool equality = false;
};
PowerCheck conjecture_power_check(const IntPoly& f, unsigned k);

// max |f(e^{2 pi i theta})| by sampling then golden-section refinement
// around the best sample.  A measurement, nothing is certified.
// Requires samples >= 4 deg(f) (std::domain_error otherwise).
double max_modulus_estimate(const IntPoly& f, std::size_t samples);

}  // namespace search
