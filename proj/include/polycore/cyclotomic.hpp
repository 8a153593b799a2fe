#pragma once

#include "polycore/intpoly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace polycore {

// n-th cyclotomic polynomial.  Results are memoized in a process-wide table
// guarded by a mutex; the returned reference stays valid for the lifetime of
// the program.
const IntPoly& cyclotomic(std::uint64_t n);

// Small number theory helpers shared by the cyclotomic code and the searches.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);  // ascending
int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

}  // namespace polycore
