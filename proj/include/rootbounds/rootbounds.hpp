#pragma once

#include "polycore/intpoly.hpp"
#include "polycore/upper_real.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace rootbounds {

using polycore::IntPoly;
using polycore::UpperReal;

enum class RootMethod { knuth, zassenhaus, cauchy_newton, graeffe };
std::string to_string(RootMethod m);

struct RootBoundResult {
    UpperReal rho;
    RootMethod method = RootMethod::knuth;
    unsigned graeffe_depth = 0;
    unsigned newton_iters = 0;
};

struct MahlerEstimate {
    UpperReal upper;
    unsigned graeffe_depth = 0;  // depth that produced the minimum
};

struct Options {
    std::optional<unsigned> depth;  // deepest Graeffe iterate; automatic when empty
    std::size_t cap_bits = 8192;    // exact iterates above this switch to balls
    long precision = 128;           // MPFR precision of the balls
};

// K(f) = 2 max_i (|a_{d-i}| / |a_d|)^(1/i)
UpperReal knuth_bound(const IntPoly& f);
// Z(f) = max_i (|a_{d-i}| / (|a_d| C(d,i)))^(1/i) / (2^(1/d) - 1)
UpperReal zassenhaus_bound(const IntPoly& f);
// Positive root of |a_d| x^d - sum |a_i| x^i, approached by Newton from
// above; zero for a monomial.
RootBoundResult cauchy_bound(const IntPoly& f);

// One exact Graeffe step: g(x^2) = (-1)^d f(x) f(-x).
IntPoly graeffe(const IntPoly& f);

// Default depths: max(3, ceil(log2 d)) for the Mahler estimate, one more
// for the root bound.
unsigned mahler_auto_depth(std::size_t d);
unsigned root_auto_depth(std::size_t d);

// Minimum over depths 0..s of the depth-t bound taken to the power 2^-t.
// Cauchy is used at every depth for d <= 64, min(K, Z) above that.
RootBoundResult refined_root_bound(const IntPoly& f, const Options& opt = {});

// Minimum over depths 0..s of |f_t|_2^(2^-t); never below M(f).
MahlerEstimate mahler_upper(const IntPoly& f, const Options& opt = {});

}  // namespace rootbounds
