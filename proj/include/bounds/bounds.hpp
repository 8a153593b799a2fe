#pragma once

#include "polycore/intpoly.hpp"
#include "polycore/upper_real.hpp"
#include "rootbounds/rootbounds.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bounds {

using polycore::IntPoly;
using polycore::UpperReal;

enum class Method { binomial, mignotte, knuth_cohen, beauzamy, combined };
std::string to_string(Method m);
Method method_from_string(const std::string& s);  // throws std::invalid_argument

// entries[i] bounds |b_i| (coefficient of x^i) of a factor of degree delta.
struct BoundVector {
    std::size_t delta = 0;
    std::vector<mpz_class> entries;
    mpz_class overall;
    Method method = Method::combined;
};

BoundVector make_vector(std::size_t delta, std::vector<mpz_class> entries, Method m);

// Everything the degree-aware formulas read from f.  Computed once per
// polynomial and shared by the four methods.
struct Inputs {
    std::size_t degree = 0;
    mpz_class lc, tc;  // absolute values
    UpperReal rho, rho_bar;
    UpperReal mahler;  // min of the estimates for f and reverse(f)
    UpperReal l2;
    UpperReal bombieri;
};

Inputs compute_inputs(const IntPoly& f, const rootbounds::Options& opt = {});

BoundVector binomial_vector(const Inputs& in, std::size_t delta);
BoundVector mignotte_vector(const Inputs& in, std::size_t delta);
BoundVector knuth_cohen_vector(const Inputs& in, std::size_t delta);
BoundVector beauzamy_vector(const Inputs& in, std::size_t delta);

BoundVector binomial_vector(const IntPoly& f, std::size_t delta);
BoundVector mignotte_vector(const IntPoly& f, std::size_t delta);
BoundVector knuth_cohen_vector(const IntPoly& f, std::size_t delta);
BoundVector beauzamy_vector(const IntPoly& f, std::size_t delta);

// Coefficients of lc_abs * prod_{j<delta} (x + rhos[j]), floored.  rhos must
// be sorted in descending order.
BoundVector binomial_vector_refined(const std::vector<UpperReal>& rhos, const mpz_class& lc_abs,
                                    std::size_t delta);

struct BoundReport {
    Inputs inputs;
    std::vector<BoundVector> methods;  // in the order requested
    BoundVector combined;
};

const std::vector<Method>& default_methods();  // binomial, mignotte, knuth_cohen, beauzamy

BoundReport combined_report(const IntPoly& f, std::size_t delta,
                            const std::vector<Method>& methods = default_methods(),
                            const rootbounds::Options& opt = {});
BoundReport combined_report(const Inputs& in, std::size_t delta,
                            const std::vector<Method>& methods = default_methods());

enum class SfMethod { mignotte_l1_sqrt, mignotte_refined, btw, degree_aware_at_half };
std::string to_string(SfMethod m);

struct SingleFactorBound {
    mpz_class value;
    SfMethod method = SfMethod::mignotte_refined;
    std::map<std::string, std::string> audit;  // inputs used, as decimal strings
};

SingleFactorBound sf_mignotte(const IntPoly& f);
SingleFactorBound sf_mignotte_refined(const IntPoly& f);
SingleFactorBound sf_btw(const IntPoly& f);

// Smallest of the three single-factor bounds and the degree-aware combined
// bound.  The admissible set is closed under e -> d - e; the degree-aware
// candidate is the largest combined overall over admissible e <= d/2.
// Without degree information every e in 1..d/2 is admissible.
struct SfBest {
    SingleFactorBound best;
    std::vector<SingleFactorBound> candidates;
};
SfBest sf_best(const IntPoly& f, const std::optional<std::set<std::size_t>>& degree_info = std::nullopt);

// Monic h of degree dhat over Q minimizing |f h|_2.
struct MinMultiple {
    std::vector<mpq_class> cofactor;  // ascending, cofactor.back() == 1
    mpq_class l2_squared;            // exact |f h|_2^2
    UpperReal l2;
};
MinMultiple min_l2_multiple(const IntPoly& f, std::size_t dhat);
// |f h|_2^2 for an arbitrary rational cofactor (used by the optimality check).
mpq_class l2_squared_of_product(const IntPoly& f, const std::vector<mpq_class>& h);

}  // namespace bounds
