#pragma once

#include "polycore/intpoly.hpp"

#include <set>
#include <string>
#include <vector>

namespace search {

using polycore::IntPoly;
using polycore::Ratio;

enum class Tag { palindromic, star_symmetric, irreducible_claimed, weakly_checked };
std::string to_string(Tag t);
Tag tag_from_string(const std::string& s);

struct FactorizationCase {
    IntPoly product;
    std::vector<IntPoly> factors;
    std::set<Tag> tags;
    std::string source;
};

// Product computed from the factors.  Throws std::domain_error on an empty
// list or a constant factor.
FactorizationCase make_case(std::vector<IntPoly> factors, std::string source = {}, std::set<Tag> tags = {});

IntPoly product_of(const std::vector<IntPoly>& factors);

// min factor height / product height
Ratio ratio(const FactorizationCase& c);

// Rational root test plus trial division by cyclotomic polynomials of index
// up to `cyclotomic_limit`.  Passing means no factor was found, nothing more.
struct WeakIrreducibility {
    bool passed = true;
    std::string reason;           // empty when passed, otherwise the factor found
    bool rational_test_complete = true;  // false if |lc| or |tc| could not be fully factored
};
WeakIrreducibility weak_irreducibility(const IntPoly& f, unsigned cyclotomic_limit = 105);

struct CaseReport {
    bool product_ok = false;
    std::vector<mpz_class> factor_heights;
    mpz_class product_height;
    Ratio ratio;
    std::vector<WeakIrreducibility> weak;
};

// Recomputes the product, heights and ratio.  Weak irreducibility is only
// evaluated when `check_irreducibility` is set.
CaseReport verify_case(const FactorizationCase& c, bool check_irreducibility = true);

}  // namespace search
