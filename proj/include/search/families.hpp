#pragma once

#include "search/case.hpp"

#include <gmpxx.h>

#include <vector>

namespace search {

// prod (x^e - 1) over the exponents.
struct XekFamily {
    std::vector<unsigned> exponents;
    IntPoly product;
    mpz_class height;
    IntPoly cofactor;  // product / (x-1)^n, i.e. prod (x^e - 1)/(x - 1)
    mpz_class cofactor_height;
    mpq_class cofactor_lower_bound;  // prod e / (1 + sum (e - 1))
    // Square-free decomposition product = prod_k parts[k-1]^k, read off from
    // how many exponents each cyclotomic index divides.
    std::vector<IntPoly> square_free_parts;
    mpz_class square_free_max_height;
    bool tall_square_free_part = false;  // some part is taller than the product
};
XekFamily product_family_xek(const std::vector<unsigned>& exponents);

// g1 = n x^2 - (2n-1) x + n and g2 = (1 + ... + x^(n+1)) (1 + ... + x^(n+2)).
// The cases are g1*g2, g1*(g2 x + 1) and g1*(g2 x^3 + x^2 + x + 1), in that
// order.  Throws std::logic_error if a product height differs from n+1 or
// ht(g2) from n+2.
struct QuadraticFamily {
    unsigned n = 0;
    IntPoly g1, g2;
    std::vector<FactorizationCase> cases;
};
QuadraticFamily family_n_quadratic(unsigned n);

// (1 - x^6)^k = f^k(x) f^k(-x) with f = x^3 + 2x^2 + 2x + 1.  Throws
// std::logic_error if the ratio is not above 3^k/(3k+1) or ht(f^k) is below
// 6^k/(3k+1).
struct PowerFamily {
    unsigned k = 0;
    FactorizationCase fcase;
    Ratio ratio;
    mpq_class ratio_lower_bound;
    mpq_class factor_lower_bound;
};
PowerFamily family_power_symmetric(unsigned k);

// Adds g(x^k) for every factor g; the product becomes f(x) f(x^k).  The
// height condition ht(f(x) f(x^k)) == ht(f)^2 is enforced (std::domain_error
// otherwise).  Irreducibility of the new factors is only weakly checked and
// the result is tagged that way; `weak` is empty when the check is skipped.
struct Inflation {
    FactorizationCase fcase;
    std::vector<WeakIrreducibility> weak;  // one per new factor
};
Inflation inflate_construction(const FactorizationCase& c, unsigned k, bool check_weak = true);

}  // namespace search
