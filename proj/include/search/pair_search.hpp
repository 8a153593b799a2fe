#pragma once

#include "search/case.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace search {

enum class Symmetry { none, palindromic, star_symmetric, palindromic_star_symmetric };
enum class Objective { max_ratio, max_factor_height };

std::string to_string(Symmetry s);
Symmetry symmetry_from_string(const std::string& s);  // none|palindromic|star|both
std::string to_string(Objective o);

struct SearchConfig {
    std::size_t degree = 0;  // degree of the product
    // Factor degree splits (a, b) with a <= b and a + b == degree; every split
    // when empty.
    std::vector<std::pair<std::size_t, std::size_t>> splits;
    long height_cap = 1;  // bound on every factor coefficient
    Symmetry symmetry = Symmetry::none;
    Objective objective = Objective::max_ratio;
    bool require_weak_irreducible = false;
    long product_height = 1;  // the fixed product height of max_factor_height
    unsigned workers = 1;
};

struct SearchResult {
    mpq_class best;  // ratio, or the factor height for max_factor_height
    std::vector<FactorizationCase> maximizers;  // canonical, sorted
    std::uint64_t candidates = 0;  // first factors examined
    std::uint64_t leaves = 0;      // complete pairs examined
};

// Exhaustive two-factor search.  Each orbit under x -> -x, reversal and
// global sign is represented once, by its lexicographically least member.
SearchResult pair_search(const SearchConfig& config);

// Canonical representative of the pair under the symmetries above (and the
// swap of equal-degree factors); factors are sign-normalized.
std::pair<IntPoly, IntPoly> canonical_pair(const IntPoly& g1, const IntPoly& g2);

// Flat double loop over all pairs with coefficients in [-cap, cap], nonzero
// trailing coefficients and positive leading coefficients.  Only meant as an
// independent check on small spaces; same output shape as pair_search.
// Symmetry restrictions and irreducibility filters are not supported.
SearchResult naive_pair_search(std::size_t degree, long cap, Objective objective = Objective::max_ratio,
                               long product_height = 1);

}  // namespace search
