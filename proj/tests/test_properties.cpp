// Randomized checks against independent oracles.
#include "bounds/bounds.hpp"
#include "polycore/textio.hpp"
#include "rootbounds/rootbounds.hpp"
#include "search/pair_search.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>

using polycore::IntPoly;
using testing_support::random_poly;
using testing_support::uniform;

namespace {

struct KnownRoots {
    IntPoly f;
    mpz_class max_root;  // largest root modulus
    mpz_class mahler;    // exact Mahler measure
};

KnownRoots known_roots(std::size_t d, long range) {
    KnownRoots k;
    const long lc = testing_support::nonzero(5);
    k.f = IntPoly::constant(lc);
    k.max_root = 0;
    k.mahler = std::abs(lc);
    for (std::size_t i = 0; i < d; ++i) {
        const long r = uniform(-range, range);
        k.f = k.f * IntPoly::x_minus(r);
        k.max_root = std::max(k.max_root, mpz_class(std::abs(r)));
        k.mahler *= std::max(1L, std::abs(r));
    }
    return k;
}

}  // namespace

TEST_CASE("combined vectors dominate every true factor") {
    for (int t = 0; t < 1000; ++t) {
        const IntPoly g = random_poly(uniform(1, 5), 30);
        const IntPoly h = random_poly(uniform(1, 5), 30);
        const IntPoly f = g * h;
        const auto r = bounds::combined_report(f, g.deg());
        for (std::size_t i = 0; i <= g.deg(); ++i) REQUIRE(r.combined.entries[i] >= abs(g.coeff(i)));
        REQUIRE(r.combined.overall >= polycore::height(g));
    }
}

TEST_CASE("Graeffe squares the roots") {
    for (int t = 0; t < 500; ++t) {
        const IntPoly f = random_poly(uniform(1, 15), 50);
        // G(x^2) = (-1)^d f(x) f(-x)
        IntPoly want = f * polycore::negate_x(f);
        if (f.deg() % 2) want = -want;
        REQUIRE(polycore::substitute_power(rootbounds::graeffe(f), 2) == want);
    }
}

TEST_CASE("root bounds on polynomials with known roots") {
    for (int t = 0; t < 500; ++t) {
        const auto k = known_roots(uniform(1, 8), 20);
        const double d = static_cast<double>(k.f.deg());
        const auto kn = rootbounds::knuth_bound(k.f);
        REQUIRE(kn.at_least(k.max_root));
        REQUIRE(kn.to_double() <= 2 * d * k.max_root.get_d() * (1 + 1e-9) + 1e-9);
        REQUIRE(rootbounds::zassenhaus_bound(k.f).at_least(k.max_root));
        REQUIRE(rootbounds::cauchy_bound(k.f).rho.at_least(k.max_root));
        const auto refined = rootbounds::refined_root_bound(k.f).rho;
        REQUIRE(refined.at_least(k.max_root));
        REQUIRE(refined.to_double() <= kn.to_double() * (1 + 1e-9));
    }
}

TEST_CASE("Mahler estimates bracket the exact measure") {
    for (int t = 0; t < 300; ++t) {
        const auto k = known_roots(uniform(1, 8), 9);
        const auto m = rootbounds::mahler_upper(k.f).upper;
        REQUIRE(m.at_least(k.mahler));
        REQUIRE(m.to_double() <= polycore::l2_norm(k.f).to_double() * (1 + 0x1p-30));
    }
}

TEST_CASE("the l2-minimal cofactor is a local minimum") {
    for (int t = 0; t < 100; ++t) {
        const IntPoly f = random_poly(uniform(1, 6), 20);
        const std::size_t dhat = uniform(1, 5);
        const auto m = bounds::min_l2_multiple(f, dhat);
        REQUIRE(m.cofactor.size() == dhat + 1);
        for (std::size_t i = 0; i < dhat; ++i) {
            const mpq_class eps = mpq_class(1, 1000000) * (abs(m.cofactor[i]) + 1);
            for (int s : {-1, 1}) {
                auto h = m.cofactor;
                h[i] += s * eps;
                REQUIRE(bounds::l2_squared_of_product(f, h) > m.l2_squared);
            }
        }
        // a random direction as well
        auto h = m.cofactor;
        for (std::size_t i = 0; i < dhat; ++i) h[i] += mpq_class(uniform(-3, 3), 1000000);
        REQUIRE(bounds::l2_squared_of_product(f, h) >= m.l2_squared);
    }
}

TEST_CASE("pair search matches brute force on small spaces") {
    for (std::size_t d = 2; d <= 6; ++d) {
        for (long cap = 1; cap <= 3; ++cap) {
            search::SearchConfig c;
            c.degree = d;
            c.height_cap = cap;
            c.objective = search::Objective::max_factor_height;
            c.product_height = uniform(1, 2);
            const auto fast = search::pair_search(c);
            const auto slow = search::naive_pair_search(d, cap, c.objective, c.product_height);
            INFO("d = " << d << " cap = " << cap);
            REQUIRE(fast.best == slow.best);
            REQUIRE(fast.maximizers.size() == slow.maximizers.size());
        }
    }
}
