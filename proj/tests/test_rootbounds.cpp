#include "polycore/textio.hpp"
#include "rootbounds/rootbounds.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace rootbounds;
using polycore::parse;

namespace {

const IntPoly f351 = parse("[1,8,47,136,285,171,-20,-21,2]");
const IntPoly f352 = parse("[2,-16,26,-10,-41,89,-87,52,-10]");

double d(const UpperReal& u) { return u.to_double(); }

}  // namespace

TEST_CASE("Knuth bound") {
    CHECK(d(knuth_bound(parse("x^2-2"))) == doctest::Approx(2 * std::sqrt(2.0)));
    CHECK(d(knuth_bound(parse("x^2-2"))) >= 2 * std::sqrt(2.0));
    CHECK(d(knuth_bound(parse("(x-3)(x-1)"))) >= 3);
    CHECK(d(knuth_bound(parse("x^5-7"))) == doctest::Approx(2 * std::pow(7.0, 0.2)));
    CHECK_THROWS_AS(knuth_bound(parse("5")), std::domain_error);
}

TEST_CASE("Zassenhaus bound") {
    // max_i (|a_{d-i}| / C(d,i))^(1/i) = 1 at i = 2, over sqrt(2) - 1
    CHECK(d(zassenhaus_bound(parse("x^2-2"))) == doctest::Approx(1 / (std::sqrt(2.0) - 1) * std::sqrt(2.0)));
    const IntPoly f = parse("(x-4)(x+3)(x-1)(x+2)");
    CHECK(d(zassenhaus_bound(f)) >= 4);
    CHECK(zassenhaus_bound(f * mpz_class(-7)) == zassenhaus_bound(f));
}

TEST_CASE("Cauchy bound") {
    auto c = cauchy_bound(parse("x^2-2"));
    CHECK(d(c.rho) >= std::sqrt(2.0));
    CHECK(d(c.rho) <= 1.5);
    CHECK(d(cauchy_bound(parse("x^2-4x+4")).rho) == doctest::Approx(2 + 2 * std::sqrt(2.0)));
    CHECK(d(cauchy_bound(parse("x^2-4x+4")).rho) >= 2 + 2 * std::sqrt(2.0));
    CHECK(cauchy_bound(parse("3x^4")).rho.is_zero());
    CHECK(c.method == RootMethod::cauchy_newton);
}

TEST_CASE("Graeffe transform") {
    CHECK(graeffe(parse("x^2-2")) == parse("x^2-4x+4"));
    CHECK(graeffe(parse("x-5")) == parse("x-25"));
    CHECK(graeffe(parse("x+5")) == parse("x-25"));
    CHECK(graeffe(parse("(x-2)(x-3)(x+1)")) == parse("(x-4)(x-9)(x-1)"));
}

TEST_CASE("refined root bound") {
    auto r = refined_root_bound(parse("x^2-2"));
    CHECK(d(r.rho) >= std::sqrt(2.0));
    CHECK(d(r.rho) <= 1.5);
    const double rho1 = d(refined_root_bound(f351).rho);
    CHECK(rho1 >= 3.84 * 0.999);
    CHECK(rho1 <= 4.3);
    CHECK(d(refined_root_bound(f352).rho) == doctest::Approx(6.1).epsilon(0.1));
    CHECK(d(refined_root_bound(polycore::reverse(f352)).rho) == doctest::Approx(3.2).epsilon(0.1));
    CHECK_THROWS_AS(refined_root_bound(parse("3")), std::domain_error);
}

TEST_CASE("explicit depths and the ball switch") {
    const IntPoly f = parse("(x-3)^4 (x+2)^3 (x-1)");
    for (unsigned s = 0; s <= 6; ++s) {
        Options o;
        o.depth = s;
        CHECK(d(refined_root_bound(f, o).rho) >= 3);
        o.cap_bits = 16;  // force the ball representation almost immediately
        CHECK(d(refined_root_bound(f, o).rho) >= 3);
        CHECK(mahler_upper(f, o).upper.at_least(mpz_class(81 * 8)));
    }
    CHECK(mahler_auto_depth(8) == 3);
    CHECK(mahler_auto_depth(100) == 7);
    CHECK(root_auto_depth(100) == 8);
}

TEST_CASE("Mahler measure estimates") {
    // M = 1 for these.  The depth-t estimate carries a factor |f_t|_2^(2^-t),
    // so it only gets close to 1 once 2^t is large against the degree.
    Options deep;
    deep.depth = 12;
    for (unsigned k : {1u, 4u, 12u, 30u}) {
        const IntPoly f = polycore::pow(parse("x+1"), k);
        const double at_auto = d(mahler_upper(f).upper);
        CHECK(at_auto >= 1.0);
        CHECK(at_auto <= d(polycore::l2_norm(f)));
        CHECK(d(mahler_upper(f, deep).upper) <= 1.01);
        CHECK(d(mahler_upper(f, deep).upper) <= at_auto);
    }
    for (std::size_t n : {2u, 7u, 40u}) {
        const IntPoly f = polycore::IntPoly::x_pow_minus_one(n);
        CHECK(d(mahler_upper(f).upper) <= std::sqrt(2.0) * (1 + 1e-9));
        CHECK(d(mahler_upper(f).upper) >= 1.0);
        CHECK(d(mahler_upper(f, deep).upper) <= 1.01);
    }
    auto m = mahler_upper(f351);
    CHECK(d(m.upper) <= 1.15 * 197);
    CHECK(d(m.upper) >= 2);  // |lc| * |tc| is a lower bound for M here
    CHECK(d(m.upper) <= d(polycore::l2_norm(f351)));
    // M((x-5)(2x-1)(x+3)) = 2 * 5 * 3
    CHECK(mahler_upper(parse("(x-5)(2x-1)(x+3)")).upper.at_least(30));
    CHECK_THROWS_AS(mahler_upper(polycore::IntPoly()), std::domain_error);
}
