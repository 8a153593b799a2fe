#include "polycore/cyclotomic.hpp"
#include "polycore/intpoly.hpp"
#include "polycore/textio.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace polycore;
using testing_support::random_poly;

namespace {

IntPoly P(const char* s) { return parse(s); }

}  // namespace

TEST_CASE("parse reads both syntaxes") {
    CHECK(P("x^2+5x+9").coeffs() == std::vector<mpz_class>{9, 5, 1});
    CHECK(P("[1,2,1,1]") == IntPoly::from_ascending({1, 1, 2, 1}));
    CHECK(P("0").is_zero());
    CHECK(P("[0, 0]").is_zero());
    CHECK(P("(x+1)^3 (x-2)") == pow(IntPoly::x_minus(-1), 3) * IntPoly::x_minus(2));
    CHECK(P("2*x^2 - x") == IntPoly::from_ascending({0, -1, 2}));
    CHECK(P("-x") == IntPoly::from_ascending({0, -1}));
    CHECK(P("123456789012345678901234567890").lc() == mpz_class("123456789012345678901234567890"));
}

TEST_CASE("bracketed lists are read from the top degree down") {
    // (x-1)(x^3+2x^2+x+1) is the degree 4 companion row [1,1,-1,0,-1]
    CHECK(IntPoly::x_minus(1) * P("[1,2,1,1]") == P("[1,1,-1,0,-1]"));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("   "), ParseError);
    CHECK_THROWS_AS(P("[1,2"), ParseError);
    CHECK_THROWS_AS(P("x^"), ParseError);
    CHECK_THROWS_AS(P("(x+1"), ParseError);
    try {
        P("x + $");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("ring arithmetic") {
    CHECK(IntPoly::x_minus(-1) * IntPoly::x_minus(1) == P("x^2-1"));
    const IntPoly f = P("[1,3,4,3,1]") * P("[1,-3,4,-3,1]");
    CHECK(f.deg() == 8);
    CHECK(height(f) == 1);
    CHECK(P("2x^4+5x^3+7x^2+6x+3") * P("3x^4+6x^3+7x^2+5x+2") ==
          P("6x^8+27x^7+65x^6+105x^5+123x^4+105x^3+65x^2+27x+6"));
    CHECK((P("x^3+x") - P("x^3+x")).is_zero());
    CHECK((P("x^2+1") + P("-x^2")).deg() == 0);
    CHECK(pow(P("x+1"), 0) == IntPoly::constant(1));
}

TEST_CASE("exact division") {
    CHECK(exact_divide(P("x^2-1"), P("x-1")) == P("x+1"));
    CHECK(exact_divide(P("x^4+x^3-x^2-1"), P("x-1")) == P("x^3+2x^2+x+1"));
    CHECK_FALSE(exact_divide(P("x^2+1"), P("x+1")).has_value());
    CHECK_FALSE(exact_divide(P("x^2+1"), P("2x")).has_value());
    CHECK(exact_divide(P("0"), P("x+3")) == IntPoly());
    CHECK_THROWS_AS(exact_divide(P("x"), IntPoly()), std::domain_error);
}

TEST_CASE("degree of zero is a sentinel") {
    IntPoly z;
    CHECK(z.degree().is_minus_infinity());
    CHECK(z.degree() < IntPoly::constant(1).degree());
    CHECK_THROWS_AS(z.deg(), std::domain_error);
}

TEST_CASE("reversal, star and substitution") {
    CHECK(reverse(P("x^2+5x+9")) == P("9x^2+5x+1"));
    CHECK(star(P("3x^4+8x^3+12x^2+10x+4")) == P("4x^4-10x^3+12x^2-8x+3"));
    CHECK(negate_x(negate_x(P("x^5-3x^2+7"))) == P("x^5-3x^2+7"));
    CHECK(substitute_power(P("x+1"), 3) == P("x^3+1"));
    CHECK_THROWS_AS(substitute_power(P("x+1"), 0), std::domain_error);
    const IntPoly g = P("[1,-2,1,0,-1,1,-1]");
    CHECK(is_star_symmetric(g * star(g)));
    CHECK(is_pm_palindromic(P("x^4-x^3+x-1")));
    CHECK(palindromic_sign(P("x^4-x^3+x-1")) == -1);
    CHECK(palindromic_sign(P("x^2+3x+1")) == 1);
    CHECK(palindromic_sign(P("x^2+3x+2")) == 0);
}

TEST_CASE("algebraic identities on random pairs") {
    for (int t = 0; t < 1000; ++t) {
        const IntPoly g = random_poly(testing_support::uniform(0, 20), 100);
        const IntPoly h = random_poly(testing_support::uniform(0, 20), 100);
        REQUIRE(reverse(g * h) == reverse(g) * reverse(h));
        REQUIRE(star(g * h) == star(g) * star(h));
        const IntPoly ss = star(star(g));
        REQUIRE((ss == g || ss == -g));
        REQUIRE(reverse(reverse(g)) == g);
        REQUIRE(height(substitute_power(g, 3)) == height(g));
        REQUIRE(exact_divide(g * h, h) == g);
    }
}

TEST_CASE("norms") {
    CHECK(height(P("x^3+2x^2+2x+1")) == 2);
    CHECK(l1_norm(IntPoly()) == 0);
    const auto l2 = l2_norm(P("x^4+1"));
    CHECK(l2.to_double() >= std::sqrt(2.0));
    CHECK(l2.to_double() < std::sqrt(2.0) * (1 + 1e-9));
    for (unsigned d : {1u, 3u, 10u}) {
        const auto b = bombieri_norm(pow(P("x+1"), 2 * d));
        CHECK(b.to_double() >= std::ldexp(1.0, static_cast<int>(d)) * (1 - 1e-12));
        CHECK(b.to_double() < std::ldexp(1.0, static_cast<int>(d)) * (1 + 1e-9));
    }
    const IntPoly f351 = P("[1,8,47,136,285,171,-20,-21,2]");
    CHECK(bombieri_norm(f351).to_double() == doctest::Approx(47).epsilon(0.02));
    CHECK_THROWS_AS(bombieri_norm(IntPoly()), std::domain_error);
}

TEST_CASE("norm inequalities on random polynomials") {
    for (int t = 0; t < 300; ++t) {
        const IntPoly p = random_poly(testing_support::uniform(0, 30), 1000);
        const mpz_class h = height(p), l1 = l1_norm(p);
        REQUIRE(h <= l1);
        REQUIRE(l1 <= mpz_class(p.deg() + 1) * h);
        REQUIRE(l2_norm(p).at_least(h));
        REQUIRE(l2_norm(p).to_double() <= l1.get_d() * (1 + 0x1p-30));
        REQUIRE(bombieri_norm(p).to_double() <= l2_norm(p).to_double() * (1 + 0x1p-30));
        REQUIRE(abs(eval_at_int(p, 1)) <= l1);
    }
}

TEST_CASE("evaluation") {
    CHECK(eval_at_int(P("x^3+2x^2+2x+1"), 1) == 6);
    CHECK(eval_at_int(P("x-1"), 1) == 0);
    CHECK(eval_at_int(P("x^2-3"), -2) == 1);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == P("x-1"));
    CHECK(cyclotomic(4) == P("x^2+1"));
    CHECK(cyclotomic(12) == P("x^4-x^2+1"));
    CHECK(height(cyclotomic(105)) == 2);
    CHECK(height(cyclotomic(385)) == 3);
    CHECK(height(cyclotomic(1365)) == 4);
    for (std::uint64_t n = 1; n <= 300; ++n) {
        IntPoly prod = IntPoly::constant(1);
        for (auto m : divisors(n)) prod = prod * cyclotomic(m);
        REQUIRE(prod == IntPoly::x_pow_minus_one(n));
        REQUIRE(cyclotomic(n).deg() == euler_phi(n));
    }
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("text round trips") {
    for (int t = 0; t < 200; ++t) {
        const IntPoly p = random_poly(testing_support::uniform(0, 25), 1 << 20) * IntPoly::constant(mpz_class("1000000000000000000007"));
        REQUIRE(parse(format_expr(p)) == p);
        REQUIRE(parse(format_list(p)) == p);
        REQUIRE(from_json(to_json(p)) == p);
        REQUIRE(from_json(nlohmann::json::parse(to_json(p).dump())) == p);
    }
    CHECK(format_list(IntPoly()) == "[0]");
    CHECK(parse(format_expr(IntPoly())) == IntPoly());
    CHECK(format_expr(P("x^2-x")) == "x^2 - x");
    CHECK(to_json(P("2x-1"))["coeffs_desc"] == nlohmann::json::array({"2", "-1"}));
}

TEST_CASE("upper reals never round below") {
    const mpz_class big("340282366920938463463374607431768211457");
    CHECK(UpperReal::from_mpz(big).at_least(big));
    CHECK(UpperReal::from_mpz(big).floor() >= big);
    const auto r2 = UpperReal::exact(2).sqrt();
    CHECK((r2 * r2).to_double() >= 2.0);
    const auto third = UpperReal::from_mpq(mpq_class(1, 3));
    CHECK((third * UpperReal::exact(3)).to_double() >= 1.0);
    const auto huge = UpperReal::exact(3).pow(5000);
    CHECK(huge.log2() == doctest::Approx(5000 * std::log2(3.0)).epsilon(1e-9));
    CHECK(huge.root(5000).to_double() >= 3.0);
    CHECK(UpperReal::exact(10).str(3) == "10");
    CHECK(UpperReal::exact(0.125).str(3) == "0.125");
    CHECK(UpperReal::exact(1234567).str(3) == "1.24e+6");
    CHECK(UpperReal::exact(2).sqrt().str(6) == "1.41422");
}
