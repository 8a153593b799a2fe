#pragma once

#include "polycore/upper_real.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace polycore {

// Degree of a polynomial.  The zero polynomial gets a separate "minus
// infinity" value which compares below every finite degree and refuses to
// convert to an integer.
class Degree {
public:
    static Degree minus_infinity() { return Degree(); }
    explicit Degree(std::size_t d) : finite_(true), d_(d) {}

    bool is_minus_infinity() const { return !finite_; }
    std::size_t value() const;  // throws std::domain_error on minus infinity

    friend bool operator==(const Degree&, const Degree&) = default;
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.d_ <=> b.d_;
    }

private:
    Degree() = default;
    bool finite_ = false;
    std::size_t d_ = 0;
};

// Dense univariate polynomial over Z.  coeffs()[i] is the coefficient of x^i
// and the vector never ends in a zero, so the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> ascending);

    static IntPoly from_ascending(const std::vector<long long>& c);
    static IntPoly from_descending(const std::vector<long long>& c);
    static IntPoly from_descending(const std::vector<mpz_class>& c);
    static IntPoly constant(const mpz_class& c);
    static IntPoly monomial(const mpz_class& c, std::size_t k);
    static IntPoly x_minus(const mpz_class& r);      // x - r
    static IntPoly x_pow_minus_one(std::size_t n);   // x^n - 1

    bool is_zero() const { return c_.empty(); }
    Degree degree() const { return c_.empty() ? Degree::minus_infinity() : Degree(c_.size() - 1); }
    std::size_t deg() const { return degree().value(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& coeff(std::size_t i) const;  // zero past the degree
    std::vector<mpz_class> descending() const;
    std::size_t size() const { return c_.size(); }

    const mpz_class& lc() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }
    const mpz_class& tc() const { return coeff(0); }
    std::size_t max_coeff_bits() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();
    std::vector<mpz_class> c_;
};

IntPoly operator+(const IntPoly& p, const IntPoly& q);
IntPoly operator-(const IntPoly& p, const IntPoly& q);
IntPoly operator-(const IntPoly& p);
IntPoly operator*(const IntPoly& p, const IntPoly& q);
IntPoly operator*(const IntPoly& p, const mpz_class& c);
IntPoly pow(const IntPoly& p, unsigned k);
IntPoly shift(const IntPoly& p, std::size_t k);  // p * x^k

// q * r == p, or nullopt.  Throws std::domain_error when q is zero.
std::optional<IntPoly> exact_divide(const IntPoly& p, const IntPoly& q);
// Remainder of p modulo a monic q, with coefficients over Z.
IntPoly rem_monic(const IntPoly& p, const IntPoly& q);

IntPoly reverse(const IntPoly& p);           // x^d p(1/x)
IntPoly negate_x(const IntPoly& p);          // p(-x)
IntPoly star(const IntPoly& p);              // reverse(p)(-x)
IntPoly substitute_power(const IntPoly& p, unsigned k);  // p(x^k)
IntPoly sign_normalized(const IntPoly& p);   // multiplied by -1 if lc < 0

mpz_class height(const IntPoly& p);
mpz_class l1_norm(const IntPoly& p);
mpz_class l2_norm_squared(const IntPoly& p);
UpperReal l2_norm(const IntPoly& p);
UpperReal bombieri_norm(const IntPoly& p);
mpz_class eval_at_int(const IntPoly& p, const mpz_class& x0);

// +1 if p == reverse(p), -1 if p == -reverse(p), 0 otherwise.  The zero
// polynomial counts as +1.
int palindromic_sign(const IntPoly& p);
bool is_pm_palindromic(const IntPoly& p);
// p == +-star(p); every product g * star(g) has this property.
bool is_star_symmetric(const IntPoly& p);

mpz_class binomial(unsigned long n, unsigned long k);

// Lexicographic comparison of coefficient lists read from the top degree
// down; shorter (lower degree) polynomials come first.
int compare_descending(const IntPoly& a, const IntPoly& b);

// Height ratio of a factorization: min factor height over product height.
struct Ratio {
    mpz_class numerator;
    mpz_class denominator;
    mpq_class value;
};
Ratio make_ratio(const mpz_class& min_factor_height, const mpz_class& product_height);

}  // namespace polycore
