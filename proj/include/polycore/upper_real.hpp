#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace polycore {

// Nonnegative real carried as mantissa * 2^exponent with the mantissa in
// [0.5, 1).  Every constructor and operation rounds so that the stored value
// is never below the exact real it stands for.  Inexact steps are followed by
// a multiplication with (1 + 2^-40); the binary exponent is a 64-bit integer,
// so values far outside the double range (Graeffe iterates, 2^d factors) stay
// finite.
class UpperReal {
public:
    static constexpr double kSlack = 1.0 + 0x1p-40;

    UpperReal() = default;

    // v must be finite and >= 0; it is taken as exact.
    static UpperReal exact(double v);
    static UpperReal from_mpz(const mpz_class& z);  // |z|, rounded up
    static UpperReal from_mpq(const mpq_class& q);  // |q|, rounded up
    // mantissa * 2^exp where the caller guarantees mantissa is already an
    // upper value; no extra slack is applied.
    static UpperReal from_parts(double mantissa, std::int64_t exp);
    // 2^l rounded up, with slack covering the libm error in exp2.
    static UpperReal from_log2(double l);

    bool is_zero() const { return m_ == 0.0; }
    double mantissa() const { return m_; }
    std::int64_t exponent() const { return e_; }

    // Approximate; only for display, regressions and heuristics.
    double log2() const;
    double to_double() const;  // +inf when out of range

    mpz_class floor() const;  // exact floor of the stored value

    UpperReal sqrt() const;
    UpperReal root(unsigned k) const;  // k-th root
    UpperReal pow(unsigned k) const;
    UpperReal div(const mpz_class& d) const;  // divide by |d| > 0

    friend UpperReal operator*(const UpperReal& a, const UpperReal& b);
    friend UpperReal operator+(const UpperReal& a, const UpperReal& b);
    UpperReal& operator*=(const UpperReal& o) { return *this = *this * o; }
    UpperReal& operator+=(const UpperReal& o) { return *this = *this + o; }

    int compare(const UpperReal& o) const;
    friend bool operator<(const UpperReal& a, const UpperReal& b) { return a.compare(b) < 0; }
    friend bool operator<=(const UpperReal& a, const UpperReal& b) { return a.compare(b) <= 0; }
    friend bool operator>(const UpperReal& a, const UpperReal& b) { return a.compare(b) > 0; }
    friend bool operator>=(const UpperReal& a, const UpperReal& b) { return a.compare(b) >= 0; }
    friend bool operator==(const UpperReal& a, const UpperReal& b) { return a.compare(b) == 0; }

    // Compare against an exact integer.
    bool at_least(const mpz_class& z) const;

    // Decimal rendering with the given number of significant digits, rounded
    // upward in the last digit so the text is itself an upper bound.
    std::string str(int digits = 8) const;

private:
    static UpperReal normalized(double m, std::int64_t e);
    double m_ = 0.0;
    std::int64_t e_ = 0;
};

inline UpperReal min(const UpperReal& a, const UpperReal& b) { return b < a ? b : a; }
inline UpperReal max(const UpperReal& a, const UpperReal& b) { return a < b ? b : a; }

}  // namespace polycore
