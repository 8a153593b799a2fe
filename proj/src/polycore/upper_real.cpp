#include "polycore/upper_real.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace polycore {

namespace {
constexpr double kRootSlack = 1.0 + 0x1p-36;
}

UpperReal UpperReal::normalized(double m, std::int64_t e) {
    UpperReal r;
    if (m == 0.0) return r;
    if (!(m > 0.0) || !std::isfinite(m)) throw std::logic_error("UpperReal: invalid mantissa");
    int k = 0;
    r.m_ = std::frexp(m, &k);
    r.e_ = e + k;
    return r;
}

UpperReal UpperReal::exact(double v) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw std::domain_error("UpperReal::exact needs a finite nonnegative value");
    return normalized(v, 0);
}

UpperReal UpperReal::from_parts(double mantissa, std::int64_t exp) {
    if (mantissa < 0.0) throw std::domain_error("UpperReal::from_parts needs a nonnegative mantissa");
    return normalized(mantissa, exp);
}

UpperReal UpperReal::from_mpz(const mpz_class& z) {
    if (sgn(z) == 0) return {};
    long ex = 0;
    double d = std::fabs(mpz_get_d_2exp(&ex, z.get_mpz_t()));  // truncated
    if (mpz_sizeinbase(z.get_mpz_t(), 2) > 53) d *= kSlack;
    return normalized(d, ex);
}

UpperReal UpperReal::from_mpq(const mpq_class& q) {
    if (sgn(q) == 0) return {};
    return from_mpz(q.get_num()).div(q.get_den());
}

UpperReal UpperReal::from_log2(double l) {
    if (!std::isfinite(l)) throw std::domain_error("UpperReal::from_log2 needs a finite exponent");
    double q = std::floor(l);
    double m = std::exp2(l - q) * kRootSlack;
    return normalized(m, static_cast<std::int64_t>(q));
}

double UpperReal::log2() const {
    if (is_zero()) return -INFINITY;
    return std::log2(m_) + static_cast<double>(e_);
}

double UpperReal::to_double() const {
    if (is_zero()) return 0.0;
    if (e_ > 1100) return INFINITY;
    if (e_ < -1100) return 0x1p-1074;  // still an upper value
    return std::ldexp(m_, static_cast<int>(e_));
}

mpz_class UpperReal::floor() const {
    mpz_class r;
    if (is_zero() || e_ <= 0) return r;  // value < 1
    mpz_class scaled;
    mpz_set_d(scaled.get_mpz_t(), std::ldexp(m_, 53));  // exact integer
    std::int64_t shift = e_ - 53;
    if (shift >= 0)
        mpz_mul_2exp(r.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    else
        mpz_fdiv_q_2exp(r.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    return r;
}

UpperReal UpperReal::sqrt() const {
    if (is_zero()) return {};
    double m = m_;
    std::int64_t e = e_;
    if (e & 1) {
        m *= 2.0;
        e -= 1;
    }
    return normalized(std::sqrt(m) * kSlack, e / 2);
}

UpperReal UpperReal::root(unsigned k) const {
    if (k == 0) throw std::domain_error("UpperReal::root(0)");
    if (k == 1 || is_zero()) return *this;
    if (k == 2) return sqrt();
    // Split e = q*k + r with 0 <= r < k so the fractional part stays small.
    std::int64_t kk = k;
    std::int64_t q = e_ >= 0 ? e_ / kk : -((-e_ + kk - 1) / kk);
    std::int64_t r = e_ - q * kk;
    double l = (std::log2(m_) + static_cast<double>(r)) / static_cast<double>(k);
    UpperReal frac = from_log2(l);
    frac.e_ += q;
    return frac;
}

UpperReal UpperReal::pow(unsigned k) const {
    UpperReal result = exact(1.0);
    UpperReal base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

UpperReal UpperReal::div(const mpz_class& d) const {
    if (sgn(d) == 0) throw std::domain_error("UpperReal::div by zero");
    if (is_zero()) return {};
    long ex = 0;
    double dd = std::fabs(mpz_get_d_2exp(&ex, d.get_mpz_t()));  // truncation: a lower value
    return normalized(m_ / dd * kSlack, e_ - ex);
}

UpperReal operator*(const UpperReal& a, const UpperReal& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return UpperReal::normalized(a.m_ * b.m_ * UpperReal::kSlack, a.e_ + b.e_);
}

UpperReal operator+(const UpperReal& a, const UpperReal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const UpperReal& hi = a.e_ >= b.e_ ? a : b;
    const UpperReal& lo = a.e_ >= b.e_ ? b : a;
    std::int64_t gap = hi.e_ - lo.e_;
    // Anything shifted out is far below the slack added to hi.
    double tail = gap > 1000 ? 0.0 : std::ldexp(lo.m_, static_cast<int>(-gap));
    return UpperReal::normalized((hi.m_ + tail) * UpperReal::kSlack, hi.e_);
}

int UpperReal::compare(const UpperReal& o) const {
    if (is_zero() || o.is_zero()) {
        if (is_zero() && o.is_zero()) return 0;
        return is_zero() ? -1 : 1;
    }
    if (e_ != o.e_) return e_ < o.e_ ? -1 : 1;
    if (m_ != o.m_) return m_ < o.m_ ? -1 : 1;
    return 0;
}

bool UpperReal::at_least(const mpz_class& z) const {
    if (sgn(z) <= 0) return true;
    // floor(v) >= z  <=>  v >= z for integer z
    return floor() >= z;
}

namespace {

// m * 2^e rounded up to `digits` significant decimal digits, in exact
// rational arithmetic.
std::string exact_str(double m, std::int64_t e, int digits) {
    mpq_class v(m);
    if (e >= 0) v *= mpq_class(mpz_class(1) << static_cast<unsigned long>(e));
    else v /= mpq_class(mpz_class(1) << static_cast<unsigned long>(-e));
    auto pow10 = [](long k) {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
        return k < 0 ? mpq_class(1, t) : mpq_class(t);
    };
    // p = floor(log10 v)
    long p = static_cast<long>(std::floor((std::log2(m) + static_cast<double>(e)) * std::log10(2.0)));
    while (pow10(p) > v) --p;
    while (pow10(p + 1) <= v) ++p;
    const long shift = digits - 1 - p;
    mpq_class scaled = v * pow10(shift);
    mpz_class s;
    mpz_cdiv_q(s.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    if (s >= pow10(digits).get_num()) {
        mpz_cdiv_q_ui(s.get_mpz_t(), s.get_mpz_t(), 10);
        ++p;
    }
    std::string ds = s.get_str();  // exactly `digits` digits
    if (p >= -4 && p < digits) {
        if (p >= 0) {
            std::string ip = ds.substr(0, static_cast<std::size_t>(p + 1)), fp = ds.substr(static_cast<std::size_t>(p + 1));
            while (!fp.empty() && fp.back() == '0') fp.pop_back();
            return fp.empty() ? ip : ip + "." + fp;
        }
        return "0." + std::string(static_cast<std::size_t>(-p - 1), '0') + ds;
    }
    std::string mant = ds.size() > 1 ? ds.substr(0, 1) + "." + ds.substr(1) : ds;
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%+ld", p);
    return mant + buf;
}

}  // namespace

std::string UpperReal::str(int digits) const {
    if (is_zero()) return "0";
    if (digits < 1) digits = 1;
    if (e_ > -100000 && e_ < 100000) return exact_str(m_, e_, digits);
    double l10 = log2() * std::log10(2.0);
    double p = std::floor(l10);
    double mm = std::pow(10.0, l10 - p) * (1.0 + 1e-12);
    double scale = std::pow(10.0, digits - 1);
    double s = std::ceil(mm * scale);
    if (s >= scale * 10.0) {
        s = std::ceil(s / 10.0);
        p += 1.0;
    }
    char buf[64];
    long long ip = static_cast<long long>(p);
    if (ip >= -4 && ip < digits) {
        double v = s / scale * std::pow(10.0, p);
        int decimals = digits - 1 - static_cast<int>(ip);
        if (decimals < 0) decimals = 0;
        std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    } else {
        std::snprintf(buf, sizeof buf, "%.*fe%+lld", digits - 1, s / scale, ip);
    }
    return buf;
}

}  // namespace polycore
