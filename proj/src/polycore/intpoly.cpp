#include "polycore/intpoly.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace polycore {

namespace {

const mpz_class& zero_mpz() {
    static const mpz_class z(0);
    return z;
}

bool fits_i64(const std::vector<mpz_class>& c, std::size_t& bits) {
    bits = 0;
    for (const auto& v : c) {
        if (!mpz_fits_slong_p(v.get_mpz_t())) return false;
        bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
    }
    return true;
}

// Schoolbook product with machine integers when the result provably fits.
bool small_mul(const IntPoly& p, const IntPoly& q, std::vector<mpz_class>& out) {
    std::size_t bp = 0, bq = 0;
    if (!fits_i64(p.coeffs(), bp) || !fits_i64(q.coeffs(), bq)) return false;
    std::size_t terms = std::min(p.size(), q.size());
    std::size_t tb = 0;
    while ((std::size_t{1} << tb) < terms) ++tb;
    if (bp + bq + tb + 1 > 126) return false;
    std::vector<long> a(p.size()), b(q.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = p.coeffs()[i].get_si();
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = q.coeffs()[i].get_si();
    std::vector<__int128> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        __int128 ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
    }
    out.resize(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) {
        __int128 v = acc[k];
        if (v >= LONG_MIN && v <= LONG_MAX) {
            out[k] = static_cast<long>(v);
        } else {
            bool neg = v < 0;
            unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
            mpz_class hi(static_cast<unsigned long>(u >> 64));
            mpz_class lo(static_cast<unsigned long>(u & ~0ULL));
            mpz_class r = (hi << 64) + lo;
            out[k] = neg ? mpz_class(-r) : r;
        }
    }
    return true;
}

}  // namespace

std::size_t Degree::value() const {
    if (!finite_) throw std::domain_error("degree of the zero polynomial is minus infinity");
    return d_;
}

IntPoly::IntPoly(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly IntPoly::from_ascending(const std::vector<long long>& c) {
    std::vector<mpz_class> v;
    v.reserve(c.size());
    for (long long x : c) v.emplace_back(static_cast<long>(x));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::from_descending(const std::vector<long long>& c) {
    std::vector<long long> r(c.rbegin(), c.rend());
    return from_ascending(r);
}

IntPoly IntPoly::from_descending(const std::vector<mpz_class>& c) {
    return IntPoly(std::vector<mpz_class>(c.rbegin(), c.rend()));
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
    std::vector<mpz_class> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x_minus(const mpz_class& r) { return IntPoly(std::vector<mpz_class>{-r, 1}); }

IntPoly IntPoly::x_pow_minus_one(std::size_t n) {
    std::vector<mpz_class> v(n + 1);
    v[0] = -1;
    v[n] += 1;
    return IntPoly(std::move(v));
}

const mpz_class& IntPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_mpz(); }

std::vector<mpz_class> IntPoly::descending() const { return {c_.rbegin(), c_.rend()}; }

std::size_t IntPoly::max_coeff_bits() const {
    std::size_t b = 0;
    for (const auto& v : c_) b = std::max(b, mpz_sizeinbase(v.get_mpz_t(), 2));
    return b;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
    std::vector<mpz_class> r(std::max(p.size(), q.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(i) + q.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
    std::vector<mpz_class> r(std::max(p.size(), q.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(i) - q.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& p) {
    std::vector<mpz_class> r(p.coeffs());
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<mpz_class> r;
    if (small_mul(p, q, r)) return IntPoly(std::move(r));
    r.assign(p.size() + q.size() - 1, mpz_class(0));
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& p, const mpz_class& c) {
    std::vector<mpz_class> r(p.coeffs());
    for (auto& v : r) v *= c;
    return IntPoly(std::move(r));
}

IntPoly pow(const IntPoly& p, unsigned k) {
    IntPoly result = IntPoly::constant(1);
    IntPoly base = p;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

IntPoly shift(const IntPoly& p, std::size_t k) {
    if (p.is_zero()) return {};
    std::vector<mpz_class> r(k, mpz_class(0));
    r.insert(r.end(), p.coeffs().begin(), p.coeffs().end());
    return IntPoly(std::move(r));
}

std::optional<IntPoly> exact_divide(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw std::domain_error("exact_divide: division by the zero polynomial");
    if (p.is_zero()) return IntPoly();
    if (p.size() < q.size()) return std::nullopt;
    std::vector<mpz_class> rem(p.coeffs());
    const auto& b = q.coeffs();
    const std::size_t m = b.size() - 1;
    const mpz_class& lead = b[m];
    std::vector<mpz_class> quo(p.size() - m);
    mpz_class t;
    for (std::size_t i = quo.size(); i-- > 0;) {
        mpz_class& top = rem[i + m];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        mpz_divexact(quo[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j < m; ++j) {
            if (sgn(b[j]) == 0) continue;
            mpz_submul(rem[i + j].get_mpz_t(), quo[i].get_mpz_t(), b[j].get_mpz_t());
        }
        top = 0;
    }
    for (std::size_t j = 0; j < m; ++j)
        if (sgn(rem[j]) != 0) return std::nullopt;
    return IntPoly(std::move(quo));
}

IntPoly rem_monic(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero() || q.lc() != 1) throw std::domain_error("rem_monic needs a monic divisor");
    if (p.size() < q.size()) return p;
    std::vector<mpz_class> rem(p.coeffs());
    const auto& b = q.coeffs();
    const std::size_t m = b.size() - 1;
    for (std::size_t i = p.size() - m; i-- > 0;) {
        mpz_class c = rem[i + m];
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < m; ++j)
            if (sgn(b[j]) != 0) mpz_submul(rem[i + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
        rem[i + m] = 0;
    }
    rem.resize(m);
    return IntPoly(std::move(rem));
}

IntPoly reverse(const IntPoly& p) { return IntPoly(std::vector<mpz_class>(p.coeffs().rbegin(), p.coeffs().rend())); }

IntPoly negate_x(const IntPoly& p) {
    std::vector<mpz_class> r(p.coeffs());
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return IntPoly(std::move(r));
}

IntPoly star(const IntPoly& p) { return negate_x(reverse(p)); }

IntPoly substitute_power(const IntPoly& p, unsigned k) {
    if (k == 0) throw std::domain_error("substitute_power: k must be positive");
    if (p.is_zero()) return {};
    std::vector<mpz_class> r((p.size() - 1) * k + 1, mpz_class(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i * k] = p.coeffs()[i];
    return IntPoly(std::move(r));
}

IntPoly sign_normalized(const IntPoly& p) { return sgn(p.lc()) < 0 ? -p : p; }

mpz_class height(const IntPoly& p) {
    mpz_class h;
    for (const auto& v : p.coeffs())
        if (mpz_cmpabs(v.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(v);
    return h;
}

mpz_class l1_norm(const IntPoly& p) {
    mpz_class s;
    for (const auto& v : p.coeffs()) s += abs(v);
    return s;
}

mpz_class l2_norm_squared(const IntPoly& p) {
    mpz_class s;
    for (const auto& v : p.coeffs()) mpz_addmul(s.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
    return s;
}

UpperReal l2_norm(const IntPoly& p) { return UpperReal::from_mpz(l2_norm_squared(p)).sqrt(); }

UpperReal bombieri_norm(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("bombieri_norm of the zero polynomial");
    const std::size_t d = p.deg();
    UpperReal sum;
    mpz_class binom(1);
    for (std::size_t j = 0; j <= d; ++j) {
        const mpz_class& a = p.coeffs()[j];
        if (sgn(a) != 0) sum += UpperReal::from_mpz(a * a).div(binom);
        binom = binom * static_cast<unsigned long>(d - j) / static_cast<unsigned long>(j + 1);
    }
    return sum.sqrt();
}

mpz_class eval_at_int(const IntPoly& p, const mpz_class& x0) {
    mpz_class r;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x0 + p.coeffs()[i];
    return r;
}

int palindromic_sign(const IntPoly& p) {
    const auto& c = p.coeffs();
    const std::size_t n = c.size();
    bool plus = true, minus = true;
    for (std::size_t i = 0; i < n && (plus || minus); ++i) {
        if (c[i] != c[n - 1 - i]) plus = false;
        if (c[i] != -c[n - 1 - i]) minus = false;
    }
    if (plus) return 1;
    return minus ? -1 : 0;
}

bool is_pm_palindromic(const IntPoly& p) { return palindromic_sign(p) != 0; }

bool is_star_symmetric(const IntPoly& p) {
    IntPoly s = star(p);
    return s == p || s == -p;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    if (k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

int compare_descending(const IntPoly& a, const IntPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        int c = cmp(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

Ratio make_ratio(const mpz_class& min_factor_height, const mpz_class& product_height) {
    if (sgn(product_height) <= 0) throw std::domain_error("ratio of a zero product");
    Ratio r{min_factor_height, product_height, mpq_class(min_factor_height, product_height)};
    r.value.canonicalize();
    return r;
}

}  // namespace polycore
