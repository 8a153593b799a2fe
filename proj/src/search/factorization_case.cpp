#include "search/case.hpp"

#include "polycore/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace search {

using polycore::height;

std::string to_string(Tag t) {
    switch (t) {
        case Tag::palindromic: return "palindromic";
        case Tag::star_symmetric: return "star_symmetric";
        case Tag::irreducible_claimed: return "irreducible_claimed";
        case Tag::weakly_checked: return "weakly_checked";
    }
    return "unknown";
}

Tag tag_from_string(const std::string& s) {
    if (s == "palindromic") return Tag::palindromic;
    if (s == "star_symmetric") return Tag::star_symmetric;
    if (s == "irreducible_claimed") return Tag::irreducible_claimed;
    if (s == "weakly_checked") return Tag::weakly_checked;
    throw std::invalid_argument("unknown tag: " + s);
}

IntPoly product_of(const std::vector<IntPoly>& factors) {
    IntPoly p = IntPoly::constant(1);
    for (const auto& g : factors) p = p * g;
    return p;
}

FactorizationCase make_case(std::vector<IntPoly> factors, std::string source, std::set<Tag> tags) {
    if (factors.empty()) throw std::domain_error("a factorization needs at least one factor");
    for (const auto& g : factors)
        if (g.is_constant()) throw std::domain_error("constant factor in factorization");
    FactorizationCase c;
    c.product = product_of(factors);
    c.factors = std::move(factors);
    c.tags = std::move(tags);
    c.source = std::move(source);
    return c;
}

Ratio ratio(const FactorizationCase& c) {
    if (c.factors.empty()) throw std::domain_error("ratio of an empty factorization");
    mpz_class m = height(c.factors.front());
    for (const auto& g : c.factors) m = std::min(m, height(g));
    return polycore::make_ratio(m, height(c.product));
}

namespace {

// Prime factorization by trial division up to 2^20; a leftover composite
// cofactor is kept whole and flagged.
struct Factored {
    std::vector<std::pair<mpz_class, unsigned>> primes;
    bool complete = true;
};

Factored trial_factor(mpz_class n) {
    Factored out;
    n = abs(n);
    for (unsigned long p = 2; p < (1UL << 20) && n > 1; ++p) {
        if (static_cast<double>(p) * static_cast<double>(p) > n.get_d()) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        out.primes.emplace_back(mpz_class(p), e);
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0 && n.get_d() >= static_cast<double>(1UL << 40)) out.complete = false;
        out.primes.emplace_back(n, 1);
    }
    return out;
}

std::vector<mpz_class> all_divisors(const Factored& f) {
    std::vector<mpz_class> d{1};
    for (const auto& [p, e] : f.primes) {
        std::size_t base = d.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) d.push_back(d[i] * pk);
        }
    }
    return d;
}

// q^d f(p/q)
mpz_class homogeneous_value(const IntPoly& f, const mpz_class& p, const mpz_class& q) {
    mpz_class r = f.lc(), qpow = 1;
    for (std::size_t i = f.deg(); i-- > 0;) {
        qpow *= q;
        r = r * p + f.coeffs()[i] * qpow;
    }
    return r;
}

bool divides(const mpz_class& a, const mpz_class& b) {
    if (sgn(a) == 0) return sgn(b) == 0;
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

}  // namespace

WeakIrreducibility weak_irreducibility(const IntPoly& f, unsigned cyclotomic_limit) {
    WeakIrreducibility w;
    if (f.is_zero() || f.deg() == 0) {
        w.passed = false;
        w.reason = "constant";
        return w;
    }
    const std::size_t d = f.deg();
    if (d == 1) return w;
    if (sgn(f.tc()) == 0) {
        w.passed = false;
        w.reason = "root 0";
        return w;
    }

    Factored lc = trial_factor(f.lc()), tc = trial_factor(f.tc());
    w.rational_test_complete = lc.complete && tc.complete;
    const mpz_class f1 = polycore::eval_at_int(f, 1), fm1 = polycore::eval_at_int(f, -1);
    for (const auto& p : all_divisors(tc)) {
        for (const auto& q : all_divisors(lc)) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (g != 1) continue;
            for (int s : {1, -1}) {
                mpz_class ps = s * p;
                if (!divides(q - ps, f1) || !divides(q + ps, fm1)) continue;
                if (sgn(homogeneous_value(f, ps, q)) == 0) {
                    w.passed = false;
                    w.reason = "rational root " + ps.get_str() + (q == 1 ? "" : "/" + q.get_str());
                    return w;
                }
            }
        }
    }

    for (unsigned n = 1; n <= cyclotomic_limit; ++n) {
        if (polycore::euler_phi(n) >= d) continue;
        if (polycore::rem_monic(f, polycore::cyclotomic(n)).is_zero()) {
            w.passed = false;
            w.reason = "divisible by cyclotomic(" + std::to_string(n) + ")";
            return w;
        }
    }
    return w;
}

CaseReport verify_case(const FactorizationCase& c, bool check_irreducibility) {
    CaseReport r;
    r.product_ok = !c.factors.empty() && product_of(c.factors) == c.product;
    for (const auto& g : c.factors) r.factor_heights.push_back(height(g));
    r.product_height = height(c.product);
    if (!c.factors.empty() && sgn(r.product_height) > 0) r.ratio = ratio(c);
    if (check_irreducibility)
        for (const auto& g : c.factors) r.weak.push_back(weak_irreducibility(g));
    return r;
}

}  // namespace search
