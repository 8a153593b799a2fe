#include "search/families.hpp"

#include "polycore/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace search {

using polycore::height;

namespace {

IntPoly all_ones(std::size_t deg) {
    return IntPoly(std::vector<mpz_class>(deg + 1, mpz_class(1)));
}

}  // namespace

XekFamily product_family_xek(const std::vector<unsigned>& exponents) {
    if (exponents.empty()) throw std::domain_error("product_family_xek: no exponents");
    XekFamily r;
    r.exponents = exponents;
    r.product = IntPoly::constant(1);
    r.cofactor = IntPoly::constant(1);
    mpz_class num = 1, den = 1;
    std::map<std::uint64_t, unsigned> mult;
    for (unsigned e : exponents) {
        if (e == 0) throw std::domain_error("product_family_xek: exponents must be positive");
        r.product = r.product * IntPoly::x_pow_minus_one(e);
        r.cofactor = r.cofactor * all_ones(e - 1);
        num *= e;
        den += e - 1;
        for (auto m : polycore::divisors(e)) ++mult[m];
    }
    r.height = height(r.product);
    r.cofactor_height = height(r.cofactor);
    r.cofactor_lower_bound = mpq_class(num, den);
    r.cofactor_lower_bound.canonicalize();

    unsigned top = 0;
    for (auto [m, k] : mult) top = std::max(top, k);
    r.square_free_parts.assign(top, IntPoly::constant(1));
    for (auto [m, k] : mult) r.square_free_parts[k - 1] = r.square_free_parts[k - 1] * polycore::cyclotomic(m);
    r.square_free_max_height = 0;
    for (const auto& p : r.square_free_parts) r.square_free_max_height = std::max(r.square_free_max_height, height(p));
    r.tall_square_free_part = r.square_free_max_height > r.height;
    return r;
}

QuadraticFamily family_n_quadratic(unsigned n) {
    if (n < 2) throw std::domain_error("family_n_quadratic: n must be at least 2");
    QuadraticFamily r;
    r.n = n;
    const long nl = n;
    r.g1 = IntPoly::from_descending(std::vector<long long>{nl, -(2 * nl - 1), nl});

    // (1 + ... + x^A)(1 + ... + x^B) has a trapezoid of coefficients.
    const std::size_t A = n + 1, B = n + 2;
    std::vector<mpz_class> g2(A + B + 1);
    for (std::size_t i = 0; i <= A + B; ++i) {
        std::size_t lo = i > B ? i - B : 0, hi = std::min(i, A);
        g2[i] = static_cast<unsigned long>(hi - lo + 1);
    }
    r.g2 = IntPoly(std::move(g2));

    const IntPoly x = IntPoly::monomial(1, 1);
    const std::vector<IntPoly> partners = {
        r.g2,
        r.g2 * x + IntPoly::constant(1),
        shift(r.g2, 3) + IntPoly::from_descending(std::vector<long long>{1, 1, 1}),
    };
    if (height(r.g2) != n + 2) throw std::logic_error("family_n_quadratic: ht(g2) != n+2");
    for (const auto& g : partners) {
        auto c = make_case({r.g1, g}, "n-quadratic family, n = " + std::to_string(n));
        if (height(c.product) != n + 1)
            throw std::logic_error("family_n_quadratic: product height differs from n+1 at n = " + std::to_string(n));
        r.cases.push_back(std::move(c));
    }
    return r;
}

PowerFamily family_power_symmetric(unsigned k) {
    if (k < 1) throw std::domain_error("family_power_symmetric: k must be positive");
    const IntPoly f = IntPoly::from_descending(std::vector<long long>{1, 2, 2, 1});
    const IntPoly fk = pow(f, k);
    PowerFamily r;
    r.k = k;
    r.fcase = make_case({fk, polycore::negate_x(fk)}, "power family (1 - x^6)^" + std::to_string(k),
                        {Tag::star_symmetric});
    r.ratio = ratio(r.fcase);

    mpz_class three_k, six_k;
    mpz_ui_pow_ui(three_k.get_mpz_t(), 3, k);
    mpz_ui_pow_ui(six_k.get_mpz_t(), 6, k);
    r.ratio_lower_bound = mpq_class(three_k, 3 * k + 1);
    r.factor_lower_bound = mpq_class(six_k, 3 * k + 1);
    r.ratio_lower_bound.canonicalize();
    r.factor_lower_bound.canonicalize();
    if (!(r.ratio.value > r.ratio_lower_bound))
        throw std::logic_error("family_power_symmetric: ratio not above 3^k/(3k+1) at k = " + std::to_string(k));
    if (mpq_class(height(fk)) < r.factor_lower_bound)
        throw std::logic_error("family_power_symmetric: ht(f^k) below 6^k/(3k+1) at k = " + std::to_string(k));
    return r;
}

Inflation inflate_construction(const FactorizationCase& c, unsigned k, bool check_weak) {
    if (k < 2) throw std::domain_error("inflate_construction: k must be at least 2");
    if (c.factors.empty()) throw std::domain_error("inflate_construction: empty factorization");
    const IntPoly f = product_of(c.factors);
    const IntPoly fk = polycore::substitute_power(f, k);
    const mpz_class h = height(f);
    Inflation r;
    std::vector<IntPoly> factors = c.factors;
    for (const auto& g : c.factors) factors.push_back(polycore::substitute_power(g, k));
    r.fcase.factors = std::move(factors);
    r.fcase.product = f * fk;
    if (height(r.fcase.product) != h * h)
        throw std::domain_error("inflate_construction: ht(f(x) f(x^" + std::to_string(k) + ")) = " +
                                height(r.fcase.product).get_str() + ", not ht(f)^2 = " + mpz_class(h * h).get_str());
    r.fcase.source = c.source + (c.source.empty() ? "" : "; ") + "inflated by x -> x^" + std::to_string(k);
    if (check_weak) {
        r.fcase.tags = {Tag::weakly_checked};
        for (std::size_t i = c.factors.size(); i < r.fcase.factors.size(); ++i)
            r.weak.push_back(weak_irreducibility(r.fcase.factors[i]));
    }
    return r;
}

}  // namespace search
