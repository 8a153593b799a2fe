#include "search/conjectures.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace search {

PowerCheck conjecture_power_check(const IntPoly& f, unsigned k) {
    if (f.is_zero()) throw std::domain_error("conjecture_power_check: zero polynomial");
    std::size_t nonzero = 0;
    for (const auto& c : f.coeffs()) nonzero += sgn(c) != 0;
    if (nonzero == 1) throw std::domain_error("conjecture_power_check: monomials are excluded");
    if (k < 1) throw std::domain_error("conjecture_power_check: k must be positive");
    PowerCheck r;
    r.lhs = polycore::height(pow(f, k));
    r.rhs = polycore::binomial(k, k / 2) * polycore::height(f);
    r.holds = r.lhs >= r.rhs;
    r.equality = r.lhs == r.rhs;
    return r;
}

namespace {

double modulus_at(const std::vector<double>& c, double theta) {
    const std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi * theta);
    std::complex<double> acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return std::abs(acc);
}

}  // namespace

double max_modulus_estimate(const IntPoly& f, std::size_t samples) {
    if (f.is_zero()) return 0;
    if (samples < 4 * f.deg() || samples == 0)
        throw std::domain_error("max_modulus_estimate: need at least 4 deg(f) samples");
    std::vector<double> c;
    for (const auto& a : f.coeffs()) c.push_back(a.get_d());

    std::size_t best_j = 0;
    double best = -1;
    for (std::size_t j = 0; j < samples; ++j) {
        double v = modulus_at(c, static_cast<double>(j) / static_cast<double>(samples));
        if (v > best) {
            best = v;
            best_j = j;
        }
    }
    const double step = 1.0 / static_cast<double>(samples);
    const double phi = (std::sqrt(5.0) - 1) / 2;
    double a = static_cast<double>(best_j) * step - step, b = static_cast<double>(best_j) * step + step;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = modulus_at(c, x1), f2 = modulus_at(c, x2);
    for (int it = 0; it < 100 && b - a > 1e-15; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = modulus_at(c, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = modulus_at(c, x1);
        }
    }
    return std::max({best, f1, f2});
}

}  // namespace search
