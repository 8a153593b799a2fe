#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace search {

// Floating polynomial with a certified error radius on every coefficient:
// the exact coefficient i lies in the disc of radius radius[i] around
// coeffs[i].
struct ComplexPolyApprox {
    std::vector<std::complex<double>> coeffs;  // ascending
    std::vector<double> radius;

    std::size_t deg() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

ComplexPolyApprox cmul(const ComplexPolyApprox& a, const ComplexPolyApprox& b);
ComplexPolyApprox cnegate_x(const ComplexPolyApprox& p);

enum class UnitCircleKind { g_d, u_d, v_d };
std::string to_string(UnitCircleKind k);
UnitCircleKind unit_circle_kind_from_string(const std::string& s);

struct HeightInterval {
    double lo = 0, hi = 0;
    double mid() const { return 0.5 * (lo + hi); }
};
HeightInterval height_interval(const ComplexPolyApprox& p);

// With zeta = exp(2 pi i / d):
//   g_d = prod_{|k| < t} (x - zeta^k), t = round(d/3)
//   u_d = (x - 1) prod_{k=1..t} (x^2 - 2 cos(k 2pi/d) x + 1), d = 4t + 2
//   v_d = (x - 1) prod_{k=1..t} (x^2 - 2 cos(k 2pi/d) x + 1) (x + i), d = 4t + 4
// Kind/degree mismatches throw std::domain_error.
struct UnitCircleFactor {
    std::size_t d = 0;
    UnitCircleKind kind = UnitCircleKind::g_d;
    ComplexPolyApprox poly;
    HeightInterval height;
};
UnitCircleFactor unit_circle_factor(std::size_t d, UnitCircleKind kind);

// p(x) p(-x) against s (x^d - 1) for s = +1 and s = -1; `sign` is whichever
// agrees within the propagated radii, 0 when neither does.
struct IdentityCheck {
    int sign = 0;
    double worst_excess = 0;  // max over i of |P_i - target_i| - radius_i for the better sign
};
IdentityCheck check_xd1_identity(const ComplexPolyApprox& p, std::size_t d);

// Least-squares fit of log ht(factor) = slope d + intercept over the given
// degrees, using interval midpoints.
struct GrowthFit {
    double slope = 0, intercept = 0;
};
GrowthFit growth_regression(UnitCircleKind kind, const std::vector<std::size_t>& degrees);

}  // namespace search
