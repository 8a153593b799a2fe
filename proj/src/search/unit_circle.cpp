#include "search/unit_circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace search {

namespace {

constexpr double kU = 0x1p-53;           // unit roundoff
constexpr double kRadiusSlack = 1 + 0x1p-40;  // covers rounding in the radius sums
constexpr double kCosError = 0x1p-48;    // |computed 2cos(k theta) - exact|

}  // namespace

std::string to_string(UnitCircleKind k) {
    switch (k) {
        case UnitCircleKind::g_d: return "g_d";
        case UnitCircleKind::u_d: return "u_d";
        case UnitCircleKind::v_d: return "v_d";
    }
    return "unknown";
}

UnitCircleKind unit_circle_kind_from_string(const std::string& s) {
    if (s == "g_d" || s == "g") return UnitCircleKind::g_d;
    if (s == "u_d" || s == "u") return UnitCircleKind::u_d;
    if (s == "v_d" || s == "v") return UnitCircleKind::v_d;
    throw std::invalid_argument("unknown unit circle factor kind: " + s);
}

ComplexPolyApprox cmul(const ComplexPolyApprox& a, const ComplexPolyApprox& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    const std::size_t n = a.coeffs.size() + b.coeffs.size() - 1;
    ComplexPolyApprox r;
    r.coeffs.assign(n, 0.0);
    r.radius.assign(n, 0.0);
    std::vector<double> magnitude(n, 0.0);
    std::vector<std::size_t> terms(n, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        const double ma = std::abs(a.coeffs[i]), ra = a.radius[i];
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            const double mb = std::abs(b.coeffs[j]), rb = b.radius[j];
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
            r.radius[i + j] += ma * rb + mb * ra + ra * rb;
            magnitude[i + j] += ma * mb;
            ++terms[i + j];
        }
    }
    // A complex product costs a few ulps and each addition one more.
    for (std::size_t k = 0; k < n; ++k)
        r.radius[k] = (r.radius[k] + 2 * (static_cast<double>(terms[k]) + 4) * kU * magnitude[k]) * kRadiusSlack;
    return r;
}

ComplexPolyApprox cnegate_x(const ComplexPolyApprox& p) {
    ComplexPolyApprox r = p;
    for (std::size_t i = 1; i < r.coeffs.size(); i += 2) r.coeffs[i] = -r.coeffs[i];
    return r;
}

HeightInterval height_interval(const ComplexPolyApprox& p) {
    HeightInterval h;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        const double m = std::abs(p.coeffs[i]);
        h.lo = std::max(h.lo, m * (1 - 4 * kU) - p.radius[i]);
        h.hi = std::max(h.hi, m * (1 + 4 * kU) + p.radius[i]);
    }
    return h;
}

UnitCircleFactor unit_circle_factor(std::size_t d, UnitCircleKind kind) {
    if (d < 3) throw std::domain_error("unit_circle_factor: d must be at least 3");
    std::size_t t = 0;  // quadratic factors k = 1..t
    switch (kind) {
        case UnitCircleKind::g_d:
            t = (d + 1) / 3 - 1;  // g_d runs over |k| < round(d/3)
            break;
        case UnitCircleKind::u_d:
            if (d % 4 != 2) throw std::domain_error("unit_circle_factor: u_d needs d = 2 mod 4");
            t = (d - 2) / 4;
            break;
        case UnitCircleKind::v_d:
            if (d % 4 != 0) throw std::domain_error("unit_circle_factor: v_d needs d = 0 mod 4");
            t = (d - 4) / 4;
            break;
    }
    const double theta = 2 * std::numbers::pi / static_cast<double>(d);
    ComplexPolyApprox p{{-1.0, 1.0}, {0.0, 0.0}};
    for (std::size_t k = 1; k <= t; ++k) {
        ComplexPolyApprox q{{1.0, -2 * std::cos(static_cast<double>(k) * theta), 1.0}, {0.0, kCosError, 0.0}};
        p = cmul(p, q);
    }
    if (kind == UnitCircleKind::v_d) p = cmul(p, ComplexPolyApprox{{{0.0, 1.0}, 1.0}, {0.0, 0.0}});

    UnitCircleFactor r;
    r.d = d;
    r.kind = kind;
    r.poly = std::move(p);
    r.height = height_interval(r.poly);
    return r;
}

IdentityCheck check_xd1_identity(const ComplexPolyApprox& p, std::size_t d) {
    const ComplexPolyApprox prod = cmul(p, cnegate_x(p));
    IdentityCheck best;
    best.worst_excess = INFINITY;
    if (prod.deg() != d) return best;
    for (int s : {1, -1}) {
        double worst = -INFINITY;
        for (std::size_t i = 0; i <= d; ++i) {
            double target = i == 0 ? -s : (i == d ? s : 0);
            worst = std::max(worst, std::abs(prod.coeffs[i] - target) - prod.radius[i]);
        }
        if (worst < best.worst_excess) {
            best.worst_excess = worst;
            best.sign = worst <= 0 ? s : 0;
        }
    }
    return best;
}

GrowthFit growth_regression(UnitCircleKind kind, const std::vector<std::size_t>& degrees) {
    if (degrees.size() < 2) throw std::domain_error("growth_regression: need at least two degrees");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(degrees.size());
    for (auto d : degrees) {
        const double x = static_cast<double>(d);
        const double y = std::log(unit_circle_factor(d, kind).height.mid());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    GrowthFit f;
    f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    f.intercept = (sy - f.slope * sx) / n;
    return f;
}

}  // namespace search
