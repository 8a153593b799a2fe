#include "bounds/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace bounds {

std::string to_string(SfMethod m) {
    switch (m) {
        case SfMethod::mignotte_l1_sqrt: return "mignotte_l1_sqrt";
        case SfMethod::mignotte_refined: return "mignotte_refined";
        case SfMethod::btw: return "btw";
        case SfMethod::degree_aware_at_half: return "degree_aware_at_half";
    }
    return "unknown";
}

namespace {

void require_degree(const IntPoly& f, std::size_t min_deg, const char* who) {
    if (f.is_zero() || f.deg() < min_deg)
        throw std::domain_error(std::string(who) + " needs degree >= " + std::to_string(min_deg));
}

UpperReal mahler_hat(const IntPoly& f) {
    return polycore::min(rootbounds::mahler_upper(f).upper, rootbounds::mahler_upper(polycore::reverse(f)).upper);
}

UpperReal two_pow(std::size_t d) { return UpperReal::from_parts(0.5, static_cast<std::int64_t>(d) + 1); }

}  // namespace

SingleFactorBound sf_mignotte(const IntPoly& f) {
    require_degree(f, 2, "sf_mignotte");
    UpperReal m = mahler_hat(f);
    SingleFactorBound b{(two_pow(f.deg()) * m).sqrt().floor(), SfMethod::mignotte_l1_sqrt, {}};
    b.audit["mahler"] = m.str();
    b.audit["norm"] = "l1";
    return b;
}

SingleFactorBound sf_mignotte_refined(const IntPoly& f) {
    require_degree(f, 2, "sf_mignotte_refined");
    const std::size_t d = f.deg();
    UpperReal m = mahler_hat(f);
    mpq_class w(2 * polycore::binomial(d, d / 2), 3);
    SingleFactorBound b{(UpperReal::from_mpq(w) * m).sqrt().floor(), SfMethod::mignotte_refined, {}};
    b.audit["mahler"] = m.str();
    b.audit["norm"] = "height";
    return b;
}

SingleFactorBound sf_btw(const IntPoly& f) {
    require_degree(f, 3, "sf_btw");
    const std::size_t d = f.deg();
    UpperReal bomb = polycore::bombieri_norm(f);
    UpperReal dpow = UpperReal::from_log2(-0.75 * std::log2(static_cast<double>(d)));
    UpperReal c = UpperReal::from_mpq(mpq_class(11, 10));
    UpperReal v = c * (two_pow(d) * dpow * bomb).sqrt();
    SingleFactorBound b{v.floor(), SfMethod::btw, {}};
    b.audit["bombieri"] = bomb.str();
    b.audit["constant"] = "1.1";
    b.audit["norm"] = "height";
    return b;
}

SfBest sf_best(const IntPoly& f, const std::optional<std::set<std::size_t>>& degree_info) {
    require_degree(f, 2, "sf_best");
    const std::size_t d = f.deg();
    SfBest out;
    out.candidates.push_back(sf_mignotte(f));
    out.candidates.push_back(sf_mignotte_refined(f));
    if (d > 2) out.candidates.push_back(sf_btw(f));

    std::set<std::size_t> small;
    if (degree_info) {
        for (std::size_t e : *degree_info) {
            if (e < 1 || e >= d) throw std::domain_error("admissible factor degree out of range: " + std::to_string(e));
            small.insert(std::min(e, d - e));
        }
    } else {
        for (std::size_t e = 1; e <= d / 2; ++e) small.insert(e);
    }
    if (!small.empty() && sgn(f.tc()) != 0) {
        Inputs in = compute_inputs(f);
        SingleFactorBound da{0, SfMethod::degree_aware_at_half, {}};
        std::string used;
        for (std::size_t e : small) {
            BoundReport r = combined_report(in, e);
            if (r.combined.overall > da.value) da.value = r.combined.overall;
            used += (used.empty() ? "" : ",") + std::to_string(e);
        }
        da.audit["degrees"] = used;
        da.audit["norm"] = "height";
        out.candidates.push_back(da);
    }
    out.best = out.candidates.front();
    for (const auto& c : out.candidates)
        if (c.value < out.best.value) out.best = c;
    return out;
}

}  // namespace bounds
