#include "rootbounds/rootbounds.hpp"

#include "mpfr_interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rootbounds {

using detail::Ball;
using detail::Mp;

std::string to_string(RootMethod m) {
    switch (m) {
        case RootMethod::knuth: return "knuth";
        case RootMethod::zassenhaus: return "zassenhaus";
        case RootMethod::cauchy_newton: return "cauchy_newton";
        case RootMethod::graeffe: return "graeffe";
    }
    return "unknown";
}

IntPoly graeffe(const IntPoly& f) {
    if (f.is_zero()) return {};
    std::vector<mpz_class> even, odd;
    for (std::size_t i = 0; i < f.size(); ++i) (i % 2 ? odd : even).push_back(f.coeffs()[i]);
    IntPoly e(std::move(even)), o(std::move(odd));
    IntPoly g = e * e - polycore::shift(o * o, 1);
    return f.deg() % 2 ? -g : g;
}

unsigned mahler_auto_depth(std::size_t d) {
    unsigned c = 0;
    while ((std::size_t{1} << c) < d) ++c;
    return std::max(3u, c);
}

unsigned root_auto_depth(std::size_t d) { return mahler_auto_depth(d) + 1; }

namespace {

// Coefficient magnitudes in the shape the formula bounds need: an upper value
// for |a_i| (i < d) and a lower value for |a_d|.
struct Majorant {
    std::size_t d = 0;
    std::vector<Mp> upper;
    Mp lead;
};

// Successive Graeffe iterates.  Exact while the coefficients stay below the
// bit cap, then carried as balls; the leading coefficient is always known
// exactly as lc^(2^t).
class GraeffeChain {
public:
    GraeffeChain(const IntPoly& f, const Options& opt) : exact_(f), lc_(abs(f.lc())), opt_(opt) {}

    unsigned depth() const { return depth_; }

    void step() {
        if (balls_.empty() && exact_.max_coeff_bits() * 2 + 64 <= opt_.cap_bits) {
            exact_ = graeffe(exact_);
        } else {
            if (balls_.empty()) to_balls();
            ball_step();
        }
        ++depth_;
    }

    Majorant majorant() const {
        Majorant m;
        m.d = exact_.deg();
        m.upper.reserve(m.d);
        for (std::size_t i = 0; i < m.d; ++i) {
            Mp u(opt_.precision);
            if (balls_.empty())
                detail::set_abs_mpz(u, exact_.coeff(i), MPFR_RNDU);
            else
                detail::ball_abs_upper(u, balls_[i]);
            m.upper.push_back(u);
        }
        m.lead = Mp(opt_.precision);
        mpfr_set_z(m.lead.get(), lc_.get_mpz_t(), MPFR_RNDD);
        if (depth_ > 0) {
            // lc^(2^t) by repeated squaring, rounded down
            for (unsigned k = 0; k < depth_; ++k) mpfr_sqr(m.lead.get(), m.lead.get(), MPFR_RNDD);
        }
        return m;
    }

private:
    void to_balls() {
        balls_.clear();
        for (const auto& c : exact_.coeffs()) {
            Ball b(opt_.precision);
            detail::ball_set_mpz(b, c);
            balls_.push_back(b);
        }
    }

    void ball_step() {
        const std::size_t d = balls_.size() - 1;
        std::vector<Ball> next;
        next.reserve(d + 1);
        for (std::size_t k = 0; k <= d; ++k) next.emplace_back(opt_.precision);
        // E(y) = sum a_{2i} y^i, O(y) = sum a_{2i+1} y^i, g = (-1)^d (E^2 - y O^2)
        for (std::size_t i = 0; 2 * i <= d; ++i)
            for (std::size_t j = 0; 2 * j <= d; ++j) detail::ball_addmul(next[i + j], balls_[2 * i], balls_[2 * j], 1);
        for (std::size_t i = 0; 2 * i + 1 <= d; ++i)
            for (std::size_t j = 0; 2 * j + 1 <= d; ++j)
                detail::ball_addmul(next[i + j + 1], balls_[2 * i + 1], balls_[2 * j + 1], -1);
        if (d % 2)
            for (auto& b : next) mpfr_neg(b.mid.get(), b.mid.get(), MPFR_RNDN);
        balls_ = std::move(next);
    }

    IntPoly exact_;  // keeps the degree even after the switch
    std::vector<Ball> balls_;
    mpz_class lc_;
    Options opt_;
    unsigned depth_ = 0;
};

void check_degree(const IntPoly& f, const char* who) {
    if (f.is_zero() || f.deg() < 1) throw std::domain_error(std::string(who) + ": polynomial must be nonconstant");
}

// max_i (U_{d-i} / (L w_i))^(1/i), rounded up; w_i = C(d,i) or 1.
void ratio_root_max(Mp& out, const Majorant& m, bool binomial_weights) {
    const long prec = mpfr_get_prec(m.lead.get());
    mpfr_set_zero(out.get(), 1);
    Mp den(prec), r(prec);
    mpz_class binom = 1;
    for (std::size_t i = 1; i <= m.d; ++i) {
        binom = binom * static_cast<unsigned long>(m.d - i + 1) / static_cast<unsigned long>(i);
        const Mp& u = m.upper[m.d - i];
        if (mpfr_zero_p(u.get())) continue;
        mpfr_set(den.get(), m.lead.get(), MPFR_RNDD);
        if (binomial_weights) mpfr_mul_z(den.get(), den.get(), binom.get_mpz_t(), MPFR_RNDD);
        mpfr_div(r.get(), u.get(), den.get(), MPFR_RNDU);
        mpfr_rootn_ui(r.get(), r.get(), static_cast<unsigned long>(i), MPFR_RNDU);
        if (mpfr_cmp(r.get(), out.get()) > 0) mpfr_set(out.get(), r.get(), MPFR_RNDU);
    }
}

void knuth_of(Mp& out, const Majorant& m) {
    ratio_root_max(out, m, false);
    mpfr_mul_ui(out.get(), out.get(), 2, MPFR_RNDU);
}

void zassenhaus_of(Mp& out, const Majorant& m) {
    ratio_root_max(out, m, true);
    Mp c(mpfr_get_prec(m.lead.get()));
    mpfr_set_ui(c.get(), 2, MPFR_RNDN);
    mpfr_rootn_ui(c.get(), c.get(), static_cast<unsigned long>(m.d), MPFR_RNDD);
    mpfr_sub_ui(c.get(), c.get(), 1, MPFR_RNDD);
    mpfr_div(out.get(), out.get(), c.get(), MPFR_RNDU);
}

// L x^d - sum U_i x^i > 0, evaluated with the rounding against us.
bool above_root(const Majorant& m, const Mp& x) {
    const long prec = mpfr_get_prec(m.lead.get());
    Mp lo(prec), hi(prec), t(prec);
    mpfr_pow_ui(lo.get(), x.get(), static_cast<unsigned long>(m.d), MPFR_RNDD);
    mpfr_mul(lo.get(), lo.get(), m.lead.get(), MPFR_RNDD);
    mpfr_set_zero(hi.get(), 1);
    for (std::size_t i = m.d; i-- > 0;) {  // Horner, all terms nonnegative
        mpfr_mul(hi.get(), hi.get(), x.get(), MPFR_RNDU);
        mpfr_add(hi.get(), hi.get(), m.upper[i].get(), MPFR_RNDU);
    }
    return mpfr_cmp(lo.get(), hi.get()) > 0;
}

struct NewtonOutcome {
    Mp x;
    unsigned iters = 0;
    bool improved = false;
};

NewtonOutcome cauchy_newton(const Majorant& m, const Mp& start) {
    const long prec = mpfr_get_prec(m.lead.get());
    NewtonOutcome out{start, 0, false};
    if (mpfr_zero_p(start.get())) return out;

    Mp x(start), t(prec), dt(prec), step(prec), rel(prec), p(prec), dp(prec);
    for (unsigned it = 0; it < 64; ++it) {
        // p = sum_{i<d} U_i x^i, dp = its derivative
        mpfr_set_zero(p.get(), 1);
        mpfr_set_zero(dp.get(), 1);
        for (std::size_t i = m.d; i-- > 0;) {
            mpfr_mul(dp.get(), dp.get(), x.get(), MPFR_RNDN);
            mpfr_add(dp.get(), dp.get(), p.get(), MPFR_RNDN);
            mpfr_mul(p.get(), p.get(), x.get(), MPFR_RNDN);
            mpfr_add(p.get(), p.get(), m.upper[i].get(), MPFR_RNDN);
        }
        mpfr_pow_ui(t.get(), x.get(), static_cast<unsigned long>(m.d - 1), MPFR_RNDN);
        mpfr_mul(dt.get(), t.get(), m.lead.get(), MPFR_RNDN);
        mpfr_mul(t.get(), dt.get(), x.get(), MPFR_RNDN);      // L x^d
        mpfr_mul_ui(dt.get(), dt.get(), m.d, MPFR_RNDN);      // d L x^(d-1)
        mpfr_sub(t.get(), t.get(), p.get(), MPFR_RNDN);
        mpfr_sub(dt.get(), dt.get(), dp.get(), MPFR_RNDN);
        if (mpfr_sgn(t.get()) <= 0 || mpfr_sgn(dt.get()) <= 0) break;
        mpfr_div(step.get(), t.get(), dt.get(), MPFR_RNDN);
        mpfr_sub(x.get(), x.get(), step.get(), MPFR_RNDN);
        out.iters = it + 1;
        mpfr_div(rel.get(), step.get(), x.get(), MPFR_RNDN);
        if (mpfr_cmp_d(rel.get(), 0x1p-20) < 0) break;
    }

    // Final slack, then certify; back off toward the start if rounding
    // pushed the iterate onto the wrong side of the root.
    mpfr_mul_d(x.get(), x.get(), 1.0 + 0x1p-40, MPFR_RNDU);
    for (int k = 0; k < 16; ++k) {
        if (mpfr_cmp(x.get(), start.get()) >= 0) break;
        if (above_root(m, x)) {
            out.x = x;
            out.improved = true;
            return out;
        }
        mpfr_mul_d(x.get(), x.get(), 1.0 + 0x1p-20, MPFR_RNDU);
    }
    return out;
}

struct DepthBound {
    Mp value;
    RootMethod method;
    unsigned iters = 0;
};

DepthBound bound_at(const Majorant& m, bool use_cauchy) {
    const long prec = mpfr_get_prec(m.lead.get());
    Mp k(prec), z(prec);
    knuth_of(k, m);
    zassenhaus_of(z, m);
    DepthBound b{k, RootMethod::knuth, 0};
    if (mpfr_cmp(z.get(), k.get()) < 0) b = {z, RootMethod::zassenhaus, 0};
    if (use_cauchy) {
        NewtonOutcome n = cauchy_newton(m, b.value);
        if (n.improved) b = {n.x, RootMethod::cauchy_newton, n.iters};
    }
    return b;
}

// x^(2^-t), rounded up.
void root_pow2(Mp& x, unsigned t) {
    if (t == 0 || mpfr_zero_p(x.get())) return;
    mpfr_rootn_ui(x.get(), x.get(), 1UL << t, MPFR_RNDU);
}

}  // namespace

UpperReal knuth_bound(const IntPoly& f) {
    check_degree(f, "knuth_bound");
    GraeffeChain chain(f, Options{});
    Mp out(128);
    knuth_of(out, chain.majorant());
    return detail::to_upper(out);
}

UpperReal zassenhaus_bound(const IntPoly& f) {
    check_degree(f, "zassenhaus_bound");
    GraeffeChain chain(f, Options{});
    Mp out(128);
    zassenhaus_of(out, chain.majorant());
    return detail::to_upper(out);
}

RootBoundResult cauchy_bound(const IntPoly& f) {
    check_degree(f, "cauchy_bound");
    GraeffeChain chain(f, Options{});
    Majorant m = chain.majorant();
    DepthBound b = bound_at(m, true);
    return {detail::to_upper(b.value), b.method, 0, b.iters};
}

RootBoundResult refined_root_bound(const IntPoly& f, const Options& opt) {
    check_degree(f, "refined_root_bound");
    const std::size_t d = f.deg();
    const unsigned s = opt.depth.value_or(root_auto_depth(d));
    const bool use_cauchy = d <= 64;
    GraeffeChain chain(f, opt);
    RootBoundResult best;
    bool have = false;
    for (unsigned t = 0;; ++t) {
        DepthBound b = bound_at(chain.majorant(), use_cauchy);
        root_pow2(b.value, t);
        UpperReal v = detail::to_upper(b.value);
        if (!have || v < best.rho) {
            best = {v, t == 0 ? b.method : RootMethod::graeffe, t, b.iters};
            have = true;
        }
        if (t == s) break;
        chain.step();
    }
    return best;
}

MahlerEstimate mahler_upper(const IntPoly& f, const Options& opt) {
    if (f.is_zero()) throw std::domain_error("mahler_upper: zero polynomial");
    const std::size_t d = f.deg();
    if (d == 0) return {UpperReal::from_mpz(f.lc()), 0};
    const unsigned s = opt.depth.value_or(mahler_auto_depth(d));
    GraeffeChain chain(f, opt);
    MahlerEstimate best;
    bool have = false;
    Mp sum(opt.precision), sq(opt.precision);
    const mpz_class lc = abs(f.lc());
    for (unsigned t = 0;; ++t) {
        Majorant m = chain.majorant();
        // Majorant::lead is rounded down, so recompute lc^(2^t) upward here.
        mpfr_set_z(sq.get(), lc.get_mpz_t(), MPFR_RNDU);
        for (unsigned k = 0; k < t; ++k) mpfr_sqr(sq.get(), sq.get(), MPFR_RNDU);
        mpfr_sqr(sum.get(), sq.get(), MPFR_RNDU);
        for (const auto& u : m.upper) {
            mpfr_sqr(sq.get(), u.get(), MPFR_RNDU);
            mpfr_add(sum.get(), sum.get(), sq.get(), MPFR_RNDU);
        }
        mpfr_sqrt(sum.get(), sum.get(), MPFR_RNDU);
        root_pow2(sum, t);
        UpperReal v = detail::to_upper(sum);
        if (!have || v < best.upper) {
            best = {v, t};
            have = true;
        }
        if (t == s) break;
        chain.step();
    }
    return best;
}

}  // namespace rootbounds
