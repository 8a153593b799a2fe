#include "bounds/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace bounds {

using polycore::binomial;

std::string to_string(Method m) {
    switch (m) {
        case Method::binomial: return "binomial";
        case Method::mignotte: return "mignotte";
        case Method::knuth_cohen: return "knuth_cohen";
        case Method::beauzamy: return "beauzamy";
        case Method::combined: return "combined";
    }
    return "unknown";
}

Method method_from_string(const std::string& s) {
    if (s == "binomial") return Method::binomial;
    if (s == "mignotte") return Method::mignotte;
    if (s == "knuth_cohen" || s == "knuth-cohen" || s == "kc") return Method::knuth_cohen;
    if (s == "beauzamy") return Method::beauzamy;
    throw std::invalid_argument("unknown bound method: " + s);
}

BoundVector make_vector(std::size_t delta, std::vector<mpz_class> entries, Method m) {
    if (entries.size() != delta + 1) throw std::logic_error("bound vector length mismatch");
    BoundVector v{delta, std::move(entries), 0, m};
    for (const auto& e : v.entries) {
        if (sgn(e) < 0) throw std::logic_error("negative bound entry");
        if (e > v.overall) v.overall = e;
    }
    return v;
}

Inputs compute_inputs(const IntPoly& f, const rootbounds::Options& opt) {
    if (f.is_zero() || f.deg() < 1) throw std::domain_error("bounds need a nonconstant polynomial");
    if (sgn(f.tc()) == 0) throw std::domain_error("bounds need a nonzero trailing coefficient");
    Inputs in;
    in.degree = f.deg();
    in.lc = abs(f.lc());
    in.tc = abs(f.tc());
    IntPoly rev = polycore::reverse(f);
    in.rho = rootbounds::refined_root_bound(f, opt).rho;
    in.rho_bar = rootbounds::refined_root_bound(rev, opt).rho;
    in.mahler = polycore::min(rootbounds::mahler_upper(f, opt).upper, rootbounds::mahler_upper(rev, opt).upper);
    in.l2 = polycore::l2_norm(f);
    in.bombieri = polycore::bombieri_norm(f);
    return in;
}

namespace {

void check_delta(const Inputs& in, std::size_t delta) {
    if (delta < 1 || delta > in.degree)
        throw std::domain_error("factor degree " + std::to_string(delta) + " outside [1, " +
                                std::to_string(in.degree) + "]");
}

IntPoly checked(const IntPoly& f) {
    if (f.is_zero() || f.deg() < 1) throw std::domain_error("bounds need a nonconstant polynomial");
    return f;
}

}  // namespace

BoundVector binomial_vector(const Inputs& in, std::size_t delta) {
    check_delta(in, delta);
    std::vector<mpz_class> e(delta + 1);
    for (std::size_t i = 0; i <= delta; ++i) {
        mpz_class c = binomial(delta, i);
        UpperReal top = UpperReal::from_mpz(in.lc * c) * in.rho.pow(static_cast<unsigned>(delta - i));
        UpperReal bottom = UpperReal::from_mpz(in.tc * c) * in.rho_bar.pow(static_cast<unsigned>(i));
        e[i] = polycore::min(top, bottom).floor();
    }
    return make_vector(delta, std::move(e), Method::binomial);
}

BoundVector mignotte_vector(const Inputs& in, std::size_t delta) {
    check_delta(in, delta);
    std::vector<mpz_class> e(delta + 1);
    for (std::size_t i = 0; i <= delta; ++i) e[i] = (UpperReal::from_mpz(binomial(delta, i)) * in.mahler).floor();
    return make_vector(delta, std::move(e), Method::mignotte);
}

namespace {

// The plain formula with the i = 0 rule; `lead` and `trail` are the absolute
// leading and trailing coefficients of the polynomial it is applied to.
std::vector<mpz_class> kc_plain(const UpperReal& l2, const mpz_class& lead, const mpz_class& trail,
                                std::size_t delta) {
    std::vector<mpz_class> e(delta + 1);
    e[0] = trail;
    for (std::size_t i = 1; i <= delta; ++i) {
        UpperReal v = UpperReal::from_mpz(binomial(delta - 1, i)) * l2 + UpperReal::from_mpz(binomial(delta - 1, i - 1) * lead);
        e[i] = v.floor();
    }
    return e;
}

}  // namespace

BoundVector knuth_cohen_vector(const Inputs& in, std::size_t delta) {
    check_delta(in, delta);
    // |reverse(f)|_2 == |f|_2, and reversal swaps lc and tc.
    std::vector<mpz_class> direct = kc_plain(in.l2, in.lc, in.tc, delta);
    std::vector<mpz_class> flipped = kc_plain(in.l2, in.tc, in.lc, delta);
    std::reverse(flipped.begin(), flipped.end());
    for (std::size_t i = 0; i <= delta; ++i)
        if (flipped[i] < direct[i]) direct[i] = flipped[i];
    return make_vector(delta, std::move(direct), Method::knuth_cohen);
}

BoundVector beauzamy_vector(const Inputs& in, std::size_t delta) {
    check_delta(in, delta);
    const mpz_class outer = binomial(in.degree, delta);
    std::vector<mpz_class> e(delta + 1);
    for (std::size_t i = 0; i <= delta; ++i) {
        mpq_class half(binomial(delta, i) * outer, 2);
        e[i] = (UpperReal::from_mpq(half).sqrt() * in.bombieri).floor();
    }
    return make_vector(delta, std::move(e), Method::beauzamy);
}

BoundVector binomial_vector(const IntPoly& f, std::size_t delta) { return binomial_vector(compute_inputs(checked(f)), delta); }
BoundVector mignotte_vector(const IntPoly& f, std::size_t delta) { return mignotte_vector(compute_inputs(checked(f)), delta); }
BoundVector knuth_cohen_vector(const IntPoly& f, std::size_t delta) {
    return knuth_cohen_vector(compute_inputs(checked(f)), delta);
}
BoundVector beauzamy_vector(const IntPoly& f, std::size_t delta) { return beauzamy_vector(compute_inputs(checked(f)), delta); }

BoundVector binomial_vector_refined(const std::vector<UpperReal>& rhos, const mpz_class& lc_abs, std::size_t delta) {
    if (delta < 1) throw std::domain_error("factor degree must be positive");
    if (rhos.size() < delta) throw std::domain_error("need at least delta root bounds");
    for (std::size_t j = 1; j < rhos.size(); ++j)
        if (rhos[j - 1] < rhos[j]) throw std::domain_error("root bounds must be sorted in descending order");
    // Expand prod (x + rho_j) with upward-rounded nonnegative arithmetic.
    std::vector<UpperReal> c(1, UpperReal::exact(1.0));
    for (std::size_t j = 0; j < delta; ++j) {
        std::vector<UpperReal> n(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            n[k + 1] += c[k];
            n[k] += c[k] * rhos[j];
        }
        c = std::move(n);
    }
    UpperReal lc = UpperReal::from_mpz(lc_abs);
    std::vector<mpz_class> e(delta + 1);
    for (std::size_t i = 0; i <= delta; ++i) e[i] = (c[i] * lc).floor();
    return make_vector(delta, std::move(e), Method::binomial);
}

const std::vector<Method>& default_methods() {
    static const std::vector<Method> m{Method::binomial, Method::mignotte, Method::knuth_cohen, Method::beauzamy};
    return m;
}

BoundReport combined_report(const Inputs& in, std::size_t delta, const std::vector<Method>& methods) {
    check_delta(in, delta);
    if (methods.empty()) throw std::domain_error("no bound method selected");
    BoundReport r;
    r.inputs = in;
    for (Method m : methods) {
        switch (m) {
            case Method::binomial: r.methods.push_back(binomial_vector(in, delta)); break;
            case Method::mignotte: r.methods.push_back(mignotte_vector(in, delta)); break;
            case Method::knuth_cohen: r.methods.push_back(knuth_cohen_vector(in, delta)); break;
            case Method::beauzamy: r.methods.push_back(beauzamy_vector(in, delta)); break;
            case Method::combined: throw std::domain_error("combined is not a base method");
        }
    }
    std::vector<mpz_class> e = r.methods.front().entries;
    for (const auto& v : r.methods)
        for (std::size_t i = 0; i <= delta; ++i)
            if (v.entries[i] < e[i]) e[i] = v.entries[i];
    r.combined = make_vector(delta, std::move(e), Method::combined);
    return r;
}

BoundReport combined_report(const IntPoly& f, std::size_t delta, const std::vector<Method>& methods,
                            const rootbounds::Options& opt) {
    return combined_report(compute_inputs(checked(f), opt), delta, methods);
}

}  // namespace bounds
