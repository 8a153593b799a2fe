#include "mpfr_interval.hpp"

#include <cmath>

namespace rootbounds::detail {

void set_abs_mpz(Mp& out, const mpz_class& z, mpfr_rnd_t rnd) {
    mpfr_set_z(out.get(), z.get_mpz_t(), rnd == MPFR_RNDU ? (sgn(z) < 0 ? MPFR_RNDD : MPFR_RNDU)
                                                          : (sgn(z) < 0 ? MPFR_RNDU : MPFR_RNDD));
    mpfr_abs(out.get(), out.get(), MPFR_RNDN);  // exact
}

polycore::UpperReal to_upper(const Mp& v) {
    if (mpfr_zero_p(v.get())) return {};
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v.get(), MPFR_RNDU);
    // mpfr_get_d_2exp may return exactly 1.0 after rounding up; from_parts
    // renormalizes.
    return polycore::UpperReal::from_parts(m, e);
}

void from_upper(Mp& out, const polycore::UpperReal& u) {
    if (u.is_zero()) {
        mpfr_set_zero(out.get(), 1);
        return;
    }
    mpfr_set_d(out.get(), u.mantissa(), MPFR_RNDN);  // exact, 53 bits
    mpfr_mul_2si(out.get(), out.get(), static_cast<long>(u.exponent()), MPFR_RNDN);
}

void ball_abs_upper(Mp& out, const Ball& b) {
    mpfr_abs(out.get(), b.mid.get(), MPFR_RNDU);
    mpfr_add(out.get(), out.get(), b.rad.get(), MPFR_RNDU);
}

void ball_set_mpz(Ball& out, const mpz_class& z) {
    int inexact = mpfr_set_z(out.mid.get(), z.get_mpz_t(), MPFR_RNDN);
    if (inexact == 0) {
        mpfr_set_zero(out.rad.get(), 1);
        return;
    }
    // |error| <= ulp(mid)
    mpfr_set_ui_2exp(out.rad.get(), 1, mpfr_get_exp(out.mid.get()) - mpfr_get_prec(out.mid.get()), MPFR_RNDU);
}

void ball_addmul(Ball& acc, const Ball& a, const Ball& b, int sign) {
    const mpfr_prec_t prec = mpfr_get_prec(acc.mid.get());
    Mp prod(prec), t(64), u(64);

    // Radius of the product: |a| rb + |b| ra + ra rb.
    mpfr_abs(t.get(), a.mid.get(), MPFR_RNDU);
    mpfr_mul(t.get(), t.get(), b.rad.get(), MPFR_RNDU);
    mpfr_abs(u.get(), b.mid.get(), MPFR_RNDU);
    mpfr_mul(u.get(), u.get(), a.rad.get(), MPFR_RNDU);
    mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDU);
    mpfr_mul(u.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
    mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDU);

    int inexact = mpfr_mul(prod.get(), a.mid.get(), b.mid.get(), MPFR_RNDN);
    if (inexact != 0 && !mpfr_zero_p(prod.get())) {
        mpfr_set_ui_2exp(u.get(), 1, mpfr_get_exp(prod.get()) - prec, MPFR_RNDU);
        mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDU);
    }
    if (sign < 0) mpfr_neg(prod.get(), prod.get(), MPFR_RNDN);

    inexact = mpfr_add(acc.mid.get(), acc.mid.get(), prod.get(), MPFR_RNDN);
    if (inexact != 0 && !mpfr_zero_p(acc.mid.get())) {
        mpfr_set_ui_2exp(u.get(), 1, mpfr_get_exp(acc.mid.get()) - prec, MPFR_RNDU);
        mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDU);
    }
    mpfr_add(acc.rad.get(), acc.rad.get(), t.get(), MPFR_RNDU);
}

}  // namespace rootbounds::detail
