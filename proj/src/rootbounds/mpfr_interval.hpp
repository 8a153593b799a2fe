#pragma once

// Private helpers for the root bound code: an RAII wrapper over mpfr_t and a
// midpoint-radius ball used once exact Graeffe iterates grow too large.

#include "polycore/upper_real.hpp"

#include <gmpxx.h>
#include <mpfr.h>

namespace rootbounds::detail {

class Mp {
public:
    explicit Mp(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Mp(const Mp& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Mp& operator=(const Mp& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ~Mp() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

// |z| rounded in the given direction.
void set_abs_mpz(Mp& out, const mpz_class& z, mpfr_rnd_t rnd);

// Converts a nonnegative MPFR value to an UpperReal, rounding upward.
polycore::UpperReal to_upper(const Mp& v);
// Lower MPFR value of an UpperReal (exact: the mantissa fits in a double).
void from_upper(Mp& out, const polycore::UpperReal& u);

// Enclosure mid +- rad of a real number.
struct Ball {
    explicit Ball(mpfr_prec_t prec = 128) : mid(prec), rad(64) {}
    Mp mid;
    Mp rad;  // always rounded up
};

// Upper bound on |b|.
void ball_abs_upper(Mp& out, const Ball& b);
// acc += sign * a * b, enclosure preserved.
void ball_addmul(Ball& acc, const Ball& a, const Ball& b, int sign);
void ball_set_mpz(Ball& out, const mpz_class& z);

}  // namespace rootbounds::detail
