#include "bounds/bounds.hpp"

#include <stdexcept>

namespace bounds {

mpq_class l2_squared_of_product(const IntPoly& f, const std::vector<mpq_class>& h) {
    std::vector<mpq_class> prod(f.size() + h.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j) prod[i + j] += mpq_class(f.coeffs()[i]) * h[j];
    mpq_class s;
    for (const auto& c : prod) s += c * c;
    return s;
}

// Write h = x^D + sum_{j<D} c_j x^j.  With r_m = sum_i a_i a_{i+m} the Gram
// matrix of {x^j f} is Toeplitz, G_{jk} = r_{|j-k|}, and the normal equations
// read G c = -(r_{D-j})_j.
MinMultiple min_l2_multiple(const IntPoly& f, std::size_t dhat) {
    if (f.is_zero()) throw std::domain_error("min_l2_multiple: zero polynomial");
    if (dhat < 1) throw std::domain_error("min_l2_multiple: cofactor degree must be positive");
    const std::size_t n = f.size();
    std::vector<mpz_class> r(dhat + 1);
    for (std::size_t m = 0; m <= dhat && m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i) r[m] += f.coeffs()[i] * f.coeffs()[i + m];

    const std::size_t D = dhat;
    std::vector<std::vector<mpq_class>> a(D, std::vector<mpq_class>(D + 1));
    for (std::size_t j = 0; j < D; ++j) {
        for (std::size_t k = 0; k < D; ++k) a[j][k] = r[j > k ? j - k : k - j];
        a[j][D] = -r[D - j];
    }
    // Gaussian elimination; G is positive definite so pivots never vanish.
    for (std::size_t col = 0; col < D; ++col) {
        if (sgn(a[col][col]) == 0) throw std::logic_error("min_l2_multiple: singular Gram matrix");
        for (std::size_t row = col + 1; row < D; ++row) {
            if (sgn(a[row][col]) == 0) continue;
            mpq_class factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k <= D; ++k) a[row][k] -= factor * a[col][k];
        }
    }
    std::vector<mpq_class> c(D + 1);
    c[D] = 1;
    for (std::size_t j = D; j-- > 0;) {
        mpq_class s = a[j][D];
        for (std::size_t k = j + 1; k < D; ++k) s -= a[j][k] * c[k];
        c[j] = s / a[j][j];
    }
    MinMultiple out;
    out.cofactor = c;
    out.l2_squared = l2_squared_of_product(f, c);
    out.l2 = UpperReal::from_mpq(out.l2_squared).sqrt();
    return out;
}

}  // namespace bounds
