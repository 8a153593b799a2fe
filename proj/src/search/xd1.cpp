#include "search/xd1.hpp"

#include "parallel.hpp"
#include "polycore/cyclotomic.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace search {

using polycore::cyclotomic;

namespace {

using i64 = long long;
constexpr i64 kLimit = i64(1) << 62;

struct Sparse {
    std::vector<std::pair<std::size_t, i64>> terms;
    std::size_t deg = 0;
};

Sparse to_sparse(const IntPoly& p) {
    Sparse s;
    s.deg = p.deg();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (sgn(p.coeffs()[i]) == 0) continue;
        if (!p.coeffs()[i].fits_slong_p()) throw std::overflow_error("cyclotomic coefficient exceeds 64 bits");
        s.terms.emplace_back(i, p.coeffs()[i].get_si());
    }
    return s;
}

std::vector<i64> mul_sparse(const std::vector<i64>& a, const Sparse& b) {
    std::vector<__int128> acc(a.size() + b.deg, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (auto [j, c] : b.terms) acc[i + j] += static_cast<__int128>(a[i]) * c;
    std::vector<i64> r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i] >= kLimit || acc[i] <= -kLimit) throw std::overflow_error("x^d-1 factor height exceeds 2^62");
        r[i] = static_cast<i64>(acc[i]);
    }
    return r;
}

i64 max_abs(const std::vector<i64>& v) {
    i64 h = 0;
    for (i64 c : v) h = std::max(h, c < 0 ? -c : c);
    return h;
}

struct SubsetBest {
    i64 height = 0;
    std::vector<std::uint32_t> masks;

    void offer(i64 h, std::uint32_t mask) {
        if (h < height) return;
        if (h > height) {
            height = h;
            masks.clear();
        }
        masks.push_back(mask);
    }
};

void subset_dfs(const std::vector<Sparse>& cyc, std::size_t level, std::uint32_t mask, const std::vector<i64>& cur,
                SubsetBest& out) {
    if (level == cyc.size()) {
        if (mask != 0) out.offer(max_abs(cur), mask);
        return;
    }
    subset_dfs(cyc, level + 1, mask, cur, out);
    subset_dfs(cyc, level + 1, mask | (1u << level), mul_sparse(cur, cyc[level]), out);
}

}  // namespace

IntPoly cyclotomic_product(const std::vector<std::uint64_t>& indices) {
    IntPoly p = IntPoly::constant(1);
    for (auto n : indices) p = p * cyclotomic(n);
    return p;
}

Xd1Result xd1_subset_search(std::uint64_t d, unsigned divisor_cap, unsigned workers) {
    if (d == 0) throw std::domain_error("xd1_subset_search: d must be positive");
    const auto divs = polycore::divisors(d);
    if (divs.size() > divisor_cap || divs.size() > 31)
        throw std::domain_error("xd1_subset_search: " + std::to_string(d) + " has " + std::to_string(divs.size()) +
                                " divisors, over the cap of " + std::to_string(divisor_cap));
    std::vector<Sparse> cyc;
    for (auto n : divs) cyc.push_back(to_sparse(cyclotomic(n)));

    // Split on the choices for the largest divisors; the rest is a serial DFS.
    const std::size_t split = std::min<std::size_t>(divs.size(), 6);
    const std::size_t tail = divs.size() - split;
    std::vector<Sparse> tail_cyc(cyc.begin(), cyc.begin() + static_cast<long>(tail));
    const std::size_t tasks = std::size_t(1) << split;
    std::vector<SubsetBest> locals(std::max(1u, workers));
    detail::parallel_for(
        tasks, workers,
        [&](std::size_t t, unsigned w) {
            std::vector<i64> start{1};
            std::uint32_t high = 0;
            for (std::size_t b = 0; b < split; ++b)
                if (t >> b & 1) {
                    start = mul_sparse(start, cyc[tail + b]);
                    high |= 1u << (tail + b);
                }
            SubsetBest local;
            subset_dfs(tail_cyc, 0, high, start, local);
            for (auto m : local.masks) locals[w].offer(local.height, m);
        },
        1);

    SubsetBest best;
    for (auto& l : locals)
        for (auto m : l.masks) best.offer(l.height, m);

    Xd1Result r;
    r.d = d;
    r.height = static_cast<long>(best.height);
    for (auto m : best.masks) {
        std::vector<std::uint64_t> idx;
        for (std::size_t j = 0; j < divs.size(); ++j)
            if (m >> j & 1) idx.push_back(divs[j]);
        r.maximizers.push_back(std::move(idx));
    }
    std::sort(r.maximizers.begin(), r.maximizers.end());
    r.factor = cyclotomic_product(r.maximizers.front());
    return r;
}

namespace {

// Lower half of phi_n for odd squarefree n > 1 from
// phi_n = prod_{e | n} (1 - x^e)^mu(n/e) as a truncated power series.
// Returns nullopt on 64-bit overflow.
std::optional<i64> series_height(std::uint64_t n) {
    const std::size_t len = polycore::euler_phi(n) / 2 + 1;
    std::vector<i64> c(len, 0);
    c[0] = 1;
    for (auto e : polycore::divisors(n)) {
        const int mu = polycore::mobius(n / e);
        if (mu == 0 || e >= len) continue;
        if (mu > 0) {
            for (std::size_t i = len; i-- > e;)
                if (__builtin_sub_overflow(c[i], c[i - e], &c[i])) return std::nullopt;
        } else {
            for (std::size_t i = e; i < len; ++i)
                if (__builtin_add_overflow(c[i], c[i - e], &c[i])) return std::nullopt;
        }
    }
    i64 h = 0;
    for (i64 v : c) {
        if (v == std::numeric_limits<i64>::min()) return std::nullopt;
        h = std::max(h, v < 0 ? -v : v);
    }
    return h;
}

// Odd part of the radical; phi_n and phi_m share their height.
std::uint64_t height_core(std::uint64_t n, unsigned& prime_count) {
    std::uint64_t m = 1;
    prime_count = 0;
    for (auto [p, e] : polycore::factor_u64(n)) {
        if (p == 2) continue;
        m *= p;
        ++prime_count;
    }
    return m;
}

}  // namespace

mpz_class cyclotomic_height(std::uint64_t n) {
    if (n == 0) throw std::domain_error("cyclotomic_height: index must be positive");
    unsigned k = 0;
    const std::uint64_t m = height_core(n, k);
    if (k <= 2) return 1;  // binary cyclotomic polynomials have height 1
    if (auto h = series_height(m)) return static_cast<long>(*h);
    return polycore::height(cyclotomic(m));
}

std::vector<HeightRecord> cyclo_height_records(std::uint64_t max_index, unsigned workers) {
    if (max_index == 0) throw std::domain_error("cyclo_height_records: max_index must be positive");
    // Only odd squarefree indices with three or more primes can set a record;
    // every other index repeats the height of a smaller one.
    std::vector<std::uint64_t> cand;
    for (std::uint64_t n = 105; n <= max_index; n += 2) {
        unsigned k = 0;
        if (height_core(n, k) == n && k >= 3) cand.push_back(n);
    }
    std::vector<mpz_class> h(cand.size());
    detail::parallel_for(cand.size(), workers, [&](std::size_t i, unsigned) { h[i] = cyclotomic_height(cand[i]); });

    std::vector<HeightRecord> out;
    mpz_class best = 1;
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (h[i] > best) {
            best = h[i];
            out.push_back({h[i], cand[i]});
        }
    return out;
}

}  // namespace search
