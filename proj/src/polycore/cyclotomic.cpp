#include "polycore/cyclotomic.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace polycore {

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> d{1};
    for (auto [p, e] : factor_u64(n)) {
        std::size_t base = d.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) d.push_back(d[i] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

int mobius(std::uint64_t n) {
    int m = 1;
    for (auto [p, e] : factor_u64(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto [p, e] : factor_u64(n)) r = r / p * (p - 1);
    return r;
}

namespace {

std::mutex memo_mutex;
std::unordered_map<std::uint64_t, std::unique_ptr<const IntPoly>>& memo() {
    static std::unordered_map<std::uint64_t, std::unique_ptr<const IntPoly>> table;
    return table;
}

IntPoly compute(std::uint64_t n) {
    if (n == 1) return IntPoly::from_ascending({-1, 1});
    auto f = factor_u64(n);
    std::uint64_t rad = 1;
    for (auto [p, e] : f) rad *= p;
    // phi_n(x) = phi_rad(x^(n/rad))
    if (rad != n) return substitute_power(cyclotomic(rad), static_cast<unsigned>(n / rad));
    // Square-free n = m p:  phi_n(x) = phi_m(x^p) / phi_m(x).
    std::uint64_t p = f.back().first;
    std::uint64_t m = n / p;
    const IntPoly& base = cyclotomic(m);
    auto q = exact_divide(substitute_power(base, static_cast<unsigned>(p)), base);
    if (!q) throw std::logic_error("cyclotomic: inexact division");
    return std::move(*q);
}

}  // namespace

const IntPoly& cyclotomic(std::uint64_t n) {
    if (n == 0) throw std::domain_error("cyclotomic: index must be positive");
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo().find(n);
        if (it != memo().end()) return *it->second;
    }
    // Computed outside the lock because compute() recurses into cyclotomic().
    auto value = std::make_unique<const IntPoly>(compute(n));
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto [it, inserted] = memo().emplace(n, std::move(value));
    return *it->second;
}

}  // namespace polycore
