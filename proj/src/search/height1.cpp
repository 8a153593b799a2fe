#include "search/height1.hpp"

#include <cmath>
#include <stdexcept>

namespace search {

namespace {

using i128 = __int128;

struct Dfs {
    unsigned n;
    std::size_t D;
    std::vector<std::size_t> order;           // position filled at each step
    std::vector<std::vector<i128>> signed_pw;  // signed_pw[k][j] = (-1)^k t_k^j
    std::vector<std::vector<i128>> slack;      // slack[s][j] = sum over order[s..] of |t|^j
    std::vector<int> c;
    std::vector<i128> moment;
    std::uint64_t nodes = 0;

    Dfs(unsigned n_, std::size_t D_) : n(n_), D(D_), c(D_ + 1, 0), moment(n_, 0) {
        for (std::size_t a = 0, b = D; a <= b; ++a, --b) {
            order.push_back(a);
            if (b != a) order.push_back(b);
            if (b == 0) break;
        }
        signed_pw.assign(D + 1, std::vector<i128>(n));
        for (std::size_t k = 0; k <= D; ++k) {
            const i128 t = 2 * static_cast<i128>(k) - static_cast<i128>(D);
            i128 p = (k % 2 == 0) ? 1 : -1;
            for (unsigned j = 0; j < n; ++j) {
                signed_pw[k][j] = p;
                p *= t;
            }
        }
        slack.assign(order.size() + 1, std::vector<i128>(n, 0));
        for (std::size_t s = order.size(); s-- > 0;)
            for (unsigned j = 0; j < n; ++j) {
                i128 v = signed_pw[order[s]][j];
                slack[s][j] = slack[s + 1][j] + (v < 0 ? -v : v);
            }
    }

    void apply(std::size_t k, int v) {
        for (unsigned j = 0; j < n; ++j) moment[j] += v * signed_pw[k][j];
    }

    bool run(std::size_t step) {
        ++nodes;
        for (unsigned j = 0; j < n; ++j) {
            i128 m = moment[j] < 0 ? -moment[j] : moment[j];
            if (m > slack[step][j]) return false;
        }
        if (step == order.size()) return true;  // all moments are zero here
        const std::size_t k = order[step];
        const int lo = (k == D) ? 1 : -1;
        for (int v = lo; v <= 1; ++v) {
            if (k == 0 && v == 0) continue;
            c[k] = v;
            if (v) apply(k, v);
            if (run(step + 1)) return true;
            if (v) apply(k, -v);
            c[k] = 0;
        }
        return false;
    }
};

}  // namespace

Height1Result height1_multiple_search(unsigned n, std::size_t max_degree) {
    if (n < 1) throw std::domain_error("height1_multiple_search: n must be positive");
    // Moments are bounded by (D+1) D^(n-1); keep them well inside 128 bits.
    if (max_degree >= n && std::log2(static_cast<double>(max_degree) + 1) * n > 120)
        throw std::domain_error("height1_multiple_search: degree cap too large for 128-bit moments");

    Height1Result r;
    r.n = n;
    r.first_degree = n;
    for (std::size_t D = n; D <= max_degree; ++D) {
        Dfs dfs(n, D);
        bool hit = dfs.run(0);
        r.nodes.push_back(dfs.nodes);
        if (hit) {
            std::vector<long long> asc(dfs.c.begin(), dfs.c.end());
            r.witness = IntPoly::from_ascending(asc);
            return r;
        }
        r.exhausted_through = D;
        r.exhausted_any = true;
    }
    return r;
}

}  // namespace search
