#include "search/pair_search.hpp"

#include "polycore/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace search {

std::string to_string(Symmetry s) {
    switch (s) {
        case Symmetry::none: return "none";
        case Symmetry::palindromic: return "palindromic";
        case Symmetry::star_symmetric: return "star";
        case Symmetry::palindromic_star_symmetric: return "both";
    }
    return "unknown";
}

Symmetry symmetry_from_string(const std::string& s) {
    if (s == "none") return Symmetry::none;
    if (s == "palindromic") return Symmetry::palindromic;
    if (s == "star" || s == "star_symmetric") return Symmetry::star_symmetric;
    if (s == "both" || s == "palindromic_star_symmetric") return Symmetry::palindromic_star_symmetric;
    throw std::invalid_argument("unknown symmetry: " + s);
}

std::string to_string(Objective o) { return o == Objective::max_ratio ? "max_ratio" : "max_factor_height"; }

namespace {

using Vec = std::vector<long>;  // ascending coefficients

long vheight(const Vec& v) {
    long h = 0;
    for (long c : v) h = std::max(h, c < 0 ? -c : c);
    return h;
}

Vec vmul(const Vec& a, const Vec& b) {
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Vec vnormalize(Vec v) {
    if (v.back() < 0)
        for (long& c : v) c = -c;
    return v;
}

Vec vneg_x(Vec v) {
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return v;
}

Vec vrev(Vec v) {
    std::reverse(v.begin(), v.end());
    return v;
}

Vec vstar(const Vec& v) { return vnormalize(vneg_x(vrev(v))); }

// Descending lexicographic order; equal sizes assumed by callers except
// where sizes differ, in which case lower degree comes first.
int vcompare(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool is_canonical(const Vec& g) {
    Vec n = vnormalize(vneg_x(g));
    if (vcompare(n, g) < 0) return false;
    Vec r = vnormalize(vrev(g));
    if (vcompare(r, g) < 0) return false;
    Vec rn = vnormalize(vneg_x(r));
    return vcompare(rn, g) >= 0;
}

IntPoly to_poly(const Vec& v) {
    std::vector<long long> c(v.begin(), v.end());
    return IntPoly::from_ascending(c);
}

Vec to_vec(const IntPoly& p) {
    Vec v;
    for (const auto& c : p.coeffs()) v.push_back(c.get_si());
    return v;
}

// ---- weak irreducibility on machine integers -------------------------------

struct CycloTable {
    std::vector<std::pair<unsigned, Vec>> polys;  // (n, phi_n) with phi(n) small
};

const CycloTable& cyclo_table() {
    static const CycloTable t = [] {
        CycloTable c;
        for (unsigned n = 1; n <= 105; ++n)
            if (polycore::euler_phi(n) <= 64) c.polys.emplace_back(n, to_vec(polycore::cyclotomic(n)));
        return c;
    }();
    return t;
}

void divisors_of(long n, std::vector<long>& out) {
    out.clear();
    n = n < 0 ? -n : n;
    for (long k = 1; k * k <= n; ++k)
        if (n % k == 0) {
            out.push_back(k);
            if (k * k != n) out.push_back(n / k);
        }
}

bool has_rational_root(const Vec& f) {
    const std::size_t d = f.size() - 1;
    std::vector<long> ps, qs;
    divisors_of(f[0], ps);
    divisors_of(f[d], qs);
    for (long p0 : ps)
        for (long q : qs) {
            if (std::__gcd(p0, q) != 1) continue;
            for (long p : {p0, -p0}) {
                __int128 r = f[d], qpow = 1;
                for (std::size_t i = d; i-- > 0;) {
                    qpow *= q;
                    r = r * p + static_cast<__int128>(f[i]) * qpow;
                }
                if (r == 0) return true;
            }
        }
    return false;
}

bool divisible_monic(const Vec& f, const Vec& g) {
    std::vector<__int128> r(f.begin(), f.end());
    const std::size_t m = g.size() - 1;
    for (std::size_t i = f.size() - 1; i >= m; --i) {
        __int128 c = r[i];
        if (c != 0)
            for (std::size_t j = 0; j <= m; ++j) r[i - m + j] -= c * g[j];
        if (i == m) break;
    }
    for (std::size_t j = 0; j < m; ++j)
        if (r[j] != 0) return false;
    return true;
}

bool weak_ok(const Vec& f) {
    const std::size_t d = f.size() - 1;
    if (d <= 1) return d == 1;
    if (d > 40) return weak_irreducibility(to_poly(f)).passed;
    if (f[0] == 0 || has_rational_root(f)) return false;
    for (const auto& [n, phi] : cyclo_table().polys)
        if (phi.size() - 1 < d && divisible_monic(f, phi)) return false;
    return true;
}

// ---- enumeration -----------------------------------------------------------

struct Found {
    Vec g1, g2;
    mpq_class value;
};

// Calls fn(v) for every coefficient vector of degree n with lc in
// [1, lc_max], tc in [-tc_max, tc_max] \ {0} and the rest in [-h, h]; when
// `palindromic` only +-palindromic vectors are produced.
template <class Fn>
void enumerate_first(std::size_t n, long h, long lc_max, long tc_max, bool palindromic, Fn&& fn) {
    Vec v(n + 1, 0);
    if (!palindromic) {
        // odometer over positions 0..n
        std::vector<long> lo(n + 1, -h), hi(n + 1, h);
        lo[n] = 1;
        hi[n] = lc_max;
        lo[0] = -tc_max;
        hi[0] = tc_max;
        if (n == 0) return;
        for (std::size_t i = 0; i <= n; ++i) v[i] = lo[i];
        for (;;) {
            if (v[0] != 0) fn(v);
            std::size_t i = 0;
            while (i <= n) {
                if (v[i] < hi[i]) {
                    ++v[i];
                    break;
                }
                v[i] = lo[i];
                ++i;
            }
            if (i > n) return;
        }
    }
    // Palindromic: choose v[0..n/2] and a sign s with v[n-i] = s v[i].
    const std::size_t half = n / 2;
    for (int s : {1, -1}) {
        std::vector<long> lo(half + 1, -h), hi(half + 1, h);
        // lc = s * v[0] must lie in [1, lc_max], and |tc| = |v[0]| <= tc_max
        long m = std::min(lc_max, tc_max);
        if (s > 0) {
            lo[0] = 1;
            hi[0] = m;
        } else {
            lo[0] = -m;
            hi[0] = -1;
        }
        if (n % 2 == 0 && s < 0) lo[half] = hi[half] = 0;
        if (n == 0) continue;
        std::vector<long> u(half + 1);
        for (std::size_t i = 0; i <= half; ++i) u[i] = lo[i];
        if (half == 0 && lo[0] > hi[0]) continue;
        for (;;) {
            for (std::size_t i = 0; i <= half; ++i) {
                v[i] = u[i];
                v[n - i] = s * u[i];
            }
            if (n % 2 == 0 && s < 0) v[half] = 0;
            fn(v);
            std::size_t i = 0;
            while (i <= half) {
                if (u[i] < hi[i]) {
                    ++u[i];
                    break;
                }
                u[i] = lo[i];
                ++i;
            }
            if (i > half) break;
        }
    }
}

struct RoundParams {
    std::size_t a = 0, b = 0;
    long P = 1;      // exact product height required
    long H = 1;      // factor coefficient cap
    mpq_class floor_value;  // frozen best at the start of the round
    Symmetry sym = Symmetry::none;
    Objective obj = Objective::max_ratio;
    bool irreducible = false;
};

struct Local {
    mpq_class best = -1;
    std::vector<Found> found;
    std::uint64_t candidates = 0, leaves = 0;

    void offer(Found&& f) {
        if (f.value < best) return;
        if (f.value > best) {
            best = f.value;
            found.clear();
        }
        found.push_back(std::move(f));
    }
};

// Value of a completed pair, or nullopt when it does not qualify.
std::optional<mpq_class> pair_value(const RoundParams& rp, const Vec& g1, const Vec& g2, long P,
                                    bool g1_weak_ok, const mpq_class& threshold) {
    long h1 = vheight(g1), h2 = vheight(g2);
    if (rp.obj == Objective::max_ratio) {
        mpq_class v(std::min(h1, h2), P);
        v.canonicalize();
        if (v < threshold) return std::nullopt;
        if (rp.irreducible && !(g1_weak_ok && weak_ok(g2))) return std::nullopt;
        return v;
    }
    // The larger qualifying factor counts; the cofactor is unrestricted.
    long best = -1;
    if (!rp.irreducible || g1_weak_ok) best = h1;
    if (h2 > best && mpq_class(h2) >= threshold && (!rp.irreducible || weak_ok(g2))) best = h2;
    if (best < 0 || mpq_class(best) < threshold) return std::nullopt;
    return mpq_class(best);
}

// Depth-first completion of g2 for a fixed g1 so that every product
// coefficient has |f_k| <= P and the height is exactly P.
class Completion {
public:
    Completion(const RoundParams& rp, const Vec& g1, bool g1_weak, Local& out)
        : rp_(rp), g1_(g1), g1_weak_(g1_weak), out_(out), g2_(rp.b + 1, 0) {}

    void run() {
        const bool pal = rp_.sym == Symmetry::palindromic;
        if (pal) {
            for (int s : {1, -1}) {
                sign2_ = s;
                dfs(0, 0);
            }
        } else {
            dfs(0, 0);
        }
    }

private:
    const RoundParams& rp_;
    const Vec& g1_;
    bool g1_weak_;
    Local& out_;
    Vec g2_;
    int sign2_ = 1;

    void try_value(std::size_t k, long v, long S, long fmax) {
        long fk = g1_[0] * v + S;
        long afk = fk < 0 ? -fk : fk;
        if (afk > rp_.P) return;
        g2_[k] = v;
        dfs(k + 1, std::max(fmax, afk));
        g2_[k] = 0;
    }

    void dfs(std::size_t k, long fmax) {
        const std::size_t a = rp_.a, b = rp_.b;
        if (k > b) {
            leaf(fmax);
            return;
        }
        long S = 0;
        for (std::size_t i = 1; i <= std::min(k, a); ++i) S += g1_[i] * g2_[k - i];
        const bool pal = rp_.sym == Symmetry::palindromic;
        if (pal && 2 * k > b) {
            long v = sign2_ * g2_[b - k];
            if (k == b && v <= 0) return;
            try_value(k, v, S, fmax);
            return;
        }
        // -P <= g1_0 v + S <= P
        long c = g1_[0];
        long num_lo = -rp_.P - S, num_hi = rp_.P - S;
        if (c < 0) {
            std::swap(num_lo, num_hi);
            num_lo = -num_lo;
            num_hi = -num_hi;
            c = -c;
        }
        auto fdiv = [](long x, long y) { return x >= 0 ? x / y : -((-x + y - 1) / y); };
        long lo = -fdiv(-num_lo, c);  // ceil
        long hi = fdiv(num_hi, c);
        lo = std::max(lo, -rp_.H);
        hi = std::min(hi, rp_.H);
        if (k == b) lo = std::max(lo, 1L);
        if (pal && 2 * k == b && sign2_ < 0) {
            if (lo <= 0 && 0 <= hi) try_value(k, 0, S, fmax);
            return;
        }
        for (long v = lo; v <= hi; ++v) {
            if (k == 0 && v == 0) continue;
            if (pal && k == 0 && sign2_ * v <= 0) continue;  // lc = sign * g2_0 > 0
            try_value(k, v, S, fmax);
        }
    }

    void leaf(long fmax) {
        const std::size_t a = rp_.a, b = rp_.b, d = a + b;
        for (std::size_t k = b + 1; k <= d; ++k) {
            long fk = 0;
            for (std::size_t i = k - b; i <= a; ++i) fk += g1_[i] * g2_[k - i];
            long afk = fk < 0 ? -fk : fk;
            if (afk > rp_.P) return;
            fmax = std::max(fmax, afk);
        }
        ++out_.leaves;
        if (fmax != rp_.P) return;
        mpq_class thr = std::max(out_.best, rp_.floor_value);
        auto v = pair_value(rp_, g1_, g2_, rp_.P, g1_weak_, thr);
        if (v) out_.offer(Found{g1_, g2_, *v});
    }
};

template <class Work>
void run_parallel(std::size_t count, unsigned workers, std::vector<Local>& locals, Work&& work) {
    workers = std::max(1u, workers);
    locals.assign(workers, Local{});
    std::atomic<std::size_t> next{0};
    constexpr std::size_t chunk = 64;
    auto body = [&](unsigned w) {
        for (;;) {
            std::size_t start = next.fetch_add(chunk);
            if (start >= count) break;
            for (std::size_t i = start; i < std::min(count, start + chunk); ++i) work(i, locals[w]);
        }
    };
    if (workers == 1) {
        body(0);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
}

void merge_into(Local& global, std::vector<Local>& locals) {
    for (auto& l : locals) {
        global.candidates += l.candidates;
        global.leaves += l.leaves;
        for (auto& f : l.found) global.offer(std::move(f));
    }
}

SearchResult finish(Local& g) {
    SearchResult r;
    r.best = g.best < 0 ? mpq_class(0) : g.best;
    r.candidates = g.candidates;
    r.leaves = g.leaves;
    std::vector<std::pair<IntPoly, IntPoly>> pairs;
    for (const auto& f : g.found) pairs.push_back(canonical_pair(to_poly(f.g1), to_poly(f.g2)));
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
        int c = polycore::compare_descending(x.first, y.first);
        if (c != 0) return c < 0;
        return polycore::compare_descending(x.second, y.second) < 0;
    });
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (auto& [p, q] : pairs) r.maximizers.push_back(make_case({p, q}, "pair_search"));
    return r;
}

void validate(const SearchConfig& c) {
    if (c.degree < 2) throw std::domain_error("pair_search: product degree must be at least 2");
    if (c.height_cap < 1) throw std::domain_error("pair_search: height cap must be positive");
    if (c.product_height < 1) throw std::domain_error("pair_search: product height must be positive");
    for (auto [a, b] : c.splits)
        if (a < 1 || a > b || a + b != c.degree) throw std::domain_error("pair_search: invalid degree split");
    bool star = c.symmetry == Symmetry::star_symmetric || c.symmetry == Symmetry::palindromic_star_symmetric;
    if (star && c.degree % 2) throw std::domain_error("pair_search: *-symmetric search needs an even degree");
}

SearchResult star_search(const SearchConfig& cfg) {
    const std::size_t a = cfg.degree / 2;
    const long H = cfg.height_cap;
    const bool pal = cfg.symmetry == Symmetry::palindromic_star_symmetric;
    std::vector<Vec> firsts;
    enumerate_first(a, H, H, H, pal, [&](const Vec& v) {
        if (is_canonical(v)) firsts.push_back(v);
    });
    RoundParams rp;
    rp.a = rp.b = a;
    rp.H = H;
    rp.sym = cfg.symmetry;
    rp.obj = cfg.objective;
    rp.irreducible = cfg.require_weak_irreducible;
    std::vector<Local> locals;
    run_parallel(firsts.size(), cfg.workers, locals, [&](std::size_t i, Local& out) {
        const Vec& g1 = firsts[i];
        ++out.candidates;
        Vec g2 = vstar(g1);
        Vec f = vmul(g1, g2);
        long P = vheight(f);
        ++out.leaves;
        if (cfg.objective == Objective::max_factor_height && P != cfg.product_height) return;
        long h = vheight(g1);
        mpq_class v = cfg.objective == Objective::max_ratio ? mpq_class(h, P) : mpq_class(h);
        v.canonicalize();
        if (v < out.best) return;
        if (cfg.require_weak_irreducible && !weak_ok(g1)) return;  // star(g) is irreducible with g
        out.offer(Found{g1, g2, v});
    });
    Local global;
    merge_into(global, locals);
    return finish(global);
}

}  // namespace

std::pair<IntPoly, IntPoly> canonical_pair(const IntPoly& g1, const IntPoly& g2) {
    using polycore::negate_x;
    using polycore::reverse;
    using polycore::sign_normalized;
    auto images = [](const IntPoly& g) {
        return std::vector<IntPoly>{sign_normalized(g), sign_normalized(negate_x(g)), sign_normalized(reverse(g)),
                                    sign_normalized(negate_x(reverse(g)))};
    };
    auto i1 = images(g1), i2 = images(g2);
    std::pair<IntPoly, IntPoly> best;
    bool have = false;
    auto consider = [&](const IntPoly& p, const IntPoly& q) {
        if (!have) {
            best = {p, q};
            have = true;
            return;
        }
        int c = polycore::compare_descending(p, best.first);
        if (c < 0 || (c == 0 && polycore::compare_descending(q, best.second) < 0)) best = {p, q};
    };
    for (std::size_t k = 0; k < 4; ++k) {
        if (g1.size() <= g2.size()) consider(i1[k], i2[k]);
        if (g2.size() <= g1.size()) consider(i2[k], i1[k]);
    }
    return best;
}

SearchResult pair_search(const SearchConfig& cfg) {
    validate(cfg);
    if (cfg.symmetry == Symmetry::star_symmetric || cfg.symmetry == Symmetry::palindromic_star_symmetric)
        return star_search(cfg);

    std::vector<std::pair<std::size_t, std::size_t>> splits = cfg.splits;
    if (splits.empty())
        for (std::size_t a = 1; 2 * a <= cfg.degree; ++a) splits.emplace_back(a, cfg.degree - a);
    const long H = cfg.height_cap;
    const bool pal = cfg.symmetry == Symmetry::palindromic;

    Local global;
    std::vector<long> heights;
    if (cfg.objective == Objective::max_factor_height) {
        heights.push_back(cfg.product_height);
    } else {
        const long cap = static_cast<long>(cfg.degree / 2 + 1) * H * H;  // no product can be taller
        for (long P = 1; P <= cap; ++P) heights.push_back(P);
    }

    for (long P : heights) {
        if (cfg.objective == Objective::max_ratio && global.best > 0 && mpq_class(H, P) < global.best) break;
        for (auto [a, b] : splits) {
            RoundParams rp;
            rp.a = a;
            rp.b = b;
            rp.P = P;
            rp.H = H;
            rp.floor_value = global.best < 0 ? mpq_class(0) : global.best;
            rp.sym = cfg.symmetry;
            rp.obj = cfg.objective;
            rp.irreducible = cfg.require_weak_irreducible;

            const long edge = std::min(H, P);
            std::vector<Vec> firsts;
            // max_ratio needs ht(g1) >= best * P
            mpq_class need = cfg.objective == Objective::max_ratio ? rp.floor_value * P : mpq_class(0);
            enumerate_first(a, H, edge, edge, pal, [&](const Vec& v) {
                if (mpq_class(vheight(v)) < need) return;
                if (is_canonical(v)) firsts.push_back(v);
            });

            std::vector<Local> locals;
            run_parallel(firsts.size(), cfg.workers, locals, [&](std::size_t i, Local& out) {
                const Vec& g1 = firsts[i];
                ++out.candidates;
                bool w1 = !cfg.require_weak_irreducible || weak_ok(g1);
                if (cfg.objective == Objective::max_ratio && !w1) return;
                Completion(rp, g1, w1, out).run();
            });
            merge_into(global, locals);
        }
    }
    return finish(global);
}

SearchResult naive_pair_search(std::size_t degree, long cap, Objective objective, long product_height) {
    if (degree < 2 || cap < 1) throw std::domain_error("naive_pair_search: bad parameters");
    Local global;
    for (std::size_t a = 1; 2 * a <= degree; ++a) {
        std::size_t b = degree - a;
        std::vector<Vec> A, B;
        enumerate_first(a, cap, cap, cap, false, [&](const Vec& v) { A.push_back(v); });
        enumerate_first(b, cap, cap, cap, false, [&](const Vec& v) { B.push_back(v); });
        for (const auto& g1 : A) {
            ++global.candidates;
            long h1 = vheight(g1);
            for (const auto& g2 : B) {
                ++global.leaves;
                long P = vheight(vmul(g1, g2));
                if (objective == Objective::max_factor_height && P != product_height) continue;
                mpq_class v = objective == Objective::max_ratio ? mpq_class(std::min(h1, vheight(g2)), P)
                                                                : mpq_class(std::max(h1, vheight(g2)));
                v.canonicalize();
                global.offer(Found{g1, g2, v});
            }
        }
    }
    return finish(global);
}

}  // namespace search
