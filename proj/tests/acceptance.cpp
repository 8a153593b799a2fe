// Acceptance checks, one line per criterion.
//   acceptance                 run all, exit 1 if any fails
//   acceptance --criterion N   run one
#include "bounds/bounds.hpp"
#include "polycore/textio.hpp"
#include "rootbounds/rootbounds.hpp"
#include "search/conjectures.hpp"
#include "search/families.hpp"
#include "search/fixtures.hpp"
#include "search/height1.hpp"
#include "search/pair_search.hpp"
#include "search/unit_circle.hpp"
#include "search/xd1.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using polycore::IntPoly;
using polycore::height;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& what) {
        if (pass) detail.str("");
        if (!pass) detail << "; ";
        pass = false;
        detail << what;
    }
};

const std::vector<search::FixtureFile>& corpus() {
    static const auto files = search::load_fixture_dir(FIXTURE_DIR);
    return files;
}

const search::FixtureFile& fixture(const std::string& stem) {
    for (const auto& f : corpus())
        if (f.records.front().file == stem + ".json") return f;
    throw search::FixtureError("no fixture file " + stem);
}

IntPoly desc_poly(const json& a) {
    std::vector<mpz_class> c;
    for (const auto& s : a) c.emplace_back(s.get<std::string>());
    std::reverse(c.begin(), c.end());
    return IntPoly(std::move(c));
}

std::vector<mpz_class> desc_entries(const bounds::BoundVector& v) {
    return {v.entries.rbegin(), v.entries.rend()};
}

std::vector<mpz_class> ints(const json& a) {
    std::vector<mpz_class> out;
    for (const auto& s : a) out.emplace_back(s.get<std::string>());
    return out;
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::mt19937_64& rng() {
    static std::mt19937_64 g(20260314);
    return g;
}

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

IntPoly random_poly(std::size_t deg, long h) {
    std::vector<mpz_class> c(deg + 1);
    for (auto& x : c) x = uniform(-h, h);
    while (c.front() == 0) c.front() = uniform(-h, h);
    while (c.back() == 0) c.back() = uniform(-h, h);
    return IntPoly(std::move(c));
}

// 1: Knuth-Cohen and Beauzamy rows, exact
void criterion_1(Outcome& o) {
    std::size_t entries = 0;
    for (const auto& r : fixture("degree_aware_tables").records) {
        const IntPoly f = desc_poly(r.data["product"]);
        const std::size_t delta = r.data["degree"];
        const auto check = [&](const bounds::BoundVector& v, const char* key) {
            const auto& row = r.data["rows"][key];
            if (desc_entries(v) != ints(row["entries_desc"])) o.fail(r.id + " " + key + " entries differ");
            if (v.overall != mpz_class(row["overall"].get<std::string>())) o.fail(r.id + " " + key + " overall differs");
            entries += delta + 1;
        };
        check(bounds::knuth_cohen_vector(f, delta), "knuth_cohen");
        check(bounds::beauzamy_vector(f, delta), "beauzamy");
    }
    if (o.pass) o.detail << entries << " entries and 10 overalls exact";
}

// 2: binomial and Mignotte rows valid and within 15%, combined 95
void criterion_2(Outcome& o) {
    std::size_t checked = 0;
    for (const auto& r : fixture("degree_aware_tables").records) {
        const IntPoly f = desc_poly(r.data["product"]);
        const std::size_t delta = r.data["degree"];
        const auto rep = bounds::combined_report(f, delta);
        for (const auto& v : rep.methods) {
            const char* key = v.method == bounds::Method::binomial ? "binomial"
                              : v.method == bounds::Method::mignotte ? "mignotte"
                                                                     : nullptr;
            if (!key) continue;
            const auto printed = ints(r.data["rows"][key]["entries_desc"]);
            const auto ours = desc_entries(v);
            for (std::size_t i = 0; i < ours.size(); ++i) {
                if (100 * ours[i] > 115 * printed[i]) o.fail(r.id + " " + key + " entry above printed + 15%");
                ++checked;
            }
            for (const auto& g : r.data["factors"]) {
                const IntPoly gp = desc_poly(g);
                if (gp.deg() != delta) continue;
                for (std::size_t i = 0; i <= delta; ++i)
                    if (v.entries[i] < abs(gp.coeff(i))) o.fail(r.id + " " + key + " below a true coefficient");
            }
        }
        if (r.data.contains("combined_overall") &&
            rep.combined.overall != mpz_class(r.data["combined_overall"].get<std::string>()))
            o.fail(r.id + " combined overall " + rep.combined.overall.get_str());
    }
    if (o.pass) o.detail << checked << " entries valid and within 15%, combined overall 95";
}

// 3: single-factor comparisons
void criterion_3(Outcome& o) {
    const auto& files = corpus();
    const auto get = [&](const char* id) { return desc_poly(search::find_record(files, "single_factor_examples", id).data["product"]); };
    const IntPoly a = get("mignotte_beats_btw"), b = get("btw_beats_mignotte"), c = get("high_degree_single_factor_wins");
    const auto ma = bounds::sf_mignotte_refined(a).value, ba = bounds::sf_btw(a).value;
    const auto bb = bounds::sf_btw(b).value, mb = bounds::sf_mignotte_refined(b).value;
    const auto bc = bounds::sf_btw(c).value, kc = bounds::knuth_cohen_vector(c, 10).overall;
    if (ma != 21) o.fail("example 1 Mignotte " + ma.get_str());
    if (ba != 47) o.fail("example 1 BTW " + ba.get_str());
    if (bb != 21) o.fail("example 2 BTW " + bb.get_str());
    if (100 * mb > 52 * 115) o.fail("example 2 Mignotte " + mb.get_str());
    if (bc != 713) o.fail("high degree BTW " + bc.get_str());
    if (kc != 16339) o.fail("high degree Knuth-Cohen " + kc.get_str());
    if (o.pass)
        o.detail << "Mignotte " << ma << " BTW " << ba << "; BTW " << bb << " Mignotte " << mb << "; BTW " << bc
                 << " Knuth-Cohen " << kc;
}

// 4: cyclotomic height records up to 11305
void criterion_4(Outcome& o) {
    const auto got = search::cyclo_height_records(11305, workers());
    const auto& recs = fixture("cyclotomic_height_records").records;
    if (got.size() != 9) o.fail("found " + std::to_string(got.size()) + " records, expected 9");
    for (std::size_t i = 0; i < std::min<std::size_t>(9, got.size()); ++i) {
        const mpz_class h(recs[i].data["expected"]["height"].get<std::string>());
        const std::uint64_t n = recs[i].data["index"];
        if (got[i].height != h || got[i].index != n)
            o.fail("row " + std::to_string(i + 1) + " is (" + got[i].height.get_str() + ", " + std::to_string(got[i].index) + ")");
    }
    if (o.pass) o.detail << "9 rows, last (" << got.back().height << ", " << got.back().index << ")";
}

// 5: largest factors of x^d - 1, compared against the printed heights
void criterion_5(Outcome& o) {
    std::size_t searched = 0;
    for (const auto& r : fixture("xd1_largest_factors").records) {
        const std::uint64_t d = r.data["d"];
        const mpz_class printed(r.data["expected"]["printed_height"].get<std::string>());
        const auto idx = r.data["indices"].get<std::vector<std::uint64_t>>();
        if (r.data["searched"].get<bool>()) {
            const auto res = search::xd1_subset_search(d, 24, workers());
            ++searched;
            if (res.height != printed) o.fail("d = " + std::to_string(d) + " search gives " + res.height.get_str() + ", printed " + printed.get_str());
            if (std::find(res.maximizers.begin(), res.maximizers.end(), idx) == res.maximizers.end())
                o.fail("d = " + std::to_string(d) + " printed index list is not a maximizer");
        } else {
            const auto h = height(search::cyclotomic_product(idx));
            if (h != printed) o.fail("d = " + std::to_string(d) + " stated product has height " + h.get_str());
        }
    }
    if (o.pass) o.detail << searched << " searched, 2 stated products";
}

// 6: extremal ratio searches plus fixture verification of the other rows
void criterion_6(Outcome& o) {
    const std::vector<std::pair<std::size_t, long>> runs = {{5, 4}, {6, 4}, {7, 6}, {8, 6}, {9, 8}, {10, 8}};
    std::ostringstream ratios;
    for (auto [d, cap] : runs) {
        search::SearchConfig cfg;
        cfg.degree = d;
        cfg.height_cap = cap;
        cfg.workers = workers();
        const auto res = search::pair_search(cfg);
        ratios << (ratios.tellp() ? "," : "") << res.best.get_str();
        const std::string id = "deg" + std::to_string(d);
        const auto& recs = fixture("extremal_short_factorizations").records;
        const auto it = std::find_if(recs.begin(), recs.end(), [&](const auto& r) { return r.id == id; });
        if (it == recs.end()) continue;  // no printed row
        const mpq_class want(it->data["expected"]["ratio"].get<std::string>());
        if (res.best != want) o.fail(id + " search ratio " + res.best.get_str() + ", table " + want.get_str());
        const auto c = search::case_from_record(*it);
        const auto pair = search::canonical_pair(c.factors[0], c.factors[1]);
        const bool found = std::any_of(res.maximizers.begin(), res.maximizers.end(), [&](const auto& m) {
            return m.factors[0] == pair.first && m.factors[1] == pair.second;
        });
        if (!found) o.fail(id + " printed pair is not among the maximizers");
    }
    std::size_t verified = 0;
    for (const char* stem : {"extremal_short_factorizations", "extremal_irreducible_factorizations", "palindromic_star_symmetric",
                             "height1_two_irreducible_factors", "height1_palindromic_star_symmetric"}) {
        for (const auto& r : fixture(stem).records) {
            if (r.kind == "height_only") continue;
            if (std::string(stem) == "extremal_short_factorizations" && r.data["degree"].get<int>() <= 10) continue;
            const auto chk = search::verify_record(r);
            ++verified;
            if (!chk.ok()) o.fail(chk.name + " " + chk.problems.front());
        }
    }
    if (o.pass) o.detail << "ratios " << ratios.str() << " for degrees 5-10, " << verified << " rows verified";
}

// 7: lowest degree height-1 multiple of (x+1)^8
void criterion_7(Outcome& o) {
    const auto r = search::height1_multiple_search(8, 41);
    if (!r.witness || r.witness->deg() != 41) o.fail("no degree 41 witness");
    if (r.exhausted_through != 40) o.fail("exhausted only through degree " + std::to_string(r.exhausted_through));
    if (r.witness && (height(*r.witness) != 1 || !polycore::exact_divide(*r.witness, polycore::pow(polycore::parse("x+1"), 8))))
        o.fail("witness is not a height 1 multiple");
    if (o.pass) o.detail << "degrees 8..40 exhausted, witness of degree 41";
}

// 8: inflation outcomes, compared against the printed tuples
void criterion_8(Outcome& o) {
    std::ostringstream got;
    for (const auto& r : fixture("longer_factorizations").records) {
        const auto base = search::case_from_record(r);
        std::map<unsigned, search::FactorizationCase> done;
        for (const auto& inf : r.data["inflations"]) {
            const unsigned k = inf["k"];
            const auto& from = inf.contains("after") ? done.at(inf["after"].get<unsigned>()) : base;
            const auto res = search::inflate_construction(from, k, false);
            done[k] = res.fcase;
            mpz_class hmax = 0;
            for (const auto& g : res.fcase.factors) hmax = std::max(hmax, height(g));
            const auto& p = inf["printed"];
            const std::string tuple = "(" + std::to_string(res.fcase.product.deg()) + "," + height(res.fcase.product).get_str() +
                                      "," + std::to_string(res.fcase.factors.size()) + "," + hmax.get_str() + ")";
            got << (got.tellp() ? " " : "") << tuple;
            if (res.fcase.product.deg() != p["degree"].get<std::size_t>() || height(res.fcase.product) != p["height"].get<long>() ||
                res.fcase.factors.size() != p["factor_count"].get<std::size_t>() || hmax != p["factor_height"].get<long>())
                o.fail(r.id + " k = " + std::to_string(k) + " gives " + tuple + ", printed (" + std::to_string(p["degree"].get<long>()) +
                       "," + std::to_string(p["height"].get<long>()) + "," + std::to_string(p["factor_count"].get<long>()) + "," +
                       std::to_string(p["factor_height"].get<long>()) + ")");
        }
    }
    if (o.pass) o.detail << got.str();
    else o.detail << " [computed " << got.str() << "]";
}

// 9: validity over the corpus and random pairs
void criterion_9(Outcome& o) {
    std::size_t violations = 0, cases = 0;
    const auto check_case = [&](const IntPoly& f, const std::vector<IntPoly>& factors) {
        ++cases;
        mpz_class min_h = height(factors.front());
        for (const auto& g : factors) min_h = std::min(min_h, height(g));
        std::set<std::size_t> degrees;
        for (const auto& g : factors) {
            if (g.deg() == 0 || g.deg() >= f.deg() || !degrees.insert(g.deg()).second) continue;
            const auto rep = bounds::combined_report(f, g.deg());
            for (std::size_t i = 0; i <= g.deg(); ++i) {
                for (const auto& v : rep.methods) violations += rep.combined.entries[i] > v.entries[i];
            }
        }
        for (const auto& g : factors) {
            if (g.deg() == 0 || g.deg() >= f.deg()) continue;
            const auto rep = bounds::combined_report(f, g.deg());
            for (std::size_t i = 0; i <= g.deg(); ++i) violations += rep.combined.entries[i] < abs(g.coeff(i));
        }
        if (factors.size() < 2) return;
        using SfFn = bounds::SingleFactorBound (*)(const IntPoly&);
        for (SfFn fn : {&bounds::sf_mignotte, &bounds::sf_mignotte_refined, &bounds::sf_btw}) {
            try {
                violations += fn(f).value < min_h;
            } catch (const std::domain_error&) {
            }
        }
        try {
            violations += bounds::sf_best(f).best.value < min_h;
        } catch (const std::domain_error&) {
        }
    };
    for (const auto& file : corpus()) {
        for (const auto& r : file.records) {
            if (r.kind != "factorization" && r.kind != "bound_table") continue;
            const auto c = search::case_from_record(r);
            check_case(c.product, c.factors);
        }
    }
    const std::size_t corpus_cases = cases;
    for (int t = 0; t < 1000; ++t) {
        const IntPoly g = random_poly(uniform(1, 12), uniform(1, 50));
        const IntPoly h = random_poly(uniform(1, 12), uniform(1, 50));
        check_case(g * h, {g, h});
    }
    if (violations) o.fail(std::to_string(violations) + " violations");
    if (o.pass) o.detail << corpus_cases << " fixture cases and 1000 random pairs, 0 violations";
}

// 10: oracle equivalence
void criterion_10(Outcome& o) {
    for (std::size_t d = 2; d <= 6; ++d) {
        for (long cap = 1; cap <= 3; ++cap) {
            search::SearchConfig cfg;
            cfg.degree = d;
            cfg.height_cap = cap;
            const auto fast = search::pair_search(cfg);
            const auto slow = search::naive_pair_search(d, cap);
            bool same = fast.best == slow.best && fast.maximizers.size() == slow.maximizers.size();
            for (std::size_t i = 0; same && i < fast.maximizers.size(); ++i) same = fast.maximizers[i].factors == slow.maximizers[i].factors;
            if (!same) o.fail("pair_search differs from the flat oracle at d = " + std::to_string(d) + ", cap " + std::to_string(cap));
        }
    }
    for (int t = 0; t < 500; ++t) {
        const IntPoly f = random_poly(uniform(1, 15), 50);
        IntPoly want = f * polycore::negate_x(f);
        if (f.deg() % 2) want = -want;
        if (polycore::substitute_power(rootbounds::graeffe(f), 2) != want) {
            o.fail("Graeffe identity fails for " + polycore::format_expr(f));
            break;
        }
    }
    for (int t = 0; t < 100; ++t) {
        const IntPoly f = random_poly(uniform(1, 6), 20);
        const std::size_t dhat = uniform(1, 5);
        const auto m = bounds::min_l2_multiple(f, dhat);
        for (std::size_t i = 0; i < dhat; ++i) {
            const mpq_class eps = mpq_class(1, 1000000) * (abs(m.cofactor[i]) + 1);
            for (int s : {-1, 1}) {
                auto h = m.cofactor;
                h[i] += s * eps;
                if (!(bounds::l2_squared_of_product(f, h) > m.l2_squared)) o.fail("min_l2_multiple is not a minimum");
            }
        }
    }
    if (o.pass) o.detail << "15 search spaces, 500 Graeffe inputs, 100 l2 minima";
}

// 11: numerical properties
void criterion_11(Outcome& o) {
    for (int t = 0; t < 500; ++t) {
        const long lc = uniform(1, 5) * (uniform(0, 1) ? 1 : -1);
        IntPoly f = IntPoly::constant(lc);
        mpz_class max_root = 0, mahler = std::abs(lc);
        for (long i = 0, d = uniform(1, 8); i < d; ++i) {
            const long r = uniform(-9, 9);
            f = f * IntPoly::x_minus(r);
            max_root = std::max(max_root, mpz_class(std::abs(r)));
            mahler *= std::max(1L, std::abs(r));
        }
        const bool roots_ok = rootbounds::knuth_bound(f).at_least(max_root) && rootbounds::zassenhaus_bound(f).at_least(max_root) &&
                              rootbounds::cauchy_bound(f).rho.at_least(max_root) && rootbounds::refined_root_bound(f).rho.at_least(max_root);
        if (!roots_ok) o.fail("root bound below a root of " + polycore::format_expr(f));
        const auto m = rootbounds::mahler_upper(f).upper;
        if (!m.at_least(mahler)) o.fail("Mahler estimate below M for " + polycore::format_expr(f));
        if (m.to_double() > polycore::l2_norm(f).to_double() * (1 + 0x1p-30)) o.fail("Mahler estimate above the l2 norm");
        if (!o.pass) break;
    }
    for (std::size_t d = 6; d <= 98; d += 4) {
        const auto u = search::unit_circle_factor(d, search::UnitCircleKind::u_d);
        const auto id = search::check_xd1_identity(u.poly, d);
        if (id.sign == 0 || id.worst_excess > 0) o.fail("u_d identity fails at d = " + std::to_string(d));
    }
    const std::vector<std::pair<const char*, unsigned>> eq = {
        {"x+1", 2}, {"x^14-x^12-x^10-x^8-4x^7+x^6+x^4+x^2-1", 2}, {"x^5+x^4-x+1", 3}};
    for (auto [text, k] : eq)
        if (!search::conjecture_power_check(polycore::parse(text), k).equality) o.fail(std::string("no equality for ") + text);
    if (o.pass) o.detail << "500 root and Mahler instances, u_d for d = 6..98, 3 equality instances";
}

const std::vector<std::function<void(Outcome&)>> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                             criterion_5, criterion_6, criterion_7, criterion_8,
                                                             criterion_9, criterion_10, criterion_11};

bool run_one(std::size_t n) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        criteria[n - 1](o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " " << o.detail.str() << " ("
              << std::fixed << std::setprecision(2) << secs << "s)" << std::endl;
    return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
        const long n = std::strtol(argv[2], nullptr, 10);
        if (n < 1 || n > static_cast<long>(criteria.size())) {
            std::cerr << "criterion must be 1.." << criteria.size() << "\n";
            return 2;
        }
        return run_one(static_cast<std::size_t>(n)) ? 0 : 1;
    }
    if (argc != 1) {
        std::cerr << "usage: acceptance [--criterion N]\n";
        return 2;
    }
    bool all = true;
    for (std::size_t n = 1; n <= criteria.size(); ++n) all = run_one(n) && all;
    return all ? 0 : 1;
}
