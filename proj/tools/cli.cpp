#include "cli.hpp"

#include "polycore/cyclotomic.hpp"
#include "polycore/textio.hpp"
#include "rootbounds/rootbounds.hpp"
#include "search/conjectures.hpp"
#include "search/families.hpp"
#include "search/fixtures.hpp"
#include "search/height1.hpp"
#include "search/pair_search.hpp"
#include "search/xd1.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

namespace cli {

using nlohmann::json;
using polycore::IntPoly;
using polycore::UpperReal;

namespace {

// Bad input or infeasible configuration: exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kFixtureFailure = 2;

std::string row_name(bounds::Method m) {
    switch (m) {
        case bounds::Method::binomial: return "Binomial";
        case bounds::Method::mignotte: return "Mignotte";
        case bounds::Method::knuth_cohen: return "Knuth-Cohen";
        case bounds::Method::beauzamy: return "Beauzamy";
        case bounds::Method::combined: return "Combined";
    }
    return "?";
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

template <class T>
std::vector<T> split_numbers(const std::string& s) {
    std::vector<T> out;
    for (const auto& item : split_list(s)) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 0) throw UsageError("not a nonnegative integer: " + item);
        out.push_back(static_cast<T>(v));
    }
    return out;
}

IntPoly read_poly(const std::string& text, std::istream& in) {
    if (text != "-") return polycore::parse(text);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return polycore::parse(all);
}

json poly_json(const IntPoly& p) {
    json j = polycore::to_json(p);
    j["expr"] = polycore::format_expr(p);
    return j;
}

json strings(const std::vector<mpz_class>& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(z.get_str());
    return a;
}

json vector_json(const bounds::BoundVector& v) {
    std::vector<mpz_class> desc(v.entries.rbegin(), v.entries.rend());
    return {{"method", bounds::to_string(v.method)}, {"entries_desc", strings(desc)}, {"overall", v.overall.get_str()}};
}

json case_json(const search::FactorizationCase& c) {
    json factors = json::array(), heights = json::array();
    for (const auto& g : c.factors) {
        factors.push_back(poly_json(g));
        heights.push_back(polycore::height(g).get_str());
    }
    json tags = json::array();
    for (auto t : c.tags) tags.push_back(search::to_string(t));
    json j = {{"product", poly_json(c.product)},
              {"product_height", polycore::height(c.product).get_str()},
              {"factors", factors},
              {"factor_heights", heights},
              {"tags", tags}};
    if (sgn(polycore::height(c.product)) > 0) j["ratio"] = search::ratio(c).value.get_str();
    return j;
}

std::string case_text(const search::FactorizationCase& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.factors.size(); ++i)
        os << (i ? " * " : "") << "(" << polycore::format_expr(c.factors[i]) << ")";
    os << "  heights";
    for (const auto& g : c.factors) os << " " << polycore::height(g);
    os << "  product height " << polycore::height(c.product);
    if (sgn(polycore::height(c.product)) > 0) os << "  ratio " << search::ratio(c).value.get_str();
    return os.str();
}

void print_json(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

rootbounds::Options root_options(long cap_bits, long depth) {
    rootbounds::Options o;
    if (cap_bits <= 0) throw UsageError("--cap-bits must be positive");
    o.cap_bits = static_cast<std::size_t>(cap_bits);
    if (depth >= 0) o.depth = static_cast<unsigned>(depth);
    return o;
}

}  // namespace

std::string render_bound_table(const bounds::BoundReport& report) {
    const std::size_t delta = report.combined.delta;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"Method"};
    for (std::size_t i = delta + 1; i-- > 0;) head.push_back(i == 0 ? "x^0" : "x^" + std::to_string(i));
    head.push_back("Overall");
    rows.push_back(head);
    auto add = [&](const bounds::BoundVector& v, bounds::Method m) {
        std::vector<std::string> r{row_name(m)};
        for (std::size_t i = delta + 1; i-- > 0;) r.push_back(v.entries[i].get_str());
        r.push_back(v.overall.get_str());
        rows.push_back(std::move(r));
    };
    for (const auto& v : report.methods) add(v, v.method);
    add(report.combined, bounds::Method::combined);

    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::ostringstream os;
    for (const auto& r : rows) {
        os << std::left << std::setw(static_cast<int>(width[0])) << r[0];
        for (std::size_t c = 1; c < r.size(); ++c) os << "  " << std::right << std::setw(static_cast<int>(width[c])) << r[c];
        os << "\n";
    }
    return os.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Factor coefficient bounds and extremal factorization searches", "fcb"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    bool as_json = false;
    unsigned threads = 1;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--threads", threads, "worker threads for searches")->check(CLI::Range(1u, 256u));

    std::function<int()> action;
    std::string poly_text;
    std::size_t degree = 0;
    long cap_bits = 8192, depth = -1;

    auto add_root_options = [&](CLI::App* c) {
        c->add_option("--cap-bits", cap_bits, "exact Graeffe iterates above this many bits switch to balls");
        c->add_option("--depth", depth, "deepest Graeffe iterate (automatic by default)");
    };

    // bounds
    std::string methods_text;
    auto* c_bounds = app.add_subcommand("bounds", "degree-aware bounds on the coefficients of a factor");
    c_bounds->add_option("poly", poly_text, "polynomial, or - for stdin")->required();
    c_bounds->add_option("--degree", degree, "degree of the factor")->required();
    c_bounds->add_option("--methods", methods_text, "comma list of binomial,mignotte,knuth_cohen,beauzamy");
    add_root_options(c_bounds);
    c_bounds->callback([&] {
        action = [&] {
            const IntPoly f = read_poly(poly_text, in);
            if (degree < 1 || degree > f.deg()) throw UsageError("--degree must lie in 1..deg(f)");
            std::vector<bounds::Method> methods = bounds::default_methods();
            if (!methods_text.empty()) {
                methods.clear();
                for (const auto& m : split_list(methods_text)) {
                    auto mm = bounds::method_from_string(m);
                    if (mm == bounds::Method::combined) throw UsageError("combined is not a base method");
                    methods.push_back(mm);
                }
            }
            auto rep = bounds::combined_report(f, degree, methods, root_options(cap_bits, depth));
            if (as_json) {
                json ms = json::array();
                for (const auto& v : rep.methods) ms.push_back(vector_json(v));
                print_json(out, {{"command", "bounds"},
                                 {"poly", poly_json(f)},
                                 {"degree", degree},
                                 {"methods", ms},
                                 {"combined", vector_json(rep.combined)},
                                 {"inputs",
                                  {{"rho", rep.inputs.rho.str(12)},
                                   {"rho_bar", rep.inputs.rho_bar.str(12)},
                                   {"mahler", rep.inputs.mahler.str(12)},
                                   {"l2", rep.inputs.l2.str(12)},
                                   {"bombieri", rep.inputs.bombieri.str(12)}}}});
            } else {
                out << render_bound_table(rep);
            }
            return 0;
        };
    });

    // sfbound
    std::string degrees_text;
    auto* c_sf = app.add_subcommand("sfbound", "single-factor bounds");
    c_sf->add_option("poly", poly_text)->required();
    c_sf->add_option("--degrees", degrees_text, "admissible factor degrees, comma list");
    c_sf->callback([&] {
        action = [&] {
            const IntPoly f = read_poly(poly_text, in);
            if (f.deg() < 2) throw UsageError("sfbound needs degree at least 2");
            std::optional<std::set<std::size_t>> info;
            if (!degrees_text.empty()) {
                auto ds = split_numbers<std::size_t>(degrees_text);
                info.emplace(ds.begin(), ds.end());
                for (auto e : *info)
                    if (e < 1 || e >= f.deg()) throw UsageError("admissible degrees must lie in 1..deg(f)-1");
            }
            auto best = bounds::sf_best(f, info);
            if (as_json) {
                json cands = json::array();
                for (const auto& c : best.candidates)
                    cands.push_back({{"method", bounds::to_string(c.method)}, {"value", c.value.get_str()}, {"audit", c.audit}});
                print_json(out, {{"command", "sfbound"},
                                 {"poly", poly_json(f)},
                                 {"candidates", cands},
                                 {"best", {{"method", bounds::to_string(best.best.method)}, {"value", best.best.value.get_str()}}}});
            } else {
                for (const auto& c : best.candidates) out << bounds::to_string(c.method) << "  " << c.value << "\n";
                out << "best  " << best.best.value << "  (" << bounds::to_string(best.best.method) << ")\n";
            }
            return 0;
        };
    });

    // rootbound
    auto* c_root = app.add_subcommand("rootbound", "upper bounds on the root moduli");
    c_root->add_option("poly", poly_text)->required();
    add_root_options(c_root);
    c_root->callback([&] {
        action = [&] {
            const IntPoly f = read_poly(poly_text, in);
            if (f.deg() < 1) throw UsageError("rootbound needs a nonconstant polynomial");
            auto opt = root_options(cap_bits, depth);
            auto k = rootbounds::knuth_bound(f), z = rootbounds::zassenhaus_bound(f);
            auto c = rootbounds::cauchy_bound(f);
            auto r = rootbounds::refined_root_bound(f, opt);
            if (as_json) {
                print_json(out, {{"command", "rootbound"},
                                 {"poly", poly_json(f)},
                                 {"knuth", k.str(12)},
                                 {"zassenhaus", z.str(12)},
                                 {"cauchy", c.rho.str(12)},
                                 {"refined", {{"rho", r.rho.str(12)}, {"method", rootbounds::to_string(r.method)}, {"graeffe_depth", r.graeffe_depth}}}});
            } else {
                out << "knuth       " << k.str(12) << "\n"
                    << "zassenhaus  " << z.str(12) << "\n"
                    << "cauchy      " << c.rho.str(12) << "\n"
                    << "refined     " << r.rho.str(12) << "  (" << rootbounds::to_string(r.method) << ", depth "
                    << r.graeffe_depth << ")\n";
            }
            return 0;
        };
    });

    // mahler
    auto* c_mahler = app.add_subcommand("mahler", "upper estimate of the Mahler measure");
    c_mahler->add_option("poly", poly_text)->required();
    add_root_options(c_mahler);
    c_mahler->callback([&] {
        action = [&] {
            const IntPoly f = read_poly(poly_text, in);
            if (f.is_zero()) throw UsageError("zero polynomial");
            auto m = rootbounds::mahler_upper(f, root_options(cap_bits, depth));
            auto l2 = polycore::l2_norm(f);
            if (as_json)
                print_json(out, {{"command", "mahler"}, {"poly", poly_json(f)}, {"mahler", m.upper.str(12)},
                                 {"graeffe_depth", m.graeffe_depth}, {"l2", l2.str(12)}});
            else
                out << "mahler  " << m.upper.str(12) << "  (depth " << m.graeffe_depth << ")\nl2      " << l2.str(12) << "\n";
            return 0;
        };
    });

    // cyclotomic
    std::uint64_t index = 0;
    bool height_only = false;
    auto* c_cyc = app.add_subcommand("cyclotomic", "cyclotomic polynomial phi_n");
    c_cyc->add_option("n", index)->required()->check(CLI::PositiveNumber);
    c_cyc->add_flag("--height-only", height_only);
    c_cyc->callback([&] {
        action = [&] {
            const mpz_class h = search::cyclotomic_height(index);
            if (height_only) {
                if (as_json) print_json(out, {{"command", "cyclotomic"}, {"n", index}, {"height", h.get_str()}});
                else out << h << "\n";
                return 0;
            }
            const IntPoly p = polycore::cyclotomic(index);
            if (as_json) print_json(out, {{"command", "cyclotomic"}, {"n", index}, {"height", h.get_str()}, {"poly", poly_json(p)}});
            else out << polycore::format_expr(p) << "\nheight " << h << "\n";
            return 0;
        };
    });

    // cyclo-records
    std::uint64_t max_index = 0;
    auto* c_rec = app.add_subcommand("cyclo-records", "indices where the height of phi_n sets a new record");
    c_rec->add_option("--max-index", max_index)->required()->check(CLI::PositiveNumber);
    c_rec->callback([&] {
        action = [&] {
            auto recs = search::cyclo_height_records(max_index, threads);
            if (as_json) {
                json rows = json::array();
                for (const auto& r : recs) rows.push_back({{"height", r.height.get_str()}, {"index", r.index}});
                print_json(out, {{"command", "cyclo-records"}, {"max_index", max_index}, {"records", rows}});
            } else {
                for (const auto& r : recs) out << r.height << "  " << r.index << "\n";
            }
            return 0;
        };
    });

    // xd1-max
    std::uint64_t xd = 0;
    unsigned divisor_cap = 24;
    auto* c_xd1 = app.add_subcommand("xd1-max", "tallest factor of x^d - 1");
    c_xd1->add_option("d", xd)->required()->check(CLI::PositiveNumber);
    c_xd1->add_option("--divisor-cap", divisor_cap, "refuse d with more divisors than this");
    c_xd1->callback([&] {
        action = [&] {
            auto r = search::xd1_subset_search(xd, divisor_cap, threads);
            if (as_json) {
                print_json(out, {{"command", "xd1-max"}, {"d", xd}, {"height", r.height.get_str()},
                                 {"maximizers", r.maximizers}, {"factor", poly_json(r.factor)}});
            } else {
                out << "height " << r.height << "\n";
                for (const auto& m : r.maximizers) {
                    out << "phi";
                    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : " ") << m[i];
                    out << "\n";
                }
            }
            return 0;
        };
    });

    // verify
    std::string fixture_path;
    bool show_all = false;
    auto* c_verify = app.add_subcommand("verify", "re-verify a fixture file or directory");
    c_verify->add_option("path", fixture_path)->required();
    c_verify->add_flag("--all", show_all, "report every record, not only failures");
    c_verify->callback([&] {
        action = [&] {
            std::vector<search::FixtureFile> files;
            try {
                if (std::filesystem::is_directory(fixture_path)) files = search::load_fixture_dir(fixture_path);
                else files.push_back(search::load_fixture_file(fixture_path));
            } catch (const search::FixtureError& e) {
                err << "fixture error: " << e.what() << "\n";
                return kFixtureFailure;
            }
            auto rep = search::verify_corpus(files, threads);
            if (as_json) {
                json checks = json::array();
                for (const auto& c : rep.checks)
                    if (show_all || !c.ok()) checks.push_back({{"record", c.name}, {"kind", c.kind}, {"ok", c.ok()}, {"problems", c.problems}});
                print_json(out, {{"command", "verify"}, {"records", rep.checks.size()}, {"failures", rep.failures}, {"checks", checks}});
            } else {
                for (const auto& c : rep.checks) {
                    if (!show_all && c.ok()) continue;
                    out << (c.ok() ? "ok    " : "FAIL  ") << c.name;
                    for (const auto& p : c.problems) out << "  [" << p << "]";
                    out << "\n";
                }
                out << rep.checks.size() << " records, " << rep.failures << " failures\n";
            }
            for (const auto& c : rep.checks)
                if (!c.ok()) err << "fixture " << c.name << " failed\n";
            return rep.failures ? kFixtureFailure : 0;
        };
    });

    // search-ratio
    search::SearchConfig cfg;
    std::string symmetry_text = "none", objective_text = "ratio", splits_text;
    bool irreducible = false;
    auto* c_search = app.add_subcommand("search-ratio", "exhaustive two-factor search");
    c_search->add_option("--degree", cfg.degree, "degree of the product")->required();
    c_search->add_option("--height-cap", cfg.height_cap, "bound on every factor coefficient")->required();
    c_search->add_option("--symmetry", symmetry_text, "none|palindromic|star|both");
    c_search->add_option("--objective", objective_text, "ratio|height");
    c_search->add_option("--product-height", cfg.product_height, "product height for --objective height");
    c_search->add_option("--splits", splits_text, "factor degrees a:b, comma separated");
    c_search->add_flag("--irreducible", irreducible, "keep only weakly irreducible factors");
    c_search->callback([&] {
        action = [&] {
            cfg.symmetry = search::symmetry_from_string(symmetry_text);
            if (objective_text == "ratio") cfg.objective = search::Objective::max_ratio;
            else if (objective_text == "height") cfg.objective = search::Objective::max_factor_height;
            else throw UsageError("--objective must be ratio or height");
            for (const auto& s : split_list(splits_text)) {
                auto colon = s.find(':');
                if (colon == std::string::npos) throw UsageError("split must look like a:b, got " + s);
                auto a = split_numbers<std::size_t>(s.substr(0, colon)), b = split_numbers<std::size_t>(s.substr(colon + 1));
                if (a.size() != 1 || b.size() != 1) throw UsageError("bad split " + s);
                cfg.splits.emplace_back(a[0], b[0]);
            }
            if (cfg.degree < 2) throw UsageError("--degree must be at least 2");
            if (cfg.height_cap < 1) throw UsageError("--height-cap must be positive");
            cfg.require_weak_irreducible = irreducible;
            cfg.workers = threads;
            auto r = search::pair_search(cfg);
            const std::string best = r.best.get_str();
            if (as_json) {
                json splits = json::array();
                for (auto [a, b] : cfg.splits) splits.push_back({a, b});
                print_json(out, {{"config",
                                  {{"degree", cfg.degree},
                                   {"height_cap", cfg.height_cap},
                                   {"symmetry", search::to_string(cfg.symmetry)},
                                   {"objective", search::to_string(cfg.objective)},
                                   {"product_height", cfg.product_height},
                                   {"require_weak_irreducible", cfg.require_weak_irreducible},
                                   {"splits", splits}}}});
                for (const auto& c : r.maximizers) print_json(out, {{"case", case_json(c)}});
                print_json(out, {{"summary", {{"best", best}, {"maximizers", r.maximizers.size()},
                                              {"candidates", r.candidates}, {"leaves", r.leaves}}}});
            } else {
                out << "best " << best << "  (" << r.maximizers.size() << " maximizers, " << r.leaves << " pairs)\n";
                for (const auto& c : r.maximizers) out << case_text(c) << "\n";
            }
            return 0;
        };
    });

    // search-h1mult
    unsigned h1_n = 0;
    std::size_t max_degree = 0;
    auto* c_h1 = app.add_subcommand("search-h1mult", "lowest-degree height-1 multiple of (x+1)^n");
    c_h1->add_option("--n", h1_n)->required()->check(CLI::PositiveNumber);
    c_h1->add_option("--max-degree", max_degree)->required();
    c_h1->callback([&] {
        action = [&] {
            auto r = search::height1_multiple_search(h1_n, max_degree);
            if (as_json) {
                json j = {{"command", "search-h1mult"}, {"n", r.n}, {"max_degree", max_degree},
                          {"first_degree", r.first_degree}, {"exhausted_any", r.exhausted_any},
                          {"exhausted_through", r.exhausted_through}, {"nodes", r.nodes}};
                j["witness"] = r.witness ? poly_json(*r.witness) : json(nullptr);
                print_json(out, j);
            } else {
                if (r.exhausted_any) out << "no witness in degrees " << r.first_degree << ".." << r.exhausted_through << "\n";
                if (r.witness) out << "witness of degree " << r.witness->deg() << ": " << polycore::format_expr(*r.witness) << "\n";
                else out << "no witness up to degree " << max_degree << "\n";
            }
            return 0;
        };
    });

    // family
    std::string family_kind, exponents_text;
    unsigned family_n = 0;
    auto* c_family = app.add_subcommand("family", "parametric families: xek, quadratic, power");
    c_family->add_option("kind", family_kind)->required()->check(CLI::IsMember({"xek", "quadratic", "power"}));
    c_family->add_option("--exponents", exponents_text, "exponents e_1,..,e_k for xek");
    c_family->add_option("--n", family_n, "n for quadratic, k for power");
    c_family->callback([&] {
        action = [&] {
            json j = {{"command", "family"}, {"kind", family_kind}};
            std::ostringstream text;
            if (family_kind == "xek") {
                auto es = split_numbers<unsigned>(exponents_text);
                auto r = search::product_family_xek(es);
                j["exponents"] = es;
                j["height"] = r.height.get_str();
                j["cofactor"] = poly_json(r.cofactor);
                j["cofactor_height"] = r.cofactor_height.get_str();
                j["cofactor_lower_bound"] = r.cofactor_lower_bound.get_str();
                j["square_free_max_height"] = r.square_free_max_height.get_str();
                j["tall_square_free_part"] = r.tall_square_free_part;
                text << "degree " << r.product.deg() << "  height " << r.height << "\ncofactor height " << r.cofactor_height
                     << "  (lower bound " << r.cofactor_lower_bound.get_str() << ")\nsquare-free parts max height "
                     << r.square_free_max_height << (r.tall_square_free_part ? "  (taller than the product)" : "") << "\n";
            } else if (family_kind == "quadratic") {
                auto r = search::family_n_quadratic(family_n);
                j["n"] = family_n;
                json cs = json::array();
                for (const auto& c : r.cases) {
                    cs.push_back(case_json(c));
                    text << case_text(c) << "\n";
                }
                j["cases"] = cs;
            } else {
                auto r = search::family_power_symmetric(family_n);
                j["k"] = family_n;
                j["case"] = case_json(r.fcase);
                j["ratio_lower_bound"] = r.ratio_lower_bound.get_str();
                j["factor_lower_bound"] = r.factor_lower_bound.get_str();
                text << "ratio " << r.ratio.value.get_str() << "  (lower bound " << r.ratio_lower_bound.get_str()
                     << ")\nfactor height " << polycore::height(r.fcase.factors[0]) << "  (lower bound "
                     << r.factor_lower_bound.get_str() << ")\n";
            }
            if (as_json) print_json(out, j);
            else out << text.str();
            return 0;
        };
    });

    // inflate
    std::vector<std::string> factor_texts;
    unsigned inflate_k = 0;
    bool no_weak = false;
    auto* c_inflate = app.add_subcommand("inflate", "f(x) f(x^k) from a factorization of f");
    c_inflate->add_option("factors", factor_texts, "factors of f")->required();
    c_inflate->add_option("--k", inflate_k)->required();
    c_inflate->add_flag("--no-weak", no_weak, "skip the weak irreducibility test on the new factors");
    c_inflate->callback([&] {
        action = [&] {
            std::vector<IntPoly> fs;
            for (const auto& t : factor_texts) fs.push_back(read_poly(t, in));
            auto r = search::inflate_construction(search::make_case(fs), inflate_k, !no_weak);
            const auto& c = r.fcase;
            mpz_class hmax = 0;
            for (const auto& g : c.factors) hmax = std::max(hmax, polycore::height(g));
            if (as_json) {
                json j = {{"command", "inflate"}, {"k", inflate_k}, {"degree", c.product.deg()},
                          {"height", polycore::height(c.product).get_str()}, {"factor_count", c.factors.size()},
                          {"max_factor_height", hmax.get_str()}, {"case", case_json(c)}};
                json weak = json::array();
                for (const auto& w : r.weak) weak.push_back({{"passed", w.passed}, {"reason", w.reason}});
                j["weak"] = weak;
                print_json(out, j);
            } else {
                out << "degree " << c.product.deg() << "  height " << polycore::height(c.product) << "  factors "
                    << c.factors.size() << "  max factor height " << hmax << "\n";
                for (const auto& w : r.weak)
                    if (!w.passed) out << "new factor not weakly irreducible: " << w.reason << "\n";
            }
            return 0;
        };
    });

    // conjecture
    unsigned conj_k = 2;
    std::size_t samples = 0;
    auto* c_conj = app.add_subcommand("conjecture", "ht(f^k) against C(k, k/2) ht(f)");
    c_conj->add_option("poly", poly_text)->required();
    c_conj->add_option("--k", conj_k);
    c_conj->add_option("--samples", samples, "also estimate the maximum modulus on the unit circle");
    c_conj->callback([&] {
        action = [&] {
            const IntPoly f = read_poly(poly_text, in);
            auto r = search::conjecture_power_check(f, conj_k);
            json j = {{"command", "conjecture"}, {"poly", poly_json(f)}, {"k", conj_k}, {"lhs", r.lhs.get_str()},
                      {"rhs", r.rhs.get_str()}, {"holds", r.holds}, {"equality", r.equality}};
            std::ostringstream text;
            text << "ht(f^" << conj_k << ") = " << r.lhs << "  C(k,k/2) ht(f) = " << r.rhs << "  "
                 << (r.equality ? "equality" : r.holds ? "holds" : "VIOLATED") << "\n";
            if (samples) {
                const double m = search::max_modulus_estimate(f, samples);
                std::ostringstream ms;
                ms << std::setprecision(12) << m;
                j["max_modulus"] = ms.str();
                text << "max modulus on |x| = 1: " << ms.str() << "\n";
            }
            if (as_json) print_json(out, j);
            else out << text.str();
            return 0;
        };
    });

    // minmul
    std::size_t dhat = 0;
    auto* c_min = app.add_subcommand("minmul", "monic rational cofactor minimizing the l2 norm of f h");
    c_min->add_option("poly", poly_text)->required();
    c_min->add_option("--dhat", dhat, "degree of h")->required();
    c_min->callback([&] {
        action = [&] {
            const IntPoly f = read_poly(poly_text, in);
            if (f.is_zero()) throw UsageError("zero polynomial");
            auto r = bounds::min_l2_multiple(f, dhat);
            json cof = json::array();
            for (std::size_t i = r.cofactor.size(); i-- > 0;) cof.push_back(r.cofactor[i].get_str());
            if (as_json) {
                print_json(out, {{"command", "minmul"}, {"poly", poly_json(f)}, {"dhat", dhat}, {"cofactor_desc", cof},
                                 {"l2_squared", r.l2_squared.get_str()}, {"l2", r.l2.str(12)}});
            } else {
                out << "h desc [";
                for (std::size_t i = 0; i < cof.size(); ++i) out << (i ? ", " : "") << cof[i].get<std::string>();
                out << "]\n|f h|_2^2 = " << r.l2_squared.get_str() << "\n|f h|_2 <= " << r.l2.str(12) << "\n";
            }
            return 0;
        };
    });

    // CLI11 wants argv with a program name in front.
    std::vector<std::string> storage{"fcb"};
    storage.insert(storage.end(), args.begin(), args.end());
    // CLI11 splits "[a,b,c]" into several values for vector options; a leading
    // space keeps a bracketed polynomial whole and the parser skips it.
    for (auto& s : storage)
        if (!s.empty() && s.front() == '[') s.insert(s.begin(), ' ');
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "fcb: " << e.what() << "\n";
        return 1;
    }

    try {
        return action ? action() : 1;
    } catch (const polycore::ParseError& e) {
        err << "fcb: cannot parse polynomial: " << e.what() << "\n";
    } catch (const search::FixtureError& e) {
        err << "fcb: " << e.what() << "\n";
        return kFixtureFailure;
    } catch (const std::exception& e) {
        err << "fcb: " << e.what() << "\n";
    }
    return 1;
}

}  // namespace cli
