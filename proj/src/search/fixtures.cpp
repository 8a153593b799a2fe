#include "search/fixtures.hpp"

#include "parallel.hpp"
#include "polycore/cyclotomic.hpp"
#include "polycore/textio.hpp"
#include "search/xd1.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace search {

namespace fs = std::filesystem;
using nlohmann::json;
using polycore::from_desc_strings;
using polycore::height;

FixtureFile load_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture file " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw FixtureError(path + ": " + e.what());
    }
    FixtureFile f;
    f.path = path;
    f.table = doc.value("table", "");
    const std::string file = fs::path(path).filename().string();
    if (!doc.contains("records") || !doc["records"].is_array()) throw FixtureError(path + ": no records array");
    for (const auto& r : doc["records"]) {
        FixtureRecord rec;
        rec.file = file;
        rec.id = r.value("id", "");
        rec.kind = r.value("kind", "");
        rec.data = r;
        if (rec.id.empty() || rec.kind.empty()) throw FixtureError(path + ": record without id or kind");
        f.records.push_back(std::move(rec));
    }
    return f;
}

std::vector<FixtureFile> load_fixture_dir(const std::string& dir) {
    if (!fs::is_directory(dir)) throw FixtureError("not a fixture directory: " + dir);
    std::vector<std::string> paths;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") paths.push_back(e.path().string());
    std::sort(paths.begin(), paths.end());
    std::vector<FixtureFile> out;
    for (const auto& p : paths) out.push_back(load_fixture_file(p));
    return out;
}

const FixtureRecord& find_record(const std::vector<FixtureFile>& files, const std::string& file_stem,
                                 const std::string& id) {
    for (const auto& f : files)
        for (const auto& r : f.records)
            if (fs::path(r.file).stem() == file_stem && r.id == id) return r;
    throw FixtureError("no fixture record " + file_stem + ":" + id);
}

namespace {

std::vector<IntPoly> factors_of(const FixtureRecord& r) {
    std::vector<IntPoly> fs;
    for (const auto& f : r.data.at("factors")) fs.push_back(from_desc_strings(f));
    return fs;
}

mpz_class expected_int(const json& e, const char* key) { return mpz_class(e.at(key).get<std::string>()); }

std::string str(const mpz_class& z) { return z.get_str(); }

void check_equal(std::vector<std::string>& problems, const std::string& what, const mpz_class& got,
                 const mpz_class& want) {
    if (got != want) problems.push_back(what + " is " + str(got) + ", expected " + str(want));
}

void check_tags(const FixtureRecord& r, const std::vector<IntPoly>& factors, std::vector<std::string>& problems) {
    if (!r.data.contains("tags")) return;
    for (const auto& t : r.data["tags"]) {
        const Tag tag = tag_from_string(t.get<std::string>());
        if (tag == Tag::palindromic) {
            for (const auto& g : factors)
                if (!polycore::is_pm_palindromic(g)) problems.push_back("factor " + polycore::format_list(g) + " is not palindromic");
        } else if (tag == Tag::star_symmetric) {
            if (factors.size() != 2) {
                problems.push_back("star_symmetric needs exactly two factors");
            } else {
                const IntPoly s = polycore::star(factors[0]);
                if (factors[1] != s && factors[1] != -s) problems.push_back("second factor is not star(first)");
            }
        } else if (tag == Tag::irreducible_claimed) {
            for (const auto& g : factors) {
                auto w = weak_irreducibility(g);
                if (!w.passed) problems.push_back("factor " + polycore::format_list(g) + " fails the weak test: " + w.reason);
            }
        }
    }
}

void verify_factorization(const FixtureRecord& r, std::vector<std::string>& problems) {
    const auto factors = factors_of(r);
    if (factors.empty()) {
        problems.push_back("empty factor list");
        return;
    }
    const IntPoly product = product_of(factors);
    if (r.data.contains("product") && from_desc_strings(r.data["product"]) != product)
        problems.push_back("stored product differs from the product of the factors");
    const auto& e = r.data.at("expected");
    check_equal(problems, "product height", height(product), expected_int(e, "product_height"));
    const auto& fh = e.at("factor_heights");
    if (fh.size() != factors.size()) {
        problems.push_back("factor_heights has the wrong length");
    } else {
        for (std::size_t i = 0; i < factors.size(); ++i)
            check_equal(problems, "height of factor " + std::to_string(i + 1), height(factors[i]),
                        mpz_class(fh[i].get<std::string>()));
    }
    if (sgn(height(product)) > 0) {
        auto c = make_case(factors);
        mpq_class want(e.at("ratio").get<std::string>());
        want.canonicalize();
        if (ratio(c).value != want) problems.push_back("ratio is " + ratio(c).value.get_str() + ", expected " + want.get_str());
        if (e.contains("printed_ratio") && !printed_ratio_matches(ratio(c).value, e["printed_ratio"].get<std::string>()))
            problems.push_back("ratio " + ratio(c).value.get_str() + " disagrees with the printed " + e["printed_ratio"].get<std::string>());
    }
    check_tags(r, factors, problems);
}

void verify_divides(const FixtureRecord& r, std::vector<std::string>& problems) {
    const IntPoly p = from_desc_strings(r.data.at("product"));
    const IntPoly g = from_desc_strings(r.data.at("divisor"));
    if (!polycore::exact_divide(p, g)) problems.push_back("divisor does not divide the product");
    const auto& e = r.data.at("expected");
    check_equal(problems, "product height", height(p), expected_int(e, "product_height"));
    check_equal(problems, "divisor height", height(g), expected_int(e, "divisor_height"));
    check_tags(r, {g}, problems);
}

void verify_height_only(const FixtureRecord& r, std::vector<std::string>& problems) {
    const auto& e = r.data.at("expected");
    if (!e.contains("divisor_height") || !r.data.contains("printed_prefixes")) return;
    const mpz_class h = expected_int(e, "divisor_height");
    const auto& pre = r.data["printed_prefixes"];
    if (pre.contains("divisor")) {
        mpz_class m = 0;
        for (const auto& c : pre["divisor"]) m = std::max(m, mpz_class(abs(mpz_class(c.get<std::string>()))));
        if (m > h) problems.push_back("printed prefix exceeds the stated height");
    }
}

void verify_cyclotomic(const FixtureRecord& r, std::vector<std::string>& problems) {
    const auto n = r.data.at("index").get<std::uint64_t>();
    check_equal(problems, "ht(phi_" + std::to_string(n) + ")", cyclotomic_height(n), expected_int(r.data.at("expected"), "height"));
    if (r.data.contains("index_factorization")) {
        std::vector<std::uint64_t> primes;
        for (auto [p, e] : polycore::factor_u64(n)) primes.push_back(p);
        if (primes != r.data["index_factorization"].get<std::vector<std::uint64_t>>())
            problems.push_back("index factorization differs");
    }
}

void verify_xd1(const FixtureRecord& r, std::vector<std::string>& problems) {
    const auto d = r.data.at("d").get<std::uint64_t>();
    const auto idx = r.data.at("indices").get<std::vector<std::uint64_t>>();
    for (auto n : idx)
        if (n == 0 || d % n != 0) problems.push_back(std::to_string(n) + " does not divide " + std::to_string(d));
    if (!problems.empty()) return;
    check_equal(problems, "factor height", height(cyclotomic_product(idx)), expected_int(r.data.at("expected"), "height"));
}

}  // namespace

bool printed_ratio_matches(const mpq_class& value, const std::string& printed) {
    const auto dot = printed.find('.');
    const std::size_t places = dot == std::string::npos ? 0 : printed.size() - dot - 1;
    std::string digits = printed;
    if (dot != std::string::npos) digits.erase(dot, 1);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    const mpz_class want(digits);
    const mpq_class scaled = value * scale;
    if (places == 0) return scaled == mpq_class(want);
    // Two-decimal entries in the tables are sometimes truncated, sometimes rounded.
    mpz_class down, half_up;
    mpz_fdiv_q(down.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const mpq_class shifted = scaled + mpq_class(1, 2);
    mpz_fdiv_q(half_up.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return want == down || want == half_up;
}

FactorizationCase case_from_record(const FixtureRecord& r) {
    if (r.kind != "factorization" && r.kind != "bound_table")
        throw FixtureError(r.name() + ": not a factorization record");
    auto factors = factors_of(r);
    std::set<Tag> tags;
    if (r.data.contains("tags"))
        for (const auto& t : r.data["tags"]) tags.insert(tag_from_string(t.get<std::string>()));
    auto c = make_case(std::move(factors), r.data.value("citation", r.name()), tags);
    if (r.data.contains("product") && from_desc_strings(r.data["product"]) != c.product)
        throw FixtureError(r.name() + ": product mismatch");
    return c;
}

RecordCheck verify_record(const FixtureRecord& r) {
    RecordCheck c;
    c.name = r.name();
    c.kind = r.kind;
    try {
        if (r.kind == "factorization" || r.kind == "bound_table") verify_factorization(r, c.problems);
        else if (r.kind == "divides") verify_divides(r, c.problems);
        else if (r.kind == "height_only") verify_height_only(r, c.problems);
        else if (r.kind == "cyclotomic_height") verify_cyclotomic(r, c.problems);
        else if (r.kind == "xd1_factor") verify_xd1(r, c.problems);
        else c.problems.push_back("unknown record kind " + r.kind);
    } catch (const std::exception& e) {
        c.problems.push_back(std::string("malformed record: ") + e.what());
    }
    return c;
}

CorpusReport verify_corpus(const std::vector<FixtureFile>& files, unsigned workers) {
    std::vector<const FixtureRecord*> all;
    for (const auto& f : files)
        for (const auto& r : f.records) all.push_back(&r);
    CorpusReport rep;
    rep.checks.resize(all.size());
    detail::parallel_for(all.size(), workers, [&](std::size_t i, unsigned) { rep.checks[i] = verify_record(*all[i]); }, 1);
    for (const auto& c : rep.checks) rep.failures += !c.ok();
    return rep;
}

}  // namespace search
