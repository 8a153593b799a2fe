#pragma once

#include "search/case.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace search {

// Fixture corpus: one JSON file per printed table in fixtures/, each holding
// {"table", "description", "records": [...]}.  Record kinds:
//   factorization, bound_table  factors (+ product), expected heights/ratio
//   divides                     product and one divisor, cofactor not printed
//   height_only                 printed prefix and heights, nothing to rebuild
//   cyclotomic_height           index and the height of phi_index
//   xd1_factor                  d and a list of phi indices dividing it
// Polynomials are descending lists of decimal strings.

class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FixtureRecord {
    std::string file;  // file name without directory
    std::string id;
    std::string kind;
    nlohmann::json data;

    std::string name() const { return file + ":" + id; }
};

struct FixtureFile {
    std::string path;
    std::string table;
    std::vector<FixtureRecord> records;
};

FixtureFile load_fixture_file(const std::string& path);
std::vector<FixtureFile> load_fixture_dir(const std::string& dir);  // sorted by file name

// Factorization-type records only.  Throws FixtureError naming the record
// when the stored product disagrees with the product of the factors.
FactorizationCase case_from_record(const FixtureRecord& r);

struct RecordCheck {
    std::string name;
    std::string kind;
    std::vector<std::string> problems;  // empty when the record verifies
    bool ok() const { return problems.empty(); }
};
RecordCheck verify_record(const FixtureRecord& r);

struct CorpusReport {
    std::vector<RecordCheck> checks;  // file order, then record order
    std::size_t failures = 0;
};
CorpusReport verify_corpus(const std::vector<FixtureFile>& files, unsigned workers = 1);

// True when the decimal string equals value exactly (no decimal point) or
// agrees with it truncated or rounded to the printed number of places.
bool printed_ratio_matches(const mpq_class& value, const std::string& printed);

// Looks up one record; throws FixtureError when absent.
const FixtureRecord& find_record(const std::vector<FixtureFile>& files, const std::string& file_stem,
                                 const std::string& id);

}  // namespace search
