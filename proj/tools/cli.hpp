#pragma once

#include "bounds/bounds.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cli {

// Runs one command; args excludes the program name.  Returns 0 on success,
// 1 on bad input or an infeasible configuration, 2 when fixture
// verification fails.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Columns x^delta .. x^0 and Overall, one row per method and a Combined row.
std::string render_bound_table(const bounds::BoundReport& report);

}  // namespace cli
