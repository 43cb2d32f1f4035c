#pragma once

#include <map>
#include <string>
#include <vector>

#include "hermicert/hpoly.hpp"

namespace hermicert {

using fixture_params = std::map<std::string, rational>;

/// Named exact constructions of the recurring example families. Unknown
/// names or parameters raise malformed_input.
hermitian_poly make_fixture(const std::string& name, const fixture_params& params = {});

/// One line per catalog entry: name, parameters, formula.
std::vector<std::string> fixture_catalog();

/// Parses "fixture:name?key=val&key=val" pseudo-paths.
bool is_fixture_path(const std::string& path);
hermitian_poly load_fixture_path(const std::string& path);

}  // namespace hermicert
