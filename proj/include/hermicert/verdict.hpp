#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hermicert/rational.hpp"

namespace hermicert {

using json = nlohmann::ordered_json;

enum class verdict_status { certified, refuted, undetermined };

inline const char* to_string(verdict_status s) {
  switch (s) {
    case verdict_status::certified: return "CERTIFIED";
    case verdict_status::refuted: return "REFUTED";
    default: return "UNDETERMINED";
  }
}

/// Outcome of a membership test. Certified and Refuted verdicts carry
/// re-checkable evidence (witness points, exponents, factor data);
/// Undetermined records the exhausted budget.
struct class_verdict {
  verdict_status status = verdict_status::undetermined;
  // Witness points for sampling-based refutations, one vector per point.
  std::vector<std::vector<cplx>> witness;
  double value = 0.0;      // violating value / eigenvalue at the witness
  double tolerance = 0.0;  // reporting tolerance the violation exceeded
  int exponent = -1;       // certified power N or multiplier degree d
  json evidence;           // full machine-readable payload
};

/// Deterministic float formatting for reports ("%.17g" round-trips doubles).
std::string format_double(double v);
json point_to_json(const std::vector<cplx>& z);
json points_to_json(const std::vector<std::vector<cplx>>& pts);

}  // namespace hermicert
