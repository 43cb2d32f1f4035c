#pragma once

#include <iosfwd>
#include <string>

#include "hermicert/hpoly.hpp"

namespace hermicert {

/// Line-oriented HPOLY text format:
///
///   hpoly 1
///   n <count>
///   term <re_num>/<re_den> <im_num>/<im_den> <a_1> ... <a_n> | <b_1> ... <b_n>
///
/// The reader accepts either triangle of the Hermitian pair, mirrors each
/// entry and rejects inconsistent duplicates. The writer emits graded-lex
/// sorted entries, lower triangle only.
hermitian_poly read_hpoly(std::istream& in);
hermitian_poly read_hpoly_file(const std::string& path);

void write_hpoly(std::ostream& out, const hermitian_poly& r);
std::string hpoly_to_string(const hermitian_poly& r);

/// FNV-1a digest of the canonical serialization; stable across runs.
std::string hpoly_digest(const hermitian_poly& r);

}  // namespace hermicert
