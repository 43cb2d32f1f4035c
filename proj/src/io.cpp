#include "hermicert/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hermicert {

namespace {

rational parse_fraction_token(const std::string& tok) {
  if (tok.find('/') == std::string::npos)
    throw malformed_input("HPOLY: coefficient token '" + tok + "' must be num/den");
  return parse_rational(tok);
}

}  // namespace

hermitian_poly read_hpoly(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "hpoly 1")
    throw malformed_input("HPOLY: missing 'hpoly 1' header");
  long n = -1;
  {
    if (!std::getline(in, line)) throw malformed_input("HPOLY: missing 'n <count>' line");
    std::istringstream ls(line);
    std::string kw;
    ls >> kw >> n;
    if (kw != "n" || ls.fail() || n < 0) throw malformed_input("HPOLY: bad 'n <count>' line");
  }
  hermitian_poly r(static_cast<std::size_t>(n));
  hermitian_poly::term_map seen;
  auto record = [&](const multi_index& a, const multi_index& b, const gauss_rational& v) {
    auto [it, inserted] = seen.try_emplace({a, b}, v);
    if (!inserted && !(it->second == v))
      throw malformed_input("HPOLY: conflicting value for entry " + a.str() + "," + b.str());
  };
  std::size_t lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw != "term")
      throw malformed_input("HPOLY line " + std::to_string(lineno) + ": expected 'term'");
    std::string ret, imt;
    ls >> ret >> imt;
    if (ls.fail()) throw malformed_input("HPOLY line " + std::to_string(lineno) + ": bad coefficient");
    gauss_rational v(parse_fraction_token(ret), parse_fraction_token(imt));
    multi_index a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j) ls >> a[j];
    std::string bar;
    ls >> bar;
    if (ls.fail() || bar != "|")
      throw malformed_input("HPOLY line " + std::to_string(lineno) + ": expected '|'");
    for (long j = 0; j < n; ++j) ls >> b[j];
    if (ls.fail())
      throw malformed_input("HPOLY line " + std::to_string(lineno) + ": bad exponents");
    if (!a.all_nonnegative() || !b.all_nonnegative())
      throw malformed_input("HPOLY line " + std::to_string(lineno) + ": negative exponent");
    record(a, b, v);
    record(b, a, v.conj());
  }
  for (const auto& [k, v] : seen) r.add_term(k.first, k.second, v);
  r.require_hermitian();
  return r;
}

hermitian_poly read_hpoly_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw malformed_input("cannot open HPOLY file: " + path);
  return read_hpoly(f);
}

void write_hpoly(std::ostream& out, const hermitian_poly& r) {
  out << "hpoly 1\n";
  out << "n " << r.vars() << "\n";
  for (const auto& [k, v] : r.terms()) {
    if (k.first < k.second) continue;  // lower triangle only
    out << "term " << format_rational(v.re()) << " " << format_rational(v.im());
    for (std::size_t j = 0; j < r.vars(); ++j) out << " " << k.first[j];
    out << " |";
    for (std::size_t j = 0; j < r.vars(); ++j) out << " " << k.second[j];
    out << "\n";
  }
}

std::string hpoly_to_string(const hermitian_poly& r) {
  std::ostringstream os;
  write_hpoly(os, r);
  return os.str();
}

std::string hpoly_digest(const hermitian_poly& r) {
  const std::string s = hpoly_to_string(r);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hermicert
