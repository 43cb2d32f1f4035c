#include "hermicert/fixtures.hpp"

#include <functional>

namespace hermicert {

namespace {

rational get_param(const fixture_params& p, const std::string& key, const char* fixture,
                   const rational* fallback = nullptr) {
  auto it = p.find(key);
  if (it != p.end()) return it->second;
  if (fallback) return *fallback;
  throw malformed_input(std::string("fixture ") + fixture + ": missing parameter '" + key + "'");
}

long get_int_param(const fixture_params& p, const std::string& key, const char* fixture,
                   const long* fallback = nullptr) {
  auto it = p.find(key);
  if (it == p.end()) {
    if (fallback) return *fallback;
    throw malformed_input(std::string("fixture ") + fixture + ": missing parameter '" + key + "'");
  }
  if (it->second.get_den() != 1)
    throw malformed_input(std::string("fixture ") + fixture + ": parameter '" + key +
                          "' must be an integer");
  return it->second.get_num().get_si();
}

// alpha*(z + conj z)^2 + |z|^2
hermitian_poly resq(const rational& alpha) {
  hermitian_poly zpzb(1);
  zpzb.add_term({1}, {0}, gauss_rational(1));
  zpzb.add_term({0}, {1}, gauss_rational(1));
  hermitian_poly r = gauss_rational(alpha) * (zpzb * zpzb);
  r.add_term({1}, {1}, gauss_rational(1));
  return r;
}

hermitian_poly diagquartic(const rational& lambda) {
  hermitian_poly r(2);
  r.add_term({2, 0}, {2, 0}, gauss_rational(1));
  r.add_term({1, 1}, {1, 1}, gauss_rational(lambda));
  r.add_term({0, 2}, {0, 2}, gauss_rational(1));
  return r;
}

hermitian_poly ball4(const rational& lambda) {
  hermitian_poly r = norm_sq_poly(2).pow(4);
  r.add_term({2, 2}, {2, 2}, gauss_rational(-lambda));
  return r;
}

hermitian_poly ballprod(long n, const rational& a) {
  if (n < 1) throw malformed_input("fixture ballprod: n must be >= 1");
  hermitian_poly r = norm_sq_poly(n).pow(2 * static_cast<int>(n));
  multi_index twos(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j) twos[j] = 2;
  r.add_term(twos, twos, gauss_rational(-a));
  return r;
}

hermitian_poly modgap() {
  hermitian_poly d(2);
  d.add_term({1, 0}, {1, 0}, gauss_rational(1));
  d.add_term({0, 1}, {0, 1}, gauss_rational(-1));
  return d * d;
}

hermitian_poly modgap3() {
  hermitian_poly d(3);
  d.add_term({1, 1, 0}, {1, 1, 0}, gauss_rational(1));
  d.add_term({0, 0, 2}, {0, 0, 2}, gauss_rational(-1));
  hermitian_poly r = d * d;
  r.add_term({4, 0, 0}, {4, 0, 0}, gauss_rational(1));
  return r;
}

hermitian_poly re_power(int p) {
  hermitian_poly zpzb(1);
  zpzb.add_term({1}, {0}, gauss_rational(1));
  zpzb.add_term({0}, {1}, gauss_rational(1));
  return zpzb.pow(p);
}

hermitian_poly re4one() {
  hermitian_poly r = re_power(4);
  r.add_term({0}, {0}, gauss_rational(1));
  r.add_term({1}, {1}, gauss_rational(1));
  return r;
}

hermitian_poly re4zero() {
  hermitian_poly r = re_power(4);
  r.add_term({1}, {1}, gauss_rational(1));
  r.add_term({3}, {3}, gauss_rational(1));
  return r;
}

hermitian_poly re2(const rational& alpha, const rational& shift) {
  hermitian_poly r = re_power(2);
  r.add_term({1}, {1}, gauss_rational(alpha));
  r.add_term({0}, {0}, gauss_rational(shift));
  return r;
}

hermitian_poly pure_terms(long m) {
  if (m < 1) throw malformed_input("fixture pure: m must be >= 1");
  hermitian_poly r(1);
  r.add_term({static_cast<int>(m)}, {0}, gauss_rational(1));
  r.add_term({0}, {static_cast<int>(m)}, gauss_rational(1));
  return r;
}

hermitian_poly modpow(long k) {
  if (k < 0) throw malformed_input("fixture modpow: k must be >= 0");
  hermitian_poly r(1);
  r.add_term({static_cast<int>(k)}, {static_cast<int>(k)}, gauss_rational(1));
  return r;
}

// (xy - 1)^2 + x^2 written in (z, conj z); positive with infimum zero.
hermitian_poly hyperbola() {
  real_poly rho(2);
  rho.add_term({2, 2}, rational(1));
  rho.add_term({1, 1}, rational(-2));
  rho.add_term({0, 0}, rational(1));
  rho.add_term({2, 0}, rational(1));
  return from_real(rho, 1);
}

// |z1|^8 + (|z2|^2 + |z3|^2)^4 - beta |z2 z3|^4
hermitian_poly radsum(const rational& beta) {
  hermitian_poly pair(3);
  pair.add_term({0, 1, 0}, {0, 1, 0}, gauss_rational(1));
  pair.add_term({0, 0, 1}, {0, 0, 1}, gauss_rational(1));
  hermitian_poly r = pair.pow(4);
  r.add_term({0, 2, 2}, {0, 2, 2}, gauss_rational(-beta));
  r.add_term({4, 0, 0}, {4, 0, 0}, gauss_rational(1));
  return r;
}

hermitian_poly axes8() {
  hermitian_poly r(2);
  r.add_term({4, 0}, {4, 0}, gauss_rational(1));
  r.add_term({0, 4}, {0, 4}, gauss_rational(1));
  return r;
}

hermitian_poly onepluspow(long d) {
  if (d < 0) throw malformed_input("fixture onepluspow: d must be >= 0");
  hermitian_poly base(1);
  base.add_term({0}, {0}, gauss_rational(1));
  base.add_term({1}, {1}, gauss_rational(1));
  return base.pow(static_cast<int>(d));
}

// |z1 (z1^2 - 1)|^2 + |z2|^2 - c^2: boundary kernel of a strongly
// pseudoconvex algebraic hypersurface for small c.
hermitian_poly pskernel(const rational& c) {
  exact_holo h(2);
  h.add_term({3, 0}, gauss_rational(1));
  h.add_term({1, 0}, gauss_rational(-1));
  hermitian_poly r = modulus_sq(h);
  r.add_term({0, 1}, {0, 1}, gauss_rational(1));
  r.add_term({0, 0}, {0, 0}, gauss_rational(-c * c));
  return r;
}

hermitian_poly psbody(const rational& m0) {
  hermitian_poly r(2);
  r.add_term({0, 0}, {0, 0}, gauss_rational(m0));
  r.add_term({1, 1}, {1, 1}, gauss_rational(-1));
  return r;
}

}  // namespace

hermitian_poly make_fixture(const std::string& name, const fixture_params& params) {
  static const rational zero(0);
  static const long default_n = 2;
  if (name == "resq") return resq(get_param(params, "alpha", "resq"));
  if (name == "diagquartic") return diagquartic(get_param(params, "lambda", "diagquartic"));
  if (name == "ball4") return ball4(get_param(params, "lambda", "ball4"));
  if (name == "ballprod")
    return ballprod(get_int_param(params, "n", "ballprod"), get_param(params, "a", "ballprod"));
  if (name == "modgap") return modgap();
  if (name == "modgap3") return modgap3();
  if (name == "re4one") return re4one();
  if (name == "re4zero") return re4zero();
  if (name == "re2")
    return re2(get_param(params, "alpha", "re2", &zero), get_param(params, "shift", "re2", &zero));
  if (name == "pure") return pure_terms(get_int_param(params, "m", "pure"));
  if (name == "modpow") return modpow(get_int_param(params, "k", "modpow"));
  if (name == "hyperbola") return hyperbola();
  if (name == "radsum") return radsum(get_param(params, "beta", "radsum"));
  if (name == "axes8") return axes8();
  if (name == "normsq") {
    long n = get_int_param(params, "n", "normsq", &default_n);
    if (n < 1) throw malformed_input("fixture normsq: n must be >= 1");
    return norm_sq_poly(static_cast<std::size_t>(n));
  }
  if (name == "onepluspow") return onepluspow(get_int_param(params, "d", "onepluspow"));
  if (name == "pskernel") return pskernel(get_param(params, "c", "pskernel"));
  if (name == "psbody") return psbody(get_param(params, "m0", "psbody"));
  throw malformed_input("unknown fixture: " + name);
}

std::vector<std::string> fixture_catalog() {
  return {
      "resq alpha          alpha*(z+zbar)^2 + |z|^2                  (n=1)",
      "diagquartic lambda  |z1|^4 + lambda*|z1 z2|^2 + |z2|^4        (n=2)",
      "ball4 lambda        (|z1|^2+|z2|^2)^4 - lambda*|z1 z2|^4      (n=2)",
      "ballprod n a        ||z||^(4n) - a*|z1...zn|^4",
      "modgap              (|z1|^2 - |z2|^2)^2                       (n=2)",
      "modgap3             (|z1 z2|^2 - |z3|^4)^2 + |z1|^8           (n=3)",
      "re4one              1 + (z+zbar)^4 + |z|^2                    (n=1)",
      "re4zero             |z|^2 + (z+zbar)^4 + |z|^6                (n=1)",
      "re2 [alpha] [shift] shift + alpha*|z|^2 + (z+zbar)^2          (n=1)",
      "pure m              z^m + zbar^m                              (n=1)",
      "modpow k            |z|^(2k)                                  (n=1)",
      "hyperbola           (xy-1)^2 + x^2 in z = x+iy                (n=1)",
      "radsum beta         |z1|^8 + (|z2|^2+|z3|^2)^4 - beta*|z2 z3|^4  (n=3)",
      "axes8               |z1|^8 + |z2|^8                           (n=2)",
      "normsq [n=2]        |z1|^2 + ... + |zn|^2",
      "onepluspow d        (1 + |z|^2)^d                             (n=1)",
      "pskernel c          |z1(z1^2-1)|^2 + |z2|^2 - c^2             (n=2)",
      "psbody m0           m0 - |z1 z2|^2                            (n=2)",
  };
}

bool is_fixture_path(const std::string& path) { return path.rfind("fixture:", 0) == 0; }

hermitian_poly load_fixture_path(const std::string& path) {
  if (!is_fixture_path(path)) throw malformed_input("not a fixture path: " + path);
  std::string rest = path.substr(8);
  std::string name = rest;
  fixture_params params;
  auto qpos = rest.find('?');
  if (qpos != std::string::npos) {
    name = rest.substr(0, qpos);
    std::string query = rest.substr(qpos + 1);
    std::size_t start = 0;
    while (start < query.size()) {
      auto amp = query.find('&', start);
      std::string kv = query.substr(start, amp == std::string::npos ? std::string::npos : amp - start);
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw malformed_input("fixture path: expected key=value in '" + kv + "'");
      params[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
      if (amp == std::string::npos) break;
      start = amp + 1;
    }
  }
  return make_fixture(name, params);
}

}  // namespace hermicert
