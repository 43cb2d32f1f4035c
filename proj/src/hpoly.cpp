#include "hermicert/hpoly.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace hermicert {

std::vector<multi_index> monomials_of_weight(std::size_t n, int weight) {
  std::vector<multi_index> out;
  multi_index cur(n);
  // Recursive stars-and-bars enumeration; emission order is lex within the
  // fixed weight, which matches graded-lex.
  auto rec = [&](auto&& self, std::size_t pos, int rest) -> void {
    if (pos + 1 == n) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, weight);
  return out;
}

rational snap_to_rational(double x, unsigned long max_den) {
  if (!std::isfinite(x)) throw std::domain_error("snap_to_rational: non-finite");
  bool neg = x < 0;
  double v = neg ? -x : x;
  // Continued fraction expansion with a denominator cap.
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e17) break;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0;
    long long q2 = a * q1 + q0;
    if (q2 > static_cast<long long>(max_den) || p2 < 0 || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return rational_from_double(x);
  rational q(static_cast<long>(neg ? -p1 : p1), static_cast<long>(q1));
  q.canonicalize();
  return q;
}

void hermitian_poly::add_term(const multi_index& a, const multi_index& b, gauss_rational v) {
  if (a.size() != n_ || b.size() != n_)
    throw std::invalid_argument("hermitian_poly: index length mismatch");
  if (!a.all_nonnegative() || !b.all_nonnegative())
    throw std::invalid_argument("hermitian_poly: negative exponent");
  if (v.is_zero()) return;
  auto [it, inserted] = c_.try_emplace({a, b}, std::move(v));
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
  }
}

bool hermitian_poly::is_hermitian() const {
  for (const auto& [k, v] : c_) {
    auto it = c_.find({k.second, k.first});
    if (it == c_.end() || !(it->second == v.conj())) return false;
  }
  return true;
}

void hermitian_poly::require_hermitian() const {
  if (!is_hermitian())
    throw malformed_input("coefficient matrix is not Hermitian symmetric");
}

bool hermitian_poly::is_diagonal() const {
  for (const auto& [k, v] : c_)
    if (!(k.first == k.second)) return false;
  return true;
}

degree_info_t hermitian_poly::degree_info() const {
  degree_info_t d;
  if (c_.empty()) return d;  // zero polynomial: (0, 0, true)
  for (const auto& [k, v] : c_) {
    int wa = k.first.weight(), wb = k.second.weight();
    d.deg_z = std::max({d.deg_z, wa, wb});
    d.total_degree = std::max(d.total_degree, wa + wb);
  }
  d.squared_norm_parity = (d.total_degree == 2 * d.deg_z);
  return d;
}

hermitian_poly& hermitian_poly::operator+=(const hermitian_poly& o) {
  if (o.n_ != n_) throw std::invalid_argument("hermitian_poly: dimension mismatch");
  for (const auto& [k, v] : o.c_) add_term(k.first, k.second, v);
  return *this;
}

hermitian_poly& hermitian_poly::operator-=(const hermitian_poly& o) {
  if (o.n_ != n_) throw std::invalid_argument("hermitian_poly: dimension mismatch");
  for (const auto& [k, v] : o.c_) add_term(k.first, k.second, -v);
  return *this;
}

hermitian_poly operator*(const hermitian_poly& a, const hermitian_poly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("hermitian_poly: dimension mismatch");
  hermitian_poly r(a.n_);
  for (const auto& [ka, va] : a.c_)
    for (const auto& [kb, vb] : b.c_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
  return r;
}

hermitian_poly operator*(const gauss_rational& s, const hermitian_poly& a) {
  hermitian_poly r(a.n_);
  if (s.is_zero()) return r;
  for (const auto& [k, v] : a.c_) r.add_term(k.first, k.second, s * v);
  return r;
}

hermitian_poly hermitian_poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("hermitian_poly: negative power");
  hermitian_poly acc = constant(n_, gauss_rational(1));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

namespace {

cplx cpow(cplx base, int e) {
  cplx acc(1.0, 0.0);
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

cplx hermitian_poly::eval(std::span<const cplx> z, std::span<const cplx> w) const {
  if (z.size() != n_ || w.size() != n_)
    throw std::invalid_argument("hermitian_poly::eval: dimension mismatch");
  cplx acc(0.0, 0.0);
  for (const auto& [k, v] : c_) {
    cplx t = v.to_complex();
    for (std::size_t j = 0; j < n_; ++j) {
      if (k.first[j]) t *= cpow(z[j], k.first[j]);
      if (k.second[j]) t *= cpow(std::conj(w[j]), k.second[j]);
    }
    acc += t;
  }
  return acc;
}

gauss_rational hermitian_poly::eval_exact(std::span<const gauss_rational> z,
                                          std::span<const gauss_rational> w) const {
  if (z.size() != n_ || w.size() != n_)
    throw std::invalid_argument("hermitian_poly::eval_exact: dimension mismatch");
  gauss_rational acc;
  for (const auto& [k, v] : c_) {
    gauss_rational t = v;
    for (std::size_t j = 0; j < n_; ++j) {
      if (k.first[j]) t *= pow_n(z[j], k.first[j]);
      if (k.second[j]) t *= pow_n(w[j].conj(), k.second[j]);
    }
    acc += t;
  }
  return acc;
}

hermitian_poly hermitian_poly::dz(std::size_t i) const {
  hermitian_poly r(n_);
  for (const auto& [k, v] : c_) {
    int e = k.first[i];
    if (e == 0) continue;
    multi_index a = k.first;
    a[i] = e - 1;
    r.add_term(a, k.second, gauss_rational(static_cast<long>(e)) * v);
  }
  return r;
}

hermitian_poly hermitian_poly::dwbar(std::size_t i) const {
  hermitian_poly r(n_);
  for (const auto& [k, v] : c_) {
    int e = k.second[i];
    if (e == 0) continue;
    multi_index b = k.second;
    b[i] = e - 1;
    r.add_term(k.first, b, gauss_rational(static_cast<long>(e)) * v);
  }
  return r;
}

std::vector<multi_index> hermitian_poly::support_monomials() const {
  std::set<multi_index> s;
  for (const auto& [k, v] : c_) {
    s.insert(k.first);
    s.insert(k.second);
  }
  return {s.begin(), s.end()};
}

bool hermitian_poly::has_pure_terms() const {
  for (const auto& [k, v] : c_) {
    bool a0 = k.first.weight() == 0, b0 = k.second.weight() == 0;
    if ((a0 && !b0) || (b0 && !a0)) return true;
  }
  return false;
}

double hermitian_poly::max_coeff_abs() const {
  double m = 0.0;
  for (const auto& [k, v] : c_) m = std::max(m, v.abs_approx());
  return m;
}

// ---------------------------------------------------------------------------

void real_poly::add_term(const multi_index& a, rational v) {
  if (a.size() != n_) throw std::invalid_argument("real_poly: index length mismatch");
  v.canonicalize();
  if (sgn(v) == 0) return;
  auto [it, inserted] = c_.try_emplace(a, std::move(v));
  if (!inserted) {
    it->second += v;
    if (sgn(it->second) == 0) c_.erase(it);
  }
}

int real_poly::degree() const {
  int d = 0;
  for (const auto& [k, v] : c_) d = std::max(d, k.weight());
  return d;
}

bool real_poly::is_homogeneous() const {
  if (c_.empty()) return true;
  int d = c_.begin()->first.weight();
  for (const auto& [k, v] : c_)
    if (k.weight() != d) return false;
  return true;
}

real_poly& real_poly::operator+=(const real_poly& o) {
  if (o.n_ != n_) throw std::invalid_argument("real_poly: dimension mismatch");
  for (const auto& [k, v] : o.c_) add_term(k, v);
  return *this;
}

real_poly operator*(const real_poly& a, const real_poly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("real_poly: dimension mismatch");
  real_poly r(a.n_);
  for (const auto& [ka, va] : a.c_)
    for (const auto& [kb, vb] : b.c_) r.add_term(ka + kb, va * vb);
  return r;
}

real_poly real_poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("real_poly: negative power");
  real_poly acc(n_);
  acc.add_term(multi_index(n_), rational(1));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

rational real_poly::eval_exact(std::span<const rational> x) const {
  if (x.size() != n_) throw std::invalid_argument("real_poly::eval_exact: dimension mismatch");
  rational acc(0);
  for (const auto& [k, v] : c_) {
    rational t = v;
    for (std::size_t j = 0; j < n_; ++j)
      for (int e = 0; e < k[j]; ++e) t *= x[j];
    acc += t;
  }
  return acc;
}

double real_poly::eval(std::span<const double> x) const {
  double acc = 0;
  for (const auto& [k, v] : c_) {
    double t = v.get_d();
    for (std::size_t j = 0; j < n_; ++j)
      for (int e = 0; e < k[j]; ++e) t *= x[j];
    acc += t;
  }
  return acc;
}

// ---------------------------------------------------------------------------

hermitian_poly from_real(const real_poly& rho, std::size_t n) {
  if (rho.vars() != 2 * n)
    throw malformed_input("from_real: variable count must be even (x_1..x_n, y_1..y_n)");
  // x_j -> (z_j + conj(w_j))/2, y_j -> (z_j - conj(w_j))/(2i).
  std::vector<hermitian_poly> xf, yf;
  const gauss_rational half(1, 2);
  const gauss_rational mhalf_i(rational(0), rational(-1, 2));
  const gauss_rational half_i(rational(0), rational(1, 2));
  for (std::size_t j = 0; j < n; ++j) {
    hermitian_poly x(n);
    x.add_term(unit_index(n, j), multi_index(n), half);
    x.add_term(multi_index(n), unit_index(n, j), half);
    xf.push_back(std::move(x));
    hermitian_poly y(n);
    y.add_term(unit_index(n, j), multi_index(n), mhalf_i);
    y.add_term(multi_index(n), unit_index(n, j), half_i);
    yf.push_back(std::move(y));
  }
  hermitian_poly out(n);
  for (const auto& [k, v] : rho.terms()) {
    hermitian_poly term = hermitian_poly::constant(n, gauss_rational(v));
    for (std::size_t j = 0; j < n; ++j) {
      for (int e = 0; e < k[j]; ++e) term = term * xf[j];
      for (int e = 0; e < k[n + j]; ++e) term = term * yf[j];
    }
    out += term;
  }
  out.require_hermitian();
  return out;
}

real_poly moment_image(const hermitian_poly& r) {
  if (!r.is_diagonal())
    throw malformed_input("moment_image: coefficient matrix is not diagonal");
  real_poly R(r.vars());
  for (const auto& [k, v] : r.terms()) {
    // Diagonal entries of a Hermitian matrix are real.
    R.add_term(k.first, v.re());
  }
  return R;
}

hermitian_poly from_moment(const real_poly& R) {
  hermitian_poly r(R.vars());
  for (const auto& [k, v] : R.terms()) r.add_term(k, k, gauss_rational(v));
  return r;
}

hermitian_poly norm_sq_poly(std::size_t n) {
  hermitian_poly r(n);
  for (std::size_t j = 0; j < n; ++j)
    r.add_term(unit_index(n, j), unit_index(n, j), gauss_rational(1));
  return r;
}

// ---------------------------------------------------------------------------

void exact_holo::add_term(const multi_index& a, gauss_rational v) {
  if (a.size() != n) throw std::invalid_argument("exact_holo: index length mismatch");
  if (v.is_zero()) return;
  auto [it, inserted] = c.try_emplace(a, std::move(v));
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

int exact_holo::degree() const {
  int d = 0;
  for (const auto& [k, v] : c) d = std::max(d, k.weight());
  return d;
}

cplx exact_holo::eval(std::span<const cplx> z) const {
  cplx acc(0.0, 0.0);
  for (const auto& [k, v] : c) {
    cplx t = v.to_complex();
    for (std::size_t j = 0; j < n; ++j) t *= cpow(z[j], k[j]);
    acc += t;
  }
  return acc;
}

gauss_rational exact_holo::eval_exact(std::span<const gauss_rational> z) const {
  gauss_rational acc;
  for (const auto& [k, v] : c) {
    gauss_rational t = v;
    for (std::size_t j = 0; j < n; ++j) t *= pow_n(z[j], k[j]);
    acc += t;
  }
  return acc;
}

hermitian_poly sesquilinear_product(const exact_holo& p, const exact_holo& q) {
  if (p.n != q.n) throw std::invalid_argument("sesquilinear_product: dimension mismatch");
  hermitian_poly r(p.n);
  for (const auto& [a, va] : p.c)
    for (const auto& [b, vb] : q.c) r.add_term(a, b, va * vb.conj());
  return r;
}

}  // namespace hermicert
