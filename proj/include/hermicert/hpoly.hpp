#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hermicert/multiindex.hpp"
#include "hermicert/rational.hpp"

namespace hermicert {

struct degree_info_t {
  int deg_z = 0;
  int total_degree = 0;
  // True when total degree equals twice the degree in z. Squared norms
  // always satisfy this, so parity failure soundly rules them out.
  bool squared_norm_parity = true;
};

/// Sparse polynomial in (z, conj(w)) with exact Gaussian-rational
/// coefficients, stored as a map (alpha, beta) -> c.  Restricted to the
/// diagonal w = z it is the function z -> sum c_ab z^a conj(z)^b.
///
/// The type itself does not force Hermitian symmetry; is_hermitian() checks
/// it and require_hermitian() enforces it. Loaders and constructors of
/// user-facing values validate; internal algebra preserves symmetry.
class hermitian_poly {
 public:
  using key = std::pair<multi_index, multi_index>;
  using term_map = std::map<key, gauss_rational>;

  explicit hermitian_poly(std::size_t n) : n_(n) {}

  static hermitian_poly constant(std::size_t n, gauss_rational c) {
    hermitian_poly r(n);
    r.add_term(multi_index(n), multi_index(n), std::move(c));
    return r;
  }

  std::size_t vars() const { return n_; }
  const term_map& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t term_count() const { return c_.size(); }

  gauss_rational coeff(const multi_index& a, const multi_index& b) const {
    auto it = c_.find({a, b});
    return it == c_.end() ? gauss_rational() : it->second;
  }

  /// Accumulates v into entry (a, b); zero results are erased so the
  /// support never stores explicit zeros.
  void add_term(const multi_index& a, const multi_index& b, gauss_rational v);

  bool is_hermitian() const;
  void require_hermitian() const;
  bool is_diagonal() const;

  degree_info_t degree_info() const;
  int deg_z() const { return degree_info().deg_z; }
  int total_degree() const { return degree_info().total_degree; }

  hermitian_poly& operator+=(const hermitian_poly& o);
  hermitian_poly& operator-=(const hermitian_poly& o);
  friend hermitian_poly operator+(hermitian_poly a, const hermitian_poly& b) { return a += b; }
  friend hermitian_poly operator-(hermitian_poly a, const hermitian_poly& b) { return a -= b; }
  friend hermitian_poly operator*(const hermitian_poly& a, const hermitian_poly& b);
  friend hermitian_poly operator*(const gauss_rational& s, const hermitian_poly& a);
  friend bool operator==(const hermitian_poly& a, const hermitian_poly& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  hermitian_poly pow(int e) const;

  /// r(z, conj(w)) in floating arithmetic.
  cplx eval(std::span<const cplx> z, std::span<const cplx> w) const;
  cplx eval_diag(std::span<const cplx> z) const { return eval(z, z); }
  double eval_real(std::span<const cplx> z) const { return eval(z, z).real(); }

  /// Exact evaluation at Gaussian-rational points.
  gauss_rational eval_exact(std::span<const gauss_rational> z,
                            std::span<const gauss_rational> w) const;

  /// Formal partial derivatives; results are generally not Hermitian.
  hermitian_poly dz(std::size_t i) const;
  hermitian_poly dwbar(std::size_t i) const;

  /// Monomials appearing in the support (as alpha or beta), graded-lex.
  std::vector<multi_index> support_monomials() const;

  /// True when every support pair is pure z-power or pure conjugate power
  /// against the constant (entries (k,0) or (0,k) with k nonzero).
  bool has_pure_terms() const;

  double max_coeff_abs() const;

 private:
  std::size_t n_;
  term_map c_;
};

/// Polynomial with real exact coefficients, map multi_index -> rational.
class real_poly {
 public:
  using term_map = std::map<multi_index, rational>;

  explicit real_poly(std::size_t n) : n_(n) {}

  std::size_t vars() const { return n_; }
  const term_map& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  void add_term(const multi_index& a, rational v);
  rational coeff(const multi_index& a) const {
    auto it = c_.find(a);
    return it == c_.end() ? rational(0) : it->second;
  }

  int degree() const;
  bool is_homogeneous() const;

  real_poly& operator+=(const real_poly& o);
  friend real_poly operator*(const real_poly& a, const real_poly& b);
  real_poly pow(int e) const;

  rational eval_exact(std::span<const rational> x) const;
  double eval(std::span<const double> x) const;

 private:
  std::size_t n_;
  term_map c_;
};

/// The substitution x = (z + conj(w))/2, y = (z - conj(w))/(2i) applied to a
/// real polynomial in 2n variables ordered (x_1..x_n, y_1..y_n). The result
/// is Hermitian symmetric and reproduces rho on the real slice exactly.
hermitian_poly from_real(const real_poly& rho, std::size_t n);

/// For a diagonal coefficient matrix, the real polynomial R with
/// r(z, conj(z)) = R(|z_1|^2, ..., |z_n|^2). Throws on non-diagonal input.
real_poly moment_image(const hermitian_poly& r);

/// Inverse direction of the moment identification: x_j -> |z_j|^2.
hermitian_poly from_moment(const real_poly& R);

/// sum_j |z_j|^2 in n variables.
hermitian_poly norm_sq_poly(std::size_t n);

/// Holomorphic polynomial with exact coefficients (map alpha -> c).
struct exact_holo {
  std::size_t n = 1;
  std::map<multi_index, gauss_rational> c;

  exact_holo() = default;
  explicit exact_holo(std::size_t nvars) : n(nvars) {}

  void add_term(const multi_index& a, gauss_rational v);
  int degree() const;
  cplx eval(std::span<const cplx> z) const;
  gauss_rational eval_exact(std::span<const gauss_rational> z) const;
};

/// p(z) * conj(q(w)) as a polynomial in (z, conj(w)).
hermitian_poly sesquilinear_product(const exact_holo& p, const exact_holo& q);

/// |p|^2 = p(z) * conj(p(w)).
inline hermitian_poly modulus_sq(const exact_holo& p) { return sesquilinear_product(p, p); }

}  // namespace hermicert
