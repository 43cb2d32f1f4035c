#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hermicert {

using rational = mpq_class;
using cplx = std::complex<double>;

/// Error in user-supplied input (files, CLI arguments, malformed polynomials).
/// The CLI maps this to exit code 2.
struct malformed_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact and floating results disagree beyond reconciliation (e.g. the
/// floating eigenvalue counts of a coefficient matrix cannot be matched to
/// its exact inertia). The CLI maps this to exit code 3.
struct reconciliation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "num/den" or a plain integer into an exact rational.
inline rational parse_rational(const std::string& s) {
  if (s.empty()) throw malformed_input("empty rational literal");
  try {
    rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw malformed_input("bad rational literal: '" + s + "'");
  }
}

/// Always emits the "num/den" form, so files round-trip through one grammar.
inline std::string format_rational(const rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// A Gaussian rational a + bi with exact rational parts. This is the scalar
/// for every coefficient matrix in the library: class membership verdicts at
/// boundary parameters must not depend on floating rounding.
class gauss_rational {
 public:
  gauss_rational() = default;
  // Constructors canonicalize: mpq values built from raw num/den pairs are
  // not in lowest terms, and GMP comparisons assume canonical form.
  gauss_rational(rational re) : re_(std::move(re)) { re_.canonicalize(); }
  gauss_rational(rational re, rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  gauss_rational(long re) : re_(re) {}
  gauss_rational(long num, long den) : re_(num, den) { re_.canonicalize(); }

  static gauss_rational i() { return gauss_rational(rational(0), rational(1)); }

  const rational& re() const { return re_; }
  const rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  gauss_rational conj() const { return gauss_rational(re_, -im_); }

  cplx to_complex() const { return cplx(re_.get_d(), im_.get_d()); }

  gauss_rational& operator+=(const gauss_rational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  gauss_rational& operator-=(const gauss_rational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  gauss_rational& operator*=(const gauss_rational& o) {
    rational re = re_ * o.re_ - im_ * o.im_;
    rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  gauss_rational& operator/=(const gauss_rational& o) {
    if (o.is_zero()) throw std::domain_error("gauss_rational: division by zero");
    rational nrm = o.re_ * o.re_ + o.im_ * o.im_;
    rational re = (re_ * o.re_ + im_ * o.im_) / nrm;
    rational im = (im_ * o.re_ - re_ * o.im_) / nrm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend gauss_rational operator+(gauss_rational a, const gauss_rational& b) { return a += b; }
  friend gauss_rational operator-(gauss_rational a, const gauss_rational& b) { return a -= b; }
  friend gauss_rational operator*(gauss_rational a, const gauss_rational& b) { return a *= b; }
  friend gauss_rational operator/(gauss_rational a, const gauss_rational& b) { return a /= b; }
  friend gauss_rational operator-(const gauss_rational& a) {
    return gauss_rational(-a.re_, -a.im_);
  }
  friend bool operator==(const gauss_rational& a, const gauss_rational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// |a|^2 = a * conj(a), exact.
  rational norm_sq() const { return re_ * re_ + im_ * im_; }

  double abs_approx() const { return std::abs(to_complex()); }

  std::string str() const {
    if (is_real()) return format_rational(re_);
    return format_rational(re_) + (sgn(im_) >= 0 ? "+" : "") + format_rational(im_) + "i";
  }

 private:
  rational re_{0};
  rational im_{0};
};

inline gauss_rational pow_n(gauss_rational base, unsigned long e) {
  gauss_rational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

/// Exactly converts a double into a rational (binary floats are dyadic).
inline rational rational_from_double(double x) {
  rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

/// Nearest rational with denominator at most `max_den`, via continued
/// fractions. Used for snapping numerically found quantities.
rational snap_to_rational(double x, unsigned long max_den);

}  // namespace hermicert
