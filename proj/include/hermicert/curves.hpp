#pragma once

#include "hermicert/hpoly.hpp"
#include "hermicert/sampling.hpp"
#include "hermicert/verdict.hpp"

namespace hermicert {

/// Polynomial map t -> (z_1(t), ..., z_n(t)) with exact coefficients;
/// comps[j][k] is the t^k coefficient of component j.
struct curve {
  std::vector<std::vector<gauss_rational>> comps;

  std::size_t dim() const { return comps.size(); }
  std::vector<cplx> eval(cplx t) const;
  std::string str() const;
};

/// Exact expansion of t -> r(z(t), conj(z(t))) as a one-variable polynomial
/// in (t, conj t). Hermitian symmetry is preserved.
hermitian_poly pullback(const hermitian_poly& r, const curve& c);

/// Terms of lowest total degree.
hermitian_poly initial_form(const hermitian_poly& r1);

/// True iff r1 vanishes identically or vanishes at 0 to finite even order
/// with initial form c|t|^(2m), c > 0 (exact support and sign check).
bool property_w(const hermitian_poly& r1);

/// Searches a deterministic family of curves (fixture curves, coordinate
/// lines, rational affine lines, then seeded random curves of degree <= 3)
/// for a pullback violating property W. Refutation-only.
class_verdict curve_refute_quotient(const hermitian_poly& r, int budget,
                                    const sampler_config& cfg = {});

struct q1_zero {
  gauss_rational point;
  int multiplicity = 1;
  bool exact = true;       // verified by exact evaluation
  double residual = 0.0;   // division residual for numeric zeros
};

/// Complete one-variable decision: r is a quotient of squared norms iff it
/// factors as prod |z - p_j|^2 times a strictly positive R whose total
/// degree is twice its degree in z. The divides-a-squared-norm condition
/// gives the same verdict in one variable.
struct q1_report {
  enum class verdict_t { in_q, not_in_q, identically_zero };
  verdict_t verdict = verdict_t::not_in_q;
  std::string reason;  // set when not_in_q
  std::vector<q1_zero> zeros;
  hermitian_poly quotient{1};
  bool degree_condition = false;
  double sampled_quotient_min = 0.0;
  double max_division_residual = 0.0;
  bool q_prime_same = true;
  json detail;

  bool in_quotient_class() const {
    return verdict == verdict_t::in_q || verdict == verdict_t::identically_zero;
  }
};

q1_report q1_decide(const hermitian_poly& r1, const sampler_config& cfg = {});

/// Rebuilds prod |z - p_j|^(2 mult) * quotient from a report.
hermitian_poly q1_reconstruct(const q1_report& rep);

/// Flags a positive r1 whose sampled infimum over growing radii decays
/// toward zero although no zero exists; such r1 cannot divide a squared
/// norm. Returns false when a zero is found or no decay is seen.
bool inf_zero_detect(const hermitian_poly& r1, const sampler_config& cfg = {});

}  // namespace hermicert
