#pragma once

#include "hermicert/inertia.hpp"
#include "hermicert/sampling.hpp"
#include "hermicert/verdict.hpp"

namespace hermicert {

/// Non-negativity of z -> r(z, conj z). Sampling (with local refinement)
/// can only refute; certification happens through the exact squared-norm
/// test or, for diagonal homogeneous input, the positive-coefficient
/// multiplier search. Undetermined is the honest remaining outcome.
class_verdict test_p1(const hermitian_poly& r, const sampler_config& cfg = {});

/// Positivity of every k-point kernel matrix [r(z_i, conj z_j)].
class_verdict test_pk(const hermitian_poly& r, int k, const sampler_config& cfg = {});

/// Global inequality r(z,zbar) r(w,wbar) >= |r(z,wbar)|^2.
class_verdict test_cauchy_schwarz(const hermitian_poly& r, const sampler_config& cfg = {});

/// Cross-check that the two-point inequality computed from r agrees in sign
/// with the tensor-identity form computed from a holomorphic decomposition.
struct cs_crosscheck_report {
  bool sign_agreement = true;
  double max_abs_diff = 0.0;  // relative to the pair scale
  double min_slack = 0.0;     // most negative slack seen (relative)
  int pairs = 0;
  json detail;
};
cs_crosscheck_report cs_slack_crosscheck(const hermitian_poly& r, const sampler_config& cfg = {});

/// Plurisubharmonicity of log r where r > 0, decided on samples through the
/// exact symbolic matrix r*r_{z_i zbar_j} - r_{z_i} r_{zbar_j}.
class_verdict test_log_psh(const hermitian_poly& r, const sampler_config& cfg = {});

/// Exact search for the smallest N <= ncap with r^N a squared norm.
/// A two-point inequality violation refutes (taking N-th roots preserves
/// the inequality), so the refutation path reuses test_cauchy_schwarz.
class_verdict test_rad(const hermitian_poly& r, int ncap, const sampler_config& cfg = {});

/// ||F||^2 / ||G||^2 with the tensor arithmetic for sums and products.
struct quotient_rep {
  holo_map num;
  holo_map den;
};
quotient_rep qrep_sum(const quotient_rep& a, const quotient_rep& b);
quotient_rep qrep_product(const quotient_rep& a, const quotient_rep& b);

/// Refutation-only squared-norm test by substituting commuting matrix
/// tuples Z_j = p_j(M) for the variables (z-powers multiply on the left of
/// conjugate powers). A negative eigenvalue of r(Z, Z*) refutes.
class_verdict commuting_matrix_refute(const hermitian_poly& r, int trials,
                                      const std::vector<int>& sizes = {1, 2, 3},
                                      const sampler_config& cfg = {});

}  // namespace hermicert
