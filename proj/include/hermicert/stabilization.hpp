#pragma once

#include <optional>

#include "hermicert/homogeneity.hpp"
#include "hermicert/inertia.hpp"
#include "hermicert/sampling.hpp"
#include "hermicert/verdict.hpp"

namespace hermicert {

/// Certificate that ||z||^(2d) * r has a positive definite coefficient
/// matrix on the full monomial basis of its weight. The exactness claim is
/// about the pivots; the factor map is the floating eigen-decomposition.
struct stabilization_certificate {
  int d = 0;
  holo_map factor;          // ||factor||^2 = ||z||^(2d) r, up to `residual`
  bool exact_pd = false;    // pivots verified over exact rationals
  double residual = 0.0;    // max relative factor error at sample points
  std::size_t matrix_dim = 0;
};

struct stab_result {
  class_verdict verdict;
  std::optional<stabilization_certificate> certificate;
  /// Smallest d <= dcap making the matrix merely positive semidefinite
  /// (exact), or -1 when none was found. Can be smaller than the definite d.
  int psd_minimal_d = -1;
};

/// Iterates d = 0..dcap over exact coefficient matrices of
/// ||z||^(2d} * r on the full weight basis; certifies at the first d whose
/// congruence pivots are all positive. Input must be bihomogeneous.
stab_result multiplier_search(const hermitian_poly& r, int dcap,
                              const sampler_config& cfg = {});

struct polya_result {
  class_verdict verdict;
  int d = -1;
  json witness;  // non-positive coefficient at the last failed degree
};

/// Smallest d <= dcap such that (x_1+...+x_N)^d * R has strictly positive
/// coefficients on the full degree basis. Exact arithmetic; R homogeneous.
polya_result polya_exponent(const real_poly& R, int dcap);

/// One-variable version with the multiplier (1+t)^d. Refutes early when a
/// sampled t >= 0 gives p(t) <= 0.
polya_result polya_one_var(const real_poly& p, int dcap);

struct sphere_min_estimate {
  double value = 0.0;  // upper bound of the true minimum
  int samples = 0;
};
sphere_min_estimate min_on_sphere_estimate(const hermitian_poly& r,
                                           const sampler_config& cfg = {});

/// Constructive squared-norm agreement on the unit sphere for f with a
/// positive sphere minimum: returns g with f = ||g||^2 on the sphere.
struct sphere_norm_result {
  class_verdict verdict;
  holo_map g;
  double sphere_residual = 0.0;
  int C = 0;        // correction weight that certified
  int d = 0;        // multiplier degree that certified
  int padding = 0;  // degree padding applied to reach an even weight
};
sphere_norm_result sphere_norm_agreement(const hermitian_poly& f, int ccap, int dcap,
                                         const sampler_config& cfg = {});

}  // namespace hermicert
