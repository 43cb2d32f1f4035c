#pragma once

#include "hermicert/inertia.hpp"
#include "hermicert/sampling.hpp"
#include "hermicert/stabilization.hpp"
#include "hermicert/verdict.hpp"

namespace hermicert {

/// Coefficients of the degree 2^(m-1) factor q with q(t) q(-t) = t^(2^m) + 1
/// and all coefficients positive. The coefficients are algebraic
/// irrationals, carried in extended precision so the multiply-back identity
/// verifies to 1e-10 even where interior cancellation is total.
std::vector<long double> collapse_factor(int m);

/// The rank-collapse pair: diagonal two-variable lifts of the homogenized
/// factor and its sign-flipped partner. Their ranks grow with m while the
/// product keeps signature (2, 0).
struct collapse_pair_result {
  int m = 2;
  std::vector<long double> q;             // collapse_factor(m)
  std::vector<long double> r1_diag;       // lift of q, all positive
  std::vector<long double> r2_diag;       // lift of q(-t), alternating signs
  std::vector<long double> product_diag;  // lift of t^(2^m) + 1
  signature_pair s1, s2, sprod;
  double product_residual = 0.0;
};
collapse_pair_result collapse_pair(int m);

/// Obstruction test at polarized point pairs: builds the evaluation matrix
/// [f(z_i, conj z_j)] exactly and decides positive semidefiniteness by
/// exact inertia. Obstructed means f agrees with no squared norm on the
/// variety the points polarize.
struct ps_result {
  bool obstructed = false;
  signature_pair sig;
  exact_matrix matrix;
  bool det_valid = false;   // true for 2x2 input
  rational det;             // exact determinant when det_valid
};
ps_result ps_obstruction(const hermitian_poly& f,
                         const std::vector<std::vector<gauss_rational>>& points);

struct proper_map_budgets {
  int ccap = 64;
  int dcap = 16;
  int sphere_samples = 1000;
};

/// Rational map candidate p/q between balls: ||p||^2 agrees with |q|^2 on
/// the sampled unit sphere up to sphere_residual.
struct proper_map_candidate {
  class_verdict verdict;
  holo_map numerator;
  double sphere_residual = 0.0;
  json detail;
};

/// Builds a proper-map candidate with the prescribed denominator q (and
/// optional seed component g, default 1). One variable uses the closed-form
/// coefficient reversal; higher dimensions run the constructive sphere
/// agreement search on |q|^2 - |c g|^2.
proper_map_candidate proper_map_from_denominator(const exact_holo& q, const exact_holo& g,
                                                 const proper_map_budgets& budgets = {},
                                                 const sampler_config& cfg = {});

/// Completes a partial map with ||p||^2 < 1 on the sphere to a candidate
/// with ||p (+) g||^2 = 1 on the sphere.
proper_map_candidate extend_to_proper(const holo_map& partial,
                                      const proper_map_budgets& budgets = {},
                                      const sampler_config& cfg = {});

}  // namespace hermicert
