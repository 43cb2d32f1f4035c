#pragma once

#include <optional>
#include <vector>

#include "hermicert/hpoly.hpp"

namespace hermicert {

struct signature_pair {
  int pos = 0;  // positive eigenvalue count
  int neg = 0;  // negative eigenvalue count
  int rank() const { return pos + neg; }
  friend bool operator==(const signature_pair&, const signature_pair&) = default;
};

/// Dense Hermitian matrix over Gaussian rationals.
using exact_matrix = std::vector<std::vector<gauss_rational>>;

/// Exact inertia of a Hermitian matrix by congruence elimination: symmetric
/// pivoting on nonzero diagonal entries, with a 2x2 off-diagonal block (and
/// its Schur complement) when every candidate diagonal pivot vanishes. Each
/// block contributes (1,1). The matrix is consumed.
signature_pair exact_inertia(exact_matrix m);

/// Coefficient matrix of r on an explicit monomial basis.
exact_matrix coefficient_matrix(const hermitian_poly& r, const std::vector<multi_index>& basis);

/// Signature pair on the support basis (graded-lex). Sylvester invariance
/// makes the basis order irrelevant; the overload with an explicit basis
/// exists for that very property test and for full-basis computations.
signature_pair signature(const hermitian_poly& r);
signature_pair signature_on_basis(const hermitian_poly& r, const std::vector<multi_index>& basis);

inline int rank_of(const hermitian_poly& r) { return signature(r).rank(); }

/// Exact: true iff the signature has no negative part.
bool is_squared_norm(const hermitian_poly& r);

/// Positive-definiteness of the coefficient matrix on the given basis,
/// decided by exact pivots. On failure reports a witness: the first basis
/// position whose pivot is not strictly positive (useful for minimality
/// evidence), or the first off-diagonal-only pivot step.
struct pd_check_result {
  bool positive_definite = false;
  std::optional<std::size_t> failing_basis_index;  // position in `basis`
  std::optional<rational> failing_pivot;           // value when diagonal
};
pd_check_result exact_pd_on_basis(const hermitian_poly& r, const std::vector<multi_index>& basis);

/// Holomorphic polynomial map with floating coefficients.
struct holo_poly {
  std::size_t n = 1;
  std::map<multi_index, cplx> c;
  cplx eval(std::span<const cplx> z) const;
};

struct holo_map {
  std::size_t n = 1;
  std::vector<holo_poly> comps;

  std::size_t size() const { return comps.size(); }
  std::vector<cplx> eval(std::span<const cplx> z) const;
  double norm_sq_at(std::span<const cplx> z) const;
};

/// Tensor product (all pairwise products) and concatenation.
holo_map tensor(const holo_map& a, const holo_map& b);
holo_map concat(const holo_map& a, const holo_map& b);
holo_poly multiply(const holo_poly& a, const holo_poly& b);

struct holo_decomposition {
  holo_map f;  // positive-eigenvalue components
  holo_map g;  // negative-eigenvalue components
  double tolerance = 0.0;
};

/// Floating eigendecomposition of the coefficient matrix, reconciled against
/// the exact signature: component counts always equal the exact (A, B).
/// Throws reconciliation_error when the floating counts cannot be matched.
holo_decomposition decompose(const hermitian_poly& r);

/// max_z |f(z)|^2 - |g(z)|^2 vs r, relative, over a seeded random cloud.
double decomposition_residual(const hermitian_poly& r, const holo_decomposition& d,
                              int points = 100, std::uint64_t seed = 7);

}  // namespace hermicert
