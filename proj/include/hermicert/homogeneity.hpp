#pragma once

#include "hermicert/hpoly.hpp"

namespace hermicert {

struct bihom_witness {
  bool verdict = false;
  int m = 0;           // half the total degree when verdict holds
  bool degenerate = false;  // zero polynomial: verdict true, m unspecified
};

/// Structural check: every support pair has |alpha| = |beta| = m.
bihom_witness is_bihomogeneous(const hermitian_poly& r);

/// Adds one variable t as the last slot; entry (a, b) moves to
/// ((a, m-|a|), (b, m-|b|)) with m = deg_z(r). The result is bihomogeneous
/// of total degree 2m and dehomogenizes back exactly.
hermitian_poly bihomogenize(const hermitian_poly& r);

/// Substitutes 1 for the chosen variable and its conjugate, merging entries.
hermitian_poly dehomogenize(const hermitian_poly& r, std::size_t slot);

/// One-variable reflection: entry (j, k) -> (m-j, m-k) with m = deg_z(r).
hermitian_poly reflect(const hermitian_poly& r);

}  // namespace hermicert
