#include "hermicert/inertia.hpp"

#include <eigen3/Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace hermicert {

namespace {

bool matrix_is_diagonal(const exact_matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j && !m[i][j].is_zero()) return false;
  return true;
}

}  // namespace

signature_pair exact_inertia(exact_matrix m) {
  const std::size_t k = m.size();
  signature_pair s;
  if (matrix_is_diagonal(m)) {
    for (std::size_t i = 0; i < k; ++i) {
      int sg = sgn(m[i][i].re());
      if (sg > 0) ++s.pos;
      else if (sg < 0) ++s.neg;
    }
    return s;
  }
  std::vector<std::size_t> active(k);
  for (std::size_t i = 0; i < k; ++i) active[i] = i;

  while (!active.empty()) {
    // Prefer a nonzero diagonal pivot.
    std::size_t pivot_pos = active.size();
    for (std::size_t t = 0; t < active.size(); ++t) {
      if (!m[active[t]][active[t]].is_zero()) {
        pivot_pos = t;
        break;
      }
    }
    if (pivot_pos < active.size()) {
      const std::size_t p = active[pivot_pos];
      const rational d = m[p][p].re();  // diagonal of a Hermitian matrix is real
      if (sgn(d) > 0) ++s.pos;
      else ++s.neg;
      active.erase(active.begin() + pivot_pos);
      const gauss_rational dval(d);
      for (std::size_t ii : active) {
        if (m[ii][p].is_zero()) continue;
        const gauss_rational f = m[ii][p] / dval;
        for (std::size_t jj : active) m[ii][jj] -= f * m[p][jj];
      }
      continue;
    }
    // All remaining diagonals vanish: look for an off-diagonal entry and use
    // the hyperbolic 2x2 block, which contributes (1,1). Its Schur
    // complement keeps the rest Hermitian.
    std::size_t pi = active.size(), qi = active.size();
    for (std::size_t t = 0; t < active.size() && pi == active.size(); ++t)
      for (std::size_t u = t + 1; u < active.size(); ++u)
        if (!m[active[t]][active[u]].is_zero()) {
          pi = t;
          qi = u;
          break;
        }
    if (pi == active.size()) break;  // remaining block is zero
    const std::size_t p = active[pi], q = active[qi];
    const gauss_rational c = m[p][q];
    ++s.pos;
    ++s.neg;
    active.erase(active.begin() + qi);
    active.erase(active.begin() + pi);
    const gauss_rational cinv = gauss_rational(1) / c;
    const gauss_rational cbar_inv = gauss_rational(1) / c.conj();
    for (std::size_t ii : active)
      for (std::size_t jj : active)
        m[ii][jj] -= m[ii][q] * cinv * m[p][jj] + m[ii][p] * cbar_inv * m[q][jj];
  }
  return s;
}

exact_matrix coefficient_matrix(const hermitian_poly& r, const std::vector<multi_index>& basis) {
  const std::size_t k = basis.size();
  exact_matrix m(k, std::vector<gauss_rational>(k));
  std::map<multi_index, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) pos[basis[i]] = i;
  for (const auto& [key, v] : r.terms()) {
    auto ia = pos.find(key.first);
    auto ib = pos.find(key.second);
    if (ia == pos.end() || ib == pos.end()) continue;
    m[ia->second][ib->second] = v;
  }
  return m;
}

signature_pair signature(const hermitian_poly& r) {
  return signature_on_basis(r, r.support_monomials());
}

signature_pair signature_on_basis(const hermitian_poly& r, const std::vector<multi_index>& basis) {
  if (r.is_diagonal()) {
    signature_pair s;
    for (const auto& b : basis) {
      int sg = sgn(r.coeff(b, b).re());
      if (sg > 0) ++s.pos;
      else if (sg < 0) ++s.neg;
    }
    return s;
  }
  return exact_inertia(coefficient_matrix(r, basis));
}

bool is_squared_norm(const hermitian_poly& r) { return signature(r).neg == 0; }

pd_check_result exact_pd_on_basis(const hermitian_poly& r, const std::vector<multi_index>& basis) {
  pd_check_result res;
  if (r.is_diagonal()) {
    std::size_t i = 0;
    for (const auto& b : basis) {
      const gauss_rational d = r.coeff(b, b);
      if (sgn(d.re()) <= 0) {
        res.failing_basis_index = i;
        res.failing_pivot = d.re();
        return res;
      }
      ++i;
    }
    res.positive_definite = true;
    return res;
  }
  exact_matrix m = coefficient_matrix(r, basis);
  const std::size_t k = m.size();
  std::vector<std::size_t> active(k);
  for (std::size_t i = 0; i < k; ++i) active[i] = i;
  // A positive definite matrix always offers a positive diagonal pivot, so
  // elimination without row search is sound for this check.
  while (!active.empty()) {
    const std::size_t p = active.front();
    const rational d = m[p][p].re();
    if (sgn(d) <= 0) {
      res.failing_basis_index = p;
      res.failing_pivot = d;
      return res;
    }
    active.erase(active.begin());
    const gauss_rational dval{d};
    for (std::size_t ii : active) {
      if (m[ii][p].is_zero()) continue;
      const gauss_rational f = m[ii][p] / dval;
      for (std::size_t jj : active) m[ii][jj] -= f * m[p][jj];
    }
  }
  res.positive_definite = true;
  return res;
}

// ---------------------------------------------------------------------------

cplx holo_poly::eval(std::span<const cplx> z) const {
  cplx acc(0.0, 0.0);
  for (const auto& [k, v] : c) {
    cplx t = v;
    for (std::size_t j = 0; j < n; ++j)
      for (int e = 0; e < k[j]; ++e) t *= z[j];
    acc += t;
  }
  return acc;
}

std::vector<cplx> holo_map::eval(std::span<const cplx> z) const {
  std::vector<cplx> out;
  out.reserve(comps.size());
  for (const auto& p : comps) out.push_back(p.eval(z));
  return out;
}

double holo_map::norm_sq_at(std::span<const cplx> z) const {
  double acc = 0.0;
  for (const auto& p : comps) acc += std::norm(p.eval(z));
  return acc;
}

holo_poly multiply(const holo_poly& a, const holo_poly& b) {
  holo_poly r;
  r.n = a.n;
  for (const auto& [ka, va] : a.c)
    for (const auto& [kb, vb] : b.c) {
      cplx& slot = r.c[ka + kb];
      slot += va * vb;
    }
  return r;
}

holo_map tensor(const holo_map& a, const holo_map& b) {
  holo_map r;
  r.n = a.n;
  for (const auto& pa : a.comps)
    for (const auto& pb : b.comps) r.comps.push_back(multiply(pa, pb));
  return r;
}

holo_map concat(const holo_map& a, const holo_map& b) {
  holo_map r = a;
  r.comps.insert(r.comps.end(), b.comps.begin(), b.comps.end());
  return r;
}

holo_decomposition decompose(const hermitian_poly& r) {
  const auto basis = r.support_monomials();
  const std::size_t k = basis.size();
  const signature_pair exact = signature(r);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(k, k);
  {
    std::map<multi_index, std::size_t> pos;
    for (std::size_t i = 0; i < k; ++i) pos[basis[i]] = i;
    for (const auto& [key, v] : r.terms())
      m(pos.at(key.first), pos.at(key.second)) = v.to_complex();
  }
  double maxnorm = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) maxnorm = std::max(maxnorm, std::abs(m(i, j)));
  const double tol = 1e-10 * std::max(maxnorm, 1e-300);

  holo_decomposition out;
  out.f.n = out.g.n = r.vars();
  out.tolerance = tol;
  if (k == 0) return out;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  int npos = 0, nneg = 0;
  for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
    const double lam = es.eigenvalues()(j);
    if (std::abs(lam) <= tol) continue;
    const double s = std::sqrt(std::abs(lam));
    holo_poly comp;
    comp.n = r.vars();
    for (std::size_t i = 0; i < k; ++i) {
      const cplx coef = s * es.eigenvectors()(i, j);
      if (std::abs(coef) > 0.0) comp.c[basis[i]] = coef;
    }
    if (lam > 0) {
      out.f.comps.push_back(std::move(comp));
      ++npos;
    } else {
      out.g.comps.push_back(std::move(comp));
      ++nneg;
    }
  }
  if (npos != exact.pos || nneg != exact.neg)
    throw reconciliation_error(
        "decompose: floating eigenvalue counts (" + std::to_string(npos) + "," +
        std::to_string(nneg) + ") disagree with the exact signature (" +
        std::to_string(exact.pos) + "," + std::to_string(exact.neg) +
        "); use the exact path");
  return out;
}

double decomposition_residual(const hermitian_poly& r, const holo_decomposition& d, int points,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < points; ++t) {
    std::vector<cplx> z(r.vars());
    for (auto& zj : z) zj = cplx(gauss(rng), gauss(rng));
    const double recon = d.f.norm_sq_at(z) - d.g.norm_sq_at(z);
    const double truth = r.eval_real(z);
    const double rel = std::abs(recon - truth) / (1.0 + std::abs(truth));
    worst = std::max(worst, rel);
  }
  return worst;
}

}  // namespace hermicert
