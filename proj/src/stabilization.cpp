#include "hermicert/stabilization.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace hermicert {

namespace {

json monomial_json(const multi_index& m) { return m.str(); }

}  // namespace

stab_result multiplier_search(const hermitian_poly& r, int dcap, const sampler_config& cfg) {
  const bihom_witness bw = is_bihomogeneous(r);
  if (!bw.verdict || bw.degenerate)
    throw malformed_input("multiplier_search: input must be bihomogeneous and nonzero");
  if (dcap < 0) throw malformed_input("multiplier_search: dcap must be >= 0");

  stab_result out;
  const std::size_t n = r.vars();
  const int m = bw.m;
  const hermitian_poly S = norm_sq_poly(n);

  hermitian_poly s_d = r;
  json failures = json::array();
  for (int d = 0; d <= dcap; ++d) {
    if (d > 0) s_d = s_d * S;
    const auto basis = monomials_of_weight(n, m + d);
    if (out.psd_minimal_d < 0 && signature(s_d).neg == 0) out.psd_minimal_d = d;
    const pd_check_result pd = exact_pd_on_basis(s_d, basis);
    if (pd.positive_definite) {
      stabilization_certificate cert;
      cert.d = d;
      cert.exact_pd = true;
      cert.matrix_dim = basis.size();
      const holo_decomposition dec = decompose(s_d);
      cert.factor = dec.f;
      // Factor fidelity on a seeded cloud of points with norm <= 2.
      std::mt19937_64 rng(cfg.seed + 17);
      std::normal_distribution<double> gauss(0.0, 1.0);
      std::uniform_real_distribution<double> uni(0.0, 2.0);
      double worst = 0.0;
      for (int t = 0; t < 200; ++t) {
        std::vector<cplx> z(n);
        for (auto& c : z) c = cplx(gauss(rng), gauss(rng));
        z = normalized(std::move(z));
        const double rad = uni(rng);
        for (auto& c : z) c *= rad;
        const double truth = s_d.eval_real(z);
        const double recon = cert.factor.norm_sq_at(z);
        worst = std::max(worst, std::abs(recon - truth) / (1.0 + std::abs(truth)));
      }
      cert.residual = worst;
      out.verdict.status = verdict_status::certified;
      out.verdict.exponent = d;
      out.verdict.evidence = {{"kind", "positive-definite-multiplier"},
                              {"d", d},
                              {"matrix_dim", cert.matrix_dim},
                              {"psd_minimal_d", out.psd_minimal_d},
                              {"factor_residual", format_double(cert.residual)},
                              {"failures_below_d", failures}};
      out.certificate = std::move(cert);
      return out;
    }
    json fail = {{"d", d}};
    if (pd.failing_basis_index) {
      fail["pivot_monomial"] = monomial_json(basis[*pd.failing_basis_index]);
      if (pd.failing_pivot) fail["pivot"] = format_rational(*pd.failing_pivot);
    }
    failures.push_back(std::move(fail));
  }
  out.verdict.evidence = {
      {"kind", "budget-exhausted"},
      {"dcap", dcap},
      {"psd_minimal_d", out.psd_minimal_d},
      {"failures", failures},
      {"advice", "cross-check with curve pullbacks: a pullback violating the "
                 "even-order vanishing condition rules out every multiplier"}};
  return out;
}

polya_result polya_exponent(const real_poly& R, int dcap) {
  if (!R.is_homogeneous()) throw malformed_input("polya_exponent: input must be homogeneous");
  if (R.is_zero()) throw malformed_input("polya_exponent: zero polynomial");
  polya_result out;
  const std::size_t n = R.vars();
  real_poly s(n);
  for (std::size_t j = 0; j < n; ++j) s.add_term(unit_index(n, j), rational(1));
  const int deg = R.degree();
  real_poly p = R;
  json last_witness;
  for (int d = 0; d <= dcap; ++d) {
    if (d > 0) p = p * s;
    bool all_positive = true;
    for (const auto& mono : monomials_of_weight(n, deg + d)) {
      const rational c = p.coeff(mono);
      if (sgn(c) <= 0) {
        all_positive = false;
        last_witness = {{"d", d},
                        {"monomial", monomial_json(mono)},
                        {"coefficient", format_rational(c)}};
        break;
      }
    }
    if (all_positive) {
      out.d = d;
      out.verdict.status = verdict_status::certified;
      out.verdict.exponent = d;
      out.verdict.evidence = {{"kind", "all-positive-coefficients"}, {"d", d}};
      return out;
    }
  }
  out.witness = last_witness;
  out.verdict.evidence = {{"kind", "budget-exhausted"}, {"dcap", dcap}, {"witness", last_witness}};
  return out;
}

polya_result polya_one_var(const real_poly& p, int dcap) {
  if (p.vars() != 1) throw malformed_input("polya_one_var: input must be univariate");
  polya_result out;
  if (p.is_zero()) {
    out.verdict.status = verdict_status::refuted;
    out.verdict.evidence = {{"kind", "zero-polynomial"}};
    return out;
  }
  // Sampled positivity precheck on t >= 0; strictly negative values refute.
  double maxc = 0.0;
  for (const auto& [k, v] : p.terms()) maxc = std::max(maxc, std::abs(v.get_d()));
  for (int i = 0; i <= 256; ++i) {
    const double t = i <= 128 ? i / 8.0 : std::pow(2.0, (i - 128) / 16.0) * 16.0;
    const double val = p.eval(std::vector<double>{t});
    if (val < -1e-12 * maxc * std::pow(1.0 + t, p.degree())) {
      out.verdict.status = verdict_status::refuted;
      out.verdict.evidence = {{"kind", "negative-value-witness"},
                              {"t", format_double(t)},
                              {"value", format_double(val)}};
      return out;
    }
  }
  real_poly onet(1);
  onet.add_term(multi_index{0}, rational(1));
  onet.add_term(multi_index{1}, rational(1));
  const int deg = p.degree();
  real_poly q = p;
  json last_witness;
  for (int d = 0; d <= dcap; ++d) {
    if (d > 0) q = q * onet;
    bool all_positive = true;
    for (int k = 0; k <= deg + d; ++k) {
      const rational c = q.coeff(multi_index{k});
      if (sgn(c) <= 0) {
        all_positive = false;
        last_witness = {{"d", d}, {"power", k}, {"coefficient", format_rational(c)}};
        break;
      }
    }
    if (all_positive) {
      out.d = d;
      out.verdict.status = verdict_status::certified;
      out.verdict.exponent = d;
      out.verdict.evidence = {{"kind", "all-positive-coefficients"}, {"d", d}};
      return out;
    }
  }
  out.witness = last_witness;
  out.verdict.evidence = {{"kind", "budget-exhausted"}, {"dcap", dcap}, {"witness", last_witness}};
  return out;
}

sphere_min_estimate min_on_sphere_estimate(const hermitian_poly& r, const sampler_config& cfg) {
  sphere_min_estimate est;
  const std::size_t n = r.vars();
  auto objective = [&](std::span<const cplx> z) {
    std::vector<cplx> u(z.begin(), z.end());
    return r.eval_real(normalized(std::move(u)));
  };
  double best = std::numeric_limits<double>::infinity();
  std::vector<cplx> best_pt;
  auto consider = [&](const std::vector<cplx>& z) {
    if (vec_norm(z) < 1e-9) return;
    const double val = objective(z);
    ++est.samples;
    if (val < best) {
      best = val;
      best_pt = z;
    }
  };
  for (const auto& z : structured_points(n)) consider(z);
  point_sampler sampler(n, cfg);
  for (int i = 0; i < cfg.budget; ++i) consider(sampler.sphere_point());
  if (!best_pt.empty()) best = pattern_polish(best_pt, objective, 0.125);
  est.value = best;
  return est;
}

sphere_norm_result sphere_norm_agreement(const hermitian_poly& f, int ccap, int dcap,
                                         const sampler_config& cfg) {
  sphere_norm_result out;
  const std::size_t n = f.vars();
  const sphere_min_estimate est = min_on_sphere_estimate(f, cfg);
  if (!(est.value > 0))
    throw malformed_input("sphere_norm_agreement: input is not positive on the sampled sphere");

  auto sphere_residual = [&](const holo_map& g) {
    point_sampler sampler(n, cfg);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const auto z = sampler.sphere_point();
      const double fv = f.eval_real(z);
      worst = std::max(worst, std::abs(g.norm_sq_at(z) / fv - 1.0));
    }
    return worst;
  };

  // A positive constant is already the squared norm of its root.
  if (f.deg_z() == 0 && f.total_degree() == 0 && !f.is_zero()) {
    const double c = f.terms().begin()->second.re().get_d();
    holo_poly comp;
    comp.n = n;
    comp.c[multi_index(n)] = cplx(std::sqrt(c), 0.0);
    out.g.n = n;
    out.g.comps.push_back(std::move(comp));
    out.verdict.status = verdict_status::certified;
    out.sphere_residual = sphere_residual(out.g);
    return out;
  }

  const hermitian_poly Hf = bihomogenize(f);
  const int m = f.deg_z();
  const int me = m + (m % 2);  // correction weight must be even
  out.padding = me - m;
  const hermitian_poly S = norm_sq_poly(n + 1);
  hermitian_poly base = Hf;
  for (int i = 0; i < out.padding; ++i) base = base * S;
  hermitian_poly diff(n + 1);
  for (std::size_t j = 0; j < n; ++j)
    diff.add_term(unit_index(n + 1, j), unit_index(n + 1, j), gauss_rational(1));
  diff.add_term(unit_index(n + 1, n), unit_index(n + 1, n), gauss_rational(-1));
  const hermitian_poly correction = diff.pow(me);

  json frontier = json::array();
  for (long C = 1; C <= ccap; C *= 2) {
    hermitian_poly shaped = base + gauss_rational(C) * correction;
    const stab_result ms = multiplier_search(shaped, dcap, cfg);
    if (ms.verdict.status == verdict_status::certified) {
      const int d = ms.certificate->d;
      const double scal = std::pow(2.0, -0.5 * (d + out.padding));
      holo_map g;
      g.n = n;
      for (const auto& comp : ms.certificate->factor.comps) {
        holo_poly reduced;
        reduced.n = n;
        for (const auto& [k, c] : comp.c) {
          // substitute t = 1: drop the last exponent slot
          cplx& slot = reduced.c[k.without_slot(n)];
          slot += scal * c;
        }
        g.comps.push_back(std::move(reduced));
      }
      out.g = std::move(g);
      out.C = static_cast<int>(C);
      out.d = d;
      out.sphere_residual = sphere_residual(out.g);
      out.verdict.status = verdict_status::certified;
      out.verdict.exponent = d;
      out.verdict.evidence = {{"kind", "sphere-norm-factor"},
                              {"C", out.C},
                              {"d", d},
                              {"padding", out.padding},
                              {"sphere_residual", format_double(out.sphere_residual)},
                              {"components", out.g.comps.size()}};
      return out;
    }
    frontier.push_back({{"C", C}, {"dcap", dcap}, {"psd_minimal_d", ms.psd_minimal_d}});
  }
  out.verdict.evidence = {{"kind", "budget-exhausted"},
                          {"ccap", ccap},
                          {"dcap", dcap},
                          {"frontier", frontier}};
  return out;
}

}  // namespace hermicert
