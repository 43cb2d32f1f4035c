#include "hermicert/classes.hpp"

#include <eigen3/Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "hermicert/stabilization.hpp"

namespace hermicert {

namespace {

constexpr double kP1Tol = 1e-12;
constexpr double kPkTol = 1e-10;
constexpr double kCsTol = 1e-10;
constexpr double kLogPshTol = 1e-9;
constexpr double kMatrixTol = 1e-8;

double eigmin(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  return es.eigenvalues().minCoeff();
}

json signature_json(const signature_pair& s) { return json{{"pos", s.pos}, {"neg", s.neg}}; }

std::vector<cplx> concat_points(const std::vector<std::vector<cplx>>& pts) {
  std::vector<cplx> flat;
  for (const auto& p : pts) flat.insert(flat.end(), p.begin(), p.end());
  return flat;
}

std::vector<std::vector<cplx>> split_points(std::span<const cplx> flat, std::size_t n,
                                            std::size_t k) {
  std::vector<std::vector<cplx>> pts(k);
  for (std::size_t i = 0; i < k; ++i) pts[i].assign(flat.begin() + i * n, flat.begin() + (i + 1) * n);
  return pts;
}

}  // namespace

class_verdict test_p1(const hermitian_poly& r, const sampler_config& cfg) {
  class_verdict v;
  const signature_pair sig = signature(r);
  if (sig.neg == 0) {
    v.status = verdict_status::certified;
    v.evidence = {{"kind", "squared-norm"}, {"signature", signature_json(sig)}};
    return v;
  }
  if (r.is_diagonal()) {
    const real_poly R = moment_image(r);
    if (R.is_homogeneous()) {
      const polya_result pr = polya_exponent(R, 8);
      if (pr.verdict.status == verdict_status::certified) {
        v.status = verdict_status::certified;
        v.exponent = pr.d;
        v.evidence = {{"kind", "positive-coefficient-multiplier"}, {"d", pr.d}};
        return v;
      }
    }
  }
  // Sampling with local refinement; objective is the scale-relative value.
  auto objective = [&](std::span<const cplx> z) {
    return r.eval_real(z) / poly_scale(r, z);
  };
  double best = 0.0;
  std::vector<cplx> best_pt;
  auto consider = [&](const std::vector<cplx>& z) {
    const double val = objective(z);
    if (val < best) {
      best = val;
      best_pt = z;
    }
  };
  for (const auto& z : structured_points(r.vars())) consider(z);
  point_sampler sampler(r.vars(), cfg);
  for (int i = 0; i < cfg.budget; ++i) consider(sampler.ball_point());
  if (!best_pt.empty()) best = pattern_polish(best_pt, objective);
  if (best < -kP1Tol) {
    v.status = verdict_status::refuted;
    v.witness = {best_pt};
    v.value = r.eval_real(best_pt);
    v.tolerance = kP1Tol * poly_scale(r, best_pt);
    v.evidence = {{"kind", "negative-value-witness"},
                  {"point", point_to_json(best_pt)},
                  {"value", format_double(v.value)},
                  {"tolerance", format_double(v.tolerance)}};
    return v;
  }
  v.evidence = {{"kind", "budget-exhausted"},
                {"points", cfg.budget},
                {"best_relative_value", format_double(best)}};
  return v;
}

class_verdict test_pk(const hermitian_poly& r, int k, const sampler_config& cfg) {
  if (k < 1) throw malformed_input("test_pk: k must be >= 1");
  if (k == 1) return test_p1(r, cfg);
  class_verdict v;
  const signature_pair sig = signature(r);
  if (sig.neg == 0) {
    v.status = verdict_status::certified;
    v.evidence = {{"kind", "squared-norm"}, {"signature", signature_json(sig)}};
    return v;
  }
  const std::size_t n = r.vars();
  const std::size_t uk = static_cast<std::size_t>(k);
  auto tuple_objective = [&](std::span<const cplx> flat) {
    const auto pts = split_points(flat, n, uk);
    Eigen::MatrixXcd g(k, k);
    double scale = 0.0;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) g(i, j) = r.eval(pts[i], pts[j]);
      scale = std::max(scale, poly_scale(r, pts[i]));
    }
    return eigmin(g) / scale;
  };
  double best = 0.0;
  std::vector<cplx> best_flat;
  auto consider = [&](const std::vector<cplx>& flat) {
    const double val = tuple_objective(flat);
    if (val < best) {
      best = val;
      best_flat = flat;
    }
  };
  // Deterministic tuples from the structured battery first.
  const auto battery = structured_points(n);
  if (k == 2) {
    for (std::size_t i = 0; i < battery.size(); ++i)
      for (std::size_t j = i + 1; j < battery.size(); ++j)
        consider(concat_points({battery[i], battery[j]}));
  } else {
    for (std::size_t i = 0; i + uk <= battery.size(); ++i) {
      std::vector<std::vector<cplx>> tup(battery.begin() + i, battery.begin() + i + uk);
      consider(concat_points(tup));
    }
  }
  point_sampler sampler(n, cfg);
  const int tuples = std::max(1, cfg.budget / k);
  for (int t = 0; t < tuples; ++t) {
    std::vector<std::vector<cplx>> tup;
    for (int i = 0; i < k; ++i) tup.push_back(sampler.ball_point());
    consider(concat_points(tup));
  }
  if (!best_flat.empty()) best = pattern_polish(best_flat, tuple_objective);
  if (best < -kPkTol) {
    const auto pts = split_points(best_flat, n, uk);
    Eigen::MatrixXcd g(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) g(i, j) = r.eval(pts[i], pts[j]);
    v.status = verdict_status::refuted;
    v.witness = pts;
    v.value = eigmin(g);
    double scale = 0.0;
    for (const auto& p : pts) scale = std::max(scale, poly_scale(r, p));
    v.tolerance = kPkTol * scale;
    json gm = json::array();
    for (int i = 0; i < k; ++i) {
      json row = json::array();
      for (int j = 0; j < k; ++j)
        row.push_back({format_double(g(i, j).real()), format_double(g(i, j).imag())});
      gm.push_back(row);
    }
    v.evidence = {{"kind", "kernel-matrix-witness"},
                  {"k", k},
                  {"points", points_to_json(pts)},
                  {"matrix", gm},
                  {"min_eigenvalue", format_double(v.value)},
                  {"tolerance", format_double(v.tolerance)}};
    return v;
  }
  v.evidence = {{"kind", "budget-exhausted"},
                {"tuples", tuples},
                {"best_relative_eigenvalue", format_double(best)}};
  return v;
}

class_verdict test_cauchy_schwarz(const hermitian_poly& r, const sampler_config& cfg) {
  class_verdict v;
  const signature_pair sig = signature(r);
  if (sig.pos == 0 || sig.neg == 0) {
    // Single-signed decompositions satisfy the inequality by the ordinary
    // inner-product bound.
    v.status = verdict_status::certified;
    v.evidence = {{"kind", "single-sign-decomposition"}, {"signature", signature_json(sig)}};
    return v;
  }
  const std::size_t n = r.vars();
  auto pair_objective = [&](std::span<const cplx> flat) {
    const auto pts = split_points(flat, n, 2);
    const double slack = r.eval_real(pts[0]) * r.eval_real(pts[1]) -
                         std::norm(r.eval(pts[0], pts[1]));
    return slack / (poly_scale(r, pts[0]) * poly_scale(r, pts[1]));
  };
  double best = 0.0;
  std::vector<cplx> best_flat;
  auto consider = [&](const std::vector<cplx>& flat) {
    const double val = pair_objective(flat);
    if (val < best) {
      best = val;
      best_flat = flat;
    }
  };
  const auto battery = structured_points(n);
  for (std::size_t i = 0; i < battery.size(); ++i)
    for (std::size_t j = i + 1; j < battery.size(); ++j)
      consider(concat_points({battery[i], battery[j]}));
  point_sampler sampler(n, cfg);
  for (int t = 0; t < cfg.budget / 2; ++t) {
    consider(concat_points({sampler.ball_point(), sampler.ball_point()}));
  }
  if (!best_flat.empty()) best = pattern_polish(best_flat, pair_objective);
  if (best < -kCsTol) {
    const auto pts = split_points(best_flat, n, 2);
    v.status = verdict_status::refuted;
    v.witness = pts;
    const double lhs = r.eval_real(pts[0]) * r.eval_real(pts[1]);
    const double rhs = std::norm(r.eval(pts[0], pts[1]));
    v.value = lhs - rhs;
    v.tolerance = kCsTol * poly_scale(r, pts[0]) * poly_scale(r, pts[1]);
    v.evidence = {{"kind", "two-point-inequality-witness"},
                  {"points", points_to_json(pts)},
                  {"diagonal_product", format_double(lhs)},
                  {"cross_modulus_sq", format_double(rhs)},
                  {"tolerance", format_double(v.tolerance)}};
    return v;
  }
  v.evidence = {{"kind", "budget-exhausted"},
                {"pairs", cfg.budget / 2},
                {"best_relative_slack", format_double(best)}};
  return v;
}

cs_crosscheck_report cs_slack_crosscheck(const hermitian_poly& r, const sampler_config& cfg) {
  cs_crosscheck_report rep;
  const holo_decomposition dec = decompose(r);
  const std::size_t n = r.vars();
  point_sampler sampler(n, cfg);
  const auto battery = structured_points(n);
  const double tol = 1e-9;

  auto inner = [](const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s(0, 0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
  };

  std::vector<std::pair<std::vector<cplx>, std::vector<cplx>>> pairs;
  for (std::size_t i = 0; i + 1 < battery.size(); i += 2) pairs.push_back({battery[i], battery[i + 1]});
  for (int t = 0; t < cfg.budget / 2; ++t)
    pairs.push_back({sampler.ball_point(), sampler.ball_point()});

  double worst_diff = 0.0;
  json worst;
  for (const auto& [z, w] : pairs) {
    const double scale2 = poly_scale(r, z) * poly_scale(r, w);
    // Left route: three evaluations of r.
    const double slack_r =
        r.eval_real(z) * r.eval_real(w) - std::norm(r.eval(z, w));
    // Right route: the tensor identity in the decomposition.
    const auto fz = dec.f.eval(z), fw = dec.f.eval(w);
    const auto gz = dec.g.eval(z), gw = dec.g.eval(w);
    auto nsq = [](const std::vector<cplx>& v) {
      double s = 0;
      for (const auto& c : v) s += std::norm(c);
      return s;
    };
    double wedge = 0.0;  // ||f(z) (x) g(w) - f(w) (x) g(z)||^2
    for (std::size_t i = 0; i < fz.size(); ++i)
      for (std::size_t j = 0; j < gz.size(); ++j)
        wedge += std::norm(fz[i] * gw[j] - fw[i] * gz[j]);
    const double slack_fg = nsq(fz) * nsq(fw) - std::norm(inner(fz, fw)) +
                            nsq(gz) * nsq(gw) - std::norm(inner(gz, gw)) - wedge;
    const double diff = std::abs(slack_r - slack_fg) / scale2;
    const double s1 = slack_r / scale2, s2 = slack_fg / scale2;
    const bool agree = (s1 >= -tol && s2 >= -tol) || (s1 <= tol && s2 <= tol);
    rep.min_slack = std::min(rep.min_slack, s1);
    if (!agree) rep.sign_agreement = false;
    if (diff > worst_diff) {
      worst_diff = diff;
      worst = {{"z", point_to_json(z)},
               {"w", point_to_json(w)},
               {"slack_from_r", format_double(slack_r)},
               {"slack_from_decomposition", format_double(slack_fg)}};
    }
    ++rep.pairs;
  }
  rep.max_abs_diff = worst_diff;
  rep.detail = {{"worst_pair", worst}, {"tolerance", format_double(tol)}};
  return rep;
}

class_verdict test_log_psh(const hermitian_poly& r, const sampler_config& cfg) {
  if (r.is_zero()) throw malformed_input("test_log_psh: zero polynomial");
  class_verdict v;
  const std::size_t n = r.vars();
  // Exact symbolic entries r * r_{z_i wbar_j} - r_{z_i} * r_{wbar_j}.
  std::vector<hermitian_poly> dzs, dws;
  for (std::size_t i = 0; i < n; ++i) {
    dzs.push_back(r.dz(i));
    dws.push_back(r.dwbar(i));
  }
  std::vector<std::vector<hermitian_poly>> M;
  double max_entry_coeff = 0.0;
  int max_entry_deg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<hermitian_poly> row;
    for (std::size_t j = 0; j < n; ++j) {
      hermitian_poly mij = r * dzs[i].dwbar(j) - dzs[i] * dws[j];
      max_entry_coeff = std::max(max_entry_coeff, mij.max_coeff_abs());
      max_entry_deg = std::max(max_entry_deg, mij.total_degree());
      row.push_back(std::move(mij));
    }
    M.push_back(std::move(row));
  }
  auto matrix_scale = [&](std::span<const cplx> z) {
    return std::max(max_entry_coeff, 1e-300) * std::pow(1.0 + vec_norm(z), max_entry_deg);
  };
  auto objective = [&](std::span<const cplx> z) {
    if (r.eval_real(z) <= kP1Tol * poly_scale(r, z)) return 0.0;  // outside the domain
    Eigen::MatrixXcd h(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = M[i][j].eval(z, z);
    return eigmin(h) / matrix_scale(z);
  };
  double best = 0.0;
  std::vector<cplx> best_pt;
  auto consider = [&](const std::vector<cplx>& z) {
    const double val = objective(z);
    if (val < best) {
      best = val;
      best_pt = z;
    }
  };
  for (const auto& z : structured_points(n)) consider(z);
  point_sampler sampler(n, cfg);
  for (int i = 0; i < cfg.budget; ++i) consider(sampler.ball_point());
  if (!best_pt.empty()) best = pattern_polish(best_pt, objective);
  if (best < -kLogPshTol) {
    Eigen::MatrixXcd h(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = M[i][j].eval(best_pt, best_pt);
    v.status = verdict_status::refuted;
    v.witness = {best_pt};
    v.value = eigmin(h);
    v.tolerance = kLogPshTol * matrix_scale(best_pt);
    v.evidence = {{"kind", "hessian-form-witness"},
                  {"point", point_to_json(best_pt)},
                  {"min_eigenvalue", format_double(v.value)},
                  {"value_of_r", format_double(r.eval_real(best_pt))},
                  {"tolerance", format_double(v.tolerance)}};
    return v;
  }
  v.evidence = {{"kind", "budget-exhausted"},
                {"points", cfg.budget},
                {"best_relative_eigenvalue", format_double(best)}};
  return v;
}

class_verdict test_rad(const hermitian_poly& r, int ncap, const sampler_config& cfg) {
  if (ncap < 1) throw malformed_input("test_rad: ncap must be >= 1");
  class_verdict v;
  const class_verdict cs = test_cauchy_schwarz(r, cfg);
  if (cs.status == verdict_status::refuted) {
    v.status = verdict_status::refuted;
    v.witness = cs.witness;
    v.value = cs.value;
    v.tolerance = cs.tolerance;
    v.evidence = {{"kind", "two-point-inequality-witness"},
                  {"note", "a power of r cannot be a squared norm: the two-point "
                           "inequality is preserved under integer roots"},
                  {"witness", cs.evidence}};
    return v;
  }
  hermitian_poly p = hermitian_poly::constant(r.vars(), gauss_rational(1));
  json attempts = json::array();
  for (int N = 1; N <= ncap; ++N) {
    p = p * r;
    const signature_pair sig = signature(p);
    if (sig.neg == 0) {
      v.status = verdict_status::certified;
      v.exponent = N;
      v.evidence = {{"kind", "exact-power-certificate"},
                    {"N", N},
                    {"signature", signature_json(sig)},
                    {"attempts", attempts}};
      return v;
    }
    // Record the obstruction for this power: the most negative diagonal
    // coefficient when one exists, otherwise just the signature.
    json item = {{"N", N}, {"signature", signature_json(sig)}};
    const gauss_rational* worst = nullptr;
    const multi_index* worst_idx = nullptr;
    for (const auto& [key, val] : p.terms()) {
      if (!(key.first == key.second)) continue;
      if (sgn(val.re()) < 0 && (!worst || val.re() < worst->re())) {
        worst = &val;
        worst_idx = &key.first;
      }
    }
    if (worst) {
      item["negative_diagonal"] = {{"monomial", worst_idx->str()},
                                   {"coefficient", format_rational(worst->re())}};
    }
    attempts.push_back(std::move(item));
  }
  v.evidence = {{"kind", "budget-exhausted"},
                {"ncap", ncap},
                {"note", "every power up to ncap keeps a negative part"},
                {"attempts", attempts}};
  return v;
}

quotient_rep qrep_sum(const quotient_rep& a, const quotient_rep& b) {
  if (a.num.n != b.num.n) throw std::invalid_argument("qrep_sum: dimension mismatch");
  quotient_rep r;
  r.num = concat(tensor(a.num, b.den), tensor(a.den, b.num));
  r.den = tensor(a.den, b.den);
  return r;
}

quotient_rep qrep_product(const quotient_rep& a, const quotient_rep& b) {
  if (a.num.n != b.num.n) throw std::invalid_argument("qrep_product: dimension mismatch");
  quotient_rep r;
  r.num = tensor(a.num, b.num);
  r.den = tensor(a.den, b.den);
  return r;
}

class_verdict commuting_matrix_refute(const hermitian_poly& r, int trials,
                                      const std::vector<int>& sizes,
                                      const sampler_config& cfg) {
  class_verdict v;
  const std::size_t n = r.vars();
  const int degz = r.deg_z();

  auto refute_with = [&](const std::vector<Eigen::MatrixXcd>& Z, double mineig, double scale,
                         const std::string& origin) {
    v.status = verdict_status::refuted;
    v.value = mineig;
    v.tolerance = kMatrixTol * scale;
    json zs = json::array();
    for (const auto& m : Z) {
      json rows = json::array();
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          row.push_back({format_double(m(i, j).real()), format_double(m(i, j).imag())});
        rows.push_back(row);
      }
      zs.push_back(rows);
    }
    v.evidence = {{"kind", "commuting-tuple-witness"},
                  {"origin", origin},
                  {"size", static_cast<int>(Z.empty() ? 0 : Z[0].rows())},
                  {"tuple", zs},
                  {"min_eigenvalue", format_double(mineig)},
                  {"tolerance", format_double(v.tolerance)}};
  };

  auto value_of_tuple = [&](const std::vector<Eigen::MatrixXcd>& Z) {
    const Eigen::Index k = Z[0].rows();
    // Cached powers of each Z_j and of each adjoint.
    std::vector<std::vector<Eigen::MatrixXcd>> zp(n), zap(n);
    for (std::size_t j = 0; j < n; ++j) {
      zp[j].push_back(Eigen::MatrixXcd::Identity(k, k));
      zap[j].push_back(Eigen::MatrixXcd::Identity(k, k));
      for (int e = 1; e <= degz; ++e) {
        zp[j].push_back(zp[j].back() * Z[j]);
        zap[j].push_back(zap[j].back() * Z[j].adjoint());
      }
    }
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(k, k);
    for (const auto& [key, c] : r.terms()) {
      Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(k, k) * c.to_complex();
      // All z-powers multiply on the left of all conjugate powers.
      for (std::size_t j = 0; j < n; ++j)
        if (key.first[j]) term = term * zp[j][key.first[j]];
      for (std::size_t j = 0; j < n; ++j)
        if (key.second[j]) term = term * zap[j][key.second[j]];
      acc += term;
    }
    double opnorm = 0.0;
    for (std::size_t j = 0; j < n; ++j) opnorm = std::max(opnorm, Z[j].norm());
    const double scale =
        std::max(r.max_coeff_abs(), 1e-300) * std::pow(1.0 + opnorm, r.total_degree());
    return std::pair<double, double>(eigmin(acc), scale);
  };

  // Scalar tuples first: size-1 matrices reduce to point evaluation, so the
  // structured battery and a sampling pass catch pointwise negativity.
  {
    point_sampler sampler(n, cfg);
    auto probe = structured_points(n);
    for (int i = 0; i < cfg.budget / 4; ++i) probe.push_back(sampler.ball_point());
    for (const auto& z : probe) {
      const double val = r.eval_real(z);
      const double scale = poly_scale(r, z);
      if (val < -kMatrixTol * scale) {
        std::vector<Eigen::MatrixXcd> Z;
        for (std::size_t j = 0; j < n; ++j) {
          Eigen::MatrixXcd m(1, 1);
          m(0, 0) = z[j];
          Z.push_back(m);
        }
        refute_with(Z, val, scale, "scalar-point");
        return v;
      }
    }
  }

  std::mt19937_64 rng(cfg.seed + 0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> gauss(0.0, 0.7);
  std::uniform_int_distribution<int> coin(-2, 2);
  for (int size : sizes) {
    if (size < 1) continue;
    for (int t = 0; t < trials; ++t) {
      Eigen::MatrixXcd base(size, size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) base(i, j) = cplx(gauss(rng), gauss(rng));
      std::vector<Eigen::MatrixXcd> Z;
      for (std::size_t j = 0; j < n; ++j) {
        // Z_j = c0 + c1 B + c2 B^2: polynomials in one matrix commute.
        const double c0 = coin(rng) * 0.5, c1 = coin(rng) * 0.5, c2 = coin(rng) * 0.25;
        Z.push_back(c0 * Eigen::MatrixXcd::Identity(size, size) + c1 * base +
                    c2 * base * base);
      }
      const auto [mineig, scale] = value_of_tuple(Z);
      if (mineig < -kMatrixTol * scale) {
        refute_with(Z, mineig, scale, "polynomial-in-random-matrix");
        return v;
      }
    }
  }
  v.evidence = {{"kind", "budget-exhausted"},
                {"trials", trials},
                {"sizes", sizes},
                {"note", "search only; this test never certifies"}};
  return v;
}

}  // namespace hermicert
