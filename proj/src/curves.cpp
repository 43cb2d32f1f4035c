#include "hermicert/curves.hpp"

#include "hermicert/homogeneity.hpp"
#include "hermicert/inertia.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace hermicert {

namespace {

using upoly = std::vector<gauss_rational>;  // dense univariate, c[k] at t^k

upoly umul(const upoly& a, const upoly& b) {
  if (a.empty() || b.empty()) return {};
  upoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

upoly upow(const upoly& a, int e) {
  upoly acc = {gauss_rational(1)};
  for (int i = 0; i < e; ++i) acc = umul(acc, a);
  return acc;
}

upoly uconj(const upoly& a) {
  upoly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(c.conj());
  return r;
}

}  // namespace

std::vector<cplx> curve::eval(cplx t) const {
  std::vector<cplx> z;
  z.reserve(comps.size());
  for (const auto& comp : comps) {
    cplx acc(0, 0);
    cplx tp(1, 0);
    for (const auto& c : comp) {
      acc += c.to_complex() * tp;
      tp *= t;
    }
    z.push_back(acc);
  }
  return z;
}

std::string curve::str() const {
  std::string s = "(";
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (j) s += "; ";
    for (std::size_t k = 0; k < comps[j].size(); ++k) {
      if (k) s += " ";
      s += comps[j][k].str();
    }
    if (comps[j].empty()) s += "0/1";
  }
  return s + ")";
}

hermitian_poly pullback(const hermitian_poly& r, const curve& c) {
  if (c.dim() != r.vars()) throw malformed_input("pullback: curve dimension mismatch");
  hermitian_poly out(1);
  for (const auto& [key, v] : r.terms()) {
    upoly u = {gauss_rational(1)};
    for (std::size_t j = 0; j < c.dim(); ++j)
      if (key.first[j]) u = umul(u, upow(c.comps[j], key.first[j]));
    upoly w = {gauss_rational(1)};
    for (std::size_t j = 0; j < c.dim(); ++j)
      if (key.second[j]) w = umul(w, upow(uconj(c.comps[j]), key.second[j]));
    for (std::size_t p = 0; p < u.size(); ++p) {
      if (u[p].is_zero()) continue;
      for (std::size_t q = 0; q < w.size(); ++q) {
        if (w[q].is_zero()) continue;
        out.add_term(multi_index{static_cast<int>(p)}, multi_index{static_cast<int>(q)},
                     v * u[p] * w[q]);
      }
    }
  }
  return out;
}

hermitian_poly initial_form(const hermitian_poly& r1) {
  hermitian_poly out(r1.vars());
  if (r1.is_zero()) return out;
  int lowest = std::numeric_limits<int>::max();
  for (const auto& [k, v] : r1.terms())
    lowest = std::min(lowest, k.first.weight() + k.second.weight());
  for (const auto& [k, v] : r1.terms())
    if (k.first.weight() + k.second.weight() == lowest) out.add_term(k.first, k.second, v);
  return out;
}

bool property_w(const hermitian_poly& r1) {
  if (r1.vars() != 1) throw malformed_input("property_w: one-variable input required");
  if (r1.is_zero()) return true;
  const hermitian_poly init = initial_form(r1);
  if (init.term_count() != 1) return false;
  const auto& [key, v] = *init.terms().begin();
  return key.first == key.second && v.is_real() && sgn(v.re()) > 0;
}

namespace {

std::vector<curve> deterministic_curves(std::size_t n) {
  std::vector<curve> out;
  const gauss_rational one(1), zero(0);
  auto constant = [&](const gauss_rational& c) { return upoly{c}; };
  auto linear = [&](const gauss_rational& a, const gauss_rational& b) {
    return upoly{a, b};  // a + b t
  };
  if (n == 2) {
    out.push_back({{linear(one, one), constant(one)}});      // (1 + t, 1)
    out.push_back({{constant(one), linear(one, one)}});      // (1, 1 + t)
    out.push_back({{linear(one, one), linear(one, -one)}});  // (1 + t, 1 - t)
  }
  if (n == 3) {
    out.push_back({{upoly{zero, zero, one}, linear(one, one), upoly{zero, one}}});  // (t^2, 1+t, t)
  }
  // coordinate lines and all-ones lines through one moving slot
  for (std::size_t j = 0; j < n; ++j) {
    curve axis;
    axis.comps.assign(n, constant(zero));
    axis.comps[j] = upoly{zero, one};
    out.push_back(axis);
    curve ones;
    ones.comps.assign(n, constant(one));
    ones.comps[j] = linear(one, one);
    out.push_back(ones);
  }
  // a few rational affine lines
  const std::vector<gauss_rational> offsets = {zero, one, gauss_rational(1, 2)};
  for (const auto& off : offsets) {
    for (std::size_t j = 0; j < n; ++j) {
      curve line;
      line.comps.assign(n, constant(off));
      line.comps[j] = linear(off, one);
      out.push_back(line);
    }
  }
  return out;
}

curve random_curve(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> degree(1, 3);
  curve c;
  c.comps.resize(n);
  for (auto& comp : c.comps) {
    const int deg = degree(rng);
    comp.resize(deg + 1);
    for (auto& coef : comp)
      coef = gauss_rational(rational(num(rng), 4), rational(num(rng), 4));
  }
  return c;
}

}  // namespace

class_verdict curve_refute_quotient(const hermitian_poly& r, int budget,
                                    const sampler_config& cfg) {
  class_verdict v;
  auto try_curve = [&](const curve& c, const char* origin) -> bool {
    const hermitian_poly pb = pullback(r, c);
    if (property_w(pb)) return false;
    const hermitian_poly init = initial_form(pb);
    json init_terms = json::array();
    for (const auto& [k, val] : init.terms())
      init_terms.push_back({{"t_power", k.first[0]},
                            {"tbar_power", k.second[0]},
                            {"coefficient", val.str()}});
    v.status = verdict_status::refuted;
    v.evidence = {{"kind", "curve-pullback-witness"},
                  {"origin", origin},
                  {"curve", c.str()},
                  {"initial_form", init_terms},
                  {"note", "pullback violates the even-order diagonal vanishing "
                           "condition, so r is not a quotient of squared norms"}};
    return true;
  };
  for (const auto& c : deterministic_curves(r.vars()))
    if (try_curve(c, "deterministic")) return v;
  std::mt19937_64 rng(cfg.seed + 0x51a2b3c4d5e6f708ull);
  for (int t = 0; t < budget; ++t)
    if (try_curve(random_curve(r.vars(), rng), "random")) return v;
  v.evidence = {{"kind", "budget-exhausted"},
                {"deterministic_curves", deterministic_curves(r.vars()).size()},
                {"random_curves", budget}};
  // For bihomogeneous input, attach the sampled supremum of the negative
  // over the positive part of a decomposition: a value below 1 is
  // suggestive (a strict gap characterizes membership) but certifies
  // nothing at sample scale.
  if (is_bihomogeneous(r).verdict && !r.is_zero()) {
    const holo_decomposition dec = decompose(r);
    if (!dec.f.comps.empty()) {
      point_sampler sampler(r.vars(), cfg);
      double sup = 0.0;
      for (int t = 0; t < 500; ++t) {
        const auto z = sampler.sphere_point();
        const double fp = dec.f.norm_sq_at(z);
        if (fp < 1e-14) {
          sup = std::numeric_limits<double>::infinity();
          break;
        }
        sup = std::max(sup, dec.g.norm_sq_at(z) / fp);
      }
      v.evidence["decomposition_ratio_estimate"] = {
          {"sup_neg_over_pos", format_double(sup)},
          {"note", "sampled estimate only; not a certificate"}};
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// One-variable decision procedure
// ---------------------------------------------------------------------------

namespace {

struct division_outcome {
  bool ok = false;
  hermitian_poly quotient{1};
  double residual = 0.0;  // relative remainder magnitude (0 for exact)
  bool exact = false;
};

// Divides r by (z - p) in the z index, then by conj(z - p) in the conjugate
// index. Exact synthetic division; the remainder must vanish exactly for
// exact zeros and below the tolerance for numeric ones.
division_outcome divide_by_modulus_sq(const hermitian_poly& r, const gauss_rational& p,
                                      bool require_exact, double rel_tol) {
  division_outcome out;
  const double scale =
      std::max(r.max_coeff_abs(), 1e-300) * std::pow(1.0 + p.abs_approx(), r.total_degree());

  // Collect coefficients as a dense (j, k) grid.
  int J = 0, K = 0;
  for (const auto& [key, v] : r.terms()) {
    J = std::max(J, key.first[0]);
    K = std::max(K, key.second[0]);
  }
  std::vector<std::vector<gauss_rational>> grid(J + 1, std::vector<gauss_rational>(K + 1));
  for (const auto& [key, v] : r.terms()) grid[key.first[0]][key.second[0]] = v;

  double worst_rem = 0.0;
  // First pass: divide each column (fixed conjugate power) by (z - p).
  std::vector<std::vector<gauss_rational>> q1(std::max(J, 1),
                                              std::vector<gauss_rational>(K + 1));
  for (int k = 0; k <= K; ++k) {
    gauss_rational carry;  // quotient coefficient being propagated
    for (int j = J; j >= 1; --j) {
      carry = grid[j][k] + p * carry;
      q1[j - 1][k] = carry;
    }
    const gauss_rational rem = grid[0][k] + p * carry;
    if (require_exact && !rem.is_zero()) return out;
    worst_rem = std::max(worst_rem, rem.abs_approx());
  }
  // Second pass: divide each row by conj(z - p).
  const gauss_rational pc = p.conj();
  const int J2 = static_cast<int>(q1.size()) - 1;
  std::vector<std::vector<gauss_rational>> q2(J2 + 1,
                                              std::vector<gauss_rational>(std::max(K, 1)));
  for (int j = 0; j <= J2; ++j) {
    gauss_rational carry;
    for (int k = K; k >= 1; --k) {
      carry = q1[j][k] + pc * carry;
      q2[j][k - 1] = carry;
    }
    const gauss_rational rem = q1[j][0] + pc * carry;
    if (require_exact && !rem.is_zero()) return out;
    worst_rem = std::max(worst_rem, rem.abs_approx());
  }
  out.residual = worst_rem / scale;
  if (!require_exact && out.residual > rel_tol) return out;
  hermitian_poly q(1);
  for (int j = 0; j <= J2; ++j)
    for (int k = 0; k + 1 <= K; ++k)
      if (!q2[j][k].is_zero()) q.add_term(multi_index{j}, multi_index{k}, q2[j][k]);
  out.quotient = std::move(q);
  out.ok = true;
  out.exact = require_exact || worst_rem == 0.0;
  return out;
}

struct zero_candidate {
  gauss_rational point;
  bool exact = false;
  double value = 0.0;  // relative value at the point
};

// Damped Newton iteration on the antiholomorphic derivative: near a factor
// |z - p|^2 R with R(p) != 0 the function r_zbar behaves like (z - p) R(p),
// so the step z -= r_zbar / r_z_zbar sharpens a coarse zero to near machine
// precision. Multiple zeros converge more slowly but their division
// remainders shrink quadratically in the position error, which compensates.
cplx newton_refine(const hermitian_poly& r, cplx z, int iters) {
  const hermitian_poly rb = r.dwbar(0);
  const hermitian_poly rzb = rb.dz(0);
  auto value = [&](cplx w) {
    std::vector<cplx> pt = {w};
    return std::abs(r.eval_real(pt));
  };
  double best = value(z);
  for (int it = 0; it < iters; ++it) {
    std::vector<cplx> pt = {z};
    const cplx num = rb.eval(pt, pt);
    const cplx den = rzb.eval(pt, pt);
    if (std::abs(den) < 1e-300) break;
    cplx step = num / den;
    for (int damp = 0; damp < 20; ++damp) {
      const cplx trial = z - step;
      const double v = value(trial);
      if (v < best) {
        z = trial;
        best = v;
        break;
      }
      step *= 0.5;
      if (std::abs(step) < 1e-17 * (1.0 + std::abs(z))) break;
    }
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
  }
  return z;
}

std::optional<zero_candidate> find_zero(const hermitian_poly& r, const sampler_config&) {
  // The search is confined to the scanned disk; a decaying tail outside it
  // is the business of inf_zero_detect, not a zero.
  constexpr double kSearchRadius = 20.0;
  auto rel_value = [&](cplx z) {
    if (std::abs(z) > kSearchRadius) return std::numeric_limits<double>::infinity();
    std::vector<cplx> pt = {z};
    return std::abs(r.eval_real(pt)) / poly_scale(r, pt);
  };
  double best = std::numeric_limits<double>::infinity();
  cplx best_pt(0, 0);
  auto consider = [&](cplx z) {
    const double v = rel_value(z);
    if (v < best) {
      best = v;
      best_pt = z;
    }
  };
  // Disk grids of doubling radius, then a polish around the best candidate.
  for (int k = 0; k <= 4; ++k) {
    const double rad = std::pow(2.0, k);
    const int steps = 32;
    for (int ix = -steps; ix <= steps; ++ix)
      for (int iy = -steps; iy <= steps; ++iy)
        consider(cplx(rad * ix / steps, rad * iy / steps));
  }
  std::vector<cplx> pt = {best_pt};
  pattern_polish(pt, [&](std::span<const cplx> z) { return rel_value(z[0]); }, 0.1, 300);
  best_pt = pt[0];
  best = rel_value(best_pt);
  if (best < 1e-4) {
    const cplx refined = newton_refine(r, best_pt, 40);
    if (rel_value(refined) <= best) {
      best_pt = refined;
      best = rel_value(best_pt);
    }
  }
  if (best > 1e-10) return std::nullopt;

  // Snap to a nearby small rational point and verify exactly if possible.
  const gauss_rational cand(snap_to_rational(best_pt.real(), 1000000ul),
                            snap_to_rational(best_pt.imag(), 1000000ul));
  if (std::abs(cand.to_complex() - best_pt) < 1e-6) {
    std::vector<gauss_rational> zc = {cand};
    if (r.eval_exact(zc, zc).is_zero()) return zero_candidate{cand, true, 0.0};
  }
  const gauss_rational numeric(snap_to_rational(best_pt.real(), 1ul << 40),
                               snap_to_rational(best_pt.imag(), 1ul << 40));
  return zero_candidate{numeric, false, best};
}

}  // namespace

q1_report q1_decide(const hermitian_poly& r1, const sampler_config& cfg) {
  if (r1.vars() != 1) throw malformed_input("q1_decide: one-variable input required");
  q1_report rep;
  rep.detail["basis"] = "graded-lex";
  rep.detail["zero_search_radius"] = 20.0;
  if (r1.is_zero()) {
    rep.verdict = q1_report::verdict_t::identically_zero;
    rep.quotient = hermitian_poly::constant(1, gauss_rational(1));
    rep.degree_condition = true;
    return rep;
  }
  // Quick negativity scan: a negative value excludes every factorization.
  {
    point_sampler sampler(1, cfg);
    auto objective = [&](std::span<const cplx> z) {
      return r1.eval_real(z) / poly_scale(r1, z);
    };
    double best = 0.0;
    std::vector<cplx> best_pt;
    for (const auto& z : structured_points(1)) {
      const double v = objective(z);
      if (v < best) {
        best = v;
        best_pt = z;
      }
    }
    for (int i = 0; i < cfg.budget / 2; ++i) {
      const auto z = sampler.ball_point();
      const double v = objective(z);
      if (v < best) {
        best = v;
        best_pt = z;
      }
    }
    if (!best_pt.empty()) best = pattern_polish(best_pt, objective);
    if (best < -1e-12) {
      rep.verdict = q1_report::verdict_t::not_in_q;
      rep.reason = "negative-value";
      rep.detail["witness"] = point_to_json(best_pt);
      rep.detail["value"] = format_double(r1.eval_real(best_pt));
      return rep;
    }
  }

  hermitian_poly R = r1;
  const int max_zeros = r1.deg_z();
  for (int round = 0; round <= max_zeros; ++round) {
    // A vanishing constant term together with pure terms blocks membership
    // outright: the factor lemma would force divisibility by |z|^2.
    const bool at_origin_zero = R.coeff(multi_index{0}, multi_index{0}).is_zero();
    if (at_origin_zero && R.has_pure_terms()) {
      rep.verdict = q1_report::verdict_t::not_in_q;
      rep.reason = "pure-term obstruction";
      rep.quotient = R;
      rep.detail["note"] = "quotient vanishes at 0 but keeps pure powers";
      return rep;
    }
    if (round == max_zeros) break;
    const auto zero = find_zero(R, cfg);
    if (!zero) break;
    division_outcome div = divide_by_modulus_sq(R, zero->point, zero->exact, 1e-9);
    if (!div.ok && !zero->exact) {
      // One refinement retry with extra Newton steps and a finer snap.
      const cplx again = newton_refine(R, zero->point.to_complex(), 120);
      const gauss_rational refined(snap_to_rational(again.real(), 1ul << 48),
                                   snap_to_rational(again.imag(), 1ul << 48));
      div = divide_by_modulus_sq(R, refined, false, 1e-9);
      if (!div.ok)
        throw reconciliation_error("q1_decide: division residual persists at a claimed zero");
    }
    if (!div.ok) {
      rep.verdict = q1_report::verdict_t::not_in_q;
      rep.reason = "zero-divisibility failure";
      rep.quotient = R;
      rep.detail["zero"] = zero->point.str();
      return rep;
    }
    rep.max_division_residual = std::max(rep.max_division_residual, div.residual);
    bool merged = false;
    for (auto& zr : rep.zeros) {
      if (zr.point == zero->point) {
        ++zr.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) rep.zeros.push_back({zero->point, 1, zero->exact, div.residual});
    R = std::move(div.quotient);
    if (R.is_zero()) break;
  }

  rep.quotient = R;
  // No further zeros: record the sampled floor of the quotient.
  {
    point_sampler sampler(1, cfg);
    double mn = std::numeric_limits<double>::infinity();
    for (const auto& z : structured_points(1)) mn = std::min(mn, R.eval_real(z));
    for (int i = 0; i < cfg.budget / 4; ++i) mn = std::min(mn, R.eval_real(sampler.ball_point()));
    rep.sampled_quotient_min = mn;
  }
  const auto deg = R.degree_info();
  const gauss_rational top = R.coeff(multi_index{deg.deg_z}, multi_index{deg.deg_z});
  rep.degree_condition = deg.squared_norm_parity && sgn(top.re()) > 0;
  if (rep.degree_condition) {
    rep.verdict = q1_report::verdict_t::in_q;
    rep.detail["top_term"] = {{"power", deg.deg_z}, {"coefficient", top.str()}};
    return rep;
  }
  rep.verdict = q1_report::verdict_t::not_in_q;
  rep.reason = inf_zero_detect(R, cfg) ? "inf-zero" : "degree obstruction";
  rep.detail["deg_z"] = deg.deg_z;
  rep.detail["total_degree"] = deg.total_degree;
  return rep;
}

hermitian_poly q1_reconstruct(const q1_report& rep) {
  hermitian_poly acc = rep.quotient;
  for (const auto& z : rep.zeros) {
    exact_holo lin(1);
    lin.add_term(multi_index{1}, gauss_rational(1));
    lin.add_term(multi_index{0}, -z.point);
    const hermitian_poly factor = modulus_sq(lin);
    for (int i = 0; i < z.multiplicity; ++i) acc = acc * factor;
  }
  return acc;
}

namespace {

// Exact-to-machine minimum of z -> r(z, zbar) over the circle |z| = s: the
// restriction is a low-degree trigonometric polynomial, so all critical
// points of the angular derivative 2 Re(i z r_z) are found by sign-change
// bisection and evaluated.
double circle_min(const hermitian_poly& r, const hermitian_poly& rz, double s) {
  constexpr double kTwoPi = 2 * 3.14159265358979323846;
  auto val = [&](double theta) {
    const std::vector<cplx> z = {std::polar(s, theta)};
    return r.eval_real(z);
  };
  auto dval = [&](double theta) {
    const std::vector<cplx> z = {std::polar(s, theta)};
    return 2.0 * (cplx(0, 1) * z[0] * rz.eval(z, z)).real();
  };
  const int grid = 512;
  double best = std::numeric_limits<double>::infinity();
  double prev = dval(0.0);
  for (int i = 1; i <= grid; ++i) {
    const double theta = kTwoPi * i / grid;
    const double cur = dval(theta);
    best = std::min(best, val(theta));
    if ((prev < 0) != (cur < 0)) {
      double lo = kTwoPi * (i - 1) / grid, hi = theta;
      double flo = prev;
      for (int b = 0; b < 60; ++b) {
        const double mid = 0.5 * (lo + hi);
        const double fm = dval(mid);
        if ((flo < 0) == (fm < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      best = std::min(best, val(0.5 * (lo + hi)));
    }
    prev = cur;
  }
  return best;
}

}  // namespace

bool inf_zero_detect(const hermitian_poly& r1, const sampler_config& cfg) {
  if (r1.vars() != 1) throw malformed_input("inf_zero_detect: one-variable input required");
  if (r1.is_zero()) return false;
  // If there is a zero, the infimum question does not arise.
  if (find_zero(r1, cfg)) return false;
  const hermitian_poly rz = r1.dz(0);
  double inner_min = std::numeric_limits<double>::infinity();  // radii <= 2
  double overall_min = std::numeric_limits<double>::infinity();
  for (int k = -4; k <= 7; ++k) {
    for (int j = 0; j < 8; ++j) {
      const double s = std::pow(2.0, k) * (1.0 + j / 8.0);
      const double mn = circle_min(r1, rz, s);
      if (mn < 0) return false;  // negative values: not the positive regime
      overall_min = std::min(overall_min, mn);
      if (s <= 2.0) inner_min = std::min(inner_min, mn);
    }
  }
  {
    const std::vector<cplx> origin = {cplx(0, 0)};
    const double at0 = r1.eval_real(origin);
    if (at0 < 0) return false;
    inner_min = std::min(inner_min, at0);
    overall_min = std::min(overall_min, at0);
  }
  return overall_min < 1e-3 * std::max(inner_min, 1e-300);
}

}  // namespace hermicert
