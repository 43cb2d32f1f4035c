#include "hermicert/sampling.hpp"

#include <cmath>

#include "hermicert/verdict.hpp"

namespace hermicert {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json point_to_json(const std::vector<cplx>& z) {
  json arr = json::array();
  for (const auto& c : z) arr.push_back({format_double(c.real()), format_double(c.imag())});
  return arr;
}

json points_to_json(const std::vector<std::vector<cplx>>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(point_to_json(p));
  return arr;
}

std::vector<cplx> point_sampler::direction() {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> z(n_);
  double nrm = 0.0;
  do {
    for (auto& c : z) c = cplx(gauss(rng_), gauss(rng_));
    nrm = vec_norm(z);
  } while (nrm < 1e-12);
  for (auto& c : z) c /= nrm;
  return z;
}

std::vector<cplx> point_sampler::ball_point() {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double shell = cfg_.radii.empty() ? 1.0 : cfg_.radii[tick_++ % cfg_.radii.size()];
  auto z = direction();
  const double rad = shell * (0.25 + 0.75 * uni(rng_));
  for (auto& c : z) c *= rad;
  return z;
}

std::vector<cplx> point_sampler::sphere_point() { return direction(); }

double vec_norm(std::span<const cplx> z) {
  double s = 0.0;
  for (const auto& c : z) s += std::norm(c);
  return std::sqrt(s);
}

std::vector<cplx> normalized(std::vector<cplx> z) {
  double nrm = vec_norm(z);
  if (nrm > 0)
    for (auto& c : z) c /= nrm;
  return z;
}

std::vector<std::vector<cplx>> structured_points(std::size_t n) {
  std::vector<std::vector<cplx>> pts;
  const cplx one(1, 0), mone(-1, 0), im(0, 1), mim(0, -1);
  // coordinate vectors
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<cplx> e(n, cplx(0, 0));
    e[j] = one;
    pts.push_back(e);
  }
  // sign/phase patterns over {1,-1,i,-i}, capped for larger n
  const std::vector<cplx> alphabet = {one, mone, im, mim};
  const std::size_t pattern_vars = std::min<std::size_t>(n, 3);
  std::vector<std::size_t> idx(pattern_vars, 0);
  const std::size_t combos = static_cast<std::size_t>(std::pow(4.0, pattern_vars));
  for (std::size_t c = 0; c < combos; ++c) {
    std::vector<cplx> p(n, one);
    std::size_t rest = c;
    for (std::size_t j = 0; j < pattern_vars; ++j) {
      p[j] = alphabet[rest % 4];
      rest /= 4;
    }
    pts.push_back(p);
  }
  // scaled copies of the all-ones direction and the diagonal corner cases
  for (double s : {0.5, 2.0}) {
    std::vector<cplx> p(n, cplx(s, 0));
    pts.push_back(p);
  }
  if (n >= 2) {
    std::vector<cplx> p(n, cplx(0, 0));
    p[0] = cplx(1, 0);
    p[1] = cplx(0.5, 0);
    pts.push_back(p);
    p[1] = cplx(0.2, 0);
    pts.push_back(p);
  }
  return pts;
}

double poly_scale(const hermitian_poly& r, std::span<const cplx> z) {
  const double base = 1.0 + vec_norm(z);
  return std::max(r.max_coeff_abs(), 1e-300) * std::pow(base, r.total_degree());
}

double pattern_polish(std::vector<cplx>& pt,
                      const std::function<double(std::span<const cplx>)>& objective,
                      double init_step, int max_rounds) {
  double best = objective(pt);
  double step = init_step;
  for (int round = 0; round < max_rounds && step > 1e-10; ++round) {
    bool improved = false;
    for (std::size_t j = 0; j < pt.size(); ++j) {
      for (int part = 0; part < 2; ++part) {
        for (double sgn : {1.0, -1.0}) {
          std::vector<cplx> trial = pt;
          trial[j] += part == 0 ? cplx(sgn * step, 0) : cplx(0, sgn * step);
          const double v = objective(trial);
          if (v < best) {
            best = v;
            pt = std::move(trial);
            improved = true;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace hermicert
