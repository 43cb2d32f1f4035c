#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "hermicert/hpoly.hpp"

namespace hermicert {

/// Deterministic sampling plan: identical seed and budget reproduce the
/// identical point stream, so every verdict and report is replayable.
struct sampler_config {
  std::uint64_t seed = 1;
  int budget = 2000;
  std::vector<double> radii = {0.25, 0.5, 1.0, 2.0, 4.0};
};

class point_sampler {
 public:
  point_sampler(std::size_t n, const sampler_config& cfg)
      : n_(n), cfg_(cfg), rng_(cfg.seed) {}

  /// Random point with norm cycling through the radius schedule.
  std::vector<cplx> ball_point();
  /// Uniform point on the unit sphere of C^n.
  std::vector<cplx> sphere_point();

  std::mt19937_64& rng() { return rng_; }

 private:
  std::vector<cplx> direction();
  std::size_t n_;
  sampler_config cfg_;
  std::mt19937_64 rng_;
  std::size_t tick_ = 0;
};

/// Small deterministic battery of probe points: coordinate vectors, sign and
/// phase patterns, scaled copies. Searched before any random sampling so
/// that witnesses at symmetric configurations are found reproducibly.
std::vector<std::vector<cplx>> structured_points(std::size_t n);

double vec_norm(std::span<const cplx> z);
std::vector<cplx> normalized(std::vector<cplx> z);

/// Degree-aware magnitude reference: max |coefficient| * (1 + |z|)^total.
/// All refutation tolerances in the library are relative to this.
double poly_scale(const hermitian_poly& r, std::span<const cplx> z);

/// Coordinate-wise pattern descent over the 2n real coordinates of the
/// point(s). Deterministic; returns the final objective value.
double pattern_polish(std::vector<cplx>& pt,
                      const std::function<double(std::span<const cplx>)>& objective,
                      double init_step = 0.25, int max_rounds = 200);

}  // namespace hermicert
