#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermicert/classes.hpp"
#include "test_support.hpp"

using namespace hermicert;
using namespace hermicert::testing;

namespace {

hermitian_poly ball4(const rational& lambda) {
  return make_fixture("ball4", {{"lambda", lambda}});
}

// Re-evaluates refutation evidence: the violation must reproduce within
// twice the reporting tolerance.
void recheck_refutation(const hermitian_poly& r, const class_verdict& v) {
  REQUIRE(v.status == verdict_status::refuted);
  const std::string kind = v.evidence.at("kind").get<std::string>();
  if (kind == "negative-value-witness") {
    CHECK(r.eval_real(v.witness.at(0)) < -v.tolerance / 2);
  } else if (kind == "kernel-matrix-witness") {
    const int k = static_cast<int>(v.witness.size());
    Eigen::MatrixXcd g(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) g(i, j) = r.eval(v.witness[i], v.witness[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (g + g.adjoint()));
    CHECK(es.eigenvalues().minCoeff() < -v.tolerance / 2);
  } else if (kind == "two-point-inequality-witness") {
    const double slack = r.eval_real(v.witness[0]) * r.eval_real(v.witness[1]) -
                         std::norm(r.eval(v.witness[0], v.witness[1]));
    CHECK(slack < -v.tolerance / 2);
  } else if (kind == "hessian-form-witness") {
    // spot check: the matrix entry route is exercised by test_log_psh itself;
    // here we only confirm the point stayed in the positive domain.
    CHECK(r.eval_real(v.witness.at(0)) > 0);
  }
}

}  // namespace

TEST_CASE("p1: refutations at symmetric witnesses") {
  const auto quartic = make_fixture("diagquartic", {{"lambda", rational(-5, 2)}});
  const auto v1 = test_p1(quartic);
  REQUIRE(v1.status == verdict_status::refuted);
  recheck_refutation(quartic, v1);

  const auto b17 = ball4(rational(17));
  const auto v2 = test_p1(b17);
  REQUIRE(v2.status == verdict_status::refuted);
  recheck_refutation(b17, v2);
}

TEST_CASE("p1: squared norms certify exactly") {
  const auto v = test_p1(norm_sq_poly(2));
  CHECK(v.status == verdict_status::certified);
  CHECK(v.evidence.at("kind") == "squared-norm");
}

TEST_CASE("p1: diagonal homogeneous members certify through the multiplier") {
  const auto v = test_p1(ball4(rational(13)));
  CHECK(v.status == verdict_status::certified);
  CHECK(v.evidence.at("kind") == "positive-coefficient-multiplier");
}

TEST_CASE("p1: the boundary case stays undetermined") {
  const auto v = test_p1(ball4(rational(16)));
  CHECK(v.status == verdict_status::undetermined);
}

TEST_CASE("p1: the product family refutes above its nonnegativity bound") {
  // three variables: the bound is 3^6 = 729
  const auto r = make_fixture("ballprod", {{"n", rational(3)}, {"a", rational(730)}});
  CHECK(test_p1(r).status == verdict_status::refuted);
}

TEST_CASE("p2: two-point refutation at lambda = 9") {
  const auto r = ball4(rational(9));
  const auto v = test_pk(r, 2);
  REQUIRE(v.status == verdict_status::refuted);
  recheck_refutation(r, v);
  // the canonical witness pair is equivalent to ((1,1),(1,-1)); verify that
  // specific kernel matrix has the expected negative eigenvalue -2
  const std::vector<cplx> a = {cplx(1, 0), cplx(1, 0)}, b = {cplx(1, 0), cplx(-1, 0)};
  Eigen::MatrixXcd g(2, 2);
  g << r.eval(a, a), r.eval(a, b), r.eval(b, a), r.eval(b, b);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
  CHECK(es.eigenvalues().minCoeff() == doctest::Approx(-2.0).epsilon(1e-10));
}

TEST_CASE("p2: certified through the exact squared-norm test at lambda = 6") {
  const auto v = test_pk(ball4(rational(6)), 2);
  CHECK(v.status == verdict_status::certified);
}

TEST_CASE("p1 and pk agree at k = 1") {
  for (const rational lambda : {rational(17), rational(6)}) {
    const auto r = ball4(lambda);
    CHECK(test_pk(r, 1).status == test_p1(r).status);
  }
}

TEST_CASE("cauchy-schwarz: refuted at lambda = 9, consistent with p2") {
  const auto r = ball4(rational(9));
  const auto v = test_cauchy_schwarz(r);
  REQUIRE(v.status == verdict_status::refuted);
  recheck_refutation(r, v);
  CHECK(test_pk(r, 2).status == verdict_status::refuted);
}

TEST_CASE("cauchy-schwarz: single-signed polynomials satisfy the inequality") {
  // minus a squared norm: not in p1, yet no two-point violation exists
  const auto neg = gauss_rational(-1) * norm_sq_poly(2);
  const auto v = test_cauchy_schwarz(neg);
  CHECK(v.status == verdict_status::certified);
  CHECK(test_p1(neg).status == verdict_status::refuted);

  CHECK(test_cauchy_schwarz(modz_sq(1, 0)).status == verdict_status::certified);
}

TEST_CASE("two-point slack crosscheck: both routes agree in sign") {
  sampler_config cfg;
  cfg.budget = 400;

  auto rep = cs_slack_crosscheck(ball4(rational(9)), cfg);
  CHECK(rep.sign_agreement);
  CHECK(rep.min_slack < 0);  // a violating pair is in the deterministic battery
  CHECK(rep.max_abs_diff < 1e-9);

  rep = cs_slack_crosscheck(ball4(rational(0)), cfg);
  CHECK(rep.sign_agreement);
  CHECK(rep.min_slack >= -1e-12);

  // one-component decomposition: slack vanishes identically at z = w
  rep = cs_slack_crosscheck(modz_sq(1, 0), cfg);
  CHECK(rep.sign_agreement);
  CHECK(rep.max_abs_diff < 1e-12);
}

TEST_CASE("log-psh: refuted at lambda = 13, quiet at 12") {
  const auto r13 = ball4(rational(13));
  const auto v13 = test_log_psh(r13);
  REQUIRE(v13.status == verdict_status::refuted);
  recheck_refutation(r13, v13);

  const auto v12 = test_log_psh(ball4(rational(12)));
  CHECK(v12.status == verdict_status::undetermined);
}

TEST_CASE("log-psh: the flat case never trips") {
  // |z|^2: the form r r_zzbar - r_z r_zbar vanishes identically
  const auto v = test_log_psh(modz_sq(1, 0));
  CHECK(v.status == verdict_status::undetermined);
}

TEST_CASE("rad: exact powers on the quartic family") {
  const auto v6 = test_rad(ball4(rational(6)), 16);
  REQUIRE(v6.status == verdict_status::certified);
  CHECK(v6.exponent == 1);

  // oracle: smallest N with ((x+y)^4 - 7 x^2 y^2)^N coefficientwise >= 0
  dense_poly base;
  for (int k = 0; k <= 4; ++k) {
    long long binom[5] = {1, 4, 6, 4, 1};
    base[{k, 4 - k}] += binom[k];
  }
  base[{2, 2}] -= 7;
  const int oracle_n = oracle_min_nonneg_power(base, 2, 8);
  REQUIRE(oracle_n == 2);

  const auto v7 = test_rad(ball4(rational(7)), 16);
  REQUIRE(v7.status == verdict_status::certified);
  CHECK(v7.exponent == oracle_n);
}

TEST_CASE("rad: refutation rides the two-point witness") {
  const auto r = ball4(rational(9));
  const auto v = test_rad(r, 8);
  REQUIRE(v.status == verdict_status::refuted);
  recheck_refutation(r, v);
}

TEST_CASE("rad: the three-variable sum keeps its negative cross term") {
  const auto r = make_fixture("radsum", {{"beta", rational(7)}});
  const auto v = test_rad(r, 6);
  REQUIRE(v.status == verdict_status::undetermined);
  const auto& attempts = v.evidence.at("attempts");
  REQUIRE(attempts.size() == 6);
  for (const auto& item : attempts) {
    CHECK(item.contains("negative_diagonal"));
    CHECK(item.at("signature").at("neg").get<int>() > 0);
  }
}

TEST_CASE("rad certified implies no two-point violation on a large sample") {
  sampler_config cfg;
  cfg.budget = 20000;  // 10^4 pairs
  for (const rational lambda : {rational(6), rational(7)}) {
    const auto v = test_cauchy_schwarz(ball4(lambda), cfg);
    CHECK(v.status != verdict_status::refuted);
  }
}

TEST_CASE("quotient representation arithmetic") {
  std::mt19937_64 rng(71);
  // f1 = z + z^2 from r1 s1 = |f1|^2 with r1 = |1+z|^2, s1 = |z|^2
  holo_poly one{1, {{multi_index{0}, cplx(1, 0)}}};
  holo_poly z{1, {{multi_index{1}, cplx(1, 0)}}};
  holo_poly one_plus_z{1, {{multi_index{0}, cplx(1, 0)}, {multi_index{1}, cplx(1, 0)}}};
  holo_poly one_minus_z{1, {{multi_index{0}, cplx(1, 0)}, {multi_index{1}, cplx(-1, 0)}}};

  quotient_rep a{{1, {one_plus_z}}, {1, {one}}};
  quotient_rep b{{1, {one_minus_z}}, {1, {z}}};

  // identity: multiplying by 1/1 changes nothing pointwise
  quotient_rep unit{{1, {one}}, {1, {one}}};
  const auto a_again = qrep_product(a, unit);
  CHECK(a_again.num.comps.size() == a.num.comps.size());

  const auto prod = qrep_product(a, b);
  CHECK(prod.num.comps.size() == a.num.comps.size() * b.num.comps.size());
  CHECK(prod.den.comps.size() == a.den.comps.size() * b.den.comps.size());

  const auto sum = qrep_sum(a, b);
  CHECK(sum.num.comps.size() == 2);
  CHECK(sum.den.comps.size() == 1);

  for (int t = 0; t < 50; ++t) {
    const auto pt = random_point(rng, 1);
    const double av = a.num.norm_sq_at(pt) / a.den.norm_sq_at(pt);
    const double bden = b.den.norm_sq_at(pt);
    if (bden < 1e-6) continue;
    const double bv = b.num.norm_sq_at(pt) / bden;
    const double pv = prod.num.norm_sq_at(pt) / prod.den.norm_sq_at(pt);
    const double sv = sum.num.norm_sq_at(pt) / sum.den.norm_sq_at(pt);
    CHECK(pv == doctest::Approx(av * bv).epsilon(1e-9));
    CHECK(sv == doctest::Approx(av + bv).epsilon(1e-9));
  }
}

TEST_CASE("quotient product fixture: products of divisors divide the tensor") {
  std::mt19937_64 rng(73);
  // r1 s1 = |f1|^2 and r2 s2 = |f2|^2  =>  (r1 r2)(s1 s2) = |f1 (x) f2|^2
  exact_holo f1(1), f2(1);
  f1.add_term({1}, gauss_rational(1));
  f1.add_term({2}, gauss_rational(1));  // z + z^2
  f2.add_term({0}, gauss_rational(1));
  f2.add_term({1}, gauss_rational(-1));  // 1 - z
  const auto r1 = sesquilinear_product(f1, f1);  // |f1|^2 = r1 s1 with s1 = 1
  const auto r2 = sesquilinear_product(f2, f2);
  const auto lhs = r1 * r2;
  holo_map m1{1, {holo_poly{1, {{multi_index{1}, cplx(1, 0)}, {multi_index{2}, cplx(1, 0)}}}}};
  holo_map m2{1, {holo_poly{1, {{multi_index{0}, cplx(1, 0)}, {multi_index{1}, cplx(-1, 0)}}}}};
  const auto tens = tensor(m1, m2);
  for (int t = 0; t < 30; ++t) {
    const auto pt = random_point(rng, 1);
    CHECK(lhs.eval_real(pt) == doctest::Approx(tens.norm_sq_at(pt)).epsilon(1e-9));
  }
}

TEST_CASE("commuting-matrix refutation") {
  const auto neg = gauss_rational(-1) * modz_sq(1, 0);
  const auto v1 = commuting_matrix_refute(neg, 10, {1});
  REQUIRE(v1.status == verdict_status::refuted);
  CHECK(v1.evidence.at("origin") == "scalar-point");

  const auto v2 = commuting_matrix_refute(ball4(rational(17)), 10, {1, 2});
  REQUIRE(v2.status == verdict_status::refuted);

  const auto v3 = commuting_matrix_refute(ball4(rational(6)), 20, {1, 2, 3});
  CHECK(v3.status == verdict_status::undetermined);
}

TEST_CASE("containment chain stays consistent across the lambda sweep") {
  // smaller to larger: rad, p2, logpsh, p1
  for (const long lam : {0L, 6L, 7L, 9L, 12L, 13L, 16L, 17L}) {
    const auto r = ball4(rational(lam));
    const std::vector<class_verdict> chain = {
        test_rad(r, 8),
        test_pk(r, 2),
        test_log_psh(r),
        test_p1(r),
    };
    for (std::size_t small = 0; small < chain.size(); ++small)
      for (std::size_t large = small + 1; large < chain.size(); ++large) {
        const bool conflict = chain[large].status == verdict_status::refuted &&
                              chain[small].status == verdict_status::certified;
        CHECK_FALSE(conflict);
      }
  }
}

TEST_CASE("pk collapse regression: k=3 witness search at lambda=7 (logged only)") {
  // For this family, membership in every pk with k > 2 is expected to match
  // the squared-norm class, so lambda = 7 should eventually admit a k = 3
  // refutation. Sampling rarely finds one; log instead of failing.
  sampler_config cfg;
  cfg.budget = 3000;
  const auto v = test_pk(ball4(rational(7)), 3, cfg);
  if (v.status != verdict_status::refuted) {
    WARN_MESSAGE(true, "k=3 refutation not found within budget (expected, logged)");
  }
  CHECK(v.status != verdict_status::certified);
}
