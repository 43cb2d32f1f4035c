#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermicert/homogeneity.hpp"
#include "test_support.hpp"

using namespace hermicert;
using namespace hermicert::testing;

TEST_CASE("bihomogeneity test") {
  const auto w1 = is_bihomogeneous(make_fixture("ball4", {{"lambda", rational(5)}}));
  CHECK(w1.verdict);
  CHECK(w1.m == 4);

  CHECK_FALSE(is_bihomogeneous(make_fixture("pure", {{"m", rational(3)}})).verdict);

  const auto w2 = is_bihomogeneous(hermitian_poly::constant(1, gauss_rational(1)));
  CHECK(w2.verdict);
  CHECK(w2.m == 0);

  const auto w3 = is_bihomogeneous(hermitian_poly(2));
  CHECK(w3.verdict);
  CHECK(w3.degenerate);
}

TEST_CASE("bihomogeneity: scaling law holds at random points when verdict true") {
  std::mt19937_64 rng(61);
  const auto r = make_fixture("ball4", {{"lambda", rational(3)}});
  const int m = is_bihomogeneous(r).m;
  for (int t = 0; t < 20; ++t) {
    const auto z = random_point(rng, 2);
    const cplx lambda(0.3 + 0.1 * t, -0.2);
    std::vector<cplx> scaled = z;
    for (auto& c : scaled) c *= lambda;
    const double lhs = r.eval_real(scaled);
    const double rhs = std::pow(std::norm(lambda), m) * r.eval_real(z);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("bihomogenize: linear example") {
  const auto h = bihomogenize(make_fixture("pure", {{"m", rational(1)}}));
  CHECK(h.vars() == 2);
  CHECK(h.coeff({1, 0}, {0, 1}) == gauss_rational(1));  // z tbar
  CHECK(h.coeff({0, 1}, {1, 0}) == gauss_rational(1));  // t zbar
  CHECK(h.term_count() == 2);
}

TEST_CASE("bihomogenize: round-trip and scaling on the quadratic family") {
  const auto r = make_fixture("resq", {{"alpha", rational(1)}});
  const auto h = bihomogenize(r);
  const auto w = is_bihomogeneous(h);
  CHECK(w.verdict);
  CHECK(w.m == 2);
  CHECK(dehomogenize(h, 1) == r);
  // |t|^(2m) r(z/t) against the bihomogenization at random points
  std::mt19937_64 rng(67);
  for (int t = 0; t < 20; ++t) {
    const auto zt = random_point(rng, 2);
    if (std::abs(zt[1]) < 0.2) continue;
    const std::vector<cplx> z = {zt[0] / zt[1]};
    const double expect = std::pow(std::norm(zt[1]), w.m) * r.eval_real(z);
    CHECK(h.eval_real(zt) == doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("bihomogenize: bihomogeneous input only gains a zero slot") {
  const auto r = make_fixture("modgap");
  const auto h = bihomogenize(r);
  for (const auto& [k, v] : h.terms()) {
    CHECK(k.first[2] == 0);
    CHECK(k.second[2] == 0);
  }
  CHECK(dehomogenize(h, 2) == r);
}

TEST_CASE("dehomogenize: quartic family against direct expansion") {
  for (const rational lambda : {rational(7), rational(0)}) {
    const auto r = make_fixture("ball4", {{"lambda", lambda}});
    const auto d = dehomogenize(r, 1);
    // oracle: (1+|z|^2)^4 - lambda |z|^4 has binomial diagonal (1,4,6,4,1)
    // with 6 - lambda at |z|^4
    CHECK(d.vars() == 1);
    const long binom[5] = {1, 4, 6, 4, 1};
    for (int k = 0; k <= 4; ++k) {
      rational expect(binom[k]);
      if (k == 2) expect -= lambda;
      CHECK(d.coeff({k}, {k}) == gauss_rational(expect));
    }
    CHECK(d.term_count() == (lambda == rational(6) ? 4 : 5));
  }
}

TEST_CASE("dehomogenize: constant and round-trips") {
  const auto c = hermitian_poly::constant(2, gauss_rational(rational(3, 7)));
  CHECK(dehomogenize(c, 0) == hermitian_poly::constant(1, gauss_rational(rational(3, 7))));
  for (const auto& r : fixture_battery()) {
    if (r.is_zero()) continue;
    CHECK(dehomogenize(bihomogenize(r), r.vars()) == r);
  }
}

TEST_CASE("reflect: affine quartic example") {
  const auto r = make_fixture("re4one");
  const auto refl = reflect(r);
  // expected: |z|^8 + (z+zbar)^4 + |z|^6
  hermitian_poly expect(1);
  {
    hermitian_poly zz(1);
    zz.add_term({1}, {0}, gauss_rational(1));
    zz.add_term({0}, {1}, gauss_rational(1));
    expect = zz.pow(4);
    expect.add_term({4}, {4}, gauss_rational(1));
    expect.add_term({3}, {3}, gauss_rational(1));
  }
  CHECK(refl == expect);
}

TEST_CASE("reflect: pure terms are fixed, pure moduli collapse to 1") {
  for (long m : {1L, 2L, 5L}) {
    const auto r = make_fixture("pure", {{"m", rational(m)}});
    CHECK(reflect(r) == r);
  }
  for (long k : {1L, 2L, 4L}) {
    const auto r = make_fixture("modpow", {{"k", rational(k)}});
    CHECK(reflect(r) == hermitian_poly::constant(1, gauss_rational(1)));
  }
}

TEST_CASE("reflect agrees with bihomogenizing and pinning the first slot") {
  // r*(z) = (Hr)(1, z): substitute 1 into the original variable and read the
  // homogenizing variable as the new one. Exact identity.
  for (const auto& r : {make_fixture("re4one"), make_fixture("re4zero"),
                        make_fixture("pure", {{"m", rational(3)}}),
                        make_fixture("modpow", {{"k", rational(2)}})}) {
    CHECK(reflect(r) == dehomogenize(bihomogenize(r), 0));
  }
}

TEST_CASE("reflect: errors") {
  CHECK_THROWS_AS(reflect(make_fixture("modgap")), malformed_input);
  CHECK_THROWS_AS(reflect(hermitian_poly(1)), malformed_input);
  CHECK_THROWS_AS(bihomogenize(hermitian_poly(1)), malformed_input);
}

TEST_CASE("property: squared-norm class is preserved by bihomogenization") {
  auto battery = fixture_battery();
  battery.push_back(make_fixture("ball4", {{"lambda", rational(6)}}));
  battery.push_back(norm_sq_poly(2));
  for (const auto& r : battery) {
    if (r.is_zero()) continue;
    CHECK(is_squared_norm(r) == is_squared_norm(bihomogenize(r)));
  }
}

TEST_CASE("reflection is not additive") {
  const auto r = make_fixture("pure", {{"m", rational(2)}});
  const auto s = make_fixture("pure", {{"m", rational(3)}});
  const auto lhs = reflect(r + s);
  const auto sum_of_reflections = reflect(r) + reflect(s);
  CHECK_FALSE(lhs == sum_of_reflections);
  // expansion: |z|^2 (z^2 + zbar^2) + z^3 + zbar^3
  hermitian_poly expect(1);
  expect.add_term({3}, {1}, gauss_rational(1));
  expect.add_term({1}, {3}, gauss_rational(1));
  expect.add_term({3}, {0}, gauss_rational(1));
  expect.add_term({0}, {3}, gauss_rational(1));
  CHECK(lhs == expect);
}

TEST_CASE("double reflection on the fixture families") {
  // fixed when the constant term anchors the degree
  const auto r = make_fixture("re4one");
  CHECK(reflect(reflect(r)) == r);
  const auto p = make_fixture("pure", {{"m", rational(4)}});
  CHECK(reflect(reflect(p)) == p);
  // collapses when it does not: |z|^(2k) reflects to 1, which stays 1
  const auto mod = make_fixture("modpow", {{"k", rational(2)}});
  CHECK_FALSE(reflect(reflect(mod)) == mod);
}
