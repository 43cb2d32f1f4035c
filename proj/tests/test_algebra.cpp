#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hermicert/io.hpp"
#include "test_support.hpp"

using namespace hermicert;
using namespace hermicert::testing;

namespace {

real_poly rp(std::size_t n, std::initializer_list<std::pair<std::vector<int>, rational>> terms) {
  real_poly p(n);
  for (const auto& [e, c] : terms) p.add_term(multi_index(e), c);
  return p;
}

}  // namespace

TEST_CASE("from_real: modulus identity") {
  // x^2 + y^2 -> |z|^2
  const auto r = from_real(rp(2, {{{2, 0}, 1}, {{0, 2}, 1}}), 1);
  CHECK(r.term_count() == 1);
  CHECK(r.coeff({1}, {1}) == gauss_rational(1));
}

TEST_CASE("from_real: real part") {
  // 2x -> z + zbar
  const auto r = from_real(rp(2, {{{1, 0}, 2}}), 1);
  CHECK(r.coeff({1}, {0}) == gauss_rational(1));
  CHECK(r.coeff({0}, {1}) == gauss_rational(1));
  CHECK(r.term_count() == 2);
}

TEST_CASE("from_real: quadratic family matches the direct construction") {
  // (1+4a)x^2 + y^2 -> a z^2 + (2a+1)|z|^2 + a zbar^2, here a = 1
  const auto r = from_real(rp(2, {{{2, 0}, 5}, {{0, 2}, 1}}), 1);
  CHECK(r == make_fixture("resq", {{"alpha", rational(1)}}));
  CHECK(r.coeff({2}, {0}) == gauss_rational(1));
  CHECK(r.coeff({1}, {1}) == gauss_rational(3));
}

TEST_CASE("from_real: odd variable count is malformed") {
  CHECK_THROWS_AS(from_real(rp(3, {{{1, 0, 0}, 1}}), 1), malformed_input);
}

TEST_CASE("from_real: evaluation on the real slice is reproduced exactly") {
  std::mt19937_64 rng(11);
  const real_poly rho =
      rp(2, {{{2, 1}, rational(3, 7)}, {{0, 2}, rational(-2, 5)}, {{1, 0}, rational(1, 3)}});
  const auto r = from_real(rho, 1);
  std::uniform_int_distribution<int> num(-6, 6);
  for (int t = 0; t < 25; ++t) {
    rational x(num(rng), 4), y(num(rng), 4);
    x.canonicalize();
    y.canonicalize();
    // z = x + iy on the diagonal slice
    const std::vector<gauss_rational> z = {gauss_rational(x, y)};
    const gauss_rational val = r.eval_exact(z, z);
    const rational expect = rho.eval_exact(std::vector<rational>{x, y});
    CHECK(val.is_real());
    CHECK(val.re() == expect);
  }
}

TEST_CASE("hermitian check: examples") {
  CHECK(make_fixture("diagquartic", {{"lambda", rational(5)}}).is_hermitian());
  hermitian_poly bad(1);
  bad.add_term({2}, {0}, gauss_rational(1));  // z^2 alone is not real-valued
  CHECK_FALSE(bad.is_hermitian());
  hermitian_poly pair(1);  // i z - i zbar = -2 Im-part flip: real-valued
  pair.add_term({1}, {0}, gauss_rational::i());
  pair.add_term({0}, {1}, -gauss_rational::i());
  CHECK(pair.is_hermitian());
}

TEST_CASE("hermitian check cross-validates against real-valuedness") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto r = random_hermitian(rng, 2, 3, 6);
    REQUIRE(r.is_hermitian());
    for (int s = 0; s < 10; ++s) {
      const auto z = random_point(rng, 2);
      const cplx v = r.eval_diag(z);
      CHECK(std::abs(v.imag()) <= 1e-12 * (1.0 + std::abs(v)));
    }
  }
}

TEST_CASE("evaluate: diagonal quartic at the unit point") {
  const auto r = make_fixture("diagquartic", {{"lambda", rational(0)}});
  const std::vector<cplx> p = {cplx(1, 0), cplx(1, 0)};
  CHECK(r.eval(p, p).real() == doctest::Approx(2.0));
}

TEST_CASE("evaluate: boundary kernel vanishes at the polarized pair") {
  const auto r = make_fixture("pskernel", {{"c", rational(1, 10)}});
  const std::vector<gauss_rational> p = {gauss_rational(1), gauss_rational(rational(1, 10))};
  const std::vector<gauss_rational> q = {gauss_rational(-1), gauss_rational(rational(1, 10))};
  CHECK(r.eval_exact(p, q).is_zero());
  CHECK(r.eval_exact(q, p).is_zero());
  CHECK(r.eval_exact(p, p).is_zero());
  CHECK(r.eval_exact(q, q).is_zero());
}

TEST_CASE("evaluate: polarized symmetry at random points") {
  std::mt19937_64 rng(7);
  const auto r = random_hermitian(rng, 2, 3, 8);
  for (int t = 0; t < 20; ++t) {
    const auto z = random_point(rng, 2), w = random_point(rng, 2);
    const cplx a = r.eval(z, w), b = std::conj(r.eval(w, z));
    CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("arithmetic: square of the ball form") {
  const auto sq = norm_sq_poly(2).pow(2);
  CHECK(sq.coeff({2, 0}, {2, 0}) == gauss_rational(1));
  CHECK(sq.coeff({1, 1}, {1, 1}) == gauss_rational(2));
  CHECK(sq.coeff({0, 2}, {0, 2}) == gauss_rational(1));
  CHECK(sq.term_count() == 3);
}

TEST_CASE("arithmetic: quartic family center coefficient is 6 - lambda") {
  for (const rational lambda : {rational(6), rational(7), rational(61, 10)}) {
    const auto r = make_fixture("ball4", {{"lambda", lambda}});
    CHECK(r.coeff({2, 2}, {2, 2}) == gauss_rational(rational(6) - lambda));
  }
}

TEST_CASE("arithmetic: product of diagonal polynomials stays diagonal") {
  std::mt19937_64 rng(3);
  const auto a = make_fixture("ball4", {{"lambda", rational(7)}});
  const auto b = make_fixture("diagquartic", {{"lambda", rational(-1)}});
  CHECK(a.is_diagonal());
  CHECK((a * b).is_diagonal());
}

TEST_CASE("arithmetic: commutative and associative with identical maps") {
  std::mt19937_64 rng(17);
  const auto a = random_hermitian(rng, 2, 2, 5);
  const auto b = random_hermitian(rng, 2, 2, 5);
  const auto c = random_hermitian(rng, 2, 2, 5);
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("arithmetic: evaluation is additive and multiplicative") {
  std::mt19937_64 rng(23);
  const auto a = random_hermitian(rng, 2, 2, 5);
  const auto b = random_hermitian(rng, 2, 2, 5);
  const auto sum = a + b, prod = a * b;
  for (int t = 0; t < 20; ++t) {
    const auto z = random_point(rng, 2), w = random_point(rng, 2);
    const cplx av = a.eval(z, w), bv = b.eval(z, w);
    CHECK(std::abs(sum.eval(z, w) - (av + bv)) <= 1e-10 * (1.0 + std::abs(av + bv)));
    CHECK(std::abs(prod.eval(z, w) - av * bv) <= 1e-10 * (1.0 + std::abs(av * bv)));
  }
}

TEST_CASE("degree info") {
  const auto gap = make_fixture("resq", {{"alpha", rational(1)}});
  auto d = gap.degree_info();
  CHECK(d.deg_z == 2);
  CHECK(d.total_degree == 2);
  CHECK_FALSE(d.squared_norm_parity);

  d = make_fixture("modpow", {{"k", rational(3)}}).degree_info();
  CHECK(d.deg_z == 3);
  CHECK(d.total_degree == 6);
  CHECK(d.squared_norm_parity);

  d = make_fixture("pure", {{"m", rational(3)}}).degree_info();
  CHECK(d.deg_z == 3);
  CHECK(d.total_degree == 3);
  CHECK_FALSE(d.squared_norm_parity);

  d = hermitian_poly(2).degree_info();
  CHECK(d.deg_z == 0);
  CHECK(d.total_degree == 0);
  CHECK(d.squared_norm_parity);
}

TEST_CASE("moment image of the two diagonal families") {
  const auto quartic = moment_image(make_fixture("diagquartic", {{"lambda", rational(5)}}));
  CHECK(quartic.coeff(multi_index{2, 0}) == rational(1));
  CHECK(quartic.coeff(multi_index{1, 1}) == rational(5));
  CHECK(quartic.coeff(multi_index{0, 2}) == rational(1));

  const auto ball = moment_image(make_fixture("ball4", {{"lambda", rational(9)}}));
  CHECK(ball.coeff(multi_index{4, 0}) == rational(1));
  CHECK(ball.coeff(multi_index{3, 1}) == rational(4));
  CHECK(ball.coeff(multi_index{2, 2}) == rational(-3));  // 6 - 9
}

TEST_CASE("moment image rejects non-diagonal input") {
  CHECK_THROWS_AS(moment_image(make_fixture("pure", {{"m", rational(1)}})), malformed_input);
}

TEST_CASE("moment image is multiplicative on diagonal input") {
  const auto a = make_fixture("diagquartic", {{"lambda", rational(-2)}});
  const auto b = make_fixture("ball4", {{"lambda", rational(3)}});
  const auto lhs = moment_image(a * b);
  const auto rhs = moment_image(a) * moment_image(b);
  CHECK(lhs.terms() == rhs.terms());
}

TEST_CASE("hpoly text round-trips bit-identically") {
  std::mt19937_64 rng(29);
  auto battery = fixture_battery();
  for (int t = 0; t < 5; ++t) battery.push_back(random_hermitian(rng, 2, 3, 6));
  for (const auto& r : battery) {
    std::istringstream in(hpoly_to_string(r));
    const auto back = read_hpoly(in);
    CHECK(back == r);
  }
}

TEST_CASE("hpoly reader symmetrizes a single triangle") {
  std::istringstream in("hpoly 1\nn 1\nterm 0/1 1/1 1 | 0\n");
  const auto r = read_hpoly(in);  // i*z given; mirror entry implied
  CHECK(r.coeff({1}, {0}) == gauss_rational::i());
  CHECK(r.coeff({0}, {1}) == -gauss_rational::i());
}

TEST_CASE("hpoly reader rejects conflicting duplicates") {
  std::istringstream in("hpoly 1\nn 1\nterm 1/1 0/1 1 | 0\nterm 2/1 0/1 0 | 1\n");
  CHECK_THROWS_AS(read_hpoly(in), malformed_input);
}

TEST_CASE("hpoly reader rejects a non-real diagonal entry") {
  std::istringstream in("hpoly 1\nn 1\nterm 1/1 1/1 1 | 1\n");
  CHECK_THROWS_AS(read_hpoly(in), malformed_input);
}

TEST_CASE("hpoly reader rejects malformed headers and exponents") {
  std::istringstream a("hpoly 2\nn 1\n");
  CHECK_THROWS_AS(read_hpoly(a), malformed_input);
  std::istringstream b("hpoly 1\nn 1\nterm 1/1 0/1 -1 | 1\n");
  CHECK_THROWS_AS(read_hpoly(b), malformed_input);
  std::istringstream c("hpoly 1\nn 1\nterm 0.5 0/1 1 | 1\n");
  CHECK_THROWS_AS(read_hpoly(c), malformed_input);
}
