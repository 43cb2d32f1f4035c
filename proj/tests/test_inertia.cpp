#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace hermicert;
using namespace hermicert::testing;

TEST_CASE("signature: diagonal quartic at lambda = -1") {
  const auto r = make_fixture("diagquartic", {{"lambda", rational(-1)}});
  CHECK(signature(r) == signature_pair{2, 1});
  CHECK(rank_of(r) == 3);
}

TEST_CASE("signature: quadratic family against the dense eigenvalue oracle") {
  // alpha = 1: matrix [[0,0,1],[0,3,0],[1,0,0]] on the basis (1, z, z^2).
  const auto r = make_fixture("resq", {{"alpha", rational(1)}});
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  m(0, 2) = 1;
  m(1, 1) = 3;
  m(2, 0) = 1;
  const signature_pair expected = oracle_eigen_signature(m);
  CHECK(expected == signature_pair{2, 1});
  CHECK(signature(r) == expected);
}

TEST_CASE("signature: all-zero diagonal takes the hyperbolic block path") {
  // z^3 + zbar^3 on the basis (1, z^3): [[0,1],[1,0]] -> (1,1)
  CHECK(signature(make_fixture("pure", {{"m", rational(3)}})) == signature_pair{1, 1});
  // two independent hyperbolic pairs
  hermitian_poly r(2);
  r.add_term({2, 0}, {0, 0}, gauss_rational(1));
  r.add_term({0, 0}, {2, 0}, gauss_rational(1));
  r.add_term({0, 3}, {1, 0}, gauss_rational(rational(0), rational(2)));
  r.add_term({1, 0}, {0, 3}, gauss_rational(rational(0), rational(-2)));
  REQUIRE(r.is_hermitian());
  CHECK(signature(r) == signature_pair{2, 2});
}

TEST_CASE("signature: zero polynomial") {
  CHECK(signature(hermitian_poly(2)) == signature_pair{0, 0});
  CHECK(rank_of(hermitian_poly(2)) == 0);
}

TEST_CASE("signature: random inputs agree with the dense eigenvalue oracle") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 12; ++t) {
    const auto r = random_hermitian(rng, 2, 3, 5);
    const auto basis = r.support_monomials();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
    std::map<multi_index, int> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<int>(i);
    for (const auto& [k, v] : r.terms()) m(pos[k.first], pos[k.second]) = v.to_complex();
    // generic random matrices have well-separated spectra; tolerance coarse
    CHECK(signature(r) == oracle_eigen_signature(m, 1e-7 * (1.0 + m.norm())));
  }
}

TEST_CASE("rank: binomial kernel powers") {
  for (long d : {0L, 1L, 4L, 7L}) {
    CHECK(rank_of(make_fixture("onepluspow", {{"d", rational(d)}})) == d + 1);
  }
}

TEST_CASE("rank: squared norm with k independent components") {
  CHECK(rank_of(norm_sq_poly(3)) == 3);
  CHECK(rank_of(norm_sq_poly(5)) == 5);
}

TEST_CASE("squared norm boundary of the quartic family") {
  CHECK(is_squared_norm(make_fixture("ball4", {{"lambda", rational(6)}})));
  CHECK_FALSE(is_squared_norm(make_fixture("ball4", {{"lambda", rational(7)}})));
  CHECK_FALSE(is_squared_norm(make_fixture("ball4", {{"lambda", rational(61, 10)}})));
}

TEST_CASE("squared norm boundary of the product family") {
  CHECK(is_squared_norm(make_fixture("ballprod", {{"n", rational(3)}, {"a", rational(90)}})));
  CHECK_FALSE(is_squared_norm(make_fixture("ballprod", {{"n", rational(3)}, {"a", rational(91)}})));
  // two variables reproduce the quartic boundary
  CHECK(is_squared_norm(make_fixture("ballprod", {{"n", rational(2)}, {"a", rational(6)}})));
  CHECK_FALSE(is_squared_norm(make_fixture("ballprod", {{"n", rational(2)}, {"a", rational(7)}})));
}

TEST_CASE("squared norm: negatives are rejected") {
  const auto r = gauss_rational(-1) * modz_sq(1, 0);
  CHECK_FALSE(is_squared_norm(r));
}

TEST_CASE("decompose: single modulus") {
  const auto dec = decompose(modz_sq(1, 0));
  REQUIRE(dec.f.comps.size() == 1);
  CHECK(dec.g.comps.empty());
  // the single component is z up to phase
  std::vector<cplx> z = {cplx(0.3, -0.7)};
  CHECK(std::abs(dec.f.norm_sq_at(z) - std::norm(z[0])) < 1e-12);
}

TEST_CASE("decompose: counts follow the exact signature, residual small") {
  std::mt19937_64 rng(43);
  const auto r = make_fixture("diagquartic", {{"lambda", rational(-1)}});
  const auto dec = decompose(r);
  CHECK(dec.f.comps.size() == 2);
  CHECK(dec.g.comps.size() == 1);
  CHECK(decomposition_residual(r, dec, 100) <= 1e-9);
}

TEST_CASE("decompose: doubled pure terms give the classic two squares") {
  for (long k : {2L, 3L}) {
    const auto r = gauss_rational(2) * make_fixture("pure", {{"m", rational(k)}});
    const auto dec = decompose(r);
    REQUIRE(dec.f.comps.size() == 1);
    REQUIRE(dec.g.comps.size() == 1);
    std::mt19937_64 rng(57 + k);
    for (int t = 0; t < 20; ++t) {
      const auto z = random_point(rng, 1);
      const cplx zk = std::pow(z[0], static_cast<int>(k));
      CHECK(dec.f.norm_sq_at(z) == doctest::Approx(std::norm(zk + 1.0)).epsilon(1e-9));
      CHECK(dec.g.norm_sq_at(z) == doctest::Approx(std::norm(zk - 1.0)).epsilon(1e-9));
    }
  }
}

TEST_CASE("decompose: component coefficient vectors stay independent") {
  const auto r = make_fixture("ball4", {{"lambda", rational(9)}});
  const auto dec = decompose(r);
  const auto& comps = dec.f.comps;
  REQUIRE(comps.size() >= 2);
  // Gram matrix of coefficient vectors: eigenvectors make it near-diagonal.
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(comps.size(), comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = 0; j < comps.size(); ++j)
      for (const auto& [k, v] : comps[i].c) {
        auto it = comps[j].c.find(k);
        if (it != comps[j].c.end()) gram(i, j) += v * std::conj(it->second);
      }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  CHECK(es.eigenvalues().minCoeff() > 1e-9);
}

TEST_CASE("decompose: floating counts that cannot match the exact signature fail loudly") {
  // eigenvalues (~ -1e-40, ~1) straddle the drop tolerance: the exact
  // signature (1,1) is unreachable by the floating route
  hermitian_poly r(1);
  r.add_term({1}, {1}, gauss_rational(1));
  rational eps(1);
  for (int i = 0; i < 20; ++i) eps /= 10;
  r.add_term({1}, {0}, gauss_rational(eps));
  r.add_term({0}, {1}, gauss_rational(eps));
  REQUIRE(signature(r) == signature_pair{1, 1});
  CHECK_THROWS_AS(decompose(r), reconciliation_error);
}

TEST_CASE("property: signature is invariant under basis permutation") {
  std::mt19937_64 rng(47);
  const auto battery = fixture_battery();
  for (const auto& r : battery) {
    const auto reference = signature(r);
    auto basis = r.support_monomials();
    for (int p = 0; p < 20; ++p) {
      std::shuffle(basis.begin(), basis.end(), rng);
      CHECK(signature_on_basis(r, basis) == reference);
    }
  }
}

TEST_CASE("property: squared norms are closed under products") {
  std::vector<hermitian_poly> norms = {
      norm_sq_poly(2),
      make_fixture("ball4", {{"lambda", rational(6)}}),
      make_fixture("ball4", {{"lambda", rational(0)}}),
      norm_sq_poly(2).pow(3),
  };
  for (const auto& a : norms)
    for (const auto& b : norms) {
      REQUIRE(is_squared_norm(a));
      REQUIRE(is_squared_norm(b));
      CHECK(is_squared_norm(a * b));
    }
}

TEST_CASE("property: decompose-reconstruct residual over the battery") {
  for (const auto& r : fixture_battery()) {
    const auto dec = decompose(r);
    CHECK(decomposition_residual(r, dec, 100) <= 1e-9);
  }
}

TEST_CASE("property: rank-one products force rank-one factors") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 40; ++t) {
    // random rank-one squared moduli p = |h1|^2, q = |h2|^2
    exact_holo h1(2), h2(2);
    std::uniform_int_distribution<int> e(0, 2);
    for (int i = 0; i < 3; ++i) {
      multi_index a{e(rng), e(rng)};
      h1.add_term(a, random_gauss_rational(rng));
      multi_index b{e(rng), e(rng)};
      h2.add_term(b, random_gauss_rational(rng));
    }
    if (h1.c.empty() || h2.c.empty()) continue;
    const auto p = modulus_sq(h1), q = modulus_sq(h2);
    CHECK(rank_of(p * q) == 1);
  }
  // randomized search for a counterexample with rank(pq) = 1 and rank(p) > 1
  int counterexamples = 0;
  for (int t = 0; t < 60; ++t) {
    const auto p = random_hermitian(rng, 2, 2, 4);
    const auto q = random_hermitian(rng, 2, 2, 4);
    if (p.is_zero() || q.is_zero()) continue;
    if (rank_of(p * q) == 1 && (rank_of(p) > 1 || rank_of(q) > 1)) ++counterexamples;
  }
  CHECK(counterexamples == 0);
}
