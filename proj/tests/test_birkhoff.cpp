#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "tschirn/birkhoff.hpp"
#include "tschirn/errors.hpp"
#include "tschirn/polymat.hpp"

using namespace tschirn;

namespace {

long draw(std::mt19937_64& gen, long lo, long hi) {
  return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
}

LaurentMatrix diag(const std::vector<int>& exps) {
  LaurentMatrix m(exps.size(), exps.size());
  for (size_t i = 0; i < exps.size(); ++i)
    m.at(i, i) = LaurentPoly::monomial(Rat(1), exps[i]);
  return m;
}

// Unimodular over Q[x]: product of constant scalings and polynomial shears.
LaurentMatrix random_poly_unimodular(std::mt19937_64& gen, size_t n) {
  LaurentMatrix m = LaurentMatrix::identity(n);
  const int steps = static_cast<int>(draw(gen, 2, 5));
  for (int s = 0; s < steps; ++s) {
    LaurentMatrix el = LaurentMatrix::identity(n);
    const size_t i = static_cast<size_t>(draw(gen, 0, static_cast<long>(n) - 1));
    size_t j = static_cast<size_t>(draw(gen, 0, static_cast<long>(n) - 1));
    if (i == j) {
      el.at(i, i) = LaurentPoly(Rat(draw(gen, 1, 3)));
    } else {
      el.at(i, j) = LaurentPoly::monomial(Rat(draw(gen, -3, 3)),
                                          static_cast<int>(draw(gen, 0, 3)));
    }
    m = m * el;
  }
  return m;
}

// Unimodular over Q[1/x]: same construction with nonpositive exponents.
LaurentMatrix random_inv_unimodular(std::mt19937_64& gen, size_t n) {
  LaurentMatrix m = LaurentMatrix::identity(n);
  const int steps = static_cast<int>(draw(gen, 2, 5));
  for (int s = 0; s < steps; ++s) {
    LaurentMatrix el = LaurentMatrix::identity(n);
    const size_t i = static_cast<size_t>(draw(gen, 0, static_cast<long>(n) - 1));
    size_t j = static_cast<size_t>(draw(gen, 0, static_cast<long>(n) - 1));
    if (i == j) {
      el.at(i, i) = LaurentPoly(Rat(draw(gen, 1, 3)));
    } else {
      el.at(i, j) = LaurentPoly::monomial(Rat(draw(gen, -3, 3)),
                                          -static_cast<int>(draw(gen, 0, 3)));
    }
    m = m * el;
  }
  return m;
}

// Exact refactorization check P * diag(x^d) * Q == T, plus the unimodularity
// contracts on both factors.
void check_factorization(const LaurentMatrix& t, const BirkhoffFactorization& f) {
  const size_t n = t.rows();
  REQUIRE(f.exponents.size() == n);
  CHECK(std::is_sorted(f.exponents.begin(), f.exponents.end(), std::greater<int>()));

  LaurentMatrix middle(n, n);
  for (size_t i = 0; i < n; ++i)
    middle.at(i, i) = LaurentPoly::monomial(Rat(1), f.exponents[i]);
  CHECK(to_laurent(f.p, 0) * middle * f.q == t);

  const UniPoly dp = determinant(f.p);
  REQUIRE(!dp.is_zero());
  CHECK(dp.degree() == 0);

  const LaurentPoly dq = determinant(f.q);
  REQUIRE(!dq.is_zero());
  CHECK(dq.is_monomial());
  if (!f.q.rows()) return;
  // Entries of q live in nonpositive exponents.
  const auto qmax = f.q.max_exp();
  REQUIRE(qmax.has_value());
  CHECK(*qmax <= 0);
}

}  // namespace

TEST_CASE("factorize: worked examples") {
  // Already-factored diagonal.
  const LaurentMatrix d = diag({2, -1});
  const auto fd = birkhoff_factorize(d);
  check_factorization(d, fd);
  CHECK(fd.exponents == std::vector<int>{2, -1});
  CHECK(fd.p.is_identity());
  CHECK(fd.q == LaurentMatrix::identity(2));

  // Already unimodular over Q[1/x].
  LaurentMatrix shear = LaurentMatrix::identity(2);
  shear.at(0, 1) = LaurentPoly::monomial(Rat(1), -1);
  const auto fs = birkhoff_factorize(shear);
  check_factorization(shear, fs);
  CHECK(fs.exponents == std::vector<int>{0, 0});
  CHECK(fs.p.is_identity());
  CHECK(fs.q == shear);

  // Conjugated diagonal keeps its type by construction.
  std::mt19937_64 gen(31);
  const LaurentMatrix u = random_poly_unimodular(gen, 3);
  const LaurentMatrix v = random_inv_unimodular(gen, 3);
  const LaurentMatrix t = u * diag({3, 0, -2}) * v;
  const auto ft = birkhoff_factorize(t);
  check_factorization(t, ft);
  CHECK(ft.exponents == std::vector<int>{3, 0, -2});

  // Non-unit determinant is rejected.
  LaurentMatrix bad(2, 2);
  bad.at(0, 0) = LaurentPoly(Rat(1)) + LaurentPoly::monomial(Rat(1), 1);
  bad.at(1, 1) = LaurentPoly(Rat(1));
  CHECK_THROWS_AS(birkhoff_factorize(bad), std::invalid_argument);
  LaurentMatrix zero(2, 2);
  CHECK_THROWS_AS(birkhoff_factorize(zero), std::invalid_argument);
}

TEST_CASE("splitting type: worked examples and the orientation pin") {
  const int e = 3, m = 4;
  std::vector<int> exps;
  for (int k = 0; k < m; ++k) exps.push_back(-k * e);
  CHECK(splitting_type(diag(exps)) == SplittingType::of({0, -3, -6, -9}));

  // Permutation matrix: constant invertible, all-zero type.
  LaurentMatrix perm(3, 3);
  perm.at(0, 1) = LaurentPoly(Rat(1));
  perm.at(1, 2) = LaurentPoly(Rat(1));
  perm.at(2, 0) = LaurentPoly(Rat(1));
  CHECK(splitting_type(perm) == SplittingType::of({0, 0, 0}));

  // Orientation convention: diag(x) is the degree-one bundle, two sections.
  const LaurentMatrix ox1 = diag({1});
  CHECK(splitting_type(ox1) == SplittingType::of({1}));
  CHECK(cohomology_dims(splitting_type(ox1), 0).h0 == 2);
  CHECK(h0_oracle(ox1, 0) == 2);
}

TEST_CASE("cohomology dimensions of split bundles") {
  CHECK(cohomology_dims(SplittingType::of({0}), 0) == CohomologyDims{1, 0});
  CHECK(cohomology_dims(SplittingType::of({0, -1, -2, -3}), 0) == CohomologyDims{1, 3});
  CHECK(cohomology_dims(SplittingType::of({0, -2}), 1) == CohomologyDims{2, 0});
  // Serre-style sanity: h0 - h1 = sum(d_i) + rank for every type and twist.
  std::mt19937_64 gen(32);
  for (int i = 0; i < 100; ++i) {
    const size_t n = static_cast<size_t>(draw(gen, 1, 5));
    std::vector<int> d;
    for (size_t k = 0; k < n; ++k) d.push_back(static_cast<int>(draw(gen, -6, 6)));
    const SplittingType s = SplittingType::of(d);
    const int k = static_cast<int>(draw(gen, -4, 4));
    const auto c = cohomology_dims(s, k);
    CHECK(c.h0 - c.h1 ==
          s.sum() + static_cast<long>(n) * (k + 1));
    CHECK(c.h0 >= 0);
    CHECK(c.h1 >= 0);
  }
}

TEST_CASE("h0 oracle: worked examples and window guard") {
  CHECK(h0_oracle(LaurentMatrix::identity(2), 0) == 2);
  CHECK(h0_oracle(diag({1, -1}), 0) == 2);
  CHECK(h0_oracle(diag({-1, -1}), 0) == 0);
  CHECK_THROWS_AS(h0_oracle(diag({1, -1}), 100), std::invalid_argument);
}

TEST_CASE("random battery: refactorization, invariance, determinant exponent, oracle") {
  std::mt19937_64 gen(33);
  for (int i = 0; i < 60; ++i) {
    const size_t n = static_cast<size_t>(draw(gen, 2, 4));
    std::vector<int> planted;
    for (size_t k = 0; k < n; ++k) planted.push_back(static_cast<int>(draw(gen, -5, 5)));
    const LaurentMatrix u = random_poly_unimodular(gen, n);
    const LaurentMatrix v = random_inv_unimodular(gen, n);
    const LaurentMatrix t = u * diag(planted) * v;

    const auto f = birkhoff_factorize(t);
    check_factorization(t, f);

    // The planted multiset is recovered.
    std::sort(planted.begin(), planted.end(), std::greater<int>());
    CHECK(f.exponents == planted);

    // Sum of exponents equals the x-exponent of det(t).
    const LaurentPoly dt = determinant(t);
    REQUIRE(dt.is_monomial());
    long sum = 0;
    for (int dexp : f.exponents) sum += dexp;
    CHECK(sum == dt.min_exp());

    // Invariance under a fresh unimodular perturbation on both sides.
    const LaurentMatrix t2 = random_poly_unimodular(gen, n) * t * random_inv_unimodular(gen, n);
    CHECK(splitting_type(t2) == f.splitting());

    // Anti-circularity: the membership-system oracle agrees with the
    // cohomology of the extracted type on the whole window.
    for (int k = -3; k <= 3; ++k)
      CHECK(h0_oracle(t, k) == cohomology_dims(f.splitting(), k).h0);
  }
}
