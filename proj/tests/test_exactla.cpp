#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hallcx/exactla/matrix.hpp"
#include "hallcx/exactla/subspaces.hpp"

using namespace hallcx;

namespace {

Matrix random_matrix(const PrimeField& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> dist(0, F.p() - 1);
  Matrix m(r, c);
  for (auto& e : m.data()) e = dist(rng);
  return m;
}

// all vectors of F_p^d, as integers in base p
Vec unrank(std::uint64_t x, std::size_t d, std::uint32_t p) {
  Vec v(d);
  for (auto& e : v) {
    e = static_cast<Elem>(x % p);
    x /= p;
  }
  return v;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("prime field axioms hold exhaustively") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField F(p);
    for (Elem a = 0; a < p; ++a) {
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      for (Elem b = 0; b < p; ++b) {
        CHECK(F.add(a, b) == (a + b) % p);
        CHECK(F.mul(a, b) == (a * b) % p);
        CHECK(F.sub(F.add(a, b), b) == a);
        for (Elem c = 0; c < p; ++c) CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
  CHECK_THROWS_AS(PrimeField(4), std::domain_error);
  CHECK_THROWS_AS(PrimeField(65537), std::domain_error);
  CHECK_THROWS_AS(PrimeField(3).inv(0), std::domain_error);
}

TEST_CASE("rank examples") {
  PrimeField F(2);
  CHECK(rank(F, Matrix::identity(2)) == 2);
  CHECK(rank(F, Matrix(2, 2)) == 0);
  CHECK(rank(F, Matrix(F, {{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("solve_kernel examples") {
  PrimeField F(2);
  CHECK(solve_kernel(F, Matrix(2, 2)).size() == 2);
  CHECK(solve_kernel(F, Matrix::identity(2)).empty());
  const auto k = solve_kernel(F, Matrix(F, {{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{1, 1});
  // brute force: exactly two vectors of F_2^2 are killed by [1 1]
  int killed = 0;
  for (std::uint64_t x = 0; x < 4; ++x) {
    const Vec v = unrank(x, 2, 2);
    if (multiply(F, Matrix(F, {{1, 1}}), v) == Vec{0}) ++killed;
  }
  CHECK(killed == 2);
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField F(p);
    for (int t = 0; t < 50; ++t) {
      const std::size_t r = rng() % 6, c = rng() % 6;
      const Matrix m = random_matrix(F, r, c, rng);
      const auto ker = solve_kernel(F, m);
      CHECK(rank(F, m) + ker.size() == c);
      for (const auto& v : ker) {
        const Vec img = multiply(F, m, v);
        CHECK(std::all_of(img.begin(), img.end(), [](Elem e) { return e == 0; }));
      }
      if (!ker.empty()) CHECK(rank(F, Matrix::from_columns(c, ker)) == ker.size());
    }
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(11);
  PrimeField F(3);
  for (int t = 0; t < 40; ++t) {
    const Matrix m = random_matrix(F, 4, 4, rng);
    auto inv = inverse(F, m);
    CHECK(inv.has_value() == (rank(F, m) == 4));
    if (inv) CHECK(multiply(F, m, *inv) == Matrix::identity(4));
    const Matrix b = multiply(F, m, random_matrix(F, 4, 2, rng));
    auto x = solve(F, m, b);
    REQUIRE(x.has_value());
    CHECK(multiply(F, m, *x) == b);
  }
}

TEST_CASE("subspace enumeration examples") {
  CHECK(enumerate_subspaces(PrimeField(2), 2, 1).size() == 3);
  CHECK(enumerate_subspaces(PrimeField(3), 2, 1).size() == 4);
  const auto zero = enumerate_subspaces(PrimeField(2), 3, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].rows() == 0);
  CHECK_THROWS_AS(enumerate_subspaces(PrimeField(2), 1, 2), std::domain_error);
}

TEST_CASE("subspace enumeration matches brute force over spanning sets") {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField F(p);
    for (std::size_t d = 0; d <= 3; ++d)
      for (std::size_t k = 0; k <= d; ++k) {
        // brute force: distinct rref forms of all k-tuples of vectors with rank k
        std::set<std::vector<Elem>> seen;
        const std::uint64_t nvec = ipow(p, d);
        const std::uint64_t tuples = ipow(nvec, k);
        for (std::uint64_t x = 0; x < tuples; ++x) {
          std::vector<Vec> rows;
          std::uint64_t y = x;
          for (std::size_t i = 0; i < k; ++i) {
            rows.push_back(unrank(y % nvec, d, p));
            y /= nvec;
          }
          Matrix m(k, d);
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
          if (rank(F, m) != k) continue;
          seen.insert(rref(F, m).reduced.data());
        }
        const auto listed = enumerate_subspaces(F, d, k);
        std::set<std::vector<Elem>> mine;
        for (const auto& s : listed) mine.insert(s.data());
        CHECK(mine.size() == listed.size());
        CHECK(mine == seen);
        CHECK(listed.size() == gaussian_binomial(p, d, k));
      }
  }
}
