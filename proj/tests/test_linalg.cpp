#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qserre/linalg.hpp"

using namespace qserre;

namespace {

bool is_in_kernel(const Matrix& m, const Vec& x) {
  for (size_t i = 0; i < m.rows; ++i) {
    RatF acc;
    for (size_t j = 0; j < m.cols; ++j) acc += m[i][j] * x[j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

Matrix random_matrix(std::mt19937_64& rng, size_t rows, size_t cols) {
  std::uniform_int_distribution<int> dv(-4, 4);
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      switch (rng() % 4) {
        case 0: m[i][j] = RatF(dv(rng)); break;
        case 1: m[i][j] = RatF::rs(static_cast<int>(rng() % 3) - 1, static_cast<int>(rng() % 3) - 1); break;
        case 2: m[i][j] = RatF(dv(rng)) * RatF::r() + RatF(dv(rng)); break;
        default: m[i][j] = RatF{}; break;
      }
    }
  return m;
}

}  // namespace

TEST_CASE("rank of hand matrices") {
  Matrix m(3, 3);
  m[0] = {RatF(1), RatF(2), RatF(3)};
  m[1] = {RatF(2), RatF(4), RatF(6)};
  m[2] = {RatF(0), RatF(1), RatF(1)};
  REQUIRE(rank(m) == 2);

  Matrix id(3, 3);
  for (int i = 0; i < 3; ++i) id[i][i] = RatF(1);
  REQUIRE(rank(id) == 3);

  Matrix z(2, 5);
  REQUIRE(rank(z) == 0);
}

TEST_CASE("rank with rational-function entries") {
  const RatF r = RatF::r(), s = RatF::s();
  Matrix m(2, 2);
  m[0] = {r, s};
  m[1] = {r * r, r * s};  // second row = r * first row
  REQUIRE(rank(m) == 1);
  m[1][1] = r * s + RatF(1);
  REQUIRE(rank(m) == 2);
}

TEST_CASE("nullspace") {
  Matrix m(1, 3);
  m[0] = {RatF(1), RatF::r(), RatF::s()};
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) REQUIRE(is_in_kernel(m, v));
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(20240905);
  for (int iter = 0; iter < 30; ++iter) {
    const size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const Matrix m = random_matrix(rng, rows, cols);
    const auto ns = nullspace(m);
    REQUIRE(rank(m) + ns.size() == cols);
    for (const auto& v : ns) REQUIRE(is_in_kernel(m, v));
  }
}

TEST_CASE("solve") {
  SECTION("consistent with free variables") {
    Matrix m(2, 3);
    m[0] = {RatF(1), RatF(1), RatF(0)};
    m[1] = {RatF(0), RatF::r(), RatF(1)};
    const Vec b = {RatF(2), RatF::s()};
    const auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    REQUIRE(sol->homogeneous.size() == 1);
    for (size_t i = 0; i < m.rows; ++i) {
      RatF acc;
      for (size_t j = 0; j < m.cols; ++j) acc += m[i][j] * sol->particular[j];
      REQUIRE(acc == b[i]);
    }
  }
  SECTION("inconsistent") {
    Matrix m(2, 1);
    m[0] = {RatF(1)};
    m[1] = {RatF(1)};
    REQUIRE_FALSE(solve(m, {RatF(1), RatF(2)}).has_value());
  }
  SECTION("random consistent systems") {
    std::mt19937_64 rng(20240906);
    for (int iter = 0; iter < 25; ++iter) {
      const size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
      const Matrix m = random_matrix(rng, rows, cols);
      Vec x0(cols);
      for (auto& v : x0) v = RatF(static_cast<long>(rng() % 7) - 3);
      Vec b(rows);
      for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) b[i] += m[i][j] * x0[j];
      const auto sol = solve(m, b);
      REQUIRE(sol.has_value());
      for (size_t i = 0; i < rows; ++i) {
        RatF acc;
        for (size_t j = 0; j < cols; ++j) acc += m[i][j] * sol->particular[j];
        REQUIRE(acc == b[i]);
      }
    }
  }
}
