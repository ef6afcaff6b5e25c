#include <doctest.h>

#include <random>

#include "pcrank/linear_solve.hpp"

using namespace pcrank;

namespace {

// Cofactor expansion; fine for n <= 5.
Rational det(const Matrix<Rational>& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<Rational> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = a(i, j);
    const Rational term = a(0, c) * det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

std::vector<Rational> cramer(const Matrix<Rational>& a, const std::vector<Rational>& b) {
  const Rational d = det(a);
  std::vector<Rational> x(a.rows());
  for (std::size_t c = 0; c < a.rows(); ++c) {
    Matrix<Rational> ac = a;
    for (std::size_t i = 0; i < a.rows(); ++i) ac(i, c) = b[i];
    x[c] = det(ac) / d;
  }
  return x;
}

}  // namespace

TEST_SUITE_BEGIN("linear_solve");

TEST_CASE("small exact system") {
  Matrix<Rational> a{{2, 1}, {1, 3}};
  const std::vector<Rational> b{3, 5};
  const auto x = solve_exact(a, b);
  CHECK(x[0] == Rational(4, 5));
  CHECK(x[1] == Rational(7, 5));
}

TEST_CASE("zero pivot needs a row swap") {
  Matrix<Rational> a{{0, 1}, {1, 0}};
  const std::vector<Rational> b{7, Rational(-1, 3)};
  const auto x = solve_exact(a, b);
  CHECK(x[0] == Rational(-1, 3));
  CHECK(x[1] == 7);
}

TEST_CASE("singular systems throw") {
  Matrix<Rational> a{{1, 2}, {2, 4}};
  const std::vector<Rational> b{1, 2};
  CHECK_THROWS_AS(solve_exact(a, b), SingularSystem);
}

TEST_CASE("agrees with Cramer's rule on random rational systems") {
  std::mt19937_64 rng(314159);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix<Rational> a(n, n);
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
        a(i, j).canonicalize();
      }
      b[i] = Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6));
      b[i].canonicalize();
    }
    if (det(a) == 0) {
      CHECK_THROWS_AS(solve_exact(a, b), SingularSystem);
      continue;
    }
    CHECK(solve_exact(a, b) == cramer(a, b));
    ++solved;
  }
  CHECK(solved > 150);
}

TEST_SUITE_END();
