#include "pcrank/linear_solve.hpp"

#include <utility>

namespace pcrank {

std::vector<Rational> solve_exact(const Matrix<Rational>& a, std::span<const Rational> b) {
  if (!a.is_square() || a.rows() != b.size()) throw std::invalid_argument("solve_exact: shape mismatch");
  const std::size_t n = a.rows();
  if (n == 0) return {};

  // Augmented integer matrix, one common denominator per row.
  Matrix<mpz_class> m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(i, j).get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b[i].get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j).get_num() * (scale / a(i, j).get_den());
    m(i, n) = b[i].get_num() * (scale / b[i].get_den());
  }

  mpz_class previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) throw SingularSystem("singular system");
    if (pivot != k) {
      for (std::size_t j = 0; j <= n; ++j) std::swap(m(k, j), m(pivot, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }

  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(m(ii, n));
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m(ii, j)) * x[j];
    x[ii] = acc / Rational(m(ii, ii));
    x[ii].canonicalize();
  }
  return x;
}

}  // namespace pcrank
