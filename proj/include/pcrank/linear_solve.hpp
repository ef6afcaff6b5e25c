#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "pcrank/matrix.hpp"
#include "pcrank/rational.hpp"

namespace pcrank {

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves A x = b exactly. Each row of [A | b] is scaled to integers, the
/// system is reduced with fraction-free (Bareiss) elimination over mpz, and
/// the triangular system is back-substituted in rationals.
/// Throws SingularSystem when A is singular.
std::vector<Rational> solve_exact(const Matrix<Rational>& a, std::span<const Rational> b);

}  // namespace pcrank
