#pragma once

#include <span>
#include <vector>

#include "slc/rational.hpp"

// Exact linear algebra over the integers and rationals. Elimination always
// takes the first usable pivot in index order so results are deterministic.
namespace slc::linalg {

/// Bareiss fraction-free determinant.
Integer determinant(const IntegerMatrix& m);

/// Pivots of Gaussian elimination without row exchanges. Pivot k equals the
/// ratio of the (k+1)-th and k-th leading principal minors. Stops after the
/// first zero pivot, so the result is shorter than m.size() iff some leading
/// principal minor vanishes.
std::vector<Rational> leading_pivots(const RationalMatrix& m);

/// Solves a * x = b. Rows are cleared of denominators first and the system is
/// reduced fraction-free; only back substitution divides. Throws
/// SingularSystem when a is singular.
std::vector<Rational> solve(const RationalMatrix& a, std::span<const Rational> b);

/// x^T m y.
Rational bilinear(const RationalMatrix& m, std::span<const Rational> x, std::span<const Rational> y);

}  // namespace slc::linalg
