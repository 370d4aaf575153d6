#include "slc/linalg.hpp"

#include <cassert>
#include <utility>

#include "slc/errors.hpp"

namespace slc::linalg {

namespace {

// In-place Bareiss forward elimination on an n x cols integer matrix. Returns
// false if the leading n x n block is singular.
bool bareiss(std::vector<std::vector<Integer>>& a, std::size_t n, int* sign) {
  const std::size_t cols = n == 0 ? 0 : a[0].size();
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

}  // namespace

Integer determinant(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  int sign = 1;
  if (!bareiss(a, n, &sign)) return 0;
  return sign * a[n - 1][n - 1];
}

std::vector<Rational> leading_pivots(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  std::vector<Rational> pivots;
  pivots.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) break;
    pivots.push_back(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational factor = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return pivots;
}

std::vector<Rational> solve(const RationalMatrix& a, std::span<const Rational> b) {
  const std::size_t n = a.size();
  assert(b.size() == n);
  // Scale each row by the lcm of its denominators so Bareiss runs over Z.
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Integer scale = b[i].get_den();
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j).get_num() * (scale / a(i, j).get_den());
    rows[i][n] = b[i].get_num() * (scale / b[i].get_den());
  }
  if (!bareiss(rows, n, nullptr)) throw SingularSystem();

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(rows[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(rows[i][j]) * x[j];
    x[i] = acc / Rational(rows[i][i]);
    x[i].canonicalize();
  }
  return x;
}

Rational bilinear(const RationalMatrix& m, std::span<const Rational> x, std::span<const Rational> y) {
  Rational acc = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < m.size(); ++j) row += m(i, j) * y[j];
    acc += x[i] * row;
  }
  return acc;
}

}  // namespace slc::linalg
