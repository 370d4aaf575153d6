#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace slc {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after normalisation). Throws ParseError.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integral(const Rational& value);
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// Dense square matrix of integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const { return n_; }

  long& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  long operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  RationalMatrix to_rational() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<long> data_;
};

}  // namespace slc
