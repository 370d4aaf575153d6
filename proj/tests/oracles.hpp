#pragma once

// Independent brute-force references used only by the tests. None of these
// call into the elimination or iteration code they are checked against.

#include <optional>
#include <random>
#include <vector>

#include "slc/arith_graph.hpp"

namespace oracle {

using slc::ExceptionalGraph;
using slc::Rational;

/// Exact characteristic polynomial coefficients, lowest degree first.
std::vector<Rational> characteristic_polynomial(const slc::RationalMatrix& m);

/// Negative definiteness of a symmetric matrix by Sturm root counting on
/// the characteristic polynomial.
bool negative_definite_sturm(const slc::RationalMatrix& m);

/// Tridiagonal recursion for the determinant of a (-2)-chain of length n.
long chain_determinant(int n);

/// Cofactor expansion determinant.
Rational cofactor_determinant(const slc::RationalMatrix& m);

/// Minimal integral solution of (Z + offset).E_i <= 0 with coefficients in
/// [0, box], or nullopt if no solution lies in the box. With require_nonzero
/// the zero vector is excluded. Also checks that the minimum is a
/// componentwise minimum of all solutions.
std::optional<std::vector<long>> minimal_cycle(const ExceptionalGraph& g, const std::vector<long>& offset,
                                               bool require_nonzero, long box = 8);

/// Random connected graph with up to max_vertices vertices, self
/// intersections in [lo, hi] and at most max_marks marks in total.
ExceptionalGraph random_graph(std::mt19937& rng, int max_vertices, int lo, int hi, int max_marks);

/// Hilbert function of a degree-d hypersurface in weighted projective space.
long weighted_hypersurface_dim(const std::vector<int>& weights, int degree, int k);

}  // namespace oracle
