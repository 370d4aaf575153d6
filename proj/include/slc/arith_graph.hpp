#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slc/rational.hpp"

namespace slc {

/// Formal Q-linear combination of named curve classes. Zero terms are never
/// stored, so equality is equality of divisors.
class QDivisor {
 public:
  QDivisor() = default;

  /// Adds coeff * id to the divisor.
  void add(const std::string& id, const Rational& coeff);

  Rational coefficient(const std::string& id) const;
  const std::map<std::string, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  QDivisor& operator+=(const QDivisor& other);
  QDivisor& operator-=(const QDivisor& other);
  QDivisor& operator*=(const Rational& scalar);

  friend QDivisor operator+(QDivisor a, const QDivisor& b) { return a += b; }
  friend QDivisor operator-(QDivisor a, const QDivisor& b) { return a -= b; }
  friend QDivisor operator*(const Rational& s, QDivisor a) { return a *= s; }
  friend bool operator==(const QDivisor&, const QDivisor&) = default;

  /// "2/3 E1 + 1/3 E2", "0" for the empty divisor.
  std::string to_string() const;

 private:
  std::map<std::string, Rational> terms_;
};

struct GraphVertex {
  std::string id;
  int self_intersection = -2;
  int genus = 0;
};

struct GraphEdge {
  std::string a;
  std::string b;
  int multiplicity = 1;
};

/// Weighted dual graph of exceptional curves over one point, with the number
/// of conductor/boundary branches attached to each vertex.
///
/// Construction validates: unique ids, self-intersection <= -1, genus >= 0,
/// edges between distinct known vertices with positive multiplicity, marks
/// non-negative. Parallel edges are merged by adding multiplicities. Labels
/// (coefficients of the different on a boundary edge) are only allowed on
/// marked vertices and must lie in [0, 1]. Violations throw ValidationError.
class ExceptionalGraph {
 public:
  ExceptionalGraph() = default;
  ExceptionalGraph(std::vector<GraphVertex> vertices, const std::vector<GraphEdge>& edges,
                   const std::map<std::string, int>& boundary_marks = {},
                   std::map<std::string, Rational> edge_labels = {});

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const GraphVertex& vertex(std::size_t i) const { return vertices_[i]; }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Like find(), but throws ValidationError for unknown ids.
  std::size_t index_of(std::string_view id) const;

  int multiplicity(std::size_t i, std::size_t j) const { return adjacency_[i * size() + j]; }
  int marks(std::size_t i) const { return marks_[i]; }
  int total_marks() const;
  int degree(std::size_t i) const;  // number of distinct neighbours
  const std::map<std::string, Rational>& edge_labels() const { return edge_labels_; }

  /// Edges as (i, j, multiplicity) with i < j, in index order.
  std::vector<GraphEdge> edges() const;

  bool is_connected() const;

  /// Same graph with vertex i moved to position order[i].
  ExceptionalGraph permuted(const std::vector<std::size_t>& order) const;

  friend bool operator==(const ExceptionalGraph& a, const ExceptionalGraph& b);

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<int> adjacency_;
  std::vector<int> marks_;
  std::map<std::string, Rational> edge_labels_;
};

enum class GraphType { C1, C2, Dh, LcNormal, CycleDegenerateCusp, Unclassified };

/// How the local graph is glued to its neighbours along the conductor.
enum class GluingContext { Local, Cyclic };

std::string_view to_string(GraphType type);

IntegerMatrix intersection_matrix(const ExceptionalGraph& g);

/// Exact test through the signs of the leading principal minors.
bool is_negative_definite(const RationalMatrix& m);
bool is_negative_definite(const ExceptionalGraph& g);

/// |det M|. Throws NotNegativeDefinite. The empty graph has determinant 1.
Integer graph_determinant(const ExceptionalGraph& g);

/// Exceptional part Gamma* of the numerical pullback of a curve meeting the
/// exceptional curves with the given (rational) incidence: M * Gamma* equals
/// minus the incidence vector. Vertices missing from the map have incidence 0.
QDivisor numerical_pullback(const ExceptionalGraph& g, const std::map<std::string, Rational>& incidence);

/// Codiscrepancy Lambda, defined by (K + D + Lambda) . E_i = 0 for all i with
/// K . E_i = -E_i^2 - 2 + 2 g_i and D . E_i the number of boundary marks.
QDivisor codiscrepancy(const ExceptionalGraph& g);

/// Recognises the non-normal catalogue (C1, C2, Dh) and the unmarked case.
/// With GluingContext::Cyclic a C2 (or empty) graph is reported as part of a
/// degenerate cusp.
GraphType classify_graph(const ExceptionalGraph& g, GluingContext context = GluingContext::Local);

/// Coefficient of the different at the boundary branch attached to
/// marked_vertex: 1 - 1/delta for C1, 1 for C2 and Dh.
Rational different_coefficient(const ExceptionalGraph& g, std::string_view marked_vertex);

/// Coefficient vector of d in vertex order; terms outside the graph throw
/// GraphMismatch.
std::vector<Rational> coefficients_on(const ExceptionalGraph& g, const QDivisor& d);
QDivisor divisor_on(const ExceptionalGraph& g, const std::vector<Rational>& coeffs);

}  // namespace slc
