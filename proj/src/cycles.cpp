#include "slc/cycles.hpp"

#include <algorithm>
#include <sstream>

#include "slc/errors.hpp"

namespace slc {

LatticeCycle::LatticeCycle(std::vector<std::string> ids, std::vector<long> coefficients)
    : ids_(std::move(ids)), coefficients_(std::move(coefficients)) {
  if (ids_.size() != coefficients_.size()) throw ValidationError("cycle ids and coefficients differ in length");
  for (long c : coefficients_) {
    if (c < 0) throw ValidationError("cycle coefficients must be non-negative");
  }
}

long LatticeCycle::coefficient(std::string_view id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) return coefficients_[i];
  }
  return 0;
}

bool LatticeCycle::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](long c) { return c == 0; });
}

QDivisor LatticeCycle::to_divisor() const {
  QDivisor d;
  for (std::size_t i = 0; i < ids_.size(); ++i) d.add(ids_[i], Rational(coefficients_[i]));
  return d;
}

std::vector<Rational> LatticeCycle::to_rational() const {
  std::vector<Rational> out;
  out.reserve(coefficients_.size());
  for (long c : coefficients_) out.emplace_back(c);
  return out;
}

std::string LatticeCycle::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    if (!first) out << " + ";
    if (coefficients_[i] != 1) out << coefficients_[i];
    out << ids_[i];
    first = false;
  }
  return first ? "0" : out.str();
}

std::vector<Rational> intersections(const ExceptionalGraph& g, const std::vector<Rational>& z,
                                    const std::vector<Rational>& offset) {
  const IntegerMatrix m = intersection_matrix(g);
  std::vector<Rational> out(offset);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i] += Rational(m(i, j)) * z[j];
  }
  return out;
}

namespace {

std::vector<std::string> ids_of(const ExceptionalGraph& g) {
  std::vector<std::string> ids;
  for (const auto& v : g.vertices()) ids.push_back(v.id);
  return ids;
}

// Laufer-style increment loop. products[i] tracks (Z + offset).E_i and is
// updated incrementally; the lowest violated index is bumped each round.
LatticeCycle increment_until_nonpositive(const ExceptionalGraph& g, std::vector<long> z,
                                         const std::vector<long>& offset) {
  const IntegerMatrix m = intersection_matrix(g);
  const std::size_t n = g.size();
  std::vector<long> products(offset);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) products[i] += m(i, j) * z[j];
  }
  for (;;) {
    std::size_t i = 0;
    while (i < n && products[i] <= 0) ++i;
    if (i == n) break;
    if (++z[i] > kCycleCoefficientCap) throw NonTermination("cycle coefficient exceeded the iteration cap");
    for (std::size_t k = 0; k < n; ++k) products[k] += m(k, i);
  }
  return LatticeCycle(ids_of(g), std::move(z));
}

void require_connected_definite(const ExceptionalGraph& g) {
  if (!g.is_connected()) throw Disconnected();
  if (!g.empty() && !is_negative_definite(g)) throw NotNegativeDefinite();
}

}  // namespace

LatticeCycle semi_numerical_cycle(const ExceptionalGraph& g) {
  require_connected_definite(g);
  std::vector<long> z(g.size(), 0);
  std::vector<long> marks(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) marks[i] = g.marks(i);
  // With boundary marks the inequalities already force Z > 0; otherwise seed
  // at the first vertex to exclude the zero cycle.
  if (g.total_marks() == 0 && !g.empty()) z[0] = 1;
  return increment_until_nonpositive(g, std::move(z), marks);
}

LatticeCycle fundamental_cycle(const ExceptionalGraph& g) {
  if (g.total_marks() != 0) throw ValidationError("fundamental cycle needs a graph without boundary marks");
  return semi_numerical_cycle(g);
}

LatticeCycle hat_transform(const ExceptionalGraph& g, const std::map<std::string, long>& strict_incidence) {
  std::vector<long> incidence(g.size(), 0);
  for (const auto& [id, value] : strict_incidence) {
    if (value < 0) throw ValidationError("negative incidence at \"" + id + "\"");
    incidence[g.index_of(id)] = value;
  }
  if (!g.empty() && !is_negative_definite(g)) throw NotNegativeDefinite();
  return increment_until_nonpositive(g, std::vector<long>(g.size(), 0), incidence);
}

}  // namespace slc
