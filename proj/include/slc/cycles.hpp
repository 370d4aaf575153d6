#pragma once

#include <map>
#include <string>
#include <vector>

#include "slc/arith_graph.hpp"

namespace slc {

/// Effective integral cycle sum a_i E_i on an exceptional graph. Coefficients
/// are stored in the vertex order of the graph the cycle was computed on.
class LatticeCycle {
 public:
  LatticeCycle() = default;
  LatticeCycle(std::vector<std::string> ids, std::vector<long> coefficients);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<long>& coefficients() const { return coefficients_; }
  long coefficient(std::string_view id) const;
  bool is_zero() const;

  QDivisor to_divisor() const;
  std::vector<Rational> to_rational() const;

  /// "2E", "E' + E'' + 2E1", "0".
  std::string to_string() const;

  friend bool operator==(const LatticeCycle&, const LatticeCycle&) = default;

 private:
  std::vector<std::string> ids_;
  std::vector<long> coefficients_;
};

/// Hard cap on any single coefficient during the increment iterations.
inline constexpr long kCycleCoefficientCap = 1'000'000;

/// Minimal nonzero integral Z with (Z + D).E_i <= 0 for every vertex, where
/// D.E_i is the number of boundary marks on E_i. Throws Disconnected,
/// NotNegativeDefinite, NonTermination.
LatticeCycle semi_numerical_cycle(const ExceptionalGraph& g);

/// Classical fundamental cycle of an unmarked graph: minimal nonzero Z with
/// Z.E_i <= 0. A marked graph is a ValidationError.
LatticeCycle fundamental_cycle(const ExceptionalGraph& g);

/// Exceptional correction of the hat transform of a curve B meeting E_i with
/// strict_incidence[i]: the minimal effective integral G with
/// (B + G).E_i <= 0 for all i.
LatticeCycle hat_transform(const ExceptionalGraph& g, const std::map<std::string, long>& strict_incidence);

/// (Z + offset).E_i for every vertex, with offset.E_i given directly.
std::vector<Rational> intersections(const ExceptionalGraph& g, const std::vector<Rational>& z,
                                    const std::vector<Rational>& offset);

}  // namespace slc
