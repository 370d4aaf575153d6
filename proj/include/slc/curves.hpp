#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slc/rational.hpp"

namespace slc {

struct CurveComponent {
  std::string id;
  int genus = 0;  // geometric genus
};

struct NodeBranch {
  std::string component;
  int count = 1;  // local branches of this component through the point
};

/// A mu-multi-node: mu smooth branches meeting like the coordinate axes.
struct MultiNode {
  std::string id;
  std::vector<NodeBranch> branches;

  int multiplicity() const;
};

/// Reduced curve whose only singularities are multi-nodes. Construction
/// rejects duplicate ids, negative genera, branches on unknown components
/// and nodes with fewer than two branches.
class MultiNodalCurve {
 public:
  MultiNodalCurve() = default;
  MultiNodalCurve(std::vector<CurveComponent> components, std::vector<MultiNode> nodes);

  const std::vector<CurveComponent>& components() const { return components_; }
  const std::vector<MultiNode>& nodes() const { return nodes_; }
  std::size_t index_of(std::string_view id) const;

  /// Induced curve on a subset of components, given as a bitmask over the
  /// component order. Nodes left with one branch become smooth points.
  MultiNodalCurve restricted(std::uint64_t mask) const;
  std::uint64_t mask_of(std::span<const std::string> ids) const;

  friend bool operator==(const MultiNodalCurve&, const MultiNodalCurve&);

 private:
  std::vector<CurveComponent> components_;
  std::vector<MultiNode> nodes_;
};

/// 1 - sum (1 - g_i): arithmetic genus of the normalisation.
int normalization_genus(const MultiNodalCurve& c);

/// p_a(B^nu) + sum over nodes of (mu_p(B) - 1).
int arithmetic_genus(const MultiNodalCurve& c);
/// Same on the subcurve spanned by subset. Throws EmptySubcurve.
int arithmetic_genus(const MultiNodalCurve& c, std::span<const std::string> subset);

enum class PointKind { NormalCrossing, Pinch };

/// Local genus correction at a double point of a curve on a semi-smooth
/// surface: 2n + d equals the total intersection.
struct LocalCorrection {
  PointKind kind;
  long n;
  long d;
};

LocalCorrection normal_crossing(long i1, long i2);
LocalCorrection pinch(long i);

/// chi(O_F) from chi of the normalisation minus the sum of the n_q.
long chi_via_semismooth_rr(long chi_normalization, std::span<const LocalCorrection> corrections);

inline constexpr std::size_t kDefaultSubcurveCap = 20;

struct Subcurve {
  std::uint64_t mask;
  MultiNodalCurve curve;
};

/// Lazily enumerates the 2^n - 1 non-empty subcurves in increasing mask order.
class SubcurveRange {
 public:
  class iterator {
   public:
    using value_type = Subcurve;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(const MultiNodalCurve* curve, std::uint64_t mask) : curve_(curve), mask_(mask) {}

    Subcurve operator*() const { return {mask_, curve_->restricted(mask_)}; }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    void operator++(int) { ++mask_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    const MultiNodalCurve* curve_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  explicit SubcurveRange(const MultiNodalCurve& curve) : curve_(&curve) {}
  iterator begin() const { return {curve_, 1}; }
  iterator end() const { return {curve_, std::uint64_t{1} << curve_->components().size()}; }

 private:
  const MultiNodalCurve* curve_;
};

/// Throws TooManyComponents above cap.
SubcurveRange subcurves(const MultiNodalCurve& c, std::size_t cap = kDefaultSubcurveCap);

/// Inputs to the degree comparison for a subcurve B of D + Delta.
struct SubcurveBoundData {
  int normalization_genus;            // p_a(B^nu)
  std::vector<int> multiplicities;    // mu_p(B) at singular points of D + Delta on B
  std::optional<int> smooth_points;   // s; absent for curves outside D + Delta
};

/// The chained lower bounds for deg (K + Delta)|B^nu, weakest last.
struct DegreeBounds {
  Rational via_normalization;
  std::optional<Rational> with_smooth_points;
  Rational without_smooth_points;
};

DegreeBounds deg_comparison_bound(const SubcurveBoundData& b);

/// Numerical degrees per component, optionally with integral sheaf degrees.
/// The two may differ on non-Cartier loci; consumers pick one explicitly.
class PolarizedCurve {
 public:
  PolarizedCurve() = default;
  PolarizedCurve(MultiNodalCurve curve, std::map<std::string, Rational> degrees,
                 std::optional<std::map<std::string, long>> sheaf_degrees = std::nullopt);

  const MultiNodalCurve& curve() const { return curve_; }
  const std::map<std::string, Rational>& degrees() const { return degrees_; }
  const std::optional<std::map<std::string, long>>& sheaf_degrees() const { return sheaf_degrees_; }

  Rational degree(std::uint64_t mask) const;
  std::optional<long> sheaf_degree(std::uint64_t mask) const;

  /// Integral sheaf degrees factor * deg. Throws ValidationError when some
  /// product is not an integer.
  PolarizedCurve with_scaled_sheaf_degrees(long factor) const;

 private:
  MultiNodalCurve curve_;
  std::map<std::string, Rational> degrees_;
  std::optional<std::map<std::string, long>> sheaf_degrees_;
};

}  // namespace slc
