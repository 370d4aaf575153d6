#include "slc/curves.hpp"

#include <cassert>
#include <cstdlib>
#include <set>

#include "slc/errors.hpp"

namespace slc {

int MultiNode::multiplicity() const {
  int mu = 0;
  for (const auto& b : branches) mu += b.count;
  return mu;
}

MultiNodalCurve::MultiNodalCurve(std::vector<CurveComponent> components, std::vector<MultiNode> nodes)
    : components_(std::move(components)), nodes_(std::move(nodes)) {
  std::set<std::string> seen;
  for (const auto& c : components_) {
    if (!seen.insert(c.id).second) throw ValidationError("duplicate curve component \"" + c.id + "\"");
    if (c.genus < 0) throw ValidationError("component \"" + c.id + "\" has negative genus");
  }
  std::set<std::string> node_ids;
  for (const auto& n : nodes_) {
    if (!node_ids.insert(n.id).second) throw ValidationError("duplicate node \"" + n.id + "\"");
    for (const auto& b : n.branches) {
      index_of(b.component);
      if (b.count <= 0) throw ValidationError("node \"" + n.id + "\" has a non-positive branch count");
    }
    if (n.multiplicity() < 2) throw ValidationError("node \"" + n.id + "\" has fewer than two branches");
  }
}

std::size_t MultiNodalCurve::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].id == id) return i;
  }
  throw ValidationError("unknown curve component \"" + std::string(id) + "\"");
}

MultiNodalCurve MultiNodalCurve::restricted(std::uint64_t mask) const {
  std::vector<CurveComponent> comps;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (mask >> i & 1) comps.push_back(components_[i]);
  }
  std::vector<MultiNode> nodes;
  for (const auto& n : nodes_) {
    MultiNode kept{n.id, {}};
    for (const auto& b : n.branches) {
      if (mask >> index_of(b.component) & 1) kept.branches.push_back(b);
    }
    if (kept.multiplicity() >= 2) nodes.push_back(std::move(kept));
  }
  return MultiNodalCurve(std::move(comps), std::move(nodes));
}

std::uint64_t MultiNodalCurve::mask_of(std::span<const std::string> ids) const {
  std::uint64_t mask = 0;
  for (const auto& id : ids) mask |= std::uint64_t{1} << index_of(id);
  return mask;
}

bool operator==(const MultiNodalCurve& a, const MultiNodalCurve& b) {
  if (a.components_.size() != b.components_.size() || a.nodes_.size() != b.nodes_.size()) return false;
  for (std::size_t i = 0; i < a.components_.size(); ++i) {
    if (a.components_[i].id != b.components_[i].id || a.components_[i].genus != b.components_[i].genus) return false;
  }
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const auto& x = a.nodes_[i];
    const auto& y = b.nodes_[i];
    if (x.id != y.id || x.branches.size() != y.branches.size()) return false;
    for (std::size_t j = 0; j < x.branches.size(); ++j) {
      if (x.branches[j].component != y.branches[j].component || x.branches[j].count != y.branches[j].count) {
        return false;
      }
    }
  }
  return true;
}

int normalization_genus(const MultiNodalCurve& c) {
  int p = 1;
  for (const auto& comp : c.components()) p -= 1 - comp.genus;
  return p;
}

int arithmetic_genus(const MultiNodalCurve& c) {
  if (c.components().empty()) throw EmptySubcurve();
  int p = normalization_genus(c);
  for (const auto& n : c.nodes()) p += n.multiplicity() - 1;
  return p;
}

int arithmetic_genus(const MultiNodalCurve& c, std::span<const std::string> subset) {
  if (subset.empty()) throw EmptySubcurve();
  return arithmetic_genus(c.restricted(c.mask_of(subset)));
}

LocalCorrection normal_crossing(long i1, long i2) {
  if (i1 < 0 || i2 < 0) throw ValidationError("intersection numbers must be non-negative");
  LocalCorrection q{PointKind::NormalCrossing, std::min(i1, i2), std::labs(i1 - i2)};
  assert(2 * q.n + q.d == i1 + i2);
  return q;
}

LocalCorrection pinch(long i) {
  if (i < 0) throw ValidationError("intersection numbers must be non-negative");
  LocalCorrection q{PointKind::Pinch, i / 2, i % 2};
  assert(2 * q.n + q.d == i);
  return q;
}

long chi_via_semismooth_rr(long chi_normalization, std::span<const LocalCorrection> corrections) {
  long chi = chi_normalization;
  for (const auto& q : corrections) chi -= q.n;
  return chi;
}

SubcurveRange subcurves(const MultiNodalCurve& c, std::size_t cap) {
  if (c.components().size() > cap || c.components().size() > 62) {
    throw TooManyComponents("curve has " + std::to_string(c.components().size()) +
                            " components, above the subcurve cap of " + std::to_string(cap));
  }
  return SubcurveRange(c);
}

DegreeBounds deg_comparison_bound(const SubcurveBoundData& b) {
  int sum_mu = 0;
  int excess = 0;      // sum (mu - 1) = p_a(B) - p_a(B^nu)
  int correction = 0;  // sum (2 - mu) over points with mu >= 2
  for (int mu : b.multiplicities) {
    sum_mu += mu;
    if (mu >= 2) {
      excess += mu - 1;
      correction += 2 - mu;
    }
  }
  const int pa = b.normalization_genus + excess;
  DegreeBounds out;
  out.via_normalization = 2 * b.normalization_genus - 2 + sum_mu;
  out.without_smooth_points = 2 * pa - 2 + correction;
  if (b.smooth_points) out.with_smooth_points = Rational(out.without_smooth_points + *b.smooth_points);
  return out;
}

PolarizedCurve::PolarizedCurve(MultiNodalCurve curve, std::map<std::string, Rational> degrees,
                               std::optional<std::map<std::string, long>> sheaf_degrees)
    : curve_(std::move(curve)), degrees_(std::move(degrees)), sheaf_degrees_(std::move(sheaf_degrees)) {
  for (const auto& comp : curve_.components()) {
    if (!degrees_.count(comp.id)) throw ValidationError("no degree for component \"" + comp.id + "\"");
    if (sheaf_degrees_ && !sheaf_degrees_->count(comp.id)) {
      throw ValidationError("no sheaf degree for component \"" + comp.id + "\"");
    }
  }
  for (const auto& [id, _] : degrees_) curve_.index_of(id);
}

Rational PolarizedCurve::degree(std::uint64_t mask) const {
  Rational total = 0;
  for (std::size_t i = 0; i < curve_.components().size(); ++i) {
    if (mask >> i & 1) total += degrees_.at(curve_.components()[i].id);
  }
  return total;
}

std::optional<long> PolarizedCurve::sheaf_degree(std::uint64_t mask) const {
  if (!sheaf_degrees_) return std::nullopt;
  long total = 0;
  for (std::size_t i = 0; i < curve_.components().size(); ++i) {
    if (mask >> i & 1) total += sheaf_degrees_->at(curve_.components()[i].id);
  }
  return total;
}

PolarizedCurve PolarizedCurve::with_scaled_sheaf_degrees(long factor) const {
  std::map<std::string, long> sheaf;
  for (const auto& [id, deg] : degrees_) {
    const Rational scaled = Rational(factor) * deg;
    if (!is_integral(scaled)) {
      throw ValidationError(std::to_string(factor) + " times the degree on \"" + id + "\" is not an integer");
    }
    sheaf[id] = scaled.get_num().get_si();
  }
  return PolarizedCurve(curve_, degrees_, std::move(sheaf));
}

}  // namespace slc
