#include "slc/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "slc/errors.hpp"

namespace slc {

std::optional<std::size_t> NormalComponent::class_index(std::string_view name) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] == name) return i;
  }
  return std::nullopt;
}

Rational NormalComponent::intersect(const QDivisor& a, const QDivisor& b) const {
  Rational total = 0;
  for (const auto& [x, cx] : a.terms()) {
    auto i = class_index(x);
    if (!i) throw ValidationError("class \"" + x + "\" is not declared on component \"" + id + "\"");
    for (const auto& [y, cy] : b.terms()) {
      auto j = class_index(y);
      if (!j) throw ValidationError("class \"" + y + "\" is not declared on component \"" + id + "\"");
      total += cx * cy * form(*i, *j);
    }
  }
  return total;
}

QDivisor NormalComponent::log_canonical() const {
  QDivisor l = canonical;
  for (const auto& c : conductor) l.add(c, 1);
  for (const auto& c : boundary) l.add(c, 1);
  return l;
}

std::string_view to_string(LocusType type) { return type == LocusType::I ? "I" : "II"; }

int quotient_genus(int g, int fixed_points) {
  if (g < 0 || fixed_points < 0) throw InconsistentRamification("genus and fixed point count must be non-negative");
  const int numerator = 2 * g + 2 - fixed_points;
  if (numerator < 0 || numerator % 4 != 0) {
    throw InconsistentRamification("no involution of a genus " + std::to_string(g) + " curve has " +
                                   std::to_string(fixed_points) + " fixed points");
  }
  return numerator / 4;
}

namespace {

QDivisor single(const std::string& name) {
  QDivisor d;
  d.add(name, 1);
  return d;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

class Violations {
 public:
  void add(std::string message) { list_.insert(std::move(message)); }
  std::vector<std::string> take() { return {list_.begin(), list_.end()}; }

 private:
  std::set<std::string> list_;
};

void check_component(const NormalComponent& c, long index, Violations& out) {
  const std::string where = "component " + c.id + ": ";
  if (c.form.size() != c.classes.size()) {
    out.add(where + "intersection form size does not match the class list");
    return;
  }
  if (!c.form.is_symmetric()) out.add(where + "intersection form is not symmetric");
  std::set<std::string> names(c.classes.begin(), c.classes.end());
  if (names.size() != c.classes.size()) out.add(where + "duplicate class names");
  bool known = true;
  auto require_known = [&](const std::string& name, const char* role) {
    if (!names.count(name)) {
      out.add(where + role + " refers to undeclared class " + name);
      known = false;
    }
  };
  for (const auto& [name, _] : c.canonical.terms()) require_known(name, "canonical class");
  for (const auto& name : c.conductor) require_known(name, "conductor");
  for (const auto& name : c.boundary) require_known(name, "boundary");
  for (const auto& name : c.conductor) {
    if (contains(c.boundary, name)) out.add(where + "class " + name + " lies in both the conductor and the boundary");
  }
  if (!known) return;

  const QDivisor l = c.log_canonical();
  for (const auto& name : c.classes) {
    const Rational degree = c.intersect(l, single(name));
    if (!is_integral(Rational(index) * degree)) {
      out.add(where + "I(K+D+Delta)." + name + " = " + to_string(Rational(index) * degree) + " is not an integer");
    }
    if (degree <= 0) out.add(where + "(K+D+Delta)." + name + " = " + to_string(degree) + " is not positive");
  }
  const Rational square = c.intersect(l, l);
  if (!is_integral(Rational(index * index) * square)) {
    out.add(where + "I^2(K+D+Delta)^2 = " + to_string(Rational(index * index) * square) + " is not an integer");
  }
  for (const auto& sp : c.singular_points) {
    if (!sp.graph.empty() && !is_negative_definite(sp.graph)) {
      out.add(where + "graph at " + sp.location + " is not negative definite");
    }
  }
}

}  // namespace

std::vector<std::string> validate_triple(const StableLogSurface& s) {
  Violations out;
  if (s.global_index < 1) out.add("global index must be positive");

  std::map<std::string, const NormalComponent*> components;
  for (const auto& c : s.components) {
    if (!components.emplace(c.id, &c).second) out.add("duplicate component id " + c.id);
    check_component(c, std::max(s.global_index, 1L), out);
  }

  const auto& gl = s.gluing;
  std::map<std::string, const ConductorBranch*> branches;
  std::map<std::pair<std::string, std::string>, int> branches_per_class;
  for (const auto& b : gl.branches) {
    if (!branches.emplace(b.id, &b).second) out.add("duplicate branch id " + b.id);
    auto c = components.find(b.component);
    if (c == components.end()) {
      out.add("branch " + b.id + " lies on unknown component " + b.component);
      continue;
    }
    if (!contains(c->second->conductor, b.conductor_class)) {
      out.add("branch " + b.id + " maps to " + b.conductor_class + ", which is not a conductor class");
    }
    ++branches_per_class[{b.component, b.conductor_class}];
    if (b.genus < 0) out.add("branch " + b.id + " has negative genus");
    if (b.fixed_points < 0) out.add("branch " + b.id + " has a negative fixed point count");
  }
  for (const auto& c : s.components) {
    for (const auto& name : c.conductor) {
      const int n = branches_per_class[{c.id, name}];
      if (n != 1) {
        out.add("conductor class " + name + " on " + c.id + " has " + std::to_string(n) + " branches instead of 1");
      }
    }
  }

  for (const auto& b : gl.branches) {
    auto it = gl.branch_pairing.find(b.id);
    if (it == gl.branch_pairing.end()) {
      out.add("branch " + b.id + " has no partner under the gluing");
      continue;
    }
    auto partner = branches.find(it->second);
    if (partner == branches.end()) {
      out.add("branch " + b.id + " is paired with unknown branch " + it->second);
      continue;
    }
    auto back = gl.branch_pairing.find(it->second);
    if (back == gl.branch_pairing.end() || back->second != b.id) out.add("branch pairing is not an involution at " + b.id);
    if (partner->second->genus != b.genus) out.add("paired branches " + b.id + " and " + it->second + " differ in genus");
    if (it->second == b.id) {
      try {
        quotient_genus(b.genus, b.fixed_points);
      } catch (const InconsistentRamification&) {
        out.add("branch " + b.id + ": inconsistent ramification for the self-gluing");
      }
    } else if (b.fixed_points != 0) {
      out.add("branch " + b.id + " declares fixed points but is not glued to itself");
    }
  }
  for (const auto& [a, _] : gl.branch_pairing) {
    if (!branches.count(a)) out.add("branch pairing mentions unknown branch " + a);
  }

  std::map<std::string, const MarkedPoint*> points;
  for (const auto& p : gl.points) {
    if (!points.emplace(p.id, &p).second) out.add("duplicate marked point " + p.id);
    if (!branches.count(p.branch)) out.add("marked point " + p.id + " lies on unknown branch " + p.branch);
    if (p.different < 0 || p.different > 1) out.add("different at " + p.id + " lies outside [0,1]");
    if (p.boundary_branches < 0) out.add("marked point " + p.id + " has a negative boundary branch count");
  }
  std::map<std::string, int> self_nodes;
  for (const auto& p : gl.points) {
    if (!p.node_partner) continue;
    auto q = points.find(*p.node_partner);
    if (q == points.end()) {
      out.add("marked point " + p.id + " has unknown node partner " + *p.node_partner);
      continue;
    }
    if (q->first == p.id) {
      out.add("marked point " + p.id + " is its own node partner");
      continue;
    }
    if (q->second->node_partner != p.id) out.add("node partners of " + p.id + " are not symmetric");
    if (p.different != 1) out.add("node preimage " + p.id + " has different " + to_string(p.different) + " instead of 1");
    auto bp = branches.find(p.branch);
    auto bq = branches.find(q->second->branch);
    if (bp != branches.end() && bq != branches.end()) {
      if (bp->second->component != bq->second->component) {
        out.add("node " + p.id + "/" + q->first + " joins branches on different components");
      } else if (bp->first == bq->first && p.id < q->first) {
        ++self_nodes[bp->first];
      }
    }
  }
  for (const auto& p : gl.points) {
    auto it = gl.point_map.find(p.id);
    if (it == gl.point_map.end()) {
      out.add("marked point " + p.id + " has no image under the gluing");
      continue;
    }
    auto q = points.find(it->second);
    if (q == points.end()) {
      out.add("marked point " + p.id + " maps to unknown point " + it->second);
      continue;
    }
    auto back = gl.point_map.find(q->first);
    if (back == gl.point_map.end() || back->second != p.id) out.add("point map is not an involution at " + p.id);
    auto pairing = gl.branch_pairing.find(p.branch);
    if (pairing != gl.branch_pairing.end() && pairing->second != q->second->branch) {
      out.add("point map sends " + p.id + " off the partner branch");
    }
    if (q->second->different != p.different) out.add("Diff not tau-invariant at " + p.id);
  }
  for (const auto& [a, _] : gl.point_map) {
    if (!points.count(a)) out.add("point map mentions unknown point " + a);
  }

  // Adjunction on components without singular points: the conductor curve
  // there is nodal with the declared nodes only.
  for (const auto& b : gl.branches) {
    auto c = components.find(b.component);
    if (c == components.end() || !c->second->singular_points.empty()) continue;
    if (!c->second->class_index(b.conductor_class)) continue;
    const NormalComponent& comp = *c->second;
    const QDivisor cls = single(b.conductor_class);
    if (comp.form.size() != comp.classes.size()) continue;
    bool known = true;
    for (const auto& [name, _] : comp.canonical.terms()) known = known && comp.class_index(name).has_value();
    if (!known) continue;
    const Rational lhs = comp.intersect(comp.canonical + cls, cls);
    const int pa = b.genus + self_nodes[b.id];
    if (lhs != 2 * pa - 2) {
      out.add("branch " + b.id + ": adjunction gives (K+C).C = " + to_string(lhs) + " but the declared genus needs " +
              std::to_string(2 * pa - 2));
    }
  }
  return out.take();
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

void require_valid(const StableLogSurface& s) {
  const auto violations = validate_triple(s);
  if (!violations.empty()) throw InvalidTriple("invalid triple: " + violations.front());
}

}  // namespace

NonNormalLocusReport non_normal_locus(const StableLogSurface& s) {
  require_valid(s);
  const auto& gl = s.gluing;
  NonNormalLocusReport report;

  // Components of D are orbits of the branch pairing.
  std::map<std::string, std::string> component_of_branch;
  std::set<std::string> done;
  for (const auto& b : gl.branches) {
    if (done.count(b.id)) continue;
    const std::string& partner = gl.branch_pairing.at(b.id);
    DComponent d;
    if (partner == b.id) {
      d.id = b.id;
      d.branches = {b.id};
      d.genus = quotient_genus(b.genus, b.fixed_points);
    } else {
      d.branches = {std::min(b.id, partner), std::max(b.id, partner)};
      d.id = d.branches[0] + "+" + d.branches[1];
      d.genus = b.genus;
    }
    for (const auto& x : d.branches) {
      done.insert(x);
      component_of_branch[x] = d.id;
    }
    report.components.push_back(std::move(d));
  }
  std::sort(report.components.begin(), report.components.end(),
            [](const DComponent& a, const DComponent& b) { return a.id < b.id; });

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < gl.points.size(); ++i) index[gl.points[i].id] = i;
  UnionFind classes(gl.points.size());
  for (const auto& p : gl.points) {
    classes.unite(index[p.id], index[gl.point_map.at(p.id)]);
    if (p.node_partner) {
      classes.unite(index[p.id], index[*p.node_partner]);
      if (p.id < *p.node_partner) ++report.conductor_nodes;
    }
  }
  std::map<std::size_t, std::vector<const MarkedPoint*>> groups;
  for (const auto& p : gl.points) groups[classes.find(index[p.id])].push_back(&p);

  std::vector<LocusPoint> all;
  for (auto& [_, members] : groups) {
    LocusPoint lp;
    bool has_fixed = false;
    bool all_partnered = true;
    int boundary = 0;
    int mu = 0;
    for (const MarkedPoint* p : members) {
      lp.members.push_back(p->id);
      const std::string& image = gl.point_map.at(p->id);
      if (image == p->id) has_fixed = true;
      if (!p->node_partner) all_partnered = false;
      if (p->node_partner && p->id < *p->node_partner) ++lp.node_pairs;
      // One branch of D per tau-orbit; count it at its smaller member.
      if (p->id <= image) {
        ++mu;
        ++lp.component_branches[component_of_branch.at(p->branch)];
        boundary += p->boundary_branches;
      }
    }
    std::sort(lp.members.begin(), lp.members.end());
    lp.id = lp.members.front();
    lp.mu = mu;
    lp.mu_with_boundary = mu + boundary;
    lp.type = !has_fixed && all_partnered ? LocusType::I : LocusType::II;
    lp.degenerate_cusp = lp.type == LocusType::I && mu >= 2;
    if (lp.node_pairs >= 1 && mu >= 2) {
      report.singular_points.push_back(std::move(lp));
    } else if (lp.mu_with_boundary >= 2) {
      report.boundary_contacts.push_back(std::move(lp));
    }
  }
  auto by_id = [](const LocusPoint& a, const LocusPoint& b) { return a.id < b.id; };
  std::sort(report.singular_points.begin(), report.singular_points.end(), by_id);
  std::sort(report.boundary_contacts.begin(), report.boundary_contacts.end(), by_id);
  return report;
}

std::vector<Rational> component_squares(const StableLogSurface& s) {
  std::vector<Rational> out;
  for (const auto& c : s.components) {
    const QDivisor l = c.log_canonical();
    out.push_back(c.intersect(l, l));
  }
  return out;
}

SurfaceInvariants invariants(const StableLogSurface& s) {
  const NonNormalLocusReport report = non_normal_locus(s);
  SurfaceInvariants inv;
  for (const Rational& sq : component_squares(s)) inv.k_squared += sq;

  long chi_normal = 0;
  for (const auto& c : s.components) chi_normal += c.chi;
  for (const auto& b : s.gluing.branches) inv.chi_conductor += 1 - b.genus;
  inv.chi_conductor -= report.conductor_nodes;
  for (const auto& d : report.components) inv.chi_conductor_nu += 1 - d.genus;
  inv.chi_d = inv.chi_conductor_nu;
  for (const auto& p : report.singular_points) inv.chi_d -= p.mu - 1;
  inv.chi = chi_normal + inv.chi_d - inv.chi_conductor;
  return inv;
}

PolarizedCurve conductor_curve(const StableLogSurface& s, const NonNormalLocusReport& report) {
  std::map<std::string, const ConductorBranch*> branches;
  for (const auto& b : s.gluing.branches) branches[b.id] = &b;
  std::map<std::string, const NormalComponent*> components;
  for (const auto& c : s.components) components[c.id] = &c;

  std::vector<CurveComponent> comps;
  std::map<std::string, Rational> degrees;
  for (const auto& d : report.components) {
    comps.push_back({d.id, d.genus});
    // Half the degree upstairs: either a double cover or two isomorphic copies.
    Rational total = 0;
    for (const auto& id : d.branches) {
      const ConductorBranch& b = *branches.at(id);
      const NormalComponent& c = *components.at(b.component);
      total += c.intersect(c.log_canonical(), single(b.conductor_class));
    }
    degrees[d.id] = total / 2;
  }
  std::vector<MultiNode> nodes;
  for (const auto& p : report.singular_points) {
    MultiNode n{p.id, {}};
    for (const auto& [comp, count] : p.component_branches) n.branches.push_back({comp, count});
    nodes.push_back(std::move(n));
  }
  return PolarizedCurve(MultiNodalCurve(std::move(comps), std::move(nodes)), std::move(degrees));
}

StableLogSurface disjoint_union(const StableLogSurface& a, const StableLogSurface& b, const std::string& prefix_b) {
  StableLogSurface out = a;
  out.global_index = std::lcm(a.global_index, b.global_index);
  auto rename = [&](const std::string& id) { return prefix_b + id; };
  for (NormalComponent c : b.components) {
    c.id = rename(c.id);
    out.components.push_back(std::move(c));
  }
  for (ConductorBranch br : b.gluing.branches) {
    br.id = rename(br.id);
    br.component = rename(br.component);
    out.gluing.branches.push_back(std::move(br));
  }
  for (const auto& [x, y] : b.gluing.branch_pairing) out.gluing.branch_pairing[rename(x)] = rename(y);
  for (MarkedPoint p : b.gluing.points) {
    p.id = rename(p.id);
    p.branch = rename(p.branch);
    if (p.node_partner) p.node_partner = rename(*p.node_partner);
    out.gluing.points.push_back(std::move(p));
  }
  for (const auto& [x, y] : b.gluing.point_map) out.gluing.point_map[rename(x)] = rename(y);
  return out;
}

}  // namespace slc
