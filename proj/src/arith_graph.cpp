#include "slc/arith_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "slc/errors.hpp"
#include "slc/linalg.hpp"

namespace slc {

// ---------------------------------------------------------------------------
// QDivisor

void QDivisor::add(const std::string& id, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(id, coeff);
  if (!inserted) {
    it->second += coeff;
    it->second.canonicalize();
    if (it->second == 0) terms_.erase(it);
  }
}

Rational QDivisor::coefficient(const std::string& id) const {
  auto it = terms_.find(id);
  return it == terms_.end() ? Rational(0) : it->second;
}

QDivisor& QDivisor::operator+=(const QDivisor& other) {
  for (const auto& [id, c] : other.terms_) add(id, c);
  return *this;
}

QDivisor& QDivisor::operator-=(const QDivisor& other) {
  for (const auto& [id, c] : other.terms_) add(id, -c);
  return *this;
}

QDivisor& QDivisor::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [id, c] : terms_) {
    c *= scalar;
    c.canonicalize();
  }
  return *this;
}

std::string QDivisor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [id, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << slc::to_string(mag) << " ";
    out << id;
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// ExceptionalGraph

ExceptionalGraph::ExceptionalGraph(std::vector<GraphVertex> vertices, const std::vector<GraphEdge>& edges,
                                   const std::map<std::string, int>& boundary_marks,
                                   std::map<std::string, Rational> edge_labels)
    : vertices_(std::move(vertices)), edge_labels_(std::move(edge_labels)) {
  const std::size_t n = vertices_.size();
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v.id).second) throw ValidationError("duplicate vertex id \"" + v.id + "\"");
    if (v.self_intersection > -1) {
      throw ValidationError("vertex \"" + v.id + "\" has self-intersection " + std::to_string(v.self_intersection) +
                            " > -1");
    }
    if (v.genus < 0) throw ValidationError("vertex \"" + v.id + "\" has negative genus");
  }
  adjacency_.assign(n * n, 0);
  for (const auto& e : edges) {
    const std::size_t i = index_of(e.a);
    const std::size_t j = index_of(e.b);
    if (i == j) throw ValidationError("self-loop at vertex \"" + e.a + "\"");
    if (e.multiplicity <= 0) throw ValidationError("edge multiplicity must be positive");
    adjacency_[i * n + j] += e.multiplicity;
    adjacency_[j * n + i] += e.multiplicity;
  }
  marks_.assign(n, 0);
  for (const auto& [id, count] : boundary_marks) {
    if (count < 0) throw ValidationError("negative boundary mark count at \"" + id + "\"");
    marks_[index_of(id)] = count;
  }
  for (auto& [id, label] : edge_labels_) {
    label.canonicalize();
    if (marks_[index_of(id)] == 0) throw ValidationError("edge label on unmarked vertex \"" + id + "\"");
    if (label < 0 || label > 1) throw ValidationError("edge label at \"" + id + "\" outside [0,1]");
  }
}

std::optional<std::size_t> ExceptionalGraph::find(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t ExceptionalGraph::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw ValidationError("unknown vertex \"" + std::string(id) + "\"");
}

int ExceptionalGraph::total_marks() const {
  int total = 0;
  for (int m : marks_) total += m;
  return total;
}

int ExceptionalGraph::degree(std::size_t i) const {
  int d = 0;
  for (std::size_t j = 0; j < size(); ++j) d += multiplicity(i, j) > 0 ? 1 : 0;
  return d;
}

std::vector<GraphEdge> ExceptionalGraph::edges() const {
  std::vector<GraphEdge> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (multiplicity(i, j) > 0) out.push_back({vertices_[i].id, vertices_[j].id, multiplicity(i, j)});
    }
  }
  return out;
}

bool ExceptionalGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> reached(size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < size(); ++j) {
      if (!reached[j] && multiplicity(i, j) > 0) {
        reached[j] = true;
        stack.push_back(j);
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
}

ExceptionalGraph ExceptionalGraph::permuted(const std::vector<std::size_t>& order) const {
  std::vector<GraphVertex> verts(size());
  for (std::size_t i = 0; i < size(); ++i) verts[order[i]] = vertices_[i];
  std::map<std::string, int> marks;
  for (std::size_t i = 0; i < size(); ++i) {
    if (marks_[i] > 0) marks[vertices_[i].id] = marks_[i];
  }
  return ExceptionalGraph(std::move(verts), edges(), marks, edge_labels_);
}

bool operator==(const ExceptionalGraph& a, const ExceptionalGraph& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& u = a.vertices_[i];
    const auto& v = b.vertices_[i];
    if (u.id != v.id || u.self_intersection != v.self_intersection || u.genus != v.genus) return false;
  }
  return a.adjacency_ == b.adjacency_ && a.marks_ == b.marks_ && a.edge_labels_ == b.edge_labels_;
}

// ---------------------------------------------------------------------------
// Operations

std::string_view to_string(GraphType type) {
  switch (type) {
    case GraphType::C1: return "C1";
    case GraphType::C2: return "C2";
    case GraphType::Dh: return "Dh";
    case GraphType::LcNormal: return "LC_NORMAL";
    case GraphType::CycleDegenerateCusp: return "CYCLE_DEGENERATE_CUSP";
    case GraphType::Unclassified: return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

IntegerMatrix intersection_matrix(const ExceptionalGraph& g) {
  IntegerMatrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      m(i, j) = i == j ? g.vertex(i).self_intersection : g.multiplicity(i, j);
    }
  }
  return m;
}

bool is_negative_definite(const RationalMatrix& m) {
  if (!m.is_symmetric()) return false;
  const auto pivots = linalg::leading_pivots(m);
  if (pivots.size() != m.size()) return false;
  // Leading minors alternate in sign starting negative iff every pivot is negative.
  return std::all_of(pivots.begin(), pivots.end(), [](const Rational& p) { return p < 0; });
}

bool is_negative_definite(const ExceptionalGraph& g) { return is_negative_definite(intersection_matrix(g).to_rational()); }

namespace {

void require_definite(const ExceptionalGraph& g) {
  if (!is_negative_definite(g)) throw NotNegativeDefinite();
}

std::vector<Rational> solve_against(const ExceptionalGraph& g, const std::vector<Rational>& rhs) {
  return linalg::solve(intersection_matrix(g).to_rational(), rhs);
}

bool is_tree_with_unit_edges(const ExceptionalGraph& g) {
  if (!g.is_connected()) return false;
  std::size_t edge_count = 0;
  for (const auto& e : g.edges()) {
    if (e.multiplicity != 1) return false;
    ++edge_count;
  }
  return edge_count + 1 == g.size();
}

// Vertices of a path graph listed from one end to the other, or empty if g is
// not a chain.
std::vector<std::size_t> chain_order(const ExceptionalGraph& g) {
  if (g.empty() || !is_tree_with_unit_edges(g)) return {};
  std::size_t start = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.degree(i) > 2) return {};
    if (g.degree(i) <= 1) {
      start = i;
      break;
    }
  }
  std::vector<std::size_t> order{start};
  std::vector<bool> used(g.size(), false);
  used[start] = true;
  while (order.size() < g.size()) {
    const std::size_t cur = order.back();
    std::size_t next = g.size();
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!used[j] && g.multiplicity(cur, j) > 0) next = j;
    }
    if (next == g.size()) return {};
    used[next] = true;
    order.push_back(next);
  }
  return order;
}

bool is_c1(const ExceptionalGraph& g, const std::vector<std::size_t>& chain) {
  if (chain.empty() || g.total_marks() != 1) return false;
  const bool at_end = g.marks(chain.front()) == 1 || g.marks(chain.back()) == 1;
  if (!at_end) return false;
  return std::all_of(g.vertices().begin(), g.vertices().end(),
                     [](const GraphVertex& v) { return v.self_intersection <= -2; });
}

bool is_c2(const ExceptionalGraph& g, const std::vector<std::size_t>& chain) {
  if (chain.empty() || g.total_marks() != 2) return false;
  if (chain.size() == 1) return g.marks(chain.front()) == 2;
  if (g.marks(chain.front()) != 1 || g.marks(chain.back()) != 1) return false;
  // A (-1)-curve inside a longer chain would be contracted by the minimal semi-resolution.
  return std::all_of(g.vertices().begin(), g.vertices().end(),
                     [](const GraphVertex& v) { return v.self_intersection <= -2; });
}

bool is_dh(const ExceptionalGraph& g) {
  if (g.total_marks() != 1 || g.size() < 4 || !is_tree_with_unit_edges(g)) return false;
  std::optional<std::size_t> fork;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const int d = g.degree(i);
    if (d > 3) return false;
    if (d == 3) {
      if (fork) return false;
      fork = i;
    }
  }
  if (!fork) return false;
  for (const auto& v : g.vertices()) {
    if (v.self_intersection > -2) return false;
  }
  std::size_t marked = g.size();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.marks(i) == 1) marked = i;
  }
  if (marked == *fork || g.degree(marked) != 1) return false;
  // Walk from the marked end to the fork; the two remaining fork neighbours
  // must be unmarked (-2)-leaves.
  std::vector<bool> on_chain(g.size(), false);
  std::size_t prev = g.size();
  std::size_t cur = marked;
  on_chain[cur] = true;
  while (cur != *fork) {
    std::size_t next = g.size();
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j != prev && g.multiplicity(cur, j) > 0) next = j;
    }
    if (next == g.size()) return false;
    prev = cur;
    cur = next;
    on_chain[cur] = true;
  }
  int tails = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (on_chain[j] || g.multiplicity(*fork, j) == 0) continue;
    if (g.degree(j) != 1 || g.vertex(j).self_intersection != -2 || g.marks(j) != 0) return false;
    ++tails;
  }
  const auto chain_len = std::count(on_chain.begin(), on_chain.end(), true);
  return tails == 2 && static_cast<std::size_t>(chain_len) + 2 == g.size();
}

}  // namespace

Integer graph_determinant(const ExceptionalGraph& g) {
  require_definite(g);
  return abs(linalg::determinant(intersection_matrix(g)));
}

std::vector<Rational> coefficients_on(const ExceptionalGraph& g, const QDivisor& d) {
  std::vector<Rational> out(g.size());
  for (const auto& [id, c] : d.terms()) {
    auto i = g.find(id);
    if (!i) throw GraphMismatch("divisor term \"" + id + "\" is not a vertex of the graph");
    out[*i] = c;
  }
  return out;
}

QDivisor divisor_on(const ExceptionalGraph& g, const std::vector<Rational>& coeffs) {
  QDivisor d;
  for (std::size_t i = 0; i < g.size(); ++i) d.add(g.vertex(i).id, coeffs[i]);
  return d;
}

QDivisor numerical_pullback(const ExceptionalGraph& g, const std::map<std::string, Rational>& incidence) {
  if (g.empty()) {
    for (const auto& [id, value] : incidence) {
      if (value != 0) throw ValidationError("incidence on unknown vertex \"" + id + "\"");
    }
    return {};
  }
  require_definite(g);
  std::vector<Rational> rhs(g.size());
  for (const auto& [id, value] : incidence) rhs[g.index_of(id)] = -value;
  return divisor_on(g, solve_against(g, rhs));
}

QDivisor codiscrepancy(const ExceptionalGraph& g) {
  if (g.empty()) return {};
  require_definite(g);
  std::vector<Rational> rhs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& v = g.vertex(i);
    const int canonical = -v.self_intersection - 2 + 2 * v.genus;
    rhs[i] = -(canonical + g.marks(i));
  }
  return divisor_on(g, solve_against(g, rhs));
}

GraphType classify_graph(const ExceptionalGraph& g, GluingContext context) {
  const auto chain = chain_order(g);
  const bool c2 = is_c2(g, chain);
  if (context == GluingContext::Cyclic && (c2 || g.empty())) return GraphType::CycleDegenerateCusp;
  if (g.total_marks() == 0) return GraphType::LcNormal;
  if (is_c1(g, chain)) return GraphType::C1;
  if (c2) return GraphType::C2;
  if (is_dh(g)) return GraphType::Dh;
  return GraphType::Unclassified;
}

Rational different_coefficient(const ExceptionalGraph& g, std::string_view marked_vertex) {
  const std::size_t i = g.index_of(marked_vertex);
  if (g.marks(i) == 0) throw ValidationError("vertex \"" + std::string(marked_vertex) + "\" carries no boundary branch");
  switch (classify_graph(g)) {
    case GraphType::C1: return Rational(1) - Rational(1) / Rational(graph_determinant(g));
    case GraphType::C2:
    case GraphType::Dh: return 1;
    default: throw Unclassified("different is only tabulated for C1, C2 and Dh graphs");
  }
}

}  // namespace slc
