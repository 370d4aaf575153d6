#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oracle {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign(const Rational& x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::vector<Rational> characteristic_polynomial(const slc::RationalMatrix& a) {
  // Faddeev-LeVerrier: det(tI - A) with exact rationals.
  const std::size_t n = a.size();
  Poly c(n + 1);
  c[n] = 1;
  slc::RationalMatrix mk(n);
  for (std::size_t k = 1; k <= n; ++k) {
    slc::RationalMatrix next(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t l = 0; l < n; ++l) acc += a(i, l) * mk(l, j);
        next(i, j) = acc + (i == j ? c[n - k + 1] : Rational(0));
      }
    }
    mk = next;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a(i, l) * mk(l, i);
    }
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

bool negative_definite_sturm(const slc::RationalMatrix& m) {
  Poly p = characteristic_polynomial(m);
  trim(p);
  if (eval(p, 0) == 0) return false;
  std::vector<Poly> seq{p, derivative(p)};
  while (!seq.back().empty()) {
    Poly r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& x : r) x = -x;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  std::vector<int> at_zero;
  std::vector<int> at_infinity;
  for (const auto& q : seq) {
    if (q.empty()) continue;
    at_zero.push_back(sign(eval(q, 0)));
    at_infinity.push_back(sign(q.back()));
  }
  // Symmetric matrices have only real eigenvalues: none may be positive.
  return sign_changes(at_zero) == sign_changes(at_infinity);
}

long chain_determinant(int n) {
  long prev = 1;
  long cur = 2;
  if (n == 0) return 1;
  for (int i = 2; i <= n; ++i) {
    const long next = 2 * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Rational cofactor_determinant(const slc::RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    slc::RationalMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == col) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    const Rational term = m(0, col) * cofactor_determinant(minor);
    total += col % 2 == 0 ? term : -term;
  }
  return total;
}

std::optional<std::vector<long>> minimal_cycle(const ExceptionalGraph& g, const std::vector<long>& offset,
                                               bool require_nonzero, long box) {
  const std::size_t n = g.size();
  std::vector<std::vector<long>> m(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? g.vertex(i).self_intersection : g.multiplicity(i, j);
  }
  std::vector<long> z(n, 0);
  std::optional<std::vector<long>> best;
  std::vector<long> meet(n, box + 1);
  bool any = false;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      if (require_nonzero && std::all_of(z.begin(), z.end(), [](long c) { return c == 0; })) return;
      for (std::size_t r = 0; r < n; ++r) {
        long product = offset[r];
        for (std::size_t c = 0; c < n; ++c) product += m[r][c] * z[c];
        if (product > 0) return;
      }
      any = true;
      for (std::size_t r = 0; r < n; ++r) meet[r] = std::min(meet[r], z[r]);
      long sum = 0;
      long best_sum = 0;
      for (long c : z) sum += c;
      if (best) {
        for (long c : *best) best_sum += c;
      }
      if (!best || sum < best_sum) best = z;
      return;
    }
    for (long c = 0; c <= box; ++c) {
      z[i] = c;
      walk(i + 1);
    }
    z[i] = 0;
  };
  walk(0);
  if (!any) return std::nullopt;
  // The solution set is closed under componentwise minimum, so the minimal
  // sum solution must also be the meet of all solutions.
  if (*best != meet) throw std::logic_error("solution set is not closed under componentwise minimum");
  return best;
}

ExceptionalGraph random_graph(std::mt19937& rng, int max_vertices, int lo, int hi, int max_marks) {
  std::uniform_int_distribution<int> size_dist(1, max_vertices);
  std::uniform_int_distribution<int> self_dist(lo, hi);
  const int n = size_dist(rng);
  std::vector<slc::GraphVertex> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back({"E" + std::to_string(i + 1), self_dist(rng), 0});
  std::vector<slc::GraphEdge> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    edges.push_back({vertices[parent(rng)].id, vertices[i].id, 1});
  }
  std::bernoulli_distribution extra(0.15);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool present = std::any_of(edges.begin(), edges.end(), [&](const slc::GraphEdge& e) {
        return (e.a == vertices[i].id && e.b == vertices[j].id) || (e.a == vertices[j].id && e.b == vertices[i].id);
      });
      if (!present && extra(rng)) edges.push_back({vertices[i].id, vertices[j].id, 1});
    }
  }
  std::map<std::string, int> marks;
  std::uniform_int_distribution<int> mark_count(0, max_marks);
  std::uniform_int_distribution<int> where(0, n - 1);
  for (int k = mark_count(rng); k > 0; --k) ++marks[vertices[where(rng)].id];
  return ExceptionalGraph(std::move(vertices), edges, marks);
}

long weighted_hypersurface_dim(const std::vector<int>& weights, int degree, int k) {
  std::function<long(std::size_t, int)> count = [&](std::size_t i, int left) -> long {
    if (left < 0) return 0;
    if (i == weights.size()) return left == 0 ? 1 : 0;
    long total = 0;
    for (int e = 0; e * weights[i] <= left; ++e) total += count(i + 1, left - e * weights[i]);
    return total;
  };
  return count(0, k) - count(0, k - degree);
}

}  // namespace oracle
