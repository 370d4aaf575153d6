#include <doctest.h>

#include <random>

#include "graphs.hpp"
#include "oracles.hpp"
#include "slc/errors.hpp"
#include "slc/linalg.hpp"

using namespace slc;

TEST_SUITE("arith_graph") {

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("3/-6"), ParseError);
  CHECK(to_string(parse_rational("6/3")) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(ceil(Rational(5, 2)) == 3);
}

TEST_CASE("linear algebra against cofactor expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntegerMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    CHECK(Rational(linalg::determinant(m)) == oracle::cofactor_determinant(m.to_rational()));
    if (linalg::determinant(m) != 0) {
      std::vector<Rational> b(n);
      for (auto& x : b) x = entry(rng);
      auto x = linalg::solve(m.to_rational(), b);
      for (std::size_t i = 0; i < n; ++i) {
        Rational row = 0;
        for (std::size_t j = 0; j < n; ++j) row += m(i, j) * x[j];
        CHECK(row == b[i]);
      }
    } else {
      std::vector<Rational> b(n, Rational(1));
      // singular: either unsolvable or not uniquely solvable, both raise
      CHECK_THROWS_AS(linalg::solve(m.to_rational(), b), SingularSystem);
    }
  }
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(ExceptionalGraph({{"E", 0, 0}}, {}), ValidationError);
  CHECK_THROWS_AS(ExceptionalGraph({{"E", -2, 0}, {"E", -2, 0}}, {}), ValidationError);
  CHECK_THROWS_AS(ExceptionalGraph({{"E", -2, 0}}, {{"E", "F", 1}}), ValidationError);
  CHECK_THROWS_AS(ExceptionalGraph({{"E", -2, 0}}, {{"E", "E", 1}}), ValidationError);
  CHECK_THROWS_AS(ExceptionalGraph({{"E", -2, 0}}, {}, {{"E", -1}}), ValidationError);
  CHECK_THROWS_AS(ExceptionalGraph({{"E", -2, 0}}, {}, {}, {{"E", Rational(1, 2)}}), ValidationError);
  CHECK_THROWS_AS(ExceptionalGraph({{"E", -2, 0}}, {}, {{"E", 1}}, {{"E", Rational(3, 2)}}), ValidationError);

  ExceptionalGraph merged({{"A", -3, 0}, {"B", -3, 0}}, {{"A", "B", 1}, {"B", "A", 1}});
  CHECK(merged.multiplicity(0, 1) == 2);
  CHECK(merged.degree(0) == 1);
}

TEST_CASE("intersection matrix and definiteness") {
  auto m = intersection_matrix(graphs::a_n(3));
  CHECK(m(0, 0) == -2);
  CHECK(m(0, 1) == 1);
  CHECK(m(0, 2) == 0);
  CHECK(is_negative_definite(graphs::a_n(3)));
  // -1 curves meeting twice: determinant 1 - 4 < 0
  ExceptionalGraph indefinite({{"A", -1, 0}, {"B", -1, 0}}, {{"A", "B", 2}});
  CHECK_FALSE(is_negative_definite(indefinite));
  CHECK_THROWS_AS(graph_determinant(indefinite), NotNegativeDefinite);
  CHECK_FALSE(is_negative_definite(graphs::chain({-1, -1})));
}

TEST_CASE("determinants of small graphs") {
  CHECK(graph_determinant(graphs::single(-2)) == 2);
  CHECK(graph_determinant(graphs::a_n(2)) == 3);
  CHECK(graph_determinant(ExceptionalGraph()) == 1);
  CHECK(graph_determinant(graphs::d4()) == 4);
}

TEST_CASE("A_n determinant matches the chain recursion") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(graph_determinant(graphs::a_n(n)) == oracle::chain_determinant(n));
    CHECK(graph_determinant(graphs::a_n(n)) == n + 1);
  }
}

TEST_CASE("definiteness agrees with Sturm counting, all graphs up to four vertices") {
  // every diagonal in [-4,-1] and every simple edge pattern
  long checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t pairs = n * (n - 1) / 2;
    std::size_t diagonals = 1;
    for (std::size_t i = 0; i < n; ++i) diagonals *= 4;
    for (std::size_t d = 0; d < diagonals; ++d) {
      for (std::size_t edges = 0; edges < (std::size_t{1} << pairs); ++edges) {
        RationalMatrix m(n);
        std::size_t code = d;
        for (std::size_t i = 0; i < n; ++i) {
          m(i, i) = -1 - static_cast<long>(code % 4);
          code /= 4;
        }
        std::size_t bit = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j, ++bit)
            if (edges >> bit & 1) m(i, j) = m(j, i) = 1;
        REQUIRE(is_negative_definite(m) == oracle::negative_definite_sturm(m));
        ++checked;
      }
    }
  }
  CHECK(checked == 4 + 16 * 2 + 64 * 8 + 256 * 64);
}

TEST_CASE("definiteness agrees with Sturm counting, sampled five-vertex graphs") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> diag(-4, -1), coin(0, 1);
  for (int trial = 0; trial < 3000; ++trial) {
    RationalMatrix m(5);
    for (std::size_t i = 0; i < 5; ++i) {
      m(i, i) = diag(rng);
      for (std::size_t j = i + 1; j < 5; ++j) m(i, j) = m(j, i) = coin(rng);
    }
    REQUIRE(is_negative_definite(m) == oracle::negative_definite_sturm(m));
  }
}

TEST_CASE("numerical pullback examples") {
  CHECK(numerical_pullback(ExceptionalGraph(), {}).empty());

  auto single = numerical_pullback(graphs::single(-2), {{"E", 1}});
  CHECK(single.coefficient("E") == Rational(1, 2));

  auto a2 = numerical_pullback(graphs::a_n(2), {{"E1", 1}});
  CHECK(a2.coefficient("E1") == Rational(2, 3));
  CHECK(a2.coefficient("E2") == Rational(1, 3));

  CHECK_THROWS_AS(numerical_pullback(graphs::chain({-1, -1}), {{"E1", 1}}), NotNegativeDefinite);
  CHECK_THROWS_AS(numerical_pullback(graphs::a_n(2), {{"F", 1}}), ValidationError);
}

TEST_CASE("numerical pullback is exact on random graphs") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> inc(0, 3);
  int tested = 0;
  while (tested < 300) {
    auto g = oracle::random_graph(rng, 8, -6, -1, 0);
    if (!is_negative_definite(g)) continue;
    std::map<std::string, Rational> incidence;
    for (const auto& v : g.vertices()) {
      Rational x(inc(rng), 1 + inc(rng));
      x.canonicalize();
      incidence[v.id] = x;
    }
    auto gamma = coefficients_on(g, numerical_pullback(g, incidence));
    auto m = intersection_matrix(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      Rational row = incidence[g.vertex(i).id];
      for (std::size_t j = 0; j < g.size(); ++j) row += m(i, j) * gamma[j];
      REQUIRE(row == 0);
    }
    ++tested;
  }
}

TEST_CASE("codiscrepancy examples") {
  CHECK(codiscrepancy(graphs::single(-2)).empty());
  CHECK(codiscrepancy(graphs::single(-3)).coefficient("E") == Rational(1, 3));
  CHECK(codiscrepancy(graphs::single(-1, 2)).coefficient("E") == 1);
}

TEST_CASE("codiscrepancy of ADE graphs vanishes") {
  for (int n = 1; n <= 8; ++n) CHECK(codiscrepancy(graphs::a_n(n)).empty());
  CHECK(codiscrepancy(graphs::d4()).empty());
  // E6: chain of five with a tail on the middle vertex
  std::vector<int> five(5, -2);
  auto chain = graphs::chain(five);
  std::vector<GraphVertex> v = chain.vertices();
  auto e = chain.edges();
  v.push_back({"T", -2, 0});
  e.push_back({"E3", "T", 1});
  CHECK(codiscrepancy(ExceptionalGraph(v, e)).empty());
}

TEST_CASE("codiscrepancy of log canonical catalogue lies in [0,1]") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> self(-5, -2), len(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> selfs(len(rng));
    for (auto& s : selfs) s = self(rng);
    std::vector<ExceptionalGraph> cases;
    cases.push_back(graphs::chain(selfs, {{"E1", 1}}));
    auto marks = std::map<std::string, int>{{"E1", 1}};
    marks["E" + std::to_string(selfs.size())] += 1;
    cases.push_back(graphs::chain(selfs, marks));
    cases.push_back(graphs::chain(selfs));
    for (const auto& g : cases) {
      const auto lambda = codiscrepancy(g);
      for (const auto& [id, c] : lambda.terms()) {
        CHECK(c >= 0);
        CHECK(c <= 1);
      }
    }
  }
  for (int n = 2; n <= 6; ++n) {
    const auto lambda = codiscrepancy(graphs::dh(n));
    for (const auto& [id, c] : lambda.terms()) {
      CHECK(c >= 0);
      CHECK(c <= 1);
    }
  }
}

TEST_CASE("classification of the catalogue") {
  CHECK(classify_graph(graphs::chain({-2, -3}, {{"E1", 1}})) == GraphType::C1);
  CHECK(classify_graph(graphs::chain({-2, -3}, {{"E2", 1}})) == GraphType::C1);
  CHECK(classify_graph(graphs::chain({-2, -3, -2}, {{"E2", 1}})) == GraphType::Unclassified);
  CHECK(classify_graph(graphs::chain({-2, -3}, {{"E1", 1}, {"E2", 1}})) == GraphType::C2);
  CHECK(classify_graph(graphs::single(-1, 2)) == GraphType::C2);
  CHECK(classify_graph(graphs::single(-1, 2), GluingContext::Cyclic) == GraphType::CycleDegenerateCusp);
  for (int n = 2; n <= 5; ++n) CHECK(classify_graph(graphs::dh(n)) == GraphType::Dh);
  CHECK(classify_graph(graphs::a_n(3)) == GraphType::LcNormal);
  CHECK(classify_graph(graphs::single(-2, 3)) == GraphType::Unclassified);
}

TEST_CASE("different coefficients") {
  CHECK(different_coefficient(graphs::chain({-2, -2}, {{"E1", 1}}), "E1") == Rational(2, 3));
  CHECK(different_coefficient(graphs::single(-3, 1), "E") == Rational(2, 3));
  CHECK(different_coefficient(graphs::chain({-2, -3}, {{"E1", 1}, {"E2", 1}}), "E2") == 1);
  CHECK(different_coefficient(graphs::dh(3), "E1") == 1);
  CHECK_THROWS_AS(different_coefficient(graphs::single(-2, 3), "E"), Unclassified);
}

TEST_CASE("permutation keeps the graph") {
  auto g = graphs::dh(3);
  std::vector<std::size_t> order{4, 2, 0, 1, 3};
  auto p = g.permuted(order);
  CHECK(p.vertex(4).id == "E1");
  CHECK(p.marks(4) == 1);
  CHECK(graph_determinant(p) == graph_determinant(g));
}

}
