#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graphs.hpp"
#include "oracles.hpp"
#include "slc/cycles.hpp"
#include "slc/errors.hpp"

using namespace slc;

namespace {

std::vector<long> mark_offset(const ExceptionalGraph& g) {
  std::vector<long> offset(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) offset[i] = g.marks(i);
  return offset;
}

void check_inequalities(const ExceptionalGraph& g, const LatticeCycle& z, const std::vector<long>& offset) {
  std::vector<Rational> off(offset.begin(), offset.end());
  for (const auto& v : intersections(g, z.to_rational(), off)) CHECK(v <= 0);
}

}  // namespace

TEST_SUITE("cycles") {

TEST_CASE("semi-numerical cycle examples") {
  CHECK(semi_numerical_cycle(graphs::single(-1, 2)).to_string() == "2E");
  CHECK(semi_numerical_cycle(graphs::single(-2, 1)).to_string() == "E");
  for (int n = 2; n <= 5; ++n) {
    auto z = semi_numerical_cycle(graphs::dh(n));
    CHECK(z.coefficient("E'") == 1);
    CHECK(z.coefficient("E''") == 1);
    for (int j = 1; j <= n; ++j) CHECK(z.coefficient("E" + std::to_string(j)) == 2);
  }
  CHECK(semi_numerical_cycle(graphs::dh(2)).to_string() == "2E1 + 2E2 + E' + E''");
}

TEST_CASE("fundamental cycle examples") {
  for (int n = 1; n <= 7; ++n) {
    auto z = fundamental_cycle(graphs::a_n(n));
    CHECK(std::all_of(z.coefficients().begin(), z.coefficients().end(), [](long a) { return a == 1; }));
  }
  auto d4 = fundamental_cycle(graphs::d4());
  CHECK(d4.coefficients() == std::vector<long>{2, 1, 1, 1});
  auto dot = intersections(graphs::d4(), d4.to_rational(), std::vector<Rational>(4));
  CHECK(dot == std::vector<Rational>{-1, 0, 0, 0});
  CHECK(fundamental_cycle(graphs::single(-3)).to_string() == "E");
  CHECK_THROWS_AS(fundamental_cycle(graphs::single(-2, 1)), ValidationError);
}

TEST_CASE("cycle errors") {
  ExceptionalGraph two({{"A", -2, 0}, {"B", -2, 0}}, {});
  CHECK_THROWS_AS(semi_numerical_cycle(two), Disconnected);
  CHECK_THROWS_AS(semi_numerical_cycle(graphs::chain({-1, -1})), NotNegativeDefinite);
  CHECK_THROWS_AS(hat_transform(graphs::chain({-1, -1}), {}), NotNegativeDefinite);
}

TEST_CASE("hat transform examples") {
  CHECK(hat_transform(ExceptionalGraph(), {}).is_zero());
  auto a2 = hat_transform(graphs::a_n(2), {{"E1", 1}});
  CHECK(a2.coefficients() == std::vector<long>{1, 1});
  CHECK(hat_transform(graphs::a_n(3), {}).is_zero());
}

TEST_CASE("hat transform equals pullback for Cartier curves") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(0, 3);
  int tested = 0;
  while (tested < 200) {
    auto g = oracle::random_graph(rng, 6, -4, -1, 0);
    if (!is_negative_definite(g)) continue;
    auto m = intersection_matrix(g);
    std::vector<long> gamma(g.size());
    for (auto& a : gamma) a = coeff(rng);
    // B.E_i = -(M gamma)_i must be a non-negative incidence
    std::map<std::string, long> incidence;
    bool effective = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      long row = 0;
      for (std::size_t j = 0; j < g.size(); ++j) row += m(i, j) * gamma[j];
      if (row > 0) effective = false;
      incidence[g.vertex(i).id] = -row;
    }
    if (!effective) continue;
    auto hat = hat_transform(g, incidence);
    std::map<std::string, Rational> q(incidence.begin(), incidence.end());
    CHECK(hat.to_rational() == coefficients_on(g, numerical_pullback(g, q)));
    ++tested;
  }
}

TEST_CASE("iterative cycles are the lattice minimum") {
  std::mt19937 rng(23);
  int semi = 0, hat = 0;
  while (semi < 120) {
    auto g = oracle::random_graph(rng, 6, -4, -1, 2);
    if (!is_negative_definite(g)) continue;
    auto offset = mark_offset(g);
    auto expected = oracle::minimal_cycle(g, offset, true);
    if (!expected) continue;
    auto z = semi_numerical_cycle(g);
    REQUIRE(z.coefficients() == *expected);
    check_inequalities(g, z, offset);
    ++semi;

    std::uniform_int_distribution<int> inc(0, 2);
    std::map<std::string, long> incidence;
    std::vector<long> hat_offset(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) incidence[g.vertex(i).id] = hat_offset[i] = inc(rng);
    auto expected_hat = oracle::minimal_cycle(g, hat_offset, false);
    if (!expected_hat) continue;
    REQUIRE(hat_transform(g, incidence).coefficients() == *expected_hat);
    ++hat;
  }
  CHECK(hat > 50);
}

TEST_CASE("fundamental cycle agrees with the oracle on ADE graphs") {
  for (int n = 1; n <= 6; ++n)
    CHECK(fundamental_cycle(graphs::a_n(n)).coefficients() ==
          *oracle::minimal_cycle(graphs::a_n(n), std::vector<long>(n), true));
  CHECK(fundamental_cycle(graphs::d4()).coefficients() ==
        *oracle::minimal_cycle(graphs::d4(), std::vector<long>(4), true));
}

TEST_CASE("cycles do not depend on vertex order") {
  std::mt19937 rng(29);
  int tested = 0;
  while (tested < 150) {
    auto g = oracle::random_graph(rng, 6, -4, -1, 2);
    if (!is_negative_definite(g)) continue;
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    auto p = g.permuted(order);
    auto z = semi_numerical_cycle(g);
    auto zp = semi_numerical_cycle(p);
    for (const auto& v : g.vertices()) REQUIRE(z.coefficient(v.id) == zp.coefficient(v.id));

    std::map<std::string, long> incidence{{g.vertex(0).id, 1}};
    auto h = hat_transform(g, incidence);
    auto hp = hat_transform(p, incidence);
    for (const auto& v : g.vertices()) REQUIRE(h.coefficient(v.id) == hp.coefficient(v.id));
    ++tested;
  }
}

TEST_CASE("hat transform dominates the numerical pullback") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> inc(0, 3);
  int tested = 0;
  while (tested < 300) {
    auto g = oracle::random_graph(rng, 6, -5, -1, 0);
    if (!is_negative_definite(g)) continue;
    std::map<std::string, long> incidence;
    std::map<std::string, Rational> q;
    for (const auto& v : g.vertices()) q[v.id] = incidence[v.id] = inc(rng);
    auto hat = hat_transform(g, incidence).to_rational();
    auto star = coefficients_on(g, numerical_pullback(g, q));
    for (std::size_t i = 0; i < g.size(); ++i) REQUIRE(hat[i] >= star[i]);
    ++tested;
  }
}

TEST_CASE("cycle rendering") {
  CHECK(LatticeCycle({"A", "B"}, {0, 0}).to_string() == "0");
  CHECK(LatticeCycle({"A", "B"}, {3, 1}).to_string() == "3A + B");
  CHECK(LatticeCycle({"A"}, {2}).to_divisor().coefficient("A") == 2);
}

}
