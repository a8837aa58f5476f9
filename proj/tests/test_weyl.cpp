#include "spinsuth/weyl.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <random>
#include <set>

using namespace spinsuth;

namespace {

// Angular distance on the 2 pi torus, robust at the seam.
double torus_dist(double a, double b) {
  const double period = 2 * std::numbers::pi;
  double d = std::fmod(std::abs(a - b), period);
  return std::min(d, period - d);
}

std::vector<double> random_torus_point(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  std::vector<double> q(static_cast<std::size_t>(n));
  for (auto& x : q) x = u(rng);
  return q;
}

}  // namespace

TEST_CASE("group orders match the closed formula") {
  const std::pair<int, long long> table[] = {{3, 4},    {4, 16},   {5, 32},  {6, 192},
                                             {7, 384},  {8, 3072}, {9, 6144}};
  for (const auto& [N, order] : table) {
    CHECK(twisted_weyl_order(N) == order);
    if (N <= 6) CHECK(build_group(N).order() == static_cast<std::size_t>(order));
  }
  CHECK_THROWS_AS(twisted_weyl_order(2), std::invalid_argument);
  CHECK_THROWS_AS(build_group(2), std::invalid_argument);
}

TEST_CASE("group axioms hold on the enumerated elements") {
  for (int N : {5, 6}) {
    const TwistedWeylGroup g = build_group(N);
    const TwistedWeylElement id = weyl_identity(g.n);
    REQUIRE(std::binary_search(g.elements.begin(), g.elements.end(), id));
    for (const auto& w : g.elements) {
      CHECK(compose(w, inverse(w)) == id);
      CHECK(compose(inverse(w), w) == id);
      CHECK(compose(w, id) == w);
      CHECK(compose(id, w) == w);
    }
    // Closure.
    for (const auto& a : g.elements)
      for (const auto& b : g.elements)
        REQUIRE(std::binary_search(g.elements.begin(), g.elements.end(), compose(a, b)));
    // Associativity on sampled triples.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int t = 0; t < 200; ++t) {
      const auto& a = g.elements[pick(rng)];
      const auto& b = g.elements[pick(rng)];
      const auto& c = g.elements[pick(rng)];
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
  }
}

TEST_CASE("composition realizes the action on coordinates") {
  std::mt19937_64 rng(11);
  for (int N : {5, 6}) {
    const TwistedWeylGroup g = build_group(N);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int t = 0; t < 100; ++t) {
      const auto& a = g.elements[pick(rng)];
      const auto& b = g.elements[pick(rng)];
      const std::vector<double> q = random_torus_point(g.n, rng);
      const std::vector<double> lhs = act_on_q(compose(a, b), q);
      const std::vector<double> rhs = act_on_q(a, act_on_q(b, q));
      for (int i = 0; i < g.n; ++i) CHECK(torus_dist(lhs[i], rhs[i]) <= 1e-9);
    }
  }
}

TEST_CASE("translation signs multiply to one exactly when N is even") {
  for (int N : {4, 6}) {
    for (const auto& w : build_group(N).elements) {
      int prod = 1;
      for (int s : w.sigma) prod *= s;
      CHECK(prod == 1);
    }
  }
  const TwistedWeylGroup g5 = build_group(5);
  const auto odd_sigma = std::count_if(g5.elements.begin(), g5.elements.end(), [](const auto& w) {
    int prod = 1;
    for (int s : w.sigma) prod *= s;
    return prod == -1;
  });
  CHECK(odd_sigma == static_cast<long long>(g5.order()) / 2);
}

TEST_CASE("orbits tile the torus with one alcove representative") {
  std::mt19937_64 rng(23);
  for (int N : {3, 4, 5}) {
    const TwistedWeylGroup g = build_group(N);
    const Family family = twisted_family_for(N);
    for (int t = 0; t < 50; ++t) {
      const std::vector<double> x = random_torus_point(g.n, rng);
      int hits = 0;
      for (const auto& w : g.elements) {
        const std::vector<double> y = reduce_mod_2pi(act_on_q(w, x));
        if (alcove_contains(family, g.n, y)) ++hits;
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("named generators generate the whole group") {
  for (int N : {3, 4, 5, 6}) {
    const TwistedWeylGroup g = build_group(N);
    const std::size_t expected_count = static_cast<std::size_t>(std::max(0, g.n - 1)) + 1 +
                                       ((N % 2 == 0 && g.n < 2) ? 0 : 1);
    CHECK(g.generators.size() == expected_count);
    std::set<TwistedWeylElement> reached{weyl_identity(g.n)};
    std::queue<TwistedWeylElement> frontier;
    frontier.push(weyl_identity(g.n));
    while (!frontier.empty()) {
      const TwistedWeylElement w = frontier.front();
      frontier.pop();
      for (const auto& [name, gen] : g.generators) {
        REQUIRE(std::binary_search(g.elements.begin(), g.elements.end(), gen));
        REQUIRE_FALSE(name.empty());
        TwistedWeylElement next = compose(gen, w);
        if (reached.insert(next).second) frontier.push(std::move(next));
      }
    }
    CHECK(reached.size() == g.order());
  }
}

TEST_CASE("density and potential are group invariant") {
  for (const auto& [N, k] : std::vector<std::pair<int, long long>>{{3, 1}, {4, 2}, {5, 1}}) {
    const InvarianceCheck c = check_density_invariance(N, k, 25);
    INFO(c.witness);
    CHECK(c.pass);
    CHECK(c.trials == 25);
  }
  CHECK_THROWS_AS(check_density_invariance(3, 1, 0), std::invalid_argument);
}
