// Shows the twisted symmetry group tiling the coordinate torus: the orbit of
// a random point visits each chamber once, and exactly one image lands in the
// fundamental alcove.

#include "spinsuth/weyl.hpp"

#include <iostream>
#include <random>

using namespace spinsuth;

int main(int argc, char** argv) {
  const int N = argc > 1 ? std::atoi(argv[1]) : 4;
  const TwistedWeylGroup g = build_group(N);
  const Family family = twisted_family_for(N);
  std::cout << "su(" << N << "): group order " << g.order() << ", " << g.n
            << " coordinate(s)\n";

  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  std::vector<double> x(static_cast<std::size_t>(g.n));
  for (auto& c : x) c = u(rng);

  int in_alcove = 0;
  for (const auto& w : g.elements) {
    const std::vector<double> y = reduce_mod_2pi(act_on_q(w, x));
    if (alcove_contains(family, g.n, y)) {
      ++in_alcove;
      std::cout << "alcove representative: (";
      for (std::size_t i = 0; i < y.size(); ++i) std::cout << (i ? "," : "") << y[i];
      std::cout << ")\n";
    }
  }
  std::cout << "orbit size " << g.order() << ", alcove hits " << in_alcove << "\n";
  return in_alcove == 1 ? 0 : 1;
}
