// Assembles the reduced Hamiltonian for a given (N, k) by both routes,
// confirms they agree, and prints the spec as JSON on stdout; the potential
// matrix at a sample interior point goes to stderr as commentary.

#include "spinsuth/json_io.hpp"

#include <cstdlib>
#include <iostream>
#include <numbers>

using namespace spinsuth;

int main(int argc, char** argv) {
  const int N = argc > 1 ? std::atoi(argv[1]) : 3;
  const long long k = argc > 2 ? std::atoll(argv[2]) : 1;

  const HamiltonianSpec generic = assemble_generic(N, k);
  const HamiltonianSpec closed = assemble_closed_form(N, k);
  if (const auto diff = specs_difference(generic, closed)) {
    std::cerr << "assembly routes disagree: " << *diff << "\n";
    return 1;
  }
  std::cout << json(closed).dump(2) << "\n";

  std::vector<double> q(static_cast<std::size_t>(closed.coords));
  for (std::size_t i = 0; i < q.size(); ++i)
    q[i] = std::numbers::pi / 4 * (1.0 - 0.3 * static_cast<double>(i));
  const EvalMatrix v = evaluate_potential(closed, q);
  std::cerr << "potential at q = (";
  for (std::size_t i = 0; i < q.size(); ++i) std::cerr << (i ? "," : "") << q[i];
  std::cerr << "):\n";
  for (std::size_t r = 0; r < v.dim; ++r) {
    for (std::size_t c = 0; c < v.dim; ++c) std::cerr << "  " << v.at(r, c);
    std::cerr << "\n";
  }
  return 0;
}
