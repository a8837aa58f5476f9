// Prints the predicted eigenvalue ladders of the twisted su(3) model for the
// first few bosonic levels, with exact values, multiplicities, and the
// dominant weights each level comes from.

#include "spinsuth/spectrum.hpp"

#include <iostream>

using namespace spinsuth;

int main() {
  for (long long k = 0; k <= 3; ++k) {
    std::cout << "twisted su(3), level " << k << "\n";
    const SpectrumPrediction p = spectrum_twisted_lowest(k, 3, 6);
    for (const auto& e : p.entries) {
      std::cout << "  " << rat_to_string(e.value) << "  (x" << e.multiplicity << ")  from";
      for (const auto& w : e.sources) {
        std::cout << " (";
        for (std::size_t i = 0; i < w.m.size(); ++i) std::cout << (i ? "," : "") << w.m[i];
        std::cout << ")";
      }
      std::cout << "\n";
    }
  }
  std::cout << "\nuntwisted su(2), coupling 1: ";
  for (const auto& e : spectrum_standard_lowest(1, 2, 6).entries)
    std::cout << rat_to_string(e.value) << " ";
  std::cout << "\n";
  return 0;
}
