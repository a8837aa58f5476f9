#ifndef SPINSUTH_VERIFICATION_HPP
#define SPINSUTH_VERIFICATION_HPP

// End-to-end verification runners. Each check exercises one quantitative
// claim of the construction at its stated tolerance and reports pass/fail
// with a short diagnostic; run_all_checks executes the full battery in a
// fixed order. Exceptions are demoted to failures so a battery always
// produces a complete report.

#include "spinsuth/fdsolve.hpp"
#include "spinsuth/fock.hpp"
#include "spinsuth/hamiltonian.hpp"
#include "spinsuth/pieri.hpp"
#include "spinsuth/rootfold.hpp"
#include "spinsuth/spectrum.hpp"
#include "spinsuth/weights.hpp"
#include "spinsuth/weyl.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace spinsuth {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

inline CheckResult timed_check(const std::string& name,
                               const std::function<std::pair<bool, std::string>()>& body) {
  CheckResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    auto [pass, detail] = body();
    r.pass = pass;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// All dominant weights of su(N) with coefficients in 0..box.
template <typename Fn>
inline void for_each_weight_in_box(int N, long long box, Fn&& fn) {
  std::vector<long long> m(static_cast<std::size_t>(N - 1), 0);
  for (;;) {
    fn(DominantWeight{N, m});
    std::size_t i = 0;
    while (i < m.size() && m[i] == box) m[i++] = 0;
    if (i == m.size()) break;
    ++m[i];
  }
}

}  // namespace detail

// Exact squared norms of the half-sum of the folded positive system against
// the closed cubic formulas, both parities, ranks 1..5.
inline CheckResult check_weyl_vector_norms() {
  return detail::timed_check("weyl-vector-norms", []() -> std::pair<bool, std::string> {
    std::ostringstream detail;
    for (int n = 1; n <= 5; ++n) {
      for (Family family : {Family::a_odd, Family::a_even}) {
        const FoldedRootData d = build_folded_roots(family, n);
        const Rat got = rho_theta_norm(d, trace_form(family, n));
        const Rat want = (family == Family::a_odd)
                             ? rat(1LL * n * (2 * n - 1) * (2 * n + 1), 6)
                             : rat(2LL * n * (n + 1) * (2 * n + 1), 6);
        if (got != want)
          return {false, std::string(family_name(family)) + " n=" + std::to_string(n) + ": got " +
                             rat_to_string(got) + ", want " + rat_to_string(want)};
      }
    }
    // Spot values of the defining representation sizes 3..6.
    const std::vector<std::pair<int, Rat>> spots = {
        {3, rat(2)}, {4, rat(5)}, {5, rat(10)}, {6, rat(35, 2)}};
    for (const auto& [N, want] : spots) {
      const Family f = twisted_family_for(N);
      const Rat got = rho_theta_norm(build_folded_roots(f, N / 2), trace_form(f, N / 2));
      if (got != want)
        return {false, "su(" + std::to_string(N) + "): got " + rat_to_string(got)};
    }
    detail << "ranks 1..5 both parities exact; su(3..6) give 2, 5, 10, 35/2";
    return {true, detail.str()};
  });
}

// Second-order FD Laplacian of the half-density against -<rho,rho> times
// itself at random interior points, plus constancy of the ratio between the
// two density factorizations.
inline CheckResult check_half_density_laplace_identity() {
  return detail::timed_check("half-density-laplace-identity",
                             []() -> std::pair<bool, std::string> {
    struct Case {
      Family family;
      int n;
      const char* label;
    };
    std::vector<Case> cases;
    for (int N = 3; N <= 7; ++N) cases.push_back({twisted_family_for(N), N / 2, "twisted"});
    for (int N = 2; N <= 4; ++N) cases.push_back({Family::a_untwisted, N, "untwisted"});
    std::mt19937_64 rng(421357);
    const double h = 1e-4;
    double worst_residual = 0.0, worst_ratio = 0.0;
    for (const auto& c : cases) {
      const FoldedRootData data = build_folded_roots(c.family, c.n);
      const TraceForm form = trace_form(c.family, c.n);
      double fitted = 0.0;
      for (int t = 0; t < 100; ++t) {
        const AlcovePoint p = random_alcove_point(c.family, c.n, rng);
        const double res = laplace_identity_residual(data, form, p, h);
        worst_residual = std::max(worst_residual, res);
        if (!(res <= 1e-6)) {
          std::ostringstream os;
          os << c.label << " " << family_name(c.family) << " n=" << c.n
             << ": residual " << res << " at trial " << t;
          return {false, os.str()};
        }
        const double ds = density_sqrt(data, p);
        const double dp = density_sqrt_folded_product(data, std::span<const double>(p.q));
        if (t == 0) {
          fitted = ds / dp;
        } else {
          const double dev = std::abs(ds - fitted * dp) / std::abs(ds);
          worst_ratio = std::max(worst_ratio, dev);
          if (!(dev <= 1e-10)) {
            std::ostringstream os;
            os << c.label << " " << family_name(c.family) << " n=" << c.n
               << ": factorization ratio drift " << dev;
            return {false, os.str()};
          }
        }
      }
    }
    std::ostringstream os;
    os << "800 points; worst residual " << worst_residual << ", worst ratio drift "
       << worst_ratio;
    return {true, os.str()};
  });
}

// Closed dimension formulas versus brute-force enumeration of palindromic
// occupation states, exhaustively for N <= 9, k <= 10.
inline CheckResult check_invariant_dimension_formulas() {
  return detail::timed_check("invariant-dimension-formulas",
                             []() -> std::pair<bool, std::string> {
    long long combos = 0;
    for (int N = 3; N <= 9; ++N)
      for (long long k = 0; k <= 10; ++k) {
        const Int formula = dim_invariant(N, k);
        const InvariantFockBasis basis = invariant_basis(N, k);
        Int brute = 0;
        for (const FockState& s : fock_states(N, k)) {
          bool pal = true;
          for (int i = 0; i < N / 2 && pal; ++i)
            pal = s.occ[static_cast<std::size_t>(i)] ==
                  s.occ[static_cast<std::size_t>(N - 1 - i)];
          if (pal) ++brute;
        }
        if (formula != brute || formula != Int(basis.dim())) {
          std::ostringstream os;
          os << "N=" << N << " k=" << k << ": formula " << formula << ", brute " << brute
             << ", basis " << basis.dim();
          return {false, os.str()};
        }
        ++combos;
      }
    return {true, std::to_string(combos) + " (N,k) pairs exact"};
  });
}

// The two characterizations of the admissible weights must coincide on a
// coefficient box: self-conjugate-plus-palindromic parametrization versus
// direct membership of the conjugate in the level-k decomposition; each hit
// must be multiplicity-free, and the number of distinct shift weights must
// equal the invariant-space dimension.
inline CheckResult check_admissible_weight_parametrization() {
  return detail::timed_check("admissible-weight-parametrization",
                             []() -> std::pair<bool, std::string> {
    const long long box = 6;
    long long hits = 0;
    for (int N : {3, 4, 5, 6})
      for (long long k = 0; k <= 6; ++k) {
        const std::vector<DominantWeight> chis = twisted_chi_set(N, k);
        if (Int(static_cast<long long>(chis.size())) != dim_invariant(N, k)) {
          std::ostringstream os;
          os << "N=" << N << " k=" << k << ": " << chis.size()
             << " shift weights, dimension " << dim_invariant(N, k);
          return {false, os.str()};
        }
        std::string failure;
        long long local_hits = 0;
        detail::for_each_weight_in_box(N, box, [&](const DominantWeight& w) {
          if (!failure.empty()) return;
          const bool brute = pieri_contains(w, k, conjugate(w)).has_value();
          bool param = false;
          for (const DominantWeight& chi : chis) {
            DominantWeight mu = w;
            bool ok = true;
            for (std::size_t i = 0; i < mu.m.size(); ++i) {
              mu.m[i] -= chi.m[i];
              if (mu.m[i] < 0) ok = false;
            }
            if (ok && is_self_conjugate(mu)) {
              param = true;
              break;
            }
          }
          if (brute != param) {
            std::ostringstream os;
            os << "N=" << N << " k=" << k << " weight (";
            for (std::size_t i = 0; i < w.m.size(); ++i) os << (i ? "," : "") << w.m[i];
            os << "): decomposition membership " << brute << ", parametrization " << param;
            failure = os.str();
            return;
          }
          if (brute) {
            ++local_hits;
            const DominantWeight target = conjugate(w);
            long long mult = 0;
            for (const DominantWeight& t : pieri_oracle(w, k))
              if (t == target) ++mult;
            if (mult != 1) {
              std::ostringstream os;
              os << "N=" << N << " k=" << k << ": multiplicity " << mult << " (want 1)";
              failure = os.str();
            }
          }
        });
        if (!failure.empty()) return {false, failure};
        hits += local_hits;
      }
    return {true, std::to_string(hits) + " admissible hits across the boxes, all multiplicity 1"};
  });
}

// Capacity-vector decomposition against the horizontal-strip oracle,
// exhaustively over small weights.
inline CheckResult check_pieri_dual_oracle() {
  return detail::timed_check("pieri-dual-oracle", []() -> std::pair<bool, std::string> {
    long long cases = 0;
    for (int N = 2; N <= 5; ++N) {
      std::string failure;
      detail::for_each_weight_in_box(N, 3, [&](const DominantWeight& w) {
        if (!failure.empty()) return;
        for (long long k = 0; k <= 4; ++k) {
          std::vector<DominantWeight> fast;
          for (const PieriTerm& t : pieri_decompose(w, k)) fast.push_back(t.weight);
          std::vector<DominantWeight> slow = pieri_oracle(w, k);
          std::sort(fast.begin(), fast.end());
          std::sort(slow.begin(), slow.end());
          if (fast != slow) {
            std::ostringstream os;
            os << "N=" << N << " k=" << k << " weight (";
            for (std::size_t i = 0; i < w.m.size(); ++i) os << (i ? "," : "") << w.m[i];
            os << "): " << fast.size() << " vs " << slow.size() << " terms";
            failure = os.str();
            return;
          }
          ++cases;
        }
      });
      if (!failure.empty()) return {false, failure};
    }
    return {true, std::to_string(cases) + " (weight,k) decompositions identical"};
  });
}

// The generator-product route and the grouped closed-form route must produce
// identical exact Hamiltonians.
inline CheckResult check_hamiltonian_route_equivalence() {
  return detail::timed_check("hamiltonian-route-equivalence",
                             []() -> std::pair<bool, std::string> {
    int specs = 0;
    for (int N : {3, 4, 5, 6})
      for (long long k = 0; k <= 4; ++k) {
        if (N % 2 == 0 && k % 2 != 0) continue;  // empty spin space
        const HamiltonianSpec generic = assemble_generic(N, k);
        const HamiltonianSpec closed = assemble_closed_form(N, k);
        if (auto diff = specs_difference(generic, closed)) {
          return {false, "N=" + std::to_string(N) + " k=" + std::to_string(k) + ": " + *diff};
        }
        ++specs;
      }
    return {true, std::to_string(specs) + " spec pairs identical term by term"};
  });
}

// FD spectra of the untwisted two-particle model against the exact squares.
inline CheckResult check_untwisted_spectrum_fd_match() {
  return detail::timed_check("untwisted-spectrum-fd-match",
                             []() -> std::pair<bool, std::string> {
    std::ostringstream detail;
    for (long long gamma : {1LL, 2LL}) {
      const long long g = gamma + 1;
      const HamiltonianSpec spec = untwisted_su2_relative(gamma);
      const SpectrumPrediction predicted = spectrum_standard_lowest(gamma, 2, 5);
      for (std::size_t i = 0; i < predicted.entries.size(); ++i) {
        const long long a = static_cast<long long>(i);
        if (predicted.entries[i].value != rat((a + g) * (a + g)) ||
            predicted.entries[i].multiplicity != 1)
          return {false, "prediction is not the square ladder at g=" + std::to_string(g)};
      }
      std::vector<double> fd = fd_eigenvalues(FDProblem{spec, 16384}, 5);
      for (double& v : fd) v = 2.0 * v + 1.0;  // relative-coordinate value to full spectrum
      const SpectrumReport base = compare(fd, predicted, 1e-4);
      if (!base.pass)
        return {false, "g=" + std::to_string(g) +
                           " single grid: " + format_report_table(base)};
      RichardsonResult rich = richardson(spec, 5, {16384, 32769});
      for (double& v : rich.values) v = 2.0 * v + 1.0;
      const SpectrumReport extr = compare(rich.values, predicted, 1e-6);
      if (!extr.pass)
        return {false, "g=" + std::to_string(g) +
                           " extrapolated: " + format_report_table(extr)};
      detail << "g=" << g << " max rel err " << base.max_relative_error << " (grid), "
             << extr.max_relative_error << " (extrapolated); ";
    }
    return {true, detail.str()};
  });
}

// FD spectra of the twisted models against the exact predictions, including
// the arbitration between the two Cartan normalization conventions.
inline CheckResult check_twisted_spectrum_fd_match() {
  return detail::timed_check("twisted-spectrum-fd-match",
                             []() -> std::pair<bool, std::string> {
    std::ostringstream detail;
    {
      const SpectrumPrediction predicted = spectrum_twisted_lowest(1, 3, 5);
      for (std::size_t i = 0; i < predicted.entries.size(); ++i) {
        const long long a = static_cast<long long>(i);
        const Rat want = rat(2 * a * a + 6 * a) + rat(8, 3);
        if (predicted.entries[i].value != want || predicted.entries[i].multiplicity != 1)
          return {false, "twisted su(3) level-1 prediction differs from 2a^2+6a+8/3"};
      }
      const HamiltonianSpec amended = assemble_closed_form(3, 1);
      const std::vector<double> fd = fd_eigenvalues(FDProblem{amended, 16384}, 5);
      const SpectrumReport rep = compare(fd, predicted, 1e-4);
      if (!rep.pass) return {false, "su(3) k=1: " + format_report_table(rep)};
      detail << "su(3) k=1 max rel err " << rep.max_relative_error << "; ";

      const HamiltonianSpec printed =
          assemble_closed_form(3, 1, CartanVariant::inverse_2n);
      const std::vector<double> fd_p = fd_eigenvalues(FDProblem{printed, 16384}, 5);
      const SpectrumReport rep_p = compare(fd_p, predicted, 1e-4);
      if (rep_p.pass)
        return {false, "alternative Cartan normalization unexpectedly matches"};
      if (std::abs(rep_p.mean_offset + 1.0 / 6.0) > 2e-3)
        return {false, "alternative normalization offset " + std::to_string(rep_p.mean_offset) +
                           ", expected -1/6"};
      for (std::size_t i = 0; i < rep_p.relative_errors.size(); ++i) {
        const double off = rep_p.computed[i] - rep_p.predicted[i];
        if (std::abs(off - rep_p.mean_offset) > 2e-3)
          return {false, "alternative normalization offset not uniform at level " +
                             std::to_string(i)};
      }
      detail << "inv-2n variant fails with uniform offset " << rep_p.mean_offset << "; ";
    }
    {
      const SpectrumPrediction predicted = spectrum_twisted_lowest(2, 3, 6);
      const HamiltonianSpec spec = assemble_closed_form(3, 2);
      const std::vector<double> fd = fd_eigenvalues(FDProblem{spec, 16384}, 6);
      const SpectrumReport rep = compare(fd, predicted, 1e-3);
      if (!rep.pass) return {false, "su(3) k=2: " + format_report_table(rep)};
      detail << "su(3) k=2 (2x2 spin) max rel err " << rep.max_relative_error;
    }
    return {true, detail.str()};
  });
}

// Group orders against the closed formulas and invariance of the reduced
// data under random group elements.
inline CheckResult check_weyl_group_structure() {
  return detail::timed_check("weyl-group-structure-and-invariance",
                             []() -> std::pair<bool, std::string> {
    const std::vector<std::pair<int, long long>> orders = {{3, 4},   {4, 16},   {5, 32},  {6, 192},
                                                           {7, 384}, {8, 3072}, {9, 6144}};
    for (const auto& [N, want] : orders) {
      const TwistedWeylGroup g = build_group(N);
      if (static_cast<long long>(g.order()) != want || twisted_weyl_order(N) != want)
        return {false, "N=" + std::to_string(N) + ": order " + std::to_string(g.order()) +
                           ", want " + std::to_string(want)};
    }
    std::ostringstream detail;
    detail << "orders 4,16,32,192,384,3072,6144 confirmed; ";
    for (int N = 3; N <= 9; ++N) {
      const long long k = (N % 2 == 0) ? 2 : 1;
      const InvarianceCheck c = check_density_invariance(N, k, 100);
      if (!c.pass)
        return {false, "N=" + std::to_string(N) + " k=" + std::to_string(k) + ": " + c.witness};
    }
    detail << "invariance 100 trials each for N=3..9";
    return {true, detail.str()};
  });
}

// Fixed-order table of every check; callers may run entries concurrently and
// merge results back in this order.
inline const std::vector<CheckResult (*)()>& all_checks() {
  static const std::vector<CheckResult (*)()> table = {
      &check_weyl_vector_norms,
      &check_half_density_laplace_identity,
      &check_invariant_dimension_formulas,
      &check_admissible_weight_parametrization,
      &check_pieri_dual_oracle,
      &check_hamiltonian_route_equivalence,
      &check_untwisted_spectrum_fd_match,
      &check_twisted_spectrum_fd_match,
      &check_weyl_group_structure,
  };
  return table;
}

inline std::vector<CheckResult> run_all_checks() {
  std::vector<CheckResult> out;
  for (auto* fn : all_checks()) out.push_back(fn());
  return out;
}

}  // namespace spinsuth

#endif
