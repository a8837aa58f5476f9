#ifndef SPINSUTH_FDSOLVE_HPP
#define SPINSUTH_FDSOLVE_HPP

// Finite-difference eigensolver for rank-1 Hamiltonians and the comparison
// harness against exact spectrum predictions.
//
// The operator -(c d^2/dq^2 + constant + potential) is discretized on the
// uniform interior grid q_j = j h, j = 1..P, h = L/(P+1), with homogeneous
// vanishing boundary values at both walls. The boundary condition is
// justified by the vanishing of the half-density at the alcove walls; the
// repulsive inverse-square growth of the potential there enforces the
// correct wall behavior on its own, and the spectral match against the
// closed-form predictions validates the choice a posteriori.
//
// Discrete operator: block tridiagonal, diagonal blocks
// (2c/h^2) I - V(q_j), off-diagonal blocks -(c/h^2) I; exactly symmetric by
// construction. Scalar problems go through bisection on the tridiagonal
// matrix, matrix-valued ones through the banded symmetric solver.

#include "spinsuth/hamiltonian.hpp"
#include "spinsuth/spectrum.hpp"

#include <lapacke.h>

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinsuth {

struct FDProblem {
  HamiltonianSpec spec;  // one configuration coordinate
  int grid_points = 16384;
};

namespace detail {

inline void check_lapack_info(lapack_int info, const char* routine) {
  if (info < 0)
    throw std::logic_error(std::string(routine) + ": invalid argument " +
                           std::to_string(-info));
  if (info > 0)
    throw std::runtime_error(std::string(routine) + ": eigensolver did not converge (info=" +
                             std::to_string(info) + ")");
}

}  // namespace detail

// Lowest `count` eigenvalues of a dense symmetric matrix (row-major, n x n).
inline std::vector<double> symmetric_eigenvalues(std::size_t n, std::vector<double> a,
                                                 std::size_t count) {
  if (count > n) throw std::invalid_argument("count exceeds matrix dimension");
  std::vector<double> w(n);
  const lapack_int info = LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'N', 'U', static_cast<lapack_int>(n),
                                        a.data(), static_cast<lapack_int>(n), w.data());
  detail::check_lapack_info(info, "dsyev");
  w.resize(count);
  return w;
}

inline std::vector<double> fd_eigenvalues(const FDProblem& problem, int count) {
  const HamiltonianSpec& spec = problem.spec;
  if (spec.coords != 1)
    throw std::invalid_argument("finite differences require a one-coordinate Hamiltonian");
  if (!(spec.interval_upper > 0.0)) throw std::invalid_argument("missing interval upper end");
  const int P = problem.grid_points;
  if (P < 100) throw std::invalid_argument("grid must have at least 100 points");
  const std::size_t m = spec.dim();
  const std::size_t ntot = static_cast<std::size_t>(P) * m;
  if (count < 1 || static_cast<std::size_t>(count) > ntot)
    throw std::invalid_argument("eigenvalue count out of range");
  if (ntot > (std::size_t{1} << 22))
    throw std::invalid_argument("grid times spin dimension exceeds the memory budget");

  const double L = spec.interval_upper;
  const double h = L / (P + 1);
  const double c = rat_to_double(spec.kinetic_coefficient);
  const double diag_kin = 2.0 * c / (h * h);
  const double off_kin = -c / (h * h);
  // Bisection tolerance well below the discretization error but above the
  // roundoff floor of the shifted Sturm counts.
  const double abstol = 1e-12;

  if (m == 1) {
    std::vector<double> d(ntot), e(ntot > 1 ? ntot - 1 : 0, off_kin);
    double q[1];
    for (int j = 1; j <= P; ++j) {
      q[0] = j * h;
      d[static_cast<std::size_t>(j - 1)] = diag_kin - evaluate_potential(spec, q).a[0];
    }
    std::vector<double> w(ntot);
    std::vector<lapack_int> iblock(ntot), isplit(ntot);
    lapack_int found = 0, nsplit = 0;
    const lapack_int info = LAPACKE_dstebz('I', 'E', static_cast<lapack_int>(ntot), 0.0, 0.0, 1,
                                           count, abstol, d.data(), e.data(), &found, &nsplit,
                                           w.data(), iblock.data(), isplit.data());
    detail::check_lapack_info(info, "dstebz");
    if (found < count) throw std::runtime_error("dstebz returned fewer eigenvalues than asked");
    w.resize(static_cast<std::size_t>(count));
    return w;
  }

  const std::size_t kd = m;  // block coupling sits exactly m below the diagonal
  const std::size_t ldab = kd + 1;
  std::vector<double> ab(ldab * ntot, 0.0);
  std::vector<double> qpt(1);
  for (int j = 1; j <= P; ++j) {
    qpt[0] = j * h;
    const EvalMatrix V = evaluate_potential(spec, std::span<const double>(qpt));
    const std::size_t base = static_cast<std::size_t>(j - 1) * m;
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t col = base + b;
      ab[col * ldab] = diag_kin - V.at(b, b);
      for (std::size_t a = b + 1; a < m; ++a) ab[col * ldab + (a - b)] = -V.at(a, b);
      if (j < P) ab[col * ldab + kd] = off_kin;
    }
  }
  std::vector<double> w(ntot);
  std::vector<lapack_int> ifail(ntot);
  double qdummy[1];
  double zdummy[1];
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsbevx(
      LAPACK_COL_MAJOR, 'N', 'I', 'L', static_cast<lapack_int>(ntot),
      static_cast<lapack_int>(kd), ab.data(), static_cast<lapack_int>(ldab), qdummy, 1, 0.0, 0.0,
      1, count, abstol, &found, w.data(), zdummy, 1, ifail.data());
  detail::check_lapack_info(info, "dsbevx");
  if (found < count) throw std::runtime_error("dsbevx returned fewer eigenvalues than asked");
  w.resize(static_cast<std::size_t>(count));
  return w;
}

struct RichardsonResult {
  std::vector<double> values;                 // h^2-extrapolated from the two finest grids
  std::vector<std::vector<double>> per_grid;  // one entry per grid, coarsest first
  std::vector<double> error_estimate;         // |finest - extrapolated|
  bool monotone = true;                       // false flags irregular convergence
};

// Grids must refine in exact 1:2 mesh steps: P, then 2P+1, then 4P+3, ...
inline RichardsonResult richardson(const HamiltonianSpec& spec, int count,
                                   std::vector<int> grids) {
  if (grids.size() < 2) throw std::invalid_argument("extrapolation needs at least two grids");
  std::sort(grids.begin(), grids.end());
  for (std::size_t g = 0; g + 1 < grids.size(); ++g)
    if (grids[g + 1] != 2 * grids[g] + 1)
      throw std::invalid_argument("grids must refine in exact 1:2 steps (P, then 2P+1)");
  RichardsonResult r;
  for (int P : grids) r.per_grid.push_back(fd_eigenvalues(FDProblem{spec, P}, count));
  const auto& fine = r.per_grid.back();
  const auto& mid = r.per_grid[r.per_grid.size() - 2];
  r.values.resize(static_cast<std::size_t>(count));
  r.error_estimate.resize(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    r.values[ui] = (4.0 * fine[ui] - mid[ui]) / 3.0;
    r.error_estimate[ui] = std::abs(fine[ui] - r.values[ui]);
  }
  if (r.per_grid.size() >= 3) {
    for (int i = 0; i < count && r.monotone; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      for (std::size_t g = 0; g + 2 < r.per_grid.size(); ++g) {
        const double d0 = r.per_grid[g + 1][ui] - r.per_grid[g][ui];
        const double d1 = r.per_grid[g + 2][ui] - r.per_grid[g + 1][ui];
        const double floor = 1e-11 * std::max(1.0, std::abs(r.per_grid[g + 2][ui]));
        if (std::abs(d1) < floor) continue;  // converged to roundoff
        if (std::abs(d1) > std::abs(d0) || d0 * d1 < 0.0) {
          r.monotone = false;
          break;
        }
      }
    }
  }
  return r;
}

inline RichardsonResult richardson(const FDProblem& problem, int count) {
  return richardson(problem.spec, count, {problem.grid_points, 2 * problem.grid_points + 1});
}

struct SpectrumReport {
  std::vector<double> computed;
  std::vector<double> predicted;             // expanded by multiplicity, ascending
  std::vector<std::string> predicted_exact;  // rational strings, same order
  std::vector<double> relative_errors;       // per compared pair
  double tolerance = 0.0;
  double max_relative_error = 0.0;
  double mean_offset = 0.0;  // mean of computed - predicted (constant-shift diagnosis)
  bool pass = false;
  std::string note;
};

// Pair the computed levels against the prediction expanded by multiplicity,
// both ascending; every relative error must clear the tolerance.
inline SpectrumReport compare(const std::vector<double>& computed,
                              const SpectrumPrediction& predicted, double tol) {
  SpectrumReport rep;
  rep.computed = computed;
  rep.tolerance = tol;
  for (const auto& entry : predicted.entries)
    for (int c = 0; c < entry.multiplicity; ++c) {
      rep.predicted.push_back(rat_to_double(entry.value));
      rep.predicted_exact.push_back(rat_to_string(entry.value));
    }
  const std::size_t paired = std::min(rep.computed.size(), rep.predicted.size());
  bool all_below = true;
  double offset_sum = 0.0;
  for (std::size_t i = 0; i < paired; ++i) {
    const double p = rep.predicted[i];
    const double diff = rep.computed[i] - p;
    const double rel = std::abs(diff) / (p == 0.0 ? 1.0 : std::abs(p));
    rep.relative_errors.push_back(rel);
    rep.max_relative_error = std::max(rep.max_relative_error, rel);
    offset_sum += diff;
    if (!(rel <= tol)) all_below = false;
  }
  if (paired > 0) rep.mean_offset = offset_sum / static_cast<double>(paired);
  rep.pass = all_below;
  if (rep.predicted.size() < rep.computed.size()) {
    rep.pass = false;
    std::ostringstream os;
    os << "prediction provides only " << rep.predicted.size() << " levels for "
       << rep.computed.size() << " computed ones";
    rep.note = os.str();
  }
  return rep;
}

inline std::string format_report_table(const SpectrumReport& rep) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << std::setw(5) << "level" << std::setw(22) << "computed" << std::setw(22) << "predicted"
     << std::setw(16) << "exact" << std::setw(14) << "rel.err" << "\n";
  for (std::size_t i = 0; i < rep.relative_errors.size(); ++i)
    os << std::setw(5) << i << std::setw(22) << rep.computed[i] << std::setw(22)
       << rep.predicted[i] << std::setw(16) << rep.predicted_exact[i] << std::setw(14)
       << std::setprecision(3) << rep.relative_errors[i] << std::setprecision(12) << "\n";
  os << (rep.pass ? "pass" : "FAIL") << "  max rel err " << std::setprecision(3)
     << rep.max_relative_error << ", tolerance " << rep.tolerance << ", mean offset "
     << std::setprecision(6) << rep.mean_offset << "\n";
  if (!rep.note.empty()) os << rep.note << "\n";
  return os.str();
}

// Calibration problems with closed-form spectra.

// -(c d^2/dq^2) on (0, upper): eigenvalues c (m pi / upper)^2, m = 1, 2, ...
inline HamiltonianSpec free_box_spec(const Rat& kinetic, double upper) {
  HamiltonianSpec spec;
  spec.family = Family::a_untwisted;
  spec.N = 0;
  spec.coords = 1;
  spec.kinetic_coefficient = kinetic;
  spec.constant_term = RatMat(1, 1);
  spec.basis_norm2 = {Int(1)};
  spec.interval_upper = upper;
  return spec;
}

// -psi'' + g(g-1)/sin^2(q) psi on (0, pi): eigenvalues (m+g)^2, m = 0, 1, ...
inline HamiltonianSpec poschl_teller_spec(long long g) {
  if (g < 1) throw std::invalid_argument("coupling parameter must be >= 1");
  HamiltonianSpec spec = free_box_spec(rat(1), std::numbers::pi);
  PotentialTerm t;
  t.kind = TrigKind::inv_sin_sq;
  t.argument = basis_form(1, 1);
  t.scale = rat(1);
  t.coefficient = RatMat(1, 1);
  t.coefficient.at(0, 0) = rat(-g * (g - 1));
  spec.potential_terms.push_back(std::move(t));
  return spec;
}

// Two-coordinate solver on the alcove (exploratory; not part of the
// acceptance gate). Uniform grid over the bounding box, masked to the open
// alcove, vanishing values outside; dense symmetric solve.
inline std::vector<double> fd_eigenvalues_2d(const HamiltonianSpec& spec, int points_per_dim,
                                             int count) {
  if (spec.coords != 2) throw std::invalid_argument("two-coordinate Hamiltonian required");
  if (points_per_dim < 8) throw std::invalid_argument("grid too coarse");
  const double upper = (spec.family == Family::a_even) ? std::numbers::pi / 2 : std::numbers::pi;
  const double h = upper / (points_per_dim + 1);
  const double c = rat_to_double(spec.kinetic_coefficient);
  const std::size_t m = spec.dim();

  std::vector<std::ptrdiff_t> cell(static_cast<std::size_t>(points_per_dim) *
                                       static_cast<std::size_t>(points_per_dim),
                                   -1);
  std::vector<std::pair<int, int>> points;
  auto cell_at = [&](int i, int j) -> std::ptrdiff_t& {
    return cell[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(points_per_dim) +
                static_cast<std::size_t>(j - 1)];
  };
  for (int i = 1; i <= points_per_dim; ++i)
    for (int j = 1; j <= points_per_dim; ++j) {
      const double q[2] = {i * h, j * h};
      if (alcove_contains(spec.family, 2, q)) {
        cell_at(i, j) = static_cast<std::ptrdiff_t>(points.size());
        points.emplace_back(i, j);
      }
    }
  if (points.empty()) throw std::runtime_error("no interior grid points in the alcove");
  const std::size_t ntot = points.size() * m;
  if (ntot > 6000) throw std::invalid_argument("two-coordinate grid exceeds the dense budget");
  if (count < 1 || static_cast<std::size_t>(count) > ntot)
    throw std::invalid_argument("eigenvalue count out of range");

  std::vector<double> a(ntot * ntot, 0.0);
  const double diag_kin = 4.0 * c / (h * h);
  const double off_kin = -c / (h * h);
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto [i, j] = points[p];
    const double q[2] = {i * h, j * h};
    const EvalMatrix V = evaluate_potential(spec, q);
    const std::size_t base = p * m;
    for (std::size_t r = 0; r < m; ++r) {
      a[(base + r) * ntot + (base + r)] += diag_kin - V.at(r, r);
      for (std::size_t s = r + 1; s < m; ++s) {
        a[(base + r) * ntot + (base + s)] -= V.at(r, s);
        a[(base + s) * ntot + (base + r)] -= V.at(r, s);
      }
    }
    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};
    for (int dir = 0; dir < 4; ++dir) {
      const int ni = i + di[dir], nj = j + dj[dir];
      if (ni < 1 || ni > points_per_dim || nj < 1 || nj > points_per_dim) continue;
      const std::ptrdiff_t np = cell_at(ni, nj);
      if (np < 0) continue;
      const std::size_t nbase = static_cast<std::size_t>(np) * m;
      for (std::size_t r = 0; r < m; ++r) a[(base + r) * ntot + (nbase + r)] += off_kin;
    }
  }
  return symmetric_eigenvalues(ntot, std::move(a), static_cast<std::size_t>(count));
}

}  // namespace spinsuth

#endif
