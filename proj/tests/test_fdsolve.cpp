#include "spinsuth/fdsolve.hpp"
#include "spinsuth/spectrum.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace spinsuth;

namespace {

SpectrumPrediction ladder(std::vector<std::pair<Rat, int>> entries) {
  SpectrumPrediction p;
  for (auto& [v, m] : entries) {
    SpectrumEntry e;
    e.value = v;
    e.multiplicity = m;
    p.entries.push_back(std::move(e));
  }
  return p;
}

}  // namespace

TEST_CASE("free box eigenvalues converge at second order") {
  const HamiltonianSpec box = free_box_spec(rat(1, 2), std::numbers::pi);
  const auto vals = fd_eigenvalues(FDProblem{box, 10000}, 3);
  const double expect[] = {0.5, 2.0, 4.5};
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(vals[i] - expect[i]) / expect[i] <= 1e-5);
}

TEST_CASE("trigonometric well calibration") {
  const auto vals = fd_eigenvalues(FDProblem{poschl_teller_spec(2), 8192}, 3);
  const double expect[] = {4.0, 9.0, 16.0};
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(vals[i] - expect[i]) / expect[i] <= 1e-4);
  CHECK_THROWS_AS(poschl_teller_spec(0), std::invalid_argument);
}

TEST_CASE("reduced su(3) level-1 well reproduces the predicted ladder") {
  const HamiltonianSpec spec = assemble_closed_form(3, 1);
  const auto vals = fd_eigenvalues(FDProblem{spec, 8192}, 3);
  const SpectrumReport rep = compare(vals, spectrum_twisted_lowest(1, 3, 3), 1e-4);
  INFO(format_report_table(rep));
  CHECK(rep.pass);
  // Affine cross-check: 2E + 11/3 are the odd Dirichlet modes of the g = 2
  // trigonometric well, i.e. (m+2)^2 for odd m.
  const double odd_modes[] = {9.0, 25.0, 49.0};
  for (int i = 0; i < 3; ++i)
    CHECK(2.0 * vals[i] + 11.0 / 3.0 == Catch::Approx(odd_modes[i]).epsilon(1e-4));
}

TEST_CASE("reduced su(3) level-2 coupled system matches prediction") {
  const HamiltonianSpec spec = assemble_closed_form(3, 2);
  REQUIRE(spec.dim() == 2);  // exercises the banded block solver
  const auto vals = fd_eigenvalues(FDProblem{spec, 8192}, 6);
  const SpectrumReport rep = compare(vals, spectrum_twisted_lowest(2, 3, 6), 1e-3);
  INFO(format_report_table(rep));
  CHECK(rep.pass);
}

TEST_CASE("extrapolation sharpens the box spectrum to 1e-8") {
  const HamiltonianSpec box = free_box_spec(rat(1, 2), std::numbers::pi);
  const RichardsonResult r = richardson(box, 3, {2000, 4001});
  const double expect[] = {0.5, 2.0, 4.5};
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(r.values[i] - expect[i]) <= 1e-8);
}

TEST_CASE("extrapolation beats the finest grid on the trigonometric well") {
  const RichardsonResult r = richardson(poschl_teller_spec(2), 3, {4096, 8193});
  const double expect[] = {4.0, 9.0, 16.0};
  for (int i = 0; i < 3; ++i) {
    const double fine_err = std::abs(r.per_grid.back()[i] - expect[i]);
    const double extrap_err = std::abs(r.values[i] - expect[i]);
    CHECK(extrap_err <= 1e-6);
    CHECK(extrap_err * 5.0 <= fine_err);
  }
}

TEST_CASE("grid errors decrease at the h^2 rate") {
  const RichardsonResult r = richardson(poschl_teller_spec(2), 2, {512, 1025, 2051});
  CHECK(r.monotone);
  for (int i = 0; i < 2; ++i) {
    const double d0 = r.per_grid[1][i] - r.per_grid[0][i];
    const double d1 = r.per_grid[2][i] - r.per_grid[1][i];
    CHECK(d0 / d1 == Catch::Approx(4.0).epsilon(0.10));
  }
}

TEST_CASE("shrinking the interval raises every level") {
  const auto wide = fd_eigenvalues(FDProblem{free_box_spec(rat(1), 2.0), 2000}, 3);
  const auto narrow = fd_eigenvalues(FDProblem{free_box_spec(rat(1), 1.0), 2000}, 3);
  for (int i = 0; i < 3; ++i) CHECK(narrow[i] > wide[i]);
}

TEST_CASE("report pairing expands multiplicities and flags shortfalls") {
  const SpectrumPrediction pred = ladder({{rat(1), 2}, {rat(2), 1}});
  {
    const SpectrumReport rep = compare({1.0, 1.00005, 2.0001}, pred, 1e-3);
    CHECK(rep.pass);
    REQUIRE(rep.predicted.size() == 3);
    CHECK(rep.predicted[1] == 1.0);
    CHECK(rep.relative_errors.size() == 3);
    CHECK(rep.mean_offset == Catch::Approx((0.0 + 5e-5 + 1e-4) / 3.0).margin(1e-12));
    CHECK(rep.note.empty());
  }
  {
    const SpectrumReport rep = compare({1.0, 1.0, 2.0, 3.0}, pred, 1e-3);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.note.empty());
  }
  {
    // A zero predicted level compares by absolute difference.
    const SpectrumReport rep = compare({1e-5}, ladder({{rat(0), 1}}), 1e-6);
    CHECK_FALSE(rep.pass);
    CHECK(rep.relative_errors[0] == Catch::Approx(1e-5));
  }
}

TEST_CASE("solver input validation") {
  const HamiltonianSpec box = free_box_spec(rat(1), 1.0);
  CHECK_THROWS_AS(fd_eigenvalues(FDProblem{box, 99}, 1), std::invalid_argument);
  CHECK_THROWS_AS(fd_eigenvalues(FDProblem{box, 500}, 0), std::invalid_argument);
  CHECK_THROWS_AS(fd_eigenvalues(FDProblem{box, 500}, 501), std::invalid_argument);
  CHECK_THROWS_AS(fd_eigenvalues(FDProblem{assemble_closed_form(4, 2), 500}, 1),
                  std::invalid_argument);  // two coordinates
  CHECK_THROWS_AS(fd_eigenvalues(FDProblem{assemble_closed_form(3, 2), 2'100'000}, 1),
                  std::invalid_argument);  // memory budget
  CHECK_THROWS_AS(richardson(box, 1, {1000, 2000}), std::invalid_argument);
  CHECK_THROWS_AS(richardson(box, 1, {1000}), std::invalid_argument);
}

TEST_CASE("two-coordinate solver smoke test") {
  const HamiltonianSpec spec = assemble_closed_form(5, 1);
  REQUIRE(spec.coords == 2);
  const auto vals = fd_eigenvalues_2d(spec, 70, 2);
  CHECK(vals[0] < vals[1]);
  const SpectrumPrediction pred = spectrum_twisted_lowest(1, 5, 1);
  REQUIRE_FALSE(pred.entries.empty());
  const double ground = rat_to_double(pred.entries[0].value);
  // Coarse masked grid: expect rough agreement only.
  CHECK(std::abs(vals[0] - ground) / std::abs(ground) <= 0.15);

  CHECK_THROWS_AS(fd_eigenvalues_2d(assemble_closed_form(3, 1), 70, 1), std::invalid_argument);
  CHECK_THROWS_AS(fd_eigenvalues_2d(spec, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(fd_eigenvalues_2d(spec, 120, 1), std::invalid_argument);  // dense budget
}
