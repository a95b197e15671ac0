#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "photonstat/absorption.hpp"
#include "photonstat/thermal.hpp"

namespace ps = photonstat;

TEST_CASE("mean rate maps mean occupation onto [0, 1)") {
  CHECK(ps::mean_rate(0.0) == 0.0);
  CHECK(ps::mean_rate(1.0) == 0.5);
  CHECK(std::abs(ps::mean_rate(20.0) - 20.0 / 21.0) < 1e-16);
  CHECK(ps::mean_rate(1e12) < 1.0);
  CHECK_THROWS_AS(ps::mean_rate(-0.1), std::domain_error);
  CHECK_THROWS_AS(ps::mean_rate(std::numeric_limits<double>::infinity()),
                  std::domain_error);
  CHECK_THROWS_AS(ps::mean_rate(std::nan("")), std::domain_error);
}

TEST_CASE("occupation pmf is geometric with the mean rate as step") {
  const ps::ThermalCellDistribution dist(3.7);
  const double rate = dist.mean_rate();
  CHECK(dist.pmf(0) == dist.p0());
  for (std::uint64_t n = 1; n <= 40; ++n) {
    CHECK(std::abs(dist.pmf(n) / dist.pmf(n - 1) - rate) < 1e-14);
  }
}

TEST_CASE("occupation pmf spot values match 40-digit references") {
  // Independently computed with arbitrary-precision arithmetic.
  const ps::ThermalCellDistribution bright(20.0);
  CHECK(std::abs(bright.pmf(40) / 0.0067640801095370424 - 1.0) < 1e-13);
  const ps::ThermalCellDistribution dim(0.01);
  CHECK(std::abs(dim.pmf(3) / 9.6098034448281628e-7 - 1.0) < 1e-13);
}

TEST_CASE("empty cavity puts all occupation mass at zero") {
  const ps::ThermalCellDistribution vacuum(0.0);
  CHECK(vacuum.pmf(0) == 1.0);
  CHECK(vacuum.pmf(1) == 0.0);
  CHECK(vacuum.pmf(7) == 0.0);
}

TEST_CASE("occupation pmf mass matches the geometric tail identity") {
  const ps::ThermalCellDistribution dist(5.0);
  const double rate = dist.mean_rate();
  ps::KahanAccumulator mass;
  for (std::uint64_t n = 0; n <= 400; ++n) {
    mass.add(dist.pmf(n));
  }
  CHECK(std::abs(mass.value() - (1.0 - std::pow(rate, 401.0))) < 1e-13);
}

TEST_CASE("geometric state amplitudes square to the absorption pmf") {
  const ps::GeometricState state = ps::geometric_state(2, 1e-12);
  REQUIRE(state.amplitudes.size() > 4);
  for (std::size_t k = 0; k < state.amplitudes.size(); ++k) {
    CHECK(std::abs(state.amplitudes[k] * state.amplitudes[k] -
                   ps::absorption_pmf(2, k)) < 1e-15);
  }
  // Reference amplitude sqrt(W_3) at filling 2, 40-digit computation.
  CHECK(std::abs(state.amplitudes[3] - 0.31426968052735446) < 1e-15);

  ps::KahanAccumulator norm;
  for (double amp : state.amplitudes) {
    norm.add(amp * amp);
  }
  CHECK(std::abs(norm.value() + state.norm_deficit - 1.0) < 1e-13);
  CHECK(state.norm_deficit < 1e-12);
}

TEST_CASE("geometric state of an empty cell is pure vacuum") {
  const ps::GeometricState state = ps::geometric_state(0, 1e-10);
  CHECK(state.amplitudes.size() == 1);
  CHECK(state.amplitudes[0] == 1.0);
  CHECK(state.norm_deficit == 0.0);
}

TEST_CASE("geometric state enforces tolerance domain and term ceiling") {
  CHECK_THROWS_AS(ps::geometric_state(1, 0.0), std::domain_error);
  CHECK_THROWS_AS(ps::geometric_state(1, 1.0), std::domain_error);
  // A heavily filled cell has ratio so close to 1 that a tiny ceiling trips.
  CHECK_THROWS_AS(ps::geometric_state(1000000, 1e-12, 100), ps::TruncationError);
}

TEST_CASE("cell count in a narrow optical band") {
  const ps::BandSpec band{1.0, 5e14, 1e9};
  // 8 pi nu^2 V dnu / c^3, 40-digit reference.
  CHECK(std::abs(ps::cells_in_band(band) / 233194208115423.59 - 1.0) < 1e-13);

  CHECK_THROWS_AS(ps::cells_in_band({0.0, 5e14, 1e9}), std::domain_error);
  CHECK_THROWS_AS(ps::cells_in_band({1.0, -5e14, 1e9}), std::domain_error);
  CHECK_THROWS_AS(
      ps::cells_in_band({1.0, 5e14, std::numeric_limits<double>::infinity()}),
      std::domain_error);
}
