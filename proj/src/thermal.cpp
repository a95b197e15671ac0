#include "photonstat/thermal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace photonstat {

namespace {

constexpr double kSpeedOfLightMps = 299792458.0;

void require_positive_finite(double x, const char* what) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw std::domain_error(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

double mean_rate(double mean_occupation) {
  if (!std::isfinite(mean_occupation) || mean_occupation < 0.0) {
    throw std::domain_error("mean occupation must be finite and nonnegative");
  }
  return mean_occupation / (mean_occupation + 1.0);
}

ThermalCellDistribution::ThermalCellDistribution(double mean_occupation)
    : mean_occupation_(mean_occupation),
      rate_(photonstat::mean_rate(mean_occupation)) {}

double ThermalCellDistribution::pmf(std::uint64_t n) const {
  // pow(0, 0) = 1, so the empty cavity puts all mass on n = 0.
  return p0() * std::pow(rate_, static_cast<double>(n));
}

GeometricState geometric_state(std::uint64_t cell_filling, double tail_tol,
                               std::uint64_t term_ceiling) {
  if (!(tail_tol > 0.0) || !(tail_tol < 1.0)) {
    throw std::domain_error("tail tolerance must lie in (0, 1)");
  }

  GeometricState state;
  state.cell_filling = cell_filling;
  if (cell_filling == 0) {
    state.amplitudes = {1.0};
    return state;
  }

  const double n = static_cast<double>(cell_filling);
  const double r = n / (n + 1.0);
  const double amp_step = std::sqrt(r);

  // After keeping k = 0..K the missing norm is exactly r^(K+1).
  double amp = std::sqrt(1.0 / (n + 1.0));
  double tail = r;
  state.amplitudes.push_back(amp);
  while (tail >= tail_tol) {
    if (state.amplitudes.size() > term_ceiling) {
      throw TruncationError("geometric state truncation exceeded the term ceiling");
    }
    amp *= amp_step;
    state.amplitudes.push_back(amp);
    tail *= r;
  }
  state.norm_deficit = tail;
  return state;
}

double cells_in_band(const BandSpec& band) {
  require_positive_finite(band.volume_m3, "band volume");
  require_positive_finite(band.frequency_hz, "band frequency");
  require_positive_finite(band.bandwidth_hz, "band bandwidth");
  const double c3 = kSpeedOfLightMps * kSpeedOfLightMps * kSpeedOfLightMps;
  return 8.0 * std::numbers::pi * band.frequency_hz * band.frequency_hz *
         band.volume_m3 * band.bandwidth_hz / c3;
}

}  // namespace photonstat
