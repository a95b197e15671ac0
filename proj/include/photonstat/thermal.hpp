#pragma once

#include <cstdint>
#include <vector>

#include "photonstat/series.hpp"

namespace photonstat {

// Mean absorption rate of a thermal cell, <n>/(<n>+1). Strictly below 1 for
// any finite mean occupation.
double mean_rate(double mean_occupation);

// Cell-occupation statistics of thermal light. The occupation pmf is
// geometric: P(n) = (1 - R) R^n with R the mean rate, so successive
// probabilities have the constant ratio R.
class ThermalCellDistribution {
 public:
  explicit ThermalCellDistribution(double mean_occupation);

  double mean_occupation() const { return mean_occupation_; }
  double mean_rate() const { return rate_; }
  double p0() const { return 1.0 - rate_; }
  double pmf(std::uint64_t n) const;

 private:
  double mean_occupation_;
  double rate_;
};

// Pure field state whose Fock amplitudes form a geometric progression.
// Squared amplitudes reproduce the k-photon absorption pmf of a cell with
// the same filling, which is what makes the state useful as a model input.
struct GeometricState {
  std::uint64_t cell_filling = 0;
  std::vector<double> amplitudes;  // c_0 .. c_kmax
  double norm_deficit = 0.0;       // 1 - sum of kept amplitude squares, certified
};

GeometricState geometric_state(std::uint64_t cell_filling, double tail_tol,
                               std::uint64_t term_ceiling = kDefaultTermCeiling);

// Spectral band of a cavity for phase-space cell counting.
struct BandSpec {
  double volume_m3 = 0.0;
  double frequency_hz = 0.0;
  double bandwidth_hz = 0.0;
};

// Number of unit phase-space cells in the band: 8 pi nu^2 V dnu / c^3.
// Returned as a real; it is a density and rounding is the caller's call.
double cells_in_band(const BandSpec& band);

}  // namespace photonstat
