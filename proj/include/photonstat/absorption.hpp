#pragma once

#include <cstdint>

#include "photonstat/series.hpp"
#include "photonstat/thermal.hpp"

namespace photonstat {

// Probability of absorbing exactly k photons from a cell of filling n:
// geometric with mean n, W(k) = (1/(n+1)) (n/(n+1))^k. An empty cell yields
// k = 0 with certainty (the 0^0 = 1 convention).
double absorption_pmf(std::uint64_t cell_filling, std::uint64_t k);

// The same law as an object, for samplers and parameter sweeps.
class AbsorptionDistribution {
 public:
  explicit AbsorptionDistribution(std::uint64_t cell_filling);

  std::uint64_t cell_filling() const { return cell_filling_; }
  double rate() const { return rate_; }
  double pmf(std::uint64_t k) const { return absorption_pmf(cell_filling_, k); }
  double mean() const { return static_cast<double>(cell_filling_); }

 private:
  std::uint64_t cell_filling_;
  double rate_;
};

// Value of a thermally averaged series together with its certified
// truncation bound and the number of occupation terms summed.
struct CellAverageResult {
  double value = 0.0;
  double truncation_error_bound = 0.0;
  std::uint64_t terms_used = 0;
};

// Probability of a k-photon absorption event from the thermal field,
// averaged over cell occupations. Series over n, cut when the geometric
// occupation tail drops below tol; the achieved bound is reported.
CellAverageResult total_absorption_probability(
    const ThermalCellDistribution& dist, std::uint64_t k, double tol,
    std::uint64_t term_ceiling = kDefaultTermCeiling);

// Closed form of the k = 0 average: -(P0/R) ln(1 - R); 1 in the empty limit.
double no_absorption_probability(const ThermalCellDistribution& dist);

// Closed form of the k = 1 average via the dilogarithm series.
double one_photon_absorption_probability(
    const ThermalCellDistribution& dist,
    std::uint64_t term_ceiling = kDefaultTermCeiling);

// Mean number of photons absorbed per cell. Deliberately computed as the
// naive double sum over k and n so that its agreement with mean_occupation
// stays an independent check rather than an algebraic identity.
double mean_absorbed(const ThermalCellDistribution& dist, double tol,
                     std::uint64_t term_ceiling = kDefaultTermCeiling);

// Dilogarithm on [0, 1) by power series, stopped on the certified tail
// bound x^(m+1) / ((m+1)^2 (1-x)).
double dilog(double x, std::uint64_t term_ceiling = kDefaultTermCeiling);

}  // namespace photonstat
