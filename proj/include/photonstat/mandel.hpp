#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace photonstat {

// Semiclassical photocount baseline: P(n) is the Poisson transform of a
// caller-supplied law for the integrated intensity W. W arrives already
// scaled by the detector efficiency; this module owns no detector model.

struct DeterministicIntensity {
  double w = 0.0;
};

struct ExponentialIntensity {
  double mean_w = 0.0;
};

// Quasi-probability density tabulated on a strictly increasing grid.
// Must integrate to 1 under the trapezoid rule within 1e-8.
class TabulatedIntensity {
 public:
  TabulatedIntensity(std::vector<double> w, std::vector<double> density);

  const std::vector<double>& w() const { return w_; }
  const std::vector<double>& density() const { return density_; }

 private:
  std::vector<double> w_;
  std::vector<double> density_;
};

using IntegratedIntensityLaw =
    std::variant<DeterministicIntensity, ExponentialIntensity, TabulatedIntensity>;

// Photocount pmf under the law: closed forms for the deterministic law
// (Poisson) and the exponential law (geometric), trapezoid quadrature on
// the caller's grid for tabulated laws.
double mandel_photocount_pmf(const IntegratedIntensityLaw& law, std::uint64_t n);

// Quadrature error estimate for tabulated laws: the difference between two
// caller-supplied grid refinements of the same density.
double refinement_delta(const TabulatedIntensity& coarse,
                        const TabulatedIntensity& fine, std::uint64_t n);

// Short-time counting postulate: n detections among n_atoms independent
// atoms, each firing with probability p within the interval.
double binomial_short_time(std::uint64_t n_atoms, double p, std::uint64_t n);

}  // namespace photonstat
