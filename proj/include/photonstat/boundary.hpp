#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "photonstat/absorption.hpp"
#include "photonstat/thermal.hpp"

namespace photonstat {

enum class CathodeGeometry { ThinCathode, Volume };
enum class Discrimination { Good, Bad };

// Detector parameters: boundary transmission tau, photoelectron yield beta,
// quantum efficiency eta = tau * beta. Geometry decides whether a photon
// pair can eject two electrons in one correlated event (thin working layer)
// or only as independent single detections (volume absorber).
class DetectorSpec {
 public:
  DetectorSpec(double tau, double beta,
               CathodeGeometry geometry = CathodeGeometry::ThinCathode,
               Discrimination discrimination = Discrimination::Good);

  // Folds the whole efficiency into the boundary (beta = 1), for callers
  // that only know the product eta.
  static DetectorSpec from_eta(
      double eta, CathodeGeometry geometry = CathodeGeometry::ThinCathode,
      Discrimination discrimination = Discrimination::Good);

  double tau() const { return tau_; }
  double beta() const { return beta_; }
  double eta() const { return tau_ * beta_; }
  CathodeGeometry geometry() const { return geometry_; }
  Discrimination discrimination() const { return discrimination_; }

 private:
  double tau_;
  double beta_;
  CathodeGeometry geometry_;
  Discrimination discrimination_;
};

// Finite occupation pmf plus a certified bound on the truncated tail mass.
// Valid only if every entry is nonnegative and mass + tail is 1 within 1e-12.
class OccupationPmf {
 public:
  OccupationPmf(std::vector<double> probabilities, double tail_bound);

  static OccupationPmf from_thermal(const ThermalCellDistribution& dist,
                                    double tail_tol,
                                    std::uint64_t term_ceiling = kDefaultTermCeiling);

  const std::vector<double>& probabilities() const { return probabilities_; }
  double tail_bound() const { return tail_bound_; }
  std::size_t support_size() const { return probabilities_.size(); }
  double p(std::size_t n) const {
    return n < probabilities_.size() ? probabilities_[n] : 0.0;
  }

 private:
  std::vector<double> probabilities_;
  double tail_bound_;
};

// Boundary models. The wave picture transmits the whole state with
// probability tau and otherwise leaves vacuum; the particle picture thins
// each photon independently. The two disagree on the transmitted
// statistics, which is the contrast the toolkit exists to exhibit.
OccupationPmf wave_boundary(const OccupationPmf& pmf, double tau);
OccupationPmf particle_boundary(const OccupationPmf& pmf, double tau);

// Probability that the detector produces k electrons from the thermal
// field: eta times the thermal k-absorption average. Defined for k >= 1
// only; the no-count mass is the boundary remainder, not a series value.
CellAverageResult detector_absorption_probability(
    const ThermalCellDistribution& dist, double eta, std::uint64_t k,
    double tol, std::uint64_t term_ceiling = kDefaultTermCeiling);

// Per-state detection probabilities for a one-photon state.
struct FundamentalDetectProbs {
  double p_any = 0.0;  // any photocount at all
  double p_1e = 0.0;   // exactly one photoelectron
  double p_2e = 0.0;   // two-electron pulse
};

FundamentalDetectProbs fundamental_detect_probs(double eta);

// Whether a photon pair registers as one correlated two-electron event or
// as two independent single detections. FromGeometry derives the answer
// from the cathode geometries; the explicit values override it, since the
// thin-layer condition is qualitative.
enum class PairCorrelation { FromGeometry, Correlated, Uncorrelated };

double two_photon_joint_prob(const DetectorSpec& d1, const DetectorSpec& d2,
                             PairCorrelation mode = PairCorrelation::FromGeometry);

}  // namespace photonstat
