#include "photonstat/boundary.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace photonstat {

namespace {

void require_probability(double x, const char* what) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
    throw std::domain_error(std::string(what) + " must lie in [0, 1]");
  }
}

// Single binomial term via logs, for rows where (1-tau)^n underflows.
double binomial_term_log(std::size_t n, std::size_t m, double tau) {
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  const double log_choose = std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) -
                            std::lgamma(nd - md + 1.0);
  return std::exp(log_choose + md * std::log(tau) +
                  (nd - md) * std::log1p(-tau));
}

}  // namespace

DetectorSpec::DetectorSpec(double tau, double beta, CathodeGeometry geometry,
                           Discrimination discrimination)
    : tau_(tau), beta_(beta), geometry_(geometry), discrimination_(discrimination) {
  require_probability(tau, "boundary transmission");
  require_probability(beta, "photoelectron yield");
}

DetectorSpec DetectorSpec::from_eta(double eta, CathodeGeometry geometry,
                                    Discrimination discrimination) {
  require_probability(eta, "quantum efficiency");
  return DetectorSpec(eta, 1.0, geometry, discrimination);
}

OccupationPmf::OccupationPmf(std::vector<double> probabilities, double tail_bound)
    : probabilities_(std::move(probabilities)), tail_bound_(tail_bound) {
  if (probabilities_.empty()) {
    throw std::invalid_argument("occupation pmf needs at least one entry");
  }
  if (!std::isfinite(tail_bound_) || tail_bound_ < 0.0) {
    throw std::domain_error("tail bound must be finite and nonnegative");
  }
  KahanAccumulator mass;
  for (double p : probabilities_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw std::domain_error("occupation probabilities must be finite and nonnegative");
    }
    mass.add(p);
  }
  if (std::abs(mass.value() + tail_bound_ - 1.0) > 1e-12) {
    throw std::domain_error("occupation mass plus tail bound must equal 1 within 1e-12");
  }
}

OccupationPmf OccupationPmf::from_thermal(const ThermalCellDistribution& dist,
                                          double tail_tol,
                                          std::uint64_t term_ceiling) {
  if (!(tail_tol > 0.0)) {
    throw std::domain_error("tail tolerance must be positive");
  }
  const double rate = dist.mean_rate();
  std::vector<double> probs;
  double pn = dist.p0();
  double tail = rate;
  probs.push_back(pn);
  while (tail >= tail_tol) {
    if (probs.size() > term_ceiling) {
      throw TruncationError("thermal support exceeded the term ceiling");
    }
    pn *= rate;
    probs.push_back(pn);
    tail *= rate;
  }
  return OccupationPmf(std::move(probs), tail);
}

OccupationPmf wave_boundary(const OccupationPmf& pmf, double tau) {
  require_probability(tau, "boundary transmission");
  // The state passes whole with probability tau; the reflected fraction
  // shows up entirely as extra vacuum. No per-photon splitting.
  std::vector<double> out = pmf.probabilities();
  for (double& p : out) {
    p *= tau;
  }
  out[0] += 1.0 - tau;
  return OccupationPmf(std::move(out), tau * pmf.tail_bound());
}

OccupationPmf particle_boundary(const OccupationPmf& pmf, double tau) {
  require_probability(tau, "boundary transmission");
  if (tau == 1.0) {
    return pmf;
  }
  const auto& in = pmf.probabilities();
  std::vector<double> out(in.size(), 0.0);
  for (std::size_t n = 0; n < in.size(); ++n) {
    const double pn = in[n];
    if (pn == 0.0) {
      continue;
    }
    double term = std::pow(1.0 - tau, static_cast<double>(n));  // m = 0
    if (term == 0.0) {
      for (std::size_t m = 0; m <= n; ++m) {
        out[m] += pn * binomial_term_log(n, m, tau);
      }
      continue;
    }
    const double step = tau / (1.0 - tau);
    for (std::size_t m = 0; m <= n; ++m) {
      out[m] += pn * term;
      term *= step * static_cast<double>(n - m) / static_cast<double>(m + 1);
    }
  }
  // Thinning never grows the support; the unexpanded input tail is simply
  // carried over as unaccounted mass.
  return OccupationPmf(std::move(out), pmf.tail_bound());
}

CellAverageResult detector_absorption_probability(const ThermalCellDistribution& dist,
                                                  double eta, std::uint64_t k,
                                                  double tol,
                                                  std::uint64_t term_ceiling) {
  require_probability(eta, "quantum efficiency");
  if (k == 0) {
    throw std::domain_error(
        "k = 0 has no detector series; the no-count probability is the "
        "boundary remainder (1 - eta) plus eta times the k = 0 cell average");
  }
  CellAverageResult result = total_absorption_probability(dist, k, tol, term_ceiling);
  result.value *= eta;
  result.truncation_error_bound *= eta;
  return result;
}

FundamentalDetectProbs fundamental_detect_probs(double eta) {
  require_probability(eta, "quantum efficiency");
  return {0.5 * eta, 0.25 * eta, 0.125 * eta};
}

double two_photon_joint_prob(const DetectorSpec& d1, const DetectorSpec& d2,
                             PairCorrelation mode) {
  bool correlated = false;
  switch (mode) {
    case PairCorrelation::Correlated:
      correlated = true;
      break;
    case PairCorrelation::Uncorrelated:
      correlated = false;
      break;
    case PairCorrelation::FromGeometry:
      correlated = d1.geometry() == CathodeGeometry::ThinCathode &&
                   d2.geometry() == CathodeGeometry::ThinCathode;
      break;
  }
  const double joint = d1.eta() * d2.eta();
  return correlated ? 0.125 * joint : 0.0625 * joint;
}

}  // namespace photonstat
