#include "photonstat/mandel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "photonstat/series.hpp"

namespace photonstat {

namespace {

// Poisson weight W^n e^(-W) / n!, evaluated in log space so large n and
// large W cannot overflow the intermediate power or factorial.
double poisson_weight(std::uint64_t n, double w) {
  if (w == 0.0) {
    return n == 0 ? 1.0 : 0.0;
  }
  if (n == 0) {
    return std::exp(-w);
  }
  const double nd = static_cast<double>(n);
  return std::exp(nd * std::log(w) - w - std::lgamma(nd + 1.0));
}

double trapezoid_counts(const std::vector<double>& w,
                        const std::vector<double>& density, std::uint64_t n) {
  KahanAccumulator integral;
  double left = poisson_weight(n, w.front()) * density.front();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const double right = poisson_weight(n, w[i + 1]) * density[i + 1];
    integral.add(0.5 * (left + right) * (w[i + 1] - w[i]));
    left = right;
  }
  return integral.value();
}

void require_nonneg_finite(double x, const char* what) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error(std::string(what) + " must be finite and nonnegative");
  }
}

}  // namespace

TabulatedIntensity::TabulatedIntensity(std::vector<double> w,
                                       std::vector<double> density)
    : w_(std::move(w)), density_(std::move(density)) {
  if (w_.size() != density_.size() || w_.size() < 2) {
    throw std::invalid_argument(
        "tabulated intensity needs matching W and density grids with at least "
        "two points");
  }
  for (std::size_t i = 0; i < w_.size(); ++i) {
    require_nonneg_finite(w_[i], "W grid value");
    require_nonneg_finite(density_[i], "density value");
    if (i > 0 && !(w_[i] > w_[i - 1])) {
      throw std::invalid_argument("W grid must be strictly increasing");
    }
  }
  KahanAccumulator mass;
  for (std::size_t i = 0; i + 1 < w_.size(); ++i) {
    mass.add(0.5 * (density_[i] + density_[i + 1]) * (w_[i + 1] - w_[i]));
  }
  if (std::abs(mass.value() - 1.0) > 1e-8) {
    throw std::domain_error(
        "tabulated density must integrate to 1 within 1e-8 under the trapezoid "
        "rule");
  }
}

double mandel_photocount_pmf(const IntegratedIntensityLaw& law, std::uint64_t n) {
  if (const auto* det = std::get_if<DeterministicIntensity>(&law)) {
    require_nonneg_finite(det->w, "deterministic W");
    return poisson_weight(n, det->w);
  }
  if (const auto* exp_law = std::get_if<ExponentialIntensity>(&law)) {
    require_nonneg_finite(exp_law->mean_w, "exponential mean W");
    const double mean = exp_law->mean_w;
    if (mean == 0.0) {
      return n == 0 ? 1.0 : 0.0;
    }
    // The Poisson transform of an exponential density is geometric.
    const double rate = mean / (mean + 1.0);
    return std::pow(rate, static_cast<double>(n)) / (mean + 1.0);
  }
  const auto& tab = std::get<TabulatedIntensity>(law);
  return trapezoid_counts(tab.w(), tab.density(), n);
}

double refinement_delta(const TabulatedIntensity& coarse,
                        const TabulatedIntensity& fine, std::uint64_t n) {
  return std::abs(trapezoid_counts(fine.w(), fine.density(), n) -
                  trapezoid_counts(coarse.w(), coarse.density(), n));
}

double binomial_short_time(std::uint64_t n_atoms, double p, std::uint64_t n) {
  if (n_atoms == 0) {
    throw std::domain_error("atom count must be positive");
  }
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw std::domain_error("firing probability must lie in [0, 1]");
  }
  if (n > n_atoms) {
    throw std::domain_error("cannot detect more photons than there are atoms");
  }
  if (p == 0.0) {
    return n == 0 ? 1.0 : 0.0;
  }
  if (p == 1.0) {
    return n == n_atoms ? 1.0 : 0.0;
  }
  const double nd = static_cast<double>(n);
  const double total = static_cast<double>(n_atoms);
  const double log_choose = std::lgamma(total + 1.0) - std::lgamma(nd + 1.0) -
                            std::lgamma(total - nd + 1.0);
  return std::exp(log_choose + nd * std::log(p) +
                  (total - nd) * std::log1p(-p));
}

}  // namespace photonstat
