#include "photonstat/absorption.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace photonstat {

double absorption_pmf(std::uint64_t cell_filling, std::uint64_t k) {
  const double n = static_cast<double>(cell_filling);
  return std::pow(n / (n + 1.0), static_cast<double>(k)) / (n + 1.0);
}

AbsorptionDistribution::AbsorptionDistribution(std::uint64_t cell_filling)
    : cell_filling_(cell_filling),
      rate_(static_cast<double>(cell_filling) /
            (static_cast<double>(cell_filling) + 1.0)) {}

CellAverageResult total_absorption_probability(const ThermalCellDistribution& dist,
                                               std::uint64_t k, double tol,
                                               std::uint64_t term_ceiling) {
  if (!(tol > 0.0)) {
    throw std::domain_error("truncation tolerance must be positive");
  }

  const double rate = dist.mean_rate();
  KahanAccumulator sum;
  double pn = dist.p0();
  sum.add(pn * absorption_pmf(0, k));

  // The summand is bounded by the occupation pmf, so the mass beyond the
  // last included n, rate^(n+1), certifies the truncation error.
  double tail = rate;
  std::uint64_t n = 0;
  while (tail >= tol) {
    ++n;
    if (n > term_ceiling) {
      throw TruncationError(
          "thermal average exceeded the term ceiling; mean rate too close to 1 "
          "for the requested tolerance");
    }
    pn *= rate;
    sum.add(pn * absorption_pmf(n, k));
    tail *= rate;
  }
  return {sum.value(), tail, n + 1};
}

double no_absorption_probability(const ThermalCellDistribution& dist) {
  const double rate = dist.mean_rate();
  if (rate == 0.0) {
    return 1.0;
  }
  return -dist.p0() * std::log1p(-rate) / rate;
}

double dilog(double x, std::uint64_t term_ceiling) {
  if (!std::isfinite(x) || x < 0.0 || !(x < 1.0)) {
    throw std::domain_error("dilogarithm series argument must lie in [0, 1)");
  }
  if (x == 0.0) {
    return 0.0;
  }

  KahanAccumulator sum;
  double power = x;  // x^m
  std::uint64_t m = 1;
  for (;;) {
    const double md = static_cast<double>(m);
    sum.add(power / (md * md));
    // Remaining terms are dominated by a geometric series with ratio x.
    const double next = md + 1.0;
    const double tail = power * x / (next * next * (1.0 - x));
    if (tail < 1e-17) {
      break;
    }
    if (++m > term_ceiling) {
      throw TruncationError("dilogarithm series exceeded the term ceiling");
    }
    power *= x;
  }
  return sum.value();
}

double one_photon_absorption_probability(const ThermalCellDistribution& dist,
                                         std::uint64_t term_ceiling) {
  const double rate = dist.mean_rate();
  if (rate == 0.0) {
    return 0.0;
  }
  return no_absorption_probability(dist) - dist.p0() * dilog(rate, term_ceiling) / rate;
}

double mean_absorbed(const ThermalCellDistribution& dist, double tol,
                     std::uint64_t term_ceiling) {
  if (!(tol > 0.0)) {
    throw std::domain_error("truncation tolerance must be positive");
  }
  const double rate = dist.mean_rate();
  if (rate == 0.0) {
    return 0.0;
  }

  // Occupation support cut. The discarded mass of the full double sum is
  // sum over n > N of n * P(n) = rate^(N+1) ((N+1)(1-rate) + rate) / (1-rate),
  // kept below a quarter of the tolerance.
  std::uint64_t support = 0;
  double rate_pow = rate;  // rate^(support+1)
  for (;;) {
    const double cut = rate_pow *
                       ((static_cast<double>(support) + 1.0) * (1.0 - rate) + rate) /
                       (1.0 - rate);
    if (cut < 0.25 * tol) {
      break;
    }
    if (++support > term_ceiling) {
      throw TruncationError("mean absorption support exceeded the term ceiling");
    }
    rate_pow *= rate;
  }

  // Rows n = 1..support; n = 0 contributes nothing for k >= 1. Each row
  // keeps weight P(n)/(n+1) and the running power (n/(n+1))^k.
  const std::size_t rows = static_cast<std::size_t>(support);
  std::vector<double> weight(rows), ratio(rows), power(rows);
  double pn = dist.p0();
  for (std::size_t i = 0; i < rows; ++i) {
    const double n = static_cast<double>(i + 1);
    pn *= rate;
    weight[i] = pn / (n + 1.0);
    ratio[i] = n / (n + 1.0);
    power[i] = ratio[i];
  }
  if (rows == 0) {
    return 0.0;
  }

  // The k tail is bounded uniformly by the largest row ratio: the weights
  // sum below 1 and sum over k > K of k r^k has the same closed form as the
  // occupation cut above.
  const double rmax = ratio.back();
  const double rmax_denom = (1.0 - rmax) * (1.0 - rmax);
  double rmax_pow = rmax;  // rmax^k

  KahanAccumulator total;
  for (std::uint64_t k = 1;; ++k) {
    if (k > term_ceiling) {
      throw TruncationError("mean absorption k sum exceeded the term ceiling");
    }
    double row_sum = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      row_sum += weight[i] * power[i];
      power[i] *= ratio[i];
    }
    total.add(static_cast<double>(k) * row_sum);

    const double kd = static_cast<double>(k);
    const double tail =
        rmax_pow * rmax * ((kd + 1.0) * (1.0 - rmax) + rmax) / rmax_denom;
    if (tail < 0.25 * tol) {
      break;
    }
    rmax_pow *= rmax;
  }
  return total.value();
}

}  // namespace photonstat
