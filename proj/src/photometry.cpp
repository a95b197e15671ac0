#include "photonstat/photometry.hpp"

#include <cmath>
#include <stdexcept>

namespace photonstat {

namespace {

void require_probability(double x, const char* what) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
    throw std::domain_error(std::string(what) + " must lie in [0, 1]");
  }
}

double require_count(const std::optional<double>& field, const char* what) {
  if (!field) {
    throw std::invalid_argument(std::string(what) + " is required for this method");
  }
  if (!std::isfinite(*field) || *field < 0.0) {
    throw std::domain_error(std::string(what) + " must be finite and nonnegative");
  }
  return *field;
}

EfficiencyEstimate clamp_estimate(double raw, Theory theory, PhotometryMethod method) {
  EfficiencyEstimate estimate;
  estimate.theory = theory;
  estimate.method = method;
  if (raw < 0.0) {
    estimate.eta = 0.0;
    estimate.clamped = true;
  } else if (raw > 1.0) {
    estimate.eta = 1.0;
    estimate.clamped = true;
  } else {
    estimate.eta = raw;
  }
  return estimate;
}

}  // namespace

std::pair<EfficiencyEstimate, EfficiencyEstimate> eta_two_channel(
    const PhotometryCounts& counts, Theory theory) {
  const double n1 = require_count(counts.n1, "N1");
  const double n2 = require_count(counts.n2, "N2");
  const double nc = require_count(counts.nc, "Nc");
  if (n1 == 0.0 || n2 == 0.0) {
    throw std::domain_error("two-channel estimation needs nonzero singles counts");
  }

  const double r1 = nc / n2;
  const double r2 = nc / n1;
  double raw1 = r1;
  double raw2 = r2;
  if (theory == Theory::New) {
    // Per-state counting: the coincidence to exclusive-singles ratio r obeys
    // 2r = eta / (1 - eta).
    raw1 = 2.0 * r1 / (1.0 + 2.0 * r1);
    raw2 = 2.0 * r2 / (1.0 + 2.0 * r2);
  }
  return {clamp_estimate(raw1, theory, PhotometryMethod::TwoChannel),
          clamp_estimate(raw2, theory, PhotometryMethod::TwoChannel)};
}

EfficiencyEstimate eta_pulse_height(double n2e, double n1e, Theory theory) {
  if (!std::isfinite(n2e) || n2e < 0.0) {
    throw std::domain_error("two-electron count must be finite and nonnegative");
  }
  if (!std::isfinite(n1e) || !(n1e > 0.0)) {
    throw std::domain_error("one-electron count must be positive");
  }
  const double r = n2e / n1e;
  // Old theory: r = eta / (2 (1 - eta)). New theory: r = eta / (4 (1 - eta)),
  // roughly doubling small estimates.
  const double raw = theory == Theory::Old ? 2.0 * r / (1.0 + 2.0 * r)
                                           : 4.0 * r / (1.0 + 4.0 * r);
  return clamp_estimate(raw, theory, PhotometryMethod::PulseHeight);
}

EfficiencyEstimate eta_chopper(double na, double nb, Theory theory,
                               const ChopperModel& chopper) {
  if (!std::isfinite(na) || na < 0.0) {
    throw std::domain_error("position A count must be finite and nonnegative");
  }
  if (!std::isfinite(nb) || !(nb > 0.0)) {
    throw std::domain_error("position B count must be positive");
  }
  const double ratio = na / nb;

  if (theory == Theory::Old) {
    return clamp_estimate(2.0 - ratio, theory, PhotometryMethod::Chopper);
  }
  if (chopper.eta_x) {
    require_probability(*chopper.eta_x, "blending detector efficiency");
    // Invert NA/NB = (2 - 3 eta/2) / (1 - eta_x/2) at fixed eta_x.
    const double raw = (2.0 - ratio * (1.0 - 0.5 * *chopper.eta_x)) * (2.0 / 3.0);
    return clamp_estimate(raw, theory, PhotometryMethod::Chopper);
  }
  // Self-consistent blending detector, eta_x equal to the estimate itself.
  // The fixed point has the closed form eta = 2q/(1+q) with q = 2 - NA/NB.
  const double q = 2.0 - ratio;
  if (1.0 + q <= 0.0) {
    EfficiencyEstimate estimate;
    estimate.theory = theory;
    estimate.method = PhotometryMethod::Chopper;
    estimate.clamped = true;
    return estimate;
  }
  return clamp_estimate(2.0 * q / (1.0 + q), theory, PhotometryMethod::Chopper);
}

double map_old_to_new(double eta_old) {
  require_probability(eta_old, "old-scale efficiency");
  return 2.0 * eta_old / (1.0 + eta_old);
}

PhotometryCounts predict_counts(double pair_count, double eta1, double eta2,
                                Theory theory, const ChopperModel& chopper) {
  if (!std::isfinite(pair_count) || pair_count < 0.0) {
    throw std::domain_error("pair count must be finite and nonnegative");
  }
  require_probability(eta1, "channel-1 efficiency");
  require_probability(eta2, "channel-2 efficiency");

  PhotometryCounts counts;
  counts.m = pair_count;
  const double m = pair_count;

  if (theory == Theory::Old) {
    // Each photon of the pair registers independently; singles include the
    // coincidences.
    counts.n1 = eta1 * m;
    counts.n2 = eta2 * m;
    counts.nc = eta1 * eta2 * m;
    counts.n1e = 2.0 * eta1 * (1.0 - eta1) * m;
    counts.n2e = eta1 * eta1 * m;
    counts.na = eta1 * (2.0 - eta1) * m;
    counts.nb = eta1 * m;
    return counts;
  }

  // Per-state counting with exclusive categories: a pair produces either one
  // single, one coincidence, or nothing.
  counts.n1 = 0.25 * eta1 * (1.0 - eta2) * m;
  counts.n2 = 0.25 * eta2 * (1.0 - eta1) * m;
  counts.nc = 0.125 * eta1 * eta2 * m;
  counts.n1e = 0.5 * eta1 * (1.0 - eta1) * m;
  counts.n2e = 0.125 * eta1 * eta1 * m;

  double eta_x = eta1;
  if (chopper.eta_x) {
    require_probability(*chopper.eta_x, "blending detector efficiency");
    eta_x = *chopper.eta_x;
  }
  counts.na = (0.5 * eta1 * (1.0 - eta1) + 0.125 * eta1 * eta1) * m;
  counts.nb = (0.25 * eta1 * (1.0 - eta_x) + 0.125 * eta1 * eta_x) * m;
  return counts;
}

double round_percent_one_decimal(double pct) {
  if (!std::isfinite(pct) || pct < 0.0) {
    throw std::domain_error("percent value must be finite and nonnegative");
  }
  // Two-stage half-up, the way the source table was evidently rounded:
  // first to hundredths, then to tenths, so 6.9498... becomes 6.95 -> 7.0.
  const long long hundredths = std::llround(pct * 100.0);
  const long long tenths = (hundredths + 5) / 10;
  return static_cast<double>(tenths) / 10.0;
}

std::vector<Table2Row> reproduce_table2() {
  struct Fixture {
    const char* pmt_type;
    double one_channel_pct;
    std::optional<double> two_channel_pct;
    double sheet_pct;
  };
  static const Fixture kMeasurements[] = {
      {"PMT-79", 3.6, 3.8, 7.8},
      {"PMT-79", 3.3, 3.0, 6.0},
      {"PMT-79", 1.8, std::nullopt, 5.3},
      {"C31034 A (USA)", 7.0, 7.5, 18.0},
  };

  std::vector<Table2Row> rows;
  rows.reserve(std::size(kMeasurements));
  for (const Fixture& fixture : kMeasurements) {
    Table2Row row;
    row.pmt_type = fixture.pmt_type;
    row.one_channel_pct = fixture.one_channel_pct;
    row.two_channel_pct = fixture.two_channel_pct;
    row.sheet_pct = fixture.sheet_pct;
    row.remapped_pct = round_percent_one_decimal(
        100.0 * map_old_to_new(fixture.one_channel_pct / 100.0));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace photonstat
