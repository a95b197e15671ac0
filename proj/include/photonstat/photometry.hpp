#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace photonstat {

// Old theory counts photons one by one; new theory counts whole states with
// the per-state factors 1/4 (single) and 1/8 (double). Every estimator and
// forward model below exists in both flavors.
enum class Theory { Old, New };

enum class PhotometryMethod { TwoChannel, PulseHeight, Chopper };

// Measured or predicted counts of one pair-photometry run. Only the fields
// a given method uses are set; predictions are expected values, hence real.
struct PhotometryCounts {
  std::optional<double> n1;   // channel-1 singles
  std::optional<double> n2;   // channel-2 singles
  std::optional<double> nc;   // coincidences
  std::optional<double> na;   // chopper position A counts
  std::optional<double> nb;   // chopper position B counts
  std::optional<double> n1e;  // one-electron pulses
  std::optional<double> n2e;  // two-electron pulses
  std::optional<double> m;    // emitted pair count
};

struct EfficiencyEstimate {
  double eta = 0.0;
  Theory theory = Theory::Old;
  PhotometryMethod method = PhotometryMethod::TwoChannel;
  bool clamped = false;  // raw estimate fell outside [0,1] and was clamped
};

// Efficiency of the hypothetical detector that blends the chopper's second
// beam back in. Empty means self-consistent: the blending detector is of
// the same kind as the counting one, so eta_x equals the efficiency being
// estimated (or predicted).
struct ChopperModel {
  std::optional<double> eta_x;
};

// Two-detector coincidence estimators, one per channel.
std::pair<EfficiencyEstimate, EfficiencyEstimate> eta_two_channel(
    const PhotometryCounts& counts, Theory theory);

// One-detector pulse-height estimator from the two-electron to one-electron
// pulse ratio.
EfficiencyEstimate eta_pulse_height(double n2e, double n1e, Theory theory);

// One-detector chopper estimator from the position A to position B count
// ratio. Under the new theory the invertible ratio range is [1, 2]; values
// outside it produce a clamped, flagged estimate.
EfficiencyEstimate eta_chopper(double na, double nb, Theory theory,
                               const ChopperModel& chopper = {});

// Remap of a per-photon (old) efficiency onto the per-state (new) scale:
// 2 eta / (1 + eta). Note this is not the same as re-estimating with the
// new-theory two-channel formula; the two disagree and are kept separate.
double map_old_to_new(double eta_old);

// Forward model: expected counts of every observable both one-channel
// methods and the two-channel method would record for M pairs. Chopper
// counts use eta1 and the supplied blending model.
PhotometryCounts predict_counts(double pair_count, double eta1, double eta2,
                                Theory theory, const ChopperModel& chopper = {});

// One row of the published calibration comparison.
struct Table2Row {
  std::string pmt_type;
  double one_channel_pct = 0.0;
  std::optional<double> two_channel_pct;  // one tube was never measured this way
  double sheet_pct = 0.0;
  double remapped_pct = 0.0;  // one-channel value on the new scale, table-rounded
};

// The calibration table: measured old-scale efficiencies against datasheet
// values, with the one-channel column remapped to the new scale. The
// datasheet discrepancy closes on the remapped column.
std::vector<Table2Row> reproduce_table2();

// Half-up rounding to one decimal the way the source table rounds: through
// an exact intermediate in hundredths, so 6.9498... renders as 7.0, not 6.9.
double round_percent_one_decimal(double pct);

}  // namespace photonstat
