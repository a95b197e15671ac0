#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "photonstat/boundary.hpp"
#include "photonstat/rng.hpp"
#include "photonstat/thermal.hpp"

namespace photonstat {

enum class Experiment { ThermalCounting, TwoChannelPairs, ChopperPairs };

struct SimConfig {
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  Experiment experiment = Experiment::ThermalCounting;
  double mean_occupation = 0.0;                  // thermal runs
  DetectorSpec detector1{1.0, 1.0};
  DetectorSpec detector2{1.0, 1.0};              // two-channel runs
  std::optional<double> eta_x;                   // chopper runs; empty = self-consistent
  std::uint32_t k_max = 8;                       // thermal tally depth
  std::uint32_t workers = 1;
};

// Per-outcome event counts of a finished run. Outcome order is fixed per
// experiment kind:
//   thermal_counting:  k0, k1, ..., k<k_max>, overflow
//   two_channel_pairs: det1_only, det2_only, coincidence, none
//   chopper_pairs:     a_and_b, a_only, b_only, neither
// Counts always sum to the trial count.
class EventTally {
 public:
  EventTally(Experiment experiment, std::uint64_t trials,
             std::vector<std::uint64_t> counts, std::vector<std::string> labels);

  Experiment experiment() const { return experiment_; }
  std::uint64_t trials() const { return trials_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  Experiment experiment_;
  std::uint64_t trials_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::string> labels_;
};

// Inverse-CDF draw from the cell-occupation pmf.
std::uint64_t sample_cell_occupation(const ThermalCellDistribution& dist, TrialRng& rng);

// Inverse-CDF draw from the k-photon absorption pmf of a cell of filling n;
// an empty cell yields 0 without consuming randomness.
std::uint64_t sample_absorption(std::uint64_t cell_filling, TrialRng& rng);

// Per frame: sample an occupation, pass the whole state through the wave
// boundary with probability eta (detector1), then sample the absorption.
EventTally run_thermal_counting(const SimConfig& config);

// Per pair: one categorical draw over the per-state detection outcomes.
// Chopper runs draw the position A and position B responses independently
// for each emitted pair.
EventTally run_pair_experiment(const SimConfig& config);

// Dispatch on config.experiment.
EventTally run_simulation(const SimConfig& config);

// Analytic per-outcome probabilities in tally order, for the deviation
// summary and the stochastic-oracle tests.
std::vector<double> expected_probabilities(const SimConfig& config);

}  // namespace photonstat
