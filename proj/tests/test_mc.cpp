#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "photonstat/mc.hpp"

namespace ps = photonstat;

namespace {

// Observed count against a binomial expectation, in sigmas.
double pull(std::uint64_t count, double p, std::uint64_t trials) {
  const double n = static_cast<double>(trials);
  const double sigma = std::sqrt(n * p * (1.0 - p));
  return (static_cast<double>(count) - n * p) / sigma;
}

}  // namespace

TEST_CASE("occupation sampler reproduces the geometric law") {
  const ps::ThermalCellDistribution dist(0.8);
  const std::uint64_t trials = 200000;
  std::vector<std::uint64_t> hist(12, 0);
  double mean = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    ps::TrialRng rng(11, t);
    const std::uint64_t n = ps::sample_cell_occupation(dist, rng);
    if (n < hist.size()) {
      ++hist[n];
    }
    mean += static_cast<double>(n);
  }
  mean /= static_cast<double>(trials);

  for (std::uint64_t n = 0; n < 6; ++n) {
    CHECK(std::abs(pull(hist[n], dist.pmf(n), trials)) < 4.0);
  }
  // Geometric variance is nbar (nbar + 1).
  const double sigma_mean = std::sqrt(0.8 * 1.8 / static_cast<double>(trials));
  CHECK(std::abs(mean - 0.8) < 4.0 * sigma_mean);
}

TEST_CASE("absorption sampler consumes no randomness on an empty cell") {
  ps::TrialRng probe(5, 3);
  ps::TrialRng reference(5, 3);
  CHECK(ps::sample_absorption(0, probe) == 0);
  CHECK(probe.next_u64() == reference.next_u64());
}

TEST_CASE("absorption sampler reproduces the per-cell law") {
  const std::uint64_t filling = 3;
  const std::uint64_t trials = 200000;
  std::vector<std::uint64_t> hist(10, 0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    ps::TrialRng rng(12, t);
    const std::uint64_t k = ps::sample_absorption(filling, rng);
    if (k < hist.size()) {
      ++hist[k];
    }
  }
  const ps::AbsorptionDistribution law(filling);
  for (std::uint64_t k = 0; k < 6; ++k) {
    CHECK(std::abs(pull(hist[k], law.pmf(k), trials)) < 4.0);
  }
}

TEST_CASE("thermal counting run matches its analytic outcome probabilities") {
  ps::SimConfig config;
  config.seed = 123;
  config.trials = 300000;
  config.experiment = ps::Experiment::ThermalCounting;
  config.mean_occupation = 1.0;
  config.detector1 = ps::DetectorSpec::from_eta(0.5);
  config.k_max = 6;

  const ps::EventTally tally = ps::run_thermal_counting(config);
  const std::vector<double> probs = ps::expected_probabilities(config);
  REQUIRE(tally.counts().size() == probs.size());
  REQUIRE(tally.labels().front() == "k0");
  REQUIRE(tally.labels().back() == "overflow");

  double prob_mass = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    CHECK(std::abs(pull(tally.counts()[i], probs[i], config.trials)) < 4.0);
    prob_mass += probs[i];
  }
  CHECK(std::abs(prob_mass - 1.0) < 1e-12);
}

TEST_CASE("two-channel pair run matches its outcome probabilities") {
  ps::SimConfig config;
  config.seed = 77;
  config.trials = 400000;
  config.experiment = ps::Experiment::TwoChannelPairs;
  config.detector1 = ps::DetectorSpec::from_eta(0.3);
  config.detector2 = ps::DetectorSpec::from_eta(0.6);

  const ps::EventTally tally = ps::run_pair_experiment(config);
  const std::vector<double> probs = ps::expected_probabilities(config);
  REQUIRE(tally.labels() ==
          std::vector<std::string>{"det1_only", "det2_only", "coincidence", "none"});
  CHECK(probs[0] == 0.25 * 0.3 * 0.4);
  CHECK(probs[1] == 0.25 * 0.6 * 0.7);
  CHECK(probs[2] == 0.125 * 0.3 * 0.6);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    CHECK(std::abs(pull(tally.counts()[i], probs[i], config.trials)) < 4.0);
  }
}

TEST_CASE("chopper pair run draws the two positions independently") {
  ps::SimConfig config;
  config.seed = 31;
  config.trials = 200000;
  config.experiment = ps::Experiment::ChopperPairs;
  config.detector1 = ps::DetectorSpec::from_eta(0.3);

  const ps::EventTally tally = ps::run_pair_experiment(config);
  const std::vector<double> probs = ps::expected_probabilities(config);
  REQUIRE(tally.labels() ==
          std::vector<std::string>{"a_and_b", "a_only", "b_only", "neither"});

  // Self-consistent blending detector: eta_x = eta = 0.3.
  const double pa = 0.5 * 0.3 * 0.7 + 0.125 * 0.09;
  const double pb = 0.25 * 0.3 * 0.7 + 0.125 * 0.3 * 0.3;
  CHECK(probs[0] == pa * pb);
  CHECK(probs[3] == (1.0 - pa) * (1.0 - pb));
  for (std::size_t i = 0; i < probs.size(); ++i) {
    CHECK(std::abs(pull(tally.counts()[i], probs[i], config.trials)) < 4.0);
  }

  // An explicit blending efficiency moves the position B rate.
  config.eta_x = 0.0;
  const std::vector<double> moved = ps::expected_probabilities(config);
  CHECK(std::abs((moved[0] + moved[1]) - (probs[0] + probs[1])) < 1e-15);
  CHECK(moved[0] + moved[2] > probs[0] + probs[2]);  // position B gains
}

TEST_CASE("worker count never changes the tally") {
  ps::SimConfig config;
  config.seed = 99;
  config.trials = 100001;  // odd on purpose: uneven chunking
  config.experiment = ps::Experiment::ThermalCounting;
  config.mean_occupation = 0.5;
  config.detector1 = ps::DetectorSpec::from_eta(0.3);
  config.k_max = 5;

  config.workers = 1;
  const auto serial = ps::run_simulation(config);
  config.workers = 4;
  const auto threaded = ps::run_simulation(config);
  CHECK(serial.counts() == threaded.counts());

  ps::SimConfig pairs;
  pairs.seed = 99;
  pairs.trials = 100001;
  pairs.experiment = ps::Experiment::TwoChannelPairs;
  pairs.detector1 = ps::DetectorSpec::from_eta(0.2);
  pairs.detector2 = ps::DetectorSpec::from_eta(0.4);
  pairs.workers = 1;
  const auto pair_serial = ps::run_simulation(pairs);
  pairs.workers = 3;
  const auto pair_threaded = ps::run_simulation(pairs);
  CHECK(pair_serial.counts() == pair_threaded.counts());

  // More workers than trials degrades gracefully.
  ps::SimConfig tiny = config;
  tiny.trials = 3;
  tiny.workers = 16;
  CHECK(ps::run_simulation(tiny).trials() == 3);
}

TEST_CASE("repeated runs are bit-identical") {
  ps::SimConfig config;
  config.seed = 2024;
  config.trials = 50000;
  config.experiment = ps::Experiment::ChopperPairs;
  config.detector1 = ps::DetectorSpec::from_eta(0.25);

  const auto first = ps::run_simulation(config);
  const auto second = ps::run_simulation(config);
  CHECK(first.counts() == second.counts());
}

TEST_CASE("configs are validated before running") {
  ps::SimConfig config;
  config.experiment = ps::Experiment::ThermalCounting;
  config.trials = 0;
  CHECK_THROWS_AS(ps::run_simulation(config), std::invalid_argument);

  config.trials = 10;
  config.workers = 0;
  CHECK_THROWS_AS(ps::run_simulation(config), std::invalid_argument);

  config.workers = 1;
  config.experiment = ps::Experiment::TwoChannelPairs;
  CHECK_THROWS_AS(ps::run_thermal_counting(config), std::invalid_argument);
  config.experiment = ps::Experiment::ThermalCounting;
  CHECK_THROWS_AS(ps::run_pair_experiment(config), std::invalid_argument);

  config.experiment = ps::Experiment::ChopperPairs;
  config.eta_x = 1.5;
  CHECK_THROWS_AS(ps::run_simulation(config), std::domain_error);
}

TEST_CASE("event tally enforces its own consistency") {
  CHECK_THROWS_AS(ps::EventTally(ps::Experiment::TwoChannelPairs, 10, {5, 4}, {"a"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      ps::EventTally(ps::Experiment::TwoChannelPairs, 10, {5, 4}, {"a", "b"}),
      std::invalid_argument);
  CHECK_NOTHROW(
      ps::EventTally(ps::Experiment::TwoChannelPairs, 9, {5, 4}, {"a", "b"}));
}
