#include "photonstat/mc.hpp"

#include <cassert>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "photonstat/absorption.hpp"

namespace photonstat {

namespace {

std::vector<std::string> labels_for(Experiment experiment, std::uint32_t k_max) {
  std::vector<std::string> labels;
  switch (experiment) {
    case Experiment::ThermalCounting:
      labels.reserve(k_max + 2);
      for (std::uint32_t k = 0; k <= k_max; ++k) {
        labels.push_back("k" + std::to_string(k));
      }
      labels.push_back("overflow");
      break;
    case Experiment::TwoChannelPairs:
      labels = {"det1_only", "det2_only", "coincidence", "none"};
      break;
    case Experiment::ChopperPairs:
      labels = {"a_and_b", "a_only", "b_only", "neither"};
      break;
  }
  return labels;
}

void validate_common(const SimConfig& config) {
  if (config.trials == 0) {
    throw std::invalid_argument("simulation needs at least one trial");
  }
  if (config.workers == 0) {
    throw std::invalid_argument("simulation needs at least one worker");
  }
}

double chopper_eta_x(const SimConfig& config) {
  const double eta = config.detector1.eta();
  if (!config.eta_x) {
    return eta;  // self-consistent blending detector
  }
  if (!std::isfinite(*config.eta_x) || *config.eta_x < 0.0 || *config.eta_x > 1.0) {
    throw std::domain_error("blending detector efficiency must lie in [0, 1]");
  }
  return *config.eta_x;
}

// Runs fn(trial begin, trial end, per-worker counts) over contiguous trial
// ranges. Trials own their RNG streams, so the partition does not affect
// any count; merging in worker order keeps that manifestly true.
template <typename Fn>
EventTally run_partitioned(const SimConfig& config, std::size_t n_outcomes, Fn fn) {
  const std::uint64_t worker_count =
      std::min<std::uint64_t>(config.workers, config.trials);
  std::vector<std::vector<std::uint64_t>> partial(
      worker_count, std::vector<std::uint64_t>(n_outcomes, 0));

  if (worker_count == 1) {
    fn(0, config.trials, partial[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    const std::uint64_t chunk = config.trials / worker_count;
    const std::uint64_t remainder = config.trials % worker_count;
    std::uint64_t begin = 0;
    for (std::uint64_t w = 0; w < worker_count; ++w) {
      const std::uint64_t size = chunk + (w < remainder ? 1 : 0);
      pool.emplace_back(fn, begin, begin + size, std::ref(partial[w]));
      begin += size;
    }
    for (std::thread& worker : pool) {
      worker.join();
    }
  }

  std::vector<std::uint64_t> counts(n_outcomes, 0);
  for (const auto& part : partial) {
    for (std::size_t i = 0; i < n_outcomes; ++i) {
      counts[i] += part[i];
    }
  }
  return EventTally(config.experiment, config.trials, std::move(counts),
                    labels_for(config.experiment, config.k_max));
}

}  // namespace

EventTally::EventTally(Experiment experiment, std::uint64_t trials,
                       std::vector<std::uint64_t> counts,
                       std::vector<std::string> labels)
    : experiment_(experiment),
      trials_(trials),
      counts_(std::move(counts)),
      labels_(std::move(labels)) {
  if (counts_.size() != labels_.size()) {
    throw std::invalid_argument("tally needs one label per outcome");
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : counts_) {
    total += c;
  }
  if (total != trials_) {
    throw std::invalid_argument("outcome counts must sum to the trial count");
  }
}

std::uint64_t sample_cell_occupation(const ThermalCellDistribution& dist,
                                     TrialRng& rng) {
  const double rate = dist.mean_rate();
  const double u = rng.next_unit();
  if (u > rate) {
    return 0;  // covers rate = 0 and the bulk of small-rate draws
  }
  // Inverse CDF of the geometric tail P(n >= m) = rate^m.
  return static_cast<std::uint64_t>(std::log(u) / std::log(rate));
}

std::uint64_t sample_absorption(std::uint64_t cell_filling, TrialRng& rng) {
  if (cell_filling == 0) {
    return 0;
  }
  const double n = static_cast<double>(cell_filling);
  const double rate = n / (n + 1.0);
  const double u = rng.next_unit();
  if (u > rate) {
    return 0;
  }
  return static_cast<std::uint64_t>(std::log(u) / std::log(rate));
}

EventTally run_thermal_counting(const SimConfig& config) {
  if (config.experiment != Experiment::ThermalCounting) {
    throw std::invalid_argument("config does not describe a thermal counting run");
  }
  validate_common(config);
  const ThermalCellDistribution dist(config.mean_occupation);
  const double eta = config.detector1.eta();
  const std::size_t overflow = config.k_max + 1;

  return run_partitioned(
      config, config.k_max + 2,
      [&config, &dist, eta, overflow](std::uint64_t begin, std::uint64_t end,
                                      std::vector<std::uint64_t>& counts) {
        for (std::uint64_t trial = begin; trial < end; ++trial) {
          TrialRng rng(config.seed, trial);
          const std::uint64_t n = sample_cell_occupation(dist, rng);
          std::uint64_t k = 0;
          if (rng.next_unit() <= eta) {
            k = sample_absorption(n, rng);
          }
          const std::size_t bucket =
              k > config.k_max ? overflow : static_cast<std::size_t>(k);
          ++counts[bucket];
        }
      });
}

EventTally run_pair_experiment(const SimConfig& config) {
  validate_common(config);
  if (config.experiment == Experiment::TwoChannelPairs) {
    const double eta1 = config.detector1.eta();
    const double eta2 = config.detector2.eta();
    const double p1 = 0.25 * eta1 * (1.0 - eta2);
    const double p2 = 0.25 * eta2 * (1.0 - eta1);
    const double pc = 0.125 * eta1 * eta2;
    const double t1 = p1;
    const double t2 = p1 + p2;
    const double t3 = p1 + p2 + pc;
    assert(t3 <= 1.0);

    return run_partitioned(
        config, 4,
        [&config, t1, t2, t3](std::uint64_t begin, std::uint64_t end,
                              std::vector<std::uint64_t>& counts) {
          for (std::uint64_t trial = begin; trial < end; ++trial) {
            TrialRng rng(config.seed, trial);
            const double u = rng.next_unit();
            const std::size_t bucket = u <= t1 ? 0 : u <= t2 ? 1 : u <= t3 ? 2 : 3;
            ++counts[bucket];
          }
        });
  }
  if (config.experiment == Experiment::ChopperPairs) {
    const double eta = config.detector1.eta();
    const double eta_x = chopper_eta_x(config);
    const double pa = 0.5 * eta * (1.0 - eta) + 0.125 * eta * eta;
    const double pb = 0.25 * eta * (1.0 - eta_x) + 0.125 * eta * eta_x;
    assert(pa <= 1.0 && pb <= 1.0);

    return run_partitioned(
        config, 4,
        [&config, pa, pb](std::uint64_t begin, std::uint64_t end,
                          std::vector<std::uint64_t>& counts) {
          for (std::uint64_t trial = begin; trial < end; ++trial) {
            TrialRng rng(config.seed, trial);
            const bool hit_a = rng.next_unit() <= pa;
            const bool hit_b = rng.next_unit() <= pb;
            const std::size_t bucket = hit_a ? (hit_b ? 0 : 1) : (hit_b ? 2 : 3);
            ++counts[bucket];
          }
        });
  }
  throw std::invalid_argument("config does not describe a pair experiment");
}

EventTally run_simulation(const SimConfig& config) {
  if (config.experiment == Experiment::ThermalCounting) {
    return run_thermal_counting(config);
  }
  return run_pair_experiment(config);
}

std::vector<double> expected_probabilities(const SimConfig& config) {
  switch (config.experiment) {
    case Experiment::ThermalCounting: {
      const ThermalCellDistribution dist(config.mean_occupation);
      const double eta = config.detector1.eta();
      std::vector<double> probs(config.k_max + 2, 0.0);
      KahanAccumulator used;
      probs[0] = (1.0 - eta) +
                 eta * total_absorption_probability(dist, 0, 1e-13).value;
      used.add(probs[0]);
      for (std::uint32_t k = 1; k <= config.k_max; ++k) {
        probs[k] = eta * total_absorption_probability(dist, k, 1e-13).value;
        used.add(probs[k]);
      }
      probs[config.k_max + 1] = std::max(0.0, 1.0 - used.value());
      return probs;
    }
    case Experiment::TwoChannelPairs: {
      const double eta1 = config.detector1.eta();
      const double eta2 = config.detector2.eta();
      const double p1 = 0.25 * eta1 * (1.0 - eta2);
      const double p2 = 0.25 * eta2 * (1.0 - eta1);
      const double pc = 0.125 * eta1 * eta2;
      return {p1, p2, pc, 1.0 - p1 - p2 - pc};
    }
    case Experiment::ChopperPairs: {
      const double eta = config.detector1.eta();
      const double eta_x = chopper_eta_x(config);
      const double pa = 0.5 * eta * (1.0 - eta) + 0.125 * eta * eta;
      const double pb = 0.25 * eta * (1.0 - eta_x) + 0.125 * eta * eta_x;
      return {pa * pb, pa * (1.0 - pb), (1.0 - pa) * pb, (1.0 - pa) * (1.0 - pb)};
    }
  }
  throw std::logic_error("unknown experiment kind");
}

}  // namespace photonstat
