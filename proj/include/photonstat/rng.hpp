#pragma once

#include <array>
#include <cstdint>

namespace photonstat {

// Philox 4x32 with 10 rounds: a counter-based generator, i.e. a pure
// function of (counter, key). Any position in any stream can be addressed
// directly, which is what makes worker-count-independent Monte Carlo
// possible. Verified against the published known-answer vectors in tests.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

// One random stream per trial: the 64-bit run seed keys the generator and
// the trial index selects the stream (counter words 0..1), with a 64-bit
// block counter in words 2..3. Trial i therefore sees the same draws no
// matter which worker executes it or how many workers exist. This scheme is
// part of the tool's reproducibility contract.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next_u64();

  // Uniform on (0, 1]: top 53 bits plus one ulp, so log(u) is always finite.
  double next_unit();

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  int remaining_ = 0;
};

}  // namespace photonstat
