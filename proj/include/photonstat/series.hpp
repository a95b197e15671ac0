#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace photonstat {

// Thrown when a certified series would need more terms than the caller's
// ceiling allows to reach the requested tail bound.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultTermCeiling = 1'000'000;

// Compensated (Kahan) accumulator. Near-geometric sums with ratio close to 1
// run to thousands of terms; plain summation loses digits there.
class KahanAccumulator {
 public:
  void add(double x) {
    const double y = x - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }

  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace photonstat
