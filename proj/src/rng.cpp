#include "photonstat/rng.hpp"

namespace photonstat {

namespace {

constexpr std::uint32_t kMultiplier0 = 0xD2511F53u;
constexpr std::uint32_t kMultiplier1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeylStep0 = 0x9E3779B9u;
constexpr std::uint32_t kWeylStep1 = 0xBB67AE85u;

struct HiLo {
  std::uint32_t hi;
  std::uint32_t lo;
};

inline HiLo mul_hi_lo(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  return {static_cast<std::uint32_t>(product >> 32),
          static_cast<std::uint32_t>(product)};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key) {
  std::array<std::uint32_t, 4> state = counter;
  std::uint32_t k0 = key[0];
  std::uint32_t k1 = key[1];
  for (int round = 0; round < 10; ++round) {
    const HiLo left = mul_hi_lo(kMultiplier0, state[0]);
    const HiLo right = mul_hi_lo(kMultiplier1, state[2]);
    state = {right.hi ^ state[1] ^ k0, right.lo, left.hi ^ state[3] ^ k1, left.lo};
    k0 += kWeylStep0;
    k1 += kWeylStep1;
  }
  return state;
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      counter_{static_cast<std::uint32_t>(trial),
               static_cast<std::uint32_t>(trial >> 32), 0u, 0u} {}

void TrialRng::refill() {
  block_ = philox4x32(counter_, key_);
  if (++counter_[2] == 0) {
    ++counter_[3];
  }
  remaining_ = 2;
}

std::uint64_t TrialRng::next_u64() {
  if (remaining_ == 0) {
    refill();
  }
  --remaining_;
  const std::size_t base = remaining_ == 1 ? 0 : 2;
  return static_cast<std::uint64_t>(block_[base]) |
         (static_cast<std::uint64_t>(block_[base + 1]) << 32);
}

double TrialRng::next_unit() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace photonstat
