#include "fpa/random.hpp"

namespace fpa {
namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t RandomSource::uniform(std::uint64_t bound) {
  assert(bound >= 1);
  if (bound <= 1) return 0;
  // Rejection sampling keeps the draw exactly uniform (no modulo bias).
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % bound;
}

std::uint64_t SplitMix64::next_u64() {
  state_ += kGamma;
  return mix(state_);
}

SplitMix64 SplitMix64::child(std::uint64_t index) const {
  return SplitMix64(derive_child_seed(seed_, index));
}

std::uint64_t derive_child_seed(std::uint64_t master_seed, std::uint64_t index) {
  return mix(master_seed + (index + 1) * kGamma);
}

std::uint64_t ScriptedSource::next_u64() {
  fail(Errc::bad_params, "ScriptedSource answers uniform() draws only");
}

std::uint64_t ScriptedSource::uniform(std::uint64_t bound) {
  assert(bound >= 1);
  if (bound <= 1) return 0;
  if (pos_ >= script_.size()) {
    if (throw_on_exhaust_) throw ScriptExhausted{bound};
    return 0;
  }
  std::uint64_t c = script_[pos_++];
  assert(c < bound);
  return c;
}

}  // namespace fpa
