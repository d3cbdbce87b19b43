#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "fpa/codec.hpp"
#include "fpa/core.hpp"
#include "fpa/random.hpp"

namespace fpa {

// Noise inside the space: the output is always a valid word within Chebyshev
// distance delta of the input.
//  - exact_uniform: uniform over the whole radius-delta ball around the input.
//    Needs the space small enough to account exactly (enum_cap).
//  - swap_walk: walk_steps random transposition attempts; a swap of positions
//    (p, q) is accepted only if both displaced symbols stay within delta of
//    the ORIGINAL word at their new positions, so the distance bound can never
//    drift. walk_steps == 0 means the default 10*n.
enum class ChannelMode { exact_uniform, swap_walk };

struct ChannelConfig {
  int delta = 0;
  ChannelMode mode = ChannelMode::exact_uniform;
  int walk_steps = 0;
  std::uint64_t enum_cap = kDefaultEnumCap;
};

const char* channel_mode_name(ChannelMode mode) noexcept;
ChannelMode channel_mode_from_string(std::string_view text);

/**
 * Perturbation channel. A Channel instance memoizes the enumerated ball per
 * distinct input word, so repeated exact_uniform draws around the same
 * codeword cost O(n) after the first.
 */
class Channel {
 public:
  explicit Channel(ChannelConfig cfg) : cfg_(cfg) {}

  const ChannelConfig& config() const noexcept { return cfg_; }

  FreqPerm perturb(const FreqPerm& word, RandomSource& rng);

  // Number of words within delta of the given center (exact_uniform bookkeeping).
  std::uint64_t ball_count(const FreqPerm& center);

 private:
  struct Ball {
    std::vector<std::int8_t> flat;  // count * n symbols; int8 is safe because
                                    // any space under a 2^64 cap has m <= 20
    std::uint64_t count = 0;
  };
  const Ball& ball_for(const FreqPerm& center);

  ChannelConfig cfg_;
  std::map<std::vector<int>, Ball> cache_;
};

// One-shot convenience; builds no reusable cache.
FreqPerm perturb(const FreqPerm& word, const ChannelConfig& cfg, RandomSource& rng);

// Aggregate of one experiment run; field names match the JSON schema.
struct ExperimentReport {
  std::uint64_t trials = 0;
  int delta = 0;
  int d = 0;
  double uds_rate = 0.0;        // unique decode recovered the message
  double lfi_error_rate = 0.0;  // local decode failed to answer bit i at its first probe
  double lfi_bound = 0.0;       // theoretical ceiling (2*delta+1)/d on lfi_error_rate
  double mean_reads = 0.0;      // mean symbols_read of the local decoder
  std::uint64_t seed = 0;

  bool operator==(const ExperimentReport&) const = default;
};

double theoretical_first_iter_bound(int delta, int d);

/**
 * Runs `trials` independent trials: draw a random message, encode, perturb,
 * then (a) unique-decode the noisy word and score exact message recovery and
 * (b) local-decode a random bit index and score whether the first probe
 * already answered that bit. Trial t uses the stream derived from the master
 * seed via derive_child_seed(seed, t), so reports are reproducible and any
 * single trial can be replayed in isolation.
 */
ExperimentReport run_experiment(const CodeParams& params, const ChannelConfig& cfg,
                                std::uint64_t trials, std::uint64_t seed);

}  // namespace fpa
