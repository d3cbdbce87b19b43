#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fpa/common.hpp"

namespace fpa {

/**
 * Source of randomness for every randomized routine in the library.
 *
 * All consumers draw through uniform(bound); that is the unit of the
 * "randomness tree": a run of a randomized routine is fully determined by the
 * sequence of answers it receives. Tests exploit this by substituting
 * ScriptedSource, and enumerate_randomness() walks every possible answer
 * sequence with its exact probability.
 */
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  virtual std::uint64_t next_u64() = 0;

  // Uniform draw from {0, ..., bound-1}. bound == 1 is answered without
  // consuming randomness so degenerate draws do not widen the tree.
  virtual std::uint64_t uniform(std::uint64_t bound);
};

/**
 * SplitMix64 stream. Small, fast, and stable across platforms, which keeps
 * seeds replayable everywhere (the standard <random> distributions are not
 * bit-portable). child(t) derives the stream for trial t from a master seed;
 * the derivation is mix(seed + (t+1)*GAMMA), i.e. the (t+1)-th raw output of
 * the master stream, so trials are independent and individually replayable.
 */
class SplitMix64 final : public RandomSource {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed), seed_(seed) {}

  std::uint64_t next_u64() override;

  std::uint64_t seed() const noexcept { return seed_; }

  SplitMix64 child(std::uint64_t index) const;

 private:
  std::uint64_t state_;
  std::uint64_t seed_;
};

std::uint64_t derive_child_seed(std::uint64_t master_seed, std::uint64_t index);

// Thrown by ScriptedSource when a run requests more choices than scripted.
// enumerate_randomness() catches it to discover branch points.
struct ScriptExhausted {
  std::uint64_t bound;
};

/**
 * Replays a fixed list of uniform() answers. next_u64() is deliberately
 * unsupported: scripted runs must draw only through uniform(), otherwise the
 * tree walk could not assign probabilities.
 */
class ScriptedSource final : public RandomSource {
 public:
  explicit ScriptedSource(std::vector<std::uint64_t> script, bool throw_on_exhaust = false)
      : script_(std::move(script)), throw_on_exhaust_(throw_on_exhaust) {}

  std::uint64_t next_u64() override;

  std::uint64_t uniform(std::uint64_t bound) override;

  std::size_t consumed() const noexcept { return pos_; }

 private:
  std::vector<std::uint64_t> script_;
  std::size_t pos_ = 0;
  bool throw_on_exhaust_;
};

/**
 * Runs `run` once per leaf of its randomness tree and hands each result to
 * `leaf` together with the exact probability of that leaf.
 *
 * run must draw only through uniform() and its control flow may depend only on
 * the drawn answers (rerunning with the same answers must reach the same
 * state). Leaves are visited in lexicographic order of the answer sequence.
 * max_leaves guards against unexpectedly wide trees.
 */
template <class RunFn, class LeafFn>
void enumerate_randomness(RunFn&& run, LeafFn&& leaf, std::uint64_t max_leaves = 1'000'000) {
  using Result = std::remove_cvref_t<decltype(run(std::declval<RandomSource&>()))>;
  std::vector<std::uint64_t> prefix;
  std::vector<std::uint64_t> bounds;
  std::uint64_t leaves = 0;

  std::function<void()> walk = [&]() {
    ScriptedSource src(prefix, /*throw_on_exhaust=*/true);
    std::optional<Result> result;
    std::uint64_t branch_bound = 0;
    try {
      result.emplace(run(static_cast<RandomSource&>(src)));
    } catch (const ScriptExhausted& stop) {
      branch_bound = stop.bound;
    }
    if (result.has_value()) {
      assert(src.consumed() == prefix.size());  // every scripted answer was used
      if (++leaves > max_leaves)
        fail(Errc::cap_exceeded, "randomness tree exceeds " + std::to_string(max_leaves) + " leaves");
      double prob = 1.0;
      for (std::uint64_t b : bounds) prob /= static_cast<double>(b);
      leaf(*result, prob);
      return;
    }
    bounds.push_back(branch_bound);
    prefix.push_back(0);
    for (std::uint64_t c = 0; c < branch_bound; ++c) {
      prefix.back() = c;
      walk();
    }
    prefix.pop_back();
    bounds.pop_back();
  };
  walk();
}

}  // namespace fpa
