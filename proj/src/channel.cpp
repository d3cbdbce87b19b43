#include "fpa/channel.hpp"

#include <algorithm>
#include <cstdlib>

namespace fpa {

const char* channel_mode_name(ChannelMode mode) noexcept {
  switch (mode) {
    case ChannelMode::exact_uniform: return "exact-uniform";
    case ChannelMode::swap_walk: return "swap-walk";
  }
  return "unknown";
}

ChannelMode channel_mode_from_string(std::string_view text) {
  if (text == "exact-uniform") return ChannelMode::exact_uniform;
  if (text == "swap-walk") return ChannelMode::swap_walk;
  fail(Errc::bad_params, "unknown channel mode '" + std::string(text) +
                             "' (expected exact-uniform or swap-walk)");
}

const Channel::Ball& Channel::ball_for(const FreqPerm& center) {
  auto it = cache_.find(center.symbols());
  if (it != cache_.end()) return it->second;

  // The exact accounting contract is over the whole space, so the space has
  // to fit under the cap even though only the ball is materialized.
  if (space_size(center.lambda(), center.m()) > cfg_.enum_cap)
    fail(Errc::cap_exceeded, "exact-uniform channel needs the space under cap " +
                                 std::to_string(cfg_.enum_cap));
  const int n = center.size();
  const int m = center.m();
  if (m > 127) fail(Errc::cap_exceeded, "exact-uniform channel limited to m <= 127");

  Ball ball;
  std::vector<int> remaining(static_cast<std::size_t>(m) + 1, center.lambda());
  std::vector<std::int8_t> cur(static_cast<std::size_t>(n));
  // Depth-first over positions; at position p any symbol within delta of the
  // center that still has copies left is admissible. Emits in lexicographic
  // order.
  auto rec = [&](auto&& self, int p) -> void {
    if (p == n) {
      if (ball.count >= cfg_.enum_cap)
        fail(Errc::cap_exceeded, "ball larger than cap " + std::to_string(cfg_.enum_cap));
      ball.flat.insert(ball.flat.end(), cur.begin(), cur.end());
      ++ball.count;
      return;
    }
    const int lo = std::max(1, center[p] - cfg_.delta);
    const int hi = std::min(m, center[p] + cfg_.delta);
    for (int s = lo; s <= hi; ++s) {
      if (remaining[static_cast<std::size_t>(s)] == 0) continue;
      --remaining[static_cast<std::size_t>(s)];
      cur[static_cast<std::size_t>(p)] = static_cast<std::int8_t>(s);
      self(self, p + 1);
      ++remaining[static_cast<std::size_t>(s)];
    }
  };
  rec(rec, 0);
  return cache_.emplace(center.symbols(), std::move(ball)).first->second;
}

std::uint64_t Channel::ball_count(const FreqPerm& center) { return ball_for(center).count; }

FreqPerm Channel::perturb(const FreqPerm& word, RandomSource& rng) {
  if (cfg_.delta < 0) fail(Errc::bad_params, "delta must be >= 0");
  if (cfg_.delta == 0) return word;

  if (cfg_.mode == ChannelMode::exact_uniform) {
    const Ball& ball = ball_for(word);
    const std::uint64_t pick = rng.uniform(ball.count);
    const std::size_t n = static_cast<std::size_t>(word.size());
    std::vector<int> symbols(n);
    const std::int8_t* base = ball.flat.data() + pick * n;
    for (std::size_t p = 0; p < n; ++p) symbols[p] = base[p];
    return FreqPerm::unchecked(std::move(symbols), word.lambda(), word.m());
  }

  // swap_walk
  const int n = word.size();
  const std::vector<int>& orig = word.symbols();
  std::vector<int> x = orig;
  const int steps = cfg_.walk_steps > 0 ? cfg_.walk_steps : 10 * n;
  for (int step = 0; step < steps; ++step) {
    const int p = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n)));
    const int q = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n)));
    if (p == q) continue;
    const int sp = x[static_cast<std::size_t>(p)];
    const int sq = x[static_cast<std::size_t>(q)];
    if (std::abs(sq - orig[static_cast<std::size_t>(p)]) <= cfg_.delta &&
        std::abs(sp - orig[static_cast<std::size_t>(q)]) <= cfg_.delta) {
      x[static_cast<std::size_t>(p)] = sq;
      x[static_cast<std::size_t>(q)] = sp;
    }
  }
  return FreqPerm::unchecked(std::move(x), word.lambda(), word.m());
}

FreqPerm perturb(const FreqPerm& word, const ChannelConfig& cfg, RandomSource& rng) {
  Channel chan(cfg);
  return chan.perturb(word, rng);
}

double theoretical_first_iter_bound(int delta, int d) {
  if (d < 1) fail(Errc::bad_params, "bound needs d >= 1");
  return (2.0 * delta + 1.0) / static_cast<double>(d);
}

ExperimentReport run_experiment(const CodeParams& params, const ChannelConfig& cfg,
                                std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) fail(Errc::empty_trials, "run_experiment needs trials >= 1");
  if (params.k < 1) fail(Errc::bad_params, "run_experiment needs k >= 1");

  Channel chan(cfg);
  std::uint64_t uds_ok = 0;
  std::uint64_t lfi_err = 0;
  std::uint64_t reads = 0;

  Message msg;
  msg.bits.resize(static_cast<std::size_t>(params.k));
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_child_seed(seed, t));
    for (int b = 0; b < params.k; ++b)
      msg.bits[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(rng.uniform(2));
    const FreqPerm x = encode(msg, params);
    const FreqPerm y = chan.perturb(x, rng);

    // Channel contract check: stay a valid word, stay within delta.
    validate_word(y.symbols(), params.lambda, params.m);
    if (linf_distance(x, y) > cfg.delta)
      fail(Errc::bad_params, "channel produced a word outside its delta ball");

    if (unique_decode(y, params) == msg) ++uds_ok;

    const int i = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(params.k)));
    const LocalDecodeResult loc = local_decode(y, i, params, rng);
    if (!(loc.iterations == 1 && loc.bit == msg.bits[static_cast<std::size_t>(i)])) ++lfi_err;
    reads += static_cast<std::uint64_t>(loc.symbols_read);
  }

  ExperimentReport rep;
  rep.trials = trials;
  rep.delta = cfg.delta;
  rep.d = params.d;
  rep.uds_rate = static_cast<double>(uds_ok) / static_cast<double>(trials);
  rep.lfi_error_rate = static_cast<double>(lfi_err) / static_cast<double>(trials);
  rep.lfi_bound = theoretical_first_iter_bound(cfg.delta, params.d);
  rep.mean_reads = static_cast<double>(reads) / static_cast<double>(trials);
  rep.seed = seed;
  return rep;
}

}  // namespace fpa
