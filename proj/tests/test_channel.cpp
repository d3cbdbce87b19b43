#include <doctest.h>

#include <map>
#include <vector>

#include "fpa/channel.hpp"
#include "fpa/codec.hpp"
#include "fpa/combinatorics.hpp"
#include "fpa/core.hpp"
#include "fpa/json_io.hpp"
#include "fpa/random.hpp"
#include "test_util.hpp"

using fpa::Channel;
using fpa::ChannelConfig;
using fpa::ChannelMode;
using fpa::CodeParams;
using fpa::Errc;
using fpa::FreqPerm;

TEST_CASE("channel: mode names round-trip") {
  CHECK(fpa::channel_mode_from_string("exact-uniform") == ChannelMode::exact_uniform);
  CHECK(fpa::channel_mode_from_string("swap-walk") == ChannelMode::swap_walk);
  CHECK(fpa::channel_mode_name(ChannelMode::swap_walk) == std::string("swap-walk"));
  CHECK(error_code_of([] { fpa::channel_mode_from_string("gauss"); }) == Errc::bad_params);
}

TEST_CASE("channel: delta = 0 is the identity in both modes") {
  const FreqPerm w = word_of({2, 1, 3, 1, 3, 2}, 2, 3);
  fpa::SplitMix64 rng(5);
  for (ChannelMode mode : {ChannelMode::exact_uniform, ChannelMode::swap_walk})
    CHECK(fpa::perturb(w, ChannelConfig{0, mode, 0, fpa::kDefaultEnumCap}, rng) == w);
}

TEST_CASE("channel: outputs are valid words inside the delta ball") {
  for (ChannelMode mode : {ChannelMode::exact_uniform, ChannelMode::swap_walk}) {
    const CodeParams p = CodeParams::make(2, 12, 2);
    const FreqPerm cw = fpa::encode(msg_of("10"), p);
    for (int delta : {1, 2}) {
      Channel chan(ChannelConfig{delta, mode, 0, fpa::kDefaultEnumCap});
      fpa::SplitMix64 rng(0x5EED + static_cast<std::uint64_t>(delta));
      for (int t = 0; t < 200; ++t) {
        const FreqPerm y = chan.perturb(cw, rng);
        CHECK_NOTHROW(fpa::validate_word(y.symbols(), p.lambda, p.m));
        CHECK(fpa::linf_distance(cw, y) <= delta);
      }
    }
  }
}

TEST_CASE("channel: exact-uniform hits every ball member uniformly") {
  // Around (1,1,2,2) with delta = 1 the ball is the whole 6-word space.
  Channel chan(ChannelConfig{1, ChannelMode::exact_uniform, 0, fpa::kDefaultEnumCap});
  const FreqPerm center = word_of({1, 1, 2, 2}, 2, 2);
  REQUIRE(chan.ball_count(center) == 6);

  std::map<std::vector<int>, int> hits;
  fpa::SplitMix64 rng(2024);
  const int trials = 6000;
  for (int t = 0; t < trials; ++t) ++hits[chan.perturb(center, rng).symbols()];

  REQUIRE(hits.size() == 6);
  for (const auto& [word, count] : hits) {
    CHECK(count > 1000 - 150);
    CHECK(count < 1000 + 150);
  }
}

TEST_CASE("channel: ball count does not depend on the center") {
  for (int delta : {0, 1, 2}) {
    Channel chan(ChannelConfig{delta, ChannelMode::exact_uniform, 0, fpa::kDefaultEnumCap});
    const fpa::BigInt expect = fpa::ball_size_exact(2, 6, delta);
    fpa::for_each_word(2, 3, fpa::kDefaultEnumCap, [&](const std::vector<int>& w) {
      CHECK(fpa::BigInt(chan.ball_count(FreqPerm::unchecked(w, 2, 3))) == expect);
    });
  }
}

TEST_CASE("channel: swap-walk single scripted step") {
  const CodeParams p = CodeParams::make(2, 12, 2);
  const FreqPerm cw = fpa::encode(msg_of("10"), p);
  REQUIRE(cw.symbols() == std::vector<int>{6, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6});

  SUBCASE("accepted swap") {
    // Positions 0 and 7 hold 6 and 4; both stay within delta = 2 of the
    // original word after the swap.
    fpa::ScriptedSource src({0, 7});
    const FreqPerm y =
        fpa::perturb(cw, ChannelConfig{2, ChannelMode::swap_walk, 1, fpa::kDefaultEnumCap}, src);
    CHECK(y.symbols() == std::vector<int>{4, 1, 1, 2, 2, 3, 3, 6, 4, 5, 5, 6});
  }

  SUBCASE("rejected swap") {
    // Positions 0 and 11 hold 6 and 6: p != q but the swap is a no-op either
    // way; positions 0 and 3 hold 6 and 2, out of range for delta = 2.
    fpa::ScriptedSource src({0, 3});
    const FreqPerm y =
        fpa::perturb(cw, ChannelConfig{2, ChannelMode::swap_walk, 1, fpa::kDefaultEnumCap}, src);
    CHECK(y == cw);
  }

  SUBCASE("p == q consumes the step") {
    fpa::ScriptedSource src({4, 4});
    const FreqPerm y =
        fpa::perturb(cw, ChannelConfig{2, ChannelMode::swap_walk, 1, fpa::kDefaultEnumCap}, src);
    CHECK(y == cw);
  }
}

TEST_CASE("channel: swap-walk distance never drifts over many steps") {
  const CodeParams p = CodeParams::make(3, 12, 3);
  const FreqPerm cw = fpa::encode(msg_of("101"), p);
  Channel chan(ChannelConfig{1, ChannelMode::swap_walk, 500, fpa::kDefaultEnumCap});
  fpa::SplitMix64 rng(77);
  for (int t = 0; t < 50; ++t) {
    const FreqPerm y = chan.perturb(cw, rng);
    CHECK_NOTHROW(fpa::validate_word(y.symbols(), p.lambda, p.m));
    CHECK(fpa::linf_distance(cw, y) <= 1);
  }
}

TEST_CASE("channel: exact-uniform cap guard") {
  Channel chan(ChannelConfig{1, ChannelMode::exact_uniform, 0, fpa::kDefaultEnumCap});
  const FreqPerm big = fpa::identity_perm(1, 12);
  fpa::SplitMix64 rng(1);
  CHECK(error_code_of([&] { chan.perturb(big, rng); }) == Errc::cap_exceeded);

  Channel tiny(ChannelConfig{1, ChannelMode::exact_uniform, 0, 5});
  const FreqPerm small = fpa::identity_perm(1, 3);
  CHECK(error_code_of([&] { tiny.perturb(small, rng); }) == Errc::cap_exceeded);
}

TEST_CASE("channel: first-iteration bound values") {
  CHECK(fpa::theoretical_first_iter_bound(0, 2) == doctest::Approx(0.5));
  CHECK(fpa::theoretical_first_iter_bound(1, 5) == doctest::Approx(0.6));
  CHECK(fpa::theoretical_first_iter_bound(2, 5) == doctest::Approx(1.0));
  CHECK(error_code_of([] { fpa::theoretical_first_iter_bound(1, 0); }) == Errc::bad_params);
}

TEST_CASE("experiment: noiseless channel decodes perfectly") {
  const CodeParams p = CodeParams::make(2, 6, 2);
  const ChannelConfig cfg{0, ChannelMode::exact_uniform, 0, fpa::kDefaultEnumCap};
  const auto rep = fpa::run_experiment(p, cfg, 2000, 909);
  CHECK(rep.trials == 2000);
  CHECK(rep.delta == 0);
  CHECK(rep.d == 2);
  CHECK(rep.uds_rate == 1.0);
  CHECK(rep.lfi_bound == doctest::Approx(0.5));
  // Ties can still defer the local answer past the first probe, but never
  // beyond the theoretical ceiling.
  CHECK(rep.lfi_error_rate <= rep.lfi_bound);
  CHECK(rep.mean_reads >= 2.0);
  CHECK(rep.mean_reads <= p.lambda + 1.0);
  CHECK(rep.seed == 909);
}

TEST_CASE("experiment: within the packing radius the unique decoder never fails") {
  // (2, 12, 2): d = 5, so delta = 2 <= floor((d-1)/2) keeps recovery exact.
  const CodeParams p = CodeParams::make(2, 12, 2);
  for (ChannelMode mode : {ChannelMode::exact_uniform, ChannelMode::swap_walk}) {
    const auto rep =
        fpa::run_experiment(p, ChannelConfig{2, mode, 0, fpa::kDefaultEnumCap}, 1500, 4242);
    CHECK(rep.uds_rate == 1.0);
    CHECK(rep.lfi_bound == doctest::Approx(1.0));
  }
}

TEST_CASE("experiment: reports are reproducible") {
  const CodeParams p = CodeParams::make(2, 8, 4);
  const ChannelConfig cfg{1, ChannelMode::swap_walk, 0, fpa::kDefaultEnumCap};
  CHECK(fpa::run_experiment(p, cfg, 500, 31337) == fpa::run_experiment(p, cfg, 500, 31337));
}

TEST_CASE("experiment: trivial inputs are rejected") {
  const CodeParams p = CodeParams::make(2, 6, 2);
  const ChannelConfig cfg{0, ChannelMode::exact_uniform, 0, fpa::kDefaultEnumCap};
  CHECK(error_code_of([&] { fpa::run_experiment(p, cfg, 0, 1); }) == Errc::empty_trials);
  const CodeParams k0 = CodeParams::make(2, 6, 0);
  CHECK(error_code_of([&] { fpa::run_experiment(k0, cfg, 10, 1); }) == Errc::bad_params);
}

TEST_CASE("experiment: json view carries the full schema") {
  const CodeParams p = CodeParams::make(2, 6, 2);
  const auto rep = fpa::run_experiment(
      p, ChannelConfig{0, ChannelMode::exact_uniform, 0, fpa::kDefaultEnumCap}, 50, 7);
  const nlohmann::json j = fpa::to_json(rep);
  for (const char* key :
       {"trials", "delta", "d", "uds_rate", "lfi_error_rate", "lfi_bound", "mean_reads", "seed"})
    CHECK(j.contains(key));
  CHECK(j["trials"] == 50);
  CHECK(j["uds_rate"] == 1.0);
}
