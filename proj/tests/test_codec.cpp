#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "fpa/codec.hpp"
#include "fpa/core.hpp"
#include "fpa/random.hpp"
#include "test_util.hpp"

using fpa::CodeParams;
using fpa::Errc;
using fpa::FreqPerm;
using fpa::Message;

TEST_CASE("message: text forms") {
  CHECK(Message::from_string("10").bits == std::vector<std::uint8_t>{1, 0});
  CHECK(Message::from_string("").size() == 0);
  CHECK(Message::from_string("0110").to_string() == "0110");
  CHECK(error_code_of([] { Message::from_string("1x0"); }) == Errc::bad_params);
}

TEST_CASE("encode: pinned words") {
  const CodeParams p6 = CodeParams::make(2, 6, 2);
  CHECK(fpa::encode(msg_of("10"), p6).symbols() == std::vector<int>{3, 1, 1, 2, 2, 3});
  CHECK(fpa::encode(msg_of("11"), p6).symbols() == std::vector<int>{3, 3, 1, 1, 2, 2});
  CHECK(fpa::encode(msg_of("01"), p6).symbols() == std::vector<int>{1, 3, 1, 2, 2, 3});
  CHECK(fpa::encode(msg_of("00"), p6).symbols() == std::vector<int>{1, 1, 2, 2, 3, 3});

  const CodeParams p12 = CodeParams::make(2, 12, 2);
  CHECK(fpa::encode(msg_of("10"), p12).symbols() ==
        std::vector<int>{6, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6});

  // k == 0 encodes to the identity word.
  const CodeParams p0 = CodeParams::make(2, 6, 0);
  CHECK(fpa::encode(Message{}, p0).symbols() == std::vector<int>{1, 1, 2, 2, 3, 3});
}

TEST_CASE("encode: message length is enforced") {
  const CodeParams p = CodeParams::make(2, 6, 2);
  CHECK(error_code_of([&] { fpa::encode(msg_of("101"), p); }) == Errc::wrong_length);
  CHECK(error_code_of([&] { fpa::encode(msg_of("1"), p); }) == Errc::wrong_length);
}

TEST_CASE("decode: pinned messages and tie handling") {
  const CodeParams p = CodeParams::make(2, 6, 2);
  CHECK(fpa::unique_decode(word_of({3, 1, 1, 2, 2, 3}, 2, 3), p).to_string() == "10");
  CHECK(fpa::unique_decode(word_of({3, 3, 1, 1, 2, 2}, 2, 3), p).to_string() == "11");
  // Symbol 2 is equidistant from both cursors at every data position here, and
  // ties must decode as 0.
  CHECK(fpa::unique_decode(word_of({2, 2, 1, 1, 3, 3}, 2, 3), p).to_string() == "00");

  // The codeword of (1,0) at n = 12 with positions 0 and 7 swapped sits at
  // distance 2 <= floor((5-1)/2) and still decodes cleanly.
  const CodeParams p12 = CodeParams::make(2, 12, 2);
  CHECK(fpa::unique_decode(word_of({4, 1, 1, 2, 2, 3, 3, 6, 4, 5, 5, 6}, 2, 6), p12).to_string() ==
        "10");

  CHECK(error_code_of([&] { fpa::unique_decode(word_of({1, 2, 3}, 1, 3), p); }) ==
        Errc::wrong_length);
}

TEST_CASE("codec: exhaustive round-trip at 2^16 messages") {
  for (const auto& [lambda, n, k] :
       std::vector<std::tuple<int, int, int>>{{2, 20, 16}, {1, 17, 16}}) {
    const CodeParams p = CodeParams::make(lambda, n, k);
    fpa::CodewordEnumerator en(p);
    std::uint64_t count = 0;
    while (en.next()) {
      CHECK_NOTHROW(fpa::validate_word(en.codeword().symbols(), p.lambda, p.m));
      if (fpa::unique_decode(en.codeword(), p) != en.message()) {
        CAPTURE(en.message().to_string());
        FAIL("round-trip mismatch");
      }
      ++count;
    }
    CHECK(count == (std::uint64_t{1} << k));
  }
}

TEST_CASE("codec: codewords are distinct and meet the distance floor") {
  const CodeParams p = CodeParams::make(2, 6, 2);
  std::vector<FreqPerm> words;
  fpa::CodewordEnumerator en(p);
  while (en.next()) words.push_back(en.codeword());

  REQUIRE(words.size() == 4);
  // Lexicographic message order: 00, 01, 10, 11.
  CHECK(words[0].symbols() == std::vector<int>{1, 1, 2, 2, 3, 3});
  CHECK(words[1].symbols() == std::vector<int>{1, 3, 1, 2, 2, 3});
  CHECK(words[2].symbols() == std::vector<int>{3, 1, 1, 2, 2, 3});
  CHECK(words[3].symbols() == std::vector<int>{3, 3, 1, 1, 2, 2});

  int min_dist = p.n;
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a + 1; b < words.size(); ++b)
      min_dist = std::min(min_dist, fpa::linf_distance(words[a], words[b]));
  CHECK(min_dist == p.d);
}

TEST_CASE("codec: pairwise distance >= d on small parameter grid") {
  for (const auto& [lambda, n, k] : std::vector<std::tuple<int, int, int>>{
           {1, 6, 3}, {2, 8, 4}, {3, 9, 3}, {2, 8, 6}, {1, 8, 5}, {4, 8, 3}}) {
    const CodeParams p = CodeParams::make(lambda, n, k);
    std::vector<FreqPerm> words;
    fpa::CodewordEnumerator en(p);
    while (en.next()) words.push_back(en.codeword());
    std::set<FreqPerm> uniq(words.begin(), words.end());
    CHECK(uniq.size() == words.size());
    for (std::size_t a = 0; a < words.size(); ++a)
      for (std::size_t b = a + 1; b < words.size(); ++b) {
        if (fpa::linf_distance(words[a], words[b]) < p.d) {
          CAPTURE(lambda);
          CAPTURE(n);
          CAPTURE(k);
          FAIL("codeword pair below the distance floor");
        }
      }
  }
}

TEST_CASE("decode: corrects every word within the packing radius") {
  // (1, 6, 3): d = 3, so every word at distance <= 1 from a codeword must
  // decode to that codeword's message. Scans the whole 720-word space.
  const CodeParams p = CodeParams::make(1, 6, 3);
  REQUIRE(p.d == 3);

  std::vector<std::pair<Message, FreqPerm>> code;
  fpa::CodewordEnumerator en(p);
  while (en.next()) code.emplace_back(en.message(), en.codeword());

  std::uint64_t covered = 0;
  fpa::for_each_word(p.lambda, p.m, fpa::kDefaultEnumCap, [&](const std::vector<int>& w) {
    const FreqPerm word = FreqPerm::unchecked(w, p.lambda, p.m);
    for (const auto& [msg, cw] : code) {
      if (fpa::linf_distance(word, cw) <= (p.d - 1) / 2) {
        ++covered;
        if (fpa::unique_decode(word, p) != msg) {
          CAPTURE(fpa::word_to_string(w));
          FAIL("decoding failed inside the packing radius");
        }
      }
    }
  });
  CHECK(covered > 8);  // every codeword has non-trivial ball mass
}

TEST_CASE("local decode: forced outcome when no ties are possible") {
  const CodeParams p = CodeParams::make(2, 6, 2);
  const FreqPerm w = word_of({1, 1, 2, 2, 3, 3}, 2, 3);
  // x_1 = 1 and every later position differs, so any probe finishes at once.
  for (std::uint64_t seed : {1u, 2u, 3u, 99u}) {
    fpa::SplitMix64 rng(seed);
    const auto res = fpa::local_decode(w, 1, p, rng);
    CHECK(res.bit == 0);
    CHECK(res.iterations == 1);
    CHECK(res.symbols_read == 2);
    REQUIRE(res.read_positions.size() == 2);
    CHECK(res.read_positions[0] == 1);
    CHECK(res.read_positions[1] > 1);
  }
}

TEST_CASE("local decode: scripted tie then resolution") {
  const CodeParams p = CodeParams::make(2, 6, 2);
  const FreqPerm w = word_of({3, 3, 1, 1, 2, 2}, 2, 3);
  // First draw picks position 1 (x = 3, a tie with x_0); the script then runs
  // out and the non-throwing source answers 0, picking position 2 (x = 1).
  fpa::ScriptedSource src({0});
  const auto res = fpa::local_decode(w, 0, p, src);
  CHECK(res.bit == 1);
  CHECK(res.iterations == 2);
  CHECK(res.symbols_read == 3);
  CHECK(res.read_positions == std::vector<int>{0, 1, 2});
}

TEST_CASE("local decode: full randomness tree is always correct") {
  for (const auto& [lambda, n, k] :
       std::vector<std::tuple<int, int, int>>{{2, 6, 2}, {3, 9, 3}, {1, 6, 3}}) {
    const CodeParams p = CodeParams::make(lambda, n, k);
    fpa::CodewordEnumerator en(p);
    while (en.next()) {
      const Message msg = en.message();
      const FreqPerm cw = en.codeword();
      for (int i = 0; i < p.k; ++i) {
        double total = 0.0;
        fpa::enumerate_randomness(
            [&](fpa::RandomSource& rng) { return fpa::local_decode(cw, i, p, rng); },
            [&](const fpa::LocalDecodeResult& res, double prob) {
              total += prob;
              CHECK(res.bit == msg.bits[static_cast<std::size_t>(i)]);
              CHECK(res.iterations >= 1);
              CHECK(res.iterations <= p.lambda);
              CHECK(res.symbols_read == res.iterations + 1);
              // Reads: position i first, then distinct later positions.
              CHECK(res.read_positions.front() == i);
              std::set<int> uniq(res.read_positions.begin(), res.read_positions.end());
              CHECK(uniq.size() == res.read_positions.size());
              for (std::size_t t = 1; t < res.read_positions.size(); ++t)
                CHECK(res.read_positions[t] > i);
            });
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("local decode: replayable from the seed") {
  const CodeParams p = CodeParams::make(3, 12, 5);
  const FreqPerm cw = fpa::encode(msg_of("10110"), p);
  for (int i = 0; i < p.k; ++i) {
    fpa::SplitMix64 a(42), b(42);
    const auto ra = fpa::local_decode(cw, i, p, a);
    const auto rb = fpa::local_decode(cw, i, p, b);
    CHECK(ra.bit == rb.bit);
    CHECK(ra.read_positions == rb.read_positions);
  }
}

TEST_CASE("local decode: index validation") {
  const CodeParams p = CodeParams::make(2, 6, 2);
  const FreqPerm cw = fpa::encode(msg_of("10"), p);
  fpa::SplitMix64 rng(1);
  CHECK(error_code_of([&] { fpa::local_decode(cw, 2, p, rng); }) == Errc::index_out_of_range);
  CHECK(error_code_of([&] { fpa::local_decode(cw, -1, p, rng); }) == Errc::index_out_of_range);
  CHECK(error_code_of([&] { fpa::local_decode(word_of({1, 2, 3}, 1, 3), 0, p, rng); }) ==
        Errc::wrong_length);
}

TEST_CASE("codeword enumerator: smallest codes") {
  const CodeParams p = CodeParams::make(1, 2, 1);
  fpa::CodewordEnumerator en(p);
  REQUIRE(en.next());
  CHECK(en.message().to_string() == "0");
  CHECK(en.codeword().symbols() == std::vector<int>{1, 2});
  REQUIRE(en.next());
  CHECK(en.message().to_string() == "1");
  CHECK(en.codeword().symbols() == std::vector<int>{2, 1});
  CHECK_FALSE(en.next());

  // k = 0: the single codeword is the identity word.
  const CodeParams p0 = CodeParams::make(2, 6, 0);
  fpa::CodewordEnumerator zero(p0);
  REQUIRE(zero.next());
  CHECK(zero.message().size() == 0);
  CHECK(zero.codeword() == fpa::identity_perm(2, 3));
  CHECK_FALSE(zero.next());
}

TEST_CASE("codeword enumerator: cap guard") {
  const CodeParams p = CodeParams::make(1, 22, 21);
  CHECK(error_code_of([&] { fpa::CodewordEnumerator en(p); }) == Errc::cap_exceeded);
  CHECK_NOTHROW(fpa::CodewordEnumerator(p, std::uint64_t{1} << 21));
}

TEST_CASE("codec: encoder is injective across a bigger k") {
  const CodeParams p = CodeParams::make(2, 16, 8);
  std::set<std::vector<int>> seen;
  fpa::CodewordEnumerator en(p);
  while (en.next()) seen.insert(en.codeword().symbols());
  CHECK(seen.size() == 256);
}
