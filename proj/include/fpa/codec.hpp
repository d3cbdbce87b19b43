#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fpa/core.hpp"
#include "fpa/random.hpp"

namespace fpa {

// k bits; bits[0] is the first message bit. Text form "10" reads left to
// right, so "10" = (1, 0).
struct Message {
  std::vector<std::uint8_t> bits;

  static Message from_string(std::string_view text);
  std::string to_string() const;
  int size() const noexcept { return static_cast<int>(bits.size()); }

  bool operator==(const Message&) const = default;
  bool operator<(const Message& other) const { return bits < other.bits; }
};

/**
 * Encoder. Runs two cursors over symbol ranks: max starts at n, min at 1.
 * Bit 1 emits ceil(max/lambda) and decrements max; bit 0 emits
 * ceil(min/lambda) and increments min; the tail after the k data positions
 * drains the min cursor. Every rank in [1, n] is consumed exactly once, so the
 * output is always a valid word. Distinct messages end up at Chebyshev
 * distance >= d from each other.
 */
FreqPerm encode(const Message& msg, const CodeParams& params);

/**
 * Unique decoder. Replays the cursor pair and takes bit 1 at position i
 * exactly when x_i is strictly closer to ceil(max/lambda) than to
 * ceil(min/lambda) (ties decode as 0). Recovers the message from any word
 * within Chebyshev distance floor((d-1)/2) of a codeword.
 */
Message unique_decode(const FreqPerm& word, const CodeParams& params);

struct LocalDecodeResult {
  int bit = 0;
  int iterations = 0;    // probes drawn; always in [1, lambda] on valid input
  int symbols_read = 0;  // iterations + 1 (position i itself is read first)
  std::vector<int> read_positions;  // 0-based; [i, j_1, ..., j_iterations]
};

/**
 * Local decoder for message bit i (0-based, i < k). Reads x_i, then draws
 * probe positions j from {i+1, ..., n-1} uniformly without replacement until
 * x_j != x_i; answers 1 if x_i > x_j and 0 if x_i < x_j. At most lambda - 1
 * positions after i can tie with x_i, so at most lambda probes are drawn and
 * at most lambda + 1 symbols are read. On a codeword the answer is always bit
 * i of the encoded message; within distance delta of a codeword the first
 * probe already answers correctly with probability >= 1 - (2*delta+1)/d.
 *
 * Sampling without replacement is a lazily truncated seeded shuffle of the
 * candidate list, so a transcript is replayable from its RandomSource and the
 * full randomness tree is enumerable.
 */
LocalDecodeResult local_decode(const FreqPerm& word, int i, const CodeParams& params,
                               RandomSource& rng);

// Same algorithm, but every symbol access goes through read(pos). This is the
// hook the PIR layer uses to route each read to a distinct server.
LocalDecodeResult local_decode_with_reader(const std::function<int(int)>& read, int i,
                                           const CodeParams& params, RandomSource& rng);

/**
 * All 2^k codewords in lexicographic message order. Refuses to start when
 * 2^k > cap.
 */
class CodewordEnumerator {
 public:
  explicit CodewordEnumerator(const CodeParams& params, std::uint64_t cap = kDefaultCodewordCap);

  bool next();
  const Message& message() const noexcept { return msg_; }
  const FreqPerm& codeword() const noexcept { return word_; }

 private:
  CodeParams params_;
  Message msg_;
  FreqPerm word_;
  std::uint64_t index_ = 0;
  std::uint64_t total_ = 0;
};

}  // namespace fpa
