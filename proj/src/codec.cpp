#include "fpa/codec.hpp"

#include <cstdlib>

namespace fpa {

Message Message::from_string(std::string_view text) {
  Message msg;
  msg.bits.reserve(text.size());
  for (char c : text) {
    if (c == '0')
      msg.bits.push_back(0);
    else if (c == '1')
      msg.bits.push_back(1);
    else
      fail(Errc::bad_params, std::string("message must be over {0,1}, got '") + c + "'");
  }
  return msg;
}

std::string Message::to_string() const {
  std::string out;
  out.reserve(bits.size());
  for (std::uint8_t b : bits) out += (b ? '1' : '0');
  return out;
}

FreqPerm encode(const Message& msg, const CodeParams& params) {
  if (msg.size() != params.k)
    fail(Errc::wrong_length, "message has " + std::to_string(msg.size()) + " bits, expected k=" +
                                 std::to_string(params.k));
  std::vector<int> x(static_cast<std::size_t>(params.n));
  int max = params.n;
  int min = 1;
  for (int i = 0; i < params.k; ++i) {
    if (msg.bits[static_cast<std::size_t>(i)]) {
      x[static_cast<std::size_t>(i)] = ceil_div(max, params.lambda);
      --max;
    } else {
      x[static_cast<std::size_t>(i)] = ceil_div(min, params.lambda);
      ++min;
    }
  }
  for (int i = params.k; i < params.n; ++i) {
    x[static_cast<std::size_t>(i)] = ceil_div(min, params.lambda);
    ++min;
  }
  return FreqPerm::unchecked(std::move(x), params.lambda, params.m);
}

Message unique_decode(const FreqPerm& word, const CodeParams& params) {
  if (word.size() != params.n)
    fail(Errc::wrong_length, "word length " + std::to_string(word.size()) + ", expected n=" +
                                 std::to_string(params.n));
  if (word.lambda() != params.lambda || word.m() != params.m)
    fail(Errc::bad_params, "word was validated for a different space");
  Message msg;
  msg.bits.resize(static_cast<std::size_t>(params.k));
  int max = params.n;
  int min = 1;
  for (int i = 0; i < params.k; ++i) {
    const int xi = word[i];
    const int hi = ceil_div(max, params.lambda);
    const int lo = ceil_div(min, params.lambda);
    if (std::abs(xi - hi) < std::abs(xi - lo)) {  // ties decode as 0
      msg.bits[static_cast<std::size_t>(i)] = 1;
      --max;
    } else {
      msg.bits[static_cast<std::size_t>(i)] = 0;
      ++min;
    }
  }
  return msg;
}

LocalDecodeResult local_decode_with_reader(const std::function<int(int)>& read, int i,
                                           const CodeParams& params, RandomSource& rng) {
  if (i < 0 || i >= params.k)
    fail(Errc::index_out_of_range,
         "bit index " + std::to_string(i) + " outside [0," + std::to_string(params.k) + ")");
  LocalDecodeResult res;
  const int xi = read(i);
  res.read_positions.push_back(i);

  // Candidates {i+1, ..., n-1}; a lazily truncated shuffle draws without
  // replacement. n >= k + lambda guarantees a differing symbol is found within
  // lambda draws, before the list can run out.
  std::vector<int> candidates;
  candidates.reserve(static_cast<std::size_t>(params.n - i - 1));
  for (int j = i + 1; j < params.n; ++j) candidates.push_back(j);

  for (std::size_t t = 0; t < candidates.size(); ++t) {
    const std::size_t pick =
        t + static_cast<std::size_t>(rng.uniform(static_cast<std::uint64_t>(candidates.size() - t)));
    std::swap(candidates[t], candidates[pick]);
    const int j = candidates[t];
    const int xj = read(j);
    res.read_positions.push_back(j);
    ++res.iterations;
    if (xi != xj) {
      res.bit = xi > xj ? 1 : 0;
      res.symbols_read = res.iterations + 1;
      return res;
    }
  }
  fail(Errc::bad_params, "exhausted probe candidates; input is not a valid word for these params");
}

LocalDecodeResult local_decode(const FreqPerm& word, int i, const CodeParams& params,
                               RandomSource& rng) {
  if (word.size() != params.n)
    fail(Errc::wrong_length, "word length " + std::to_string(word.size()) + ", expected n=" +
                                 std::to_string(params.n));
  if (word.lambda() != params.lambda || word.m() != params.m)
    fail(Errc::bad_params, "word was validated for a different space");
  return local_decode_with_reader([&word](int pos) { return word[pos]; }, i, params, rng);
}

CodewordEnumerator::CodewordEnumerator(const CodeParams& params, std::uint64_t cap)
    : params_(params) {
  if (params.k >= 64 || (std::uint64_t{1} << params.k) > cap)
    fail(Errc::cap_exceeded,
         "2^" + std::to_string(params.k) + " codewords exceed cap " + std::to_string(cap));
  total_ = std::uint64_t{1} << params.k;
  msg_.bits.resize(static_cast<std::size_t>(params.k));
}

bool CodewordEnumerator::next() {
  if (index_ >= total_) return false;
  // Lexicographic message order: bit 0 is the most significant.
  for (int t = 0; t < params_.k; ++t)
    msg_.bits[static_cast<std::size_t>(t)] =
        static_cast<std::uint8_t>((index_ >> (params_.k - 1 - t)) & 1);
  word_ = encode(msg_, params_);
  ++index_;
  return true;
}

}  // namespace fpa
