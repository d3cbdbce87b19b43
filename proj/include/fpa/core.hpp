#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpa/common.hpp"

namespace fpa {

/**
 * Code parameters. A word is a permutation of the multiset that contains each
 * symbol of {1, ..., m} exactly lambda times, so n = lambda * m. Messages are
 * k bits and the code corrects within (d-1)/2 in the Chebyshev metric, where
 * d = floor((n - k) / lambda).
 *
 * Construction enforces lambda >= 1, lambda | n, 0 <= k and n >= k + lambda
 * (the encoder needs at least one full symbol group after the data prefix,
 * which also makes d >= 1).
 */
struct CodeParams {
  int lambda = 0;
  int m = 0;
  int n = 0;
  int k = 0;
  int d = 0;

  static CodeParams make(int lambda, int n, int k);

  bool operator==(const CodeParams&) const = default;
};

/**
 * A word with each symbol 1..m appearing exactly lambda times. Symbols are
 * 1-based values; positions are 0-based throughout the library (the CLI and
 * JSON layer present 1-based positions).
 *
 * checked() is the validating constructor; unchecked() is for call sites that
 * construct words the invariant already guarantees (encoder output, space
 * enumeration).
 */
class FreqPerm {
 public:
  FreqPerm() = default;

  static FreqPerm checked(std::vector<int> symbols, int lambda, int m);
  static FreqPerm unchecked(std::vector<int> symbols, int lambda, int m);

  int size() const noexcept { return static_cast<int>(symbols_.size()); }
  int lambda() const noexcept { return lambda_; }
  int m() const noexcept { return m_; }

  int operator[](int pos) const { return symbols_[static_cast<std::size_t>(pos)]; }
  const std::vector<int>& symbols() const noexcept { return symbols_; }
  std::span<const int> span() const noexcept { return symbols_; }

  bool operator==(const FreqPerm&) const = default;
  // Lexicographic on the symbol sequence; total order used by sets of words.
  bool operator<(const FreqPerm& other) const { return symbols_ < other.symbols_; }

 private:
  std::vector<int> symbols_;
  int lambda_ = 0;
  int m_ = 0;
};

// Chebyshev (max of per-position absolute differences) distance. Both spans
// must have the same length.
int linf_distance(std::span<const int> a, std::span<const int> b);
int linf_distance(const FreqPerm& a, const FreqPerm& b);

// The word whose position p (0-based) holds ceil((p+1)/lambda): each symbol's
// lambda copies sit in one contiguous block.
FreqPerm identity_perm(int lambda, int m);

// Validating parse of a raw symbol sequence. Checks, in order: length, symbol
// range, per-symbol multiplicity; the diagnostic names the first violation.
FreqPerm validate_word(std::vector<int> symbols, int lambda, int m);

// |space| = n! / (lambda!)^m, exact.
BigInt space_size(int lambda, int m);

/**
 * Lexicographic enumeration of the whole space. Refuses to start when the
 * space is larger than cap. Usage:
 *
 *   WordEnumerator en(lambda, m);
 *   while (en.next()) consume(en.word());
 *
 * word() exposes the internal buffer; copy it to keep it.
 */
class WordEnumerator {
 public:
  WordEnumerator(int lambda, int m, std::uint64_t cap = kDefaultEnumCap);

  bool next();
  const std::vector<int>& word() const noexcept { return current_; }
  int lambda() const noexcept { return lambda_; }
  int m() const noexcept { return m_; }

 private:
  std::vector<int> current_;
  int lambda_;
  int m_;
  bool started_ = false;
  bool done_ = false;
};

void for_each_word(int lambda, int m, std::uint64_t cap,
                   const std::function<void(const std::vector<int>&)>& fn);

// Text forms: words are comma-separated symbols ("3,1,1,2,2,3").
std::string word_to_string(std::span<const int> symbols);
std::vector<int> word_from_string(std::string_view text);

}  // namespace fpa
