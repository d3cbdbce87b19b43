#include "fpa/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace fpa {

CodeParams CodeParams::make(int lambda, int n, int k) {
  if (lambda < 1) fail(Errc::bad_params, "lambda must be >= 1, got " + std::to_string(lambda));
  if (n < 1) fail(Errc::bad_params, "n must be >= 1, got " + std::to_string(n));
  if (n % lambda != 0)
    fail(Errc::non_divisible,
         "lambda must divide n: n=" + std::to_string(n) + ", lambda=" + std::to_string(lambda));
  if (k < 0) fail(Errc::bad_params, "k must be >= 0, got " + std::to_string(k));
  if (n < k + lambda)
    fail(Errc::bad_params, "need n >= k + lambda: n=" + std::to_string(n) +
                               ", k=" + std::to_string(k) + ", lambda=" + std::to_string(lambda));
  CodeParams p;
  p.lambda = lambda;
  p.n = n;
  p.m = n / lambda;
  p.k = k;
  p.d = (n - k) / lambda;
  return p;
}

FreqPerm FreqPerm::checked(std::vector<int> symbols, int lambda, int m) {
  return validate_word(std::move(symbols), lambda, m);
}

FreqPerm FreqPerm::unchecked(std::vector<int> symbols, int lambda, int m) {
  FreqPerm w;
  w.symbols_ = std::move(symbols);
  w.lambda_ = lambda;
  w.m_ = m;
  return w;
}

int linf_distance(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size())
    fail(Errc::wrong_length, "distance needs equal lengths: " + std::to_string(a.size()) + " vs " +
                                 std::to_string(b.size()));
  int best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

int linf_distance(const FreqPerm& a, const FreqPerm& b) {
  return linf_distance(a.span(), b.span());
}

FreqPerm identity_perm(int lambda, int m) {
  if (lambda < 1 || m < 1) fail(Errc::bad_params, "identity_perm needs lambda >= 1 and m >= 1");
  std::vector<int> symbols(static_cast<std::size_t>(lambda) * m);
  for (std::size_t p = 0; p < symbols.size(); ++p)
    symbols[p] = static_cast<int>(p / lambda) + 1;  // == ceil((p+1)/lambda)
  return FreqPerm::unchecked(std::move(symbols), lambda, m);
}

FreqPerm validate_word(std::vector<int> symbols, int lambda, int m) {
  if (lambda < 1 || m < 1) fail(Errc::bad_params, "validate_word needs lambda >= 1 and m >= 1");
  const std::size_t n = static_cast<std::size_t>(lambda) * m;
  if (symbols.size() != n)
    fail(Errc::wrong_length, "word length " + std::to_string(symbols.size()) +
                                 ", expected lambda*m = " + std::to_string(n));
  std::vector<int> count(static_cast<std::size_t>(m) + 1, 0);
  for (std::size_t p = 0; p < n; ++p) {
    const int s = symbols[p];
    if (s < 1 || s > m)
      fail(Errc::out_of_range_symbol, "symbol " + std::to_string(s) + " at position " +
                                          std::to_string(p + 1) + " outside [1," +
                                          std::to_string(m) + "]");
    ++count[static_cast<std::size_t>(s)];
  }
  for (int s = 1; s <= m; ++s) {
    if (count[static_cast<std::size_t>(s)] != lambda)
      fail(Errc::wrong_multiplicity, "symbol " + std::to_string(s) + " occurs " +
                                         std::to_string(count[static_cast<std::size_t>(s)]) +
                                         " times, expected " + std::to_string(lambda));
  }
  return FreqPerm::unchecked(std::move(symbols), lambda, m);
}

BigInt space_size(int lambda, int m) {
  if (lambda < 1 || m < 1) fail(Errc::bad_params, "space_size needs lambda >= 1 and m >= 1");
  const int n = lambda * m;
  BigInt numer = 1;
  for (int i = 2; i <= n; ++i) numer *= i;
  BigInt lam_fact = 1;
  for (int i = 2; i <= lambda; ++i) lam_fact *= i;
  BigInt denom = 1;
  for (int i = 0; i < m; ++i) denom *= lam_fact;
  return numer / denom;  // always divides: multinomial coefficient
}

WordEnumerator::WordEnumerator(int lambda, int m, std::uint64_t cap) : lambda_(lambda), m_(m) {
  const BigInt total = space_size(lambda, m);
  if (total > cap)
    fail(Errc::cap_exceeded,
         "space has " + total.str() + " words, enumeration cap is " + std::to_string(cap));
  current_ = identity_perm(lambda, m).symbols();  // sorted == lexicographic least
}

bool WordEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  if (!std::next_permutation(current_.begin(), current_.end())) {
    done_ = true;
    return false;
  }
  return true;
}

void for_each_word(int lambda, int m, std::uint64_t cap,
                   const std::function<void(const std::vector<int>&)>& fn) {
  WordEnumerator en(lambda, m, cap);
  while (en.next()) fn(en.word());
}

std::string word_to_string(std::span<const int> symbols) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(symbols[i]);
  }
  return out;
}

std::vector<int> word_from_string(std::string_view text) {
  std::vector<int> symbols;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string tok(text.substr(pos, comma - pos));
    // trim spaces
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(tok.begin());
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
    if (tok.empty()) fail(Errc::bad_params, "empty symbol in word text");
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (end == nullptr || *end != '\0')
      fail(Errc::bad_params, "bad symbol '" + tok + "' in word text");
    symbols.push_back(static_cast<int>(v));
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  if (symbols.empty()) fail(Errc::bad_params, "empty word text");
  return symbols;
}

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::bad_params: return "BadParams";
    case Errc::wrong_length: return "WrongLength";
    case Errc::out_of_range_symbol: return "OutOfRangeSymbol";
    case Errc::wrong_multiplicity: return "WrongMultiplicity";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::non_divisible: return "NonDivisible";
    case Errc::empty_trials: return "EmptyTrials";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::order_too_large: return "OrderTooLarge";
  }
  return "UnknownError";
}

}  // namespace fpa
