#pragma once

#include <cstdint>
#include <vector>

#include "fpa/common.hpp"
#include "fpa/core.hpp"

namespace fpa {

/**
 * Dense 0/1 matrix. band(lambda, n, d) builds the adjacency matrix of the
 * Chebyshev ball structure on symbol ranks: entry (i, j) is 1 iff
 * |ceil((i+1)/lambda) - ceil((j+1)/lambda)| <= d (indices 0-based, ranks
 * 1-based). Its permanent divided by (lambda!)^m counts the words within
 * distance d of any fixed word.
 */
class BinaryMatrix {
 public:
  explicit BinaryMatrix(int order);

  static BinaryMatrix band(int lambda, int n, int d);
  static BinaryMatrix ones(int order);

  int order() const noexcept { return n_; }
  std::uint8_t at(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, std::uint8_t v) { a_[idx(i, j)] = v; }
  int row_sum(int i) const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }
  int n_;
  std::vector<std::uint8_t> a_;
};

// Permanent by definition: sum over all permutations of the product of picked
// entries. Exponential; guarded at order <= 10. Serves as the oracle for the
// Ryser path.
BigInt permanent_naive(const BinaryMatrix& a, int guard = 10);

// Ryser's inclusion-exclusion with Gray-code column updates, O(2^n * n).
// Guarded at order <= guard (default 28).
BigInt permanent_ryser(const BinaryMatrix& a, int guard = kDefaultPermanentGuard);

// Exact count of words within Chebyshev distance d of a fixed word:
// per(band(lambda, n, d)) / (lambda!)^m. The division is checked and a
// non-zero remainder is reported as an internal inconsistency.
BigInt ball_size_exact(int lambda, int n, int d, int perm_guard = kDefaultPermanentGuard);

// Same count by scanning the whole space around the identity word. The ball
// size does not depend on the center, so this is a full oracle for
// ball_size_exact.
BigInt ball_size_bruteforce(int lambda, int n, int d, std::uint64_t cap = kDefaultEnumCap);

// Log-space permanent bounds for band(lambda, n, d). The natural row width is
// w0 = 2*d*lambda + lambda; when the band saturates (w0 > n) the width is
// clamped and `clamped` is set:
//  - upper: rows have at most min(w0, n) ones, and (r!)^(1/r) grows with r, so
//    per <= (w!)^(n/w) with w = min(w0, n).
//  - lower: per is monotone in d (adding ones adds permutation terms), so the
//    bound is evaluated at the largest radius whose band does not saturate:
//    per >= w_eff^n / 2^(2*d_eff*lambda) * n!/n^n with d_eff =
//    min(d, floor((m-1)/2)) and w_eff = 2*d_eff*lambda + lambda.
struct LogBound {
  double log_value = 0.0;
  bool clamped = false;
};

LogBound perm_bound_upper(int lambda, int n, int d);
LogBound perm_bound_lower(int lambda, int n, int d);

// Sphere-counting bounds on the largest code size, exact rationals:
//   gilbert_lower  = |space| / ball(d-1)   (achievable by greedy construction)
//   packing_upper  = |space| / ball(floor((d-1)/2))
BigRat gilbert_lower(int lambda, int n, int d, int perm_guard = kDefaultPermanentGuard);
BigRat packing_upper(int lambda, int n, int d, int perm_guard = kDefaultPermanentGuard);

BigInt rat_ceil(const BigRat& r);
BigInt rat_floor(const BigRat& r);

// Closed-form bounds that need no permanent, in log space:
//   lower: n! / ((2*d*lambda - lambda)!)^(n / (2*d*lambda - lambda))
//   upper: 2^(2*lambda*h) * n^n / (2*lambda*h + lambda)^n, h = floor((d-1)/2)
// Widths are clamped like the permanent bounds when they exceed n.
struct AsymptoticBounds {
  double lower_log = 0.0;
  double upper_log = 0.0;
  bool clamped = false;
};

AsymptoticBounds asymptotic_bounds(int lambda, int n, int d);

/**
 * Greedy code construction: scan the space in lexicographic order, keep a
 * word when it is at distance >= d from everything kept so far. Equivalent to
 * repeatedly taking the least remaining word and discarding its (d-1)-ball,
 * so the result has at least ceil(|space| / ball(d-1)) words. d == 1 keeps
 * the whole space.
 */
std::vector<FreqPerm> greedy_construct(int lambda, int n, int d, std::uint64_t cap = kDefaultEnumCap);

/**
 * Everything the `bounds` command reports for one (lambda, m, d). The exact
 * part (ball sizes and the rational bounds) is present only when the matrix
 * order n fits under the permanent guard; the closed-form logs are always
 * present.
 */
struct BoundsReport {
  int lambda = 0;
  int m = 0;
  int n = 0;
  int d = 0;
  BigInt space;
  bool exact = false;
  BigInt ball_dminus1;   // valid iff exact
  BigInt ball_half;      // valid iff exact
  BigRat gilbert;        // valid iff exact
  BigRat packing;        // valid iff exact
  double asym_lower_log = 0.0;
  double asym_upper_log = 0.0;
};

BoundsReport make_bounds_report(int lambda, int m, int d, int perm_guard = kDefaultPermanentGuard);

}  // namespace fpa
