#include "fpa/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace fpa {
namespace {

void check_geometry(int lambda, int n, int d) {
  if (lambda < 1) fail(Errc::bad_params, "lambda must be >= 1, got " + std::to_string(lambda));
  if (n < 1) fail(Errc::bad_params, "n must be >= 1, got " + std::to_string(n));
  if (n % lambda != 0)
    fail(Errc::non_divisible,
         "lambda must divide n: n=" + std::to_string(n) + ", lambda=" + std::to_string(lambda));
  if (d < 0) fail(Errc::bad_params, "d must be >= 0, got " + std::to_string(d));
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt to_bigint(unsigned __int128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(v);
}

// Batches 128-bit terms of both signs and flushes to a BigInt before either
// side can overflow.
struct SignedAccumulator {
  unsigned __int128 pos = 0;
  unsigned __int128 neg = 0;
  BigInt total = 0;

  void add(unsigned __int128 v, bool negative) {
    unsigned __int128& acc = negative ? neg : pos;
    if (acc > ~static_cast<unsigned __int128>(0) - v) flush();
    acc += v;
  }

  void flush() {
    total += to_bigint(pos);
    total -= to_bigint(neg);
    pos = neg = 0;
  }
};

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

BinaryMatrix::BinaryMatrix(int order) : n_(order) {
  if (order < 1) fail(Errc::bad_params, "matrix order must be >= 1, got " + std::to_string(order));
  a_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0);
}

BinaryMatrix BinaryMatrix::band(int lambda, int n, int d) {
  check_geometry(lambda, n, d);
  BinaryMatrix a(n);
  for (int i = 0; i < n; ++i) {
    const int ri = i / lambda;  // rank block of row i, 0-based
    for (int j = 0; j < n; ++j) {
      const int rj = j / lambda;
      if (std::abs(ri - rj) <= d) a.set(i, j, 1);
    }
  }
  return a;
}

BinaryMatrix BinaryMatrix::ones(int order) {
  BinaryMatrix a(order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) a.set(i, j, 1);
  return a;
}

int BinaryMatrix::row_sum(int i) const {
  int s = 0;
  for (int j = 0; j < n_; ++j) s += at(i, j);
  return s;
}

BigInt permanent_naive(const BinaryMatrix& a, int guard) {
  const int n = a.order();
  if (n > guard)
    fail(Errc::order_too_large, "permanent_naive guarded at order " + std::to_string(guard) +
                                    ", got " + std::to_string(n));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    int prod = 1;
    for (int i = 0; i < n && prod; ++i) prod = a.at(i, perm[static_cast<std::size_t>(i)]);
    count += static_cast<std::uint64_t>(prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return BigInt(count);
}

BigInt permanent_ryser(const BinaryMatrix& a, int guard) {
  const int n = a.order();
  if (n > guard || n > 62)
    fail(Errc::order_too_large, "permanent_ryser guarded at order " +
                                    std::to_string(std::min(guard, 62)) + ", got " +
                                    std::to_string(n));

  // Ryser: per(A) = (-1)^n * sum over column subsets S of
  // (-1)^|S| * prod_i (sum of row i restricted to S).
  // Gray-code order toggles one column per step, so row sums update in O(n).
  std::vector<std::int32_t> row_sums(static_cast<std::size_t>(n), 0);
  int zero_rows = n;
  std::uint64_t gray = 0;
  bool odd_subset = false;
  const bool big_products = n > 26;  // product of n row sums can pass 2^127
  SignedAccumulator acc;
  BigInt big_total = 0;

  const std::uint64_t steps = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t kk = 1; kk <= steps; ++kk) {
    const int j = std::countr_zero(kk);
    gray ^= std::uint64_t{1} << j;
    const bool added = (gray >> j) & 1;
    for (int i = 0; i < n; ++i) {
      const std::int32_t delta = a.at(i, j);
      if (!delta) continue;
      std::int32_t& rs = row_sums[static_cast<std::size_t>(i)];
      const std::int32_t before = rs;
      rs += added ? delta : -delta;
      if (before == 0 && rs != 0) --zero_rows;
      if (before != 0 && rs == 0) ++zero_rows;
    }
    odd_subset = !odd_subset;
    if (zero_rows > 0) continue;
    if (big_products) {
      BigInt prod = 1;
      for (int i = 0; i < n; ++i) prod *= row_sums[static_cast<std::size_t>(i)];
      if (odd_subset)
        big_total -= prod;
      else
        big_total += prod;
    } else {
      unsigned __int128 prod = 1;
      for (int i = 0; i < n; ++i)
        prod *= static_cast<unsigned __int128>(row_sums[static_cast<std::size_t>(i)]);
      acc.add(prod, odd_subset);
    }
  }
  acc.flush();
  BigInt total = acc.total + big_total;
  if (n & 1) total = -total;
  return total;
}

BigInt ball_size_exact(int lambda, int n, int d, int perm_guard) {
  check_geometry(lambda, n, d);
  const int m = n / lambda;
  const BigInt per = permanent_ryser(BinaryMatrix::band(lambda, n, d), perm_guard);
  BigInt denom = 1;
  const BigInt lam_fact = factorial(lambda);
  for (int i = 0; i < m; ++i) denom *= lam_fact;
  const BigInt q = per / denom;
  if (q * denom != per)
    fail(Errc::non_divisible, "permanent " + per.str() + " not divisible by (lambda!)^m = " +
                                  denom.str());
  return q;
}

BigInt ball_size_bruteforce(int lambda, int n, int d, std::uint64_t cap) {
  check_geometry(lambda, n, d);
  const int m = n / lambda;
  const std::vector<int> center = identity_perm(lambda, m).symbols();
  BigInt count = 0;
  WordEnumerator en(lambda, m, cap);
  while (en.next()) {
    const std::vector<int>& w = en.word();
    bool inside = true;
    for (int p = 0; p < n && inside; ++p) inside = std::abs(w[static_cast<std::size_t>(p)] - center[static_cast<std::size_t>(p)]) <= d;
    if (inside) ++count;
  }
  return count;
}

LogBound perm_bound_upper(int lambda, int n, int d) {
  check_geometry(lambda, n, d);
  const int w0 = 2 * d * lambda + lambda;
  const int w = std::min(w0, n);
  LogBound b;
  b.clamped = w0 > n;
  b.log_value = static_cast<double>(n) / w * log_factorial(w);
  return b;
}

LogBound perm_bound_lower(int lambda, int n, int d) {
  check_geometry(lambda, n, d);
  const int m = n / lambda;
  const int d_eff = std::min(d, (m - 1) / 2);
  const int w_eff = 2 * d_eff * lambda + lambda;
  LogBound b;
  b.clamped = d_eff < d;
  b.log_value = n * std::log(static_cast<double>(w_eff)) -
                2.0 * d_eff * lambda * std::log(2.0) + log_factorial(n) -
                n * std::log(static_cast<double>(n));
  return b;
}

BigRat gilbert_lower(int lambda, int n, int d, int perm_guard) {
  check_geometry(lambda, n, d);
  if (d < 1) fail(Errc::bad_params, "gilbert_lower needs d >= 1");
  return BigRat(space_size(lambda, n / lambda), ball_size_exact(lambda, n, d - 1, perm_guard));
}

BigRat packing_upper(int lambda, int n, int d, int perm_guard) {
  check_geometry(lambda, n, d);
  if (d < 1) fail(Errc::bad_params, "packing_upper needs d >= 1");
  return BigRat(space_size(lambda, n / lambda),
                ball_size_exact(lambda, n, (d - 1) / 2, perm_guard));
}

BigInt rat_ceil(const BigRat& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);  // cpp_rational keeps den > 0
  BigInt q = num / den;               // truncates toward zero
  if (num > 0 && q * den != num) ++q;
  return q;
}

BigInt rat_floor(const BigRat& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

AsymptoticBounds asymptotic_bounds(int lambda, int n, int d) {
  check_geometry(lambda, n, d);
  if (d < 1) fail(Errc::bad_params, "asymptotic_bounds needs d >= 1");
  const int m = n / lambda;
  AsymptoticBounds b;

  const int w0 = (2 * d - 1) * lambda;  // band width at radius d-1
  const int w = std::min(w0, n);
  b.clamped = w0 > n;
  b.lower_log = log_factorial(n) - static_cast<double>(n) / w * log_factorial(w);

  const int h = (d - 1) / 2;
  const int h_eff = std::min(h, (m - 1) / 2);
  b.clamped = b.clamped || h_eff < h;
  b.upper_log = 2.0 * h_eff * lambda * std::log(2.0) +
                n * std::log(static_cast<double>(n)) -
                n * std::log(static_cast<double>(2 * h_eff * lambda + lambda));
  return b;
}

std::vector<FreqPerm> greedy_construct(int lambda, int n, int d, std::uint64_t cap) {
  check_geometry(lambda, n, d);
  if (d < 1) fail(Errc::bad_params, "greedy_construct needs d >= 1");
  const int m = n / lambda;

  std::vector<FreqPerm> code;
  if (d == 1) {  // radius-0 discards nothing; the whole space qualifies
    WordEnumerator en(lambda, m, cap);
    while (en.next()) code.push_back(FreqPerm::unchecked(en.word(), lambda, m));
    return code;
  }

  // One flat buffer keeps the scan cache-friendly.
  std::vector<int> pool;
  std::size_t count = 0;
  {
    WordEnumerator en(lambda, m, cap);
    while (en.next()) {
      pool.insert(pool.end(), en.word().begin(), en.word().end());
      ++count;
    }
  }
  const std::size_t stride = static_cast<std::size_t>(n);
  std::vector<char> alive(count, 1);
  const int radius = d - 1;

  std::size_t seed_scan = 0;
  while (true) {
    while (seed_scan < count && !alive[seed_scan]) ++seed_scan;
    if (seed_scan >= count) break;
    const int* seed = pool.data() + seed_scan * stride;
    code.push_back(FreqPerm::unchecked(std::vector<int>(seed, seed + stride), lambda, m));
    for (std::size_t w = seed_scan; w < count; ++w) {
      if (!alive[w]) continue;
      const int* cand = pool.data() + w * stride;
      bool close = true;
      for (std::size_t p = 0; p < stride; ++p) {
        if (std::abs(seed[p] - cand[p]) > radius) {
          close = false;
          break;
        }
      }
      if (close) alive[w] = 0;  // includes the seed itself
    }
  }
  return code;
}

BoundsReport make_bounds_report(int lambda, int m, int d, int perm_guard) {
  if (m < 1) fail(Errc::bad_params, "m must be >= 1, got " + std::to_string(m));
  const int n = lambda * m;
  check_geometry(lambda, n, d);
  if (d < 1) fail(Errc::bad_params, "bounds need d >= 1");

  BoundsReport r;
  r.lambda = lambda;
  r.m = m;
  r.n = n;
  r.d = d;
  r.space = space_size(lambda, m);
  r.exact = n <= perm_guard;
  if (r.exact) {
    r.ball_dminus1 = ball_size_exact(lambda, n, d - 1, perm_guard);
    r.ball_half = ball_size_exact(lambda, n, (d - 1) / 2, perm_guard);
    r.gilbert = BigRat(r.space, r.ball_dminus1);
    r.packing = BigRat(r.space, r.ball_half);
  }
  const AsymptoticBounds asym = asymptotic_bounds(lambda, n, d);
  r.asym_lower_log = asym.lower_log;
  r.asym_upper_log = asym.upper_log;
  return r;
}

}  // namespace fpa
