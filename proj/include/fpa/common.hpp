#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpa {

// Exact integer/rational types used wherever counts can overflow 64 bits
// (factorials, permanents, sphere-counting bounds).
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Failure categories. The CLI maps usage errors to exit code 2 and
// resource-guard trips (cap_exceeded, order_too_large) to exit code 3.
enum class Errc {
  bad_params,
  wrong_length,
  out_of_range_symbol,
  wrong_multiplicity,
  index_out_of_range,
  non_divisible,
  empty_trials,
  cap_exceeded,
  order_too_large,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

  // True for guards that stop work the machine cannot afford, as opposed to
  // malformed input.
  bool is_resource_guard() const noexcept {
    return code_ == Errc::cap_exceeded || code_ == Errc::order_too_large;
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

const char* errc_name(Errc code) noexcept;

// Default resource guards. All are overridable per call.
inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;  // words enumerated per space
inline constexpr int kDefaultPermanentGuard = 28;             // max matrix order for Ryser
inline constexpr std::uint64_t kDefaultCodewordCap = std::uint64_t{1} << 20;

// Ceiling division for positive operands; codec paths must stay integral.
constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace fpa
