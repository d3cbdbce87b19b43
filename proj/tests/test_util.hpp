#pragma once

#include <doctest.h>

#include <vector>

#include "fpa/codec.hpp"
#include "fpa/common.hpp"
#include "fpa/core.hpp"

// Runs fn, which must throw fpa::Error, and returns the error code.
template <class Fn>
fpa::Errc error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const fpa::Error& e) {
    return e.code();
  }
  FAIL("expected fpa::Error");
  return fpa::Errc::bad_params;
}

inline fpa::FreqPerm word_of(std::vector<int> symbols, int lambda, int m) {
  return fpa::validate_word(std::move(symbols), lambda, m);
}

inline fpa::Message msg_of(const char* bits) { return fpa::Message::from_string(bits); }
