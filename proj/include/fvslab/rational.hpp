#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "fvslab/errors.hpp"

namespace fvslab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Rationals are reported as "p/q" everywhere (never floats); integers print as "p".
inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline Rat rat_of(long long p, long long q = 1) { return Rat(BigInt(p), BigInt(q)); }

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

// Parses "p" or "p/q".
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad rational '" + s + "'");
  }
}

}  // namespace fvslab
