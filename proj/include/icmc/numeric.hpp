#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace icmc {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "a", "-a" or "a/b" into a canonical rational. Throws Error on
/// malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical text form: "a" when the denominator is 1, otherwise "a/b".
std::string format_rat(const Rat& value);

BigInt parse_bigint(std::string_view text);

inline std::string format_bigint(const BigInt& value) { return value.str(); }

inline Rat make_rat(long long num, long long den = 1) { return Rat(BigInt(num), BigInt(den)); }

}  // namespace icmc
