#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hinv {

/// Exact rational number, kept in lowest terms with positive denominator by all
/// arithmetic. GMP does not reduce Rational(p, q): pass p/q already reduced.
using Rational = mpq_class;
using Integer = mpz_class;

using Vector = std::vector<Rational>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Parses "p", "-p" or "p/q". Throws Error on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace hinv
