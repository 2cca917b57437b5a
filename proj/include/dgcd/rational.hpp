#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dgcd {

/// Arbitrary precision integer.
using BigInteger = mpz_class;

/// Exact rational number. GMP keeps every mpq_class produced by arithmetic in
/// lowest terms with a positive denominator; values built from raw parts must
/// go through make_rational().
using BigRational = mpq_class;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) {
    throw Error("rational with zero denominator");
  }
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q" with optional leading sign.
BigRational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const BigRational& r) { return r.get_str(); }

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

}  // namespace dgcd
