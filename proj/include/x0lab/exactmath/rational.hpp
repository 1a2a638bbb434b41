#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace x0lab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for domain errors: invalid input to an exact-arithmetic routine
/// (zero denominators, non-primes, empty intervals, unassigned symbols, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a certificate recomputation disagrees with embedded data.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Accepts "n" or "n/d" with an optional sign.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool is_prime(const Integer& n);
bool is_prime(unsigned long n);

}  // namespace x0lab
