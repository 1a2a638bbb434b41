#pragma once

#include <compare>
#include <string>

#include "x0lab/exactmath/rational.hpp"

namespace x0lab {

/// A p-adic valuation value: a rational number or +infinity (the valuation
/// of zero). +infinity absorbs addition and is the maximum of the order.
class ExtValuation {
 public:
  /// Default-constructs +infinity.
  ExtValuation() = default;
  ExtValuation(Rational value) : finite_(true), value_(std::move(value)) {}  // NOLINT
  ExtValuation(long value) : finite_(true), value_(value) {}                  // NOLINT

  static ExtValuation infinity() { return ExtValuation(); }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }

  /// Throws MathError when infinite.
  const Rational& value() const;

  ExtValuation& operator+=(const ExtValuation& other);
  friend ExtValuation operator+(ExtValuation a, const ExtValuation& b) { return a += b; }

  friend bool operator==(const ExtValuation& a, const ExtValuation& b);
  friend std::strong_ordering operator<=>(const ExtValuation& a, const ExtValuation& b);

  std::string str() const;

 private:
  bool finite_ = false;
  Rational value_;
};

ExtValuation min(const ExtValuation& a, const ExtValuation& b);

/// Exponent of the prime p in a nonzero integer; +infinity for zero.
ExtValuation val_int(const Integer& n, unsigned long p);

/// Exponent of the prime p in q (negative for denominators); 0 maps to +infinity.
ExtValuation val_rat(const Rational& q, unsigned long p);

/// Unit part of q at p, i.e. q / p^{v_p(q)}. Requires q != 0.
Rational unit_part(const Rational& q, unsigned long p);

/// Residue of a p-integral rational in F_p, in [0, p). Throws if v_p(q) < 0.
unsigned long residue_mod(const Rational& q, unsigned long p);

}  // namespace x0lab
