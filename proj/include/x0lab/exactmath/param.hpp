#pragma once

#include <string>
#include <vector>

#include "x0lab/exactmath/symbolic.hpp"
#include "x0lab/exactmath/valuation.hpp"

namespace x0lab {

/// The affine function constant + slope * lambda.
struct ParamValuation {
  Rational constant;
  Rational slope;

  Rational at(const Rational& lambda) const { return constant + slope * lambda; }

  friend ParamValuation operator+(const ParamValuation& a, const ParamValuation& b) {
    return {a.constant + b.constant, a.slope + b.slope};
  }
  friend ParamValuation operator-(const ParamValuation& a, const ParamValuation& b) {
    return {a.constant - b.constant, a.slope - b.slope};
  }
  friend ParamValuation operator*(const Rational& k, const ParamValuation& a) {
    return {k * a.constant, k * a.slope};
  }
  friend bool operator==(const ParamValuation&, const ParamValuation&) = default;

  std::string str() const;
};

/// Lower envelope min_k (piece_k) of affine functions; empty means +infinity.
/// Each piece may carry the monomial it came from.
class Envelope {
 public:
  struct Piece {
    ParamValuation value;
    Monomial witness;
  };

  Envelope() = default;
  explicit Envelope(ParamValuation single) { add(std::move(single)); }

  void add(ParamValuation v, Monomial witness = {});

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool is_infinite() const { return pieces_.empty(); }

  ExtValuation at(const Rational& lambda) const;

  /// Indices of the pieces attaining the minimum at lambda.
  std::vector<std::size_t> minimizers(const Rational& lambda) const;
  bool unique_at(const Rational& lambda) const { return minimizers(lambda).size() == 1; }

  /// Minimum on the closed interval. The envelope is concave, so the
  /// minimum sits at an endpoint.
  ExtValuation minimum_on(const Rational& lo, const Rational& hi) const;

  /// lambda values strictly inside (lo, hi) where two pieces cross.
  std::vector<Rational> crossings(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<Piece> pieces_;
};

}  // namespace x0lab
