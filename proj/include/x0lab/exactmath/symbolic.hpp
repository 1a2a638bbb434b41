#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "x0lab/exactmath/rational.hpp"

namespace x0lab {

/// Power product of named symbols. Exponents may be negative (Laurent
/// monomials arise when scaling by inverses of uniformizers); zero exponents
/// are never stored. Ordered lexicographically on exponent vectors with
/// alphabetically earlier names dominant, which is a monomial order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::string& name, int exponent = 1);
  static Monomial from_factors(std::vector<std::pair<std::string, int>> factors);

  const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int exponent(std::string_view name) const;
  int total_degree() const;
  bool is_polynomial() const;

  /// The monomial with `name` removed.
  Monomial without(std::string_view name) const;

  /// True when every exponent of `other` is at most the matching one here
  /// (meaningful for polynomial monomials).
  bool divisible_by(const Monomial& other) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  Monomial inverse() const;
  Monomial pow(int n) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  std::vector<std::pair<std::string, int>> factors_;
};

/// Sparse Laurent polynomial over Q in named symbols.
class SymbolicPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  SymbolicPolynomial() = default;
  SymbolicPolynomial(const Rational& c);  // NOLINT
  SymbolicPolynomial(long c);             // NOLINT
  SymbolicPolynomial(const Rational& c, const Monomial& m);

  static SymbolicPolynomial symbol(const std::string& name);

  /// Parses + - * / ^ ( ) with integer literals and identifiers. Division is
  /// allowed only by nonzero rational constants or monomials; ^ takes an
  /// integer exponent (negative only for monomial bases).
  static SymbolicPolynomial parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  /// Coefficient of the constant monomial.
  Rational constant_term() const { return coefficient(Monomial()); }
  std::set<std::string> variables() const;
  int degree_in(std::string_view name) const;
  int min_degree_in(std::string_view name) const;

  /// Leading term in the monomial order.
  std::pair<Monomial, Rational> leading_term() const;

  /// Groups by the exponent of `name`; values no longer involve `name`.
  std::map<int, SymbolicPolynomial> collect(std::string_view name) const;

  SymbolicPolynomial derivative(std::string_view name) const;

  /// Full evaluation; every symbol must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  /// Partial evaluation of the listed symbols.
  SymbolicPolynomial specialize(const std::map<std::string, Rational>& values) const;

  SymbolicPolynomial& operator+=(const SymbolicPolynomial& other);
  SymbolicPolynomial& operator-=(const SymbolicPolynomial& other);
  SymbolicPolynomial& operator*=(const SymbolicPolynomial& other);
  SymbolicPolynomial& operator*=(const Rational& c);
  SymbolicPolynomial& operator/=(const Rational& c);
  SymbolicPolynomial operator-() const;

  friend SymbolicPolynomial operator+(SymbolicPolynomial a, const SymbolicPolynomial& b) { return a += b; }
  friend SymbolicPolynomial operator-(SymbolicPolynomial a, const SymbolicPolynomial& b) { return a -= b; }
  friend SymbolicPolynomial operator*(const SymbolicPolynomial& a, const SymbolicPolynomial& b);
  friend SymbolicPolynomial operator*(SymbolicPolynomial a, const Rational& c) { return a *= c; }
  friend SymbolicPolynomial operator/(SymbolicPolynomial a, const Rational& c) { return a /= c; }

  SymbolicPolynomial pow(unsigned n) const;
  SymbolicPolynomial mul_monomial(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  friend bool operator==(const SymbolicPolynomial&, const SymbolicPolynomial&) = default;

  std::string str() const;

 private:
  TermMap terms_;
};

/// Multivariate division by the lex leading term. Requires polynomial
/// (non-Laurent) inputs; returns {quotient, remainder}.
std::pair<SymbolicPolynomial, SymbolicPolynomial> divide(const SymbolicPolynomial& f,
                                                         const SymbolicPolynomial& g);

/// Inverse of a single-term polynomial.
SymbolicPolynomial monomial_inverse(const SymbolicPolynomial& m);

}  // namespace x0lab
