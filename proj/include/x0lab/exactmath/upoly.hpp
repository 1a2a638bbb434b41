#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "x0lab/exactmath/rational.hpp"
#include "x0lab/exactmath/symbolic.hpp"

namespace x0lab {

/// Dense univariate polynomial, coefficients stored constant term first.
/// The zero polynomial has no coefficients and degree -1.
template <typename T>
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit UPoly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  UPoly(const T& constant) {  // NOLINT
    c_.push_back(constant);
    trim();
  }

  static UPoly monomial(const T& c, int k) {
    std::vector<T> v(static_cast<std::size_t>(k) + 1, T(0));
    v.back() = c;
    return UPoly(std::move(v));
  }

  /// Coefficients listed from the leading one down to the constant term.
  static UPoly from_highest_first(std::vector<T> c) {
    std::reverse(c.begin(), c.end());
    return UPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T operator[](int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
    return c_.back();
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == T(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const T& k) const {
    UPoly r = *this;
    for (auto& x : r.c_) x *= k;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly pow(unsigned n) const {
    UPoly r(T(1)), b = *this;
    while (n > 0) {
      if (n & 1U) r *= b;
      n >>= 1U;
      if (n > 0) b = b * b;
    }
    return r;
  }

  UPoly derivative() const {
    std::vector<T> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * T(static_cast<long>(i)));
    return UPoly(std::move(r));
  }

  template <typename S>
  S evaluate(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
    return acc;
  }

  /// f(g(x)).
  UPoly compose(const UPoly& g) const {
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + UPoly(*it);
    return acc;
  }

  /// Removes the factor x^k for the largest possible k; returns k.
  int strip_x_power() {
    int k = 0;
    while (k < static_cast<int>(c_.size()) && c_[k] == T(0)) ++k;
    c_.erase(c_.begin(), c_.begin() + k);
    return k;
  }

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using ZPoly = UPoly<Integer>;
using QPoly = UPoly<Rational>;

template <typename T>
std::string UPoly<T>::str(const std::string& var) const {
  if (c_.empty()) return "0";
  SymbolicPolynomial s;
  for (std::size_t i = 0; i < c_.size(); ++i)
    s.add_term(Monomial(var, static_cast<int>(i)), Rational(c_[i]));
  return s.str();
}

/// Division with remainder over a field.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd over Q; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);
QPoly make_monic(const QPoly& a);
bool is_squarefree(const QPoly& a);
/// Product of the distinct irreducible factors, monic.
QPoly squarefree_part(const QPoly& a);

QPoly to_q(const ZPoly& a);
/// Scales by the positive lcm of denominators and divides by the content.
ZPoly primitive_part(const QPoly& a);
ZPoly to_z(const QPoly& a);

/// Exact quotient in Z[x] (or any ring where the leading coefficient divides);
/// throws MathError if b does not divide a.
ZPoly exact_quotient(const ZPoly& a, const ZPoly& b);

/// Conversions between SymbolicPolynomial and univariate polynomials. The
/// input must involve only `var` (with nonnegative exponents).
QPoly to_qpoly(const SymbolicPolynomial& f, const std::string& var);
SymbolicPolynomial from_qpoly(const QPoly& f, const std::string& var);

/// Coefficients (in the other symbols) of powers of `var`.
UPoly<SymbolicPolynomial> to_poly_over(const SymbolicPolynomial& f, const std::string& var);

/// Bivariate: outer variable `outer`, coefficients univariate in `inner`.
UPoly<QPoly> to_bivariate(const SymbolicPolynomial& f, const std::string& outer, const std::string& inner);

/// f(y + z) as a polynomial in y with coefficients in Z[z].
UPoly<ZPoly> taylor_shift(const ZPoly& f);

}  // namespace x0lab
