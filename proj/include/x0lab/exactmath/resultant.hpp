#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "x0lab/exactmath/upoly.hpp"

namespace x0lab {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline ZPoly exact_div(const ZPoly& a, const ZPoly& b) { return exact_quotient(a, b); }

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact
/// in an integral domain.
template <typename T>
T determinant_bareiss(Matrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  for (const auto& row : m)
    if (row.size() != n) throw MathError("determinant of a non-square matrix");
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == T(0)) {
      std::size_t i = k + 1;
      while (i < n && m[i][k] == T(0)) ++i;
      if (i == n) return T(0);
      std::swap(m[i], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(T(m[i][j] * m[k][k] - m[i][k] * m[k][j]), prev);
      m[i][k] = T(0);
    }
    prev = m[k][k];
  }
  return negate ? T(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// Sylvester matrix of f, g at formal degrees (df, dg); coefficient vectors
/// are constant term first and may be shorter than the formal degree.
template <typename T>
Matrix<T> sylvester_matrix(const std::vector<T>& f, int df, const std::vector<T>& g, int dg) {
  const int n = df + dg;
  Matrix<T> s(static_cast<std::size_t>(n), std::vector<T>(static_cast<std::size_t>(n), T(0)));
  auto coeff = [](const std::vector<T>& c, int i) { return i < static_cast<int>(c.size()) ? c[i] : T(0); };
  for (int r = 0; r < dg; ++r)
    for (int i = 0; i <= df; ++i) s[r][r + i] = coeff(f, df - i);
  for (int r = 0; r < df; ++r)
    for (int i = 0; i <= dg; ++i) s[dg + r][r + i] = coeff(g, dg - i);
  return s;
}

/// Res(f, g) as the Sylvester determinant.
template <typename T>
T resultant(const UPoly<T>& f, const UPoly<T>& g) {
  if (f.is_zero() || g.is_zero()) return T(0);
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0 && n == 0) throw MathError("resultant of two constants");
  if (m == 0) return f.pow(static_cast<unsigned>(n))[0];
  if (n == 0) return g.pow(static_cast<unsigned>(m))[0];
  return determinant_bareiss(sylvester_matrix(f.coeffs(), m, g.coeffs(), n));
}

/// Newton-form interpolation through (x_k, y_k) with distinct x_k.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Res_y(f, g) for f, g in Z[z][y] (outer variable y, coefficients in z),
/// by evaluating z at integer points, taking integer Sylvester determinants
/// at the formal y-degrees, and interpolating. The default degree bound is
/// deg_y(f) * deg_z(g) + deg_y(g) * deg_z(f); one extra point is checked.
ZPoly resultant_in_parameter(const UPoly<ZPoly>& f, const UPoly<ZPoly>& g,
                             std::optional<int> degree_bound = std::nullopt);
QPoly resultant_in_parameter(const UPoly<QPoly>& f, const UPoly<QPoly>& g,
                             std::optional<int> degree_bound = std::nullopt);

/// Same resultant computed directly with polynomial entries (slower; used
/// as an independent route).
ZPoly resultant_polynomial_entries(const UPoly<ZPoly>& f, const UPoly<ZPoly>& g);

}  // namespace x0lab
