#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "x0lab/exactmath/rational.hpp"
#include "x0lab/exactmath/symbolic.hpp"

namespace x0lab::quatlab {

struct AlgebraParams {
  long p = 7;
  long alpha = 3;
};

/// Smallest quadratic non-residue mod p.
AlgebraParams default_params(long p);

/// a + b i + c e_j + d e_k with coordinates in [0, p).
struct AbarElement {
  long a = 0, b = 0, c = 0, d = 0;
  bool in_nilradical() const { return a == 0 && b == 0; }
  friend auto operator<=>(const AbarElement&, const AbarElement&) = default;
};

/// F_p-algebra with i^2 = alpha, e_j^2 = e_k^2 = e_j e_k = e_k e_j = 0 and
/// i e_j = e_k = -e_j i, stored as structure constants on 1, i, e_j, e_k.
class Abar {
 public:
  /// Throws MathError unless p is an odd prime and alpha a non-residue.
  explicit Abar(AlgebraParams params);

  const AlgebraParams& params() const { return params_; }
  long p() const { return params_.p; }
  /// table()[r][s] = coordinates of basis_r * basis_s.
  const std::array<std::array<std::array<long, 4>, 4>, 4>& table() const { return table_; }
  bool associative() const { return associative_; }

  AbarElement element(long a, long b, long c, long d) const;
  AbarElement basis(int r) const;
  AbarElement mul(const AbarElement& x, const AbarElement& y) const;
  AbarElement add(const AbarElement& x, const AbarElement& y) const;
  AbarElement neg(const AbarElement& x) const;
  bool is_unit(const AbarElement& x) const;
  /// Throws MathError for a non-unit.
  AbarElement inverse(const AbarElement& x) const;
  AbarElement conjugate(const AbarElement& u, const AbarElement& x) const;  // u x u^-1
  long mod(long v) const;
  std::string str(const AbarElement& x) const;

 private:
  AlgebraParams params_;
  std::array<std::array<std::array<long, 4>, 4>, 4> table_{};
  bool associative_ = false;
};

/// Two-sided ideal check for the nilradical, exhaustive over the algebra.
bool nilradical_is_ideal(const Abar& algebra);

struct Orbit {
  long size = 0;
  AbarElement representative;
  long invariant = 0;  // c^2 - alpha d^2
};

struct OrbitReport {
  AlgebraParams params;
  std::vector<Orbit> orbits;
  std::string stabilizer;
  bool stabilizers_scalar = false;
  bool orbit_sizes = false;
  bool orbit_count = false;
  bool invariant_separates = false;
  bool pass = false;
};

/// Conjugation action of the units a + b i on the nonzero nilradical.
/// Throws VerificationError when any of the four properties fails.
OrbitReport orbit_analysis(const AlgebraParams& params);

/// a + b i + c j + d k with i^2 = -1, j^2 = -7, ij = -ji = k.
template <typename T>
struct Quaternion {
  T a, b, c, d;

  static constexpr long kI2 = -1;
  static constexpr long kJ2 = -7;

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    const T A(kI2), B(kJ2);
    return {x.a * y.a + A * x.b * y.b + B * x.c * y.c - A * B * x.d * y.d,
            x.a * y.b + x.b * y.a - B * x.c * y.d + B * x.d * y.c,
            x.a * y.c + x.c * y.a + A * x.b * y.d - A * x.d * y.b,
            x.a * y.d + x.d * y.a + x.b * y.c - x.c * y.b};
  }
  T norm() const {
    const T A(kI2), B(kJ2);
    return a * a - A * b * b - B * c * c + A * B * d * d;
  }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

using QuatElement = Quaternion<Rational>;

struct UniformizerSearch {
  Quaternion<SymbolicPolynomial> square;  // (a + bi + cj + dk)^2
  bool a_forced_zero = false;
  bool b_divisible = false;
  SymbolicPolynomial reduced_condition;  // in c, d after b = 7 b'
  std::vector<AbarElement> solutions;    // in Abar_7 with alpha = 6
  bool matches_expected = false;
};

/// Images u -> c e_j + d e_k of quaternions squaring to -28.
/// Throws VerificationError when the set differs from the expected one.
UniformizerSearch uniformizer_image_search();

struct AutRefinement {
  std::vector<std::vector<AbarElement>> parts;  // sorted
  bool matches_expected = false;
};

/// Orbits of conjugation by i on the search result.
AutRefinement aut_refinement();

/// ((p + 1) / i, 2 (p + 1) / i) with i = aut_order / 2.
/// Throws MathError unless aut_order is 2, 4 or 6 and i divides p + 1.
std::pair<long, long> class_count(long p, long aut_order);

}  // namespace x0lab::quatlab
