#pragma once

#include <string>
#include <utility>
#include <vector>

#include "x0lab/exactmath/newton.hpp"
#include "x0lab/exactmath/symbolic.hpp"

namespace x0lab::sslab {

/// y^2 = x^3 + a x + b with a, b polynomials in t.
struct FamilyCurve {
  SymbolicPolynomial a = SymbolicPolynomial::symbol("t");
  SymbolicPolynomial b = SymbolicPolynomial(1);

  SymbolicPolynomial discriminant() const;  // -16(4a^3 + 27b^2)
};

/// psi_ell as a polynomial in x over Z[t]; only ell = 5 is supported.
SymbolicPolynomial division_polynomial(int ell, const FamilyCurve& curve = {});

/// Valuation envelopes (in lambda = v(t)) of the x^i coefficients of psi_5.
std::vector<Envelope> psi5_valuations();

/// Parametric Newton polygon of psi_5 over 0 < v(t) < 1.
ParamPolygon psi5_polygon();

using Multiset = std::vector<std::pair<Rational, long>>;

struct TorsionProfile {
  Rational lambda;
  Rational cell_lo;
  Rational cell_hi;
  std::vector<long> vertices;
  Multiset x_root_valuations;
  Multiset z_valuations;  // counted over points, two per x-root
  bool canonical_subgroup = false;
};

/// Throws MathError outside (0, 1) or at a breakpoint.
TorsionProfile torsion_profile(const Rational& lambda);

struct ThresholdCertificate {
  SymbolicPolynomial j_numerator;
  SymbolicPolynomial j_denominator;
  bool formula_matches = false;  // j = 6912 t^3 / (4t^3 + 27)
  bool denominator_unit = false;
  Rational breakpoint;
  Rational threshold;
  bool pass = false;
  std::string details;
};

ThresholdCertificate too_ss_threshold();

}  // namespace x0lab::sslab
