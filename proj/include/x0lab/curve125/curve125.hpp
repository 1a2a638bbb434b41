#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "x0lab/exactmath/param.hpp"
#include "x0lab/exactmath/symbols.hpp"
#include "x0lab/exactmath/upoly.hpp"

namespace x0lab::curve125 {

struct PlusCurveModel {
  SymbolicPolynomial f_plus;  // in x, y
  SymbolicPolynomial fiber;   // x*u^2 - y*u + 5
};

PlusCurveModel plus_curve_model();

/// r with r^5 -> 25 - 25r, v5(r) = 2/5.
SymbolTable r_table();
QPoly r_minpoly();

using CellKey = std::pair<int, int>;  // (power of x0, power of y)

/// Published coefficients of g+(x0, y) = f+(x0 + r, y), as polynomials in r.
const std::map<CellKey, SymbolicPolynomial>& shifted_table();

struct ShiftedModel {
  SymbolicPolynomial g_plus;  // in x0, y, r (normal form)
  std::map<CellKey, SymbolicPolynomial> cells;
};

/// Recomputes g+ and compares every cell of the 6x5 grid with the table.
/// Returns one message per mismatching cell; empty means exact agreement.
std::vector<std::string> shifted_model_mismatches(const ShiftedModel& m);

/// Throws VerificationError on any mismatch.
ShiftedModel build_shifted_model();

using DistanceMultiset = std::vector<std::pair<Rational, long>>;

struct RamificationData {
  ZPoly p_ram_y;
  ZPoly p_ram_x;
  DistanceMultiset y_distances;
  DistanceMultiset x_distances;
};

/// p_ram_y = 20^5 f+(y^2/20, y); p_ram_x = Res_y(f+, y^2 - 20x).
/// Distances are filled only when requested (they cost two 20x20
/// resultants of degree 100).
RamificationData ramification_polynomials(bool with_distances = true);

/// Root-valuation multiset of D(z)/z^n, D(z) = Res_y(f(y), f(y+z)); counts
/// ordered pairs of distinct roots. Throws MathError if f is not squarefree.
DistanceMultiset pairwise_distance_valuations(const ZPoly& f, unsigned long p = 5);

/// Two-cluster structure of the ramification points and the resulting
/// distances in the annulus parameter s.
struct ClusterCertificate {
  std::vector<std::vector<int>> partitions;  // cluster sizes consistent with the y multiset
  Rational v_root_y;
  Rational v_close_y;
  Rational within_cluster_x;  // forced valuation of x_i - x_j inside a cluster
  long x_pairs_at_within = 0;
  long close_pairs = 0;
  Rational v_s;
  Rational close_s_distance;
  bool pass = false;
  std::string details;
};

ClusterCertificate cluster_certificate(const RamificationData& data);

struct ReductionCertificate {
  std::string claim_id;
  bool pass = false;
  std::vector<Monomial> dominant;
  ExtValuation minimum;
  SymbolicPolynomial zero_part;
  ExtValuation residual_min;
  SymbolicPolynomial quotient;
  std::string details;
};

/// Minimum at v(x0)=1/2, v(y)=3/4, v(r)=2/5 and the x0-polygon at v(y)=3/4.
ReductionCertificate verify_dominance(const ShiftedModel& m);

/// Valuation of each x0^i coefficient of g+ at v(y)=3/4 (generic minimum).
std::vector<ExtValuation> x0_coefficient_minima(const ShiftedModel& m);

/// "genus-two" (residue curve) or "integral" (valuation-zero rescaling). Throws MathError for an unknown id.
ReductionCertificate verify_reduction(const std::string& claim_id, const ShiftedModel& m);

/// For "genus-two": the reduced equation over F_5 as coefficients in [0,5).
std::map<Monomial, unsigned long> genus_two_residue(const ReductionCertificate& c);

struct HenselCertificate {
  Rational lo;
  Rational hi;
  SymbolicPolynomial h;  // in y, s, sqrt15, r
  Envelope h1;
  Envelope dh1;
  ExtValuation h1_lo, h1_hi, dh1_lo, dh1_hi;
  bool dh1_unique_lo = false;
  bool dh1_unique_hi = false;
  bool h1_positive_open = false;
  bool dh1_zero_open = false;
  bool h1_positive_closed = false;
  bool dh1_zero_closed = false;
  bool coefficients_integral = false;
  Rational delta_lambda;
  ExtValuation delta_bound;
  bool pass_open() const { return h1_positive_open && dh1_zero_open && coefficients_integral; }
  bool pass_closed() const { return h1_positive_closed && dh1_zero_closed && coefficients_integral; }
  std::string details;
};

/// h(y) = s^-10 g+(s^2, s^5 y / sqrt15) with lambda = v(s) on [1/5, 1/4].
HenselCertificate hensel_certificate(const ShiftedModel& m);

/// (2xu - y)^2 - (y^2 - 20x) = 4x (x u^2 - y u + 5).
ReductionCertificate fiber_square_identity();

}  // namespace x0lab::curve125
