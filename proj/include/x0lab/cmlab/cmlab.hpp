#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "x0lab/cmlab/bigfloat.hpp"
#include "x0lab/exactmath/upoly.hpp"
#include "x0lab/exactmath/valuation.hpp"

namespace x0lab::cmlab {

struct QuadForm {
  Integer a, b, c;
  Integer discriminant() const { return b * b - 4 * a * c; }
  bool is_reduced() const;
  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

/// All primitive reduced forms of discriminant D, sorted by (a, b).
/// Throws MathError unless D < 0 and D = 0, 1 mod 4.
std::vector<QuadForm> reduced_forms(long D);

/// (-b + sqrt(D)) / 2a.
BigComplex form_tau(const QuadForm& f, mpfr_prec_t bits);

/// j = E4^3 / Delta from q-series. Throws MathError for Im(tau) <= 0,
/// precision below 128 bits, or an impractical truncation length.
BigComplex j_tau(const BigComplex& tau, mpfr_prec_t bits);

/// Number of q-series terms used for the given |q| and precision.
long series_terms(const BigFloat& abs_q, mpfr_prec_t bits);

struct ClassPolynomial {
  long discriminant = 0;
  ZPoly poly;  // monic, constant term first
  std::vector<QuadForm> forms;
  long precision_used = 0;
  double max_rounding_error = 0;  // at precision_used
  double log2_max_residual = 0;   // log2 max |H(j_i)| at doubled precision
  bool from_cache = false;
};

struct ClassPolyOptions {
  long min_precision = 0;  // raise the starting precision
  std::optional<std::filesystem::path> cache_dir;
};

/// Starting precision: 256 + 10 h log2(1/|q_max|), at least the coefficient
/// size plus 64 bits.
long initial_precision(const std::vector<QuadForm>& forms);

/// prod (X - j(tau_f)) rounded to Z, confirmed at doubled precision.
/// Escalates precision by doubling at most three times, then throws
/// VerificationError.
ClassPolynomial class_polynomial(long D, const ClassPolyOptions& options = {});

/// Append-only text cache, one record per line:
/// "D h precision coeff_0 ... coeff_h". The last record for a D wins.
class ClassPolyCache {
 public:
  explicit ClassPolyCache(std::filesystem::path dir);
  std::optional<ClassPolynomial> lookup(long D) const;
  /// Rewrites through a temporary file and renames it into place.
  void store(const ClassPolynomial& h) const;
  std::filesystem::path file() const { return dir_ / "class_polynomials.txt"; }

 private:
  std::filesystem::path dir_;
};

/// Encodes v_p((j - center)^exponent + sign * m) > bound per root.
struct CongruenceSpec {
  long p = 5;
  long center = 0;
  int exponent = 2;
  int sign = -1;  // -1: case 1, +1: case 2
  Integer m;
  long bound = 3;
  std::string str() const;
};

/// Spec for p in {5, 7, 13}; the sign follows whether D/(-p) is a square
/// mod p. Throws MathError unless p exactly divides D.
CongruenceSpec congruence_spec(long p, long D);

struct CongruenceResult {
  bool pass = false;
  ExtValuation min_root_valuation;
  std::vector<std::pair<Rational, long>> root_valuations;
  ZPoly g;  // Res_j(H(j), w - ((j - c)^e + sign m)) in w
};

CongruenceResult congruence_check(const ZPoly& h, const CongruenceSpec& spec);

/// tau = real + imag * sqrt(-radicand).
struct Tau {
  Rational real;
  Rational imag;
  long radicand;
  BigComplex value(mpfr_prec_t bits) const;
};

struct TableRow {
  int congruence_case;  // 1: j^2 - 125, 2: j^2 + 125
  std::string order;   // e.g. "Z[sqrt(-5)]"
  long discriminant;
  std::vector<Tau> taus;
};

const std::vector<TableRow>& table_rows();

struct CrosscheckResult {
  long class_number = 0;
  bool length_matches = false;
  bool polynomial_matches = false;
  ZPoly from_taus;
  bool pass = false;
  std::string details;
};

CrosscheckResult table_crosscheck(const TableRow& row, const ClassPolyOptions& options = {});

}  // namespace x0lab::cmlab
