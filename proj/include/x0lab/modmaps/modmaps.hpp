#pragma once

#include <optional>
#include <string>
#include <vector>

#include "x0lab/exactmath/symbols.hpp"
#include "x0lab/exactmath/upoly.hpp"

namespace x0lab::modmaps {

/// target = numerator(source) / denominator(source), in lowest terms.
class RationalMap {
 public:
  RationalMap(std::string name, std::string source, std::string target, SymbolicPolynomial numerator,
              SymbolicPolynomial denominator);

  const std::string& name() const { return name_; }
  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }
  const SymbolicPolynomial& numerator() const { return num_; }
  const SymbolicPolynomial& denominator() const { return den_; }

  QPoly numerator_poly() const;
  QPoly denominator_poly() const;

  /// Throws MathError at a pole.
  Rational evaluate(const Rational& at) const;
  bool is_identity() const;

 private:
  std::string name_, source_, target_;
  SymbolicPolynomial num_, den_;
};

/// outer after inner; requires inner.target() == outer.source().
RationalMap compose(const RationalMap& outer, const RationalMap& inner);

/// pi1_j, pi5_j, w5_t, pi1_t, pi5_t, w25_u.
const std::vector<RationalMap>& builtin_maps();
const RationalMap& builtin_map(const std::string& name);

enum class RegionKind { circle, disk, annulus };

/// v(coordinate - center) = lo (circle), >= lo (disk), in (lo, hi) (annulus).
/// Symbols in a nonzero center are taken from `symbols`.
struct ValRegion {
  std::string coordinate;
  RegionKind kind = RegionKind::circle;
  Rational lo;
  Rational hi;
  SymbolicPolynomial center;
  SymbolTable symbols{5};

  static ValRegion circle(std::string coordinate, Rational lambda);
  static ValRegion disk(std::string coordinate, Rational lambda);
  static ValRegion annulus(std::string coordinate, Rational lo, Rational hi);
};

struct ImageCertificate {
  ExtValuation lower_bound;
  bool unique = false;
  std::vector<Monomial> numerator_witnesses;
  std::vector<Monomial> denominator_witnesses;
  std::string conclusion;  // "circle→circle exact" or "bound only (tie)"
};

/// Generic valuation of the target over the region.
ImageCertificate image_valuation(const RationalMap& map, const ValRegion& region);

/// For a map t -> c/t: the circle v(t) = v(c)/2 it fixes.
Rational al_fixed_circle(const RationalMap& map);

struct RamificationImage {
  ZPoly eliminant;            // from the roots of p_ram_y directly
  ZPoly radical;              // squarefree part of eliminant
  ZPoly conjugate_eliminant;  // via A + yB, (A + yB)(A - yB) and Res_x with p_ram_x
  ZPoly conjugate_radical;
  bool radical_divides_target = false;  // radical | t^2 - 125
  bool conjugate_divides_target = false;
  bool pass = false;
  std::string details;
};

/// Image under t = pi5_t(u), u = y/(2x), of the ten ramification points.
RamificationImage ramification_image_polynomial();

struct CmDiskCertificate {
  SymbolicPolynomial reduced;  // normal form of 5^5/r^5 - 5^3
  ExtValuation valuation;
  bool identity_holds = false;  // (j^2-125)(j^2+125) = j^4 - 5^6
  ExtValuation boundary;        // v(125)
  bool pass = false;
  std::string details;
};

CmDiskCertificate cm_disk_identities();

/// One step of a chain of images: a map applied to a region.
struct ChainStep {
  std::string map;
  std::string region;
  ImageCertificate image;
};

/// Chains for the two components over the too-supersingular disk, at
/// representative circles.
struct ComponentChain {
  std::string component;
  std::vector<ChainStep> steps;
  bool pass = false;
};

std::vector<ComponentChain> e_component_chains();

}  // namespace x0lab::modmaps
